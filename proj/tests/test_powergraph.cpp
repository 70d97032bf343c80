#include <numeric>
#include <string>

#include "doctest.h"
#include "json.hpp"
#include "oracles.hpp"
#include "pg/divisor_weight.hpp"
#include "pg/error.hpp"
#include "pg/graph_algo.hpp"
#include "pg/powergraph.hpp"

using namespace pg;

namespace {

GroupPtr G(const char* spec) { return build_group(parse_spec(spec)); }

std::vector<GroupPtr> groups_to_60() {
  std::vector<GroupPtr> out;
  for (const char* s : {"C1", "C2", "C4", "C6", "C12", "C30", "C16", "D3", "D4", "D6", "D10", "Dic3",
                        "Q8", "Q16", "Dic5", "S3", "S4", "A4", "A5", "E2^3", "E3^2", "S3xS3", "S3xC6",
                        "C2xC2", "D4xC3", "C3xQ8", "C2xC6", "S3xC5"})
    out.push_back(G(s));
  return out;
}

}  // namespace

TEST_CASE("reduced power graph of C4") {
  auto pg = build_power_graph(G("C4"), Variant::Reduced);
  CHECK(pg.size() == 3);
  CHECK(export_graph(pg, ExportFormat::Edgelist) == "p 3 3\n0 1\n0 2\n1 2\n");
}

TEST_CASE("C12 counts") {
  auto pg = build_power_graph(G("C12"), Variant::Reduced);
  CHECK(pg.size() == 11);
  CHECK(pg.graph.edge_count() == 45);
  CHECK(build_power_graph(G("C12"), Variant::Full).graph.edge_count() == 45 + 11);
}

TEST_CASE("adjacency agrees with power walking") {
  for (const auto& g : groups_to_60()) {
    const auto full = build_power_graph(g, Variant::Full);
    const auto reduced = build_power_graph(g, Variant::Reduced);
    const auto directed = build_power_graph(g, Variant::Directed);
    REQUIRE(full.size() == g->order());
    REQUIRE(reduced.size() == g->order() - 1);
    REQUIRE(directed.size() == g->order());
    for (Elem x = 0; x < g->order(); ++x)
      for (Elem y = 0; y < g->order(); ++y) {
        if (x == y) continue;
        const bool arc = oracle::is_power_of(*g, x, y);
        const bool edge = arc || oracle::is_power_of(*g, y, x);
        CHECK(directed.graph.adjacent(x, y) == arc);
        CHECK(full.graph.adjacent(x, y) == edge);
        if (x && y) CHECK(reduced.graph.adjacent(*reduced.position_of(x), *reduced.position_of(y)) == edge);
      }
    CHECK_FALSE(reduced.position_of(0).has_value());
  }
}

TEST_CASE("custom vertex sets") {
  auto g = G("C6");
  const std::vector<Elem> s = {3, 1, 1, 2};
  auto pg = build_power_graph(g, Variant::Custom, s);
  CHECK(pg.vertices == std::vector<Elem>{1, 2, 3});
  CHECK(pg.graph.adjacent(0, 1));   // a, a^2
  CHECK(pg.graph.adjacent(0, 2));   // a, a^3
  CHECK_FALSE(pg.graph.adjacent(1, 2));
  const std::vector<Elem> bad = {6};
  CHECK_THROWS_AS(build_power_graph(g, Variant::Custom, bad), Error);
}

TEST_CASE("closed neighbourhoods depend only on the cyclic subgroup") {
  for (const auto& g : groups_to_60()) {
    const auto pg = build_power_graph(g, Variant::Full);
    for (Elem a = 0; a < g->order(); ++a) {
      const auto o = g->element_order(a);
      for (std::uint64_t i = 1; i < o; ++i)
        if (std::gcd(i, o) == 1) CHECK(closed_neighborhood(pg, a) == closed_neighborhood(pg, g->power(a, i)));
    }
  }
}

TEST_CASE("linkage graph") {
  auto s3 = build_linkage_graph(*G("S3"));
  CHECK(s3.nodes.size() == 4);
  CHECK(s3.edges.empty());
  CHECK_FALSE(s3.connected());

  auto c6 = build_linkage_graph(*G("C6"));
  REQUIRE(c6.nodes.size() == 2);
  REQUIRE(c6.edges.size() == 1);
  CHECK(G("C6")->element_order(c6.edges[0].witness) == 6);
  CHECK(c6.connected());

  CHECK(build_linkage_graph(*G("C1")).connected());
  CHECK(build_linkage_graph(*G("C8")).connected());
  CHECK_FALSE(build_linkage_graph(*G("C2xC2")).connected());

  for (const auto& g : groups_to_60()) {
    const auto lg = build_linkage_graph(*g);
    std::size_t expect_nodes = 0;
    for (Elem x = 1; x < g->order(); ++x) expect_nodes += is_prime(g->element_order(x));
    // each order-p subgroup has p - 1 generators
    std::size_t nodes_by_prime = 0;
    for (const auto& n : lg.nodes) nodes_by_prime += n.prime - 1;
    CHECK(nodes_by_prime == expect_nodes);
    for (const auto& e : lg.edges) {
      CHECK(e.a < e.b);
      const auto& A = lg.nodes[e.a];
      const auto& B = lg.nodes[e.b];
      CHECK(A.prime != B.prime);
      CHECK(g->element_order(e.witness) == A.prime * B.prime);
      CHECK(oracle::is_power_of(*g, e.witness, A.generator));
      CHECK(oracle::is_power_of(*g, e.witness, B.generator));
    }
    const auto d = oracle::floyd_warshall(build_power_graph(g, Variant::Reduced).graph);
    bool connected = true;
    for (const auto& row : d)
      for (auto x : row) connected = connected && x != oracle::kInf;
    CHECK_MESSAGE(lg.connected() == connected, g->name());
  }
}

TEST_CASE("dot export") {
  auto pg = build_power_graph(G("C3"), Variant::Reduced);
  CHECK(export_graph(pg, ExportFormat::Dot) ==
        "graph G {\n  v0 [label=\"a (o=3)\"];\n  v1 [label=\"a^2 (o=3)\"];\n  v0 -- v1;\n}\n");
  auto dg = build_power_graph(G("C2"), Variant::Directed);
  CHECK(export_graph(dg, ExportFormat::Dot) ==
        "digraph G {\n  v0 [label=\"1 (o=1)\"];\n  v1 [label=\"a (o=2)\"];\n  v1 -> v0;\n}\n");
}

TEST_CASE("json export") {
  auto pg = build_power_graph(G("S3"), Variant::Reduced);
  const auto j = nlohmann::json::parse(export_graph(pg, ExportFormat::Json));
  CHECK(j["group"] == "S3");
  CHECK(j["variant"] == "reduced");
  CHECK(j["vertices"].size() == 5);
  CHECK(j["edges"].size() == 1);
  CHECK(j["vertices"][0]["id"] == 0);
  CHECK(j["vertices"][0]["element"] == 1);
}

TEST_CASE("names") {
  CHECK(parse_variant("full") == Variant::Full);
  CHECK(parse_variant("directed") == Variant::Directed);
  CHECK(to_string(Variant::Reduced) == "reduced");
  CHECK_THROWS_AS(parse_variant("weird"), Error);
  CHECK(parse_export_format("edgelist") == ExportFormat::Edgelist);
  CHECK_THROWS_AS(parse_export_format("svg"), Error);
}
