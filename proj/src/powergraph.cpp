#include "pg/powergraph.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <sstream>

#include <json.hpp>

#include "pg/divisor_weight.hpp"
#include "pg/error.hpp"

namespace pg {

std::string_view to_string(Variant v) {
  switch (v) {
    case Variant::Reduced: return "reduced";
    case Variant::Full: return "full";
    case Variant::Custom: return "custom";
    case Variant::Directed: return "directed";
  }
  return "?";
}

Variant parse_variant(std::string_view text) {
  for (auto v : {Variant::Reduced, Variant::Full, Variant::Custom, Variant::Directed})
    if (text == to_string(v)) return v;
  fail(ErrorKind::Usage, "unknown power graph variant '" + std::string(text) + "'");
}

std::optional<std::size_t> PowerGraph::position_of(Elem e) const {
  auto it = std::lower_bound(vertices.begin(), vertices.end(), e);
  if (it == vertices.end() || *it != e) return std::nullopt;
  return static_cast<std::size_t>(it - vertices.begin());
}

std::vector<Bitset> cyclic_membership(const Group& g) {
  const std::size_t n = g.order();
  std::vector<Bitset> mem(n, Bitset(n));
  for (Elem a = 0; a < n; ++a) {
    Elem x = 0;
    do {
      mem[a].set(x);
      x = g.mul(x, a);
    } while (x != 0);
  }
  return mem;
}

PowerGraph build_power_graph(const GroupPtr& g, Variant variant, std::span<const Elem> custom) {
  const std::size_t n = g->order();
  PowerGraph pg;
  pg.group = g;
  pg.variant = variant;
  switch (variant) {
    case Variant::Reduced:
      pg.vertices.resize(n - 1);
      std::iota(pg.vertices.begin(), pg.vertices.end(), Elem{1});
      break;
    case Variant::Full:
    case Variant::Directed:
      pg.vertices.resize(n);
      std::iota(pg.vertices.begin(), pg.vertices.end(), Elem{0});
      break;
    case Variant::Custom:
      for (auto e : custom)
        if (e >= n)
          fail(ErrorKind::Usage, "custom vertex " + std::to_string(e) + " out of range for " + g->name());
      pg.vertices.assign(custom.begin(), custom.end());
      std::sort(pg.vertices.begin(), pg.vertices.end());
      pg.vertices.erase(std::unique(pg.vertices.begin(), pg.vertices.end()), pg.vertices.end());
      break;
  }

  const auto mem = cyclic_membership(*g);
  const std::size_t m = pg.vertices.size();
  const bool directed = variant == Variant::Directed;
  pg.graph = Graph(m, directed);
  for (std::size_t u = 0; u < m; ++u) {
    const Elem x = pg.vertices[u];
    for (std::size_t v = directed ? 0 : u + 1; v < m; ++v) {
      if (u == v) continue;
      const Elem y = pg.vertices[v];
      if (directed ? mem[x].test(y) : (mem[x].test(y) || mem[y].test(x))) pg.graph.add_edge(u, v);
    }
  }
  return pg;
}

Bitset closed_neighborhood(const PowerGraph& pg, std::size_t v) {
  if (v >= pg.size()) fail(ErrorKind::Usage, "vertex position " + std::to_string(v) + " out of range");
  Bitset nb = pg.graph.row(v);
  if (pg.graph.directed())
    for (std::size_t u = 0; u < pg.size(); ++u)
      if (pg.graph.adjacent(u, v)) nb.set(u);
  nb.set(v);
  return nb;
}

// ---- linkage graph ----------------------------------------------------------

bool LinkageGraph::connected() const {
  if (nodes.size() <= 1) return true;
  std::vector<std::size_t> parent(nodes.size());
  std::iota(parent.begin(), parent.end(), std::size_t{0});
  auto find = [&](std::size_t x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  std::size_t sets = nodes.size();
  for (const auto& e : edges) {
    const auto ra = find(e.a), rb = find(e.b);
    if (ra != rb) {
      parent[std::max(ra, rb)] = std::min(ra, rb);
      --sets;
    }
  }
  return sets == 1;
}

LinkageGraph build_linkage_graph(const Group& g) {
  const std::size_t n = g.order();
  const auto orders = g.element_orders();

  // Node of each prime-order element, keyed by the subgroup's smallest generator.
  LinkageGraph lg;
  std::vector<std::size_t> node_of(n, static_cast<std::size_t>(-1));
  for (Elem a = 1; a < n; ++a) {
    if (!is_prime(orders[a]) || node_of[a] != static_cast<std::size_t>(-1)) continue;
    const std::size_t id = lg.nodes.size();
    lg.nodes.push_back({a, orders[a]});
    for (Elem x = a; x != 0; x = g.mul(x, a)) node_of[x] = id;
  }

  std::map<std::pair<std::size_t, std::size_t>, Elem> witness;
  for (Elem z = 1; z < n; ++z) {
    const auto f = factorize(orders[z]);
    // o(z) = p*q with p != q. When o(z) = p^2 the cyclic group <z> has a single
    // subgroup of order p, so it never links two distinct nodes.
    if (f.size() != 2 || f[0].exponent != 1 || f[1].exponent != 1) continue;
    const auto p = f[0].prime, q = f[1].prime;
    const std::size_t np = node_of[g.power(z, static_cast<std::int64_t>(q))];
    const std::size_t nq = node_of[g.power(z, static_cast<std::int64_t>(p))];
    witness.try_emplace({std::min(np, nq), std::max(np, nq)}, z);
  }
  for (const auto& [ab, z] : witness) lg.edges.push_back({ab.first, ab.second, z});
  return lg;
}

// ---- export -----------------------------------------------------------------

ExportFormat parse_export_format(std::string_view text) {
  if (text == "dot") return ExportFormat::Dot;
  if (text == "edgelist") return ExportFormat::Edgelist;
  if (text == "json") return ExportFormat::Json;
  fail(ErrorKind::Usage, "unknown export format '" + std::string(text) + "' (dot, edgelist, json)");
}

namespace {

std::string dot_escape(const std::string& s) {
  std::string out;
  for (char c : s) {
    if (c == '"' || c == '\\') out += '\\';
    out += c;
  }
  return out;
}

}  // namespace

std::string export_graph(const PowerGraph& pg, ExportFormat format) {
  const auto edges = pg.graph.edges();
  const Group& g = *pg.group;
  std::ostringstream out;
  switch (format) {
    case ExportFormat::Edgelist:
      out << "p " << pg.size() << ' ' << edges.size() << '\n';
      for (const auto& [u, v] : edges) out << u << ' ' << v << '\n';
      break;
    case ExportFormat::Dot: {
      const bool directed = pg.graph.directed();
      out << (directed ? "digraph" : "graph") << " G {\n";
      for (std::size_t i = 0; i < pg.size(); ++i) {
        const Elem e = pg.vertices[i];
        out << "  v" << i << " [label=\"" << dot_escape(g.label(e)) << " (o=" << g.element_order(e)
            << ")\"];\n";
      }
      for (const auto& [u, v] : edges) out << "  v" << u << (directed ? " -> " : " -- ") << 'v' << v << ";\n";
      out << "}\n";
      break;
    }
    case ExportFormat::Json: {
      nlohmann::ordered_json j;
      j["group"] = g.name();
      j["variant"] = to_string(pg.variant);
      auto verts = nlohmann::ordered_json::array();
      for (std::size_t i = 0; i < pg.size(); ++i) {
        const Elem e = pg.vertices[i];
        verts.push_back({{"id", i}, {"element", e}, {"label", g.label(e)}, {"order", g.element_order(e)}});
      }
      j["vertices"] = std::move(verts);
      auto es = nlohmann::ordered_json::array();
      for (const auto& [u, v] : edges) es.push_back({u, v});
      j["edges"] = std::move(es);
      out << j.dump() << '\n';
      break;
    }
  }
  return out.str();
}

}  // namespace pg
