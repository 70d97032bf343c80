#include "pg/pg.h"

#include <algorithm>
#include <atomic>
#include <cstdlib>
#include <cstring>
#include <string>

#include <json.hpp>

#include "pg/claims.hpp"
#include "pg/divisor_weight.hpp"
#include "pg/error.hpp"
#include "pg/graph_algo.hpp"
#include "pg/group.hpp"
#include "pg/powergraph.hpp"

struct pg_group {
  pg::GroupPtr group;
};

struct pg_graph {
  pg::PowerGraph graph;
};

namespace {

thread_local std::string g_last_error;

std::uint64_t initial_max_order() {
  if (const char* env = std::getenv("PG_MAX_ORDER")) {
    char* end = nullptr;
    const auto v = std::strtoull(env, &end, 10);
    if (end != env && *end == '\0' && v > 0) return v;
  }
  return pg::Limits{}.max_order;
}

std::atomic<std::uint64_t>& max_order() {
  static std::atomic<std::uint64_t> value{initial_max_order()};
  return value;
}

pg::Limits limits() {
  pg::Limits l;
  l.max_order = max_order().load();
  return l;
}

pg_status status_of(pg::ErrorKind kind) {
  switch (kind) {
    case pg::ErrorKind::Usage: return PG_ERR_USAGE;
    case pg::ErrorKind::Validation: return PG_ERR_VALIDATION;
    case pg::ErrorKind::Resource: return PG_ERR_RESOURCE;
    case pg::ErrorKind::Domain: return PG_ERR_DOMAIN;
  }
  return PG_ERR_INTERNAL;
}

template <class F>
pg_status guarded(F&& f) {
  g_last_error.clear();
  try {
    f();
    return PG_OK;
  } catch (const pg::Error& e) {
    g_last_error = e.what();
    return status_of(e.kind());
  } catch (const std::exception& e) {
    g_last_error = e.what();
    return PG_ERR_INTERNAL;
  } catch (...) {
    g_last_error = "unknown error";
    return PG_ERR_INTERNAL;
  }
}

void require(const void* p, const char* what) {
  if (!p) pg::fail(pg::ErrorKind::Usage, std::string(what) + " must not be null");
}

char* dup_string(const std::string& s) {
  char* out = static_cast<char*>(std::malloc(s.size() + 1));
  if (!out) throw std::bad_alloc();
  std::memcpy(out, s.c_str(), s.size() + 1);
  return out;
}

std::uint64_t clique_formula(const pg::Group& g) {
  std::uint64_t best = 0;
  for (auto o : g.element_orders()) best = std::max(best, pg::weight(o));
  return best;
}

}  // namespace

extern "C" {

const char* pg_version(void) { return "1.0.0"; }
const char* pg_last_error(void) { return g_last_error.c_str(); }
void pg_free_string(char* s) { std::free(s); }

pg_status pg_set_max_order(uint64_t value) {
  return guarded([&] {
    if (value == 0) pg::fail(pg::ErrorKind::Usage, "max order must be positive");
    max_order().store(value);
  });
}

uint64_t pg_get_max_order(void) { return max_order().load(); }

pg_status pg_group_from_spec(const char* spec, pg_group** out) {
  return guarded([&] {
    require(spec, "spec");
    require(out, "out");
    *out = new pg_group{pg::build_group(pg::parse_spec(spec), limits())};
  });
}

pg_status pg_group_load(const char* path, pg_group** out) {
  return guarded([&] {
    require(path, "path");
    require(out, "out");
    *out = new pg_group{std::make_shared<const pg::Group>(pg::load_group(path, limits()))};
  });
}

pg_status pg_group_save(const pg_group* g, const char* path) {
  return guarded([&] {
    require(g, "group");
    require(path, "path");
    pg::save_group(*g->group, path);
  });
}

void pg_group_free(pg_group* g) { delete g; }

pg_status pg_group_name(const pg_group* g, char** out) {
  return guarded([&] {
    require(g, "group");
    require(out, "out");
    *out = dup_string(g->group->name());
  });
}

pg_status pg_group_order(const pg_group* g, uint64_t* out) {
  return guarded([&] {
    require(g, "group");
    require(out, "out");
    *out = g->group->order();
  });
}

pg_status pg_group_multiply(const pg_group* g, uint32_t a, uint32_t b, uint32_t* out) {
  return guarded([&] {
    require(g, "group");
    require(out, "out");
    *out = g->group->multiply(a, b);
  });
}

pg_status pg_group_element_order(const pg_group* g, uint32_t a, uint64_t* out) {
  return guarded([&] {
    require(g, "group");
    require(out, "out");
    *out = g->group->element_order(a);
  });
}

pg_status pg_group_exponent(const pg_group* g, uint64_t* out) {
  return guarded([&] {
    require(g, "group");
    require(out, "out");
    *out = pg::exponent(*g->group);
  });
}

pg_status pg_group_p_group_prime(const pg_group* g, uint64_t* out) {
  return guarded([&] {
    require(g, "group");
    require(out, "out");
    *out = pg::is_p_group(*g->group).value_or(0);
  });
}

pg_status pg_group_is_nilpotent(const pg_group* g, int* out) {
  return guarded([&] {
    require(g, "group");
    require(out, "out");
    *out = pg::is_nilpotent(*g->group);
  });
}

pg_status pg_group_is_cyclic(const pg_group* g, int* out) {
  return guarded([&] {
    require(g, "group");
    require(out, "out");
    *out = pg::is_cyclic(*g->group);
  });
}

pg_status pg_group_is_generalized_quaternion(const pg_group* g, int* out) {
  return guarded([&] {
    require(g, "group");
    require(out, "out");
    *out = pg::is_generalized_quaternion(*g->group);
  });
}

pg_status pg_group_clique_formula(const pg_group* g, uint64_t* out) {
  return guarded([&] {
    require(g, "group");
    require(out, "out");
    *out = clique_formula(*g->group);
  });
}

pg_status pg_group_stats_json(const pg_group* g, char** out) {
  return guarded([&] {
    require(g, "group");
    require(out, "out");
    const pg::Group& grp = *g->group;
    const auto reduced = pg::build_power_graph(g->group, pg::Variant::Reduced);
    const auto comps = pg::connected_components(reduced.graph);
    const auto diam = pg::diameter(reduced.graph);

    nlohmann::ordered_json j;
    j["group"] = grp.name();
    j["order"] = grp.order();
    j["exponent"] = pg::exponent(grp);
    j["nilpotent"] = pg::is_nilpotent(grp);
    const auto p = pg::is_p_group(grp);
    j["p_group"] = p ? nlohmann::ordered_json(*p) : nlohmann::ordered_json(nullptr);
    j["vertices"] = reduced.size();
    j["edges"] = reduced.graph.edge_count();
    j["components"] = comps.count;
    j["diameter"] = diam.is_finite() ? nlohmann::ordered_json(diam.value) : nlohmann::ordered_json("disconnected");
    j["clique_formula"] = clique_formula(grp);
    try {
      j["clique_exact"] = pg::clique_number_exact(reduced.graph);
    } catch (const pg::Error& e) {
      if (e.kind() != pg::ErrorKind::Resource) throw;
      j["clique_exact"] = nullptr;
    }
    *out = dup_string(j.dump());
  });
}

pg_status pg_graph_build(const pg_group* g, pg_variant variant, pg_graph** out) {
  return guarded([&] {
    require(g, "group");
    require(out, "out");
    pg::Variant v;
    switch (variant) {
      case PG_VARIANT_REDUCED: v = pg::Variant::Reduced; break;
      case PG_VARIANT_FULL: v = pg::Variant::Full; break;
      case PG_VARIANT_DIRECTED: v = pg::Variant::Directed; break;
      default: pg::fail(pg::ErrorKind::Usage, "unknown variant");
    }
    *out = new pg_graph{pg::build_power_graph(g->group, v)};
  });
}

pg_status pg_graph_build_custom(const pg_group* g, const uint32_t* elements, size_t count, pg_graph** out) {
  return guarded([&] {
    require(g, "group");
    require(out, "out");
    if (count) require(elements, "elements");
    *out = new pg_graph{pg::build_power_graph(g->group, pg::Variant::Custom,
                                              std::span<const pg::Elem>(elements, count))};
  });
}

void pg_graph_free(pg_graph* graph) { delete graph; }

pg_status pg_graph_vertex_count(const pg_graph* graph, uint64_t* out) {
  return guarded([&] {
    require(graph, "graph");
    require(out, "out");
    *out = graph->graph.size();
  });
}

pg_status pg_graph_edge_count(const pg_graph* graph, uint64_t* out) {
  return guarded([&] {
    require(graph, "graph");
    require(out, "out");
    *out = graph->graph.graph.edge_count();
  });
}

pg_status pg_graph_export(const pg_graph* graph, pg_format format, char** out) {
  return guarded([&] {
    require(graph, "graph");
    require(out, "out");
    pg::ExportFormat f;
    switch (format) {
      case PG_FORMAT_DOT: f = pg::ExportFormat::Dot; break;
      case PG_FORMAT_EDGELIST: f = pg::ExportFormat::Edgelist; break;
      case PG_FORMAT_JSON: f = pg::ExportFormat::Json; break;
      default: pg::fail(pg::ErrorKind::Usage, "unknown export format");
    }
    *out = dup_string(pg::export_graph(graph->graph, f));
  });
}

pg_status pg_graph_component_count(const pg_graph* graph, uint64_t* out) {
  return guarded([&] {
    require(graph, "graph");
    require(out, "out");
    *out = pg::connected_components(graph->graph.graph).count;
  });
}

pg_status pg_graph_diameter(const pg_graph* graph, int* connected, uint64_t* diameter) {
  return guarded([&] {
    require(graph, "graph");
    require(connected, "connected");
    require(diameter, "diameter");
    const auto d = pg::diameter(graph->graph.graph);
    *connected = d.is_finite();
    if (d.is_finite()) *diameter = d.value;
  });
}

pg_status pg_graph_clique_number(const pg_graph* graph, uint64_t* out) {
  return guarded([&] {
    require(graph, "graph");
    require(out, "out");
    *out = pg::clique_number_exact(graph->graph.graph);
  });
}

pg_status pg_euler_phi(uint64_t n, uint64_t* out) {
  return guarded([&] {
    require(out, "out");
    *out = pg::euler_phi(n);
  });
}

pg_status pg_weight(uint64_t n, uint64_t* out) {
  return guarded([&] {
    require(out, "out");
    *out = pg::weight(n);
  });
}

pg_status pg_mcd_sets_json(uint64_t n, char** out) {
  return guarded([&] {
    require(out, "out");
    auto sets = pg::enumerate_mcd_sets(n);
    std::stable_sort(sets.begin(), sets.end(), [](const pg::MCDSet& a, const pg::MCDSet& b) {
      return a.weight != b.weight ? a.weight < b.weight : a.chain < b.chain;
    });
    nlohmann::ordered_json j = nlohmann::ordered_json::array();
    for (const auto& s : sets) j.push_back({{"chain", s.chain}, {"weight", s.weight}});
    *out = dup_string(j.dump());
  });
}

pg_status pg_verify(const char* corpus, const char* claims, uint64_t max_order_filter, unsigned workers,
                    int timings, char** report_json, pg_summary* summary) {
  return guarded([&] {
    pg::Corpus c = corpus ? pg::parse_corpus(corpus) : pg::default_corpus();
    c.max_order = max_order_filter ? max_order_filter : static_cast<std::size_t>(-1);
    const auto ids = pg::parse_claim_list(claims ? claims : "all");
    const auto run = pg::run_corpus(c, ids, {}, limits(), workers);
    if (report_json) *report_json = dup_string(pg::report_json(run, timings != 0));
    if (summary) *summary = {run.summary.pass, run.summary.fail, run.summary.skipped};
  });
}

}  // extern "C"
