// pg: command-line front end. Talks to the library only through pg/pg.h.

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <memory>
#include <string>

#include <CLI11.hpp>
#include <json.hpp>

#include "pg/pg.h"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitFailure = 1;  // verification failure or MISMATCH
constexpr int kExitUsage = 2;

struct CallError {
  pg_status status;
  std::string message;
};

void check(pg_status s) {
  if (s != PG_OK) throw CallError{s, pg_last_error()};
}

struct GroupDeleter {
  void operator()(pg_group* g) const { pg_group_free(g); }
};
struct GraphDeleter {
  void operator()(pg_graph* g) const { pg_graph_free(g); }
};
using GroupHandle = std::unique_ptr<pg_group, GroupDeleter>;
using GraphHandle = std::unique_ptr<pg_graph, GraphDeleter>;

std::string take(char* s) {
  std::string out(s);
  pg_free_string(s);
  return out;
}

bool looks_like_file(const std::string& target) {
  return target.ends_with(".json") || std::filesystem::is_regular_file(target);
}

GroupHandle open_group(const std::string& target) {
  pg_group* g = nullptr;
  check(looks_like_file(target) ? pg_group_load(target.c_str(), &g) : pg_group_from_spec(target.c_str(), &g));
  return GroupHandle(g);
}

GraphHandle reduced_graph(const pg_group* g) {
  pg_graph* out = nullptr;
  check(pg_graph_build(g, PG_VARIANT_REDUCED, &out));
  return GraphHandle(out);
}

int cmd_stats(const std::string& target, bool as_json) {
  auto g = open_group(target);
  char* raw = nullptr;
  check(pg_group_stats_json(g.get(), &raw));
  const std::string text = take(raw);
  if (as_json) {
    std::cout << text << '\n';
    return kExitOk;
  }
  const auto j = nlohmann::ordered_json::parse(text);
  auto show = [](const nlohmann::ordered_json& v) {
    if (v.is_null()) return std::string("-");
    if (v.is_string()) return v.get<std::string>();
    return v.dump();
  };
  std::cout << "group           " << show(j["group"]) << '\n'
            << "order           " << show(j["order"]) << '\n'
            << "exponent        " << show(j["exponent"]) << '\n'
            << "nilpotent       " << (j["nilpotent"].get<bool>() ? "yes" : "no") << '\n'
            << "p-group         " << (j["p_group"].is_null() ? "no" : "p = " + show(j["p_group"])) << '\n'
            << "Γ1 vertices     " << show(j["vertices"]) << '\n'
            << "Γ1 edges        " << show(j["edges"]) << '\n'
            << "components      " << show(j["components"]) << '\n'
            << "diameter        " << show(j["diameter"]) << '\n'
            << "clique formula  " << show(j["clique_formula"]) << '\n'
            << "clique exact    " << (j["clique_exact"].is_null() ? "(above solver cap)" : show(j["clique_exact"]))
            << '\n';
  return kExitOk;
}

int cmd_graph(const std::string& target, const std::string& variant, const std::string& format,
              const std::string& out_path) {
  auto g = open_group(target);
  pg_variant v = variant == "full" ? PG_VARIANT_FULL : variant == "directed" ? PG_VARIANT_DIRECTED : PG_VARIANT_REDUCED;
  pg_format f = format == "edgelist" ? PG_FORMAT_EDGELIST : format == "json" ? PG_FORMAT_JSON : PG_FORMAT_DOT;
  pg_graph* raw_graph = nullptr;
  check(pg_graph_build(g.get(), v, &raw_graph));
  GraphHandle graph(raw_graph);
  char* raw = nullptr;
  check(pg_graph_export(graph.get(), f, &raw));
  const std::string text = take(raw);
  if (out_path.empty()) {
    std::cout << text;
  } else {
    std::ofstream out(out_path, std::ios::binary);
    if (!out) throw CallError{PG_ERR_USAGE, "cannot open " + out_path + " for writing"};
    out << text;
  }
  return kExitOk;
}

int cmd_weight(std::uint64_t n, bool sets) {
  std::uint64_t w = 0;
  check(pg_weight(n, &w));
  if (!sets) {
    std::cout << w << '\n';
    return kExitOk;
  }
  char* raw = nullptr;
  check(pg_mcd_sets_json(n, &raw));
  const auto all = nlohmann::json::parse(take(raw));
  for (const auto& s : all) {
    std::string chain;
    for (const auto& d : s["chain"]) chain += (chain.empty() ? "{" : ",") + d.dump();
    std::cout << (chain.empty() ? "{" : chain) << "}  weight " << s["weight"].get<std::uint64_t>() << '\n';
  }
  std::cout << "weight(" << n << ") = " << w << '\n';
  return kExitOk;
}

int cmd_verify(const std::string& corpus, const std::string& claims, bool as_json, std::uint64_t max_order,
               unsigned workers, bool timings) {
  char* raw = nullptr;
  pg_summary summary{};
  check(pg_verify(corpus.c_str(), claims.c_str(), max_order, workers, timings, &raw, &summary));
  const std::string text = take(raw);
  if (as_json) {
    std::cout << text;
  } else {
    const auto report = nlohmann::json::parse(text);
    for (const auto& r : report["reports"]) {
      std::string status = r["status"].get<std::string>();
      for (auto& c : status) c = static_cast<char>(std::toupper(static_cast<unsigned char>(c)));
      std::cout << status << "  " << r["claim"].get<std::string>() << "  " << r["group"].get<std::string>();
      if (r.contains("reason")) std::cout << "  (" << r["reason"].get<std::string>() << ")";
      if (r["status"] == "fail" && r["witness"].is_string()) std::cout << "  " << r["witness"].get<std::string>();
      std::cout << '\n';
    }
    std::cout << "summary: " << summary.pass << " pass, " << summary.fail << " fail, " << summary.skipped
              << " skipped\n";
  }
  return summary.fail == 0 ? kExitOk : kExitFailure;
}

int cmd_components(const std::string& target) {
  auto g = open_group(target);
  auto graph = reduced_graph(g.get());
  std::uint64_t count = 0;
  check(pg_graph_component_count(graph.get(), &count));
  std::cout << count << '\n';
  return kExitOk;
}

int cmd_diameter(const std::string& target) {
  auto g = open_group(target);
  auto graph = reduced_graph(g.get());
  int connected = 0;
  std::uint64_t d = 0;
  check(pg_graph_diameter(graph.get(), &connected, &d));
  if (connected)
    std::cout << d << '\n';
  else
    std::cout << "disconnected\n";
  return kExitOk;
}

int cmd_clique(const std::string& target, const std::string& method) {
  auto g = open_group(target);
  std::uint64_t formula = 0, exact = 0;
  if (method != "exact") check(pg_group_clique_formula(g.get(), &formula));
  if (method != "formula") {
    auto graph = reduced_graph(g.get());
    check(pg_graph_clique_number(graph.get(), &exact));
  }
  if (method == "formula") {
    std::cout << formula << '\n';
  } else if (method == "exact") {
    std::cout << exact << '\n';
  } else {
    std::cout << "formula " << formula << "\nexact " << exact << '\n' << (formula == exact ? "MATCH" : "MISMATCH") << '\n';
    if (formula != exact) return kExitFailure;
  }
  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Power graphs of finite groups: construction, invariants and verification"};
  app.require_subcommand(1);

  std::string target, variant = "reduced", format = "dot", out_path, method = "both";
  std::string corpus = "default", claims = "all";
  bool as_json = false, sets = false, timings = false;
  std::uint64_t n = 0, max_order = 0;
  unsigned workers = 1;

  auto* stats = app.add_subcommand("stats", "Group and reduced power graph summary");
  stats->add_option("target", target, "Group spec (e.g. S3xZ6) or Cayley-table JSON file")->required();
  stats->add_flag("--json", as_json, "Emit JSON");

  auto* graph = app.add_subcommand("graph", "Export a power graph");
  graph->add_option("target", target, "Group spec or Cayley-table JSON file")->required();
  graph->add_option("--variant", variant, "reduced|full|directed")
      ->check(CLI::IsMember({"reduced", "full", "directed"}));
  graph->add_option("--format", format, "dot|edgelist|json")->check(CLI::IsMember({"dot", "edgelist", "json"}));
  graph->add_option("--out", out_path, "Output file (default: standard output)");

  auto* weight = app.add_subcommand("weight", "weight(n): largest phi-sum over maximal divisor chains");
  weight->add_option("n", n, "Positive integer")->required()->check(CLI::PositiveNumber);
  weight->add_flag("--sets", sets, "List every MCD-set with its weight");

  auto* verify = app.add_subcommand("verify", "Check every claim over a group corpus");
  verify->add_option("--corpus", corpus, "default, or comma-separated group specs");
  verify->add_option("--claims", claims, "all, or comma-separated claim ids");
  verify->add_flag("--json", as_json, "Emit the JSON report");
  verify->add_option("--max-order", max_order, "Leave out groups above this order");
  verify->add_option("--workers", workers, "Worker threads")->check(CLI::PositiveNumber);
  verify->add_flag("--timings", timings, "Record per-check wall time in \"ms\"");

  auto* components = app.add_subcommand("components", "Number of connected components of Γ1");
  components->add_option("target", target, "Group spec or Cayley-table JSON file")->required();

  auto* diam = app.add_subcommand("diameter", "Diameter of Γ1");
  diam->add_option("target", target, "Group spec or Cayley-table JSON file")->required();

  auto* clique = app.add_subcommand("clique", "Clique number of Γ1");
  clique->add_option("target", target, "Group spec or Cayley-table JSON file")->required();
  clique->add_option("--method", method, "formula|exact|both")->check(CLI::IsMember({"formula", "exact", "both"}));

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? kExitOk : kExitUsage;
  }

  try {
    if (*stats) return cmd_stats(target, as_json);
    if (*graph) return cmd_graph(target, variant, format, out_path);
    if (*weight) return cmd_weight(n, sets);
    if (*verify) return cmd_verify(corpus, claims, as_json, max_order, workers, timings);
    if (*components) return cmd_components(target);
    if (*diam) return cmd_diameter(target);
    if (*clique) return cmd_clique(target, method);
  } catch (const CallError& e) {
    std::cerr << "pg: " << e.message << '\n';
    return kExitUsage;
  }
  return kExitUsage;
}
