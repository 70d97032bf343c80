#include "pg/claims.hpp"

#include <algorithm>
#include <atomic>
#include <mutex>
#include <numeric>
#include <sstream>
#include <thread>

#include <json.hpp>

#include "pg/divisor_weight.hpp"
#include "pg/error.hpp"
#include "pg/graph_algo.hpp"
#include "pg/powergraph.hpp"

namespace pg {

namespace {

constexpr std::array<std::string_view, kAllClaims.size()> kNames = {
    "OBS-NBHD",     "OBS-COMPLETE", "LEM-LINKAGE",   "OBS-UNIQUE-P", "COR-PGRP-CONN", "COR-COMPONENTS",
    "PROP-COPRIME", "PROP-NPP",     "THM-NILP-CONN", "DIAM-1",       "DIAM-2",        "DIAM-4",
    "EX-QN-3",      "LEM-MCD",      "LEM-CLIQUE-CYC", "THM-CLIQUE",  "COR-CLIQUE-NILP",
};

}  // namespace

std::string_view claim_name(ClaimId id) { return kNames[static_cast<std::size_t>(id)]; }

std::optional<ClaimId> parse_claim(std::string_view name) {
  for (auto id : kAllClaims)
    if (claim_name(id) == name) return id;
  return std::nullopt;
}

std::vector<ClaimId> parse_claim_list(std::string_view text) {
  if (text == "all") return {kAllClaims.begin(), kAllClaims.end()};
  std::vector<ClaimId> out;
  std::size_t start = 0;
  while (start <= text.size()) {
    const auto end = std::min(text.find(',', start), text.size());
    const auto name = text.substr(start, end - start);
    const auto id = parse_claim(name);
    if (!id) fail(ErrorKind::Usage, "unknown claim '" + std::string(name) + "'");
    if (std::find(out.begin(), out.end(), *id) == out.end()) out.push_back(*id);
    start = end + 1;
  }
  // Reports follow the canonical claim order regardless of how they were listed.
  std::sort(out.begin(), out.end());
  return out;
}

std::string_view to_string(Status s) {
  switch (s) {
    case Status::Pass: return "pass";
    case Status::Fail: return "fail";
    case Status::Skipped: return "skipped";
  }
  return "?";
}

namespace {

std::string yn(bool b) { return b ? "true" : "false"; }

std::string diam_text(const DiameterResult& d) {
  return d.is_finite() ? std::to_string(d.value) : std::string("disconnected");
}

// Derived objects of one group, computed on first use.
class GroupFacts {
 public:
  GroupFacts(GroupPtr g, const VerifyOptions& opts) : g_(std::move(g)), opts_(opts) {}

  const Group& group() const { return *g_; }
  const VerifyOptions& opts() const { return opts_; }

  const PowerGraph& reduced() { return lazy(reduced_, [&] { return build_power_graph(g_, Variant::Reduced); }); }
  const PowerGraph& full() { return lazy(full_, [&] { return build_power_graph(g_, Variant::Full); }); }
  const std::vector<Bitset>& membership() { return lazy(mem_, [&] { return cyclic_membership(*g_); }); }
  const ComponentPartition& components() {
    return lazy(comps_, [&] { return connected_components(reduced().graph); });
  }
  bool connected() { return reduced().size() <= 1 || components().count == 1; }
  const DiameterResult& diam() { return lazy(diam_, [&] { return diameter(reduced().graph); }); }
  bool nilpotent() { return lazy(nilpotent_, [&] { return is_nilpotent(*g_); }); }
  bool cyclic() { return lazy(cyclic_, [&] { return is_cyclic(*g_); }); }
  bool gen_quaternion() { return lazy(gq_, [&] { return is_generalized_quaternion(*g_); }); }
  std::optional<std::uint64_t> p_group() {
    return lazy(pgroup_, [&] { return is_p_group(*g_); });
  }
  std::size_t clique_reduced() {
    return lazy(omega1_, [&] { return clique_number_exact(reduced().graph, opts_.clique_vertex_cap); });
  }

  // Two vertices in different components, for disconnection witnesses.
  std::string split_pair() {
    const auto& c = components();
    const auto& pg = reduced();
    for (std::size_t v = 1; v < pg.size(); ++v)
      if (c.component_id[v] != c.component_id[0])
        return g_->label(pg.vertices[0]) + " and " + g_->label(pg.vertices[v]) + " lie in different components";
    return "graph is connected";
  }

 private:
  template <class T, class F>
  const T& lazy(std::optional<T>& slot, F&& make) {
    if (!slot) slot.emplace(make());
    return *slot;
  }

  GroupPtr g_;
  VerifyOptions opts_;
  std::optional<PowerGraph> reduced_, full_;
  std::optional<std::vector<Bitset>> mem_;
  std::optional<ComponentPartition> comps_;
  std::optional<DiameterResult> diam_;
  std::optional<bool> nilpotent_, cyclic_, gq_;
  std::optional<std::optional<std::uint64_t>> pgroup_;
  std::optional<std::size_t> omega1_;
};

struct Outcome {
  Status status;
  std::string text;  // witness, or the skip reason
};

Outcome pass(std::string note = {}) { return {Status::Pass, std::move(note)}; }
Outcome failed(std::string witness) { return {Status::Fail, std::move(witness)}; }
Outcome skip(std::string reason) { return {Status::Skipped, std::move(reason)}; }

Outcome iff(bool lhs, bool rhs, const std::string& lhs_name, const std::string& rhs_name,
            const std::string& extra = {}) {
  if (lhs == rhs) return pass(lhs_name + " = " + rhs_name + " = " + yn(lhs));
  return failed(lhs_name + " is " + yn(lhs) + " but " + rhs_name + " is " + yn(rhs) +
                (extra.empty() ? "" : "; " + extra));
}

bool structural_hypothesis(GroupFacts& f, bool holds) { return holds || f.opts().ignore_hypotheses; }

// ---- individual checks ------------------------------------------------------

Outcome check_obs_nbhd(GroupFacts& f) {
  const auto& g = f.group();
  const auto& pg = f.reduced();
  for (std::size_t v = 0; v < pg.size(); ++v) {
    const Elem a = pg.vertices[v];
    const auto o = g.element_order(a);
    const auto na = closed_neighborhood(pg, v);
    for (std::uint64_t i = 2; i < o; ++i) {
      if (std::gcd(i, o) != 1) continue;
      const Elem ai = g.power(a, static_cast<std::int64_t>(i));
      if (closed_neighborhood(pg, *pg.position_of(ai)) != na)
        return failed("N[" + g.label(a) + "] != N[" + g.label(ai) + "] with a = " + g.label(a) +
                      " (id " + std::to_string(a) + "), i = " + std::to_string(i));
    }
  }
  return pass();
}

Outcome check_obs_complete(GroupFacts& f) {
  if (f.group().order() < 2) return skip("trivial group");
  const bool complete = is_complete(f.full().graph);
  const bool cyclic_pp = f.cyclic() && f.p_group().has_value();
  std::string extra;
  if (!complete) {
    const auto& pg = f.full();
    for (std::size_t u = 0; u < pg.size() && extra.empty(); ++u)
      for (std::size_t v = u + 1; v < pg.size(); ++v)
        if (!pg.graph.adjacent(u, v)) {
          extra = "non-adjacent pair " + f.group().label(pg.vertices[u]) + ", " + f.group().label(pg.vertices[v]);
          break;
        }
  }
  return iff(complete, cyclic_pp, "complete(Γ(G))", "cyclic p-group", extra);
}

Outcome check_lem_linkage(GroupFacts& f) {
  const auto lg = build_linkage_graph(f.group());
  const bool linked = lg.connected();
  return iff(f.connected(), linked, "connected(Γ1)", "connected(linkage)",
             std::to_string(lg.nodes.size()) + " linkage nodes, " + std::to_string(lg.edges.size()) +
                 " edges; " + f.split_pair());
}

std::optional<Outcome> need_p_group(GroupFacts& f) {
  if (!f.p_group()) return skip("not a p-group");
  return std::nullopt;
}

Outcome check_obs_unique_p(GroupFacts& f) {
  if (auto s = need_p_group(f)) return *s;
  const auto count = count_order_p_subgroups(f.group(), *f.p_group());
  return iff(count == 1, f.cyclic() || f.gen_quaternion(), "unique order-p subgroup",
             "cyclic or generalized quaternion", std::to_string(count) + " subgroups of order p");
}

Outcome check_cor_pgrp_conn(GroupFacts& f) {
  if (auto s = need_p_group(f)) return *s;
  return iff(f.connected(), f.cyclic() || f.gen_quaternion(), "connected(Γ1)",
             "cyclic or generalized quaternion", f.split_pair());
}

Outcome check_cor_components(GroupFacts& f) {
  if (auto s = need_p_group(f)) return *s;
  const auto comps = f.components().count;
  const auto subs = count_order_p_subgroups(f.group(), *f.p_group());
  if (comps == subs) return pass(std::to_string(comps) + " = " + std::to_string(subs));
  return failed(std::to_string(comps) + " components but " + std::to_string(subs) + " subgroups of order " +
                std::to_string(*f.p_group()));
}

Outcome check_prop_coprime(GroupFacts& f) {
  const auto& prov = f.group().provenance();
  if (!prov.left || !prov.right) return skip("not a direct product");
  const auto a = prov.left->order(), b = prov.right->order();
  if (a < 2 || b < 2) return skip("a factor is trivial");
  if (std::gcd(a, b) != 1) return skip("factor orders not coprime");
  if (f.connected()) return pass();
  return failed("factors " + prov.left->name() + ", " + prov.right->name() + " have coprime orders but " +
                f.split_pair());
}

Outcome check_prop_npp(GroupFacts& f) {
  const auto& prov = f.group().provenance();
  if (!prov.left || !prov.right) return skip("not a direct product");
  std::string base;
  for (const auto& side : {prov.left, prov.right}) {
    if (side->order() < 2 || is_prime_power(side->order())) continue;
    if (!is_connected(build_power_graph(side, Variant::Reduced).graph)) continue;
    base = side->name();
    break;
  }
  if (base.empty()) return skip("no factor has connected Γ1 and non-prime-power order");
  if (f.connected()) return pass("via factor " + base);
  return failed("Γ1(" + base + ") is connected, yet " + f.split_pair());
}

Outcome check_thm_nilp_conn(GroupFacts& f) {
  if (!structural_hypothesis(f, f.nilpotent())) return skip("not nilpotent");
  return iff(f.connected(), f.cyclic() || f.gen_quaternion() || !f.p_group(), "connected(Γ1)",
             "cyclic or generalized quaternion or not a p-group", f.split_pair());
}

bool sylows_cyclic_or_gq(const Group& g) {
  for (auto p : prime_divisors(g.order())) {
    const Group s = induced_group(g, sylow_subgroup(g, p));
    if (!is_cyclic(s) && !is_generalized_quaternion(s)) return false;
  }
  return true;
}

std::optional<Outcome> need_two_vertices(GroupFacts& f) {
  if (f.reduced().size() < 2) return skip("Γ1 has fewer than 2 vertices");
  return std::nullopt;
}

Outcome check_diam1(GroupFacts& f) {
  if (auto s = need_two_vertices(f)) return *s;
  return iff(f.diam().is_finite(1), f.cyclic() && f.p_group().has_value(), "diam(Γ1) = 1", "cyclic p-group",
             "diam = " + diam_text(f.diam()));
}

Outcome check_diam2(GroupFacts& f) {
  if (auto s = need_two_vertices(f)) return *s;
  const auto& g = f.group();
  const bool cyclic_pp = f.cyclic() && f.p_group().has_value();
  const bool structure = (f.cyclic() && !is_prime_power(g.order())) ||
                         (f.nilpotent() && !cyclic_pp && sylows_cyclic_or_gq(g));
  return iff(f.diam().is_finite(2), structure, "diam(Γ1) = 2",
             "cyclic non-prime-power or odd cyclic x generalized quaternion", "diam = " + diam_text(f.diam()));
}

// Vertices at distance `d` apart, for diameter witnesses.
std::string far_pair(GroupFacts& f, std::size_t d) {
  const auto& pg = f.reduced();
  for (std::size_t u = 0; u < pg.size(); ++u) {
    if (f.diam().eccentricity[u] != d) continue;
    const auto dist = bfs_distances(pg.graph, u);
    for (std::size_t v = 0; v < pg.size(); ++v)
      if (dist[v] == d)
        return "d(" + f.group().label(pg.vertices[u]) + ", " + f.group().label(pg.vertices[v]) +
               ") = " + std::to_string(d);
  }
  return {};
}

Outcome check_diam4(GroupFacts& f) {
  if (!structural_hypothesis(f, f.nilpotent())) return skip("not nilpotent");
  if (!f.connected()) return skip("Γ1 disconnected");
  const auto& d = f.diam();
  if (d.value <= 2) return skip("diameter " + std::to_string(d.value) + " <= 2");
  if (d.value == 4) return pass();
  return failed("diameter is " + std::to_string(d.value) + ": " + far_pair(f, d.value));
}

Outcome check_ex_qn3(GroupFacts& f) {
  const auto& spec = f.group().provenance().spec;
  const bool odd_dicyclic = spec && !spec->is_product() && spec->atom.family == Family::Dicyclic &&
                            spec->atom.params.at(0) % 2 == 1 && spec->atom.params.at(0) >= 3;
  if (!structural_hypothesis(f, odd_dicyclic)) return skip("not Dic_n with odd n >= 3");
  const auto& d = f.diam();
  if (d.is_finite(3)) return pass();
  if (!d.is_finite()) return failed("Γ1 is disconnected: " + f.split_pair());
  return failed("diameter is " + std::to_string(d.value) + ": " + far_pair(f, d.value));
}

// Maximal under inclusion among CD-sets of n: no divisor > 1 of n fits in.
bool is_maximal_cd_chain(std::uint64_t n, const std::vector<std::uint64_t>& chain) {
  for (auto d : divisors(n)) {
    if (d == 1 || std::binary_search(chain.begin(), chain.end(), d)) continue;
    bool comparable = true;
    for (auto c : chain) comparable = comparable && (c % d == 0 || d % c == 0);
    if (comparable) return false;
  }
  return true;
}

Outcome check_lem_mcd(GroupFacts& f) {
  std::vector<std::uint64_t> ns(f.group().element_orders().begin(), f.group().element_orders().end());
  ns.push_back(f.group().order());
  std::sort(ns.begin(), ns.end());
  ns.erase(std::unique(ns.begin(), ns.end()), ns.end());
  for (auto n : ns) {
    const auto sets = enumerate_mcd_sets(n);
    std::uint64_t best = 0;
    for (const auto& s : sets) {
      auto text = [&] {
        std::string t = "{";
        for (std::size_t i = 0; i < s.chain.size(); ++i) t += (i ? "," : "") + std::to_string(s.chain[i]);
        return t + "} for n = " + std::to_string(n);
      };
      if (!is_mcd_chain(n, s.chain)) return failed("chain fails the prime-ratio characterization: " + text());
      if (!is_maximal_cd_chain(n, s.chain)) return failed("chain is not a maximal CD-set: " + text());
      if (s.weight != weight_of_set(s)) return failed("stored weight disagrees: " + text());
      best = std::max(best, s.weight);
    }
    std::uint64_t expected_count = n == 1 ? 0 : 1;
    if (n > 1) {
      unsigned placed = 0;
      for (const auto& [p, e] : factorize(n))
        for (unsigned k = 1; k <= e; ++k) expected_count = expected_count * ++placed / k;
    }
    if (sets.size() != expected_count)
      return failed(std::to_string(sets.size()) + " MCD-sets for n = " + std::to_string(n) + ", expected " +
                    std::to_string(expected_count));
    if (best != weight(n))
      return failed("weight(" + std::to_string(n) + ") = " + std::to_string(weight(n)) +
                    " but the best MCD-set weighs " + std::to_string(best));
  }
  return pass();
}

Outcome check_lem_clique_cyc(GroupFacts& f) {
  const auto& g = f.group();
  if (g.order() > f.opts().maximal_clique_max_order)
    return skip("order above " + std::to_string(f.opts().maximal_clique_max_order));
  const auto& pg = f.reduced();
  const auto mc = maximal_cliques(pg.graph, f.opts().maximal_clique_limit);
  if (mc.truncated) return skip("maximal clique enumeration truncated");
  const auto& mem = f.membership();
  const auto orders = g.element_orders();
  for (const auto& k : mc.cliques) {
    auto describe = [&] {
      std::string t = "clique {";
      for (std::size_t i = 0; i < k.size(); ++i) t += (i ? "," : "") + g.label(pg.vertices[k[i]]);
      return t + "}";
    };
    Elem top = pg.vertices[k.front()];
    for (auto v : k)
      if (orders[pg.vertices[v]] > orders[top]) top = pg.vertices[v];
    for (auto v : k)
      if (!mem[top].test(pg.vertices[v]))
        return failed(describe() + " is not inside <" + g.label(top) + ">");
    for (Elem b = 0; b < g.order(); ++b)
      if (orders[b] > orders[top] && mem[b].test(top))
        return failed(describe() + ": <" + g.label(top) + "> is not maximal cyclic, it lies in <" + g.label(b) + ">");
    std::vector<std::uint64_t> os;
    for (auto v : k) os.push_back(orders[pg.vertices[v]]);
    std::sort(os.begin(), os.end());
    os.erase(std::unique(os.begin(), os.end()), os.end());
    if (!is_mcd_chain(orders[top], os)) return failed(describe() + ": element orders are not an MCD-set");
  }
  return pass(std::to_string(mc.cliques.size()) + " maximal cliques");
}

std::uint64_t max_weight_of_orders(const Group& g) {
  std::uint64_t best = 0;
  for (auto o : g.element_orders()) best = std::max(best, weight(o));
  return best;
}

std::optional<Outcome> need_exact_clique(GroupFacts& f) {
  if (f.group().order() > f.opts().exact_clique_max_order)
    return skip("order above the exact clique cap " + std::to_string(f.opts().exact_clique_max_order));
  return std::nullopt;
}

Outcome check_thm_clique(GroupFacts& f) {
  if (auto s = need_exact_clique(f)) return *s;
  const auto w1 = f.clique_reduced();
  const auto w = clique_number_exact(f.full().graph, f.opts().clique_vertex_cap);
  const auto formula = max_weight_of_orders(f.group());
  const std::string values = "ω(Γ1) = " + std::to_string(w1) + ", ω(Γ) - 1 = " + std::to_string(w - 1) +
                             ", max weight(o(a)) = " + std::to_string(formula);
  if (w1 == formula && w == w1 + 1) return pass(values);
  return failed(values);
}

Outcome check_cor_clique_nilp(GroupFacts& f) {
  if (!structural_hypothesis(f, f.nilpotent())) return skip("not nilpotent");
  if (auto s = need_exact_clique(f)) return *s;
  const auto w1 = f.clique_reduced();
  const auto e = exponent(f.group());
  const auto we = weight(e);
  const std::string values = "ω(Γ1) = " + std::to_string(w1) + ", weight(exp = " + std::to_string(e) +
                             ") = " + std::to_string(we);
  if (w1 == we) return pass(values);
  return failed(values);
}

Outcome dispatch(ClaimId id, GroupFacts& f) {
  switch (id) {
    case ClaimId::ObsNbhd: return check_obs_nbhd(f);
    case ClaimId::ObsComplete: return check_obs_complete(f);
    case ClaimId::LemLinkage: return check_lem_linkage(f);
    case ClaimId::ObsUniqueP: return check_obs_unique_p(f);
    case ClaimId::CorPgrpConn: return check_cor_pgrp_conn(f);
    case ClaimId::CorComponents: return check_cor_components(f);
    case ClaimId::PropCoprime: return check_prop_coprime(f);
    case ClaimId::PropNpp: return check_prop_npp(f);
    case ClaimId::ThmNilpConn: return check_thm_nilp_conn(f);
    case ClaimId::Diam1: return check_diam1(f);
    case ClaimId::Diam2: return check_diam2(f);
    case ClaimId::Diam4: return check_diam4(f);
    case ClaimId::ExQn3: return check_ex_qn3(f);
    case ClaimId::LemMcd: return check_lem_mcd(f);
    case ClaimId::LemCliqueCyc: return check_lem_clique_cyc(f);
    case ClaimId::ThmClique: return check_thm_clique(f);
    case ClaimId::CorCliqueNilp: return check_cor_clique_nilp(f);
  }
  return skip("unknown claim");
}

ClaimReport run_one(ClaimId id, GroupFacts& f) {
  ClaimReport r;
  r.claim = id;
  r.group = f.group().name();
  const auto t0 = std::chrono::steady_clock::now();
  Outcome o;
  try {
    o = dispatch(id, f);
  } catch (const Error& e) {
    if (e.kind() != ErrorKind::Resource) throw;
    o = skip(e.what());
  }
  r.elapsed = std::chrono::steady_clock::now() - t0;
  r.status = o.status;
  if (o.status == Status::Skipped)
    r.reason = std::move(o.text);
  else if (!o.text.empty())
    r.witness = std::move(o.text);
  return r;
}

}  // namespace

ClaimReport verify(ClaimId claim, const GroupPtr& g, const VerifyOptions& opts) {
  GroupFacts facts(g, opts);
  return run_one(claim, facts);
}

std::vector<ClaimReport> verify_group(const GroupPtr& g, std::span<const ClaimId> claims,
                                      const VerifyOptions& opts) {
  GroupFacts facts(g, opts);
  std::vector<ClaimReport> out;
  for (auto id : claims) out.push_back(run_one(id, facts));
  return out;
}

// ---- corpus -----------------------------------------------------------------

Corpus default_corpus() {
  Corpus c;
  for (std::uint64_t n = 1; n <= 64; ++n) c.specs.push_back(GroupSpec::cyclic(n));
  for (std::uint64_t n = 3; n <= 32; ++n) c.specs.push_back(GroupSpec::dihedral(n));
  for (std::uint64_t n = 2; n <= 16; ++n) c.specs.push_back(GroupSpec::dicyclic(n));
  for (const char* s : {"S3", "S4", "S5", "A4", "A5"}) c.specs.push_back(parse_spec(s));
  for (std::uint64_t p : {2, 3, 5})
    for (std::uint64_t k : {2, 3}) c.specs.push_back(GroupSpec::elem_abelian(p, k));
  for (const char* s : {"S3xS3", "S3xZ6", "C2xC2", "Z6xS3", "D4xC3", "S3xC5", "C3xQ8", "C5xQ16"})
    c.specs.push_back(parse_spec(s));
  return c;
}

Corpus parse_corpus(std::string_view text) {
  if (text == "default") return default_corpus();
  Corpus c;
  if (text.empty()) return c;
  std::size_t start = 0;
  while (start <= text.size()) {
    const auto end = std::min(text.find(',', start), text.size());
    c.specs.push_back(parse_spec(text.substr(start, end - start)));
    start = end + 1;
  }
  return c;
}

CorpusRun run_corpus(const Corpus& corpus, std::span<const ClaimId> claims, const VerifyOptions& opts,
                     const Limits& limits, unsigned workers) {
  std::vector<GroupSpec> specs;
  for (const auto& s : corpus.specs)
    if (spec_order(s) <= corpus.max_order) specs.push_back(s);

  std::vector<std::vector<ClaimReport>> per_group(specs.size());
  auto work = [&](std::size_t i) {
    GroupPtr g;
    try {
      g = build_group(specs[i], limits);
    } catch (const Error& e) {
      if (e.kind() != ErrorKind::Resource) throw;
      for (auto id : claims) {
        ClaimReport r;
        r.claim = id;
        r.group = render_spec(specs[i]);
        r.status = Status::Skipped;
        r.reason = e.what();
        per_group[i].push_back(std::move(r));
      }
      return;
    }
    per_group[i] = verify_group(g, claims, opts);
  };

  workers = std::max(1u, workers);
  if (workers == 1 || specs.size() <= 1) {
    for (std::size_t i = 0; i < specs.size(); ++i) work(i);
  } else {
    std::atomic<std::size_t> next{0};
    std::exception_ptr error;
    std::mutex error_mu;
    {
      std::vector<std::jthread> pool;
      for (unsigned w = 0; w < workers; ++w)
        pool.emplace_back([&] {
          for (std::size_t i = next++; i < specs.size(); i = next++) {
            try {
              work(i);
            } catch (...) {
              std::lock_guard lock(error_mu);
              if (!error) error = std::current_exception();
            }
          }
        });
    }
    if (error) std::rethrow_exception(error);
  }

  CorpusRun run;
  for (auto& reports : per_group)
    for (auto& r : reports) {
      switch (r.status) {
        case Status::Pass: ++run.summary.pass; break;
        case Status::Fail: ++run.summary.fail; break;
        case Status::Skipped: ++run.summary.skipped; break;
      }
      run.reports.push_back(std::move(r));
    }
  return run;
}

std::string report_json(const CorpusRun& run, bool timings) {
  nlohmann::ordered_json reports = nlohmann::ordered_json::array();
  for (const auto& r : run.reports) {
    nlohmann::ordered_json j;
    j["claim"] = claim_name(r.claim);
    j["group"] = r.group;
    j["status"] = to_string(r.status);
    j["witness"] = r.witness ? nlohmann::ordered_json(*r.witness) : nlohmann::ordered_json(nullptr);
    if (r.status == Status::Skipped) j["reason"] = r.reason;
    j["ms"] = timings ? std::chrono::duration<double, std::milli>(r.elapsed).count() : 0.0;
    reports.push_back(std::move(j));
  }
  nlohmann::ordered_json out;
  out["reports"] = std::move(reports);
  out["summary"] = {{"pass", run.summary.pass}, {"fail", run.summary.fail}, {"skipped", run.summary.skipped}};
  return out.dump(2) + "\n";
}

}  // namespace pg
