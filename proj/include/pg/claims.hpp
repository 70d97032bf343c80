#pragma once

// Executable versions of the structural results on reduced power graphs,
// checked group by group over a corpus.

#include <array>
#include <chrono>
#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "pg/group.hpp"
#include "pg/spec.hpp"

namespace pg {

enum class ClaimId {
  ObsNbhd,        // N[a] = N[a^i] whenever gcd(i, o(a)) = 1
  ObsComplete,    // Γ(G) complete <=> G cyclic of prime-power order
  LemLinkage,     // Γ1(G) connected <=> linkage graph connected
  ObsUniqueP,     // p-group: one subgroup of order p <=> cyclic or generalized quaternion
  CorPgrpConn,    // p-group: Γ1 connected <=> cyclic or generalized quaternion
  CorComponents,  // p-group: #components of Γ1 = #subgroups of order p
  PropCoprime,    // (|G|,|H|) = 1, both nontrivial => Γ1(G x H) connected
  PropNpp,        // Γ1(G) connected, |G| not a prime power => Γ1(G x H) connected
  ThmNilpConn,    // nilpotent: connected <=> cyclic or gen. quaternion or not a p-group
  Diam1,          // diam Γ1 = 1 <=> cyclic p-group
  Diam2,          // diam Γ1 = 2 <=> cyclic of non-prime-power order, or odd cyclic x gen. quaternion
  Diam4,          // nilpotent, connected, diam > 2 => diam = 4
  ExQn3,          // diam Γ1(Dic_n) = 3 for odd n >= 3
  LemMcd,         // MCD-set enumeration matches its characterization
  LemCliqueCyc,   // maximal cliques sit inside maximal cyclic subgroups as MCD-sets
  ThmClique,      // ω(Γ1) = ω(Γ) - 1 = max_a weight(o(a))
  CorCliqueNilp,  // nilpotent: ω(Γ1) = weight(exp G)
};

inline constexpr std::array kAllClaims = {
    ClaimId::ObsNbhd,     ClaimId::ObsComplete, ClaimId::LemLinkage,   ClaimId::ObsUniqueP,
    ClaimId::CorPgrpConn, ClaimId::CorComponents, ClaimId::PropCoprime, ClaimId::PropNpp,
    ClaimId::ThmNilpConn, ClaimId::Diam1,       ClaimId::Diam2,        ClaimId::Diam4,
    ClaimId::ExQn3,       ClaimId::LemMcd,      ClaimId::LemCliqueCyc, ClaimId::ThmClique,
    ClaimId::CorCliqueNilp,
};

std::string_view claim_name(ClaimId id);
/// Accepts the canonical upper-case names, e.g. "THM-CLIQUE".
std::optional<ClaimId> parse_claim(std::string_view name);
/// "all" or a comma-separated list of names; usage error on unknown names.
std::vector<ClaimId> parse_claim_list(std::string_view text);

enum class Status { Pass, Fail, Skipped };
std::string_view to_string(Status s);

struct ClaimReport {
  ClaimId claim = ClaimId::ObsNbhd;
  std::string group;
  Status status = Status::Pass;
  std::optional<std::string> witness;  // present on Fail (and informative on Pass)
  std::string reason;                  // why a check was skipped
  std::chrono::nanoseconds elapsed{0};
};

struct VerifyOptions {
  std::size_t exact_clique_max_order = 5000;
  std::size_t clique_vertex_cap = 5000;
  std::size_t maximal_clique_max_order = 60;
  std::size_t maximal_clique_limit = 200000;
  // Evaluate conclusions even where a structural hypothesis (nilpotent,
  // p-group, product shape, family) fails. Used to exercise witnesses.
  bool ignore_hypotheses = false;
};

ClaimReport verify(ClaimId claim, const GroupPtr& g, const VerifyOptions& opts = {});
/// Same as calling verify per claim, sharing the derived graphs.
std::vector<ClaimReport> verify_group(const GroupPtr& g, std::span<const ClaimId> claims,
                                      const VerifyOptions& opts = {});

struct Corpus {
  std::vector<GroupSpec> specs;
  std::size_t max_order = 10000;  // specs above this order are left out
};

Corpus default_corpus();
/// Comma-separated group specs, e.g. "Dic3,Dic5,S3xZ6".
Corpus parse_corpus(std::string_view text);

struct Summary {
  std::size_t pass = 0, fail = 0, skipped = 0;
  bool operator==(const Summary&) const = default;
};

struct CorpusRun {
  std::vector<ClaimReport> reports;  // corpus order, then claim order
  Summary summary;
};

CorpusRun run_corpus(const Corpus& corpus, std::span<const ClaimId> claims,
                     const VerifyOptions& opts = {}, const Limits& limits = {}, unsigned workers = 1);

/// {"reports": [...], "summary": {...}}. Without `timings` every "ms" is 0 so
/// that repeated runs are byte-identical.
std::string report_json(const CorpusRun& run, bool timings = false);

}  // namespace pg
