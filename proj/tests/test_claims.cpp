#include <regex>
#include <string>

#include "doctest.h"
#include "json.hpp"
#include "pg/claims.hpp"
#include "pg/divisor_weight.hpp"
#include "pg/error.hpp"
#include "pg/graph_algo.hpp"
#include "pg/powergraph.hpp"

using namespace pg;

namespace {

GroupPtr G(const char* spec) { return build_group(parse_spec(spec)); }

std::size_t position_by_label(const PowerGraph& pg, const std::string& label) {
  for (std::size_t i = 0; i < pg.size(); ++i)
    if (pg.group->label(pg.vertices[i]) == label) return i;
  FAIL("label not found: " << label);
  return 0;
}

VerifyOptions unguarded() {
  VerifyOptions o;
  o.ignore_hypotheses = true;
  return o;
}

}  // namespace

TEST_CASE("claim names") {
  for (auto id : kAllClaims) CHECK(parse_claim(claim_name(id)) == id);
  CHECK(claim_name(ClaimId::ExQn3) == "EX-QN-3");
  CHECK_FALSE(parse_claim("THM-X").has_value());
  CHECK(parse_claim_list("all").size() == kAllClaims.size());
  CHECK(parse_claim_list("THM-CLIQUE,DIAM-1") == std::vector<ClaimId>{ClaimId::Diam1, ClaimId::ThmClique});
  CHECK_THROWS_AS(parse_claim_list("DIAM-1,NOPE"), Error);
}

TEST_CASE("default corpus") {
  const auto c = default_corpus();
  CHECK(c.specs.size() == 64 + 30 + 15 + 5 + 6 + 8);
  std::vector<std::string> names;
  for (const auto& s : c.specs) names.push_back(render_spec(s));
  for (const char* must : {"C1", "C64", "D3", "D32", "Dic2", "Dic16", "S5", "A5", "E5^3", "S3xS3", "S3xC6",
                           "C6xS3", "C5xDic4", "C3xDic2"})
    CHECK_MESSAGE(std::find(names.begin(), names.end(), must) != names.end(), must);
}

TEST_CASE("parse corpus") {
  CHECK(parse_corpus("C4,S3xZ6").specs.size() == 2);
  CHECK(parse_corpus("default").specs.size() == default_corpus().specs.size());
  CHECK_THROWS_AS(parse_corpus("C4,,C5"), Error);
}

TEST_CASE("odd dicyclic diameter claim") {
  const std::vector<ClaimId> only = {ClaimId::ExQn3};
  const auto run = run_corpus(parse_corpus("Dic3,Dic5,Dic7,Dic9"), only);
  CHECK(run.summary == Summary{4, 0, 0});
  const auto even = run_corpus(parse_corpus("Dic4,Q8"), only);
  CHECK(even.summary == Summary{0, 0, 2});
}

TEST_CASE("empty corpus") {
  const auto run = run_corpus(Corpus{}, kAllClaims);
  CHECK(run.reports.empty());
  CHECK(run.summary == Summary{});
  const auto j = nlohmann::json::parse(report_json(run));
  CHECK(j["reports"].empty());
  CHECK(j["summary"]["fail"] == 0);
}

TEST_CASE("max order filter") {
  Corpus c = parse_corpus("C4,S5,A5");
  c.max_order = 60;
  const std::vector<ClaimId> one = {ClaimId::Diam1};
  CHECK(run_corpus(c, one).reports.size() == 2);
}

TEST_CASE("report json shape") {
  const std::vector<ClaimId> one = {ClaimId::Diam1, ClaimId::ThmClique};
  const auto j = nlohmann::json::parse(report_json(run_corpus(parse_corpus("C1,C12"), one)));
  REQUIRE(j["reports"].size() == 4);
  const auto& r = j["reports"][0];
  CHECK(r["claim"] == "DIAM-1");
  CHECK(r["group"] == "C1");
  CHECK(r["status"] == "skipped");
  CHECK(r["ms"] == 0);
  CHECK(j["reports"][3]["status"] == "pass");
  CHECK(j["summary"]["pass"] == 3);  // C1 passes THM-CLIQUE with ω = 0
}

TEST_CASE("results do not depend on worker count") {
  Corpus c = default_corpus();
  c.max_order = 64;
  const auto one = report_json(run_corpus(c, kAllClaims, {}, {}, 1));
  CHECK(report_json(run_corpus(c, kAllClaims, {}, {}, 4)) == one);
  CHECK(report_json(run_corpus(c, kAllClaims, {}, {}, 1)) == one);
}

TEST_CASE("skips") {
  CHECK(verify(ClaimId::ObsUniqueP, G("C6")).status == Status::Skipped);
  CHECK(verify(ClaimId::ObsComplete, G("C1")).status == Status::Skipped);
  CHECK(verify(ClaimId::Diam1, G("C2")).status == Status::Skipped);
  CHECK(verify(ClaimId::PropCoprime, G("C6")).status == Status::Skipped);
  CHECK(verify(ClaimId::PropCoprime, G("C2xC4")).status == Status::Skipped);
  CHECK(verify(ClaimId::PropCoprime, G("S3xC5")).status == Status::Pass);
  CHECK(verify(ClaimId::PropNpp, G("C6xS3")).status == Status::Pass);
  CHECK(verify(ClaimId::Diam4, G("S3xC6")).status == Status::Skipped);
  CHECK(verify(ClaimId::Diam4, G("D4xC3")).status == Status::Pass);
  VerifyOptions tight;
  tight.exact_clique_max_order = 10;
  const auto r = verify(ClaimId::ThmClique, G("C12"), tight);
  CHECK(r.status == Status::Skipped);
  CHECK_FALSE(r.reason.empty());
}

// Claims checked outside their hypotheses must fail, and the witness text
// has to replay to the stated violation through the public operations.
TEST_CASE("witness replay: disconnected pair") {
  auto g = G("S3");
  const auto r = verify(ClaimId::ThmNilpConn, g, unguarded());
  REQUIRE(r.status == Status::Fail);
  REQUIRE(r.witness);
  std::smatch m;
  REQUIRE(std::regex_search(*r.witness, m, std::regex(R"(; (.+) and (.+) lie in different components)")));
  const auto pg = build_power_graph(g, Variant::Reduced);
  CHECK_FALSE(distance(pg.graph, position_by_label(pg, m[1]), position_by_label(pg, m[2])).has_value());
}

TEST_CASE("witness replay: far pair") {
  for (const char* spec : {"Dic4", "S3xC6"}) {
    auto g = G(spec);
    const auto claim = std::string(spec) == "Dic4" ? ClaimId::ExQn3 : ClaimId::Diam4;
    const auto r = verify(claim, g, unguarded());
    REQUIRE(r.status == Status::Fail);
    std::smatch m;
    REQUIRE(std::regex_search(*r.witness, m, std::regex(R"(d\((.+), (.+)\) = (\d+)$)")));
    const auto pg = build_power_graph(g, Variant::Reduced);
    CHECK(distance(pg.graph, position_by_label(pg, m[1]), position_by_label(pg, m[2])) ==
          std::stoul(m[3]));
    CHECK(diameter(pg.graph).value == std::stoul(m[3]));
  }
}

TEST_CASE("witness replay: clique values") {
  auto g = G("S3");
  const auto r = verify(ClaimId::CorCliqueNilp, g, unguarded());
  REQUIRE(r.status == Status::Fail);
  std::smatch m;
  REQUIRE(std::regex_search(*r.witness, m, std::regex(R"(ω\(Γ1\) = (\d+), weight\(exp = (\d+)\) = (\d+))")));
  CHECK(clique_number_exact(build_power_graph(g, Variant::Reduced).graph) == std::stoul(m[1]));
  CHECK(exponent(*g) == std::stoul(m[2]));
  CHECK(weight(exponent(*g)) == std::stoul(m[3]));
  CHECK(std::stoul(m[1]) != std::stoul(m[3]));
}
