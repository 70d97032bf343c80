#include <cstdio>
#include <filesystem>
#include <memory>
#include <numeric>
#include <string>

#include "doctest.h"
#include "oracles.hpp"
#include "pg/error.hpp"
#include "pg/group.hpp"

using namespace pg;

namespace {

GroupPtr G(const char* spec) { return build_group(parse_spec(spec)); }

Elem find_label(const Group& g, const std::string& label) {
  for (Elem a = 0; a < g.order(); ++a)
    if (g.label(a) == label) return a;
  FAIL("no element labelled " << label);
  return 0;
}

ErrorKind kind_of(auto&& fn) {
  try {
    fn();
  } catch (const Error& e) {
    return e.kind();
  }
  FAIL("expected pg::Error");
  return ErrorKind::Usage;
}

// Every group used by the brute-force property loops below.
std::vector<GroupPtr> small_groups() {
  std::vector<GroupPtr> out;
  for (int n = 1; n <= 24; ++n) out.push_back(G(("C" + std::to_string(n)).c_str()));
  for (int n = 3; n <= 12; ++n) out.push_back(G(("D" + std::to_string(n)).c_str()));
  for (int n = 2; n <= 8; ++n) out.push_back(G(("Dic" + std::to_string(n)).c_str()));
  for (const char* s : {"S3", "S4", "A4", "E2^2", "E2^3", "E3^2", "S3xS3", "S3xC6", "C2xC2xC2",
                        "D4xC3", "C3xQ8", "A4xC2", "Q16", "D4xD4"})
    out.push_back(G(s));
  return out;
}

}  // namespace

TEST_CASE("multiply and identity law") {
  auto c6 = G("C6");
  CHECK(c6->multiply(2, 3) == 5);
  auto s4 = G("S4");
  for (Elem b = 0; b < s4->order(); ++b) CHECK(s4->multiply(0, b) == b);
  CHECK(kind_of([&] { (void)c6->multiply(6, 0); }) == ErrorKind::Usage);
  CHECK(kind_of([&] { (void)c6->element_order(99); }) == ErrorKind::Usage);
}

TEST_CASE("quaternion relations") {
  auto q8 = G("Q8");
  REQUIRE(q8->order() == 8);
  // generators: a of order 4, b with b^2 = a^2 and b a = a^-1 b
  const Elem a = find_label(*q8, "a");
  const Elem b = find_label(*q8, "b");
  const Elem a2 = q8->mul(a, a);
  CHECK(a2 != 0);
  CHECK(q8->mul(b, b) == a2);
  CHECK(q8->mul(b, a) == q8->mul(q8->inverse(a), b));
  CHECK(q8->element_order(b) == 4);
  // i*i lands on the unique involution
  std::size_t involutions = 0;
  for (Elem x = 0; x < 8; ++x) involutions += q8->element_order(x) == 2;
  CHECK(involutions == 1);
}

TEST_CASE("element orders") {
  auto dic3 = G("Dic3");
  CHECK(dic3->element_order(find_label(*dic3, "b")) == 4);
  auto s3 = G("S3");
  std::size_t threes = 0;
  for (Elem x = 0; x < 6; ++x) threes += s3->element_order(x) == 3;
  CHECK(threes == 2);
  for (const auto& g : small_groups())
    for (Elem x = 0; x < g->order(); ++x) {
      CHECK(g->element_order(x) == oracle::order_by_walk(*g, x));
      CHECK(g->order() % g->element_order(x) == 0);
      CHECK(g->mul(x, g->inverse(x)) == 0);
    }
}

TEST_CASE("power with negative exponents") {
  auto d5 = G("D5");
  for (Elem x = 0; x < d5->order(); ++x) {
    CHECK(d5->power(x, 0) == 0);
    CHECK(d5->power(x, 1) == x);
    CHECK(d5->power(x, -1) == d5->inverse(x));
    CHECK(d5->power(x, 7) == d5->mul(d5->power(x, 3), d5->power(x, 4)));
  }
}

TEST_CASE("cyclic subgroups") {
  auto c12 = G("C12");
  auto h = cyclic_subgroup(*c12, find_label(*c12, "a^2"));
  CHECK(h.size() == 6);
  CHECK(h.generator_hint == find_label(*c12, "a^2"));
  for (const auto& g : small_groups())
    for (Elem x = 0; x < g->order(); ++x) {
      auto sub = cyclic_subgroup(*g, x);
      CHECK(sub.size() == g->element_order(x));
      CHECK(sub.members.front() == 0);
      CHECK(std::is_sorted(sub.members.begin(), sub.members.end()));
      for (Elem y : sub.members) CHECK(oracle::is_power_of(*g, x, y));
    }
}

TEST_CASE("family orders") {
  CHECK(G("D7")->order() == 14);
  CHECK(G("S5")->order() == 120);
  CHECK(G("A5")->order() == 60);
  CHECK(G("Dic4")->order() == 16);
  CHECK(G("E5^3")->order() == 125);
  CHECK(G("S3xZ6")->order() == 36);
  CHECK(G("S1")->order() == 1);
  CHECK(G("C1")->order() == 1);
}

TEST_CASE("family bounds") {
  CHECK(kind_of([] { G("D2"); }) == ErrorKind::Usage);
  CHECK(kind_of([] { G("Dic1"); }) == ErrorKind::Usage);
  CHECK(kind_of([] { G("S8"); }) == ErrorKind::Resource);
  CHECK(kind_of([] { G("E4^2"); }) == ErrorKind::Usage);
  CHECK(kind_of([] { G("C10001"); }) == ErrorKind::Resource);
  CHECK(kind_of([] { G("C100xC101"); }) == ErrorKind::Resource);
}

TEST_CASE("exponent and p-groups") {
  CHECK(exponent(*G("C12")) == 12);
  CHECK(exponent(*G("S4")) == 12);
  CHECK(exponent(*G("E3^3")) == 3);
  CHECK(exponent(*G("Q16")) == 8);
  CHECK(is_p_group(*G("D8")) == 2u);
  CHECK(is_p_group(*G("E5^2")) == 5u);
  CHECK_FALSE(is_p_group(*G("C6")).has_value());
  CHECK_FALSE(is_p_group(*G("C1")).has_value());
}

TEST_CASE("nilpotency agrees with Sylow normality") {
  CHECK(is_nilpotent(*G("D8")));
  CHECK(is_nilpotent(*G("C3xQ8")));
  CHECK_FALSE(is_nilpotent(*G("D6")));
  CHECK_FALSE(is_nilpotent(*G("A4")));
  for (const auto& g : small_groups())
    if (g->order() <= 100) CHECK_MESSAGE(is_nilpotent(*g) == oracle::nilpotent_by_conjugation(*g), g->name());
}

TEST_CASE("sylow subgroups") {
  auto g = G("D4xC3");
  CHECK(sylow_subgroup(*g, 2).size() == 8);
  CHECK(sylow_subgroup(*g, 3).size() == 3);
  CHECK(kind_of([&] { sylow_subgroup(*g, 5); }) == ErrorKind::Usage);
  CHECK(kind_of([&] { sylow_subgroup(*g, 4); }) == ErrorKind::Usage);
  CHECK(kind_of([] { sylow_subgroup(*G("S3"), 2); }) == ErrorKind::Domain);
}

TEST_CASE("cyclicity and generalized quaternion") {
  CHECK(is_cyclic(*G("C2xC3")));
  CHECK_FALSE(is_cyclic(*G("C2xC2")));
  CHECK(is_cyclic(*G("C1")));
  CHECK(is_generalized_quaternion(*G("Q8")));
  CHECK(is_generalized_quaternion(*G("Q32")));
  CHECK_FALSE(is_generalized_quaternion(*G("Dic3")));
  CHECK_FALSE(is_generalized_quaternion(*G("D4")));
  CHECK_FALSE(is_generalized_quaternion(*G("C8")));
  CHECK_FALSE(is_generalized_quaternion(*G("C4")));
}

TEST_CASE("subgroups of prime order") {
  CHECK(count_order_p_subgroups(*G("C2xC2"), 2) == 3);
  CHECK(count_order_p_subgroups(*G("E3^2"), 3) == 4);
  CHECK(count_order_p_subgroups(*G("E2^3"), 2) == 7);
  CHECK(count_order_p_subgroups(*G("S3"), 2) == 3);
  CHECK(count_order_p_subgroups(*G("S3"), 3) == 1);
  CHECK(count_order_p_subgroups(*G("Q8"), 2) == 1);
}

TEST_CASE("maximal cyclic subgroups") {
  auto s3 = maximal_cyclic_subgroups(*G("S3"));
  CHECK(s3.size() == 4);
  CHECK(maximal_cyclic_subgroups(*G("C12")).size() == 1);
  CHECK(maximal_cyclic_subgroups(*G("Q8")).size() == 3);
  for (const auto& g : small_groups()) {
    auto subs = maximal_cyclic_subgroups(*g);
    // every element lies in one of them, and none contains another
    for (Elem x = 0; x < g->order(); ++x)
      CHECK(std::any_of(subs.begin(), subs.end(), [&](const Subgroup& s) { return s.contains(x); }));
    for (const auto& a : subs)
      for (const auto& b : subs)
        if (!(a == b))
          CHECK_FALSE(std::includes(b.members.begin(), b.members.end(), a.members.begin(), a.members.end()));
  }
}

TEST_CASE("direct product coordinates") {
  auto s3 = G("S3");
  auto z6 = G("Z6");
  auto p = G("S3xZ6");
  REQUIRE(p->provenance().left);
  REQUIRE(p->provenance().right);
  for (Elem x = 0; x < p->order(); ++x) {
    const Elem gx = x / 6, hx = x % 6;
    CHECK(p->element_order(x) == std::lcm(s3->element_order(gx), z6->element_order(hx)));
    for (Elem y = 0; y < p->order(); ++y)
      CHECK(p->mul(x, y) == s3->mul(gx, y / 6) * 6 + z6->mul(hx, y % 6));
  }
  CHECK(p->name() == "S3xC6");
}

TEST_CASE("table validation") {
  auto bad = [](std::vector<Elem> t, std::size_t n) {
    try {
      (void)Group::from_table("t", n, std::move(t), {});
    } catch (const Error& e) {
      CHECK(e.kind() == ErrorKind::Validation);
      return std::string(e.what());
    }
    FAIL("table accepted");
    return std::string();
  };
  CHECK(bad({0, 1, 1, 0, 2}, 2).size() > 0);              // wrong size
  CHECK(bad({0, 1, 1, 1}, 2).find("atin") != std::string::npos);
  CHECK(bad({0, 5, 1, 0}, 2).size() > 0);                  // out of range
  // Latin square with identity that is not associative (order 5 loop)
  std::vector<Elem> loop = {0, 1, 2, 3, 4, 1, 0, 3, 4, 2, 2, 4, 0, 1, 3, 3, 2, 4, 0, 1, 4, 3, 1, 2, 0};
  CHECK(bad(loop, 5).find("ssociativ") != std::string::npos);
  // identity not at index 0 is relocated
  auto g = Group::from_table("c2", 2, {1, 0, 0, 1}, {"x", "e"});
  CHECK(g.label(0) == "e");
  CHECK(g.element_order(1) == 2);
}

TEST_CASE("json round trip") {
  const auto path = (std::filesystem::temp_directory_path() / "pg_test_group.json").string();
  for (const char* s : {"C1", "D5", "Q8", "S3xC2"}) {
    auto g = G(s);
    save_group(*g, path);
    auto back = load_group(path);
    CHECK(back == *g);
    CHECK(group_from_json(group_to_json(*g)) == *g);
  }
  std::remove(path.c_str());
  CHECK(kind_of([] { group_from_json(R"({"name":"x","order":2,"table":[[0,1],[1,1]]})"); }) ==
        ErrorKind::Validation);
  CHECK(kind_of([] { group_from_json("not json"); }) == ErrorKind::Validation);
  CHECK(kind_of([&] { load_group("/nonexistent/pg.json"); }) != ErrorKind::Domain);
}

TEST_CASE("induced subgroup") {
  auto g = G("D4xC3");
  auto sub = induced_group(*g, sylow_subgroup(*g, 2));
  CHECK(sub.order() == 8);
  CHECK(is_p_group(sub) == 2u);
  CHECK_FALSE(is_generalized_quaternion(sub));
}
