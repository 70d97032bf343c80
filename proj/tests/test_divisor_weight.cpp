#include <algorithm>
#include <numeric>
#include <set>

#include "doctest.h"
#include "oracles.hpp"
#include "pg/divisor_weight.hpp"
#include "pg/error.hpp"

using namespace pg;

TEST_CASE("primes and factorization") {
  CHECK_FALSE(is_prime(0));
  CHECK_FALSE(is_prime(1));
  CHECK(is_prime(2));
  CHECK(is_prime(999999937));
  CHECK(is_prime_power(64));
  CHECK(is_prime_power(7));
  CHECK_FALSE(is_prime_power(1));
  CHECK_FALSE(is_prime_power(12));
  CHECK(factorize(1).empty());
  CHECK(factorize(360) == std::vector<PrimePower>{{2, 3}, {3, 2}, {5, 1}});
  CHECK(divisors(12) == std::vector<std::uint64_t>{1, 2, 3, 4, 6, 12});
  CHECK(prime_divisors(60) == std::vector<std::uint64_t>{2, 3, 5});
  CHECK_THROWS_AS(factorize(0), Error);
  CHECK_THROWS_AS(factorize(kMaxFactorizable + 1), Error);
  for (std::uint64_t n = 1; n <= 3000; ++n) {
    std::uint64_t prod = 1;
    for (auto [p, e] : factorize(n)) {
      CHECK(is_prime(p));
      for (unsigned i = 0; i < e; ++i) prod *= p;
    }
    CHECK(prod == n);
  }
}

TEST_CASE("euler phi against gcd count") {
  for (std::uint64_t n = 1; n <= 2000; ++n) CHECK(euler_phi(n) == oracle::phi_by_gcd(n));
  CHECK(euler_phi(1'000'000'000) == 400'000'000);
}

TEST_CASE("phi sums over divisors") {
  for (std::uint64_t n = 1; n <= 10000; ++n) {
    std::uint64_t s = 0;
    for (auto d : divisors(n)) s += euler_phi(d);
    REQUIRE(s == n);
  }
}

TEST_CASE("weight spot values") {
  CHECK(weight(1) == 0);
  CHECK(weight(2) == 1);
  CHECK(weight(12) == 8);
  CHECK(weight(6) == 4);
  CHECK(weight(16) == 15);
  CHECK(weight(30) == 20);  // {5, 15, 30}
}

TEST_CASE("prime powers: weight is n - 1") {
  for (std::uint64_t p : {2, 3, 5, 7, 11})
    for (std::uint64_t q = p; q <= 100000; q *= p) CHECK(weight(q) == q - 1);
}

TEST_CASE("MCD sets of 12") {
  auto sets = enumerate_mcd_sets(12);
  REQUIRE(sets.size() == 3);
  std::set<std::vector<std::uint64_t>> chains;
  std::vector<std::uint64_t> ws;
  for (const auto& s : sets) {
    chains.insert(s.chain);
    ws.push_back(s.weight);
    CHECK(s.weight == weight_of_set(s));
  }
  CHECK(chains == std::set<std::vector<std::uint64_t>>{{2, 4, 12}, {2, 6, 12}, {3, 6, 12}});
  std::sort(ws.begin(), ws.end());
  CHECK(ws == std::vector<std::uint64_t>{7, 7, 8});
  CHECK(enumerate_mcd_sets(1).empty());
  CHECK_THROWS_AS(enumerate_mcd_sets(2 * 3 * 5 * 7 * 11 * 13 * 17 * 19 * 23, 1000), Error);
}

TEST_CASE("MCD sets equal the maximal divisor chains") {
  for (std::uint64_t n = 2; n <= 1000; ++n) {
    std::set<std::vector<std::uint64_t>> got;
    for (const auto& s : enumerate_mcd_sets(n)) got.insert(s.chain);
    REQUIRE_MESSAGE(got == oracle::maximal_cd_sets(n), n);
  }
}

TEST_CASE("chain predicate") {
  const std::vector<std::uint64_t> good = {3, 6, 12};
  const std::vector<std::uint64_t> skips = {2, 12};
  const std::vector<std::uint64_t> composite_start = {4, 12};
  const std::vector<std::uint64_t> wrong_end = {2, 4};
  CHECK(is_mcd_chain(12, good));
  CHECK_FALSE(is_mcd_chain(12, skips));
  CHECK_FALSE(is_mcd_chain(12, composite_start));
  CHECK_FALSE(is_mcd_chain(12, wrong_end));
}

TEST_CASE("weight is the best set weight, monotone under divisibility") {
  for (std::uint64_t n = 2; n <= 10000; ++n) {
    std::uint64_t best = 0;
    for (const auto& s : enumerate_mcd_sets(n)) {
      REQUIRE(is_mcd_chain(n, s.chain));
      best = std::max(best, s.weight);
    }
    REQUIRE(weight(n) == best);
    for (auto p : prime_divisors(n)) REQUIRE(weight(n / p) < weight(n));
  }
}
