#pragma once

// Number theory behind clique numbers of power graphs: Euler phi, divisor
// chains and the weight function.
//
// A CD-set of n is a set of divisors of n, all > 1, totally ordered by
// divisibility. A maximal one (MCD-set) is exactly a chain d1 < ... < dt with
// d1 prime, dt = n and every ratio d(i+1)/d(i) prime. weight(n) is the largest
// sum of phi over an MCD-set of n; it is the clique number of the reduced power
// graph of the cyclic group of order n.

#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

namespace pg {

struct PrimePower {
  std::uint64_t prime;
  unsigned exponent;
  bool operator==(const PrimePower&) const = default;
};

inline constexpr std::uint64_t kMaxFactorizable = 1'000'000'000;
inline constexpr std::size_t kDefaultMcdCap = 1'000'000;

bool is_prime(std::uint64_t n);
bool is_prime_power(std::uint64_t n);

/// Trial-division factorization, primes ascending. Requires 1 <= n <= 1e9.
std::vector<PrimePower> factorize(std::uint64_t n);
std::vector<std::uint64_t> prime_divisors(std::uint64_t n);
/// All divisors of n, ascending.
std::vector<std::uint64_t> divisors(std::uint64_t n);

std::uint64_t euler_phi(std::uint64_t n);

struct MCDSet {
  std::uint64_t n = 0;
  std::vector<std::uint64_t> chain;  // strictly ascending, chain.back() == n
  std::uint64_t weight = 0;
  bool operator==(const MCDSet&) const = default;
};

/// Characterization of maximal CD-sets: first element prime, last element n,
/// consecutive ratios prime.
bool is_mcd_chain(std::uint64_t n, std::span<const std::uint64_t> chain);

/// Every MCD-set of n, lexicographic by chain. Empty for n = 1.
/// Throws a resource error if there would be more than `cap` sets.
std::vector<MCDSet> enumerate_mcd_sets(std::uint64_t n, std::size_t cap = kDefaultMcdCap);

std::uint64_t weight_of_set(const MCDSet& set);

/// weight(1) = 0; weight(n) = phi(n) + max_{p | n} weight(n / p).
std::uint64_t weight(std::uint64_t n);

}  // namespace pg
