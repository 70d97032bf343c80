#include "pg/divisor_weight.hpp"

#include <algorithm>
#include <numeric>
#include <string>
#include <unordered_map>

#include "pg/error.hpp"

namespace pg {

bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

bool is_prime_power(std::uint64_t n) {
  if (n < 2) return false;
  std::uint64_t p = 2;
  while (n % p) {
    if (p * p > n) return true;  // n itself prime
    ++p;
  }
  while (n % p == 0) n /= p;
  return n == 1;
}

std::vector<PrimePower> factorize(std::uint64_t n) {
  if (n == 0 || n > kMaxFactorizable)
    fail(ErrorKind::Usage, "factorize: n must lie in [1, 1e9], got " + std::to_string(n));
  std::vector<PrimePower> out;
  for (std::uint64_t p = 2; p * p <= n; ++p) {
    if (n % p) continue;
    unsigned e = 0;
    while (n % p == 0) {
      n /= p;
      ++e;
    }
    out.push_back({p, e});
  }
  if (n > 1) out.push_back({n, 1});
  return out;
}

std::vector<std::uint64_t> prime_divisors(std::uint64_t n) {
  std::vector<std::uint64_t> out;
  for (const auto& [p, e] : factorize(n)) out.push_back(p);
  return out;
}

std::vector<std::uint64_t> divisors(std::uint64_t n) {
  std::vector<std::uint64_t> out{1};
  for (const auto& [p, e] : factorize(n)) {
    const std::size_t base = out.size();
    std::uint64_t pk = 1;
    for (unsigned k = 1; k <= e; ++k) {
      pk *= p;
      for (std::size_t i = 0; i < base; ++i) out.push_back(out[i] * pk);
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::uint64_t euler_phi(std::uint64_t n) {
  if (n == 0) fail(ErrorKind::Usage, "euler_phi: n must be >= 1");
  std::uint64_t phi = n;
  for (const auto& [p, e] : factorize(n)) phi = phi / p * (p - 1);
  return phi;
}

bool is_mcd_chain(std::uint64_t n, std::span<const std::uint64_t> chain) {
  if (chain.empty() || chain.back() != n || !is_prime(chain.front())) return false;
  for (std::size_t i = 0; i + 1 < chain.size(); ++i) {
    if (chain[i + 1] % chain[i] != 0) return false;
    if (!is_prime(chain[i + 1] / chain[i])) return false;
  }
  return true;
}

namespace {

// Distinct orderings of a multiset of primes, emitted in lexicographic order
// of the prime sequence (hence of the partial-product chain).
void orderings(std::vector<PrimePower>& remaining, std::uint64_t product,
               std::vector<std::uint64_t>& chain, std::uint64_t n, std::vector<MCDSet>& out) {
  bool any = false;
  for (auto& pp : remaining) {
    if (pp.exponent == 0) continue;
    any = true;
    --pp.exponent;
    chain.push_back(product * pp.prime);
    orderings(remaining, product * pp.prime, chain, n, out);
    chain.pop_back();
    ++pp.exponent;
  }
  if (!any) {
    MCDSet s{n, chain, 0};
    s.weight = weight_of_set(s);
    out.push_back(std::move(s));
  }
}

std::uint64_t multinomial_count(const std::vector<PrimePower>& f, std::size_t cap) {
  // Incremental binomial products; stops once above cap.
  std::uint64_t total = 1;
  unsigned placed = 0;
  for (const auto& pp : f) {
    for (unsigned k = 1; k <= pp.exponent; ++k) {
      ++placed;
      total = total * placed / k;
      if (total > cap) return total;
    }
  }
  return total;
}

}  // namespace

std::vector<MCDSet> enumerate_mcd_sets(std::uint64_t n, std::size_t cap) {
  if (n == 0) fail(ErrorKind::Usage, "enumerate_mcd_sets: n must be >= 1");
  std::vector<MCDSet> out;
  if (n == 1) return out;
  auto f = factorize(n);
  if (multinomial_count(f, cap) > cap)
    fail(ErrorKind::Resource, "enumerate_mcd_sets: more than " + std::to_string(cap) +
                                  " MCD-sets for n = " + std::to_string(n));
  std::vector<std::uint64_t> chain;
  orderings(f, 1, chain, n, out);
  return out;
}

std::uint64_t weight_of_set(const MCDSet& set) {
  return std::accumulate(set.chain.begin(), set.chain.end(), std::uint64_t{0},
                         [](std::uint64_t acc, std::uint64_t d) { return acc + euler_phi(d); });
}

namespace {

std::uint64_t weight_rec(std::uint64_t n, const std::vector<std::uint64_t>& primes,
                         std::unordered_map<std::uint64_t, std::uint64_t>& memo) {
  if (n == 1) return 0;
  if (auto it = memo.find(n); it != memo.end()) return it->second;
  std::uint64_t best = 0;
  for (auto p : primes)
    if (n % p == 0) best = std::max(best, weight_rec(n / p, primes, memo));
  const std::uint64_t w = euler_phi(n) + best;
  memo.emplace(n, w);
  return w;
}

}  // namespace

std::uint64_t weight(std::uint64_t n) {
  if (n == 0) fail(ErrorKind::Usage, "weight: n must be >= 1");
  std::unordered_map<std::uint64_t, std::uint64_t> memo;
  return weight_rec(n, prime_divisors(n), memo);
}

}  // namespace pg
