#include "pg/group.hpp"

#include <algorithm>
#include <numeric>

#include "pg/bitset.hpp"
#include "pg/divisor_weight.hpp"
#include "pg/error.hpp"

namespace pg {

namespace {

std::string idx(std::size_t i, std::size_t j) {
  return "(" + std::to_string(i) + "," + std::to_string(j) + ")";
}

// Row-major view over a not-yet-validated table.
struct RawTable {
  std::size_t n;
  const std::vector<Elem>& t;
  Elem operator()(std::size_t i, std::size_t j) const { return t[i * n + j]; }
};

std::size_t find_identity(const RawTable& t) {
  for (std::size_t e = 0; e < t.n; ++e) {
    bool ok = true;
    for (std::size_t x = 0; x < t.n && ok; ++x) ok = t(e, x) == x && t(x, e) == x;
    if (ok) return e;
  }
  fail(ErrorKind::Validation,
       "identity axiom violated: no element e with e*x = x*e = x for every x");
}

void check_latin(const RawTable& t) {
  const std::size_t n = t.n;
  std::vector<std::size_t> seen(n);
  for (std::size_t i = 0; i < n; ++i) {
    std::fill(seen.begin(), seen.end(), n);
    for (std::size_t j = 0; j < n; ++j) {
      const Elem v = t(i, j);
      if (seen[v] != n)
        fail(ErrorKind::Validation, "latin square violated: row " + std::to_string(i) +
                                        " repeats element " + std::to_string(v) + " at columns " +
                                        std::to_string(seen[v]) + " and " + std::to_string(j));
      seen[v] = j;
    }
  }
  for (std::size_t j = 0; j < n; ++j) {
    std::fill(seen.begin(), seen.end(), n);
    for (std::size_t i = 0; i < n; ++i) {
      const Elem v = t(i, j);
      if (seen[v] != n)
        fail(ErrorKind::Validation, "latin square violated: column " + std::to_string(j) +
                                        " repeats element " + std::to_string(v) + " at rows " +
                                        std::to_string(seen[v]) + " and " + std::to_string(i));
      seen[v] = i;
    }
  }
}

void check_inverses(const RawTable& t, std::size_t e) {
  for (std::size_t i = 0; i < t.n; ++i) {
    std::size_t j = 0;
    while (t(i, j) != e) ++j;  // exists: rows are permutations
    if (t(j, i) != e)
      fail(ErrorKind::Validation, "inverse axiom violated: " + std::to_string(i) + "*" +
                                      std::to_string(j) + " is the identity but " +
                                      std::to_string(j) + "*" + std::to_string(i) + " is not");
  }
}

[[noreturn]] void assoc_failure(std::size_t i, std::size_t j, std::size_t k) {
  fail(ErrorKind::Validation, "associativity violated at (i,j,k) = (" + std::to_string(i) + "," +
                                  std::to_string(j) + "," + std::to_string(k) + ")");
}

void check_associativity_exhaustive(const RawTable& t) {
  for (std::size_t i = 0; i < t.n; ++i)
    for (std::size_t j = 0; j < t.n; ++j) {
      const Elem ij = t(i, j);
      for (std::size_t k = 0; k < t.n; ++k)
        if (t(ij, k) != t(i, t(j, k))) assoc_failure(i, j, k);
    }
}

// Light's test: the elements a with (xa)y = x(ay) for all x, y are closed
// under products, so checking a generating set decides associativity.
void check_associativity_generators(const RawTable& t) {
  const std::size_t n = t.n;
  std::vector<std::size_t> gens;
  Bitset reached(n);
  for (std::size_t a = 0; a < n; ++a) {
    if (reached.test(a)) continue;
    gens.push_back(a);
    // Everything reachable from the generators by right multiplication.
    reached.clear();
    std::vector<std::size_t> frontier;
    for (auto g : gens)
      if (!reached.test(g)) {
        reached.set(g);
        frontier.push_back(g);
      }
    while (!frontier.empty()) {
      const std::size_t x = frontier.back();
      frontier.pop_back();
      for (auto g : gens) {
        const Elem y = t(x, g);
        if (!reached.test(y)) {
          reached.set(y);
          frontier.push_back(y);
        }
      }
    }
  }
  for (auto g : gens)
    for (std::size_t x = 0; x < n; ++x) {
      const Elem xg = t(x, g);
      for (std::size_t y = 0; y < n; ++y)
        if (t(xg, y) != t(x, t(g, y))) assoc_failure(x, g, y);
    }
}

}  // namespace

bool Subgroup::contains(Elem e) const { return std::binary_search(members.begin(), members.end(), e); }

Group Group::from_table(std::string name, std::size_t n, std::vector<Elem> table,
                        std::vector<std::string> labels, Provenance provenance,
                        const Limits& limits) {
  if (n == 0) fail(ErrorKind::Validation, "group order must be positive");
  if (n > limits.max_order)
    fail(ErrorKind::Resource, "group order " + std::to_string(n) + " exceeds cap " +
                                  std::to_string(limits.max_order));
  if (table.size() != n * n)
    fail(ErrorKind::Validation, "table has " + std::to_string(table.size()) +
                                    " entries, expected " + std::to_string(n * n));
  if (labels.empty())  // unlabelled tables get their row numbers
    for (std::size_t i = 0; i < n; ++i) labels.push_back(std::to_string(i));
  if (labels.size() != n)
    fail(ErrorKind::Validation, "expected " + std::to_string(n) + " labels, got " +
                                    std::to_string(labels.size()));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      if (table[i * n + j] >= n)
        fail(ErrorKind::Validation, "table entry out of range at " + idx(i, j));

  const RawTable raw{n, table};
  check_latin(raw);
  const std::size_t e = find_identity(raw);
  check_inverses(raw, e);
  if (n <= limits.exhaustive_associativity_max)
    check_associativity_exhaustive(raw);
  else
    check_associativity_generators(raw);

  Group g;
  g.name_ = std::move(name);
  g.n_ = n;
  g.provenance_ = std::move(provenance);
  if (e == 0) {
    g.table_ = std::move(table);
    g.labels_ = std::move(labels);
  } else {
    // Swap e and 0 so the identity sits at index 0.
    auto relabel = [e](std::size_t x) -> Elem {
      return static_cast<Elem>(x == e ? 0 : x == 0 ? e : x);
    };
    g.table_.assign(n * n, 0);
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) g.table_[relabel(i) * n + relabel(j)] = relabel(raw(i, j));
    g.labels_.resize(n);
    for (std::size_t i = 0; i < n; ++i) g.labels_[relabel(i)] = std::move(labels[i]);
  }

  g.inverse_.resize(n);
  g.orders_.resize(n);
  for (Elem a = 0; a < n; ++a) {
    const auto r = g.row(a);
    g.inverse_[a] = static_cast<Elem>(std::find(r.begin(), r.end(), Elem{0}) - r.begin());
    std::uint64_t k = 1;  // a^k == x
    for (Elem x = a; x != 0; x = g.mul(x, a)) ++k;
    g.orders_[a] = k;
    if (n % g.orders_[a] != 0)
      fail(ErrorKind::Validation, "element " + std::to_string(a) + " has order " +
                                      std::to_string(g.orders_[a]) + " not dividing " +
                                      std::to_string(n));
  }
  return g;
}

void Group::check_range(Elem a) const {
  if (a >= n_)
    fail(ErrorKind::Usage, "element id " + std::to_string(a) + " out of range for group of order " +
                               std::to_string(n_));
}

Elem Group::multiply(Elem a, Elem b) const {
  check_range(a);
  check_range(b);
  return mul(a, b);
}

Elem Group::inverse(Elem a) const {
  check_range(a);
  return inverse_[a];
}

std::uint64_t Group::element_order(Elem a) const {
  check_range(a);
  return orders_[a];
}

Elem Group::power(Elem a, std::int64_t k) const {
  check_range(a);
  const auto o = static_cast<std::int64_t>(orders_[a]);
  std::int64_t e = ((k % o) + o) % o;
  Elem result = 0, base = a;
  while (e) {
    if (e & 1) result = mul(result, base);
    base = mul(base, base);
    e >>= 1;
  }
  return result;
}

const std::string& Group::label(Elem a) const {
  check_range(a);
  return labels_[a];
}

// ---- structure --------------------------------------------------------------

Subgroup cyclic_subgroup(const Group& g, Elem a) {
  Subgroup s;
  s.generator_hint = a;
  Elem x = 0;
  do {
    s.members.push_back(x);
    x = g.mul(x, a);
  } while (x != 0);
  std::sort(s.members.begin(), s.members.end());
  return s;
}

std::uint64_t exponent(const Group& g) {
  std::uint64_t e = 1;
  for (auto o : g.element_orders()) e = std::lcm(e, o);
  return e;
}

std::optional<std::uint64_t> is_p_group(const Group& g) {
  if (!is_prime_power(g.order())) return std::nullopt;
  return factorize(g.order()).front().prime;
}

namespace {

bool is_power_of(std::uint64_t x, std::uint64_t p) {
  while (x % p == 0) x /= p;
  return x == 1;
}

Bitset p_elements(const Group& g, std::uint64_t p) {
  Bitset s(g.order());
  const auto orders = g.element_orders();
  for (std::size_t a = 0; a < g.order(); ++a)
    if (is_power_of(orders[a], p)) s.set(a);
  return s;
}

bool closed(const Group& g, const Bitset& s) {
  bool ok = true;
  s.for_each([&](std::size_t a) {
    if (!ok) return;
    s.for_each([&](std::size_t b) {
      if (ok && !s.test(g.mul(static_cast<Elem>(a), static_cast<Elem>(b)))) ok = false;
    });
  });
  return ok;
}

void require_prime(std::uint64_t p, const char* who) {
  if (!is_prime(p)) fail(ErrorKind::Usage, std::string(who) + ": " + std::to_string(p) + " is not prime");
}

}  // namespace

bool is_nilpotent(const Group& g) {
  for (auto p : prime_divisors(g.order()))
    if (!closed(g, p_elements(g, p))) return false;
  return true;
}

Subgroup sylow_subgroup(const Group& g, std::uint64_t p) {
  require_prime(p, "sylow_subgroup");
  if (g.order() % p != 0)
    fail(ErrorKind::Usage, "sylow_subgroup: " + std::to_string(p) + " does not divide |G| = " +
                               std::to_string(g.order()));
  if (!is_nilpotent(g))
    fail(ErrorKind::Domain, "sylow_subgroup: " + g.name() +
                                " is not nilpotent, so its p-elements need not form a subgroup");
  Subgroup s;
  for (auto a : p_elements(g, p).to_vector()) s.members.push_back(static_cast<Elem>(a));
  return s;
}

bool is_cyclic(const Group& g) {
  const auto o = g.element_orders();
  return std::find(o.begin(), o.end(), g.order()) != o.end();
}

std::uint64_t count_order_p_subgroups(const Group& g, std::uint64_t p) {
  require_prime(p, "count_order_p_subgroups");
  const auto o = g.element_orders();
  return static_cast<std::uint64_t>(std::count(o.begin(), o.end(), p)) / (p - 1);
}

bool is_generalized_quaternion(const Group& g) {
  const std::size_t n = g.order();
  if (n < 8 || (n & (n - 1)) != 0) return false;
  return !is_cyclic(g) && count_order_p_subgroups(g, 2) == 1;
}

std::vector<Subgroup> maximal_cyclic_subgroups(const Group& g) {
  const std::size_t n = g.order();
  std::vector<Bitset> mem(n, Bitset(n));
  for (Elem a = 0; a < n; ++a) {
    Elem x = 0;
    do {
      mem[a].set(x);
      x = g.mul(x, a);
    } while (x != 0);
  }
  const auto orders = g.element_orders();
  std::vector<Subgroup> out;
  Bitset done(n);
  for (Elem a = 0; a < n; ++a) {
    if (done.test(a)) continue;
    // Mark the other generators of <a>; a is the smallest.
    mem[a].for_each([&](std::size_t x) {
      if (orders[x] == orders[a]) done.set(x);
    });
    bool maximal = true;
    for (Elem b = 0; b < n && maximal; ++b)
      if (orders[b] > orders[a] && mem[b].test(a)) maximal = false;
    if (maximal) {
      Subgroup s;
      for (auto x : mem[a].to_vector()) s.members.push_back(static_cast<Elem>(x));
      s.generator_hint = a;
      out.push_back(std::move(s));
    }
  }
  return out;
}

Group induced_group(const Group& g, const Subgroup& sub) {
  const std::size_t m = sub.members.size();
  std::vector<Elem> rank(g.order(), static_cast<Elem>(m));
  for (std::size_t i = 0; i < m; ++i) rank[sub.members[i]] = static_cast<Elem>(i);
  std::vector<Elem> table(m * m);
  std::vector<std::string> labels(m);
  for (std::size_t i = 0; i < m; ++i) {
    labels[i] = g.label(sub.members[i]);
    for (std::size_t j = 0; j < m; ++j) {
      const Elem r = rank[g.mul(sub.members[i], sub.members[j])];
      if (r == m) fail(ErrorKind::Domain, "induced_group: member set is not closed");
      table[i * m + j] = r;
    }
  }
  Limits limits;
  limits.max_order = std::max(limits.max_order, m);
  return Group::from_table(g.name() + "[" + std::to_string(m) + "]", m, std::move(table),
                           std::move(labels), {}, limits);
}

}  // namespace pg
