#include <algorithm>
#include <map>
#include <numeric>

#include "pg/divisor_weight.hpp"
#include "pg/error.hpp"
#include "pg/group.hpp"

namespace pg {

namespace {

void require(bool ok, const std::string& what) {
  if (!ok) fail(ErrorKind::Usage, what);
}

void check_order_cap(std::uint64_t order, const Limits& limits, const std::string& name) {
  if (order > limits.max_order)
    fail(ErrorKind::Resource, name + " has order " + std::to_string(order) + ", above the cap of " +
                                  std::to_string(limits.max_order));
}

std::string pow_label(const char* sym, std::uint64_t k) {
  if (k == 0) return "";
  if (k == 1) return sym;
  return std::string(sym) + "^" + std::to_string(k);
}

Group::Provenance atom_provenance(GroupSpec spec) { return {std::move(spec), nullptr, nullptr}; }

std::string cycle_notation(const std::vector<unsigned>& perm) {
  std::string out;
  std::vector<bool> seen(perm.size());
  for (unsigned s = 0; s < perm.size(); ++s) {
    if (seen[s] || perm[s] == s) continue;
    out += "(";
    for (unsigned x = s; !seen[x]; x = perm[x]) {
      seen[x] = true;
      if (x != s) out += " ";
      out += std::to_string(x + 1);
    }
    out += ")";
  }
  return out.empty() ? "()" : out;
}

bool is_even(const std::vector<unsigned>& perm) {
  unsigned inversions = 0;
  for (std::size_t i = 0; i < perm.size(); ++i)
    for (std::size_t j = i + 1; j < perm.size(); ++j) inversions += perm[i] > perm[j];
  return inversions % 2 == 0;
}

Group make_permutation_group(std::uint64_t degree, bool even_only, const Limits& limits,
                             GroupSpec spec) {
  const auto name = render_spec(spec);
  require(degree >= 1 && degree <= limits.max_permutation_degree,
          name + ": degree must lie in [1, " + std::to_string(limits.max_permutation_degree) + "]");
  check_order_cap(spec_order(spec), limits, name);
  std::vector<std::vector<unsigned>> perms;
  std::vector<unsigned> p(degree);
  std::iota(p.begin(), p.end(), 0u);
  do {
    if (!even_only || is_even(p)) perms.push_back(p);
  } while (std::next_permutation(p.begin(), p.end()));

  std::map<std::vector<unsigned>, Elem> index;
  for (std::size_t i = 0; i < perms.size(); ++i) index.emplace(perms[i], static_cast<Elem>(i));
  const std::size_t n = perms.size();
  std::vector<Elem> table(n * n);
  std::vector<unsigned> c(degree);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      for (unsigned x = 0; x < degree; ++x) c[x] = perms[i][perms[j][x]];
      table[i * n + j] = index.at(c);
    }
  std::vector<std::string> labels;
  for (const auto& q : perms) labels.push_back(cycle_notation(q));
  return Group::from_table(name, n, std::move(table), std::move(labels),
                           atom_provenance(std::move(spec)), limits);
}

}  // namespace

Group make_cyclic(std::uint64_t n, const Limits& limits) {
  require(n >= 1, "C<n>: n must be >= 1");
  auto spec = GroupSpec::cyclic(n);
  check_order_cap(n, limits, render_spec(spec));
  std::vector<Elem> table(n * n);
  std::vector<std::string> labels(n);
  for (std::size_t i = 0; i < n; ++i) {
    labels[i] = i == 0 ? "1" : pow_label("a", i);
    for (std::size_t j = 0; j < n; ++j) table[i * n + j] = static_cast<Elem>((i + j) % n);
  }
  return Group::from_table(render_spec(spec), n, std::move(table), std::move(labels),
                           atom_provenance(spec), limits);
}

Group make_dihedral(std::uint64_t n, const Limits& limits) {
  require(n >= 3, "D<n>: n must be >= 3");
  auto spec = GroupSpec::dihedral(n);
  check_order_cap(2 * n, limits, render_spec(spec));
  const std::size_t m = 2 * n;
  // r^i s^f at index f*n + i; (r^i s^f)(r^j s^g) = r^(i + (-1)^f j) s^(f+g).
  std::vector<Elem> table(m * m);
  std::vector<std::string> labels(m);
  for (std::size_t x = 0; x < m; ++x) {
    const std::size_t i = x % n, f = x / n;
    labels[x] = x == 0 ? "1" : pow_label("r", i) + (f ? "s" : "");
    for (std::size_t y = 0; y < m; ++y) {
      const std::size_t j = y % n, g = y / n;
      const std::size_t rot = f ? (i + n - j) % n : (i + j) % n;
      table[x * m + y] = static_cast<Elem>(((f + g) % 2) * n + rot);
    }
  }
  return Group::from_table(render_spec(spec), m, std::move(table), std::move(labels),
                           atom_provenance(spec), limits);
}

Group make_symmetric(std::uint64_t n, const Limits& limits) {
  return make_permutation_group(n, false, limits, GroupSpec::symmetric(n));
}

Group make_alternating(std::uint64_t n, const Limits& limits) {
  return make_permutation_group(n, true, limits, GroupSpec::alternating(n));
}

Group make_dicyclic(std::uint64_t n, const Limits& limits) {
  require(n >= 2, "Dic<n>: n must be >= 2");
  auto spec = GroupSpec::dicyclic(n);
  check_order_cap(4 * n, limits, render_spec(spec));
  const std::size_t h = 2 * n, m = 4 * n;
  // a^i b^j at index j*2n + i, with b a = a^-1 b and b^2 = a^n.
  std::vector<Elem> table(m * m);
  std::vector<std::string> labels(m);
  for (std::size_t x = 0; x < m; ++x) {
    const std::size_t i = x % h, j = x / h;
    labels[x] = x == 0 ? "1" : pow_label("a", i) + (j ? "b" : "");
    for (std::size_t y = 0; y < m; ++y) {
      const std::size_t k = y % h, l = y / h;
      std::size_t e = j ? (i + h - k) % h : (i + k) % h;
      std::size_t bs = j + l;
      if (bs == 2) {
        e = (e + n) % h;
        bs = 0;
      }
      table[x * m + y] = static_cast<Elem>(bs * h + e);
    }
  }
  return Group::from_table(render_spec(spec), m, std::move(table), std::move(labels),
                           atom_provenance(spec), limits);
}

Group make_elem_abelian(std::uint64_t p, std::uint64_t k, const Limits& limits) {
  require(is_prime(p), "E<p>^<k>: p must be prime");
  require(k >= 1, "E<p>^<k>: k must be >= 1");
  auto spec = GroupSpec::elem_abelian(p, k);
  const std::uint64_t n = spec_order(spec);
  require(n <= limits.max_elem_abelian_order,
          "E<p>^<k>: p^k must be <= " + std::to_string(limits.max_elem_abelian_order));
  check_order_cap(n, limits, render_spec(spec));
  std::vector<Elem> table(n * n);
  std::vector<std::string> labels(n);
  for (std::uint64_t x = 0; x < n; ++x) {
    std::string lab = "(";
    for (std::uint64_t t = 0, v = x; t < k; ++t, v /= p) lab += (t ? "," : "") + std::to_string(v % p);
    labels[x] = lab + ")";
    for (std::uint64_t y = 0; y < n; ++y) {
      std::uint64_t sum = 0, place = 1;
      for (std::uint64_t t = 0, u = x, v = y; t < k; ++t, u /= p, v /= p, place *= p)
        sum += ((u % p + v % p) % p) * place;
      table[x * n + y] = static_cast<Elem>(sum);
    }
  }
  return Group::from_table(render_spec(spec), n, std::move(table), std::move(labels),
                           atom_provenance(spec), limits);
}

Group direct_product(const GroupPtr& g, const GroupPtr& h, const Limits& limits) {
  const std::size_t ng = g->order(), nh = h->order();
  const std::string name = g->name() + "x" + h->name();
  if (ng * nh > limits.max_order)
    fail(ErrorKind::Resource, name + " has order " + std::to_string(ng * nh) +
                                  ", above the cap of " + std::to_string(limits.max_order));
  const std::size_t n = ng * nh;
  std::vector<Elem> table(n * n);
  std::vector<std::string> labels(n);
  for (std::size_t a = 0; a < n; ++a) {
    const auto ga = static_cast<Elem>(a / nh), ha = static_cast<Elem>(a % nh);
    labels[a] = "(" + g->label(ga) + "," + h->label(ha) + ")";
    for (std::size_t b = 0; b < n; ++b) {
      const auto gb = static_cast<Elem>(b / nh), hb = static_cast<Elem>(b % nh);
      table[a * n + b] = static_cast<Elem>(g->mul(ga, gb) * nh + h->mul(ha, hb));
    }
  }

  Group::Provenance prov{std::nullopt, g, h};
  const auto& gs = g->provenance().spec;
  const auto& hs = h->provenance().spec;
  if (gs && hs) {
    std::vector<GroupSpec> factors;
    for (const auto* s : {&*gs, &*hs}) {
      if (s->is_product())
        factors.insert(factors.end(), s->factors.begin(), s->factors.end());
      else
        factors.push_back(*s);
    }
    prov.spec = GroupSpec::product(std::move(factors));
  }
  Group out = Group::from_table(name, n, std::move(table), std::move(labels), std::move(prov), limits);

  for (std::size_t a = 0; a < n; ++a) {
    const auto expected = std::lcm(g->element_order(static_cast<Elem>(a / nh)),
                                   h->element_order(static_cast<Elem>(a % nh)));
    if (out.element_order(static_cast<Elem>(a)) != expected)
      throw std::logic_error("direct_product: order of a pair is not the lcm of its coordinates");
  }
  return out;
}

GroupPtr build_group(const GroupSpec& spec, const Limits& limits) {
  const std::uint64_t order = spec_order(spec);
  if (order > limits.max_order)
    fail(ErrorKind::Resource, render_spec(spec) + " has order " + std::to_string(order) +
                                  ", above the cap of " + std::to_string(limits.max_order));
  if (spec.is_product()) {
    if (spec.factors.size() < 2) fail(ErrorKind::Usage, "a product needs at least two factors");
    GroupPtr acc = build_group(spec.factors[0], limits);
    for (std::size_t i = 1; i < spec.factors.size(); ++i)
      acc = std::make_shared<const Group>(direct_product(acc, build_group(spec.factors[i], limits), limits));
    return acc;
  }
  const auto& p = spec.atom.params;
  const auto param = [&](std::size_t i) {
    if (i >= p.size()) fail(ErrorKind::Usage, "missing family parameter");
    return p[i];
  };
  switch (spec.atom.family) {
    case Family::Cyclic: return std::make_shared<const Group>(make_cyclic(param(0), limits));
    case Family::Dihedral: return std::make_shared<const Group>(make_dihedral(param(0), limits));
    case Family::Symmetric: return std::make_shared<const Group>(make_symmetric(param(0), limits));
    case Family::Alternating: return std::make_shared<const Group>(make_alternating(param(0), limits));
    case Family::Dicyclic: return std::make_shared<const Group>(make_dicyclic(param(0), limits));
    case Family::ElemAbelian:
      return std::make_shared<const Group>(make_elem_abelian(param(0), param(1), limits));
  }
  fail(ErrorKind::Usage, "unknown family");
}

}  // namespace pg
