#pragma once

// Finite groups as explicit, validated multiplication tables.

#include <cstddef>
#include <cstdint>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "pg/spec.hpp"

namespace pg {

using Elem = std::uint32_t;

// Size caps. These are configuration, not constants of the theory.
struct Limits {
  std::size_t max_order = 10000;
  unsigned max_permutation_degree = 7;
  std::size_t max_elem_abelian_order = 4096;
  // Above this order associativity is checked on a generating set only.
  std::size_t exhaustive_associativity_max = 512;
};

struct Subgroup {
  std::vector<Elem> members;  // ascending, members[0] == 0
  std::optional<Elem> generator_hint;

  std::size_t size() const noexcept { return members.size(); }
  bool contains(Elem e) const;
  bool operator==(const Subgroup& o) const { return members == o.members; }
};

class Group {
 public:
  // Where a group came from. Builders fill this in; claims about direct
  // products and named families read it back.
  struct Provenance {
    std::optional<GroupSpec> spec;
    std::shared_ptr<const Group> left;   // set for direct products
    std::shared_ptr<const Group> right;
  };

  /// Validates the Cayley table (row-major, n*n) and re-indexes so that the
  /// identity is element 0. Throws a validation error naming the failed axiom.
  static Group from_table(std::string name, std::size_t n, std::vector<Elem> table,
                          std::vector<std::string> labels, Provenance provenance = {},
                          const Limits& limits = {});

  const std::string& name() const noexcept { return name_; }
  std::size_t order() const noexcept { return n_; }
  static constexpr Elem identity() noexcept { return 0; }

  /// Range-checked product.
  Elem multiply(Elem a, Elem b) const;
  Elem mul(Elem a, Elem b) const noexcept { return table_[std::size_t{a} * n_ + b]; }
  std::span<const Elem> row(Elem a) const noexcept { return {table_.data() + std::size_t{a} * n_, n_}; }
  std::span<const Elem> table() const noexcept { return table_; }

  Elem inverse(Elem a) const;
  std::uint64_t element_order(Elem a) const;
  std::span<const std::uint64_t> element_orders() const noexcept { return orders_; }
  Elem power(Elem a, std::int64_t k) const;

  const std::string& label(Elem a) const;
  std::span<const std::string> labels() const noexcept { return labels_; }

  const Provenance& provenance() const noexcept { return provenance_; }

  // Field-for-field: name, table and labels (the rest is derived).
  bool operator==(const Group& o) const {
    return name_ == o.name_ && n_ == o.n_ && table_ == o.table_ && labels_ == o.labels_;
  }

 private:
  Group() = default;
  void check_range(Elem a) const;

  std::string name_;
  std::size_t n_ = 0;
  std::vector<Elem> table_;
  std::vector<Elem> inverse_;
  std::vector<std::uint64_t> orders_;
  std::vector<std::string> labels_;
  Provenance provenance_;
};

using GroupPtr = std::shared_ptr<const Group>;

// ---- families ---------------------------------------------------------------

Group make_cyclic(std::uint64_t n, const Limits& limits = {});
/// Dihedral group of order 2n (symmetries of the n-gon), n >= 3.
Group make_dihedral(std::uint64_t n, const Limits& limits = {});
/// Permutations of degree n in lexicographic order; composition applies the
/// right factor first.
Group make_symmetric(std::uint64_t n, const Limits& limits = {});
Group make_alternating(std::uint64_t n, const Limits& limits = {});
/// <a, b | a^2n = 1, b^2 = a^n, b^-1 a b = a^-1>, order 4n, n >= 2.
/// Element a^i b^j has index j*2n + i.
Group make_dicyclic(std::uint64_t n, const Limits& limits = {});
/// (Z_p)^k, p prime.
Group make_elem_abelian(std::uint64_t p, std::uint64_t k, const Limits& limits = {});

/// Pair (g, h) has index g*|H| + h. Throws a resource error above limits.max_order.
Group direct_product(const GroupPtr& g, const GroupPtr& h, const Limits& limits = {});

/// Products are built as left folds of binary direct products.
GroupPtr build_group(const GroupSpec& spec, const Limits& limits = {});

/// The subgroup as a group in its own right, elements renumbered by rank in
/// `sub.members`.
Group induced_group(const Group& g, const Subgroup& sub);

// ---- structure --------------------------------------------------------------

Subgroup cyclic_subgroup(const Group& g, Elem a);
std::uint64_t exponent(const Group& g);
/// p when |G| = p^k, k >= 1; nullopt otherwise (including the trivial group).
std::optional<std::uint64_t> is_p_group(const Group& g);
/// True iff for every prime p dividing |G| the p-elements are closed under
/// multiplication, i.e. every Sylow subgroup is normal.
bool is_nilpotent(const Group& g);
/// All elements of p-power order. Domain error unless the group is nilpotent.
Subgroup sylow_subgroup(const Group& g, std::uint64_t p);
bool is_cyclic(const Group& g);
/// 2-group of order >= 8, not cyclic, with a single involution.
bool is_generalized_quaternion(const Group& g);
std::uint64_t count_order_p_subgroups(const Group& g, std::uint64_t p);
/// Cyclic subgroups maximal under inclusion, sorted by their smallest generator.
std::vector<Subgroup> maximal_cyclic_subgroups(const Group& g);

// ---- Cayley-table JSON ------------------------------------------------------

std::string group_to_json(const Group& g);
Group group_from_json(const std::string& text, const Limits& limits = {});
void save_group(const Group& g, const std::string& path);
Group load_group(const std::string& path, const Limits& limits = {});

}  // namespace pg
