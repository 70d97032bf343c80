#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

namespace pg {

enum class Family { Cyclic, Dihedral, Symmetric, Alternating, Dicyclic, ElemAbelian };

// Expression tree naming a group built from the library's families.
//
//   atom    := C<n> | Z<n> | D<n> | S<n> | A<n> | Dic<n> | Q<2^k> | E<p>^<k>
//   product := atom ("x" atom)+
//
// Case-insensitive, no whitespace. Z is a synonym of C. Q<m> is the
// generalized quaternion group of order m (m a power of two, m >= 8) and
// parses to Dic<m/4>. D<n> is the dihedral group of order 2n.
struct GroupSpec {
  struct Atom {
    Family family = Family::Cyclic;
    std::vector<std::uint64_t> params;  // ElemAbelian: {p, k}; otherwise {n}
    bool operator==(const Atom&) const = default;
  };

  Atom atom;
  std::vector<GroupSpec> factors;  // non-empty (>= 2) for a product

  bool is_product() const noexcept { return !factors.empty(); }
  bool operator==(const GroupSpec&) const = default;

  static GroupSpec cyclic(std::uint64_t n) { return {{Family::Cyclic, {n}}, {}}; }
  static GroupSpec dihedral(std::uint64_t n) { return {{Family::Dihedral, {n}}, {}}; }
  static GroupSpec symmetric(std::uint64_t n) { return {{Family::Symmetric, {n}}, {}}; }
  static GroupSpec alternating(std::uint64_t n) { return {{Family::Alternating, {n}}, {}}; }
  static GroupSpec dicyclic(std::uint64_t n) { return {{Family::Dicyclic, {n}}, {}}; }
  static GroupSpec elem_abelian(std::uint64_t p, std::uint64_t k) {
    return {{Family::ElemAbelian, {p, k}}, {}};
  }
  static GroupSpec product(std::vector<GroupSpec> factors) { return {{}, std::move(factors)}; }
};

/// Throws a usage error carrying the byte offset of the first bad character.
GroupSpec parse_spec(std::string_view text);
/// Canonical text; parse_spec(render_spec(s)) == s.
std::string render_spec(const GroupSpec& spec);

/// Group order the spec denotes, without building it. Saturates at UINT64_MAX.
std::uint64_t spec_order(const GroupSpec& spec);

}  // namespace pg
