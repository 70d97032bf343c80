#pragma once

// Power graphs of finite groups: x ~ y iff one of them is a positive power of
// the other. The reduced variant drops the identity.

#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "pg/bitset.hpp"
#include "pg/graph.hpp"
#include "pg/group.hpp"

namespace pg {

enum class Variant {
  Reduced,   // S = G \ {1}
  Full,      // S = G
  Custom,    // caller-chosen S
  Directed,  // S = G, arc x -> y iff y = x^m for some m >= 1, x != y
};

std::string_view to_string(Variant v);
Variant parse_variant(std::string_view text);

struct PowerGraph {
  GroupPtr group;
  Variant variant = Variant::Reduced;
  std::vector<Elem> vertices;  // ascending element ids; position i holds vertices[i]
  Graph graph;

  std::size_t size() const noexcept { return vertices.size(); }
  std::optional<std::size_t> position_of(Elem e) const;
};

/// membership[x] is the bitset of <x> over all group elements.
std::vector<Bitset> cyclic_membership(const Group& g);

PowerGraph build_power_graph(const GroupPtr& g, Variant variant, std::span<const Elem> custom = {});

/// N(v) ∪ {v}, as positions. For the directed variant arcs in both directions count.
Bitset closed_neighborhood(const PowerGraph& pg, std::size_t v);

// Graph on the prime-order cyclic subgroups. P and Q are linked when some z
// of order |P|·|Q| has P, Q <= <z>; Γ1(G) is connected iff this graph is.
struct LinkageNode {
  Elem generator;       // smallest generator of the subgroup
  std::uint64_t prime;  // subgroup order
  bool operator==(const LinkageNode&) const = default;
};
struct LinkageEdge {
  std::size_t a, b;  // node positions, a < b
  Elem witness;      // smallest z realizing the link
  bool operator==(const LinkageEdge&) const = default;
};
struct LinkageGraph {
  std::vector<LinkageNode> nodes;  // ascending by generator
  std::vector<LinkageEdge> edges;  // lexicographic by (a, b)
  bool connected() const;          // true for <= 1 node
};

LinkageGraph build_linkage_graph(const Group& g);

enum class ExportFormat { Dot, Edgelist, Json };
ExportFormat parse_export_format(std::string_view text);
std::string export_graph(const PowerGraph& pg, ExportFormat format);

}  // namespace pg
