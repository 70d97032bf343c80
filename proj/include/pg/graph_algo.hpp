#pragma once

// Exact graph algorithms used as ground truth for the closed-form results.
// All functions take undirected graphs; a directed graph is a usage error.

#include <cstddef>
#include <optional>
#include <vector>

#include "pg/graph.hpp"

namespace pg {

inline constexpr std::size_t kDefaultCliqueVertexCap = 5000;

struct ComponentPartition {
  std::vector<std::size_t> component_id;  // dense, numbered by smallest member
  std::size_t count = 0;
  std::vector<std::size_t> sizes;
};

ComponentPartition connected_components(const Graph& g);
/// Graphs with <= 1 vertex are connected.
bool is_connected(const Graph& g);

/// BFS distances from `source`; unreachable vertices hold std::nullopt.
std::vector<std::optional<std::size_t>> bfs_distances(const Graph& g, std::size_t source);
std::optional<std::size_t> distance(const Graph& g, std::size_t u, std::size_t v);

struct DiameterResult {
  enum class Tag { Finite, Disconnected };
  Tag tag = Tag::Finite;
  std::size_t value = 0;                  // meaningful for Finite only
  std::vector<std::size_t> eccentricity;  // within each vertex's component

  bool is_finite() const noexcept { return tag == Tag::Finite; }
  bool is_finite(std::size_t d) const noexcept { return tag == Tag::Finite && value == d; }
  bool operator==(const DiameterResult&) const = default;
};

/// All-pairs BFS. `workers` > 1 splits sources across threads; the result is
/// identical to the sequential one.
DiameterResult diameter(const Graph& g, unsigned workers = 1);

/// Branch and bound with a greedy-colouring bound. Throws a resource error
/// above `vertex_cap` vertices.
std::size_t clique_number_exact(const Graph& g, std::size_t vertex_cap = kDefaultCliqueVertexCap);

struct MaximalCliques {
  std::vector<std::vector<std::size_t>> cliques;  // each ascending; list lexicographic
  bool truncated = false;                         // enumeration stopped at the limit
};

/// Pivoted Bron–Kerbosch.
MaximalCliques maximal_cliques(const Graph& g, std::size_t limit);

bool is_complete(const Graph& g);

}  // namespace pg
