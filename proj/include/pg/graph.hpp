#pragma once

#include <cstddef>
#include <cstdint>
#include <utility>
#include <vector>

#include "pg/bitset.hpp"

namespace pg {

// Simple graph on vertices 0..n-1 stored as bitset rows. Undirected graphs
// keep the rows symmetric; directed graphs store out-neighbours.
class Graph {
 public:
  Graph() = default;
  explicit Graph(std::size_t n, bool directed = false) : directed_(directed), rows_(n, Bitset(n)) {}

  std::size_t size() const noexcept { return rows_.size(); }
  bool directed() const noexcept { return directed_; }

  void add_edge(std::size_t u, std::size_t v) {
    rows_[u].set(v);
    if (!directed_) rows_[v].set(u);
  }
  bool adjacent(std::size_t u, std::size_t v) const { return rows_[u].test(v); }
  const Bitset& row(std::size_t u) const { return rows_[u]; }
  Bitset& mutable_row(std::size_t u) { return rows_[u]; }

  std::size_t degree(std::size_t u) const { return rows_[u].count(); }
  /// Undirected: number of edges. Directed: number of arcs.
  std::size_t edge_count() const {
    std::size_t c = 0;
    for (const auto& r : rows_) c += r.count();
    return directed_ ? c : c / 2;
  }
  /// Undirected: pairs u < v. Directed: arcs. Both lexicographic.
  std::vector<std::pair<std::size_t, std::size_t>> edges() const {
    std::vector<std::pair<std::size_t, std::size_t>> out;
    for (std::size_t u = 0; u < size(); ++u)
      rows_[u].for_each([&](std::size_t v) {
        if (directed_ || u < v) out.emplace_back(u, v);
      });
    return out;
  }
  std::vector<std::vector<std::uint32_t>> adjacency_lists() const {
    std::vector<std::vector<std::uint32_t>> out(size());
    for (std::size_t u = 0; u < size(); ++u)
      rows_[u].for_each([&](std::size_t v) { out[u].push_back(static_cast<std::uint32_t>(v)); });
    return out;
  }

  bool operator==(const Graph&) const = default;

 private:
  bool directed_ = false;
  std::vector<Bitset> rows_;
};

}  // namespace pg
