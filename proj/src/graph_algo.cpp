#include "pg/graph_algo.hpp"

#include <algorithm>
#include <string>
#include <thread>

#include "pg/error.hpp"

namespace pg {

namespace {

void require_undirected(const Graph& g, const char* who) {
  if (g.directed()) fail(ErrorKind::Usage, std::string(who) + ": expects an undirected graph");
}

constexpr std::size_t kUnset = static_cast<std::size_t>(-1);

}  // namespace

ComponentPartition connected_components(const Graph& g) {
  require_undirected(g, "connected_components");
  const std::size_t n = g.size();
  ComponentPartition cp;
  cp.component_id.assign(n, kUnset);
  std::vector<std::size_t> stack;
  for (std::size_t s = 0; s < n; ++s) {
    if (cp.component_id[s] != kUnset) continue;
    const std::size_t id = cp.count++;
    cp.sizes.push_back(0);
    cp.component_id[s] = id;
    stack.push_back(s);
    while (!stack.empty()) {
      const std::size_t u = stack.back();
      stack.pop_back();
      ++cp.sizes[id];
      g.row(u).for_each([&](std::size_t v) {
        if (cp.component_id[v] == kUnset) {
          cp.component_id[v] = id;
          stack.push_back(v);
        }
      });
    }
  }
  return cp;
}

bool is_connected(const Graph& g) { return g.size() <= 1 || connected_components(g).count == 1; }

namespace {

// Distances from `source` into `dist` (kUnset = unreachable); returns the eccentricity.
std::size_t bfs(const std::vector<std::vector<std::uint32_t>>& adj, std::size_t source,
                std::vector<std::size_t>& dist, std::vector<std::uint32_t>& queue) {
  std::fill(dist.begin(), dist.end(), kUnset);
  queue.clear();
  dist[source] = 0;
  queue.push_back(static_cast<std::uint32_t>(source));
  std::size_t ecc = 0;
  for (std::size_t head = 0; head < queue.size(); ++head) {
    const auto u = queue[head];
    ecc = dist[u];
    for (auto v : adj[u])
      if (dist[v] == kUnset) {
        dist[v] = dist[u] + 1;
        queue.push_back(v);
      }
  }
  return ecc;
}

}  // namespace

std::vector<std::optional<std::size_t>> bfs_distances(const Graph& g, std::size_t source) {
  require_undirected(g, "bfs_distances");
  if (source >= g.size()) fail(ErrorKind::Usage, "bfs_distances: vertex out of range");
  std::vector<std::size_t> dist(g.size());
  std::vector<std::uint32_t> queue;
  bfs(g.adjacency_lists(), source, dist, queue);
  std::vector<std::optional<std::size_t>> out(g.size());
  for (std::size_t v = 0; v < g.size(); ++v)
    if (dist[v] != kUnset) out[v] = dist[v];
  return out;
}

std::optional<std::size_t> distance(const Graph& g, std::size_t u, std::size_t v) {
  if (v >= g.size()) fail(ErrorKind::Usage, "distance: vertex out of range");
  return bfs_distances(g, u)[v];
}

DiameterResult diameter(const Graph& g, unsigned workers) {
  require_undirected(g, "diameter");
  const std::size_t n = g.size();
  DiameterResult r;
  r.eccentricity.assign(n, 0);
  if (n <= 1) return r;

  const auto adj = g.adjacency_lists();
  auto run = [&](std::size_t first, std::size_t stride) {
    std::vector<std::size_t> dist(n);
    std::vector<std::uint32_t> queue;
    for (std::size_t s = first; s < n; s += stride) r.eccentricity[s] = bfs(adj, s, dist, queue);
  };
  workers = std::max(1u, std::min<unsigned>(workers, static_cast<unsigned>(n)));
  if (workers == 1) {
    run(0, 1);
  } else {
    std::vector<std::jthread> pool;
    for (unsigned w = 0; w < workers; ++w) pool.emplace_back(run, w, workers);
  }

  if (!is_connected(g)) {
    r.tag = DiameterResult::Tag::Disconnected;
    return r;
  }
  r.value = *std::max_element(r.eccentricity.begin(), r.eccentricity.end());
  return r;
}

// ---- cliques ----------------------------------------------------------------

namespace {

class MaxCliqueSolver {
 public:
  explicit MaxCliqueSolver(const Graph& g) : g_(g) {}

  std::size_t solve() {
    if (g_.size() == 0) return 0;
    Bitset all(g_.size());
    all.set_all();
    expand(0, all);
    return best_;
  }

 private:
  // Greedy sequential colouring of P; vertices come out grouped by colour
  // with non-decreasing colour numbers, which bound the clique size.
  void colour(const Bitset& p, std::vector<std::size_t>& order, std::vector<std::size_t>& bound) const {
    Bitset uncoloured = p;
    std::size_t c = 0;
    while (uncoloured.any()) {
      ++c;
      Bitset q = uncoloured;
      for (std::size_t v = q.find_first(); v != Bitset::npos; v = q.find_first()) {
        uncoloured.reset(v);
        q.reset(v);
        q.subtract(g_.row(v));
        order.push_back(v);
        bound.push_back(c);
      }
    }
  }

  void expand(std::size_t depth, Bitset p) {
    std::vector<std::size_t> order, bound;
    colour(p, order, bound);
    for (std::size_t i = order.size(); i-- > 0;) {
      if (depth + bound[i] <= best_) return;
      const std::size_t v = order[i];
      Bitset next = p & g_.row(v);
      if (next.none())
        best_ = std::max(best_, depth + 1);
      else
        expand(depth + 1, std::move(next));
      p.reset(v);
    }
  }

  const Graph& g_;
  std::size_t best_ = 0;
};

class BronKerbosch {
 public:
  BronKerbosch(const Graph& g, std::size_t limit) : g_(g), limit_(limit) {}

  MaximalCliques run() {
    Bitset p(g_.size()), x(g_.size());
    p.set_all();
    if (g_.size() > 0) recurse(p, x);
    return std::move(out_);
  }

 private:
  void recurse(Bitset p, Bitset x) {
    if (out_.truncated) return;
    if (p.none()) {
      if (x.none()) {
        if (out_.cliques.size() == limit_) {
          out_.truncated = true;
          return;
        }
        out_.cliques.push_back(r_);
      }
      return;
    }
    // Pivot maximizing |P ∩ N(u)|, smallest index on ties.
    std::size_t pivot = Bitset::npos, best = 0;
    const Bitset px = p | x;
    px.for_each([&](std::size_t u) {
      const std::size_t c = (p & g_.row(u)).count();
      if (pivot == Bitset::npos || c > best) {
        pivot = u;
        best = c;
      }
    });
    Bitset candidates = p;
    candidates.subtract(g_.row(pivot));
    for (auto v : candidates.to_vector()) {
      r_.push_back(v);
      recurse(p & g_.row(v), x & g_.row(v));
      r_.pop_back();
      if (out_.truncated) return;
      p.reset(v);
      x.set(v);
    }
  }

  const Graph& g_;
  std::size_t limit_;
  std::vector<std::size_t> r_;
  MaximalCliques out_;
};

}  // namespace

std::size_t clique_number_exact(const Graph& g, std::size_t vertex_cap) {
  require_undirected(g, "clique_number_exact");
  if (g.size() > vertex_cap)
    fail(ErrorKind::Resource, "clique_number_exact: " + std::to_string(g.size()) +
                                  " vertices exceeds the solver cap of " + std::to_string(vertex_cap) +
                                  "; use the closed-form weight formula instead");
  return MaxCliqueSolver(g).solve();
}

MaximalCliques maximal_cliques(const Graph& g, std::size_t limit) {
  require_undirected(g, "maximal_cliques");
  auto result = BronKerbosch(g, limit).run();
  for (auto& c : result.cliques) std::sort(c.begin(), c.end());
  std::sort(result.cliques.begin(), result.cliques.end());
  return result;
}

bool is_complete(const Graph& g) {
  require_undirected(g, "is_complete");
  return g.edge_count() * 2 == g.size() * (g.size() ? g.size() - 1 : 0);
}

}  // namespace pg
