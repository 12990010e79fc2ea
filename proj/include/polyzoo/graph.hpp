#ifndef POLYZOO_GRAPH_HPP
#define POLYZOO_GRAPH_HPP

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <numeric>
#include <span>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace polyzoo {

using Vertex = std::uint32_t;

/// One edge occurrence, stored with u <= v. A loop has u == v.
struct Edge {
  Vertex u = 0;
  Vertex v = 0;

  friend auto operator<=>(const Edge&, const Edge&) = default;
};

/// Names one occurrence inside the parallel class {u, v}.
struct EdgeRef {
  Vertex u = 0;
  Vertex v = 0;
  std::size_t occurrence = 0;
};

/// Finite undirected multigraph on vertices 0..n-1 with loops allowed.
///
/// The edge multiset is kept sorted with every pair normalized to u <= v, so
/// two graphs with the same labelled structure compare equal.
class Graph {
 public:
  Graph() = default;

  explicit Graph(std::size_t n) : n_(n) {}

  Graph(std::size_t n, std::vector<Edge> edges) : n_(n), edges_(std::move(edges)) {
    for (auto& e : edges_) {
      if (e.u >= n_ || e.v >= n_) {
        throw std::invalid_argument("edge endpoint " + std::to_string(std::max(e.u, e.v)) +
                                    " out of range for " + std::to_string(n_) + " vertices");
      }
      if (e.u > e.v) std::swap(e.u, e.v);
    }
    std::sort(edges_.begin(), edges_.end());
  }

  std::size_t order() const noexcept { return n_; }
  /// Number of edge occurrences, counting multiplicity.
  std::size_t size() const noexcept { return edges_.size(); }
  std::span<const Edge> edges() const noexcept { return edges_; }

  std::size_t multiplicity(Vertex a, Vertex b) const {
    Edge key{std::min(a, b), std::max(a, b)};
    auto [lo, hi] = std::equal_range(edges_.begin(), edges_.end(), key);
    return static_cast<std::size_t>(hi - lo);
  }

  bool has_edge(Vertex a, Vertex b) const { return multiplicity(a, b) > 0; }

  bool has_loops() const {
    return std::any_of(edges_.begin(), edges_.end(), [](const Edge& e) { return e.u == e.v; });
  }

  bool is_simple() const {
    for (std::size_t i = 0; i < edges_.size(); ++i) {
      if (edges_[i].u == edges_[i].v) return false;
      if (i > 0 && edges_[i] == edges_[i - 1]) return false;
    }
    return true;
  }

  /// Degree with loops counted twice.
  std::size_t degree(Vertex x) const {
    std::size_t d = 0;
    for (const auto& e : edges_) d += (e.u == x) + (e.v == x);
    return d;
  }

  /// Neighbour lists without repetition; a loop lists the vertex itself.
  std::vector<std::vector<Vertex>> neighbours() const {
    std::vector<std::vector<Vertex>> adj(n_);
    for (std::size_t i = 0; i < edges_.size(); ++i) {
      const auto& e = edges_[i];
      if (i > 0 && e == edges_[i - 1]) continue;
      adj[e.u].push_back(e.v);
      if (e.u != e.v) adj[e.v].push_back(e.u);
    }
    for (auto& list : adj) std::sort(list.begin(), list.end());
    return adj;
  }

  /// Bit mask of neighbours per vertex (loops included). Requires n <= 64.
  std::vector<std::uint64_t> neighbour_masks() const {
    if (n_ > 64) throw std::length_error("neighbour masks need at most 64 vertices");
    std::vector<std::uint64_t> masks(n_, 0);
    for (const auto& e : edges_) {
      masks[e.u] |= std::uint64_t{1} << e.v;
      masks[e.v] |= std::uint64_t{1} << e.u;
    }
    return masks;
  }

  friend bool operator==(const Graph&, const Graph&) = default;

 private:
  std::size_t n_ = 0;
  std::vector<Edge> edges_;
};

// Named families.

inline Graph empty_graph(std::size_t n) { return Graph(n); }

inline Graph complete_graph(std::size_t n) {
  std::vector<Edge> edges;
  for (Vertex i = 0; i < n; ++i)
    for (Vertex j = i + 1; j < n; ++j) edges.push_back({i, j});
  return Graph(n, std::move(edges));
}

inline Graph path_graph(std::size_t n) {
  std::vector<Edge> edges;
  for (Vertex i = 0; i + 1 < n; ++i) edges.push_back({i, i + 1});
  return Graph(n, std::move(edges));
}

inline Graph cycle_graph(std::size_t n) {
  if (n < 3) throw std::invalid_argument("a simple cycle needs at least 3 vertices");
  std::vector<Edge> edges;
  for (Vertex i = 0; i + 1 < n; ++i) edges.push_back({i, i + 1});
  edges.push_back({0, static_cast<Vertex>(n - 1)});
  return Graph(n, std::move(edges));
}

inline Graph star_graph(std::size_t leaves) {
  std::vector<Edge> edges;
  for (Vertex i = 1; i <= leaves; ++i) edges.push_back({0, i});
  return Graph(leaves + 1, std::move(edges));
}

// Structural operations.

/// Removes one occurrence of the referenced edge; vertices are unchanged.
inline Graph delete_edge(const Graph& g, const EdgeRef& ref) {
  Edge key{std::min(ref.u, ref.v), std::max(ref.u, ref.v)};
  auto edges = std::vector<Edge>(g.edges().begin(), g.edges().end());
  auto [lo, hi] = std::equal_range(edges.begin(), edges.end(), key);
  if (static_cast<std::size_t>(hi - lo) <= ref.occurrence) {
    throw std::invalid_argument("edge {" + std::to_string(key.u) + "," + std::to_string(key.v) +
                                "} occurrence " + std::to_string(ref.occurrence) +
                                " does not exist");
  }
  edges.erase(lo);
  return Graph(g.order(), std::move(edges));
}

/// Merges the endpoints of a non-loop edge.
///
/// The merged vertex keeps index min(u,v) and every vertex above max(u,v)
/// shifts down by one. The contracted occurrence disappears; the remaining
/// parallel copies of the pair become loops on the merged vertex.
inline Graph contract_edge(const Graph& g, const EdgeRef& ref) {
  const Vertex lo_v = std::min(ref.u, ref.v);
  const Vertex hi_v = std::max(ref.u, ref.v);
  if (lo_v == hi_v) throw std::invalid_argument("cannot contract a loop");
  if (g.multiplicity(lo_v, hi_v) <= ref.occurrence) {
    throw std::invalid_argument("contracted edge does not exist");
  }
  auto rename = [&](Vertex x) -> Vertex {
    if (x == hi_v) return lo_v;
    return x > hi_v ? x - 1 : x;
  };
  std::vector<Edge> edges;
  edges.reserve(g.size() - 1);
  bool dropped = false;
  for (const auto& e : g.edges()) {
    if (!dropped && e.u == lo_v && e.v == hi_v) {
      dropped = true;
      continue;
    }
    edges.push_back({rename(e.u), rename(e.v)});
  }
  return Graph(g.order() - 1, std::move(edges));
}

/// Places g2 after g1, shifting the vertices of g2 by order(g1).
inline Graph disjoint_union(const Graph& g1, const Graph& g2) {
  std::vector<Edge> edges(g1.edges().begin(), g1.edges().end());
  const auto shift = static_cast<Vertex>(g1.order());
  for (const auto& e : g2.edges()) edges.push_back({e.u + shift, e.v + shift});
  return Graph(g1.order() + g2.order(), std::move(edges));
}

struct Simplified {
  Graph graph;
  bool had_loops = false;
};

/// Collapses parallel classes and drops loops.
inline Simplified simplify(const Graph& g) {
  std::vector<Edge> edges;
  bool loops = false;
  for (const auto& e : g.edges()) {
    if (e.u == e.v) {
      loops = true;
      continue;
    }
    if (!edges.empty() && edges.back() == e) continue;
    edges.push_back(e);
  }
  return {Graph(g.order(), std::move(edges)), loops};
}

/// Subgraph induced by `keep`, renumbered in the order given.
inline Graph induced_subgraph(const Graph& g, std::span<const Vertex> keep) {
  constexpr Vertex absent = ~Vertex{0};
  std::vector<Vertex> index(g.order(), absent);
  for (std::size_t i = 0; i < keep.size(); ++i) {
    if (keep[i] >= g.order()) throw std::invalid_argument("induced_subgraph: vertex out of range");
    if (index[keep[i]] != absent) throw std::invalid_argument("induced_subgraph: repeated vertex");
    index[keep[i]] = static_cast<Vertex>(i);
  }
  std::vector<Edge> edges;
  for (const auto& e : g.edges()) {
    if (index[e.u] != absent && index[e.v] != absent) edges.push_back({index[e.u], index[e.v]});
  }
  return Graph(keep.size(), std::move(edges));
}

/// Deletes the listed vertices together with their incident edges.
inline Graph remove_vertices(const Graph& g, std::span<const Vertex> drop) {
  std::vector<bool> gone(g.order(), false);
  for (auto x : drop) {
    if (x >= g.order()) throw std::invalid_argument("remove_vertices: vertex out of range");
    gone[x] = true;
  }
  std::vector<Vertex> keep;
  for (Vertex x = 0; x < g.order(); ++x)
    if (!gone[x]) keep.push_back(x);
  return induced_subgraph(g, keep);
}

/// Vertex x of g becomes perm[x].
inline Graph relabel(const Graph& g, std::span<const Vertex> perm) {
  if (perm.size() != g.order()) throw std::invalid_argument("relabel: permutation size mismatch");
  std::vector<bool> seen(g.order(), false);
  for (auto p : perm) {
    if (p >= g.order() || seen[p]) throw std::invalid_argument("relabel: not a permutation");
    seen[p] = true;
  }
  std::vector<Edge> edges;
  edges.reserve(g.size());
  for (const auto& e : g.edges()) edges.push_back({perm[e.u], perm[e.v]});
  return Graph(g.order(), std::move(edges));
}

/// Connected components as sorted vertex lists, ordered by smallest vertex.
inline std::vector<std::vector<Vertex>> connected_components(const Graph& g) {
  std::vector<Vertex> parent(g.order());
  std::iota(parent.begin(), parent.end(), Vertex{0});
  auto find = [&](Vertex x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  for (const auto& e : g.edges()) {
    auto a = find(e.u), b = find(e.v);
    if (a != b) parent[std::max(a, b)] = std::min(a, b);
  }
  std::vector<std::vector<Vertex>> out;
  std::vector<std::size_t> slot(g.order(), 0);
  for (Vertex x = 0; x < g.order(); ++x) {
    auto r = find(x);
    if (r == x) {
      slot[x] = out.size();
      out.emplace_back();
    }
    out[slot[r]].push_back(x);
  }
  return out;
}

inline std::size_t component_count(const Graph& g) { return connected_components(g).size(); }

/// Rank of the cycle matroid: n minus the number of components.
inline std::size_t graph_rank(const Graph& g) { return g.order() - component_count(g); }

/// True when removing this (non-loop, single-copy) edge disconnects its endpoints.
inline bool is_bridge(const Graph& g, const Edge& e) {
  if (e.u == e.v || g.multiplicity(e.u, e.v) > 1) return false;
  const auto adj = g.neighbours();
  std::vector<bool> seen(g.order(), false);
  std::vector<Vertex> stack{e.u};
  seen[e.u] = true;
  while (!stack.empty()) {
    auto x = stack.back();
    stack.pop_back();
    for (auto y : adj[x]) {
      if ((x == e.u && y == e.v) || (x == e.v && y == e.u)) continue;
      if (!seen[y]) {
        if (y == e.v) return false;
        seen[y] = true;
        stack.push_back(y);
      }
    }
  }
  return true;
}

}  // namespace polyzoo

#endif  // POLYZOO_GRAPH_HPP
