#ifndef POLYZOO_MATCHING_HPP
#define POLYZOO_MATCHING_HPP

#include <unordered_map>
#include <vector>

#include "polyzoo/canonical.hpp"
#include "polyzoo/core.hpp"
#include "polyzoo/graph.hpp"
#include "polyzoo/poly.hpp"

namespace polyzoo {

namespace detail {

// Loops never belong to a matching and isolated vertices never matter, so
// both are stripped before memoizing.
inline Graph matching_core(const Graph& g) {
  std::vector<Edge> plain;
  for (const auto& e : g.edges())
    if (e.u != e.v) plain.push_back(e);
  Graph h(g.order(), std::move(plain));
  std::vector<Vertex> keep;
  std::vector<std::size_t> deg(h.order(), 0);
  for (const auto& e : h.edges()) ++deg[e.u], ++deg[e.v];
  for (Vertex v = 0; v < h.order(); ++v)
    if (deg[v] > 0) keep.push_back(v);
  return keep.size() == h.order() ? h : induced_subgraph(h, keep);
}

class MatchingRecursion {
 public:
  explicit MatchingRecursion(const Budget& budget) : nodes_(budget.max_nodes, "matching recursion") {}

  UniPoly solve(const Graph& input) {
    nodes_.tick();
    Graph g = matching_core(input);
    if (g.size() == 0) return UniPoly::constant(1);
    auto comps = connected_components(g);
    if (comps.size() > 1) {
      UniPoly product = UniPoly::constant(1);
      for (const auto& c : comps) product *= solve(induced_subgraph(g, c));
      return product;
    }
    auto key = canonical_key(g);
    if (auto it = memo_.find(key); it != memo_.end()) return it->second;

    // m(G) = m(G - e) + X m(G - u - v)
    const Edge e = g.edges().front();
    const Vertex ends[] = {e.u, e.v};
    UniPoly result = solve(delete_edge(g, {e.u, e.v, 0})) + UniPoly::monomial(1) * solve(remove_vertices(g, ends));
    memo_.emplace(std::move(key), result);
    return result;
  }

 private:
  NodeCounter nodes_;
  std::unordered_map<CanonicalKey, UniPoly, CanonicalKeyHash> memo_;
};

}  // namespace detail

/// Matching generating polynomial sum_k m_k X^k, m_k = number of k-edge matchings.
/// Parallel edges count as distinct edges; loops are ignored.
inline UniPoly matching_gen(const Graph& g, const Budget& budget = {}) {
  return detail::MatchingRecursion(budget).solve(g);
}

/// Exhaustive count of sets of k pairwise disjoint non-loop edge occurrences.
inline Integer count_k_matchings(const Graph& g, std::size_t k, const Budget& budget = {}) {
  std::vector<Edge> edges;
  for (const auto& e : g.edges())
    if (e.u != e.v) edges.push_back(e);
  NodeCounter nodes(budget.max_nodes, "matching enumeration");
  std::vector<bool> used(g.order(), false);
  Integer count = 0;
  auto choose = [&](auto&& self, std::size_t from, std::size_t remaining) -> void {
    nodes.tick();
    if (remaining == 0) {
      ++count;
      return;
    }
    for (std::size_t i = from; i + remaining <= edges.size(); ++i) {
      const auto& e = edges[i];
      if (used[e.u] || used[e.v]) continue;
      used[e.u] = used[e.v] = true;
      self(self, i + 1, remaining - 1);
      used[e.u] = used[e.v] = false;
    }
  };
  choose(choose, 0, k);
  return count;
}

/// Defect form mu(G; x) = sum_k (-1)^k m_k x^(n-2k).
inline UniPoly matching_defect(const Graph& g, const Budget& budget = {}) {
  const auto gen = matching_gen(g, budget);
  const auto n = g.order();
  std::vector<Integer> c(n + 1, 0);
  const auto m = gen.coefficients();
  for (std::size_t k = 0; k < m.size(); ++k) c[n - 2 * k] = (k % 2 == 0) ? m[k] : Integer(-m[k]);
  return UniPoly(std::move(c));
}

}  // namespace polyzoo

#endif  // POLYZOO_MATCHING_HPP
