#ifndef POLYZOO_CHROMATIC_HPP
#define POLYZOO_CHROMATIC_HPP

#include <cstdint>
#include <unordered_map>
#include <vector>

#include "polyzoo/canonical.hpp"
#include "polyzoo/core.hpp"
#include "polyzoo/graph.hpp"
#include "polyzoo/poly.hpp"

namespace polyzoo {

/// Brute force over all k^n maps V -> [k]; counts those with no monochromatic
/// edge. Any loop forces 0.
inline Integer count_proper_colorings(const Graph& g, unsigned k, const Budget& budget = {}) {
  const auto n = g.order();
  if (saturating_power(k, n) > budget.max_nodes) {
    throw BudgetExceeded("budget exceeded: " + std::to_string(k) + "^" + std::to_string(n) +
                         " colorings to enumerate");
  }
  if (n == 0) return 1;
  if (k == 0) return 0;
  std::vector<unsigned> f(n, 0);
  Integer count = 0;
  while (true) {
    bool proper = true;
    for (const auto& e : g.edges()) {
      if (f[e.u] == f[e.v]) {
        proper = false;
        break;
      }
    }
    if (proper) ++count;
    std::size_t i = 0;
    while (i < n && ++f[i] == k) f[i++] = 0;
    if (i == n) break;
  }
  return count;
}

namespace detail {

inline UniPoly k_power(std::size_t n) { return UniPoly::monomial(n); }

// Deletion-contraction on simple loopless graphs, memoized per connected
// component by canonical key.
class ChromaticRecursion {
 public:
  explicit ChromaticRecursion(const Budget& budget) : nodes_(budget.max_nodes, "chromatic deletion-contraction") {}

  UniPoly solve(const Graph& g) {
    nodes_.tick();
    if (g.size() == 0) return k_power(g.order());
    auto comps = connected_components(g);
    if (comps.size() > 1) {
      UniPoly product = UniPoly::constant(1);
      for (const auto& c : comps) product *= solve(induced_subgraph(g, c));
      return product;
    }
    auto key = canonical_key(g);
    if (auto it = memo_.find(key); it != memo_.end()) return it->second;

    // chi(G - e) = chi(G) + chi(G / e), solved for chi(G), lowest edge first.
    const auto& e = g.edges().front();
    const EdgeRef ref{e.u, e.v, 0};
    UniPoly result = solve(delete_edge(g, ref)) - solve(simplify(contract_edge(g, ref)).graph);
    memo_.emplace(std::move(key), result);
    return result;
  }

  std::uint64_t nodes() const { return nodes_.used(); }

 private:
  NodeCounter nodes_;
  std::unordered_map<CanonicalKey, UniPoly, CanonicalKeyHash> memo_;
};

}  // namespace detail

/// Chromatic polynomial by deletion-contraction. Parallel edges are collapsed
/// first and any loop yields the zero polynomial.
inline UniPoly chromatic_dc(const Graph& g, const Budget& budget = {}) {
  auto [simple, loops] = simplify(g);
  if (loops) return {};
  return detail::ChromaticRecursion(budget).solve(simple);
}

/// Chromatic polynomial in the falling-factorial basis. The coefficient of
/// k_(i) is the number of partitions of V into exactly i independent sets.
inline FFPoly chromatic_ff(const Graph& g, const Budget& budget = {}) {
  auto [simple, loops] = simplify(g);
  if (loops) return {};
  const auto n = simple.order();
  const auto adj = simple.neighbour_masks();
  std::vector<std::uint64_t> counts(n + 1, 0);
  std::vector<std::uint64_t> blocks;
  blocks.reserve(n);
  NodeCounter nodes(budget.max_nodes, "independent-set partitions");

  auto place = [&](auto&& self, Vertex v) -> void {
    nodes.tick();
    if (v == n) {
      ++counts[blocks.size()];
      return;
    }
    const auto bit = std::uint64_t{1} << v;
    for (std::size_t b = 0; b < blocks.size(); ++b) {
      if (adj[v] & blocks[b]) continue;
      blocks[b] |= bit;
      self(self, v + 1);
      blocks[b] &= ~bit;
    }
    blocks.push_back(bit);
    self(self, v + 1);
    blocks.pop_back();
  };
  place(place, 0);

  std::vector<Integer> coeffs(counts.begin(), counts.end());
  return FFPoly(std::move(coeffs));
}

}  // namespace polyzoo

#endif  // POLYZOO_CHROMATIC_HPP
