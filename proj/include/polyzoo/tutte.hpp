#ifndef POLYZOO_TUTTE_HPP
#define POLYZOO_TUTTE_HPP

#include <map>
#include <numeric>
#include <unordered_map>
#include <utility>
#include <vector>

#include "polyzoo/canonical.hpp"
#include "polyzoo/core.hpp"
#include "polyzoo/graph.hpp"
#include "polyzoo/poly.hpp"

namespace polyzoo {

namespace detail {

class TutteRecursion {
 public:
  explicit TutteRecursion(const Budget& budget) : nodes_(budget.max_nodes, "Tutte deletion-contraction") {}

  BiPoly solve(const Graph& g) {
    nodes_.tick();
    if (g.size() == 0) return BiPoly::constant(1);

    std::vector<Edge> plain;
    unsigned loops = 0;
    for (const auto& e : g.edges()) {
      if (e.u == e.v) {
        ++loops;
      } else {
        plain.push_back(e);
      }
    }
    if (loops > 0) return BiPoly::term(0, loops) * solve(Graph(g.order(), std::move(plain)));

    auto comps = connected_components(g);
    std::size_t nontrivial = 0;
    for (const auto& c : comps) nontrivial += c.size() > 1;
    if (nontrivial > 1) {
      BiPoly product = BiPoly::constant(1);
      for (const auto& c : comps)
        if (c.size() > 1) product *= solve(induced_subgraph(g, c));
      return product;
    }
    if (comps.size() > 1) {
      for (const auto& c : comps)
        if (c.size() > 1) return solve(induced_subgraph(g, c));
    }

    auto key = canonical_key(g);
    if (auto it = memo_.find(key); it != memo_.end()) return it->second;

    const Edge e = g.edges().front();
    const EdgeRef ref{e.u, e.v, 0};
    BiPoly result;
    if (is_bridge(g, e)) {
      result = BiPoly::x() * solve(contract_edge(g, ref));
    } else {
      result = solve(delete_edge(g, ref)) + solve(contract_edge(g, ref));
    }
    memo_.emplace(std::move(key), result);
    return result;
  }

 private:
  NodeCounter nodes_;
  std::unordered_map<CanonicalKey, BiPoly, CanonicalKeyHash> memo_;
};

}  // namespace detail

/// Tutte polynomial T(G; x, y) by deletion-contraction on the multigraph:
/// loops contribute y, bridges x, and every other edge splits into G-e and G/e.
inline BiPoly tutte(const Graph& g, const Budget& budget = {}) { return detail::TutteRecursion(budget).solve(g); }

/// Rank-nullity subset expansion
/// sum over A of (x-1)^(r(E)-r(A)) (y-1)^(|A|-r(A)).
inline BiPoly tutte_subset_oracle(const Graph& g, std::size_t max_edges = 20) {
  const auto m = g.size();
  if (m > max_edges) {
    throw BudgetExceeded("subset expansion limited to " + std::to_string(max_edges) + " edges, graph has " +
                         std::to_string(m));
  }
  const auto edges = g.edges();
  const std::size_t full_rank = graph_rank(g);
  std::map<std::pair<std::size_t, std::size_t>, Integer> tally;
  std::vector<Vertex> parent(g.order());
  for (std::uint64_t subset = 0; subset < (std::uint64_t{1} << m); ++subset) {
    std::iota(parent.begin(), parent.end(), Vertex{0});
    auto find = [&](Vertex x) {
      while (parent[x] != x) x = parent[x] = parent[parent[x]];
      return x;
    };
    std::size_t rank = 0, count = 0;
    for (std::size_t i = 0; i < m; ++i) {
      if (!(subset >> i & 1)) continue;
      ++count;
      auto a = find(edges[i].u), b = find(edges[i].v);
      if (a != b) {
        parent[a] = b;
        ++rank;
      }
    }
    tally[{full_rank - rank, count - rank}] += 1;
  }
  const BiPoly xm1 = BiPoly::x() - BiPoly::constant(1);
  const BiPoly ym1 = BiPoly::y() - BiPoly::constant(1);
  BiPoly out;
  for (const auto& [exps, c] : tally) {
    BiPoly t = BiPoly::constant(c);
    for (std::size_t i = 0; i < exps.first; ++i) t *= xm1;
    for (std::size_t j = 0; j < exps.second; ++j) t *= ym1;
    out += t;
  }
  return out;
}

/// chi(G; k) = (-1)^r(E) k^c(G) T(G; 1-k, 0), with 1-k substituted symbolically.
inline UniPoly chromatic_via_tutte(const Graph& g, const Budget& budget = {}) {
  const auto t = tutte(g, budget);
  const auto comps = component_count(g);
  const auto rank = g.order() - comps;
  const UniPoly one_minus_k(std::vector<Integer>{1, -1});
  UniPoly result = t.at_y(0).compose(one_minus_k) * UniPoly::monomial(comps);
  return rank % 2 == 0 ? result : -result;
}

}  // namespace polyzoo

#endif  // POLYZOO_TUTTE_HPP
