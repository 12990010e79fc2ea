#ifndef POLYZOO_CHARPOLY_HPP
#define POLYZOO_CHARPOLY_HPP

#include <vector>

#include "polyzoo/core.hpp"
#include "polyzoo/graph.hpp"
#include "polyzoo/matrix.hpp"
#include "polyzoo/poly.hpp"

namespace polyzoo {

/// det(xI - A_G) for a simple graph. Determinants are taken at the integer
/// points 0, 1, -1, 2, -2, ... and interpolated exactly.
inline UniPoly char_poly(const Graph& g) {
  if (!g.is_simple()) throw std::invalid_argument("characteristic polynomial needs a simple graph");
  const auto n = g.order();
  const auto a = IntMatrix::adjacency(g);
  std::vector<Integer> nodes, values;
  for (std::size_t i = 0; i <= n; ++i) {
    const long step = static_cast<long>((i + 1) / 2);
    const Integer t = (i % 2 == 1) ? Integer(step) : Integer(-step);
    IntMatrix m(n);
    for (std::size_t r = 0; r < n; ++r)
      for (std::size_t c = 0; c < n; ++c) m(r, c) = (r == c ? t : Integer(0)) - a(r, c);
    nodes.push_back(t);
    values.push_back(determinant(std::move(m)));
  }
  return interpolate_at_nodes(nodes, values);
}

/// Characteristic polynomial from elementary subgraphs (vertex-disjoint
/// unions of single edges and cycles): the coefficient of x^(n-i) sums
/// (-1)^components * 2^cycles over elementary subgraphs on i vertices.
inline UniPoly char_poly_sachs_oracle(const Graph& g, std::size_t max_order = 12) {
  if (!g.is_simple()) throw std::invalid_argument("Sachs expansion needs a simple graph");
  const auto n = g.order();
  if (n > max_order) {
    throw BudgetExceeded("elementary subgraph enumeration limited to " + std::to_string(max_order) + " vertices");
  }
  const auto adj = g.neighbours();
  std::vector<Integer> coeff(n + 1, 0);
  std::vector<bool> decided(n, false);

  // covered: vertices in the subgraph; comps/cycles: running tallies.
  auto recurse = [&](auto&& self, std::size_t covered, std::size_t comps, std::size_t cycles) -> void {
    Vertex v = 0;
    while (v < n && decided[v]) ++v;
    if (v == n) {
      Integer term = (comps % 2 == 0) ? 1 : -1;
      term <<= cycles;
      coeff[n - covered] += term;
      return;
    }
    decided[v] = true;
    self(self, covered, comps, cycles);  // v left out
    for (auto w : adj[v]) {              // v covered by the edge vw
      if (decided[w]) continue;
      decided[w] = true;
      self(self, covered + 2, comps + 1, cycles);
      decided[w] = false;
    }
    // v as the smallest vertex of a cycle of length >= 3; each cycle is met in
    // two directions, kept only when the second vertex is below the last.
    std::vector<Vertex> path{v};
    auto extend = [&](auto&& ext, Vertex tip) -> void {
      for (auto w : adj[tip]) {
        if (w == v && path.size() >= 3 && path[1] < path.back()) {
          self(self, covered + path.size(), comps + 1, cycles + 1);
        }
        if (decided[w] || w < v) continue;
        decided[w] = true;
        path.push_back(w);
        ext(ext, w);
        path.pop_back();
        decided[w] = false;
      }
    };
    extend(extend, v);
    decided[v] = false;
  };
  recurse(recurse, 0, 0, 0);
  return UniPoly(std::move(coeff));
}

}  // namespace polyzoo

#endif  // POLYZOO_CHARPOLY_HPP
