#ifndef POLYZOO_PERMANENT_HPP
#define POLYZOO_PERMANENT_HPP

#include <algorithm>
#include <bit>
#include <cstdint>
#include <numeric>
#include <unordered_map>
#include <utility>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "polyzoo/core.hpp"
#include "polyzoo/graph.hpp"
#include "polyzoo/matrix.hpp"
#include "polyzoo/poly.hpp"
#include "polyzoo/tree_decomposition.hpp"

namespace polyzoo {

inline constexpr std::size_t kNaivePermanentLimit = 10;
inline constexpr std::size_t kRyserLimit = 24;
/// Hard ceiling of the DP state encoding (16 bits per side, bag size <= 15).
inline constexpr unsigned kMaxDecompositionWidth = 14;

/// Sum over all permutations s of prod_i M[i][s(i)].
inline Integer permanent_naive(const IntMatrix& m) {
  const auto n = m.dim();
  if (n > kNaivePermanentLimit) {
    throw BudgetExceeded("naive permanent limited to n <= " + std::to_string(kNaivePermanentLimit));
  }
  std::vector<std::size_t> s(n);
  std::iota(s.begin(), s.end(), std::size_t{0});
  Integer total = 0;
  do {
    Integer prod = 1;
    for (std::size_t i = 0; i < n && prod != 0; ++i) prod *= m(i, s[i]);
    total += prod;
  } while (std::next_permutation(s.begin(), s.end()));
  return total;
}

namespace detail {

inline Integer from_int128(__int128 v) {
  const bool neg = v < 0;
  unsigned __int128 mag = neg ? -static_cast<unsigned __int128>(v) : static_cast<unsigned __int128>(v);
  Integer out = static_cast<std::uint64_t>(mag >> 64);
  out <<= 64;
  out += static_cast<std::uint64_t>(mag);
  return neg ? Integer(-out) : out;
}

// Ryser's formula over column subsets visited in Gray-code order:
// per(A) = (-1)^n sum_S (-1)^|S| prod_i sum_{j in S} a_ij.
template <class Acc>
Acc ryser_core(const std::vector<Acc>& a, std::size_t n) {
  std::vector<Acc> row_sum(n, Acc(0));
  Acc total(0);
  std::uint64_t gray = 0;
  for (std::uint64_t step = 1; step < (std::uint64_t{1} << n); ++step) {
    const auto col = static_cast<std::size_t>(std::countr_zero(step));
    gray ^= std::uint64_t{1} << col;
    const bool added = (gray >> col) & 1;
    for (std::size_t i = 0; i < n; ++i) {
      if (added) {
        row_sum[i] += a[i * n + col];
      } else {
        row_sum[i] -= a[i * n + col];
      }
    }
    Acc prod(1);
    for (std::size_t i = 0; i < n && prod != 0; ++i) prod *= row_sum[i];
    if ((n - static_cast<std::size_t>(std::popcount(gray))) % 2 == 0) {
      total += prod;
    } else {
      total -= prod;
    }
  }
  return total;
}

}  // namespace detail

/// Ryser inclusion-exclusion, O(2^n n). Picks a fixed-width accumulator when
/// prod_i sum_j |a_ij| times 2^n provably fits.
inline Integer permanent_ryser(const IntMatrix& m) {
  const auto n = m.dim();
  if (n > kRyserLimit) throw BudgetExceeded("Ryser permanent limited to n <= " + std::to_string(kRyserLimit));
  if (n == 0) return 1;
  Integer bound = 1;
  Integer largest = 0;
  for (std::size_t i = 0; i < n; ++i) {
    Integer row = 0;
    for (std::size_t j = 0; j < n; ++j) {
      const Integer mag = abs(m(i, j));
      row += mag;
      largest = std::max(largest, mag);
    }
    bound *= row;
  }
  const std::size_t bits = (bound == 0 ? 0 : msb(bound) + 1) + n + 2;
  if (bits < 126 && largest < (Integer(1) << 62)) {
    std::vector<__int128> a(n * n);
    for (std::size_t i = 0; i < n * n; ++i) a[i] = m(i / n, i % n).convert_to<long long>();
    return detail::from_int128(detail::ryser_core(a, n));
  }
  if (bits < 500) {
    using Wide = boost::multiprecision::int512_t;
    std::vector<Wide> a(n * n);
    for (std::size_t i = 0; i < n * n; ++i) a[i] = Wide(m(i / n, i % n));
    return Integer(detail::ryser_core(a, n));
  }
  std::vector<Integer> a(n * n);
  for (std::size_t i = 0; i < n * n; ++i) a[i] = m(i / n, i % n);
  return detail::ryser_core(a, n);
}

/// Undirected support: {i,j} iff M[i][j] or M[j][i] is nonzero; a loop at i
/// iff M[i][i] is nonzero.
inline Graph support_graph(const IntMatrix& m) {
  std::vector<Edge> edges;
  for (Vertex i = 0; i < m.dim(); ++i) {
    if (m(i, i) != 0) edges.push_back({i, i});
    for (Vertex j = i + 1; j < m.dim(); ++j)
      if (m(i, j) != 0 || m(j, i) != 0) edges.push_back({i, j});
  }
  return Graph(m.dim(), std::move(edges));
}

namespace detail {

// DP table over one bag. For bag position p, bit p records that the vertex's
// row is used (it has chosen its column) and bit p + 16 that its column is used.
struct BagTable {
  std::vector<Vertex> bag;
  std::unordered_map<std::uint32_t, Integer> weight;
};

inline constexpr unsigned kInShift = 16;

inline std::uint32_t out_bit(std::size_t p) { return std::uint32_t{1} << p; }
inline std::uint32_t in_bit(std::size_t p) { return std::uint32_t{1} << (p + kInShift); }

class PermanentDP {
 public:
  explicit PermanentDP(const IntMatrix& m) : m_(m) {}

  // Re-expresses a table over a superset bag (new vertices unused).
  static BagTable extend_to(const BagTable& t, const std::vector<Vertex>& target) {
    std::vector<std::size_t> where(t.bag.size());
    for (std::size_t p = 0; p < t.bag.size(); ++p)
      where[p] = static_cast<std::size_t>(std::find(target.begin(), target.end(), t.bag[p]) - target.begin());
    BagTable out{target, {}};
    out.weight.reserve(t.weight.size());
    for (const auto& [s, w] : t.weight) {
      std::uint32_t r = 0;
      for (std::size_t p = 0; p < t.bag.size(); ++p) {
        if (s & out_bit(p)) r |= out_bit(where[p]);
        if (s & in_bit(p)) r |= in_bit(where[p]);
      }
      out.weight.emplace(r, w);
    }
    return out;
  }

  // Chooses or skips every arc between v and the rest of the bag (and v's own
  // diagonal entry), then drops v, which must be saturated on both sides.
  BagTable forget(BagTable t, Vertex v) const {
    const auto pv = static_cast<std::size_t>(std::find(t.bag.begin(), t.bag.end(), v) - t.bag.begin());
    auto take_arc = [&](std::size_t tail, std::size_t head, const Integer& a) {
      if (a == 0) return;
      std::unordered_map<std::uint32_t, Integer> next = t.weight;
      const std::uint32_t need = out_bit(tail) | in_bit(head);
      for (const auto& [s, w] : t.weight) {
        if (s & need) continue;
        next[s | need] += w * a;
      }
      t.weight = std::move(next);
    };
    take_arc(pv, pv, m_(v, v));
    for (std::size_t q = 0; q < t.bag.size(); ++q) {
      if (q == pv) continue;
      const Vertex u = t.bag[q];
      take_arc(pv, q, m_(v, u));
      take_arc(q, pv, m_(u, v));
    }
    std::vector<Vertex> rest;
    for (std::size_t q = 0; q < t.bag.size(); ++q)
      if (q != pv) rest.push_back(t.bag[q]);
    BagTable out{rest, {}};
    const std::uint32_t full = out_bit(pv) | in_bit(pv);
    for (const auto& [s, w] : t.weight) {
      if ((s & full) != full || w == 0) continue;
      std::uint32_t r = 0;
      for (std::size_t q = 0, k = 0; q < t.bag.size(); ++q) {
        if (q == pv) continue;
        if (s & out_bit(q)) r |= out_bit(k);
        if (s & in_bit(q)) r |= in_bit(k);
        ++k;
      }
      out.weight[r] += w;
    }
    return out;
  }

  // Both tables share the bag order; states combine when their used bits are disjoint.
  static BagTable join(const BagTable& a, const BagTable& b) {
    const std::size_t m = a.bag.size();
    std::uint32_t universe = 0;
    for (std::size_t p = 0; p < m; ++p) universe |= out_bit(p) | in_bit(p);
    BagTable out{a.bag, {}};
    for (const auto& [sa, wa] : a.weight) {
      const std::uint32_t free = universe & ~sa;
      for (std::uint32_t sb = free;; sb = (sb - 1) & free) {
        if (auto it = b.weight.find(sb); it != b.weight.end()) out.weight[sa | sb] += wa * it->second;
        if (sb == 0) break;
      }
    }
    return out;
  }

  Integer run(const TreeDecomposition& td) const {
    if (td.bags.empty()) return 1;
    const auto nb = td.bags.size();
    std::vector<std::vector<std::size_t>> adj(nb);
    for (auto [x, y] : td.tree) {
      adj[x].push_back(y);
      adj[y].push_back(x);
    }
    // Iterative post-order from bag 0.
    std::vector<std::size_t> parent(nb, nb), order;
    std::vector<std::size_t> stack{0};
    parent[0] = 0;
    while (!stack.empty()) {
      auto x = stack.back();
      stack.pop_back();
      order.push_back(x);
      for (auto y : adj[x]) {
        if (parent[y] == nb) {
          parent[y] = x;
          stack.push_back(y);
        }
      }
    }
    std::vector<BagTable> table(nb);
    for (std::size_t i = 0; i < nb; ++i) {
      table[i].bag = td.bags[i];
      table[i].weight.emplace(0u, Integer(1));
    }
    for (auto it = order.rbegin(); it != order.rend(); ++it) {
      const auto x = *it;
      if (x == 0) break;
      const auto p = parent[x];
      BagTable t = std::move(table[x]);
      const auto current = t.bag;
      for (auto v : current) {
        if (std::find(td.bags[p].begin(), td.bags[p].end(), v) == td.bags[p].end()) t = forget(std::move(t), v);
      }
      table[p] = join(table[p], extend_to(t, td.bags[p]));
    }
    BagTable root = std::move(table[0]);
    const auto remaining = root.bag;
    for (auto v : remaining) root = forget(std::move(root), v);
    auto it = root.weight.find(0);
    return it == root.weight.end() ? Integer(0) : it->second;
  }

 private:
  const IntMatrix& m_;
};

}  // namespace detail

/// Permanent by dynamic programming over a tree decomposition of the support
/// graph. A permutation is a choice of one nonzero entry per row and per
/// column; states record, per bag vertex, whether its row and its column are
/// already used. Cost is exponential in the width only.
inline Integer permanent_tw(const IntMatrix& m, const TreeDecomposition& td, const Budget& budget = {}) {
  if (!validate_tree_decomposition(support_graph(m), td)) {
    throw std::invalid_argument("tree decomposition is not valid for the support graph");
  }
  const auto width = td.width();
  if (width > static_cast<long>(std::min(budget.max_width, kMaxDecompositionWidth))) {
    throw BudgetExceeded("tree decomposition width " + std::to_string(width) + " exceeds cap " +
                         std::to_string(budget.max_width));
  }
  return detail::PermanentDP(m).run(td);
}

inline Integer permanent_tw(const IntMatrix& m, const Budget& budget = {}) {
  return permanent_tw(m, greedy_tree_decomposition(support_graph(m)), budget);
}

/// per(A_G) with every edge entry equal to x: the number of loop-free cycle
/// covers times x^n. Requires a loopless graph.
inline UniPoly adjacency_permanent_poly(const Graph& g, const Budget& budget = {}) {
  if (g.has_loops()) throw std::invalid_argument("adjacency permanent polynomial needs a loopless graph");
  const auto covers = permanent_tw(IntMatrix::adjacency(g), budget);
  return UniPoly::monomial(g.order(), covers);
}

}  // namespace polyzoo

#endif  // POLYZOO_PERMANENT_HPP
