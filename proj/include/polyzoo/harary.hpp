#ifndef POLYZOO_HARARY_HPP
#define POLYZOO_HARARY_HPP

#include <cstdint>
#include <functional>
#include <span>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

#include "polyzoo/core.hpp"
#include "polyzoo/graph.hpp"
#include "polyzoo/poly.hpp"

namespace polyzoo {

/// A named decidable graph property: the P of a P-coloring.
/// Every property accepts the 0-vertex graph.
struct GraphProperty {
  std::string name;
  std::function<bool(const Graph&)> decide;
  bool hereditary_hint = false;  // informational only
};

namespace properties {

inline GraphProperty edgeless() {
  return {"edgeless", [](const Graph& g) { return g.size() == 0; }, true};
}

/// Complete simple graph: every pair of distinct vertices adjacent, no loops.
inline GraphProperty clique() {
  return {"clique",
          [](const Graph& g) {
            if (g.has_loops()) return false;
            const auto n = g.order();
            for (Vertex i = 0; i < n; ++i)
              for (Vertex j = i + 1; j < n; ++j)
                if (!g.has_edge(i, j)) return false;
            return true;
          },
          true};
}

/// Forest. Loops and parallel edges are cycles.
inline GraphProperty acyclic() {
  return {"acyclic",
          [](const Graph& g) {
            if (!g.is_simple()) return false;
            return g.size() == graph_rank(g);
          },
          true};
}

inline GraphProperty max_degree(std::size_t d) {
  return {"maxdeg:" + std::to_string(d),
          [d](const Graph& g) {
            for (Vertex v = 0; v < g.order(); ++v)
              if (g.degree(v) > d) return false;
            return true;
          },
          true};
}

/// Connected; the 0-vertex graph counts as connected.
inline GraphProperty connected() {
  return {"connected", [](const Graph& g) { return component_count(g) <= 1; }, false};
}

inline GraphProperty all_graphs() {
  return {"all", [](const Graph&) { return true; }, true};
}

}  // namespace properties

inline std::vector<GraphProperty> builtin_properties() {
  return {properties::edgeless(),      properties::clique(),       properties::acyclic(),
          properties::max_degree(1),   properties::max_degree(2),  properties::connected(),
          properties::all_graphs()};
}

/// Resolves "edgeless", "clique", "acyclic", "maxdeg:d", "connected", "all",
/// or a conjunction of those joined by '&' (e.g. "acyclic&maxdeg:2").
inline GraphProperty parse_property(std::string_view text) {
  std::vector<GraphProperty> parts;
  std::size_t start = 0;
  while (true) {
    const auto amp = text.find('&', start);
    auto word = text.substr(start, amp == std::string_view::npos ? std::string_view::npos : amp - start);
    while (!word.empty() && word.front() == ' ') word.remove_prefix(1);
    while (!word.empty() && word.back() == ' ') word.remove_suffix(1);
    if (word == "edgeless") {
      parts.push_back(properties::edgeless());
    } else if (word == "clique") {
      parts.push_back(properties::clique());
    } else if (word == "acyclic") {
      parts.push_back(properties::acyclic());
    } else if (word == "connected") {
      parts.push_back(properties::connected());
    } else if (word == "all") {
      parts.push_back(properties::all_graphs());
    } else if (word.substr(0, 7) == "maxdeg:" && word.size() > 7) {
      std::size_t d = 0;
      for (char c : word.substr(7)) {
        if (c < '0' || c > '9') throw ParseError("bad max-degree bound in '" + std::string(word) + "'");
        d = d * 10 + static_cast<std::size_t>(c - '0');
      }
      parts.push_back(properties::max_degree(d));
    } else {
      throw ParseError("unknown graph property '" + std::string(word) + "'");
    }
    if (amp == std::string_view::npos) break;
    start = amp + 1;
  }
  if (parts.size() == 1) return parts.front();
  GraphProperty conj;
  bool hereditary = true;
  for (const auto& p : parts) {
    conj.name += (conj.name.empty() ? "" : "&") + p.name;
    hereditary = hereditary && p.hereditary_hint;
  }
  conj.hereditary_hint = hereditary;
  conj.decide = [parts](const Graph& g) {
    for (const auto& p : parts)
      if (!p.decide(g)) return false;
    return true;
  };
  return conj;
}

namespace detail {

// Caches P on induced subgraphs keyed by vertex mask.
class ClassChecker {
 public:
  ClassChecker(const Graph& g, const GraphProperty& p) : g_(g), p_(p) {
    if (g.order() > 64) throw std::length_error("P-coloring enumeration supports at most 64 vertices");
  }

  bool accepts(std::uint64_t mask) {
    if (mask == 0) return true;
    if (auto it = cache_.find(mask); it != cache_.end()) return it->second;
    std::vector<Vertex> members;
    for (Vertex v = 0; v < g_.order(); ++v)
      if (mask >> v & 1) members.push_back(v);
    const bool ok = p_.decide(induced_subgraph(g_, members));
    cache_.emplace(mask, ok);
    return ok;
  }

 private:
  const Graph& g_;
  const GraphProperty& p_;
  std::unordered_map<std::uint64_t, bool> cache_;
};

}  // namespace detail

/// True iff every nonempty colour class of f induces a graph in P.
inline bool is_P_coloring(const Graph& g, const GraphProperty& p, std::span<const unsigned> f) {
  if (f.size() != g.order()) throw std::invalid_argument("coloring must assign every vertex");
  std::unordered_map<unsigned, std::vector<Vertex>> classes;
  for (Vertex v = 0; v < g.order(); ++v) classes[f[v]].push_back(v);
  for (const auto& [color, members] : classes)
    if (!p.decide(induced_subgraph(g, members))) return false;
  return true;
}

/// Brute-force count of P-colorings with at most k colours.
inline Integer count_P_colorings(const Graph& g, const GraphProperty& p, unsigned k, const Budget& budget = {}) {
  const auto n = g.order();
  if (saturating_power(k, n) > budget.max_nodes) {
    throw BudgetExceeded("budget exceeded: " + std::to_string(k) + "^" + std::to_string(n) +
                         " colorings to enumerate");
  }
  if (n == 0) return 1;
  if (k == 0) return 0;
  detail::ClassChecker checker(g, p);
  std::vector<unsigned> f(n, 0);
  std::vector<std::uint64_t> masks(k);
  Integer count = 0;
  while (true) {
    std::fill(masks.begin(), masks.end(), 0);
    for (Vertex v = 0; v < n; ++v) masks[f[v]] |= std::uint64_t{1} << v;
    bool ok = true;
    for (auto m : masks) {
      if (!checker.accepts(m)) {
        ok = false;
        break;
      }
    }
    if (ok) ++count;
    std::size_t i = 0;
    while (i < n && ++f[i] == k) f[i++] = 0;
    if (i == n) break;
  }
  return count;
}

/// Harary polynomial in the falling-factorial basis: the coefficient of k_(i)
/// counts partitions of V into exactly i nonempty classes each inducing a
/// graph in P. Classes are checked only once complete, so P need not be
/// hereditary.
inline FFPoly harary_ff(const Graph& g, const GraphProperty& p, const Budget& budget = {}) {
  const auto n = g.order();
  detail::ClassChecker checker(g, p);
  std::vector<std::uint64_t> counts(n + 1, 0);
  std::vector<std::uint64_t> blocks;
  NodeCounter nodes(budget.max_nodes, "set partitions");

  auto place = [&](auto&& self, Vertex v) -> void {
    nodes.tick();
    if (v == n) {
      for (auto b : blocks)
        if (!checker.accepts(b)) return;
      ++counts[blocks.size()];
      return;
    }
    const auto bit = std::uint64_t{1} << v;
    for (std::size_t b = 0; b < blocks.size(); ++b) {
      blocks[b] |= bit;
      self(self, v + 1);
      blocks[b] &= ~bit;
    }
    blocks.push_back(bit);
    self(self, v + 1);
    blocks.pop_back();
  };
  place(place, 0);

  return FFPoly(std::vector<Integer>(counts.begin(), counts.end()));
}

}  // namespace polyzoo

#endif  // POLYZOO_HARARY_HPP
