#ifndef POLYZOO_TREE_DECOMPOSITION_HPP
#define POLYZOO_TREE_DECOMPOSITION_HPP

#include <algorithm>
#include <cstddef>
#include <limits>
#include <set>
#include <sstream>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "polyzoo/core.hpp"
#include "polyzoo/graph.hpp"

namespace polyzoo {

struct TreeDecomposition {
  std::vector<std::vector<Vertex>> bags;
  std::vector<std::pair<std::size_t, std::size_t>> tree;  // edges between bag indices

  /// Largest bag size minus one; -1 when there are no bags.
  long width() const {
    std::size_t widest = 0;
    for (const auto& b : bags) widest = std::max(widest, b.size());
    return static_cast<long>(widest) - 1;
  }
};

enum class EliminationHeuristic { min_degree, min_fill };

/// Greedy elimination ordering turned into a decomposition: eliminating v
/// yields the bag {v} + N(v), hung below the bag of the first-eliminated
/// later neighbour. Component roots are chained together.
inline TreeDecomposition greedy_tree_decomposition(const Graph& g,
                                                    EliminationHeuristic rule = EliminationHeuristic::min_fill) {
  const auto n = g.order();
  std::vector<std::set<Vertex>> adj(n);
  for (const auto& e : g.edges()) {
    if (e.u == e.v) continue;
    adj[e.u].insert(e.v);
    adj[e.v].insert(e.u);
  }
  std::vector<bool> gone(n, false);
  std::vector<std::size_t> position(n, 0);
  std::vector<Vertex> order;
  TreeDecomposition td;

  auto fill_in = [&](Vertex v) {
    std::size_t missing = 0;
    for (auto a = adj[v].begin(); a != adj[v].end(); ++a)
      for (auto b = std::next(a); b != adj[v].end(); ++b)
        if (!adj[*a].count(*b)) ++missing;
    return missing;
  };

  for (std::size_t step = 0; step < n; ++step) {
    Vertex best = 0;
    auto best_score = std::make_pair(std::numeric_limits<std::size_t>::max(), std::size_t{0});
    for (Vertex v = 0; v < n; ++v) {
      if (gone[v]) continue;
      const std::size_t primary = rule == EliminationHeuristic::min_fill ? fill_in(v) : adj[v].size();
      const auto score = std::make_pair(primary, adj[v].size());
      if (score < best_score) {
        best_score = score;
        best = v;
      }
    }
    std::vector<Vertex> bag{best};
    bag.insert(bag.end(), adj[best].begin(), adj[best].end());
    std::sort(bag.begin(), bag.end());
    td.bags.push_back(std::move(bag));
    for (auto a : adj[best]) {
      for (auto b : adj[best])
        if (a != b) adj[a].insert(b);
      adj[a].erase(best);
    }
    adj[best].clear();
    gone[best] = true;
    position[best] = step;
    order.push_back(best);
  }

  std::vector<std::size_t> roots;
  for (std::size_t i = 0; i < n; ++i) {
    const Vertex v = order[i];
    std::size_t parent = std::numeric_limits<std::size_t>::max();
    for (auto u : td.bags[i])
      if (u != v) parent = std::min(parent, position[u]);
    if (parent == std::numeric_limits<std::size_t>::max()) {
      roots.push_back(i);
    } else {
      td.tree.push_back({parent, i});
    }
  }
  for (std::size_t r = 1; r < roots.size(); ++r) td.tree.push_back({roots[r - 1], roots[r]});
  return td;
}

/// Checks coverage of vertices and edges, connectivity of each vertex's bags,
/// and that the bag graph is a tree.
inline bool validate_tree_decomposition(const Graph& g, const TreeDecomposition& td) {
  const auto n = g.order();
  const auto nb = td.bags.size();
  if (nb == 0) return n == 0;
  if (td.tree.size() != nb - 1) return false;
  std::vector<std::vector<std::size_t>> tree_adj(nb);
  for (auto [a, b] : td.tree) {
    if (a >= nb || b >= nb || a == b) return false;
    tree_adj[a].push_back(b);
    tree_adj[b].push_back(a);
  }
  auto reach = [&](const std::vector<bool>& allowed, std::size_t start) {
    std::vector<bool> seen(nb, false);
    std::vector<std::size_t> stack{start};
    seen[start] = true;
    std::size_t count = 1;
    while (!stack.empty()) {
      auto x = stack.back();
      stack.pop_back();
      for (auto y : tree_adj[x]) {
        if (!seen[y] && allowed[y]) {
          seen[y] = true;
          ++count;
          stack.push_back(y);
        }
      }
    }
    return count;
  };
  if (reach(std::vector<bool>(nb, true), 0) != nb) return false;

  std::vector<std::vector<std::size_t>> home(n);
  std::vector<std::vector<bool>> member(nb, std::vector<bool>(n, false));
  for (std::size_t i = 0; i < nb; ++i) {
    for (auto v : td.bags[i]) {
      if (v >= n || member[i][v]) return false;
      member[i][v] = true;
      home[v].push_back(i);
    }
  }
  for (Vertex v = 0; v < n; ++v) {
    if (home[v].empty()) return false;
    std::vector<bool> allowed(nb, false);
    for (auto i : home[v]) allowed[i] = true;
    if (reach(allowed, home[v].front()) != home[v].size()) return false;
  }
  for (const auto& e : g.edges()) {
    if (e.u == e.v) continue;
    bool covered = false;
    for (auto i : home[e.u]) {
      if (member[i][e.v]) {
        covered = true;
        break;
      }
    }
    if (!covered) return false;
  }
  return true;
}

/// Text form: one bag per line as vertex lists, a line "--", then one tree
/// edge "a b" per line. A bag line "-" stands for the empty bag.
inline TreeDecomposition parse_tree_decomposition(std::string_view text) {
  TreeDecomposition td;
  std::istringstream in{std::string(text)};
  std::string line;
  bool in_edges = false;
  auto numbers = [](const std::string& l) {
    std::istringstream ls(l);
    std::vector<std::size_t> out;
    std::string tok;
    while (ls >> tok) {
      if (tok.find_first_not_of("0123456789") != std::string::npos) {
        throw ParseError("decomposition: not a vertex index: '" + tok + "'");
      }
      out.push_back(std::stoul(tok));
    }
    return out;
  };
  while (std::getline(in, line)) {
    const auto first = line.find_first_not_of(" \t\r");
    if (first == std::string::npos) continue;
    const auto trimmed = line.substr(first, line.find_last_not_of(" \t\r") - first + 1);
    if (trimmed == "--") {
      if (in_edges) throw ParseError("decomposition: repeated '--' separator");
      in_edges = true;
      continue;
    }
    if (!in_edges) {
      if (trimmed == "-") {
        td.bags.emplace_back();
        continue;
      }
      auto nums = numbers(trimmed);
      td.bags.emplace_back(nums.begin(), nums.end());
    } else {
      auto nums = numbers(trimmed);
      if (nums.size() != 2) throw ParseError("decomposition: tree edge needs two bag indices");
      td.tree.push_back({nums[0], nums[1]});
    }
  }
  return td;
}

inline std::string to_text(const TreeDecomposition& td) {
  std::string out;
  for (const auto& bag : td.bags) {
    if (bag.empty()) {
      out += "-\n";
      continue;
    }
    for (std::size_t i = 0; i < bag.size(); ++i) out += (i ? " " : "") + std::to_string(bag[i]);
    out += "\n";
  }
  out += "--\n";
  for (auto [a, b] : td.tree) out += std::to_string(a) + " " + std::to_string(b) + "\n";
  return out;
}

}  // namespace polyzoo

#endif  // POLYZOO_TREE_DECOMPOSITION_HPP
