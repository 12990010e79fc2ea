#ifndef POLYZOO_CANONICAL_HPP
#define POLYZOO_CANONICAL_HPP

#include <algorithm>
#include <compare>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <optional>
#include <tuple>
#include <vector>

#include "polyzoo/graph.hpp"

namespace polyzoo {

/// Memoization key for a graph. Equal keys always mean isomorphic graphs.
/// Up to `kExactCanonicalOrder` vertices isomorphic graphs also get equal
/// keys; above it the key is the labelled edge multiset.
struct CanonicalKey {
  std::vector<std::uint32_t> words;

  friend auto operator<=>(const CanonicalKey&, const CanonicalKey&) = default;
  friend bool operator==(const CanonicalKey&, const CanonicalKey&) = default;
};

struct CanonicalKeyHash {
  std::size_t operator()(const CanonicalKey& k) const noexcept {
    std::size_t h = 0xcbf29ce484222325ull;
    for (auto w : k.words) {
      h ^= w;
      h *= 0x100000001b3ull;
    }
    return h;
  }
};

inline constexpr std::size_t kExactCanonicalOrder = 10;

namespace detail {

class CanonicalLabeler {
 public:
  explicit CanonicalLabeler(const Graph& g) : n_(g.order()), m_(n_ * n_, 0) {
    for (const auto& e : g.edges()) {
      ++m_[e.u * n_ + e.v];
      if (e.u != e.v) ++m_[e.v * n_ + e.u];
    }
  }

  std::vector<std::uint32_t> run() {
    std::vector<std::uint32_t> colors(n_, 0);
    refine(colors);
    search(colors);
    return *best_;
  }

 private:
  std::uint32_t at(std::size_t a, std::size_t b) const { return m_[a * n_ + b]; }

  // Colour refinement. New colours are ranks of label-independent signatures,
  // so the resulting ordered partition is canonical.
  void refine(std::vector<std::uint32_t>& colors) const {
    using Signature = std::vector<std::uint32_t>;
    std::size_t classes = count_classes(colors);
    while (true) {
      std::vector<Signature> sig(n_);
      for (std::size_t v = 0; v < n_; ++v) {
        std::vector<std::pair<std::uint32_t, std::uint32_t>> nb;
        for (std::size_t u = 0; u < n_; ++u) {
          if (u != v && at(v, u) > 0) nb.push_back({colors[u], at(v, u)});
        }
        std::sort(nb.begin(), nb.end());
        auto& s = sig[v];
        s.push_back(colors[v]);
        s.push_back(at(v, v));
        for (auto [c, mult] : nb) {
          s.push_back(c);
          s.push_back(mult);
        }
      }
      auto sorted = sig;
      std::sort(sorted.begin(), sorted.end());
      sorted.erase(std::unique(sorted.begin(), sorted.end()), sorted.end());
      for (std::size_t v = 0; v < n_; ++v) {
        colors[v] = static_cast<std::uint32_t>(
            std::lower_bound(sorted.begin(), sorted.end(), sig[v]) - sorted.begin());
      }
      if (sorted.size() == classes) return;
      classes = sorted.size();
    }
  }

  static std::size_t count_classes(const std::vector<std::uint32_t>& colors) {
    auto c = colors;
    std::sort(c.begin(), c.end());
    return static_cast<std::size_t>(std::unique(c.begin(), c.end()) - c.begin());
  }

  // Swapping two same-coloured twins is an automorphism of the coloured graph,
  // so only one member of each twin class needs to be individualized.
  bool twins(std::size_t a, std::size_t b) const {
    if (at(a, a) != at(b, b)) return false;
    for (std::size_t w = 0; w < n_; ++w) {
      if (w == a || w == b) continue;
      if (at(a, w) != at(b, w)) return false;
    }
    return true;
  }

  void search(const std::vector<std::uint32_t>& colors) {
    if (count_classes(colors) == n_) {
      std::vector<std::size_t> order(n_);
      for (std::size_t v = 0; v < n_; ++v) order[colors[v]] = v;
      std::vector<std::uint32_t> cert;
      cert.reserve(n_ * (n_ + 1) / 2);
      for (std::size_t i = 0; i < n_; ++i)
        for (std::size_t j = i; j < n_; ++j) cert.push_back(at(order[i], order[j]));
      if (!best_ || cert < *best_) best_ = std::move(cert);
      return;
    }
    // Target cell: smallest colour shared by several vertices.
    std::vector<std::size_t> cell_size(n_, 0);
    for (auto c : colors) ++cell_size[c];
    std::uint32_t target = 0;
    while (cell_size[target] < 2) ++target;
    std::vector<std::size_t> cell;
    for (std::size_t v = 0; v < n_; ++v)
      if (colors[v] == target) cell.push_back(v);

    std::vector<std::size_t> representatives;
    for (auto v : cell) {
      bool covered = std::any_of(representatives.begin(), representatives.end(),
                                 [&](std::size_t r) { return twins(r, v); });
      if (!covered) representatives.push_back(v);
    }
    for (auto v : representatives) {
      std::vector<std::uint32_t> next(n_);
      for (std::size_t u = 0; u < n_; ++u) next[u] = 2 * colors[u] + 1;
      next[v] = 2 * colors[v];
      refine(next);
      search(next);
    }
  }

  std::size_t n_;
  std::vector<std::uint32_t> m_;
  std::optional<std::vector<std::uint32_t>> best_;
};

}  // namespace detail

inline CanonicalKey canonical_key(const Graph& g) {
  CanonicalKey key;
  const auto n = static_cast<std::uint32_t>(g.order());
  if (g.order() <= kExactCanonicalOrder) {
    key.words.push_back(0);
    key.words.push_back(n);
    auto cert = detail::CanonicalLabeler(g).run();
    key.words.insert(key.words.end(), cert.begin(), cert.end());
  } else {
    key.words.push_back(1);
    key.words.push_back(n);
    for (const auto& e : g.edges()) {
      key.words.push_back(e.u);
      key.words.push_back(e.v);
    }
  }
  return key;
}

}  // namespace polyzoo

#endif  // POLYZOO_CANONICAL_HPP
