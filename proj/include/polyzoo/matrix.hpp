#ifndef POLYZOO_MATRIX_HPP
#define POLYZOO_MATRIX_HPP

#include <cstddef>
#include <sstream>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "polyzoo/core.hpp"
#include "polyzoo/graph.hpp"

namespace polyzoo {

/// Square matrix of arbitrary-precision integers, row-major.
class IntMatrix {
 public:
  IntMatrix() = default;
  explicit IntMatrix(std::size_t n) : n_(n), a_(n * n, Integer(0)) {}

  static IntMatrix identity(std::size_t n) {
    IntMatrix m(n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
    return m;
  }

  static IntMatrix all_ones(std::size_t n) {
    IntMatrix m(n);
    for (auto& x : m.a_) x = 1;
    return m;
  }

  /// Entry `weight` at every edge position, multiplied by multiplicity.
  /// A loop contributes its multiplicity to the diagonal.
  static IntMatrix adjacency(const Graph& g, const Integer& weight = 1) {
    IntMatrix m(g.order());
    for (const auto& e : g.edges()) {
      m(e.u, e.v) += weight;
      if (e.u != e.v) m(e.v, e.u) += weight;
    }
    return m;
  }

  std::size_t dim() const noexcept { return n_; }
  Integer& operator()(std::size_t i, std::size_t j) { return a_[i * n_ + j]; }
  const Integer& operator()(std::size_t i, std::size_t j) const { return a_[i * n_ + j]; }

  IntMatrix transpose() const {
    IntMatrix t(n_);
    for (std::size_t i = 0; i < n_; ++i)
      for (std::size_t j = 0; j < n_; ++j) t(j, i) = (*this)(i, j);
    return t;
  }

  bool is_symmetric() const {
    for (std::size_t i = 0; i < n_; ++i)
      for (std::size_t j = i + 1; j < n_; ++j)
        if ((*this)(i, j) != (*this)(j, i)) return false;
    return true;
  }

  friend bool operator==(const IntMatrix&, const IntMatrix&) = default;

 private:
  std::size_t n_ = 0;
  std::vector<Integer> a_;
};

/// "n" then n rows of n integers, whitespace separated.
inline IntMatrix parse_matrix(std::string_view text) {
  std::istringstream in{std::string(text)};
  std::string tok;
  if (!(in >> tok)) throw ParseError("matrix: missing dimension");
  std::size_t n = 0;
  try {
    std::size_t used = 0;
    if (tok.front() == '-') throw ParseError("matrix: negative dimension");
    n = std::stoul(tok, &used);
    if (used != tok.size()) throw ParseError("matrix: bad dimension '" + tok + "'");
  } catch (const std::logic_error&) {
    throw ParseError("matrix: bad dimension '" + tok + "'");
  }
  IntMatrix m(n);
  for (std::size_t i = 0; i < n * n; ++i) {
    if (!(in >> tok)) throw ParseError("matrix: expected " + std::to_string(n * n) + " entries, got " + std::to_string(i));
    const bool neg = tok.front() == '-' || tok.front() == '+';
    if (tok.size() == static_cast<std::size_t>(neg) ||
        tok.find_first_not_of("0123456789", neg ? 1 : 0) != std::string::npos) {
      throw ParseError("matrix: not an integer: '" + tok + "'");
    }
    m(i / n, i % n) = Integer(tok.front() == '+' ? tok.substr(1) : tok);
  }
  if (in >> tok) throw ParseError("matrix: trailing token '" + tok + "'");
  return m;
}

inline std::string to_text(const IntMatrix& m) {
  std::string out = std::to_string(m.dim()) + "\n";
  for (std::size_t i = 0; i < m.dim(); ++i) {
    for (std::size_t j = 0; j < m.dim(); ++j) out += (j ? " " : "") + m(i, j).str();
    out += "\n";
  }
  return out;
}

/// Fraction-free (Bareiss) determinant; every division is exact.
inline Integer determinant(IntMatrix m) {
  const auto n = m.dim();
  if (n == 0) return 1;
  Integer sign = 1, prev = 1;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (m(k, k) == 0) {
      std::size_t swap_row = k + 1;
      while (swap_row < n && m(swap_row, k) == 0) ++swap_row;
      if (swap_row == n) return 0;
      for (std::size_t j = 0; j < n; ++j) std::swap(m(k, j), m(swap_row, j));
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < n; ++j) {
        m(i, j) = (m(i, j) * m(k, k) - m(i, k) * m(k, j)) / prev;
      }
      m(i, k) = 0;
    }
    prev = m(k, k);
  }
  return sign * m(n - 1, n - 1);
}

}  // namespace polyzoo

#endif  // POLYZOO_MATRIX_HPP
