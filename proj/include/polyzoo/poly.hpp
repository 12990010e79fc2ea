#ifndef POLYZOO_POLY_HPP
#define POLYZOO_POLY_HPP

#include <algorithm>
#include <cstddef>
#include <map>
#include <span>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "polyzoo/core.hpp"

namespace polyzoo {

/// Raised when exact division fails during interpolation.
class InterpolationError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

/// Dense univariate polynomial, coefficients in ascending degree.
/// Trailing zeros are never stored; the zero polynomial is empty.
template <class Coeff>
class BasicUniPoly {
 public:
  BasicUniPoly() = default;
  explicit BasicUniPoly(std::vector<Coeff> coeffs) : c_(std::move(coeffs)) { trim(); }

  static BasicUniPoly constant(Coeff c) { return BasicUniPoly(std::vector<Coeff>{std::move(c)}); }

  static BasicUniPoly monomial(std::size_t degree, Coeff c = Coeff(1)) {
    std::vector<Coeff> v(degree + 1, Coeff(0));
    v[degree] = std::move(c);
    return BasicUniPoly(std::move(v));
  }

  bool is_zero() const noexcept { return c_.empty(); }
  /// -1 for the zero polynomial.
  long degree() const noexcept { return static_cast<long>(c_.size()) - 1; }
  std::span<const Coeff> coefficients() const noexcept { return c_; }

  Coeff coeff(std::size_t i) const { return i < c_.size() ? c_[i] : Coeff(0); }
  Coeff leading() const { return c_.empty() ? Coeff(0) : c_.back(); }

  Coeff eval(const Coeff& at) const {
    Coeff acc(0);
    for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * at + *it;
    return acc;
  }

  /// p(q(x)) by Horner's rule in the polynomial ring.
  BasicUniPoly compose(const BasicUniPoly& q) const {
    BasicUniPoly acc;
    for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * q + constant(*it);
    return acc;
  }

  BasicUniPoly& operator+=(const BasicUniPoly& o) {
    if (o.c_.size() > c_.size()) c_.resize(o.c_.size(), Coeff(0));
    for (std::size_t i = 0; i < o.c_.size(); ++i) c_[i] += o.c_[i];
    trim();
    return *this;
  }
  BasicUniPoly& operator-=(const BasicUniPoly& o) { return *this += -o; }

  friend BasicUniPoly operator+(BasicUniPoly a, const BasicUniPoly& b) { return a += b; }
  friend BasicUniPoly operator-(BasicUniPoly a, const BasicUniPoly& b) { return a -= b; }
  friend BasicUniPoly operator-(BasicUniPoly a) {
    for (auto& x : a.c_) x = -x;
    return a;
  }
  friend BasicUniPoly operator*(const BasicUniPoly& a, const BasicUniPoly& b) {
    if (a.is_zero() || b.is_zero()) return {};
    std::vector<Coeff> out(a.c_.size() + b.c_.size() - 1, Coeff(0));
    for (std::size_t i = 0; i < a.c_.size(); ++i) {
      if (a.c_[i] == 0) continue;
      for (std::size_t j = 0; j < b.c_.size(); ++j) out[i + j] += a.c_[i] * b.c_[j];
    }
    return BasicUniPoly(std::move(out));
  }
  BasicUniPoly& operator*=(const BasicUniPoly& o) { return *this = *this * o; }

  friend bool operator==(const BasicUniPoly&, const BasicUniPoly&) = default;

 private:
  void trim() {
    while (!c_.empty() && c_.back() == 0) c_.pop_back();
  }

  std::vector<Coeff> c_;
};

/// Sparse bivariate polynomial keyed by exponent pairs (i, j) for x^i y^j.
template <class Coeff>
class BasicBiPoly {
 public:
  using Exponents = std::pair<unsigned, unsigned>;

  BasicBiPoly() = default;

  static BasicBiPoly constant(Coeff c) { return term(0, 0, std::move(c)); }
  static BasicBiPoly term(unsigned i, unsigned j, Coeff c = Coeff(1)) {
    BasicBiPoly p;
    if (c != 0) p.t_.emplace(Exponents{i, j}, std::move(c));
    return p;
  }
  static BasicBiPoly x() { return term(1, 0); }
  static BasicBiPoly y() { return term(0, 1); }

  bool is_zero() const noexcept { return t_.empty(); }
  const std::map<Exponents, Coeff>& terms() const noexcept { return t_; }

  Coeff coeff(unsigned i, unsigned j) const {
    auto it = t_.find({i, j});
    return it == t_.end() ? Coeff(0) : it->second;
  }

  Coeff eval(const Coeff& xv, const Coeff& yv) const {
    Coeff acc(0);
    for (const auto& [e, c] : t_) acc += c * pow(xv, e.first) * pow(yv, e.second);
    return acc;
  }

  /// Substitutes y = y0 and returns the univariate polynomial in x.
  BasicUniPoly<Coeff> at_y(const Coeff& y0) const {
    std::vector<Coeff> out;
    for (const auto& [e, c] : t_) {
      if (out.size() <= e.first) out.resize(e.first + 1, Coeff(0));
      out[e.first] += c * pow(y0, e.second);
    }
    return BasicUniPoly<Coeff>(std::move(out));
  }

  BasicBiPoly& operator+=(const BasicBiPoly& o) {
    for (const auto& [e, c] : o.t_) add_term(e, c);
    return *this;
  }
  friend BasicBiPoly operator+(BasicBiPoly a, const BasicBiPoly& b) { return a += b; }
  friend BasicBiPoly operator-(BasicBiPoly a) {
    for (auto& [e, c] : a.t_) c = -c;
    return a;
  }
  friend BasicBiPoly operator-(BasicBiPoly a, const BasicBiPoly& b) { return a += -b; }
  friend BasicBiPoly operator*(const BasicBiPoly& a, const BasicBiPoly& b) {
    BasicBiPoly out;
    for (const auto& [ea, ca] : a.t_)
      for (const auto& [eb, cb] : b.t_)
        out.add_term({ea.first + eb.first, ea.second + eb.second}, ca * cb);
    return out;
  }
  BasicBiPoly& operator*=(const BasicBiPoly& o) { return *this = *this * o; }

  friend bool operator==(const BasicBiPoly&, const BasicBiPoly&) = default;

 private:
  static Coeff pow(const Coeff& base, unsigned e) {
    Coeff r(1);
    for (unsigned i = 0; i < e; ++i) r *= base;
    return r;
  }

  void add_term(const Exponents& e, const Coeff& c) {
    auto [it, inserted] = t_.try_emplace(e, c);
    if (!inserted) it->second += c;
    if (it->second == 0) t_.erase(it);
  }

  std::map<Exponents, Coeff> t_;
};

/// Polynomial in the falling-factorial basis: sum_i c_i * k(k-1)...(k-i+1).
template <class Coeff>
class BasicFFPoly {
 public:
  BasicFFPoly() = default;
  explicit BasicFFPoly(std::vector<Coeff> coeffs) : c_(std::move(coeffs)) {
    while (!c_.empty() && c_.back() == 0) c_.pop_back();
  }

  static BasicFFPoly basis(std::size_t i) {
    std::vector<Coeff> v(i + 1, Coeff(0));
    v[i] = Coeff(1);
    return BasicFFPoly(std::move(v));
  }

  bool is_zero() const noexcept { return c_.empty(); }
  long degree() const noexcept { return static_cast<long>(c_.size()) - 1; }
  std::span<const Coeff> coefficients() const noexcept { return c_; }
  Coeff coeff(std::size_t i) const { return i < c_.size() ? c_[i] : Coeff(0); }

  /// Direct evaluation: each basis term is the product k(k-1)...(k-i+1).
  Coeff eval(const Coeff& k) const {
    Coeff acc(0), falling(1);
    for (std::size_t i = 0; i < c_.size(); ++i) {
      acc += c_[i] * falling;
      falling *= (k - Coeff(i));
    }
    return acc;
  }

  friend BasicFFPoly operator+(const BasicFFPoly& a, const BasicFFPoly& b) {
    std::vector<Coeff> v(std::max(a.c_.size(), b.c_.size()), Coeff(0));
    for (std::size_t i = 0; i < a.c_.size(); ++i) v[i] += a.c_[i];
    for (std::size_t i = 0; i < b.c_.size(); ++i) v[i] += b.c_[i];
    return BasicFFPoly(std::move(v));
  }

  friend bool operator==(const BasicFFPoly&, const BasicFFPoly&) = default;

 private:
  std::vector<Coeff> c_;
};

using UniPoly = BasicUniPoly<Integer>;
using BiPoly = BasicBiPoly<Integer>;
using FFPoly = BasicFFPoly<Integer>;

/// Expands sum c_i k_(i) into the monomial basis.
template <class Coeff>
BasicUniPoly<Coeff> ff_to_standard(const BasicFFPoly<Coeff>& f) {
  using P = BasicUniPoly<Coeff>;
  P out, falling = P::constant(Coeff(1));
  const auto c = f.coefficients();
  for (std::size_t i = 0; i < c.size(); ++i) {
    if (c[i] != 0) out += falling * P::constant(c[i]);
    falling *= P(std::vector<Coeff>{-Coeff(i), Coeff(1)});
  }
  return out;
}

/// Rewrites a monomial-basis polynomial over falling factorials, using
/// k^j = sum_i S(j,i) k_(i) with Stirling numbers of the second kind.
template <class Coeff>
BasicFFPoly<Coeff> standard_to_ff(const BasicUniPoly<Coeff>& p) {
  const auto c = p.coefficients();
  if (c.empty()) return {};
  const std::size_t d = c.size() - 1;
  std::vector<Coeff> out(d + 1, Coeff(0));
  std::vector<Coeff> stirling{Coeff(1)};  // row j: S(j, 0..j)
  for (std::size_t j = 0; j <= d; ++j) {
    if (j > 0) {
      std::vector<Coeff> next(j + 1, Coeff(0));
      for (std::size_t i = 1; i <= j; ++i) {
        next[i] = Coeff(i) * (i < stirling.size() ? stirling[i] : Coeff(0)) + stirling[i - 1];
      }
      stirling = std::move(next);
    }
    if (c[j] == 0) continue;
    for (std::size_t i = 0; i <= j; ++i) out[i] += c[j] * stirling[i];
  }
  return BasicFFPoly<Coeff>(std::move(out));
}

/// Falling-factorial interpolation from samples at k = 0, 1, ..., d.
///
/// The coefficient of k_(i) is the i-th forward difference at 0 divided by i!.
/// A nonzero remainder throws InterpolationError.
inline FFPoly newton_interpolate(std::span<const Integer> values) {
  std::vector<Integer> diff(values.begin(), values.end());
  std::vector<Integer> out;
  Integer factorial = 1;
  for (std::size_t i = 0; i < diff.size(); ++i) {
    if (i > 0) factorial *= i;
    Integer q, r;
    boost::multiprecision::divide_qr(diff[i], factorial, q, r);
    if (r != 0) {
      throw InterpolationError("forward difference of order " + std::to_string(i) + " (" +
                               diff[i].str() + ") is not divisible by " + factorial.str());
    }
    out.push_back(q);
    for (std::size_t j = diff.size() - 1; j > i; --j) diff[j] -= diff[j - 1];
  }
  return FFPoly(std::move(out));
}

/// Newton divided-difference interpolation through integer nodes.
/// Exact for values of an integer polynomial of degree < nodes.size();
/// any inexact division throws InterpolationError.
inline UniPoly interpolate_at_nodes(std::span<const Integer> nodes, std::span<const Integer> values) {
  if (nodes.size() != values.size()) throw std::invalid_argument("nodes/values size mismatch");
  const std::size_t m = nodes.size();
  std::vector<Integer> dd(values.begin(), values.end());
  for (std::size_t level = 1; level < m; ++level) {
    for (std::size_t i = m - 1; i >= level; --i) {
      Integer num = dd[i] - dd[i - 1];
      Integer den = nodes[i] - nodes[i - level];
      if (den == 0) throw std::invalid_argument("repeated interpolation node");
      Integer q, r;
      boost::multiprecision::divide_qr(num, den, q, r);
      if (r != 0) throw InterpolationError("divided difference is not integral");
      dd[i] = q;
    }
  }
  UniPoly out;
  for (std::size_t i = m; i-- > 0;) {
    out = out * UniPoly(std::vector<Integer>{-nodes[i], 1}) + UniPoly::constant(dd[i]);
  }
  return out;
}

}  // namespace polyzoo

#endif  // POLYZOO_POLY_HPP
