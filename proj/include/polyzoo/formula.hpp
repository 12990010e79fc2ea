#ifndef POLYZOO_FORMULA_HPP
#define POLYZOO_FORMULA_HPP

#include <algorithm>
#include <cctype>
#include <memory>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "polyzoo/core.hpp"
#include "polyzoo/graph.hpp"

namespace polyzoo {

/// Quantifier-free formula over colour variables x1, x2, ...: equality atoms,
/// negation, n-ary conjunction and disjunction, and the two constants.
class ColorFormula {
 public:
  enum class Kind { True, False, Eq, Not, And, Or };

  static ColorFormula truth() { return ColorFormula(Kind::True); }
  static ColorFormula falsity() { return ColorFormula(Kind::False); }

  static ColorFormula eq(unsigned i, unsigned j) {
    if (i == 0 || j == 0) throw std::invalid_argument("colour variables are 1-indexed");
    ColorFormula f(Kind::Eq);
    f.node_->lhs = i;
    f.node_->rhs = j;
    return f;
  }

  static ColorFormula neq(unsigned i, unsigned j) { return negate(eq(i, j)); }

  static ColorFormula negate(ColorFormula f) {
    ColorFormula out(Kind::Not);
    out.node_->children.push_back(std::move(f));
    return out;
  }

  static ColorFormula conj(std::vector<ColorFormula> parts) { return nary(Kind::And, std::move(parts)); }
  static ColorFormula disj(std::vector<ColorFormula> parts) { return nary(Kind::Or, std::move(parts)); }

  Kind kind() const { return node_->kind; }
  unsigned lhs() const { return node_->lhs; }
  unsigned rhs() const { return node_->rhs; }
  std::span<const ColorFormula> children() const { return node_->children; }

  /// Highest variable index mentioned; 0 for closed formulas.
  unsigned max_variable() const {
    unsigned m = std::max(node_->lhs, node_->rhs);
    for (const auto& c : node_->children) m = std::max(m, c.max_variable());
    return m;
  }

  /// Evaluates with Eq(i,j) meaning colour[i-1] == colour[j-1].
  template <class Colors>
  bool eval(const Colors& colour) const {
    switch (node_->kind) {
      case Kind::True: return true;
      case Kind::False: return false;
      case Kind::Eq: return colour[node_->lhs - 1] == colour[node_->rhs - 1];
      case Kind::Not: return !node_->children.front().eval(colour);
      case Kind::And:
        for (const auto& c : node_->children)
          if (!c.eval(colour)) return false;
        return true;
      case Kind::Or:
        for (const auto& c : node_->children)
          if (c.eval(colour)) return true;
        return false;
    }
    return false;
  }

  friend bool operator==(const ColorFormula& a, const ColorFormula& b) {
    if (a.node_ == b.node_) return true;
    return a.node_->kind == b.node_->kind && a.node_->lhs == b.node_->lhs && a.node_->rhs == b.node_->rhs &&
           a.node_->children == b.node_->children;
  }

 private:
  struct Node {
    Kind kind;
    unsigned lhs = 0;
    unsigned rhs = 0;
    std::vector<ColorFormula> children;
  };

  explicit ColorFormula(Kind k) : node_(std::make_shared<Node>(Node{k, 0, 0, {}})) {}

  static ColorFormula nary(Kind k, std::vector<ColorFormula> parts) {
    if (parts.empty()) return k == Kind::And ? truth() : falsity();
    if (parts.size() == 1) return std::move(parts.front());
    ColorFormula out(k);
    out.node_->children = std::move(parts);
    return out;
  }

  std::shared_ptr<Node> node_;
};

namespace detail {

class FormulaParser {
 public:
  explicit FormulaParser(std::string_view text) : s_(text) {}

  ColorFormula parse() {
    auto f = disjunction();
    skip_space();
    if (pos_ != s_.size()) fail("unexpected '" + std::string(1, s_[pos_]) + "'");
    return f;
  }

 private:
  [[noreturn]] void fail(const std::string& msg) const {
    throw ParseError("formula: " + msg + " at position " + std::to_string(pos_), pos_);
  }

  void skip_space() {
    while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
  }

  bool accept(std::string_view tok) {
    skip_space();
    if (s_.substr(pos_, tok.size()) == tok) {
      pos_ += tok.size();
      return true;
    }
    return false;
  }

  bool accept_keyword(std::string_view word) {
    skip_space();
    if (s_.substr(pos_, word.size()) != word) return false;
    const auto end = pos_ + word.size();
    if (end < s_.size() && (std::isalnum(static_cast<unsigned char>(s_[end])) || s_[end] == '_')) return false;
    pos_ = end;
    return true;
  }

  ColorFormula disjunction() {
    std::vector<ColorFormula> parts{conjunction()};
    while (accept("|")) parts.push_back(conjunction());
    return ColorFormula::disj(std::move(parts));
  }

  ColorFormula conjunction() {
    std::vector<ColorFormula> parts{unit()};
    while (accept("&")) parts.push_back(unit());
    return ColorFormula::conj(std::move(parts));
  }

  ColorFormula unit() {
    skip_space();
    if (pos_ >= s_.size()) fail("unexpected end of input");
    if (s_[pos_] == '!' && s_.substr(pos_, 2) != "!=") {
      ++pos_;
      return ColorFormula::negate(unit());
    }
    if (accept("(")) {
      auto f = disjunction();
      if (!accept(")")) fail("expected ')'");
      return f;
    }
    if (accept_keyword("true")) return ColorFormula::truth();
    if (accept_keyword("false")) return ColorFormula::falsity();
    const unsigned a = variable();
    bool negated = false;
    if (accept("!=")) {
      negated = true;
    } else if (!accept("=")) {
      fail("expected '=' or '!='");
    }
    const unsigned b = variable();
    return negated ? ColorFormula::neq(a, b) : ColorFormula::eq(a, b);
  }

  unsigned variable() {
    skip_space();
    if (pos_ >= s_.size() || s_[pos_] != 'x') fail("expected a variable x<index>");
    ++pos_;
    const auto start = pos_;
    unsigned long value = 0;
    while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) {
      value = value * 10 + static_cast<unsigned long>(s_[pos_] - '0');
      if (value > 1'000'000) fail("variable index too large");
      ++pos_;
    }
    if (pos_ == start) fail("expected digits after 'x'");
    if (value == 0) {
      pos_ = start;
      fail("variable index must be positive");
    }
    return static_cast<unsigned>(value);
  }

  std::string_view s_;
  std::size_t pos_ = 0;
};

}  // namespace detail

/// Grammar: formula := disj; disj := conj {"|" conj}; conj := unit {"&" unit};
/// unit := "!" unit | "(" formula ")" | atom | "true" | "false";
/// atom := var ("=" | "!=") var; var := "x" positive-integer.
inline ColorFormula parse_formula(std::string_view text) { return detail::FormulaParser(text).parse(); }

/// Prints with the fewest parentheses that parse back to the same tree.
inline std::string to_string(const ColorFormula& f) {
  using K = ColorFormula::Kind;
  auto var = [](unsigned i) { return "x" + std::to_string(i); };
  switch (f.kind()) {
    case K::True: return "true";
    case K::False: return "false";
    case K::Eq: return var(f.lhs()) + " = " + var(f.rhs());
    case K::Not: {
      const auto& c = f.children().front();
      if (c.kind() == K::Eq) return var(c.lhs()) + " != " + var(c.rhs());
      const bool wrap = c.kind() == K::And || c.kind() == K::Or;
      return "!" + (wrap ? "(" + to_string(c) + ")" : to_string(c));
    }
    case K::And:
    case K::Or: {
      std::string out;
      for (const auto& c : f.children()) {
        if (!out.empty()) out += f.kind() == K::And ? " & " : " | ";
        // Same-kind children need parentheses to stay nested; a disjunction
        // inside a conjunction needs them for precedence.
        const bool wrap = c.kind() == f.kind() || (f.kind() == K::And && c.kind() == K::Or);
        out += wrap ? "(" + to_string(c) + ")" : to_string(c);
      }
      return out;
    }
  }
  return {};
}

/// Conjunction of x_u != x_v over the distinct edges of G (1-indexed); a loop
/// gives the unsatisfiable atom x_v != x_v.
inline ColorFormula chromatic_formula(const Graph& g) {
  std::vector<ColorFormula> atoms;
  const auto edges = g.edges();
  for (std::size_t i = 0; i < edges.size(); ++i) {
    if (i > 0 && edges[i] == edges[i - 1]) continue;
    atoms.push_back(ColorFormula::neq(edges[i].u + 1, edges[i].v + 1));
  }
  return ColorFormula::conj(std::move(atoms));
}

}  // namespace polyzoo

#endif  // POLYZOO_FORMULA_HPP
