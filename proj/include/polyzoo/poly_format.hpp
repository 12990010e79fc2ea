#ifndef POLYZOO_POLY_FORMAT_HPP
#define POLYZOO_POLY_FORMAT_HPP

#include <string>
#include <vector>

#include "json.hpp"

#include "polyzoo/poly.hpp"

namespace polyzoo {

namespace detail {

struct RenderedTerm {
  Integer coeff;
  std::string monomial;  // empty for the constant term
};

inline std::string join_terms(const std::vector<RenderedTerm>& terms, const char* times) {
  if (terms.empty()) return "0";
  std::string out;
  for (std::size_t i = 0; i < terms.size(); ++i) {
    const auto& t = terms[i];
    const bool negative = t.coeff < 0;
    const Integer mag = negative ? Integer(-t.coeff) : t.coeff;
    if (i == 0) {
      if (negative) out += "-";
    } else {
      out += negative ? " - " : " + ";
    }
    if (t.monomial.empty()) {
      out += mag.str();
    } else if (mag == 1) {
      out += t.monomial;
    } else {
      out += mag.str() + times + t.monomial;
    }
  }
  return out;
}

inline std::string power(const std::string& var, std::size_t e) {
  if (e == 0) return "";
  if (e == 1) return var;
  return var + "^" + std::to_string(e);
}

inline std::string latex_power(const std::string& var, std::size_t e) {
  if (e == 0) return "";
  if (e == 1) return var;
  return var + "^{" + std::to_string(e) + "}";
}

}  // namespace detail

/// Ascending plain text, e.g. "-k + k^2" or "1 + 3*X".
inline std::string format_text(const UniPoly& p, const std::string& var = "k") {
  std::vector<detail::RenderedTerm> terms;
  const auto c = p.coefficients();
  for (std::size_t i = 0; i < c.size(); ++i)
    if (c[i] != 0) terms.push_back({c[i], detail::power(var, i)});
  return detail::join_terms(terms, "*");
}

inline std::string format_text(const BiPoly& p, const std::string& xv = "x", const std::string& yv = "y") {
  std::vector<detail::RenderedTerm> terms;
  for (const auto& [e, c] : p.terms()) {
    auto mono = detail::power(xv, e.first);
    auto ypart = detail::power(yv, e.second);
    if (!mono.empty() && !ypart.empty()) mono += "*";
    terms.push_back({c, mono + ypart});
  }
  return detail::join_terms(terms, "*");
}

/// Falling-factorial basis rendered as "k_(i)".
inline std::string format_text(const FFPoly& f, const std::string& var = "k") {
  std::vector<detail::RenderedTerm> terms;
  const auto c = f.coefficients();
  for (std::size_t i = 0; i < c.size(); ++i)
    if (c[i] != 0) terms.push_back({c[i], i == 0 ? "" : var + "_(" + std::to_string(i) + ")"});
  return detail::join_terms(terms, "*");
}

inline std::string format_latex(const UniPoly& p, const std::string& var = "k") {
  std::vector<detail::RenderedTerm> terms;
  const auto c = p.coefficients();
  for (std::size_t i = 0; i < c.size(); ++i)
    if (c[i] != 0) terms.push_back({c[i], detail::latex_power(var, i)});
  return detail::join_terms(terms, " ");
}

inline std::string format_latex(const BiPoly& p, const std::string& xv = "x", const std::string& yv = "y") {
  std::vector<detail::RenderedTerm> terms;
  for (const auto& [e, c] : p.terms())
    terms.push_back({c, detail::latex_power(xv, e.first) + detail::latex_power(yv, e.second)});
  return detail::join_terms(terms, " ");
}

inline std::string format_latex(const FFPoly& f, const std::string& var = "k") {
  std::vector<detail::RenderedTerm> terms;
  const auto c = f.coefficients();
  for (std::size_t i = 0; i < c.size(); ++i) {
    if (c[i] == 0) continue;
    terms.push_back({c[i], i == 0 ? "" : var + "^{\\underline{" + std::to_string(i) + "}}"});
  }
  return detail::join_terms(terms, " ");
}

// JSON keeps coefficients as decimal strings so no integer width is assumed.

inline nlohmann::ordered_json to_json(const UniPoly& p, const std::string& var = "k") {
  nlohmann::ordered_json j;
  j["basis"] = "monomial";
  j["variable"] = var;
  auto arr = nlohmann::ordered_json::array();
  for (const auto& c : p.coefficients()) arr.push_back(c.str());
  j["coefficients"] = std::move(arr);
  return j;
}

inline nlohmann::ordered_json to_json(const FFPoly& f, const std::string& var = "k") {
  nlohmann::ordered_json j;
  j["basis"] = "falling_factorial";
  j["variable"] = var;
  auto arr = nlohmann::ordered_json::array();
  for (const auto& c : f.coefficients()) arr.push_back(c.str());
  j["coefficients"] = std::move(arr);
  return j;
}

inline nlohmann::ordered_json to_json(const BiPoly& p, const std::string& xv = "x", const std::string& yv = "y") {
  nlohmann::ordered_json j;
  j["basis"] = "bivariate";
  j["variables"] = {xv, yv};
  auto arr = nlohmann::ordered_json::array();
  for (const auto& [e, c] : p.terms()) arr.push_back({e.first, e.second, c.str()});
  j["terms"] = std::move(arr);
  return j;
}

inline UniPoly unipoly_from_json(const nlohmann::ordered_json& j) {
  std::vector<Integer> c;
  for (const auto& s : j.at("coefficients")) c.emplace_back(s.get<std::string>());
  return UniPoly(std::move(c));
}

}  // namespace polyzoo

#endif  // POLYZOO_POLY_FORMAT_HPP
