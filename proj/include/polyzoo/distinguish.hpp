#ifndef POLYZOO_DISTINGUISH_HPP
#define POLYZOO_DISTINGUISH_HPP

#include <algorithm>
#include <map>
#include <set>
#include <sstream>
#include <string>
#include <string_view>
#include <utility>
#include <variant>
#include <vector>

#include "polyzoo/charpoly.hpp"
#include "polyzoo/chromatic.hpp"
#include "polyzoo/graph_io.hpp"
#include "polyzoo/harary.hpp"
#include "polyzoo/matching.hpp"
#include "polyzoo/permanent.hpp"
#include "polyzoo/poly_format.hpp"
#include "polyzoo/tutte.hpp"

namespace polyzoo {

/// Ordered (label, graph) list with unique labels.
class Catalog {
 public:
  void add(std::string label, Graph g) {
    if (!labels_.insert(label).second) throw std::invalid_argument("duplicate catalog label '" + label + "'");
    entries_.emplace_back(std::move(label), std::move(g));
  }
  const std::vector<std::pair<std::string, Graph>>& entries() const noexcept { return entries_; }
  std::size_t size() const noexcept { return entries_.size(); }

 private:
  std::vector<std::pair<std::string, Graph>> entries_;
  std::set<std::string> labels_;
};

/// One graph6 string per line, optionally prefixed "label:". Unlabelled lines
/// are named g1, g2, ... by line number. Blank lines and '#' comments are skipped.
inline Catalog parse_catalog(std::string_view text) {
  Catalog cat;
  std::istringstream in{std::string(text)};
  std::string line;
  std::size_t lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    const auto first = line.find_first_not_of(" \t\r");
    if (first == std::string::npos || line[first] == '#') continue;
    line = line.substr(first, line.find_last_not_of(" \t\r") - first + 1);
    std::string label = "g" + std::to_string(lineno);
    if (auto colon = line.find(':'); colon != std::string::npos) {
      label = line.substr(0, colon);
      line = line.substr(colon + 1);
      const auto f = line.find_first_not_of(" \t");
      line = f == std::string::npos ? "" : line.substr(f);
    }
    try {
      cat.add(label, parse_graph6(line));
    } catch (const ParseError& e) {
      throw ParseError("catalog line " + std::to_string(lineno) + ": " + e.what());
    }
  }
  return cat;
}

struct InvariantId {
  std::string name;      // chromatic, chromatic-ff, tutte, matching, charpoly, permx, harary
  std::string property;  // only for harary

  std::string str() const { return property.empty() ? name : name + ":" + property; }
};

inline InvariantId parse_invariant(std::string_view text) {
  static const std::vector<std::string> known{"chromatic", "chromatic-ff", "tutte", "matching",
                                              "charpoly",  "permx",        "harary"};
  InvariantId id;
  const auto colon = text.find(':');
  id.name = std::string(text.substr(0, colon));
  if (std::find(known.begin(), known.end(), id.name) == known.end()) {
    throw ParseError("unknown invariant '" + id.name + "'");
  }
  if (colon != std::string_view::npos) id.property = std::string(text.substr(colon + 1));
  if (id.name == "harary") {
    if (id.property.empty()) throw ParseError("harary needs a property, e.g. harary:edgeless");
    parse_property(id.property);
  } else if (!id.property.empty()) {
    throw ParseError("invariant '" + id.name + "' takes no parameter");
  }
  return id;
}

/// The exact value of an invariant on one graph.
struct InvariantValue {
  std::variant<UniPoly, BiPoly, FFPoly> poly;
  std::string variable = "k";

  std::string text() const {
    return std::visit([&](const auto& p) { return format_text(p, variable); }, poly);
  }

  friend bool operator==(const InvariantValue& a, const InvariantValue& b) { return a.poly == b.poly; }
};

inline InvariantValue compute_invariant(const InvariantId& id, const Graph& g, const Budget& budget = {}) {
  if (id.name == "chromatic") return {chromatic_dc(g, budget), "k"};
  if (id.name == "chromatic-ff") return {chromatic_ff(g, budget), "k"};
  if (id.name == "tutte") return {tutte(g, budget), "x"};
  if (id.name == "matching") return {matching_gen(g, budget), "X"};
  if (id.name == "charpoly") return {char_poly(g), "x"};
  if (id.name == "permx") return {adjacency_permanent_poly(g, budget), "x"};
  if (id.name == "harary") return {harary_ff(g, parse_property(id.property), budget), "k"};
  throw std::invalid_argument("unknown invariant '" + id.name + "'");
}

using LabelPartition = std::vector<std::vector<std::string>>;

/// Classes of exact polynomial equality, in order of first appearance.
inline LabelPartition invariant_partition(const InvariantId& id, const Catalog& cat, const Budget& budget = {}) {
  std::vector<InvariantValue> reps;
  LabelPartition blocks;
  for (const auto& [label, g] : cat.entries()) {
    auto value = compute_invariant(id, g, budget);
    auto it = std::find(reps.begin(), reps.end(), value);
    if (it == reps.end()) {
      reps.push_back(std::move(value));
      blocks.push_back({label});
    } else {
      blocks[static_cast<std::size_t>(it - reps.begin())].push_back(label);
    }
  }
  return blocks;
}

/// Order-independent form of a partition, for set-partition comparison.
inline LabelPartition normalized(LabelPartition p) {
  for (auto& b : p) std::sort(b.begin(), b.end());
  std::sort(p.begin(), p.end());
  return p;
}

inline bool same_distinctive_power(const InvariantId& f, const InvariantId& g, const Catalog& cat,
                                   const Budget& budget = {}) {
  return normalized(invariant_partition(f, cat, budget)) == normalized(invariant_partition(g, cat, budget));
}

struct SeparatedPair {
  std::string a, b;
  std::string f_a, f_b, g_a, g_b;  // rendered values as evidence
};

struct DistinguishingReport {
  std::string f, g;
  std::vector<SeparatedPair> only_f;  // f separates, g does not
  std::vector<SeparatedPair> only_g;

  bool same_power() const { return only_f.empty() && only_g.empty(); }
};

inline DistinguishingReport distinguishing_report(const InvariantId& f, const InvariantId& g, const Catalog& cat,
                                                  const Budget& budget = {}) {
  DistinguishingReport rep{f.str(), g.str(), {}, {}};
  std::vector<InvariantValue> fv, gv;
  for (const auto& [label, graph] : cat.entries()) {
    fv.push_back(compute_invariant(f, graph, budget));
    gv.push_back(compute_invariant(g, graph, budget));
  }
  const auto& e = cat.entries();
  for (std::size_t i = 0; i < e.size(); ++i) {
    for (std::size_t j = i + 1; j < e.size(); ++j) {
      const bool sf = !(fv[i] == fv[j]);
      const bool sg = !(gv[i] == gv[j]);
      if (sf == sg) continue;
      SeparatedPair p{e[i].first, e[j].first, fv[i].text(), fv[j].text(), gv[i].text(), gv[j].text()};
      (sf ? rep.only_f : rep.only_g).push_back(std::move(p));
    }
  }
  return rep;
}

}  // namespace polyzoo

#endif  // POLYZOO_DISTINGUISH_HPP
