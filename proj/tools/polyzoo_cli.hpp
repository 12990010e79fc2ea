#ifndef POLYZOO_TOOLS_CLI_HPP
#define POLYZOO_TOOLS_CLI_HPP

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <regex>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"
#include "polyzoo/polyzoo.hpp"

namespace polyzoo::cli {

using Json = nlohmann::ordered_json;

inline constexpr const char* kSchema = "polyzoo/1";

enum ExitCode : int {
  kOk = 0,
  kPowersDiffer = 1,
  kInputError = 2,
  kBudgetError = 3,
  kUsageError = 4,
};

/// Bad flag combination.
class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// "max-nodes=N,max-k=K,max-width=W", any subset, as in POLYZOO_BUDGET.
inline Budget parse_budget_spec(const std::string& spec, Budget base = {}) {
  std::istringstream in(spec);
  std::string item;
  while (std::getline(in, item, ',')) {
    if (item.empty()) continue;
    const auto eq = item.find('=');
    if (eq == std::string::npos) throw UsageError("POLYZOO_BUDGET: expected key=value, got '" + item + "'");
    const auto key = item.substr(0, eq);
    const auto val = item.substr(eq + 1);
    std::uint64_t v = 0;
    try {
      std::size_t used = 0;
      v = std::stoull(val, &used);
      if (used != val.size()) throw std::invalid_argument(val);
    } catch (const std::exception&) {
      throw UsageError("POLYZOO_BUDGET: bad number '" + val + "'");
    }
    if (key == "max-nodes") {
      base.max_nodes = v;
    } else if (key == "max-k") {
      base.max_k = static_cast<unsigned>(v);
    } else if (key == "max-width") {
      base.max_width = static_cast<unsigned>(v);
    } else {
      throw UsageError("POLYZOO_BUDGET: unknown key '" + key + "'");
    }
  }
  return base;
}

inline std::string slurp(const std::string& path) {
  if (path == "-") {
    std::ostringstream ss;
    ss << std::cin.rdbuf();
    return ss.str();
  }
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ParseError("cannot read '" + path + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

/// Named families joined by '+', e.g. "K3", "E4", "P5", "C6", "K2+K1".
inline std::optional<Graph> named_graph(const std::string& text) {
  static const std::regex part(R"(([EKPCS])(\d{1,4}))");
  std::optional<Graph> out;
  std::size_t start = 0;
  while (start <= text.size()) {
    const auto plus = text.find('+', start);
    const auto piece = text.substr(start, plus == std::string::npos ? std::string::npos : plus - start);
    std::smatch m;
    if (!std::regex_match(piece, m, part)) return std::nullopt;
    const auto n = static_cast<std::size_t>(std::stoul(m[2]));
    Graph g;
    switch (m[1].str()[0]) {
      case 'E': g = empty_graph(n); break;
      case 'K': g = complete_graph(n); break;
      case 'P': g = path_graph(n); break;
      case 'S': g = star_graph(n); break;
      default:
        if (n < 3) throw ParseError("cycle C" + std::to_string(n) + " needs at least 3 vertices");
        g = cycle_graph(n);
    }
    out = out ? disjoint_union(*out, g) : g;
    if (plus == std::string::npos) break;
    start = plus + 1;
  }
  return out;
}

/// Resolves a graph argument: named family, file path ("-" for stdin), or
/// literal text. Content starting with a digit is an edge list, otherwise graph6.
inline Graph load_graph(const std::string& arg, const std::string& in_format) {
  if (in_format == "auto") {
    if (auto g = named_graph(arg)) return *g;
  }
  std::string content = arg;
  if (arg == "-" || std::filesystem::is_regular_file(arg)) content = slurp(arg);
  const auto first = content.find_first_not_of(" \t\r\n");
  if (first == std::string::npos) throw ParseError("graph input is empty");
  std::string format = in_format;
  if (format == "auto") format = std::isdigit(static_cast<unsigned char>(content[first])) ? "edgelist" : "graph6";
  if (format == "edgelist") return parse_edge_list(content);
  auto line = content.substr(first);
  line = line.substr(0, line.find_first_of("\r\n"));
  while (!line.empty() && (line.back() == ' ' || line.back() == '\t')) line.pop_back();
  return parse_graph6(line);
}

inline const std::vector<std::string>& poly_names() {
  static const std::vector<std::string> names{"chromatic", "chromatic-ff", "tutte", "matching",
                                              "charpoly",  "permx",        "harary"};
  return names;
}

/// A computed polynomial in whichever representation it naturally has.
struct Computed {
  std::variant<UniPoly, BiPoly, FFPoly> value;
  std::string var;
};

inline Computed compute_poly(const Graph& g, const std::string& poly, const std::string& property,
                             const Budget& budget) {
  if (poly == "harary") {
    if (property.empty()) throw UsageError("--poly harary requires --property");
    return {harary_ff(g, parse_property(property), budget), "k"};
  }
  if (!property.empty()) throw UsageError("--property only applies to --poly harary");
  if (poly == "chromatic") return {chromatic_dc(g, budget), "k"};
  if (poly == "chromatic-ff") return {chromatic_ff(g, budget), "k"};
  if (poly == "tutte") return {tutte(g, budget), "x"};
  if (poly == "matching") return {matching_gen(g, budget), "X"};
  if (poly == "charpoly") return {char_poly(g), "x"};
  if (poly == "permx") return {adjacency_permanent_poly(g, budget), "x"};
  throw UsageError("unknown --poly '" + poly + "'");
}

inline void apply_basis(Computed& c, const std::string& basis) {
  if (basis == "auto") return;
  if (std::holds_alternative<BiPoly>(c.value)) throw UsageError("--basis does not apply to bivariate output");
  if (basis == "monomial") {
    if (auto* f = std::get_if<FFPoly>(&c.value)) c.value = ff_to_standard(*f);
  } else if (basis == "ff") {
    if (auto* p = std::get_if<UniPoly>(&c.value)) c.value = standard_to_ff(*p);
  }
}

inline std::string render(const Computed& c, const std::string& format) {
  return std::visit(
      [&](const auto& p) -> std::string {
        if (format == "latex") return format_latex(p, c.var);
        return format_text(p, c.var);
      },
      c.value);
}

inline Json render_json(const Computed& c) {
  return std::visit([&](const auto& p) { return Json(to_json(p, c.var)); }, c.value);
}

inline Json graph_json(const Graph& g) {
  Json j;
  j["n"] = g.order();
  j["m"] = g.size();
  return j;
}

inline Integer parse_integer_arg(const std::string& s) {
  const auto body = (!s.empty() && (s[0] == '-' || s[0] == '+')) ? s.substr(1) : s;
  if (body.empty() || body.find_first_not_of("0123456789") != std::string::npos) {
    throw ParseError("not an integer: '" + s + "'");
  }
  return Integer(s[0] == '+' ? body : s);
}

/// Runs one CLI invocation. `args` excludes the program name.
inline int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err,
                   const char* env_budget = std::getenv("POLYZOO_BUDGET")) {
  CLI::App app{"Exact graph polynomials: chromatic, Harary, Tutte, matching, characteristic, permanents"};
  app.name("polyzoo");
  app.require_subcommand(1);

  std::string in_format = "auto", format = "text", basis = "auto";
  std::optional<std::uint64_t> max_nodes;
  std::optional<unsigned> max_k, max_width;
  auto add_common = [&](CLI::App* sub) {
    sub->add_option("--format", format, "Output format")->check(CLI::IsMember({"text", "json", "latex"}));
    sub->add_option("--max-nodes", max_nodes, "Cap on recursion nodes / enumerated objects (default 50000000)");
    sub->add_option("--max-k", max_k, "Cap on colour count for brute-force counts (default 64)");
    sub->add_option("--max-width", max_width, "Cap on decomposition width for the permanent DP (default 12)");
  };

  // compute
  std::string graph_arg, poly, property;
  auto* compute = app.add_subcommand("compute", "Compute a graph polynomial");
  compute->add_option("graph", graph_arg, "Graph: named (K3, E4, P5, C6, S3, K2+K1), file, '-', or literal")
      ->required();
  compute->add_option("--poly", poly, "Polynomial")->required()->check(CLI::IsMember(poly_names()));
  compute->add_option("--property", property, "Graph property for --poly harary");
  compute->add_option("--in-format", in_format)->check(CLI::IsMember({"auto", "edgelist", "graph6"}));
  compute->add_option("--basis", basis, "Basis for univariate output")
      ->check(CLI::IsMember({"auto", "monomial", "ff"}));
  add_common(compute);

  // eval
  std::string at;
  auto* eval = app.add_subcommand("eval", "Evaluate a graph polynomial exactly");
  eval->add_option("graph", graph_arg, "Graph argument, as for compute")->required();
  eval->add_option("--poly", poly, "Polynomial")->required()->check(CLI::IsMember(poly_names()));
  eval->add_option("--property", property, "Graph property for --poly harary");
  eval->add_option("--at", at, "Point: k, or x,y for tutte")->required();
  eval->add_option("--in-format", in_format)->check(CLI::IsMember({"auto", "edgelist", "graph6"}));
  add_common(eval);

  // perm
  std::string matrix_arg, method = "tw", decomp_arg;
  bool strict = false;
  auto* perm = app.add_subcommand("perm", "Exact permanent of an integer matrix");
  perm->add_option("matrix", matrix_arg, "Matrix file ('-' for stdin) or literal 'n a11 a12 ...'")->required();
  perm->add_option("--method", method)->check(CLI::IsMember({"naive", "ryser", "tw"}));
  perm->add_option("--decomp", decomp_arg, "Tree decomposition file (tw only)");
  perm->add_flag("--strict", strict, "Reject asymmetric matrices");
  add_common(perm);

  // mt
  std::string formula_text, chromatic_of;
  std::optional<unsigned> nvars, count_k;
  bool want_poly = false;
  std::string mt_method = "partition";
  auto* mt = app.add_subcommand("mt", "Count models of a colour formula in finite models M_k");
  mt->add_option("--formula", formula_text, "Quantifier-free colour formula, e.g. 'x1 != x2'");
  mt->add_option("--chromatic-of", chromatic_of, "Use the proper-colouring formula of this graph");
  mt->add_option("--nvars", nvars, "Number of colour variables");
  mt->add_option("--count", count_k, "Count satisfying tuples for this k");
  mt->add_flag("--poly", want_poly, "Print the counting polynomial");
  mt->add_option("--method", mt_method)->check(CLI::IsMember({"partition", "interpolate"}));
  mt->add_option("--basis", basis)->check(CLI::IsMember({"auto", "monomial", "ff"}));
  mt->add_option("--in-format", in_format)->check(CLI::IsMember({"auto", "edgelist", "graph6"}));
  add_common(mt);

  // compare
  std::string catalog_arg, f_inv, g_inv;
  auto* compare = app.add_subcommand("compare", "Compare distinctive power of two invariants on a catalog");
  compare->add_option("catalog", catalog_arg, "Catalog file: graph6 per line, optional 'label:' prefix")
      ->required();
  compare->add_option("--f", f_inv, "First invariant (e.g. chromatic, harary:edgeless)")->required();
  compare->add_option("--g", g_inv, "Second invariant")->required();
  add_common(compare);

  std::vector<std::string> argv_store{"polyzoo"};
  argv_store.insert(argv_store.end(), args.begin(), args.end());
  std::vector<char*> argv;
  for (auto& a : argv_store) argv.push_back(a.data());

  auto diagnostic = [&](const std::string& msg) {
    std::string one_line = msg;
    for (auto& ch : one_line)
      if (ch == '\n') ch = ' ';
    err << "polyzoo: error: " << one_line << "\n";
  };

  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kOk;
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) {
      out << app.help();
      return kOk;
    }
    diagnostic(e.what());
    return kUsageError;
  }

  try {
    Budget budget;
    if (env_budget) budget = parse_budget_spec(env_budget, budget);
    if (max_nodes) budget.max_nodes = *max_nodes;
    if (max_k) budget.max_k = *max_k;
    if (max_width) budget.max_width = *max_width;

    auto emit_json = [&](Json j) { out << j.dump(2) << "\n"; };

    if (compute->parsed()) {
      const Graph g = load_graph(graph_arg, in_format);
      auto result = compute_poly(g, poly, property, budget);
      if (basis == "auto" && poly == "chromatic") basis = "monomial";
      apply_basis(result, basis);
      if (format == "json") {
        Json j;
        j["schema"] = kSchema;
        j["command"] = "compute";
        j["poly"] = poly;
        if (!property.empty()) j["property"] = property;
        j["graph"] = graph_json(g);
        j["result"] = render_json(result);
        j["text"] = render(result, "text");
        emit_json(std::move(j));
      } else {
        out << render(result, format) << "\n";
      }
      return kOk;
    }

    if (eval->parsed()) {
      const Graph g = load_graph(graph_arg, in_format);
      auto result = compute_poly(g, poly, property, budget);
      std::string point = at;
      if (!point.empty() && point.front() == '(' && point.back() == ')') point = point.substr(1, point.size() - 2);
      const auto comma = point.find(',');
      Integer value;
      Json where;
      if (auto* bi = std::get_if<BiPoly>(&result.value)) {
        if (comma == std::string::npos) throw UsageError("--poly tutte needs --at x,y");
        const auto xv = parse_integer_arg(point.substr(0, comma));
        const auto yv = parse_integer_arg(point.substr(comma + 1));
        value = bi->eval(xv, yv);
        where = Json::array({xv.str(), yv.str()});
      } else {
        if (comma != std::string::npos) throw UsageError("--at takes a single value for --poly " + poly);
        const auto kv = parse_integer_arg(point);
        value = std::visit(
            [&](const auto& p) -> Integer {
              if constexpr (std::is_same_v<std::decay_t<decltype(p)>, BiPoly>) {
                return 0;
              } else {
                return p.eval(kv);
              }
            },
            result.value);
        where = kv.str();
      }
      if (format == "json") {
        Json j;
        j["schema"] = kSchema;
        j["command"] = "eval";
        j["poly"] = poly;
        if (!property.empty()) j["property"] = property;
        j["at"] = where;
        j["value"] = value.str();
        emit_json(std::move(j));
      } else {
        out << value.str() << "\n";
      }
      return kOk;
    }

    if (perm->parsed()) {
      const std::string text =
          (matrix_arg == "-" || std::filesystem::is_regular_file(matrix_arg)) ? slurp(matrix_arg) : matrix_arg;
      const IntMatrix m = parse_matrix(text);
      if (strict && !m.is_symmetric()) throw std::invalid_argument("--strict: matrix is not symmetric");
      if (!decomp_arg.empty() && method != "tw") throw UsageError("--decomp only applies to --method tw");
      Integer value;
      std::optional<long> width;
      if (method == "naive") {
        value = permanent_naive(m);
      } else if (method == "ryser") {
        value = permanent_ryser(m);
      } else {
        const TreeDecomposition td = decomp_arg.empty() ? greedy_tree_decomposition(support_graph(m))
                                                        : parse_tree_decomposition(slurp(decomp_arg));
        width = td.width();
        value = permanent_tw(m, td, budget);
      }
      if (format == "json") {
        Json j;
        j["schema"] = kSchema;
        j["command"] = "perm";
        j["method"] = method;
        j["n"] = m.dim();
        if (width) j["width"] = *width;
        j["value"] = value.str();
        emit_json(std::move(j));
      } else {
        out << value.str() << "\tmethod=" << method;
        if (width) out << "\twidth=" << *width;
        out << "\n";
      }
      return kOk;
    }

    if (mt->parsed()) {
      if (formula_text.empty() == chromatic_of.empty()) {
        throw UsageError("give exactly one of --formula and --chromatic-of");
      }
      if (count_k.has_value() == want_poly) throw UsageError("give exactly one of --count and --poly");
      ColorFormula phi = ColorFormula::truth();
      unsigned vars = 0;
      if (!formula_text.empty()) {
        phi = parse_formula(formula_text);
        vars = phi.max_variable();
      } else {
        const Graph g = load_graph(chromatic_of, in_format);
        phi = chromatic_formula(g);
        vars = static_cast<unsigned>(g.order());
      }
      if (nvars) vars = *nvars;
      Json j;
      j["schema"] = kSchema;
      j["command"] = "mt";
      j["formula"] = to_string(phi);
      j["nvars"] = vars;
      if (count_k) {
        if (*count_k > budget.max_k) {
          throw BudgetExceeded("k=" + std::to_string(*count_k) + " exceeds --max-k " + std::to_string(budget.max_k));
        }
        const auto c = count_assignments({phi, vars, *count_k}, budget);
        if (format == "json") {
          j["k"] = *count_k;
          j["count"] = c.str();
          emit_json(std::move(j));
        } else {
          out << c.str() << "\n";
        }
        return kOk;
      }
      Computed result{mt_method == "partition" ? counting_polynomial(phi, vars, budget)
                                               : interpolated_polynomial(phi, vars, budget),
                      "k"};
      apply_basis(result, basis == "auto" ? "monomial" : basis);
      if (format == "json") {
        j["method"] = mt_method;
        j["result"] = render_json(result);
        j["text"] = render(result, "text");
        emit_json(std::move(j));
      } else {
        out << render(result, format) << "\n";
      }
      return kOk;
    }

    if (compare->parsed()) {
      const Catalog cat = parse_catalog(slurp(catalog_arg));
      const auto f = parse_invariant(f_inv);
      const auto g = parse_invariant(g_inv);
      const auto pf = invariant_partition(f, cat, budget);
      const auto pg = invariant_partition(g, cat, budget);
      const auto rep = distinguishing_report(f, g, cat, budget);
      const bool same = normalized(pf) == normalized(pg);
      if (format == "json") {
        Json j;
        j["schema"] = kSchema;
        j["command"] = "compare";
        j["f"] = rep.f;
        j["g"] = rep.g;
        j["graphs"] = cat.size();
        j["f_partition"] = pf;
        j["g_partition"] = pg;
        j["same_distinctive_power"] = same;
        auto pairs = [](const std::vector<SeparatedPair>& v) {
          Json arr = Json::array();
          for (const auto& p : v) {
            Json e;
            e["a"] = p.a;
            e["b"] = p.b;
            e["f_a"] = p.f_a;
            e["f_b"] = p.f_b;
            e["g_a"] = p.g_a;
            e["g_b"] = p.g_b;
            arr.push_back(std::move(e));
          }
          return arr;
        };
        j["separated_by_f_only"] = pairs(rep.only_f);
        j["separated_by_g_only"] = pairs(rep.only_g);
        emit_json(std::move(j));
      } else {
        auto show = [](const LabelPartition& p) {
          std::string s;
          for (const auto& b : p) {
            s += s.empty() ? "{" : " {";
            for (std::size_t i = 0; i < b.size(); ++i) s += (i ? "," : "") + b[i];
            s += "}";
          }
          return s;
        };
        out << "f: " << rep.f << "\n"
            << "g: " << rep.g << "\n"
            << "graphs: " << cat.size() << "\n"
            << "f classes (" << pf.size() << "): " << show(pf) << "\n"
            << "g classes (" << pg.size() << "): " << show(pg) << "\n"
            << "verdict: " << (same ? "same distinctive power" : "different distinctive power") << "\n";
        auto table = [&](const char* title, const std::vector<SeparatedPair>& v) {
          if (v.empty()) return;
          out << title << "\n";
          for (const auto& p : v) {
            out << "  " << p.a << " vs " << p.b << "\n"
                << "    f: " << p.f_a << "  |  " << p.f_b << "\n"
                << "    g: " << p.g_a << "  |  " << p.g_b << "\n";
          }
        };
        table("separated by f only:", rep.only_f);
        table("separated by g only:", rep.only_g);
      }
      return same ? kOk : kPowersDiffer;
    }
  } catch (const UsageError& e) {
    diagnostic(e.what());
    return kUsageError;
  } catch (const BudgetExceeded& e) {
    diagnostic(e.what());
    return kBudgetError;
  } catch (const ParseError& e) {
    diagnostic(e.what());
    return kInputError;
  } catch (const std::exception& e) {
    diagnostic(e.what());
    return kInputError;
  }
  return kUsageError;
}

}  // namespace polyzoo::cli

#endif  // POLYZOO_TOOLS_CLI_HPP
