#include <gtest/gtest.h>

#include <filesystem>
#include <fstream>
#include <sstream>

#include "polyzoo_cli.hpp"

namespace {

struct Result {
  int code;
  std::string out, err;
};

Result run(std::vector<std::string> args, const char* env = nullptr) {
  std::ostringstream out, err;
  const int code = polyzoo::cli::run_cli(args, out, err, env);
  return {code, out.str(), err.str()};
}

std::string temp_file(const std::string& name, const std::string& content) {
  const auto path = std::filesystem::temp_directory_path() / ("polyzoo_test_" + name);
  std::ofstream(path) << content;
  return path.string();
}

using Json = nlohmann::ordered_json;

}  // namespace

TEST(Cli, ComputeText) {
  auto r = run({"compute", "K3", "--poly", "chromatic"});
  EXPECT_EQ(r.code, 0);
  EXPECT_EQ(r.out, "2*k - 3*k^2 + k^3\n");
  EXPECT_EQ(run({"compute", "K2", "--poly", "chromatic"}).out, "-k + k^2\n");
  EXPECT_EQ(run({"compute", "P3", "--poly", "matching"}).out, "1 + 2*X\n");
  EXPECT_EQ(run({"compute", "K3", "--poly", "tutte"}).out, "y + x + x^2\n");
  EXPECT_EQ(run({"compute", "K3", "--poly", "charpoly"}).out, "-2 - 3*x + x^3\n");
  EXPECT_EQ(run({"compute", "K3", "--poly", "permx"}).out, "2*x^3\n");
  EXPECT_EQ(run({"compute", "K3", "--poly", "chromatic-ff"}).out, "k_(3)\n");
  EXPECT_EQ(run({"compute", "P3", "--poly", "harary", "--property", "clique"}).out, "2*k_(2) + k_(3)\n");
  EXPECT_EQ(run({"compute", "E2", "--poly", "harary", "--property", "all", "--basis", "monomial"}).out, "k^2\n");
  EXPECT_EQ(run({"compute", "K3", "--poly", "chromatic", "--basis", "ff"}).out, "k_(3)\n");
}

TEST(Cli, GraphInputForms) {
  EXPECT_EQ(run({"compute", "3 0 1 1 2", "--poly", "chromatic"}).out, "k - 2*k^2 + k^3\n");
  EXPECT_EQ(run({"compute", "Bw", "--poly", "chromatic"}).out, "2*k - 3*k^2 + k^3\n");
  EXPECT_EQ(run({"compute", "K2+K1", "--poly", "chromatic"}).out, "-k^2 + k^3\n");
  const auto file = temp_file("graph.txt", "4\n0 1\n1 2\n2 3\n3 0\n");
  EXPECT_EQ(run({"compute", file, "--poly", "matching"}).out, "1 + 4*X + 2*X^2\n");
  const auto g6 = temp_file("graph.g6", "Cl\n");
  EXPECT_EQ(run({"compute", g6, "--poly", "matching"}).out, "1 + 4*X + 2*X^2\n");
  EXPECT_EQ(run({"compute", "Bw", "--poly", "chromatic", "--in-format", "graph6"}).code, 0);
  EXPECT_EQ(run({"compute", "3 0 1", "--poly", "chromatic", "--in-format", "graph6"}).code, 2);
}

TEST(Cli, ComputeJsonIsDeterministic) {
  const auto a = run({"compute", "C5", "--poly", "chromatic", "--format", "json"});
  const auto b = run({"compute", "C5", "--poly", "chromatic", "--format", "json"});
  ASSERT_EQ(a.code, 0);
  EXPECT_EQ(a.out, b.out);
  const auto j = Json::parse(a.out);
  EXPECT_EQ(j["schema"], "polyzoo/1");
  EXPECT_EQ(j["graph"]["n"], 5);
  EXPECT_EQ(j["result"]["basis"], "monomial");
  EXPECT_EQ(polyzoo::format_text(polyzoo::unipoly_from_json(j["result"])), j["text"].get<std::string>());
}

TEST(Cli, Latex) {
  EXPECT_EQ(run({"compute", "K2", "--poly", "chromatic", "--format", "latex"}).out, "-k + k^{2}\n");
}

TEST(Cli, Eval) {
  EXPECT_EQ(run({"eval", "C4", "--poly", "chromatic", "--at", "3"}).out, "18\n");
  EXPECT_EQ(run({"eval", "K3", "--poly", "tutte", "--at", "1,1"}).out, "3\n");
  EXPECT_EQ(run({"eval", "K3", "--poly", "tutte", "--at", "(2,2)"}).out, "8\n");
  EXPECT_EQ(run({"eval", "K3", "--poly", "chromatic", "--at", "-1"}).out, "-6\n");
  EXPECT_EQ(run({"eval", "K3", "--poly", "tutte", "--at", "2"}).code, 4);
  EXPECT_EQ(run({"eval", "K3", "--poly", "chromatic", "--at", "1,2"}).code, 4);
  EXPECT_EQ(run({"eval", "K3", "--poly", "chromatic", "--at", "abc"}).code, 2);
  const auto j = Json::parse(run({"eval", "K3", "--poly", "chromatic", "--at", "100", "--format", "json"}).out);
  EXPECT_EQ(j["value"], "970200");
}

TEST(Cli, Perm) {
  const std::string k3 = "3 0 1 1 1 0 1 1 1 0";
  EXPECT_EQ(run({"perm", k3}).out, "2\tmethod=tw\twidth=2\n");
  EXPECT_EQ(run({"perm", k3, "--method", "naive"}).out, "2\tmethod=naive\n");
  EXPECT_EQ(run({"perm", k3, "--method", "ryser"}).out, "2\tmethod=ryser\n");
  const auto m = temp_file("matrix.txt", k3);
  const auto d = temp_file("decomp.txt", "0 1 2\n");
  const auto j = Json::parse(run({"perm", m, "--decomp", d, "--format", "json"}).out);
  EXPECT_EQ(j["value"], "2");
  EXPECT_EQ(j["width"], 2);
  EXPECT_EQ(j["method"], "tw");
  EXPECT_EQ(run({"perm", k3, "--method", "ryser", "--decomp", d}).code, 4);
  const auto bad = temp_file("bad_decomp.txt", "0 1\n2\n--\n0 1\n");
  EXPECT_EQ(run({"perm", m, "--decomp", bad}).code, 2);
  EXPECT_EQ(run({"perm", "2 0 1 2 0", "--strict"}).code, 2);
  EXPECT_EQ(run({"perm", "2 0 1 2 0"}).out, "2\tmethod=tw\twidth=1\n");
  EXPECT_EQ(run({"perm", "2 0 1 2"}).code, 2);
}

TEST(Cli, Mt) {
  EXPECT_EQ(run({"mt", "--formula", "x1 != x2", "--poly"}).out, "-k + k^2\n");
  EXPECT_EQ(run({"mt", "--formula", "x1 != x2", "--poly", "--basis", "ff"}).out, "k_(2)\n");
  EXPECT_EQ(run({"mt", "--formula", "x1 != x2", "--count", "3"}).out, "6\n");
  EXPECT_EQ(run({"mt", "--formula", "x1 != x2", "--nvars", "3", "--count", "3"}).out, "18\n");
  EXPECT_EQ(run({"mt", "--chromatic-of", "K3", "--count", "3"}).out, "6\n");
  EXPECT_EQ(run({"mt", "--chromatic-of", "P3", "--poly", "--method", "interpolate"}).out, "k - 2*k^2 + k^3\n");
  EXPECT_EQ(run({"mt", "--formula", "x1 != x2", "--count", "3", "--poly"}).code, 4);
  EXPECT_EQ(run({"mt", "--formula", "x1 != x2"}).code, 4);
  EXPECT_EQ(run({"mt", "--formula", "x1 != x2", "--chromatic-of", "K2", "--poly"}).code, 4);
  EXPECT_EQ(run({"mt", "--poly"}).code, 4);
  const auto syntax = run({"mt", "--formula", "x1 = x2 &", "--poly"});
  EXPECT_EQ(syntax.code, 2);
  EXPECT_NE(syntax.err.find("position 9"), std::string::npos);
  EXPECT_EQ(run({"mt", "--formula", "x1 = x5", "--nvars", "2", "--poly"}).code, 2);
  EXPECT_EQ(run({"mt", "--formula", "true", "--count", "100"}).code, 3);
}

TEST(Cli, Compare) {
  const auto cat = temp_file("catalog.txt", "E3: B?\nK2+K1: B_\nP3: Bg\nK3: Bw\n");
  auto same = run({"compare", cat, "--f", "chromatic", "--g", "harary:edgeless"});
  EXPECT_EQ(same.code, 0);
  EXPECT_NE(same.out.find("same distinctive power"), std::string::npos);

  const auto trees = temp_file("trees.txt", "path: DhC\nstar: Ds_\nfork: DsC\n");
  auto diff = run({"compare", trees, "--f", "chromatic", "--g", "matching", "--format", "json"});
  EXPECT_EQ(diff.code, 1);
  const auto j = Json::parse(diff.out);
  EXPECT_EQ(j["same_distinctive_power"], false);
  EXPECT_EQ(j["f_partition"].size(), 1u);
  EXPECT_EQ(j["g_partition"].size(), 3u);
  EXPECT_EQ(j["separated_by_g_only"].size(), 3u);
  EXPECT_EQ(j["separated_by_f_only"].size(), 0u);

  EXPECT_EQ(run({"compare", cat, "--f", "jones", "--g", "chromatic"}).code, 2);
  EXPECT_EQ(run({"compare", "/nonexistent/catalog", "--f", "chromatic", "--g", "tutte"}).code, 2);
}

TEST(Cli, ErrorsAndExitCodes) {
  auto r = run({"compute", "K3", "--poly", "jones"});
  EXPECT_EQ(r.code, 4);
  EXPECT_EQ(std::count(r.err.begin(), r.err.end(), '\n'), 1);
  EXPECT_EQ(run({}).code, 4);
  EXPECT_EQ(run({"frobnicate"}).code, 4);
  EXPECT_EQ(run({"compute", "K3", "--poly", "harary"}).code, 4);
  EXPECT_EQ(run({"compute", "K3", "--poly", "tutte", "--property", "clique"}).code, 4);
  EXPECT_EQ(run({"compute", "Bx", "--poly", "chromatic"}).code, 2);
  EXPECT_EQ(run({"compute", "2 0 5", "--poly", "chromatic"}).code, 2);
  EXPECT_EQ(run({"compute", "C2", "--poly", "chromatic"}).code, 2);
  EXPECT_EQ(run({"compute", "K3", "--poly", "harary", "--property", "bogus"}).code, 2);
  EXPECT_EQ(run({"compute", "2 0 1 0 1", "--poly", "charpoly"}).code, 2);
  EXPECT_EQ(run({"compute", "--help"}).code, 0);
}

TEST(Cli, Budgets) {
  EXPECT_EQ(run({"compute", "C6", "--poly", "chromatic-ff", "--max-nodes", "10"}).code, 3);
  EXPECT_EQ(run({"compute", "C6", "--poly", "chromatic-ff"}, "max-nodes=10").code, 3);
  // Flags override the environment.
  EXPECT_EQ(run({"compute", "C6", "--poly", "chromatic-ff", "--max-nodes", "100000"}, "max-nodes=10").code, 0);
  EXPECT_EQ(run({"perm", "3 1 1 1 1 1 1 1 1 1", "--max-width", "1"}).code, 3);
  EXPECT_EQ(run({"mt", "--formula", "true", "--count", "5"}, "max-k=4").code, 3);
  EXPECT_EQ(run({"compute", "K3", "--poly", "chromatic"}, "max-nodes=lots").code, 4);
  EXPECT_EQ(run({"compute", "K3", "--poly", "chromatic"}, "speed=fast").code, 4);
}

TEST(Cli, DocumentedExamples) {
  EXPECT_EQ(run({"compute", "E4", "--poly", "chromatic"}).out, "k^4\n");
  EXPECT_EQ(run({"compute", "K3", "--poly", "matching"}).out, "1 + 3*X\n");
  EXPECT_EQ(run({"eval", "K3", "--poly", "chromatic", "--at", "3"}).out, "6\n");
  EXPECT_EQ(run({"eval", "P4", "--poly", "chromatic", "--at", "0"}).out, "0\n");
  EXPECT_EQ(run({"eval", "E2", "--poly", "chromatic", "--at", "10"}).out, "100\n");
  for (const auto* method : {"naive", "ryser", "tw"}) {
    EXPECT_EQ(run({"perm", "4 1 0 0 0 0 1 0 0 0 0 1 0 0 0 0 1", "--method", method}).out.substr(0, 2), "1\t");
    EXPECT_EQ(run({"perm", "4 1 1 1 1 1 1 1 1 1 1 1 1 1 1 1 1", "--method", method}).out.substr(0, 3), "24\t");
  }
  EXPECT_EQ(run({"mt", "--formula", "x1 =", "--poly"}).code, 2);
  const auto cat = temp_file("trees_doc.txt", "path: DhC\nstar: Ds_\nfork: DsC\n");
  const auto same = run({"compare", cat, "--f", "chromatic", "--g", "chromatic"});
  EXPECT_EQ(same.code, 0);
  EXPECT_EQ(same.out.find("separated by"), std::string::npos);
  const auto diff = run({"compare", cat, "--f", "chromatic", "--g", "matching"});
  EXPECT_EQ(diff.code, 1);
  EXPECT_NE(diff.out.find("separated by g only:"), std::string::npos);
}
