#include <gtest/gtest.h>

#include "polyzoo/polyzoo.hpp"
#include "support/catalog.hpp"

using namespace polyzoo;

namespace {

Catalog small_catalog() {
  Catalog cat;
  cat.add("E3", empty_graph(3));
  cat.add("K2+K1", disjoint_union(complete_graph(2), empty_graph(1)));
  cat.add("P3", path_graph(3));
  cat.add("K3", complete_graph(3));
  return cat;
}

Catalog tree_catalog(std::size_t n) {
  Catalog cat;
  const auto ts = polyzoo::testing::trees(n);
  for (std::size_t i = 0; i < ts.size(); ++i) cat.add("T" + std::to_string(i), ts[i]);
  return cat;
}

}  // namespace

TEST(Catalog, Parse) {
  const auto cat = parse_catalog("# tiny\ntri: Bw\n\nBg\n  @  \n");
  ASSERT_EQ(cat.size(), 3u);
  EXPECT_EQ(cat.entries()[0].first, "tri");
  EXPECT_EQ(cat.entries()[0].second, complete_graph(3));
  EXPECT_EQ(cat.entries()[1].first, "g4");
  EXPECT_EQ(cat.entries()[2].first, "g5");
  EXPECT_EQ(cat.entries()[2].second, empty_graph(1));
}

TEST(Catalog, Errors) {
  EXPECT_THROW(parse_catalog("a: Bw\na: Bg\n"), std::invalid_argument);
  EXPECT_THROW(parse_catalog("Bw\nB!\n"), ParseError);
}

TEST(Invariant, Parse) {
  EXPECT_EQ(parse_invariant("chromatic").str(), "chromatic");
  EXPECT_EQ(parse_invariant("harary:edgeless").str(), "harary:edgeless");
  EXPECT_THROW(parse_invariant("harary"), ParseError);
  EXPECT_THROW(parse_invariant("harary:nonsense"), ParseError);
  EXPECT_THROW(parse_invariant("tutte:x"), ParseError);
  EXPECT_THROW(parse_invariant("jones"), ParseError);
}

TEST(Distinguish, ChromaticSeparatesSmallCatalog) {
  const auto p = invariant_partition(parse_invariant("chromatic"), small_catalog());
  EXPECT_EQ(p.size(), 4u);
  for (const auto& b : p) EXPECT_EQ(b.size(), 1u);
}

TEST(Distinguish, TreesShareChromaticPolynomial) {
  for (std::size_t n : {5u, 6u}) {
    const auto cat = tree_catalog(n);
    EXPECT_EQ(cat.size(), n == 5 ? 3u : 6u);
    EXPECT_EQ(invariant_partition(parse_invariant("chromatic"), cat).size(), 1u);
  }
}

TEST(Distinguish, SingletonCatalog) {
  Catalog cat;
  cat.add("only", cycle_graph(5));
  for (const auto* name : {"chromatic", "tutte", "matching", "charpoly", "permx", "harary:clique"}) {
    EXPECT_EQ(invariant_partition(parse_invariant(name), cat), (LabelPartition{{"only"}}));
  }
}

TEST(Distinguish, SamePowerReflexiveAndHararyEdgeless) {
  const auto cat = small_catalog();
  const auto chrom = parse_invariant("chromatic");
  EXPECT_TRUE(same_distinctive_power(chrom, chrom, cat));
  EXPECT_TRUE(same_distinctive_power(chrom, parse_invariant("harary:edgeless"), cat));
  EXPECT_TRUE(same_distinctive_power(chrom, parse_invariant("chromatic-ff"), cat));
  EXPECT_TRUE(distinguishing_report(chrom, chrom, cat).same_power());
}

TEST(Distinguish, ChromaticVersusMatchingOnTrees) {
  // Computed, not presumed: matching separates the 5-vertex trees that
  // chromatic lumps together, and the report carries the evidence.
  const auto cat = tree_catalog(5);
  const auto chrom = parse_invariant("chromatic");
  const auto match = parse_invariant("matching");
  const auto rep = distinguishing_report(chrom, match, cat);
  EXPECT_EQ(rep.same_power(), same_distinctive_power(chrom, match, cat));
  EXPECT_TRUE(rep.only_f.empty());
  ASSERT_FALSE(rep.only_g.empty());
  for (const auto& pair : rep.only_g) {
    EXPECT_EQ(pair.f_a, pair.f_b);
    EXPECT_NE(pair.g_a, pair.g_b);
  }
}

TEST(Distinguish, PartitionIsOrderIndependentAsSetPartition) {
  auto cat = small_catalog();
  Catalog reversed;
  const auto& e = cat.entries();
  for (auto it = e.rbegin(); it != e.rend(); ++it) reversed.add(it->first, it->second);
  for (const auto* name : {"chromatic", "tutte", "charpoly"}) {
    const auto id = parse_invariant(name);
    EXPECT_EQ(normalized(invariant_partition(id, cat)), normalized(invariant_partition(id, reversed)));
  }
}

TEST(Distinguish, TutteRefinesChromatic) {
  // Chromatic is an evaluation of Tutte (up to a factor fixed by n and the
  // component count), so equal Tutte polynomials on same-order connected
  // graphs force equal chromatic polynomials.
  Catalog cat;
  std::size_t i = 0;
  for (const auto& g : polyzoo::testing::simple_graphs(5))
    if (component_count(g) == 1) cat.add("G" + std::to_string(i++), g);
  const auto rep = distinguishing_report(parse_invariant("chromatic"), parse_invariant("tutte"), cat);
  EXPECT_TRUE(rep.only_f.empty());
}
