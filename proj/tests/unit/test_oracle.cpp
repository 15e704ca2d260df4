#include <gtest/gtest.h>

#include <random>
#include <set>

#include "spg/generators.hpp"
#include "spg/oracle.hpp"
#include "spg/sampling.hpp"
#include "support.hpp"

using namespace spg;
using namespace spg::oracle;
using spg::testing::kind_of;
using spg::testing::one_based;

namespace {

std::uint64_t stirling2(std::uint64_t n, std::uint64_t k) {
  if (n == 0 && k == 0) return 1;
  if (n == 0 || k == 0) return 0;
  return k * stirling2(n - 1, k) + stirling2(n - 1, k - 1);
}

std::uint64_t choose(std::uint64_t n, std::uint64_t k) {
  std::uint64_t r = 1;
  for (std::uint64_t i = 1; i <= k; ++i) r = r * (n - k + i) / i;
  return r;
}

// connected labeled graphs on k vertices (OEIS A001187)
constexpr std::uint64_t kConnected[] = {1, 1, 1, 4, 38, 728};

std::uint64_t expected_spg_count(std::size_t n, std::size_t d, std::size_t max_blocks) {
  const std::uint64_t dsets = choose(n, d);
  std::uint64_t total = 0;
  for (std::uint64_t f = 1; f <= dsets; ++f) {
    for (std::uint64_t k = 1; k <= std::min<std::uint64_t>(f, max_blocks); ++k) {
      total += choose(dsets, f) * stirling2(f, k) * kConnected[k];
    }
  }
  return total;
}

}  // namespace

TEST(BruteDimensionReduction, FigureOneFaceCount) {
  const Spg g = gen_figure1();
  std::size_t expected = 0;
  for (std::size_t k = 1; k <= g.d(); ++k) expected += choose(g.n(), k);
  // faces lying in some member, by bitmask over subsets of each d-set
  std::set<std::uint32_t> housed;
  for (const DSet& a : g.family()) {
    std::uint32_t mask = 0;
    for (Symbol s : a.members()) mask |= 1u << s;
    for (std::uint32_t sub = mask; sub; sub = (sub - 1) & mask) housed.insert(sub);
  }
  const CheckResult r = brute_dimension_reduction(g);
  ASSERT_TRUE(r.holds);
  EXPECT_EQ(expected, 41u);
  EXPECT_EQ(r.witness.count, expected);
  EXPECT_NE(r.witness.note.find(std::to_string(housed.size()) + " inside some d-set"), std::string::npos)
      << r.witness.note;
}

TEST(BruteDimensionReduction, Examples) {
  EXPECT_TRUE(brute_dimension_reduction(gen_figure1()).holds);
  const CheckResult r = brute_dimension_reduction(spg::testing::triangle_path());
  ASSERT_FALSE(r.holds);
  EXPECT_EQ(r.witness.face, one_based({1}));
  const RestrictedView empty = restriction(gen_figure1(), Face{});
  EXPECT_TRUE(empty.connected());
}

TEST(BruteDimensionReduction, BudgetIsEnforced) {
  OracleBudget small;
  small.max_symbols = 5;
  EXPECT_EQ(kind_of([&] { brute_dimension_reduction(gen_figure1(), small); }),
            ErrorKind::BudgetExceeded);
  small.max_symbols = 0;
  EXPECT_EQ(kind_of([&] { brute_dimension_reduction(gen_figure1(), small); }),
            ErrorKind::BadParameter);
}

TEST(BruteDiameter, Examples) {
  EXPECT_EQ(brute_diameter(gen_figure1()), 2u);
  EXPECT_EQ(brute_diameter(Spg::make(SymbolSet(2), 1, {{DSet({0})}}, {})), 0u);
  EXPECT_EQ(brute_diameter(gen_cyclic_construction(12, 8)), 16u);
  OracleBudget small;
  small.max_dsets = 3;
  EXPECT_EQ(kind_of([&] { brute_diameter(gen_figure1(), small); }), ErrorKind::BudgetExceeded);
}

TEST(BruteDiameter, AgreesWithBfs) {
  std::mt19937_64 rng(31);
  for (int i = 0; i < 200; ++i) {
    const Spg g = random_spg(rng, {6, 3, 12, 10, 0.2});
    EXPECT_EQ(brute_diameter(g), diameter(g).value);
  }
}

TEST(EnumerateSpgs, CountsMatchFormula) {
  for (std::size_t n = 2; n <= 4; ++n) {
    EXPECT_EQ(enumerate_spgs(n, 2, 4, [](const Spg&) {}), expected_spg_count(n, 2, 4)) << n;
  }
  EXPECT_EQ(enumerate_spgs(4, 3, 5, [](const Spg&) {}), expected_spg_count(4, 3, 5));
  EXPECT_EQ(kind_of([] { enumerate_spgs(5, 2, 4, [](const Spg&) {}); }),
            ErrorKind::BudgetExceeded);
}

TEST(EnumerateSpgs, FastCheckerAgreesWithBruteForce) {
  std::uint64_t disagreements = 0;
  auto compare = [&](const Spg& g) {
    disagreements += check_dimension_reduction(g).holds != brute_dimension_reduction(g).holds;
  };
  for (std::size_t n = 2; n <= 4; ++n) enumerate_spgs(n, 2, 4, compare);
  EXPECT_EQ(disagreements, 0u);
}

TEST(MaxClf, OneSubsetIsHirsch) {
  for (std::size_t n = 2; n <= 6; ++n) {
    for (std::size_t d = 1; d <= std::min<std::size_t>(3, n); ++d) {
      const ClfSearchResult r = brute_max_clf_diameter(n, d, ClfVariant::OneSubset);
      EXPECT_EQ(r.diameter, n - d) << n << "," << d;
      EXPECT_TRUE(check_clf(r.witness).holds);
      EXPECT_EQ(r.witness.size(), n - d + 1);
      ASSERT_TRUE(r.maximal_classes.has_value());
      EXPECT_GE(*r.maximal_classes, 1u);
    }
  }
}

TEST(MaxClf, HirschPathIsAmongMaximalWitnesses) {
  // the canonical image of the Hirsch path has the maximal length
  for (std::size_t n = 3; n <= 6; ++n) {
    for (std::size_t d = 1; d < std::min<std::size_t>(4, n); ++d) {
      const Layers hirsch = gen_hirsch_path_clf(n, d).layers();
      EXPECT_EQ(hirsch.size() - 1, brute_max_clf_diameter(n, d, ClfVariant::OneSubset).diameter);
    }
  }
}

TEST(MaxClf, TrivialAndSmallGeneralCases) {
  for (std::size_t d = 1; d <= 3; ++d) {
    EXPECT_EQ(brute_max_clf_diameter(d, d, ClfVariant::OneSubset).diameter, 0u);
    EXPECT_EQ(brute_max_clf_diameter(d, d, ClfVariant::General).diameter, 0u);
  }
  // n = d + 1: recorded by search; every witness must itself be a valid family
  for (std::size_t d = 1; d <= 3; ++d) {
    const ClfSearchResult g = brute_max_clf_diameter(d + 1, d, ClfVariant::General);
    const ClfSearchResult one = brute_max_clf_diameter(d + 1, d, ClfVariant::OneSubset);
    EXPECT_GE(g.diameter, one.diameter);
    EXPECT_TRUE(check_clf(g.witness).holds);
    EXPECT_EQ(g.witness.size(), g.diameter + 1);
  }
}

TEST(MaxClf, GeneralWitnessesAreValid) {
  for (auto [n, d] : {std::pair<std::size_t, std::size_t>{4, 2}, {5, 2}, {5, 3}}) {
    const ClfSearchResult r = brute_max_clf_diameter(n, d, ClfVariant::General);
    EXPECT_TRUE(check_clf(r.witness).holds);
    EXPECT_EQ(r.witness.size(), r.diameter + 1);
    EXPECT_EQ(canonical_relabeling(r.witness, n), r.witness);
  }
}

TEST(MaxClf, BudgetAndParameters) {
  EXPECT_EQ(kind_of([] { brute_max_clf_diameter(7, 3, ClfVariant::OneSubset); }),
            ErrorKind::BudgetExceeded);
  EXPECT_EQ(kind_of([] { brute_max_clf_diameter(3, 4, ClfVariant::OneSubset); }),
            ErrorKind::BadParameter);
  OracleBudget tight = OracleBudget::clf_search();
  tight.time_limit = std::chrono::milliseconds(1);
  EXPECT_EQ(kind_of([&] { brute_max_clf_diameter(6, 3, ClfVariant::General, tight); }),
            ErrorKind::BudgetExceeded);
}

TEST(CanonicalRelabeling, InvariantUnderPermutation) {
  const Layers l{{DSet({0, 1})}, {DSet({1, 2}), DSet({1, 3})}, {DSet({2, 3})}};
  const Layers permuted{{DSet({2, 3})}, {DSet({0, 3}), DSet({1, 3})}, {DSet({0, 1})}};
  EXPECT_EQ(canonical_relabeling(l, 4), canonical_relabeling(permuted, 4));
  EXPECT_LE(canonical_relabeling(l, 4), l);
}
