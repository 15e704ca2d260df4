#include <gtest/gtest.h>

#include <bit>
#include <random>

#include "spg/generators.hpp"
#include "spg/properties.hpp"
#include "spg/sampling.hpp"
#include "support.hpp"

using namespace spg;
using spg::testing::one_based;
using spg::testing::triangle_path;

namespace {

// Independent references, written from the definitions.

bool ref_adjacency(const Spg& g) {
  for (const DSet& a : g.family()) {
    for (const DSet& b : g.family()) {
      if (a.intersection_size(b) + 1 != g.d()) continue;
      const std::size_t i = *g.block_of(a), j = *g.block_of(b);
      if (i != j && !g.has_edge(i, j)) return false;
    }
  }
  return true;
}

std::size_t ridge_count(const Spg& g, const Face& ridge) {
  std::size_t count = 0;
  for (const DSet& a : g.family()) count += a.includes(ridge) ? 1 : 0;
  return count;
}

bool ref_endpoint(const Spg& g, bool polytopal) {
  for (const Face& r : all_subsets_of_size(g.n(), g.d() - 1)) {
    const std::size_t c = ridge_count(g, r);
    if (c > 2 || (polytopal && c == 1)) return false;
  }
  return true;
}

bool connected_without(const Spg& g, std::uint32_t removed) {
  std::vector<bool> keep(g.block_count());
  for (std::size_t v = 0; v < keep.size(); ++v) keep[v] = !((removed >> v) & 1U);
  return induced_components(g.neighbors(), keep).size() <= 1;
}

/// Smallest separating set by exhaustion; m-1 for complete graphs.
std::size_t ref_connectivity(const Spg& g) {
  const std::size_t m = g.block_count();
  for (std::size_t k = 0; k + 2 <= m; ++k) {
    for (std::uint32_t mask = 0; mask < (1U << m); ++mask) {
      if (static_cast<std::size_t>(std::popcount(mask)) != k) continue;
      if (!connected_without(g, mask)) return k;
    }
  }
  return m - 1;
}

bool ref_spindle(const Spg& g) {
  if (g.n() != 2 * g.d()) return false;
  for (const DSet& a : g.family()) {
    for (const DSet& b : g.family()) {
      if (a.is_disjoint(b) && a.size() + b.size() == g.n()) return true;
    }
  }
  return false;
}

}  // namespace

TEST(DimensionReduction, FigureOneHolds) {
  EXPECT_TRUE(check_dimension_reduction(gen_figure1()).holds);
}

TEST(DimensionReduction, TrianglePathFailsAtOne) {
  const CheckResult r = check_dimension_reduction(triangle_path());
  ASSERT_FALSE(r.holds);
  EXPECT_EQ(r.witness.face, one_based({1}));
  EXPECT_EQ(r.witness.blocks, (std::vector<std::size_t>{0, 2}));
  EXPECT_EQ(r.witness.count, 2u);
  EXPECT_TRUE(witness_confirms_failure(triangle_path(), r));
}

TEST(DimensionReduction, OneBlockHolds) {
  const Spg g = Spg::make(SymbolSet(4), 2, {{DSet({0, 1}), DSet({2, 3}), DSet({0, 2})}}, {});
  EXPECT_TRUE(check_dimension_reduction(g).holds);
}

TEST(DimensionReduction, CompleteGraphAlwaysHolds) {
  std::mt19937_64 rng(2);
  for (int i = 0; i < 50; ++i) {
    Spg g = random_spg(rng, {});
    for (std::size_t a = 0; a < g.block_count(); ++a) {
      for (std::size_t b = a + 1; b < g.block_count(); ++b) {
        if (!g.has_edge(a, b)) g = edge_addition(g, a, b);
      }
    }
    EXPECT_TRUE(check_dimension_reduction(g).holds);
    EXPECT_TRUE(check_adjacency(g).holds);
  }
}

TEST(Adjacency, Examples) {
  EXPECT_TRUE(check_adjacency(gen_figure1()).holds);
  const CheckResult r = check_adjacency(triangle_path());
  ASSERT_FALSE(r.holds);
  EXPECT_EQ(r.witness.dsets, (std::vector<DSet>{one_based({1, 2}), one_based({1, 3})}));
  EXPECT_TRUE(check_adjacency(edge_addition(triangle_path(), 0, 2)).holds);
}

TEST(StrongAdjacency, Examples) {
  EXPECT_TRUE(check_strong_adjacency(gen_figure1()).holds);
  const Spg g = spg::testing::path_spg(4, 2, {one_based({1, 2}), one_based({3, 4})});
  EXPECT_TRUE(check_adjacency(g).holds);
  const CheckResult r = check_strong_adjacency(g);
  ASSERT_FALSE(r.holds);
  EXPECT_EQ(r.witness.blocks, (std::vector<std::size_t>{0, 1}));
  EXPECT_TRUE(check_strong_adjacency(contraction(g, Edge(0, 1))).holds);
}

TEST(EndpointCount, Examples) {
  const Spg fig = gen_figure1();
  EXPECT_TRUE(check_endpoint_count(fig).holds);
  EXPECT_EQ(ridge_count(fig, one_based({4, 5})), 2u);

  const Spg fan = Spg::make(SymbolSet(4), 2,
                            {{one_based({1, 2}), one_based({1, 3}), one_based({1, 4})}}, {});
  const CheckResult r = check_endpoint_count(fan);
  ASSERT_FALSE(r.holds);
  EXPECT_EQ(r.witness.face, one_based({1}));
  EXPECT_EQ(r.witness.count, 3u);
}

TEST(EndpointCount, FigureOnePolytopalAgreesWithEnumeration) {
  // every 2-subset lies in 0 or 2 of the eight cube vertices
  const Spg fig = gen_figure1();
  EXPECT_EQ(check_endpoint_count(fig, EndpointMode::Polytopal).holds, ref_endpoint(fig, true));
  EXPECT_TRUE(check_endpoint_count(fig, EndpointMode::Polytopal).holds);
}

TEST(AuxiliaryProperties, CubeHoldsAllFour) {
  const Spg cube = gen_cube_spg(3);
  EXPECT_TRUE(check_one_subset(cube).holds);
  EXPECT_TRUE(check_d_regularity(cube).holds);
  EXPECT_TRUE(check_d_connectedness(cube).holds);
  EXPECT_TRUE(check_d_neighbors(cube).holds);
}

TEST(AuxiliaryProperties, FigureOneOneSubsetFails) {
  const CheckResult r = check_one_subset(gen_figure1());
  ASSERT_FALSE(r.holds);
  EXPECT_EQ(r.witness.blocks, (std::vector<std::size_t>{0}));
}

TEST(AuxiliaryProperties, SpindleTwoDNeighborsFails) {
  const CheckResult r = check_d_neighbors(gen_spindle_family(2));
  ASSERT_FALSE(r.holds);
  ASSERT_TRUE(r.witness.count.has_value());
  EXPECT_LT(*r.witness.count, 4u);
}

TEST(DConnectedness, CompleteGraphConvention) {
  // K_4 with d = 3 passes (connectivity 3), K_3 with d = 3 does not
  auto complete = [](std::size_t m) {
    std::vector<Block> blocks;
    std::vector<Edge> edges;
    const auto sets = all_subsets_of_size(6, 3);
    for (std::size_t i = 0; i < m; ++i) {
      blocks.push_back({sets[i]});
      for (std::size_t j = 0; j < i; ++j) edges.emplace_back(j, i);
    }
    return Spg::make(SymbolSet(6), 3, blocks, edges);
  };
  EXPECT_TRUE(check_d_connectedness(complete(4)).holds);
  EXPECT_FALSE(check_d_connectedness(complete(3)).holds);
}

TEST(DConnectedness, MengerMatchesExhaustiveCuts) {
  std::mt19937_64 rng(21);
  for (int i = 0; i < 150; ++i) {
    const Spg g = random_spg(rng, {6, 3, 10, 7, 0.45});
    EXPECT_EQ(vertex_connectivity(g.neighbors(), g.block_count()), ref_connectivity(g));
  }
  for (std::size_t dim = 2; dim <= 4; ++dim) {
    const Spg cube = gen_cube_spg(dim);
    EXPECT_EQ(vertex_connectivity(cube.neighbors(), 10), dim);
  }
}

TEST(Spindle, Examples) {
  const CheckResult fig = check_spindle(gen_figure1());
  ASSERT_TRUE(fig.holds);
  EXPECT_EQ(fig.witness.dsets, (std::vector<DSet>{one_based({1, 2, 3}), one_based({4, 5, 6})}));
  const Spg g2 = gen_spindle_family(2);
  const CheckResult sp = check_spindle(g2);
  ASSERT_TRUE(sp.holds);
  EXPECT_EQ(sp.witness.dsets[0], g2.apices()->first);
  EXPECT_FALSE(check_spindle(triangle_path()).holds);
}

TEST(ClfShape, PathsAndNonPaths) {
  EXPECT_TRUE(check_clf_shape(clf_to_spg(gen_hirsch_path_clf(6, 2))).holds);
  EXPECT_FALSE(check_clf_shape(triangle_path()).holds);
  EXPECT_FALSE(check_clf_shape(gen_cube_spg(3)).holds);
}

TEST(PropertyReport, FigureOneBadges) {
  const PropertyReport r = property_report(gen_figure1());
  EXPECT_EQ(r.results().size(), kAllProperties.size());
  EXPECT_TRUE(r.holds(Property::DimensionReduction));
  EXPECT_TRUE(r.holds(Property::StrongAdjacency));
  EXPECT_TRUE(r.holds(Property::EndpointCount));
  EXPECT_FALSE(r.holds(Property::OneSubset));
  EXPECT_TRUE(r.holds(Property::Spindle));
  EXPECT_EQ(r, property_report(gen_figure1()));
}

TEST(PropertyReport, CubeHoldsMainAndAuxiliary) {
  const PropertyReport r = property_report(gen_cube_spg(3));
  for (Property p : {Property::DimensionReduction, Property::Adjacency, Property::StrongAdjacency,
                     Property::EndpointCount, Property::PolytopalEndpointCount,
                     Property::OneSubset, Property::DRegularity, Property::DConnectedness,
                     Property::DNeighbors, Property::Spindle, Property::Ultraconnected}) {
    EXPECT_TRUE(r.holds(p)) << property_name(p);
  }
}

TEST(PropertyReport, SelectionKeepsCanonicalOrder) {
  const PropertyReport r =
      property_report(gen_figure1(), parse_property_list("spindle,dimension-reduction"));
  ASSERT_EQ(r.results().size(), 2u);
  EXPECT_EQ(r.results()[0].property, Property::DimensionReduction);
  EXPECT_FALSE(r.contains(Property::Adjacency));
}

TEST(PropertyNames, RoundTrip) {
  for (Property p : kAllProperties) EXPECT_EQ(parse_property(property_name(p)), p);
  EXPECT_EQ(spg::testing::kind_of([] { parse_property("nope"); }), ErrorKind::BadParameter);
  EXPECT_EQ(parse_property_list("main").size(), 4u);
}

TEST(Checkers, AgreeWithReferencesOnRandomInstances) {
  std::mt19937_64 rng(99);
  for (int i = 0; i < 300; ++i) {
    const Spg g = random_spg(rng, {6, 3, 12, 6, 0.3});
    EXPECT_EQ(check_adjacency(g).holds, ref_adjacency(g));
    EXPECT_EQ(check_endpoint_count(g).holds, ref_endpoint(g, false));
    EXPECT_EQ(check_endpoint_count(g, EndpointMode::Polytopal).holds, ref_endpoint(g, true));
    EXPECT_EQ(check_spindle(g).holds, ref_spindle(g));
    EXPECT_EQ(check_d_connectedness(g).holds, ref_connectivity(g) >= g.d());
    for (Property p : kAllProperties) {
      const CheckResult r = check_property(g, p);
      if (!r.holds) EXPECT_TRUE(witness_confirms_failure(g, r)) << property_name(p);
    }
  }
}
