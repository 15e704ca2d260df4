#include <gtest/gtest.h>

#include <random>

#include "spg/generators.hpp"
#include "spg/layers.hpp"
#include "spg/properties.hpp"
#include "spg/sampling.hpp"
#include "support.hpp"

using namespace spg;
using spg::testing::kind_of;
using spg::testing::one_based;

namespace {

std::vector<std::size_t> layer_sizes(const Layers& layers) {
  std::vector<std::size_t> out;
  for (const auto& l : layers) out.push_back(l.size());
  return out;
}

/// The interval form of the layer condition: for each face contained in some
/// member, the layers holding a superset form a contiguous range.
bool ref_clf(const Layers& layers, std::size_t n, std::size_t d) {
  for (std::size_t k = 0; k <= d; ++k) {
    for (const Face& f : all_subsets_of_size(n, k)) {
      std::vector<bool> hit;
      for (const auto& layer : layers) {
        bool any = false;
        for (const DSet& a : layer) any = any || a.includes(f);
        hit.push_back(any);
      }
      const auto first = std::find(hit.begin(), hit.end(), true);
      const auto last = std::find(hit.rbegin(), hit.rend(), true).base();
      if (first != hit.end() && std::find(first, last, false) != last) return false;
    }
  }
  return true;
}

}  // namespace

TEST(CheckClf, Examples) {
  const auto hirsch = gen_hirsch_path_clf(6, 2);
  EXPECT_TRUE(check_clf(hirsch.layers()).holds);

  const Layers bad{{one_based({1, 2})}, {one_based({3, 4})}, {one_based({1, 3})}};
  const CheckResult r = check_clf(bad);
  ASSERT_FALSE(r.holds);
  EXPECT_EQ(r.witness.blocks, (std::vector<std::size_t>{0, 1, 2}));
  EXPECT_EQ(r.witness.face, one_based({1}));

  EXPECT_TRUE(check_clf({{one_based({1, 2}), one_based({3, 4})}}).holds);
}

TEST(CheckClf, AgreesWithIntervalFormOnRandomLayers) {
  std::mt19937_64 rng(8);
  for (int i = 0; i < 300; ++i) {
    auto pool = all_subsets_of_size(5, 2);
    std::shuffle(pool.begin(), pool.end(), rng);
    const std::size_t count = 2 + rng() % 6;
    const std::size_t layers_count = 1 + rng() % count;
    Layers layers(layers_count);
    for (std::size_t j = 0; j < count; ++j) {
      layers[j < layers_count ? j : rng() % layers_count].push_back(pool[j]);
    }
    EXPECT_EQ(check_clf(layers).holds, ref_clf(layers, 5, 2));
  }
}

TEST(ConnectedLayerFamily, ValidatesInput) {
  const SymbolSet s(4);
  EXPECT_EQ(kind_of([&] {
              ConnectedLayerFamily::make(
                  s, 2, {{one_based({1, 2})}, {one_based({3, 4})}, {one_based({1, 3})}});
            }),
            ErrorKind::InvalidClf);
  EXPECT_EQ(kind_of([&] { ConnectedLayerFamily::make(s, 2, {{one_based({1, 2})}, {}}); }),
            ErrorKind::EmptyBlock);
  EXPECT_EQ(kind_of([&] {
              ConnectedLayerFamily::make(s, 2, {{one_based({1, 2})}, {one_based({1, 2})}});
            }),
            ErrorKind::OverlappingBlocks);
}

TEST(SpgLayering, CubeFromOneTwoThree) {
  const Layering l = spg_layering(gen_cube_spg(3), one_based({1, 2, 3}));
  EXPECT_EQ(layer_sizes(l.layers), (std::vector<std::size_t>{1, 3, 3, 1}));
  EXPECT_TRUE(l.valid());
  EXPECT_EQ(l.to_clf().diameter(), 3u);
}

TEST(SpgLayering, FigureOneFromOneTwoThree) {
  const Layering l = spg_layering(gen_figure1(), one_based({1, 2, 3}));
  ASSERT_EQ(l.layers.size(), 3u);
  EXPECT_EQ(l.layers[0], (std::vector<DSet>{one_based({1, 2, 3}), one_based({1, 2, 6})}));
  EXPECT_EQ(l.layers[1], (std::vector<DSet>{one_based({1, 3, 5}), one_based({1, 5, 6}),
                                            one_based({2, 3, 4}), one_based({2, 4, 6})}));
  EXPECT_EQ(l.layers[2], (std::vector<DSet>{one_based({3, 4, 5}), one_based({4, 5, 6})}));
  EXPECT_TRUE(l.valid());
}

TEST(SpgLayering, LayerCountIsEccentricityPlusOne) {
  std::mt19937_64 rng(4);
  for (int i = 0; i < 50; ++i) {
    const Spg g = random_spg(rng, {});
    for (const DSet& root : g.family()) {
      const auto dist = bfs_distances(g.neighbors(), *g.block_of(root));
      const std::size_t ecc = *std::max_element(dist.begin(), dist.end());
      EXPECT_EQ(spg_layering(g, root).layers.size(), ecc + 1);
    }
  }
  EXPECT_EQ(kind_of([] { spg_layering(gen_figure1(), one_based({1, 2, 4})); }),
            ErrorKind::DSetNotPresent);
}

TEST(SpgLayering, NonDimensionReductionCanFail) {
  const Layering l = spg_layering(spg::testing::triangle_path(), one_based({1, 2}));
  EXPECT_FALSE(l.valid());
  EXPECT_EQ(kind_of([&] { l.to_clf(); }), ErrorKind::InvalidClf);
}

TEST(ClfSpgRoundTrip, PathShapedSpgsAreExactlyClfs) {
  const auto clf = gen_hirsch_path_clf(7, 3);
  const Spg g = clf_to_spg(clf);
  EXPECT_TRUE(check_clf_shape(g).holds);
  EXPECT_TRUE(check_dimension_reduction(g).holds);
  EXPECT_EQ(spg_to_clf(g).layers(), clf.layers());
  EXPECT_EQ(kind_of([] { spg_to_clf(spg::testing::triangle_path()); }), ErrorKind::InvalidClf);
}

TEST(BaseAbstraction, HirschPathIsAPath) {
  const BaseAbstraction b = clf_to_base(gen_hirsch_path_clf(4, 2));
  EXPECT_EQ(b.nodes().size(), 3u);
  EXPECT_EQ(b.edges(), (std::vector<Edge>{{0, 1}, {1, 2}}));
  EXPECT_TRUE(check_base_abstraction(b).holds);
  EXPECT_GE(graph_diameter(b.neighbors()), 2u);
}

TEST(BaseAbstraction, SingleLayerGivesCompleteGraph) {
  const auto clf = ConnectedLayerFamily::make(
      SymbolSet(4), 2, {{one_based({1, 2}), one_based({3, 4}), one_based({1, 3})}});
  const BaseAbstraction b = clf_to_base(clf);
  EXPECT_EQ(b.edges().size(), 3u);
}

TEST(BaseAbstraction, CubeHoldsAndLayersAsOneThreeThreeOne) {
  const Spg cube = gen_cube_spg(3);
  std::vector<DSet> nodes;
  for (const auto& block : cube.blocks()) nodes.push_back(block.front());
  const BaseAbstraction b = BaseAbstraction::make(cube.symbols(), 3, nodes, cube.edges());
  EXPECT_TRUE(check_base_abstraction(b).holds);
  EXPECT_TRUE(check_ultraconnected(b).holds);
  const Layering l = base_layering(b, one_based({1, 2, 3}));
  EXPECT_EQ(layer_sizes(l.layers), (std::vector<std::size_t>{1, 3, 3, 1}));
  EXPECT_EQ(l.to_clf().diameter(), 3u);
}

TEST(BaseAbstraction, TrianglePathFails) {
  const BaseAbstraction b = BaseAbstraction::make(
      SymbolSet(3), 2, {one_based({1, 2}), one_based({2, 3}), one_based({1, 3})}, {{0, 1}, {1, 2}});
  const CheckResult r = check_base_abstraction(b);
  ASSERT_FALSE(r.holds);
  EXPECT_EQ(r.witness.dsets, (std::vector<DSet>{one_based({1, 2}), one_based({1, 3})}));
  EXPECT_EQ(kind_of([] {
              BaseAbstraction::make(SymbolSet(3), 2, {one_based({1, 2}), one_based({2, 3})}, {});
            }),
            ErrorKind::DisconnectedInput);
}

TEST(BaseAbstraction, ClfToBaseAlwaysPasses) {
  std::mt19937_64 rng(17);
  int checked = 0;
  for (int i = 0; i < 400 && checked < 100; ++i) {
    const Spg g = random_dimension_reduction_spg(rng, {5, 2, 8, 5, 0.2});
    const Layering l = spg_layering(g, g.family().front());
    ASSERT_TRUE(l.valid());
    EXPECT_TRUE(check_base_abstraction(clf_to_base(l.to_clf())).holds);
    ++checked;
  }
}

TEST(BaseLayering, AlwaysValidOnBaseAbstractions) {
  std::mt19937_64 rng(23);
  for (int i = 0; i < 100; ++i) {
    const Spg g = random_dimension_reduction_spg(rng, {6, 3, 10, 10, 0.2});
    if (!check_one_subset(g).holds) continue;
    std::vector<DSet> nodes;
    for (const auto& block : g.blocks()) nodes.push_back(block.front());
    const BaseAbstraction b = BaseAbstraction::make(g.symbols(), g.d(), nodes, g.edges());
    ASSERT_TRUE(check_base_abstraction(b).holds);
    for (const DSet& z : nodes) EXPECT_TRUE(base_layering(b, z).valid());
  }
}
