#ifndef SPG_SAMPLING_HPP
#define SPG_SAMPLING_HPP

#include <cstddef>
#include <random>
#include <vector>

#include "spg/spg.hpp"

namespace spg {

/// Shape limits for random instances.
struct RandomSpgParams {
  std::size_t n = 6;
  std::size_t d = 3;
  std::size_t max_dsets = 8;
  std::size_t max_blocks = 5;
  /// Chance of each non-tree edge being present.
  double extra_edge_probability = 0.25;
};

/// A random family of distinct d-sets, split into random nonempty blocks and
/// joined by a random spanning tree plus independent extra edges.
/// Errors: BadParameter (d > n, or zero limits).
Spg random_spg(std::mt19937_64& rng, const RandomSpgParams& params);

/// random_spg followed by random edge additions until dimension reduction
/// holds (the complete graph always has it).
Spg random_dimension_reduction_spg(std::mt19937_64& rng, const RandomSpgParams& params);

/// A random legal move (contraction or edge addition) applied to `g`;
/// returns false when the graph is a single block.
bool random_move(std::mt19937_64& rng, Spg& g);

}  // namespace spg

#endif  // SPG_SAMPLING_HPP
