#include "spg/sampling.hpp"

#include <algorithm>
#include <numeric>

#include "spg/error.hpp"
#include "spg/properties.hpp"

namespace spg {

namespace {

std::size_t uniform(std::mt19937_64& rng, std::size_t lo, std::size_t hi) {
  return std::uniform_int_distribution<std::size_t>(lo, hi)(rng);
}

std::vector<Edge> missing_edges(const Spg& g) {
  std::vector<Edge> out;
  for (std::size_t i = 0; i < g.block_count(); ++i) {
    for (std::size_t j = i + 1; j < g.block_count(); ++j) {
      if (!g.has_edge(i, j)) out.emplace_back(i, j);
    }
  }
  return out;
}

}  // namespace

Spg random_spg(std::mt19937_64& rng, const RandomSpgParams& params) {
  if (params.d == 0 || params.d > params.n || params.max_dsets == 0 || params.max_blocks == 0) {
    throw SpgError(ErrorKind::BadParameter, "random SPG needs 1 <= d <= n and positive limits");
  }
  std::vector<DSet> pool = all_subsets_of_size(params.n, params.d);
  std::shuffle(pool.begin(), pool.end(), rng);
  const std::size_t count = uniform(rng, 1, std::min(params.max_dsets, pool.size()));
  pool.resize(count);

  const std::size_t k = uniform(rng, 1, std::min(params.max_blocks, count));
  std::vector<Block> blocks(k);
  for (std::size_t i = 0; i < count; ++i) {
    blocks[i < k ? i : uniform(rng, 0, k - 1)].push_back(pool[i]);
  }

  std::vector<std::size_t> order(k);
  std::iota(order.begin(), order.end(), std::size_t{0});
  std::shuffle(order.begin(), order.end(), rng);
  std::vector<Edge> edges;
  for (std::size_t v = 1; v < k; ++v) edges.emplace_back(order[v], order[uniform(rng, 0, v - 1)]);
  std::bernoulli_distribution extra(params.extra_edge_probability);
  for (std::size_t i = 0; i < k; ++i) {
    for (std::size_t j = i + 1; j < k; ++j) {
      if (extra(rng)) edges.emplace_back(i, j);
    }
  }
  return Spg::make(SymbolSet(params.n), params.d, std::move(blocks), std::move(edges));
}

Spg random_dimension_reduction_spg(std::mt19937_64& rng, const RandomSpgParams& params) {
  Spg g = random_spg(rng, params);
  while (!check_dimension_reduction(g).holds) {
    const auto missing = missing_edges(g);
    const Edge e = missing[uniform(rng, 0, missing.size() - 1)];
    g = edge_addition(g, e.u, e.v);
  }
  return g;
}

bool random_move(std::mt19937_64& rng, Spg& g) {
  if (g.block_count() < 2) return false;
  const auto missing = missing_edges(g);
  const bool contract = missing.empty() || std::bernoulli_distribution(0.5)(rng);
  if (contract) {
    g = contraction(g, g.edges()[uniform(rng, 0, g.edges().size() - 1)]);
  } else {
    const Edge e = missing[uniform(rng, 0, missing.size() - 1)];
    g = edge_addition(g, e.u, e.v);
  }
  return true;
}

}  // namespace spg
