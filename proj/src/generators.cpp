#include "spg/generators.hpp"

#include <algorithm>
#include <cstdint>
#include <limits>
#include <numeric>
#include <optional>
#include <string>

#include "spg/error.hpp"

namespace spg {

namespace {

Symbol spindle_symbol(std::int64_t i, std::int64_t j) {
  return static_cast<Symbol>(2 * (i - 1) + (j - 1));
}

std::vector<std::string> spindle_labels(std::size_t m) {
  std::vector<std::string> labels;
  for (std::size_t i = 1; i <= 2 * m; ++i) {
    for (std::size_t j = 1; j <= 2; ++j) {
      labels.push_back("(" + std::to_string(i) + "," + std::to_string(j) + ")");
    }
  }
  return labels;
}

bool satisfies_gale_evenness(const SymbolSubset& facet, std::size_t k) {
  std::vector<bool> member(k, false);
  for (Symbol s : facet) member[s] = true;
  for (std::size_t i = 0; i < k; ++i) {
    if (member[i]) continue;
    std::size_t between = 0;
    for (std::size_t j = i + 1; j < k; ++j) {
      if (member[j]) {
        ++between;
      } else if (between % 2 != 0) {
        return false;
      }
    }
  }
  return true;
}

class PathSearch {
 public:
  PathSearch(const std::vector<std::vector<std::size_t>>& graph, HamiltonianOptions options,
             std::size_t step_limit)
      : graph_(graph), options_(options), step_limit_(step_limit), visited_(graph.size(), false) {}

  std::optional<std::vector<std::size_t>> from(std::size_t start) {
    path_.assign(1, start);
    std::fill(visited_.begin(), visited_.end(), false);
    visited_[start] = true;
    if (extend()) return path_;
    return std::nullopt;
  }

  bool exhausted() const noexcept { return steps_ >= step_limit_; }

 private:
  bool adjacent(std::size_t a, std::size_t b) const {
    return std::binary_search(graph_[a].begin(), graph_[a].end(), b);
  }

  std::size_t onward_degree(std::size_t v) const {
    std::size_t count = 0;
    for (std::size_t w : graph_[v]) count += visited_[w] ? 0 : 1;
    return count;
  }

  bool extend() {
    if (path_.size() == graph_.size()) return true;
    if (++steps_ >= step_limit_) return false;
    const std::size_t last = path_.back();
    std::vector<std::pair<std::size_t, std::size_t>> candidates;
    for (std::size_t w : graph_[last]) {
      if (visited_[w]) continue;
      if (options_.avoid_two_step_chords && path_.size() >= 2 &&
          adjacent(path_[path_.size() - 2], w)) {
        continue;
      }
      candidates.emplace_back(onward_degree(w), w);
    }
    std::sort(candidates.begin(), candidates.end());
    for (const auto& [degree, w] : candidates) {
      path_.push_back(w);
      visited_[w] = true;
      if (extend()) return true;
      visited_[w] = false;
      path_.pop_back();
      if (exhausted()) return false;
    }
    return false;
  }

  const std::vector<std::vector<std::size_t>>& graph_;
  HamiltonianOptions options_;
  std::size_t step_limit_;
  std::size_t steps_ = 0;
  std::vector<bool> visited_;
  std::vector<std::size_t> path_;
};

// Hard cap on extension steps so a hopeless chord-free search stays cheap.
constexpr std::size_t kChordFreeStepLimit = 2'000'000;

std::optional<std::vector<std::size_t>> search_path(
    const std::vector<std::vector<std::size_t>>& graph, HamiltonianOptions options,
    std::size_t step_limit) {
  PathSearch search(graph, options, step_limit);
  for (std::size_t start = 0; start < graph.size(); ++start) {
    if (auto path = search.from(start)) return path;
    if (search.exhausted()) break;
  }
  return std::nullopt;
}

std::uint64_t binomial(std::uint64_t n, std::uint64_t k) {
  if (k > n) return 0;
  std::uint64_t result = 1;
  for (std::uint64_t i = 1; i <= k; ++i) result = result * (n - k + i) / i;
  return result;
}

void validate_cyclic_parameters(std::size_t n, std::size_t d) {
  if (d < 8 || d % 4 != 0 || n % 2 != 0 || n <= d) {
    throw SpgError(ErrorKind::BadParameter,
                   "cyclic construction needs d >= 8, d divisible by 4, n even and n > d (got n=" +
                       std::to_string(n) + ", d=" + std::to_string(d) + ")");
  }
}

}  // namespace

std::vector<SpindleIndex> spindle_indices(std::size_t m) {
  std::vector<SpindleIndex> out;
  out.reserve(2 * m * m + 1);
  for (std::size_t a = 0; a < m; ++a) {
    for (std::size_t b = 0; b < m; ++b) {
      for (std::size_t c = 0; c < 2; ++c) out.push_back({a, b, c});
    }
  }
  out.push_back({m, 0, 0});
  return out;
}

DSet spindle_dset(std::size_t m, SpindleIndex index) {
  const auto mm = static_cast<std::int64_t>(m);
  const auto a = static_cast<std::int64_t>(index.a);
  const auto b = static_cast<std::int64_t>(index.b);
  const auto c = static_cast<std::int64_t>(index.c);
  std::vector<Symbol> members;
  for (std::int64_t i = a + 1; i <= a + mm - b - 1; ++i) {
    members.push_back(spindle_symbol(i, 1));
    members.push_back(spindle_symbol(i, 2));
  }
  for (std::int64_t j = c + 1; j <= 2; ++j) members.push_back(spindle_symbol(a + mm - b, j));
  for (std::int64_t j = 1; j <= c; ++j) members.push_back(spindle_symbol(a + mm - b + 1, j));
  for (std::int64_t i = a + mm - b + 2; i <= a + mm + 1; ++i) {
    members.push_back(spindle_symbol(i, 1));
    members.push_back(spindle_symbol(i, 2));
  }
  return DSet(std::move(members));
}

Spg gen_spindle_family(std::size_t m) {
  if (m == 0) throw SpgError(ErrorKind::BadParameter, "spindle family needs m >= 1");
  const auto indices = spindle_indices(m);
  std::vector<Block> blocks;
  blocks.reserve(indices.size());
  for (const SpindleIndex& index : indices) blocks.push_back({spindle_dset(m, index)});
  std::vector<Edge> edges;
  for (std::size_t i = 0; i + 1 < blocks.size(); ++i) edges.emplace_back(i, i + 1);
  Apices apices{spindle_dset(m, {0, 0, 0}), spindle_dset(m, {m, 0, 0})};
  return Spg::make(SymbolSet(4 * m, spindle_labels(m)), 2 * m, std::move(blocks),
                   std::move(edges), std::move(apices));
}

std::vector<SymbolSubset> gale_facets(std::size_t k, std::size_t dim) {
  if (dim < 2 || dim % 2 != 0 || k <= dim) {
    throw SpgError(ErrorKind::BadParameter,
                   "cyclic polytope facets need k > dim >= 2 with dim even (got k=" +
                       std::to_string(k) + ", dim=" + std::to_string(dim) + ")");
  }
  std::vector<SymbolSubset> out;
  for (SymbolSubset& candidate : all_subsets_of_size(k, dim)) {
    if (satisfies_gale_evenness(candidate, k)) out.push_back(std::move(candidate));
  }
  return out;
}

std::vector<std::vector<std::size_t>> dual_graph(const std::vector<SymbolSubset>& facets) {
  std::vector<std::vector<std::size_t>> graph(facets.size());
  for (std::size_t i = 0; i < facets.size(); ++i) {
    for (std::size_t j = i + 1; j < facets.size(); ++j) {
      if (facets[i].intersection_size(facets[j]) + 1 == facets[i].size()) {
        graph[i].push_back(j);
        graph[j].push_back(i);
      }
    }
  }
  for (auto& list : graph) std::sort(list.begin(), list.end());
  return graph;
}

std::vector<std::size_t> hamiltonian_path(const std::vector<std::vector<std::size_t>>& graph,
                                          HamiltonianOptions options) {
  if (graph.empty()) return {};
  auto path = search_path(graph, options, std::numeric_limits<std::size_t>::max());
  if (!path) {
    throw SpgError(ErrorKind::NoHamiltonianPath,
                   "no Hamiltonian path in a graph on " + std::to_string(graph.size()) + " nodes");
  }
  return *path;
}

std::size_t cyclic_facet_count_formula(std::size_t n, std::size_t d) {
  validate_cyclic_parameters(n, d);
  // n/(n - d/2) * C(n/2 - d/4, d/4); the product is an integer
  const std::uint64_t numerator = n * binomial(n / 2 - d / 4, d / 4);
  const std::uint64_t denominator = n - d / 2;
  if (numerator % denominator != 0) {
    throw SpgError(ErrorKind::BadParameter, "facet count formula is not integral");
  }
  return static_cast<std::size_t>(numerator / denominator);
}

CyclicBuild cyclic_build(std::size_t n, std::size_t d) {
  validate_cyclic_parameters(n, d);
  CyclicBuild build;
  build.k = n / 2;
  build.half_d = d / 2;
  build.facets = gale_facets(build.k, build.half_d);
  build.dual = dual_graph(build.facets);
  if (auto path = search_path(build.dual, {.avoid_two_step_chords = true}, kChordFreeStepLimit)) {
    build.ham_path = std::move(*path);
    build.chord_free = true;
  } else {
    build.ham_path = hamiltonian_path(build.dual);
  }
  return build;
}

Spg gen_cyclic_construction(const CyclicBuild& build) {
  const std::size_t t = build.t();
  auto doubled = [&](const SymbolSubset& z) {
    std::vector<Symbol> members(z.begin(), z.end());
    for (Symbol s : z) members.push_back(build.primed(s));
    return DSet(std::move(members));
  };
  std::vector<Symbol> first_half(build.k);
  std::iota(first_half.begin(), first_half.end(), Symbol{0});
  const SymbolSubset sigma = SymbolSubset::from_sorted(first_half);
  std::vector<Symbol> second_half(build.k);
  std::iota(second_half.begin(), second_half.end(), static_cast<Symbol>(build.k));
  const SymbolSubset sigma_primed = SymbolSubset::from_sorted(second_half);

  std::vector<DSet> a;
  a.reserve(t);
  for (std::size_t index : build.ham_path) a.push_back(doubled(build.facets[index]));

  std::vector<Block> blocks;
  std::vector<Edge> edges;
  for (const DSet& set : a) blocks.push_back({set});
  for (std::size_t i = 0; i + 1 < t; ++i) {
    const DSet diff = a[i].symmetric_difference(a[i + 1]);
    for (const SymbolSubset* half : {&sigma, &sigma_primed}) {
      const SymbolSubset gained = a[i + 1].intersect(diff).intersect(*half);
      const SymbolSubset lost = a[i].intersect(diff).intersect(*half);
      blocks.push_back({a[i].unite(gained).minus(lost)});
      const std::size_t w = blocks.size() - 1;
      edges.emplace_back(i, w);
      edges.emplace_back(i + 1, w);
    }
  }

  std::vector<std::string> labels;
  for (std::size_t s = 1; s <= build.k; ++s) labels.push_back(std::to_string(s));
  for (std::size_t s = 1; s <= build.k; ++s) labels.push_back(std::to_string(s) + "'");
  return Spg::make(SymbolSet(2 * build.k, std::move(labels)), 2 * build.half_d,
                   std::move(blocks), std::move(edges));
}

Spg gen_cyclic_construction(std::size_t n, std::size_t d) {
  return gen_cyclic_construction(cyclic_build(n, d));
}

Spg gen_cube_spg(std::size_t dim) {
  if (dim == 0 || dim > 20) {
    throw SpgError(ErrorKind::BadParameter, "cube dimension must be in 1..20");
  }
  const std::size_t count = std::size_t{1} << dim;
  std::vector<Block> blocks;
  blocks.reserve(count);
  for (std::size_t mask = 0; mask < count; ++mask) {
    std::vector<Symbol> members;
    for (std::size_t s = 0; s < dim; ++s) {
      members.push_back(static_cast<Symbol>((mask >> s) & 1U ? s + dim : s));
    }
    blocks.push_back({DSet(std::move(members))});
  }
  std::vector<Edge> edges;
  for (std::size_t mask = 0; mask < count; ++mask) {
    for (std::size_t s = 0; s < dim; ++s) {
      const std::size_t other = mask ^ (std::size_t{1} << s);
      if (mask < other) edges.emplace_back(mask, other);
    }
  }
  return Spg::make(SymbolSet(2 * dim), dim, std::move(blocks), std::move(edges));
}

ConnectedLayerFamily gen_hirsch_path_clf(std::size_t n, std::size_t d) {
  if (d == 0 || n <= d) {
    throw SpgError(ErrorKind::BadParameter, "Hirsch path needs n > d >= 1");
  }
  Layers layers;
  for (std::size_t i = 0; i + d <= n; ++i) {
    std::vector<Symbol> members(d);
    std::iota(members.begin(), members.end(), static_cast<Symbol>(i));
    layers.push_back({DSet::from_sorted(std::move(members))});
  }
  return ConnectedLayerFamily::make(SymbolSet(n), d, std::move(layers));
}

Spg gen_figure1() {
  // labels 1..6 map to symbols 0..5
  auto set = [](std::initializer_list<Symbol> one_based) {
    std::vector<Symbol> members;
    for (Symbol s : one_based) members.push_back(s - 1);
    return DSet(std::move(members));
  };
  std::vector<Block> blocks = {
      {set({1, 2, 3}), set({1, 2, 6})},
      {set({2, 4, 6})},
      {set({3, 4, 5}), set({4, 5, 6})},
      {set({1, 5, 6})},
      {set({2, 3, 4})},
      {set({1, 3, 5})},
  };
  std::vector<Edge> edges = {{0, 1}, {0, 3}, {0, 4}, {0, 5}, {1, 2},
                             {1, 4}, {2, 3}, {2, 4}, {2, 5}, {3, 5}};
  return Spg::make(SymbolSet(6, {"1", "2", "3", "4", "5", "6"}), 3, std::move(blocks),
                   std::move(edges));
}

}  // namespace spg
