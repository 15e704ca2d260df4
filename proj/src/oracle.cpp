#include "spg/oracle.hpp"

#include <algorithm>
#include <bit>
#include <limits>
#include <numeric>
#include <set>
#include <unordered_map>

#include "spg/error.hpp"

namespace spg::oracle {

namespace {

using Clock = std::chrono::steady_clock;
using FaceMask = std::uint64_t;  // bit f set <=> face with symbol mask f present

constexpr std::size_t kUnreached = std::numeric_limits<std::size_t>::max();

[[noreturn]] void over_budget(const std::string& what) {
  throw SpgError(ErrorKind::BudgetExceeded, what);
}

class Deadline {
 public:
  explicit Deadline(std::chrono::milliseconds limit) : end_(Clock::now() + limit) {}
  void check(std::uint64_t& counter) const {
    if ((++counter & 0xFFF) == 0 && Clock::now() > end_) {
      over_budget("search exceeded its time limit");
    }
  }

 private:
  Clock::time_point end_;
};

std::uint32_t to_mask(const DSet& a) {
  std::uint32_t mask = 0;
  for (Symbol s : a) mask |= 1U << s;
  return mask;
}

DSet from_mask(std::uint32_t mask) {
  std::vector<Symbol> members;
  for (Symbol s = 0; mask != 0; ++s, mask >>= 1) {
    if (mask & 1U) members.push_back(s);
  }
  return DSet::from_sorted(std::move(members));
}

/// Every submask of `mask`, as a set of faces.
FaceMask down_closure(std::uint32_t mask) {
  FaceMask out = 0;
  for (std::uint32_t sub = mask;; sub = (sub - 1) & mask) {
    out |= FaceMask{1} << sub;
    if (sub == 0) break;
  }
  return out;
}

std::uint64_t binomial(std::uint64_t n, std::uint64_t k) {
  if (k > n) return 0;
  std::uint64_t r = 1;
  for (std::uint64_t i = 1; i <= k; ++i) r = r * (n - k + i) / i;
  return r;
}

std::vector<std::vector<Symbol>> all_permutations(std::size_t n) {
  std::vector<Symbol> p(n);
  std::iota(p.begin(), p.end(), Symbol{0});
  std::vector<std::vector<Symbol>> out;
  do {
    out.push_back(p);
  } while (std::next_permutation(p.begin(), p.end()));
  return out;
}

Layers relabel(const Layers& layers, const std::vector<Symbol>& perm) {
  Layers out;
  out.reserve(layers.size());
  for (const auto& layer : layers) {
    std::vector<DSet> mapped;
    mapped.reserve(layer.size());
    for (const DSet& a : layer) {
      std::vector<Symbol> members;
      members.reserve(a.size());
      for (Symbol s : a) members.push_back(perm[s]);
      mapped.emplace_back(std::move(members));
    }
    std::sort(mapped.begin(), mapped.end());
    out.push_back(std::move(mapped));
  }
  return out;
}

Layers canonical_with(const Layers& layers, const std::vector<std::vector<Symbol>>& perms) {
  Layers best = layers;
  for (const auto& perm : perms) {
    Layers image = relabel(layers, perm);
    if (image < best) best = std::move(image);
  }
  return best;
}

struct ClfSpace {
  std::size_t n = 0;
  std::size_t d = 0;
  std::vector<std::uint32_t> dsets;  // symbol masks, lexicographic order
  std::vector<FaceMask> down;        // down closure of each d-set
};

ClfSpace make_space(std::size_t n, std::size_t d) {
  ClfSpace space;
  space.n = n;
  space.d = d;
  for (const DSet& a : all_subsets_of_size(n, d)) {
    space.dsets.push_back(to_mask(a));
    space.down.push_back(down_closure(to_mask(a)));
  }
  return space;
}

class OneSubsetSearch {
 public:
  OneSubsetSearch(const ClfSpace& space, const Deadline& deadline)
      : space_(space), deadline_(deadline) {}

  void run() {
    // symbol relabeling sends any first d-set to {0..d-1}, the first in order
    sequence_.push_back(0);
    extend(space_.down[0], space_.down[0]);
  }

  std::size_t best_length() const { return best_; }
  const std::vector<std::vector<std::size_t>>& maximal() const { return maximal_; }
  std::uint64_t nodes() const { return nodes_; }

 private:
  void extend(FaceMask seen, FaceMask open) {
    deadline_.check(nodes_);
    const std::size_t length = sequence_.size() - 1;
    if (length > best_) {
      best_ = length;
      maximal_.clear();
    }
    if (length == best_) maximal_.push_back(sequence_);
    const FaceMask closed = seen & ~open;
    for (std::size_t x = 0; x < space_.dsets.size(); ++x) {
      if ((seen >> space_.dsets[x]) & 1U) continue;
      if (space_.down[x] & closed) continue;
      sequence_.push_back(x);
      extend(seen | space_.down[x], space_.down[x]);
      sequence_.pop_back();
    }
  }

  const ClfSpace& space_;
  const Deadline& deadline_;
  std::vector<std::size_t> sequence_;
  std::size_t best_ = 0;
  std::vector<std::vector<std::size_t>> maximal_;
  std::uint64_t nodes_ = 0;
};

struct StateHash {
  std::size_t operator()(const std::pair<FaceMask, FaceMask>& s) const noexcept {
    return std::hash<FaceMask>{}(s.first * 0x9E3779B97F4A7C15ULL ^ s.second);
  }
};

class GeneralSearch {
 public:
  GeneralSearch(const ClfSpace& space, const Deadline& deadline)
      : space_(space), deadline_(deadline) {}

  /// Longest continuation (in layers) after a last layer with closure `open`.
  std::size_t remaining(FaceMask seen, FaceMask open) {
    auto key = std::make_pair(seen, open);
    if (auto it = memo_.find(key); it != memo_.end()) return it->second;
    deadline_.check(nodes_);
    std::size_t best = 0;
    const auto candidates = candidates_after(seen, open);
    for_each_layer(candidates, [&](FaceMask closure) {
      best = std::max(best, 1 + remaining(seen | closure, closure));
    });
    memo_.emplace(key, best);
    return best;
  }

  std::vector<std::size_t> candidates_after(FaceMask seen, FaceMask open) const {
    const FaceMask closed = seen & ~open;
    std::vector<std::size_t> out;
    for (std::size_t x = 0; x < space_.dsets.size(); ++x) {
      if ((seen >> space_.dsets[x]) & 1U) continue;
      if (space_.down[x] & closed) continue;
      out.push_back(x);
    }
    return out;
  }

  /// Calls `visit(closure)` for every nonempty layer drawn from `candidates`.
  template <typename Visit>
  void for_each_layer(const std::vector<std::size_t>& candidates, Visit&& visit) {
    const std::uint32_t limit = std::uint32_t{1} << candidates.size();
    for (std::uint32_t pick = 1; pick < limit; ++pick) {
      visit(closure_of(candidates, pick));
    }
  }

  FaceMask closure_of(const std::vector<std::size_t>& candidates, std::uint32_t pick) const {
    FaceMask closure = 0;
    for (std::size_t i = 0; i < candidates.size(); ++i) {
      if ((pick >> i) & 1U) closure |= space_.down[candidates[i]];
    }
    return closure;
  }

  std::vector<DSet> layer_of(FaceMask closure) const {
    std::vector<DSet> out;
    for (std::size_t x = 0; x < space_.dsets.size(); ++x) {
      if ((closure >> space_.dsets[x]) & 1U) out.push_back(from_mask(space_.dsets[x]));
    }
    return out;
  }

  std::uint64_t nodes() const { return nodes_; }

 private:
  const ClfSpace& space_;
  const Deadline& deadline_;
  std::unordered_map<std::pair<FaceMask, FaceMask>, std::size_t, StateHash> memo_;
  std::uint64_t nodes_ = 0;
};

/// True when no symbol permutation maps the layer to a smaller bit pattern.
bool is_canonical_first_layer(std::uint64_t pick, const ClfSpace& space,
                              const std::vector<std::vector<Symbol>>& perms,
                              const std::vector<std::size_t>& index_of_mask) {
  for (const auto& perm : perms) {
    std::uint64_t image = 0;
    for (std::size_t x = 0; x < space.dsets.size(); ++x) {
      if (!((pick >> x) & 1U)) continue;
      std::uint32_t mapped = 0;
      for (std::uint32_t m = space.dsets[x], s = 0; m != 0; ++s, m >>= 1) {
        if (m & 1U) mapped |= 1U << perm[s];
      }
      image |= std::uint64_t{1} << index_of_mask[mapped];
    }
    if (image < pick) return false;
  }
  return true;
}

}  // namespace

void OracleBudget::validate() const {
  if (max_symbols == 0 || max_dimension == 0 || max_dsets == 0 || time_limit.count() <= 0) {
    throw SpgError(ErrorKind::BadParameter, "oracle budget limits must be positive");
  }
}

CheckResult brute_dimension_reduction(const Spg& g, const OracleBudget& budget) {
  budget.validate();
  if (g.n() > budget.max_symbols) {
    over_budget("n = " + std::to_string(g.n()) + " exceeds the oracle limit of " +
                std::to_string(budget.max_symbols) + " symbols");
  }
  const Deadline deadline(budget.time_limit);
  std::uint64_t counter = 0;
  std::size_t nonempty = 0, housed = 0;
  for (std::size_t size = 0; size <= g.d(); ++size) {
    for (const Face& face : all_subsets_of_size(g.n(), size)) {
      deadline.check(counter);
      RestrictedView view = restriction(g, face);
      if (size > 0) {
        ++nonempty;
        housed += !view.surviving_blocks.empty();
      }
      if (view.connected()) continue;
      Witness w;
      w.face = face;
      w.count = view.components.size();
      for (std::size_t c = 0; c < 2; ++c) {
        const std::size_t b = view.components[c].front();
        w.blocks.push_back(b);
        for (const DSet& a : g.block(b)) {
          if (a.includes(face)) {
            w.dsets.push_back(a);
            break;
          }
        }
      }
      w.note = "restriction to " + format_subset(face, g.symbols()) + " is disconnected";
      return CheckResult::fail(Property::DimensionReduction, std::move(w));
    }
  }
  Witness evidence;
  evidence.count = nonempty;
  evidence.note = std::to_string(nonempty) + " nonempty faces checked, " + std::to_string(housed) +
                  " inside some d-set, " + std::to_string(nonempty - housed) + " vacuous";
  return CheckResult::pass(Property::DimensionReduction, std::move(evidence));
}

std::size_t brute_diameter(const Spg& g, const OracleBudget& budget) {
  budget.validate();
  const std::size_t m = g.block_count();
  if (m > budget.max_dsets) {
    over_budget(std::to_string(m) + " blocks exceed the oracle limit of " +
                std::to_string(budget.max_dsets));
  }
  std::vector<std::vector<std::size_t>> dist(m, std::vector<std::size_t>(m, kUnreached));
  for (std::size_t i = 0; i < m; ++i) dist[i][i] = 0;
  for (const Edge& e : g.edges()) dist[e.u][e.v] = dist[e.v][e.u] = 1;
  for (std::size_t k = 0; k < m; ++k) {
    for (std::size_t i = 0; i < m; ++i) {
      if (dist[i][k] == kUnreached) continue;
      for (std::size_t j = 0; j < m; ++j) {
        if (dist[k][j] == kUnreached) continue;
        dist[i][j] = std::min(dist[i][j], dist[i][k] + dist[k][j]);
      }
    }
  }
  std::size_t best = 0;
  for (const auto& row : dist) {
    for (std::size_t x : row) best = std::max(best, x);
  }
  return best;
}

Layers canonical_relabeling(const Layers& layers, std::size_t n) {
  return canonical_with(layers, all_permutations(n));
}

ClfSearchResult brute_max_clf_diameter(std::size_t n, std::size_t d, ClfVariant variant,
                                       const OracleBudget& budget) {
  budget.validate();
  if (d == 0 || d > n) {
    throw SpgError(ErrorKind::BadParameter, "layer family search needs 1 <= d <= n");
  }
  if (n > budget.max_symbols || d > budget.max_dimension || n > 6) {
    over_budget("(n, d) = (" + std::to_string(n) + ", " + std::to_string(d) +
                ") is outside the search budget");
  }
  if (binomial(n, d) > budget.max_dsets) {
    over_budget("C(n, d) = " + std::to_string(binomial(n, d)) + " d-sets exceed the budget");
  }
  const Deadline deadline(budget.time_limit);
  const ClfSpace space = make_space(n, d);
  const auto perms = all_permutations(n);
  ClfSearchResult result;

  if (variant == ClfVariant::OneSubset) {
    OneSubsetSearch search(space, deadline);
    search.run();
    result.diameter = search.best_length();
    result.nodes_explored = search.nodes();
    std::set<Layers> classes;
    for (const auto& sequence : search.maximal()) {
      Layers layers;
      for (std::size_t x : sequence) layers.push_back({from_mask(space.dsets[x])});
      classes.insert(canonical_with(layers, perms));
    }
    result.maximal_classes = classes.size();
    result.witness = *classes.begin();
    return result;
  }

  if (space.dsets.size() > 20) over_budget("general layer search is limited to 20 d-sets");
  std::vector<std::size_t> index_of_mask(std::size_t{1} << n, 0);
  for (std::size_t x = 0; x < space.dsets.size(); ++x) index_of_mask[space.dsets[x]] = x;

  GeneralSearch search(space, deadline);
  std::vector<std::size_t> all(space.dsets.size());
  std::iota(all.begin(), all.end(), std::size_t{0});
  std::uint64_t counter = 0;
  std::size_t best = 0;
  FaceMask best_first = 0;
  bool found = false;
  const std::uint64_t limit = std::uint64_t{1} << all.size();
  for (std::uint64_t pick = 1; pick < limit; ++pick) {
    deadline.check(counter);
    if (!is_canonical_first_layer(pick, space, perms, index_of_mask)) continue;
    const FaceMask closure = search.closure_of(all, static_cast<std::uint32_t>(pick));
    const std::size_t length = search.remaining(closure, closure);
    if (!found || length > best) {
      best = length;
      best_first = closure;
      found = true;
    }
  }

  // walk the memo back to a concrete witness
  Layers witness{search.layer_of(best_first)};
  FaceMask seen = best_first;
  FaceMask open = best_first;
  for (std::size_t left = best; left > 0; --left) {
    const auto candidates = search.candidates_after(seen, open);
    std::optional<FaceMask> chosen;
    search.for_each_layer(candidates, [&](FaceMask closure) {
      if (!chosen && 1 + search.remaining(seen | closure, closure) == left) chosen = closure;
    });
    witness.push_back(search.layer_of(*chosen));
    seen |= *chosen;
    open = *chosen;
  }
  result.diameter = best;
  result.witness = canonical_with(witness, perms);
  result.nodes_explored = search.nodes() + counter;
  return result;
}

std::uint64_t enumerate_spgs(std::size_t n, std::size_t d, std::size_t max_blocks,
                             const std::function<void(const Spg&)>& visit) {
  if (binomial(n, d) > 8 || max_blocks > 5 || max_blocks == 0) {
    over_budget("exhaustive SPG enumeration is limited to C(n,d) <= 8 and at most 5 blocks");
  }
  const auto dsets = all_subsets_of_size(n, d);
  // connected edge sets on k labeled vertices, per k
  std::vector<std::vector<std::vector<Edge>>> connected(max_blocks + 1);
  for (std::size_t k = 1; k <= max_blocks; ++k) {
    std::vector<Edge> possible;
    for (std::size_t i = 0; i < k; ++i) {
      for (std::size_t j = i + 1; j < k; ++j) possible.emplace_back(i, j);
    }
    for (std::uint32_t pick = 0; pick < (1U << possible.size()); ++pick) {
      std::vector<Edge> edges;
      std::vector<std::vector<std::size_t>> adjacency(k);
      for (std::size_t e = 0; e < possible.size(); ++e) {
        if (!((pick >> e) & 1U)) continue;
        edges.push_back(possible[e]);
        adjacency[possible[e].u].push_back(possible[e].v);
        adjacency[possible[e].v].push_back(possible[e].u);
      }
      const auto dist = bfs_distances(adjacency, 0);
      if (std::find(dist.begin(), dist.end(), kUnreached) == dist.end()) {
        connected[k].push_back(std::move(edges));
      }
    }
  }

  std::uint64_t visited = 0;
  const SymbolSet symbols(n);
  for (std::uint32_t family = 1; family < (1U << dsets.size()); ++family) {
    std::vector<DSet> members;
    for (std::size_t x = 0; x < dsets.size(); ++x) {
      if ((family >> x) & 1U) members.push_back(dsets[x]);
    }
    // restricted growth strings: label[0] = 0, label[i] <= 1 + max(label[0..i))
    std::vector<std::size_t> label(members.size(), 0);
    while (true) {
      const std::size_t k = 1 + *std::max_element(label.begin(), label.end());
      if (k <= max_blocks) {
        std::vector<Block> blocks(k);
        for (std::size_t i = 0; i < members.size(); ++i) blocks[label[i]].push_back(members[i]);
        for (const auto& edges : connected[k]) {
          visit(Spg::make(symbols, d, blocks, edges));
          ++visited;
        }
      }
      // next restricted growth string
      std::size_t i = members.size();
      bool advanced = false;
      while (i > 1) {
        --i;
        const std::size_t prefix_max = *std::max_element(label.begin(), label.begin() + i);
        if (label[i] <= prefix_max && label[i] + 1 < max_blocks) {
          ++label[i];
          std::fill(label.begin() + i + 1, label.end(), 0);
          advanced = true;
          break;
        }
      }
      if (!advanced) break;
    }
  }
  return visited;
}

}  // namespace spg::oracle
