#ifndef SPG_ORACLE_HPP
#define SPG_ORACLE_HPP

#include <chrono>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <optional>

#include "spg/layers.hpp"
#include "spg/properties.hpp"
#include "spg/spg.hpp"

namespace spg::oracle {

/// Hard limits checked before an enumeration starts; a search that would go
/// past them fails with BudgetExceeded instead of returning a partial answer.
struct OracleBudget {
  std::size_t max_symbols = 12;
  std::size_t max_dimension = 6;
  std::size_t max_dsets = 4096;
  std::chrono::milliseconds time_limit{60'000};

  /// n <= 6, d <= 3: the default for layer-family searches.
  static OracleBudget clf_search() { return {6, 3, 20, std::chrono::milliseconds{60'000}}; }

  /// Throws BadParameter unless every limit is positive.
  void validate() const;
};

/// Checks every face F with |F| <= d literally (restriction + connectivity).
/// Witness: the first failing face in (size, lexicographic) order.
/// Evidence on success: the number of nonempty faces checked.
/// Errors: BudgetExceeded when n > max_symbols.
CheckResult brute_dimension_reduction(const Spg& g, const OracleBudget& budget = {});

/// Floyd–Warshall over the block graph. Errors: BudgetExceeded when the block
/// count exceeds max_dsets.
std::size_t brute_diameter(const Spg& g, const OracleBudget& budget = {});

enum class ClfVariant {
  General,    ///< layers are arbitrary nonempty sets of d-sets
  OneSubset,  ///< every layer is a single d-set
};

struct ClfSearchResult {
  std::size_t diameter = 0;
  /// Lexicographically least canonical witness of maximal diameter.
  Layers witness;
  /// Non-isomorphic maximal witnesses (symbol permutations identified);
  /// only computed for the one-subset variant.
  std::optional<std::size_t> maximal_classes;
  std::uint64_t nodes_explored = 0;
};

/// Exhaustive maximum diameter of d-dimensional connected layer families on n
/// symbols. Errors: BudgetExceeded (n, d, C(n,d) or wall time over budget),
/// BadParameter (d > n).
ClfSearchResult brute_max_clf_diameter(std::size_t n, std::size_t d, ClfVariant variant,
                                       const OracleBudget& budget = OracleBudget::clf_search());

/// Relabels symbols to the lexicographically least image of the layer
/// sequence over all permutations of {0..n-1}.
Layers canonical_relabeling(const Layers& layers, std::size_t n);

/// Every SPG on n symbols with dimension d and at most `max_blocks` blocks:
/// each family, each set partition of it into ordered blocks (restricted
/// growth order) and each connected edge set. Returns the number visited.
/// Errors: BudgetExceeded when C(n,d) > 8 or max_blocks > 5.
std::uint64_t enumerate_spgs(std::size_t n, std::size_t d, std::size_t max_blocks,
                             const std::function<void(const Spg&)>& visit);

}  // namespace spg::oracle

#endif  // SPG_ORACLE_HPP
