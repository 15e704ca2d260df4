#ifndef SPG_GENERATORS_HPP
#define SPG_GENERATORS_HPP

#include <cstddef>
#include <vector>

#include "spg/layers.hpp"
#include "spg/spg.hpp"

namespace spg {

/// Index (a, b, c) of the quadratic spindle family, ordered lexicographically.
struct SpindleIndex {
  std::size_t a = 0;
  std::size_t b = 0;
  std::size_t c = 0;

  friend bool operator==(const SpindleIndex&, const SpindleIndex&) = default;
  friend auto operator<=>(const SpindleIndex&, const SpindleIndex&) = default;
};

/// (a,b,c) with 0 <= a,b < m, c in {0,1}, followed by (m,0,0); ascending.
std::vector<SpindleIndex> spindle_indices(std::size_t m);

/// The d-set A_{a,b,c} on symbols [2m]x{1,2}, with (i,j) encoded as 2(i-1)+(j-1).
DSet spindle_dset(std::size_t m, SpindleIndex index);

/// Path of 2m^2+1 singleton blocks A_{a,b,c} in index order; n = 4m, d = 2m,
/// apices A_{0,0,0} and A_{m,0,0}. Errors: BadParameter (m = 0).
Spg gen_spindle_family(std::size_t m);

/// Facets of the cyclic polytope C(k, dim): the dim-subsets of {0..k-1}
/// satisfying Gale's evenness condition, in lexicographic order.
/// Errors: BadParameter unless k > dim >= 2 and dim is even.
std::vector<SymbolSubset> gale_facets(std::size_t k, std::size_t dim);

/// Joins facets that share all but one element.
std::vector<std::vector<std::size_t>> dual_graph(const std::vector<SymbolSubset>& facets);

struct HamiltonianOptions {
  /// Reject extensions that would make the new node adjacent to the node two
  /// steps back.
  bool avoid_two_step_chords = false;
};

/// Deterministic backtracking: start from the lowest index that admits a
/// path, extend to the unvisited neighbor with the fewest unvisited
/// neighbors, ties to the lower index. Errors: NoHamiltonianPath.
std::vector<std::size_t> hamiltonian_path(const std::vector<std::vector<std::size_t>>& graph,
                                          HamiltonianOptions options = {});

/// Intermediate data of the cyclic-polytope construction.
struct CyclicBuild {
  std::size_t k = 0;         ///< vertices of the cyclic polytope (n / 2)
  std::size_t half_d = 0;    ///< its dimension (d / 2)
  std::vector<SymbolSubset> facets;
  std::vector<std::vector<std::size_t>> dual;
  std::vector<std::size_t> ham_path;  ///< facet indices Z_1..Z_t
  bool chord_free = false;  ///< no Z_i dual-adjacent to Z_{i+2}

  std::size_t t() const noexcept { return ham_path.size(); }
  /// Primed copy of a symbol of the first half.
  Symbol primed(Symbol s) const { return s + static_cast<Symbol>(k); }
};

/// Facet enumeration plus the Hamiltonian path used by the construction. A
/// path free of two-step chords is preferred; without one some d-sets at
/// distance two share d-1 symbols.
CyclicBuild cyclic_build(std::size_t n, std::size_t d);

/// (n/(n-d/2)) * C(n/2 - d/4, d/4), evaluated exactly. Errors: BadParameter.
std::size_t cyclic_facet_count_formula(std::size_t n, std::size_t d);

/// Blocks {A_i} for i = 1..t (indices 0..t-1), then {W_{i,1}}, {W_{i,2}} for
/// i = 1..t-1 (indices t + 2(i-1) + l - 1); each W joins V_i and V_{i+1}.
/// Errors: BadParameter unless d >= 8, d % 4 == 0, n even, n > d.
Spg gen_cyclic_construction(std::size_t n, std::size_t d);
Spg gen_cyclic_construction(const CyclicBuild& build);

/// Vertices of the dim-cube: one symbol per opposite pair (s, s+dim), listed
/// by the bitmask of chosen "far" facets; edges swap a single pair.
Spg gen_cube_spg(std::size_t dim);

/// Layers {i..i+d-1} for i = 0..n-d. Errors: BadParameter unless n > d >= 1.
ConnectedLayerFamily gen_hirsch_path_clf(std::size_t n, std::size_t d);

/// The six-block example on labels 1..6 with d = 3.
Spg gen_figure1();

}  // namespace spg

#endif  // SPG_GENERATORS_HPP
