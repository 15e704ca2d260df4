#ifndef SPG_LAYERS_HPP
#define SPG_LAYERS_HPP

#include <cstddef>
#include <optional>
#include <vector>

#include "spg/properties.hpp"
#include "spg/spg.hpp"

namespace spg {

using Layers = std::vector<std::vector<DSet>>;

/// Connectivity property of a layered family: for all i < j < k and A in layer
/// i, A' in layer k, some A'' in layer j contains A ∩ A'. On failure the
/// witness carries blocks = {i, j, k}, dsets = {A, A'} and face = A ∩ A'.
/// Assumes nonempty, pairwise disjoint layers.
CheckResult check_clf(const Layers& layers);

/// Validated connected layer family; diameter is the number of layers minus one.
class ConnectedLayerFamily {
 public:
  /// Errors: EmptyBlock, OverlappingBlocks, WrongCardinality, UnknownSymbol,
  /// InvalidClf (connectivity property fails).
  static ConnectedLayerFamily make(SymbolSet symbols, std::size_t d, Layers layers);

  const SymbolSet& symbols() const noexcept { return symbols_; }
  std::size_t n() const noexcept { return symbols_.size(); }
  std::size_t d() const noexcept { return d_; }
  const Layers& layers() const noexcept { return layers_; }
  std::size_t diameter() const noexcept { return layers_.size() - 1; }

  friend bool operator==(const ConnectedLayerFamily&, const ConnectedLayerFamily&) = default;

 private:
  ConnectedLayerFamily() = default;

  SymbolSet symbols_;
  std::size_t d_ = 0;
  Layers layers_;
};

/// Distance classes from a root, not yet known to be a connected layer family.
struct Layering {
  SymbolSet symbols;
  std::size_t d = 0;
  Layers layers;
  CheckResult validity;

  bool valid() const noexcept { return validity.holds; }
  /// Throws InvalidClf when the layers fail the connectivity property.
  ConnectedLayerFamily to_clf() const;
};

/// Layer i holds the d-sets whose block lies at distance i from the root's
/// block. Errors: DSetNotPresent.
Layering spg_layering(const Spg& g, const DSet& root);

/// The path-shaped SPG with one block per layer.
Spg clf_to_spg(const ConnectedLayerFamily& clf);
/// Reads a path-shaped SPG (in path order, starting from the lower-index
/// end) as a layer family. Errors: InvalidClf.
ConnectedLayerFamily spg_to_clf(const Spg& g);

/// A graph whose nodes are d-sets.
class BaseAbstraction {
 public:
  /// Errors: WrongCardinality, UnknownSymbol, OverlappingBlocks (repeated
  /// node), BadEdge, DisconnectedInput.
  static BaseAbstraction make(SymbolSet symbols, std::size_t d, std::vector<DSet> nodes,
                              std::vector<Edge> edges);

  const SymbolSet& symbols() const noexcept { return symbols_; }
  std::size_t n() const noexcept { return symbols_.size(); }
  std::size_t d() const noexcept { return d_; }
  const std::vector<DSet>& nodes() const noexcept { return nodes_; }
  const std::vector<Edge>& edges() const noexcept { return edges_; }
  const std::vector<std::vector<std::size_t>>& neighbors() const noexcept {
    return adjacency_;
  }
  bool has_edge(std::size_t i, std::size_t j) const;
  /// Errors: DSetNotPresent.
  std::size_t index_of(const DSet& a) const;

 private:
  BaseAbstraction() = default;

  SymbolSet symbols_;
  std::size_t d_ = 0;
  std::vector<DSet> nodes_;
  std::vector<Edge> edges_;
  std::vector<std::vector<std::size_t>> adjacency_;
};

/// Face-path condition: every pair A, A' is joined by a path through nodes
/// containing A ∩ A'. Witness: the failing pair (node indices and d-sets).
CheckResult check_base_abstraction(const BaseAbstraction& b);
/// Edge between A and A' exactly when |A ∩ A'| = d-1.
CheckResult check_ultraconnected(const BaseAbstraction& b);
/// Distance classes from `root` in the base graph. Errors: DSetNotPresent.
Layering base_layering(const BaseAbstraction& b, const DSet& root);
/// Joins d-sets in the same or adjacent layers.
BaseAbstraction clf_to_base(const ConnectedLayerFamily& clf);
std::size_t graph_diameter(const std::vector<std::vector<std::size_t>>& adjacency);

}  // namespace spg

#endif  // SPG_LAYERS_HPP
