#ifndef SPG_SPG_HPP
#define SPG_SPG_HPP

#include <cstddef>
#include <map>
#include <optional>
#include <utility>
#include <vector>

#include "spg/types.hpp"

namespace spg {

using Block = std::vector<DSet>;

/// The two distinguished d-sets of a spindle, first < second.
struct Apices {
  DSet first;
  DSet second;

  friend bool operator==(const Apices&, const Apices&) = default;
};

/// A d-dimensional subset partition graph: disjoint nonempty blocks of d-sets
/// joined by a connected simple graph. Immutable once built; every operation
/// returns a new value.
///
/// Canonical form: d-sets ascending, each block's d-sets in lexicographic
/// order, blocks kept in the caller's index order, edges sorted with u < v.
class Spg {
 public:
  /// Validates and canonicalizes. Errors: EmptyBlock, OverlappingBlocks,
  /// WrongCardinality, UnknownSymbol, BadEdge, DisconnectedGraph, NotASpindle
  /// (when `apices` do not partition the symbols).
  static Spg make(SymbolSet symbols, std::size_t d, std::vector<Block> blocks,
                  std::vector<Edge> edges,
                  std::optional<Apices> apices = std::nullopt);

  const SymbolSet& symbols() const noexcept { return symbols_; }
  std::size_t n() const noexcept { return symbols_.size(); }
  std::size_t d() const noexcept { return d_; }

  std::size_t block_count() const noexcept { return blocks_.size(); }
  const std::vector<Block>& blocks() const noexcept { return blocks_; }
  const Block& block(std::size_t i) const { return blocks_.at(i); }

  const std::vector<Edge>& edges() const noexcept { return edges_; }
  /// Sorted neighbor lists per block.
  const std::vector<std::vector<std::size_t>>& neighbors() const noexcept {
    return adjacency_;
  }
  bool has_edge(std::size_t i, std::size_t j) const;

  /// Every d-set of the family, ascending.
  const std::vector<DSet>& family() const noexcept { return family_; }
  std::optional<std::size_t> block_of(const DSet& a) const;
  /// Throws DSetNotPresent.
  std::size_t require_block_of(const DSet& a) const;

  const std::optional<Apices>& apices() const noexcept { return apices_; }

  friend bool operator==(const Spg& a, const Spg& b) {
    return a.symbols_ == b.symbols_ && a.d_ == b.d_ && a.blocks_ == b.blocks_ &&
           a.edges_ == b.edges_ && a.apices_ == b.apices_;
  }

 private:
  Spg() = default;

  SymbolSet symbols_;
  std::size_t d_ = 0;
  std::vector<Block> blocks_;
  std::vector<Edge> edges_;
  std::vector<std::vector<std::size_t>> adjacency_;
  std::vector<DSet> family_;
  std::map<DSet, std::size_t> owner_;
  std::optional<Apices> apices_;
};

inline Spg make_spg(SymbolSet symbols, std::size_t d, std::vector<Block> blocks,
                    std::vector<Edge> edges,
                    std::optional<Apices> apices = std::nullopt) {
  return Spg::make(std::move(symbols), d, std::move(blocks), std::move(edges),
                   std::move(apices));
}

/// The blocks of an SPG that keep at least one d-set containing a face, with
/// the edges induced among them. May be empty or disconnected.
struct RestrictedView {
  Face face;
  std::vector<std::size_t> surviving_blocks;
  std::vector<Edge> induced_edges;
  /// Connected components of the view, each sorted, ordered by smallest block.
  std::vector<std::vector<std::size_t>> components;

  /// Empty and single-block views count as connected.
  bool connected() const noexcept { return components.size() <= 1; }
  bool survives(std::size_t block) const;
};

/// Throws UnknownSymbol if the face mentions a symbol >= n.
RestrictedView restriction(const Spg& g, const Face& face);

/// Connected components of the subgraph induced by `keep` (a per-block mask),
/// in order of their smallest block index.
std::vector<std::vector<std::size_t>> induced_components(
    const std::vector<std::vector<std::size_t>>& adjacency,
    const std::vector<bool>& keep);

struct DiameterResult {
  std::size_t value = 0;
  /// Lexicographically first pair (i < j) at distance `value`; (0,0) for t=0.
  std::pair<std::size_t, std::size_t> farthest_pair{0, 0};

  friend bool operator==(const DiameterResult&, const DiameterResult&) = default;
};

/// Breadth-first distances from `source`; unreachable blocks get SIZE_MAX.
std::vector<std::size_t> bfs_distances(
    const std::vector<std::vector<std::size_t>>& adjacency, std::size_t source);

DiameterResult diameter(const Spg& g);
/// Block distance between the blocks holding two d-sets. Errors: DSetNotPresent.
std::size_t distance(const Spg& g, const DSet& a, const DSet& b);
/// Distance between the apex blocks. Errors: NotASpindle.
std::size_t spindle_length(const Spg& g);

/// Merges the blocks of edge {i,j} into index min(i,j); later blocks shift
/// down by one. Errors: NoSuchEdge.
Spg contraction(const Spg& g, Edge edge);
/// Adds edge {i,j}. Errors: SelfLoop, EdgeExists, BadEdge (index out of range).
Spg edge_addition(const Spg& g, std::size_t i, std::size_t j);

/// Same family, same blocks and the same edges once blocks are identified by
/// their contents (block order may differ).
bool same_structure(const Spg& a, const Spg& b);

}  // namespace spg

#endif  // SPG_SPG_HPP
