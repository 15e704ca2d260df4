#ifndef SPG_TYPES_HPP
#define SPG_TYPES_HPP

#include <compare>
#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

namespace spg {

using Symbol = std::uint32_t;

/// A duplicate-free set of symbols kept in ascending order, so structural
/// equality is set equality and `<` is the lexicographic order on members.
class SymbolSubset {
 public:
  SymbolSubset() = default;
  /// Sorts `members`; throws WrongCardinality on a repeated symbol.
  explicit SymbolSubset(std::vector<Symbol> members);
  SymbolSubset(std::initializer_list<Symbol> members);

  /// Wraps an already ascending, duplicate-free sequence without checking.
  static SymbolSubset from_sorted(std::vector<Symbol> members);

  std::size_t size() const noexcept { return members_.size(); }
  bool empty() const noexcept { return members_.empty(); }
  std::span<const Symbol> members() const noexcept { return members_; }
  auto begin() const noexcept { return members_.begin(); }
  auto end() const noexcept { return members_.end(); }
  Symbol operator[](std::size_t i) const { return members_[i]; }

  bool contains(Symbol s) const;
  /// True when every member of `other` is a member of this set.
  bool includes(const SymbolSubset& other) const;
  bool is_disjoint(const SymbolSubset& other) const;
  std::size_t intersection_size(const SymbolSubset& other) const;

  SymbolSubset intersect(const SymbolSubset& other) const;
  SymbolSubset unite(const SymbolSubset& other) const;
  SymbolSubset minus(const SymbolSubset& other) const;
  SymbolSubset symmetric_difference(const SymbolSubset& other) const;
  SymbolSubset without(Symbol s) const;

  friend bool operator==(const SymbolSubset&, const SymbolSubset&) = default;
  friend auto operator<=>(const SymbolSubset&, const SymbolSubset&) = default;

 private:
  std::vector<Symbol> members_;
};

/// A vertex of the abstract polyhedron: the d symbols (facets) it lies on.
using DSet = SymbolSubset;
/// A set of symbols used to restrict an SPG.
using Face = SymbolSubset;

/// The symbols 0..n-1, optionally with display labels.
class SymbolSet {
 public:
  SymbolSet() = default;
  explicit SymbolSet(std::size_t n);
  /// Throws BadParameter unless `labels` holds n distinct strings.
  SymbolSet(std::size_t n, std::vector<std::string> labels);

  std::size_t size() const noexcept { return n_; }
  bool has_labels() const noexcept { return !labels_.empty(); }
  const std::vector<std::string>& labels() const noexcept { return labels_; }
  /// The display label, or the decimal index when unlabeled.
  std::string label(Symbol s) const;
  SymbolSubset all() const;

  friend bool operator==(const SymbolSet&, const SymbolSet&) = default;

 private:
  std::size_t n_ = 0;
  std::vector<std::string> labels_;
};

/// Renders `{1,2,3}` style text using the symbol labels.
std::string format_subset(const SymbolSubset& set, const SymbolSet& symbols);
/// Renders `{0,1,2}` with raw indices.
std::string format_subset(const SymbolSubset& set);

/// Undirected edge between vertex indices, normalized so that u < v.
struct Edge {
  std::size_t u = 0;
  std::size_t v = 0;

  Edge() = default;
  Edge(std::size_t a, std::size_t b) : u(a < b ? a : b), v(a < b ? b : a) {}

  friend bool operator==(const Edge&, const Edge&) = default;
  friend auto operator<=>(const Edge&, const Edge&) = default;
};

/// All k-element subsets of {0..n-1} in lexicographic order.
std::vector<SymbolSubset> all_subsets_of_size(std::size_t n, std::size_t k);

}  // namespace spg

#endif  // SPG_TYPES_HPP
