#ifndef SPG_PROPERTIES_HPP
#define SPG_PROPERTIES_HPP

#include <array>
#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "spg/spg.hpp"

namespace spg {

enum class Property {
  DimensionReduction,
  Adjacency,
  StrongAdjacency,
  EndpointCount,
  PolytopalEndpointCount,
  OneSubset,
  DRegularity,
  DConnectedness,
  DNeighbors,
  Spindle,
  ClfShape,
  Ultraconnected,
};

inline constexpr std::array<Property, 12> kAllProperties = {
    Property::DimensionReduction, Property::Adjacency,      Property::StrongAdjacency,
    Property::EndpointCount,      Property::PolytopalEndpointCount, Property::OneSubset,
    Property::DRegularity,        Property::DConnectedness, Property::DNeighbors,
    Property::Spindle,            Property::ClfShape,       Property::Ultraconnected,
};

/// dimension reduction, adjacency, strong adjacency, endpoint-count.
inline constexpr std::array<Property, 4> kMainProperties = {
    Property::DimensionReduction, Property::Adjacency, Property::StrongAdjacency,
    Property::EndpointCount};

std::string_view property_name(Property p);
/// Accepts the dashed names ("strong-adjacency", ...). Throws BadParameter.
Property parse_property(std::string_view name);
/// Comma separated list, or "all".
std::vector<Property> parse_property_list(std::string_view list);

/// Concrete evidence attached to a check. Which fields are set depends on the
/// property: a face F, offending d-sets, offending block indices (or layer
/// indices i<j<k for CLF checks) and a count such as a degree.
struct Witness {
  std::optional<Face> face;
  std::vector<DSet> dsets;
  std::vector<std::size_t> blocks;
  std::optional<std::size_t> count;
  std::string note;

  friend bool operator==(const Witness&, const Witness&) = default;
};

enum class EndpointMode { Polyhedral, Polytopal };

struct CheckResult {
  Property property = Property::DimensionReduction;
  bool holds = true;
  /// On failure: the counterexample. On success: optional evidence (the apices
  /// of a spindle).
  Witness witness;

  static CheckResult pass(Property p, Witness evidence = {}) {
    return {p, true, std::move(evidence)};
  }
  static CheckResult fail(Property p, Witness w) { return {p, false, std::move(w)}; }

  friend bool operator==(const CheckResult&, const CheckResult&) = default;
};

/// Every restriction G_F with |F| <= d is connected. Only faces F = A ∩ A'
/// need checking: a disconnected G_F with survivors A, A' in different
/// components forces G_{A∩A'} to be disconnected as well. The witness is the
/// smallest failing face (by size, then lexicographically) and one block from
/// each of two components.
CheckResult check_dimension_reduction(const Spg& g);

/// d-sets sharing d-1 symbols lie in the same or adjacent blocks.
CheckResult check_adjacency(const Spg& g);

/// Adjacency, and every edge {i,j} is witnessed by A in block i and A' in
/// block j with |A ∩ A'| = d-1. The membership condition is read as A in the
/// block V_i itself (the source writes "A ∈ V").
CheckResult check_strong_adjacency(const Spg& g);

/// Polyhedral: each (d-1)-set lies in at most two members of the family.
/// Polytopal: in exactly zero or two.
CheckResult check_endpoint_count(const Spg& g, EndpointMode mode = EndpointMode::Polyhedral);

CheckResult check_one_subset(const Spg& g);
CheckResult check_d_regularity(const Spg& g);
/// Vertex connectivity >= d, by vertex-disjoint path counts (Menger) over all
/// non-adjacent pairs; a complete graph K_m has connectivity m-1.
CheckResult check_d_connectedness(const Spg& g);
CheckResult check_d_neighbors(const Spg& g);

/// n = 2d and two members of the family partition the symbols. Prefers the
/// recorded apices, otherwise the lexicographically first pair.
CheckResult check_spindle(const Spg& g);

/// The graph is a path and its blocks, read along the path, form a connected
/// layer family.
CheckResult check_clf_shape(const Spg& g);

/// Requires one d-set per block; then blocks are adjacent exactly when their
/// d-sets share d-1 symbols.
CheckResult check_spg_ultraconnected(const Spg& g);

CheckResult check_property(const Spg& g, Property p);

/// Vertex connectivity of a simple graph (m-1 for K_m), capped at `cap`.
std::size_t vertex_connectivity(const std::vector<std::vector<std::size_t>>& adjacency,
                                std::size_t cap);

/// Maximum number of internally vertex-disjoint s-t paths in a graph where s
/// and t are not adjacent, capped at `cap`.
std::size_t vertex_disjoint_paths(const std::vector<std::vector<std::size_t>>& adjacency,
                                  std::size_t s, std::size_t t, std::size_t cap);

class PropertyReport {
 public:
  PropertyReport() = default;
  explicit PropertyReport(std::vector<CheckResult> results) : results_(std::move(results)) {}

  const std::vector<CheckResult>& results() const noexcept { return results_; }
  const CheckResult& at(Property p) const;
  bool holds(Property p) const { return at(p).holds; }
  bool contains(Property p) const;

  friend bool operator==(const PropertyReport&, const PropertyReport&) = default;

 private:
  std::vector<CheckResult> results_;
};

/// Runs every checker, in the order of kAllProperties.
PropertyReport property_report(const Spg& g);
PropertyReport property_report(const Spg& g, const std::vector<Property>& selection);

/// Re-derives a failure from its witness alone; used to keep witnesses honest.
bool witness_confirms_failure(const Spg& g, const CheckResult& result);

}  // namespace spg

#endif  // SPG_PROPERTIES_HPP
