#include "spg/properties.hpp"

#include <algorithm>
#include <limits>
#include <map>
#include <queue>
#include <set>

#include "spg/error.hpp"
#include "spg/layers.hpp"

namespace spg {

namespace {

/// (d-1)-faces of the family mapped to the d-sets containing them.
std::map<Face, std::vector<DSet>> ridge_map(const std::vector<DSet>& family) {
  std::map<Face, std::vector<DSet>> out;
  for (const DSet& a : family) {
    for (Symbol s : a) out[a.without(s)].push_back(a);
  }
  return out;
}

bool is_complete(const std::vector<std::vector<std::size_t>>& adjacency) {
  const std::size_t m = adjacency.size();
  return std::all_of(adjacency.begin(), adjacency.end(),
                     [m](const auto& list) { return list.size() + 1 == m; });
}

bool adjacent_or_same(const Spg& g, std::size_t a, std::size_t b) {
  return a == b || g.has_edge(a, b);
}

std::size_t neighbor_count(const DSet& a, const std::map<Face, std::vector<DSet>>& ridges) {
  std::size_t count = 0;
  for (Symbol s : a) count += ridges.at(a.without(s)).size() - 1;
  return count;
}

}  // namespace

std::string_view property_name(Property p) {
  switch (p) {
    case Property::DimensionReduction: return "dimension-reduction";
    case Property::Adjacency: return "adjacency";
    case Property::StrongAdjacency: return "strong-adjacency";
    case Property::EndpointCount: return "endpoint-count";
    case Property::PolytopalEndpointCount: return "polytopal-endpoint-count";
    case Property::OneSubset: return "one-subset";
    case Property::DRegularity: return "d-regularity";
    case Property::DConnectedness: return "d-connectedness";
    case Property::DNeighbors: return "d-neighbors";
    case Property::Spindle: return "spindle";
    case Property::ClfShape: return "clf-shape";
    case Property::Ultraconnected: return "ultraconnected";
  }
  return "unknown";
}

Property parse_property(std::string_view name) {
  for (Property p : kAllProperties) {
    if (property_name(p) == name) return p;
  }
  throw SpgError(ErrorKind::BadParameter, "unknown property '" + std::string(name) + "'");
}

std::vector<Property> parse_property_list(std::string_view list) {
  if (list == "all") return {kAllProperties.begin(), kAllProperties.end()};
  if (list == "main") return {kMainProperties.begin(), kMainProperties.end()};
  std::vector<Property> out;
  std::size_t start = 0;
  while (start <= list.size()) {
    std::size_t comma = list.find(',', start);
    if (comma == std::string_view::npos) comma = list.size();
    std::string_view item = list.substr(start, comma - start);
    if (!item.empty()) {
      Property p = parse_property(item);
      if (std::find(out.begin(), out.end(), p) == out.end()) out.push_back(p);
    }
    start = comma + 1;
  }
  if (out.empty()) throw SpgError(ErrorKind::BadParameter, "empty property list");
  return out;
}

CheckResult check_dimension_reduction(const Spg& g) {
  const auto& family = g.family();
  std::set<Face> faces;
  for (std::size_t i = 0; i < family.size(); ++i) {
    for (std::size_t j = i + 1; j < family.size(); ++j) {
      faces.insert(family[i].intersect(family[j]));
    }
  }
  std::vector<Face> ordered(faces.begin(), faces.end());
  std::stable_sort(ordered.begin(), ordered.end(),
                   [](const Face& a, const Face& b) { return a.size() < b.size(); });

  for (const Face& face : ordered) {
    RestrictedView view = restriction(g, face);
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
    w.note = "restriction to " + format_subset(face, g.symbols()) + " has " +
             std::to_string(view.components.size()) + " components";
    return CheckResult::fail(Property::DimensionReduction, std::move(w));
  }
  return CheckResult::pass(Property::DimensionReduction);
}

CheckResult check_adjacency(const Spg& g) {
  if (g.d() == 0) return CheckResult::pass(Property::Adjacency);
  std::optional<std::pair<DSet, DSet>> worst;
  for (const auto& [ridge, members] : ridge_map(g.family())) {
    for (std::size_t i = 0; i < members.size(); ++i) {
      for (std::size_t j = i + 1; j < members.size(); ++j) {
        const std::size_t a = *g.block_of(members[i]);
        const std::size_t b = *g.block_of(members[j]);
        if (adjacent_or_same(g, a, b)) continue;
        std::pair<DSet, DSet> candidate{members[i], members[j]};
        if (!worst || candidate < *worst) worst = std::move(candidate);
      }
    }
  }
  if (!worst) return CheckResult::pass(Property::Adjacency);
  Witness w;
  w.dsets = {worst->first, worst->second};
  w.blocks = {*g.block_of(worst->first), *g.block_of(worst->second)};
  w.face = worst->first.intersect(worst->second);
  w.note = format_subset(worst->first, g.symbols()) + " and " +
           format_subset(worst->second, g.symbols()) +
           " share d-1 symbols but lie in non-adjacent blocks";
  return CheckResult::fail(Property::Adjacency, std::move(w));
}

CheckResult check_strong_adjacency(const Spg& g) {
  CheckResult adjacency = check_adjacency(g);
  if (!adjacency.holds) {
    adjacency.property = Property::StrongAdjacency;
    adjacency.witness.note = "adjacency fails: " + adjacency.witness.note;
    return adjacency;
  }
  for (const Edge& e : g.edges()) {
    bool witnessed = false;
    for (const DSet& a : g.block(e.u)) {
      for (const DSet& b : g.block(e.v)) {
        if (a.intersection_size(b) + 1 == g.d()) {
          witnessed = true;
          break;
        }
      }
      if (witnessed) break;
    }
    if (!witnessed) {
      Witness w;
      w.blocks = {e.u, e.v};
      w.note = "edge {" + std::to_string(e.u) + "," + std::to_string(e.v) +
               "} has no pair of d-sets sharing d-1 symbols";
      return CheckResult::fail(Property::StrongAdjacency, std::move(w));
    }
  }
  return CheckResult::pass(Property::StrongAdjacency);
}

CheckResult check_endpoint_count(const Spg& g, EndpointMode mode) {
  const Property property = mode == EndpointMode::Polyhedral ? Property::EndpointCount
                                                             : Property::PolytopalEndpointCount;
  if (g.d() == 0) return CheckResult::pass(property);
  for (const auto& [ridge, members] : ridge_map(g.family())) {
    const std::size_t count = members.size();
    const bool bad = mode == EndpointMode::Polyhedral ? count > 2 : (count == 1 || count > 2);
    if (!bad) continue;
    Witness w;
    w.face = ridge;
    w.count = count;
    w.dsets = members;
    w.note = format_subset(ridge, g.symbols()) + " lies in " + std::to_string(count) +
             " members of the family";
    return CheckResult::fail(property, std::move(w));
  }
  return CheckResult::pass(property);
}

CheckResult check_one_subset(const Spg& g) {
  for (std::size_t i = 0; i < g.block_count(); ++i) {
    if (g.block(i).size() != 1) {
      Witness w;
      w.blocks = {i};
      w.count = g.block(i).size();
      w.dsets = g.block(i);
      w.note = "block " + std::to_string(i) + " holds " + std::to_string(g.block(i).size()) +
               " d-sets";
      return CheckResult::fail(Property::OneSubset, std::move(w));
    }
  }
  return CheckResult::pass(Property::OneSubset);
}

CheckResult check_d_regularity(const Spg& g) {
  for (std::size_t i = 0; i < g.block_count(); ++i) {
    const std::size_t degree = g.neighbors()[i].size();
    if (degree != g.d()) {
      Witness w;
      w.blocks = {i};
      w.count = degree;
      w.note = "block " + std::to_string(i) + " has degree " + std::to_string(degree);
      return CheckResult::fail(Property::DRegularity, std::move(w));
    }
  }
  return CheckResult::pass(Property::DRegularity);
}

std::size_t vertex_disjoint_paths(const std::vector<std::vector<std::size_t>>& adjacency,
                                  std::size_t s, std::size_t t, std::size_t cap) {
  // Split v into v_in = 2v and v_out = 2v+1 joined by a unit arc; s and t
  // keep unbounded capacity through themselves.
  const std::size_t m = adjacency.size();
  const std::size_t nodes = 2 * m;
  constexpr int kInf = std::numeric_limits<int>::max() / 2;
  std::vector<std::map<std::size_t, int>> residual(nodes);
  for (std::size_t v = 0; v < m; ++v) {
    residual[2 * v][2 * v + 1] = (v == s || v == t) ? kInf : 1;
    for (std::size_t w : adjacency[v]) residual[2 * v + 1][2 * w] = kInf;
  }
  const std::size_t source = 2 * s + 1;
  const std::size_t sink = 2 * t;
  std::size_t flow = 0;
  while (flow < cap) {
    std::vector<std::size_t> parent(nodes, nodes);
    parent[source] = source;
    std::queue<std::size_t> frontier;
    frontier.push(source);
    while (!frontier.empty() && parent[sink] == nodes) {
      std::size_t v = frontier.front();
      frontier.pop();
      for (const auto& [w, capacity] : residual[v]) {
        if (capacity > 0 && parent[w] == nodes) {
          parent[w] = v;
          frontier.push(w);
        }
      }
    }
    if (parent[sink] == nodes) break;
    for (std::size_t v = sink; v != source; v = parent[v]) {
      const std::size_t u = parent[v];
      residual[u][v] -= 1;
      residual[v][u] += 1;
    }
    ++flow;
  }
  return flow;
}

std::size_t vertex_connectivity(const std::vector<std::vector<std::size_t>>& adjacency,
                                std::size_t cap) {
  const std::size_t m = adjacency.size();
  if (m == 0) return 0;
  if (is_complete(adjacency)) return std::min(m - 1, cap);
  std::size_t best = cap;
  for (std::size_t s = 0; s < m; ++s) {
    for (std::size_t t = s + 1; t < m; ++t) {
      if (std::binary_search(adjacency[s].begin(), adjacency[s].end(), t)) continue;
      best = std::min(best, vertex_disjoint_paths(adjacency, s, t, best));
      if (best == 0) return 0;
    }
  }
  return best;
}

CheckResult check_d_connectedness(const Spg& g) {
  const auto& adjacency = g.neighbors();
  const std::size_t m = adjacency.size();
  if (is_complete(adjacency)) {
    if (m - 1 >= g.d()) return CheckResult::pass(Property::DConnectedness);
    Witness w;
    w.count = m - 1;
    w.note = "complete graph on " + std::to_string(m) + " blocks is only " +
             std::to_string(m - 1) + "-connected";
    return CheckResult::fail(Property::DConnectedness, std::move(w));
  }
  for (std::size_t s = 0; s < m; ++s) {
    for (std::size_t t = s + 1; t < m; ++t) {
      if (g.has_edge(s, t)) continue;
      const std::size_t paths = vertex_disjoint_paths(adjacency, s, t, g.d());
      if (paths < g.d()) {
        Witness w;
        w.blocks = {s, t};
        w.count = paths;
        w.note = "blocks " + std::to_string(s) + " and " + std::to_string(t) + " are joined by " +
                 std::to_string(paths) + " vertex-disjoint paths";
        return CheckResult::fail(Property::DConnectedness, std::move(w));
      }
    }
  }
  return CheckResult::pass(Property::DConnectedness);
}

CheckResult check_d_neighbors(const Spg& g) {
  const auto ridges = ridge_map(g.family());
  for (const DSet& a : g.family()) {
    const std::size_t count = g.d() == 0 ? 0 : neighbor_count(a, ridges);
    if (count != g.d()) {
      Witness w;
      w.dsets = {a};
      w.blocks = {*g.block_of(a)};
      w.count = count;
      w.note = format_subset(a, g.symbols()) + " has " + std::to_string(count) +
               " members sharing d-1 symbols";
      return CheckResult::fail(Property::DNeighbors, std::move(w));
    }
  }
  return CheckResult::pass(Property::DNeighbors);
}

CheckResult check_spindle(const Spg& g) {
  if (g.n() != 2 * g.d()) {
    Witness w;
    w.note = "n = " + std::to_string(g.n()) + " but a spindle needs n = 2d = " +
             std::to_string(2 * g.d());
    return CheckResult::fail(Property::Spindle, std::move(w));
  }
  if (const auto& apices = g.apices()) {
    Witness evidence;
    evidence.dsets = {apices->first, apices->second};
    evidence.blocks = {*g.block_of(apices->first), *g.block_of(apices->second)};
    return CheckResult::pass(Property::Spindle, std::move(evidence));
  }
  const SymbolSubset everything = g.symbols().all();
  for (const DSet& a : g.family()) {
    DSet complement = everything.minus(a);
    if (!(a < complement)) continue;
    if (auto b = g.block_of(complement)) {
      Witness evidence;
      evidence.dsets = {a, complement};
      evidence.blocks = {*g.block_of(a), *b};
      return CheckResult::pass(Property::Spindle, std::move(evidence));
    }
  }
  Witness w;
  w.note = "no two members of the family partition the symbols";
  return CheckResult::fail(Property::Spindle, std::move(w));
}

std::size_t spindle_length(const Spg& g) {
  CheckResult spindle = check_spindle(g);
  if (!spindle.holds) throw SpgError(ErrorKind::NotASpindle, spindle.witness.note);
  return distance(g, spindle.witness.dsets[0], spindle.witness.dsets[1]);
}

CheckResult check_clf_shape(const Spg& g) {
  const auto& adjacency = g.neighbors();
  const std::size_t m = adjacency.size();
  std::vector<std::size_t> order;
  if (m == 1) {
    order.push_back(0);
  } else {
    for (std::size_t v = 0; v < m; ++v) {
      if (adjacency[v].size() > 2) {
        Witness w;
        w.blocks = {v};
        w.count = adjacency[v].size();
        w.note = "block " + std::to_string(v) + " has degree " +
                 std::to_string(adjacency[v].size()) + ", so the graph is not a path";
        return CheckResult::fail(Property::ClfShape, std::move(w));
      }
    }
    if (g.edges().size() != m - 1) {
      Witness w;
      w.count = g.edges().size();
      w.note = "graph has a cycle, so it is not a path";
      return CheckResult::fail(Property::ClfShape, std::move(w));
    }
    std::size_t start = 0;
    while (adjacency[start].size() != 1) ++start;
    std::size_t previous = m;
    for (std::size_t v = start; order.size() < m;) {
      order.push_back(v);
      std::size_t next = m;
      for (std::size_t w : adjacency[v]) {
        if (w != previous) next = w;
      }
      previous = v;
      v = next;
    }
  }
  Layers layers;
  for (std::size_t v : order) layers.push_back(g.block(v));
  CheckResult clf = check_clf(layers);
  clf.property = Property::ClfShape;
  if (!clf.holds) {
    for (std::size_t& index : clf.witness.blocks) index = order[index];
  }
  return clf;
}

CheckResult check_spg_ultraconnected(const Spg& g) {
  CheckResult one = check_one_subset(g);
  if (!one.holds) {
    one.property = Property::Ultraconnected;
    one.witness.note = "not a graph on d-sets: " + one.witness.note;
    return one;
  }
  for (std::size_t i = 0; i < g.block_count(); ++i) {
    for (std::size_t j = i + 1; j < g.block_count(); ++j) {
      const DSet& a = g.block(i).front();
      const DSet& b = g.block(j).front();
      const bool ridge = a.intersection_size(b) + 1 == g.d();
      if (ridge != g.has_edge(i, j)) {
        Witness w;
        w.blocks = {i, j};
        w.dsets = {a, b};
        w.note = ridge ? "d-sets share d-1 symbols but blocks are not adjacent"
                       : "blocks are adjacent but d-sets do not share d-1 symbols";
        return CheckResult::fail(Property::Ultraconnected, std::move(w));
      }
    }
  }
  return CheckResult::pass(Property::Ultraconnected);
}

CheckResult check_property(const Spg& g, Property p) {
  switch (p) {
    case Property::DimensionReduction: return check_dimension_reduction(g);
    case Property::Adjacency: return check_adjacency(g);
    case Property::StrongAdjacency: return check_strong_adjacency(g);
    case Property::EndpointCount: return check_endpoint_count(g, EndpointMode::Polyhedral);
    case Property::PolytopalEndpointCount:
      return check_endpoint_count(g, EndpointMode::Polytopal);
    case Property::OneSubset: return check_one_subset(g);
    case Property::DRegularity: return check_d_regularity(g);
    case Property::DConnectedness: return check_d_connectedness(g);
    case Property::DNeighbors: return check_d_neighbors(g);
    case Property::Spindle: return check_spindle(g);
    case Property::ClfShape: return check_clf_shape(g);
    case Property::Ultraconnected: return check_spg_ultraconnected(g);
  }
  throw SpgError(ErrorKind::BadParameter, "unknown property");
}

const CheckResult& PropertyReport::at(Property p) const {
  for (const CheckResult& r : results_) {
    if (r.property == p) return r;
  }
  throw SpgError(ErrorKind::BadParameter,
                 "report does not cover " + std::string(property_name(p)));
}

bool PropertyReport::contains(Property p) const {
  return std::any_of(results_.begin(), results_.end(),
                     [p](const CheckResult& r) { return r.property == p; });
}

PropertyReport property_report(const Spg& g) {
  return property_report(g, {kAllProperties.begin(), kAllProperties.end()});
}

PropertyReport property_report(const Spg& g, const std::vector<Property>& selection) {
  std::vector<CheckResult> results;
  results.reserve(selection.size());
  for (Property p : kAllProperties) {
    if (std::find(selection.begin(), selection.end(), p) != selection.end()) {
      results.push_back(check_property(g, p));
    }
  }
  return PropertyReport(std::move(results));
}

bool witness_confirms_failure(const Spg& g, const CheckResult& result) {
  if (result.holds) return false;
  const Witness& w = result.witness;
  const std::size_t d = g.d();
  auto shares_ridge = [d](const DSet& a, const DSet& b) {
    return a.intersection_size(b) + 1 == d;
  };
  auto adjacency_pair_bad = [&]() {
    if (w.dsets.size() != 2) return false;
    const auto a = g.block_of(w.dsets[0]);
    const auto b = g.block_of(w.dsets[1]);
    return a && b && shares_ridge(w.dsets[0], w.dsets[1]) && !adjacent_or_same(g, *a, *b);
  };
  switch (result.property) {
    case Property::DimensionReduction: {
      if (!w.face || w.face->size() > d || w.blocks.size() != 2) return false;
      RestrictedView view = restriction(g, *w.face);
      if (!view.survives(w.blocks[0]) || !view.survives(w.blocks[1])) return false;
      for (const auto& component : view.components) {
        const bool has0 = std::binary_search(component.begin(), component.end(), w.blocks[0]);
        const bool has1 = std::binary_search(component.begin(), component.end(), w.blocks[1]);
        if (has0 || has1) return has0 != has1;
      }
      return false;
    }
    case Property::Adjacency:
      return adjacency_pair_bad();
    case Property::StrongAdjacency: {
      if (w.dsets.size() == 2) return adjacency_pair_bad();
      if (w.blocks.size() != 2 || !g.has_edge(w.blocks[0], w.blocks[1])) return false;
      for (const DSet& a : g.block(w.blocks[0])) {
        for (const DSet& b : g.block(w.blocks[1])) {
          if (shares_ridge(a, b)) return false;
        }
      }
      return true;
    }
    case Property::EndpointCount:
    case Property::PolytopalEndpointCount: {
      if (!w.face || w.face->size() + 1 != d) return false;
      std::size_t count = 0;
      for (const DSet& a : g.family()) count += a.includes(*w.face) ? 1 : 0;
      if (result.property == Property::EndpointCount) return count > 2;
      return count == 1 || count > 2;
    }
    case Property::OneSubset:
      return w.blocks.size() == 1 && w.blocks[0] < g.block_count() &&
             g.block(w.blocks[0]).size() != 1;
    case Property::DRegularity:
      return w.blocks.size() == 1 && w.blocks[0] < g.block_count() &&
             g.neighbors()[w.blocks[0]].size() != d;
    case Property::DConnectedness: {
      if (w.blocks.empty()) {
        return is_complete(g.neighbors()) && g.block_count() - 1 < d;
      }
      if (w.blocks.size() != 2 || g.has_edge(w.blocks[0], w.blocks[1])) return false;
      return vertex_disjoint_paths(g.neighbors(), w.blocks[0], w.blocks[1], d) < d;
    }
    case Property::DNeighbors: {
      if (w.dsets.size() != 1 || !g.block_of(w.dsets[0])) return false;
      std::size_t count = 0;
      for (const DSet& b : g.family()) count += shares_ridge(w.dsets[0], b) ? 1 : 0;
      return count != d;
    }
    case Property::Spindle: {
      if (g.n() != 2 * d) return true;
      const SymbolSubset everything = g.symbols().all();
      for (const DSet& a : g.family()) {
        if (g.block_of(everything.minus(a))) return false;
      }
      return true;
    }
    case Property::ClfShape: {
      const auto& adjacency = g.neighbors();
      const bool path =
          g.block_count() == 1 ||
          (g.edges().size() + 1 == g.block_count() &&
           std::all_of(adjacency.begin(), adjacency.end(),
                       [](const auto& list) { return list.size() <= 2; }));
      if (!path) return true;
      if (w.blocks.size() != 3 || w.dsets.size() != 2) return false;
      const Face face = w.dsets[0].intersect(w.dsets[1]);
      const auto& middle = g.block(w.blocks[1]);
      return std::none_of(middle.begin(), middle.end(),
                          [&](const DSet& a) { return a.includes(face); });
    }
    case Property::Ultraconnected: {
      if (w.blocks.size() == 1) return g.block(w.blocks[0]).size() != 1;
      if (w.blocks.size() != 2) return false;
      const DSet& a = g.block(w.blocks[0]).front();
      const DSet& b = g.block(w.blocks[1]).front();
      return shares_ridge(a, b) != g.has_edge(w.blocks[0], w.blocks[1]);
    }
  }
  return false;
}

}  // namespace spg
