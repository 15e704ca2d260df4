#include "spg/layers.hpp"

#include <algorithm>
#include <limits>
#include <map>
#include <set>

#include "spg/error.hpp"

namespace spg {

namespace {

constexpr std::size_t kUnreached = std::numeric_limits<std::size_t>::max();

void validate_dsets(const SymbolSet& symbols, std::size_t d, const std::vector<DSet>& sets,
                    const std::string& where) {
  for (const DSet& a : sets) {
    if (a.size() != d) {
      throw SpgError(ErrorKind::WrongCardinality, format_subset(a) + " in " + where + " has " +
                                                      std::to_string(a.size()) +
                                                      " symbols, expected " + std::to_string(d));
    }
    if (!a.empty() && a.members().back() >= symbols.size()) {
      throw SpgError(ErrorKind::UnknownSymbol,
                     format_subset(a) + " in " + where + " uses an unknown symbol");
    }
  }
}

Layering layering_from_distances(const SymbolSet& symbols, std::size_t d,
                                 const std::vector<std::size_t>& dist,
                                 const std::vector<std::vector<DSet>>& members) {
  Layering out;
  out.symbols = symbols;
  out.d = d;
  std::size_t depth = 0;
  for (std::size_t x : dist) {
    if (x != kUnreached) depth = std::max(depth, x);
  }
  out.layers.assign(depth + 1, {});
  for (std::size_t v = 0; v < dist.size(); ++v) {
    if (dist[v] == kUnreached) continue;
    auto& layer = out.layers[dist[v]];
    layer.insert(layer.end(), members[v].begin(), members[v].end());
  }
  for (auto& layer : out.layers) std::sort(layer.begin(), layer.end());
  out.validity = check_clf(out.layers);
  return out;
}

}  // namespace

CheckResult check_clf(const Layers& layers) {
  const std::size_t count = layers.size();
  for (std::size_t i = 0; i + 2 < count; ++i) {
    for (std::size_t k = i + 2; k < count; ++k) {
      for (const DSet& a : layers[i]) {
        for (const DSet& b : layers[k]) {
          const Face face = a.intersect(b);
          for (std::size_t j = i + 1; j < k; ++j) {
            const bool covered = std::any_of(layers[j].begin(), layers[j].end(),
                                             [&](const DSet& c) { return c.includes(face); });
            if (covered) continue;
            Witness w;
            w.blocks = {i, j, k};
            w.dsets = {a, b};
            w.face = face;
            w.note = "layer " + std::to_string(j) + " has no superset of " + format_subset(face) +
                     " = " + format_subset(a) + " ∩ " + format_subset(b);
            return CheckResult::fail(Property::ClfShape, std::move(w));
          }
        }
      }
    }
  }
  return CheckResult::pass(Property::ClfShape);
}

ConnectedLayerFamily ConnectedLayerFamily::make(SymbolSet symbols, std::size_t d, Layers layers) {
  if (layers.empty()) throw SpgError(ErrorKind::EmptyBlock, "a layer family needs a layer");
  std::map<DSet, std::size_t> owner;
  for (std::size_t i = 0; i < layers.size(); ++i) {
    auto& layer = layers[i];
    if (layer.empty()) {
      throw SpgError(ErrorKind::EmptyBlock, "layer " + std::to_string(i) + " is empty");
    }
    validate_dsets(symbols, d, layer, "layer " + std::to_string(i));
    for (const DSet& a : layer) {
      auto [it, inserted] = owner.emplace(a, i);
      if (!inserted) {
        throw SpgError(ErrorKind::OverlappingBlocks,
                       format_subset(a) + " appears in layers " + std::to_string(it->second) +
                           " and " + std::to_string(i));
      }
    }
    std::sort(layer.begin(), layer.end());
  }
  CheckResult check = check_clf(layers);
  if (!check.holds) throw SpgError(ErrorKind::InvalidClf, check.witness.note);
  ConnectedLayerFamily clf;
  clf.symbols_ = std::move(symbols);
  clf.d_ = d;
  clf.layers_ = std::move(layers);
  return clf;
}

ConnectedLayerFamily Layering::to_clf() const {
  if (!valid()) throw SpgError(ErrorKind::InvalidClf, validity.witness.note);
  return ConnectedLayerFamily::make(symbols, d, layers);
}

Layering spg_layering(const Spg& g, const DSet& root) {
  const std::size_t start = g.require_block_of(root);
  return layering_from_distances(g.symbols(), g.d(), bfs_distances(g.neighbors(), start),
                                 g.blocks());
}

Spg clf_to_spg(const ConnectedLayerFamily& clf) {
  std::vector<Edge> edges;
  for (std::size_t i = 0; i + 1 < clf.layers().size(); ++i) edges.emplace_back(i, i + 1);
  return Spg::make(clf.symbols(), clf.d(), clf.layers(), std::move(edges));
}

ConnectedLayerFamily spg_to_clf(const Spg& g) {
  CheckResult shape = check_clf_shape(g);
  if (!shape.holds) throw SpgError(ErrorKind::InvalidClf, shape.witness.note);
  Layers layers;
  if (g.block_count() == 1) {
    layers.push_back(g.block(0));
  } else {
    std::size_t start = 0;
    while (g.neighbors()[start].size() != 1) ++start;
    std::size_t previous = g.block_count();
    for (std::size_t v = start; layers.size() < g.block_count();) {
      layers.push_back(g.block(v));
      std::size_t next = g.block_count();
      for (std::size_t w : g.neighbors()[v]) {
        if (w != previous) next = w;
      }
      previous = v;
      v = next;
    }
  }
  return ConnectedLayerFamily::make(g.symbols(), g.d(), std::move(layers));
}

BaseAbstraction BaseAbstraction::make(SymbolSet symbols, std::size_t d, std::vector<DSet> nodes,
                                      std::vector<Edge> edges) {
  if (nodes.empty()) throw SpgError(ErrorKind::DisconnectedInput, "base abstraction has no nodes");
  validate_dsets(symbols, d, nodes, "base abstraction");
  std::set<DSet> distinct(nodes.begin(), nodes.end());
  if (distinct.size() != nodes.size()) {
    throw SpgError(ErrorKind::OverlappingBlocks, "a d-set occurs twice among the nodes");
  }
  for (const Edge& e : edges) {
    if (e.u == e.v || e.v >= nodes.size()) {
      throw SpgError(ErrorKind::BadEdge, "edge {" + std::to_string(e.u) + "," +
                                             std::to_string(e.v) + "} is invalid");
    }
  }
  std::sort(edges.begin(), edges.end());
  edges.erase(std::unique(edges.begin(), edges.end()), edges.end());

  BaseAbstraction b;
  b.symbols_ = std::move(symbols);
  b.d_ = d;
  b.nodes_ = std::move(nodes);
  b.edges_ = std::move(edges);
  b.adjacency_.assign(b.nodes_.size(), {});
  for (const Edge& e : b.edges_) {
    b.adjacency_[e.u].push_back(e.v);
    b.adjacency_[e.v].push_back(e.u);
  }
  for (auto& list : b.adjacency_) std::sort(list.begin(), list.end());
  const auto dist = bfs_distances(b.adjacency_, 0);
  if (std::find(dist.begin(), dist.end(), kUnreached) != dist.end()) {
    throw SpgError(ErrorKind::DisconnectedInput, "base abstraction graph is disconnected");
  }
  return b;
}

bool BaseAbstraction::has_edge(std::size_t i, std::size_t j) const {
  if (i >= adjacency_.size()) return false;
  return std::binary_search(adjacency_[i].begin(), adjacency_[i].end(), j);
}

std::size_t BaseAbstraction::index_of(const DSet& a) const {
  auto it = std::find(nodes_.begin(), nodes_.end(), a);
  if (it == nodes_.end()) {
    throw SpgError(ErrorKind::DSetNotPresent, format_subset(a, symbols_) + " is not a node");
  }
  return static_cast<std::size_t>(it - nodes_.begin());
}

CheckResult check_base_abstraction(const BaseAbstraction& b) {
  const auto& nodes = b.nodes();
  // component labels of the subgraph induced on supersets of each face seen
  std::map<Face, std::vector<std::size_t>> labels;
  auto component_labels = [&](const Face& face) -> const std::vector<std::size_t>& {
    auto it = labels.find(face);
    if (it != labels.end()) return it->second;
    std::vector<bool> keep(nodes.size());
    for (std::size_t v = 0; v < nodes.size(); ++v) keep[v] = nodes[v].includes(face);
    std::vector<std::size_t> label(nodes.size(), kUnreached);
    const auto components = induced_components(b.neighbors(), keep);
    for (std::size_t c = 0; c < components.size(); ++c) {
      for (std::size_t v : components[c]) label[v] = c;
    }
    return labels.emplace(face, std::move(label)).first->second;
  };
  for (std::size_t i = 0; i < nodes.size(); ++i) {
    for (std::size_t j = i + 1; j < nodes.size(); ++j) {
      const Face face = nodes[i].intersect(nodes[j]);
      const auto& label = component_labels(face);
      if (label[i] == label[j]) continue;
      Witness w;
      w.face = face;
      w.blocks = {i, j};
      w.dsets = {nodes[i], nodes[j]};
      w.note = "no path from " + format_subset(nodes[i], b.symbols()) + " to " +
               format_subset(nodes[j], b.symbols()) + " through supersets of " +
               format_subset(face, b.symbols());
      return CheckResult::fail(Property::DimensionReduction, std::move(w));
    }
  }
  return CheckResult::pass(Property::DimensionReduction);
}

CheckResult check_ultraconnected(const BaseAbstraction& b) {
  const auto& nodes = b.nodes();
  for (std::size_t i = 0; i < nodes.size(); ++i) {
    for (std::size_t j = i + 1; j < nodes.size(); ++j) {
      const bool ridge = nodes[i].intersection_size(nodes[j]) + 1 == b.d();
      if (ridge == b.has_edge(i, j)) continue;
      Witness w;
      w.blocks = {i, j};
      w.dsets = {nodes[i], nodes[j]};
      w.note = ridge ? "d-sets share d-1 symbols but are not joined"
                     : "joined d-sets do not share d-1 symbols";
      return CheckResult::fail(Property::Ultraconnected, std::move(w));
    }
  }
  return CheckResult::pass(Property::Ultraconnected);
}

Layering base_layering(const BaseAbstraction& b, const DSet& root) {
  const std::size_t start = b.index_of(root);
  std::vector<std::vector<DSet>> members;
  members.reserve(b.nodes().size());
  for (const DSet& a : b.nodes()) members.push_back({a});
  return layering_from_distances(b.symbols(), b.d(), bfs_distances(b.neighbors(), start),
                                 members);
}

BaseAbstraction clf_to_base(const ConnectedLayerFamily& clf) {
  std::vector<DSet> nodes;
  std::vector<std::size_t> layer_of;
  for (std::size_t i = 0; i < clf.layers().size(); ++i) {
    for (const DSet& a : clf.layers()[i]) {
      nodes.push_back(a);
      layer_of.push_back(i);
    }
  }
  std::vector<Edge> edges;
  for (std::size_t x = 0; x < nodes.size(); ++x) {
    for (std::size_t y = x + 1; y < nodes.size(); ++y) {
      if (layer_of[y] - layer_of[x] <= 1) edges.emplace_back(x, y);
    }
  }
  return BaseAbstraction::make(clf.symbols(), clf.d(), std::move(nodes), std::move(edges));
}

std::size_t graph_diameter(const std::vector<std::vector<std::size_t>>& adjacency) {
  std::size_t best = 0;
  for (std::size_t v = 0; v < adjacency.size(); ++v) {
    for (std::size_t x : bfs_distances(adjacency, v)) {
      if (x != kUnreached) best = std::max(best, x);
    }
  }
  return best;
}

}  // namespace spg
