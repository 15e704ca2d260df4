#include "spg/spg.hpp"

#include <algorithm>
#include <limits>
#include <queue>
#include <set>
#include <string>

#include "spg/error.hpp"

namespace spg {

namespace {

constexpr std::size_t kUnreached = std::numeric_limits<std::size_t>::max();

std::vector<std::vector<std::size_t>> build_adjacency(std::size_t count,
                                                      const std::vector<Edge>& edges) {
  std::vector<std::vector<std::size_t>> adj(count);
  for (const Edge& e : edges) {
    adj[e.u].push_back(e.v);
    adj[e.v].push_back(e.u);
  }
  for (auto& list : adj) std::sort(list.begin(), list.end());
  return adj;
}

std::string edge_text(std::size_t i, std::size_t j) {
  return "{" + std::to_string(i) + "," + std::to_string(j) + "}";
}

}  // namespace

Spg Spg::make(SymbolSet symbols, std::size_t d, std::vector<Block> blocks,
              std::vector<Edge> edges, std::optional<Apices> apices) {
  if (blocks.empty()) {
    throw SpgError(ErrorKind::EmptyBlock, "a subset partition graph needs at least one block");
  }
  Spg g;
  g.symbols_ = std::move(symbols);
  g.d_ = d;
  const std::size_t n = g.symbols_.size();

  for (std::size_t i = 0; i < blocks.size(); ++i) {
    Block& block = blocks[i];
    if (block.empty()) {
      throw SpgError(ErrorKind::EmptyBlock, "block " + std::to_string(i) + " is empty");
    }
    for (const DSet& a : block) {
      if (a.size() != d) {
        throw SpgError(ErrorKind::WrongCardinality,
                       format_subset(a) + " in block " + std::to_string(i) + " has " +
                           std::to_string(a.size()) + " symbols, expected " +
                           std::to_string(d));
      }
      if (!a.empty() && a.members().back() >= n) {
        throw SpgError(ErrorKind::UnknownSymbol,
                       format_subset(a) + " in block " + std::to_string(i) +
                           " uses a symbol outside 0.." + std::to_string(n == 0 ? 0 : n - 1));
      }
      auto [it, inserted] = g.owner_.emplace(a, i);
      if (!inserted) {
        throw SpgError(ErrorKind::OverlappingBlocks,
                       format_subset(a) + " appears in blocks " + std::to_string(it->second) +
                           " and " + std::to_string(i));
      }
    }
    std::sort(block.begin(), block.end());
  }

  for (Edge& e : edges) {
    if (e.u == e.v || e.v >= blocks.size()) {
      throw SpgError(ErrorKind::BadEdge, "edge " + edge_text(e.u, e.v) + " is invalid for " +
                                             std::to_string(blocks.size()) + " blocks");
    }
  }
  std::sort(edges.begin(), edges.end());
  edges.erase(std::unique(edges.begin(), edges.end()), edges.end());

  g.blocks_ = std::move(blocks);
  g.edges_ = std::move(edges);
  g.adjacency_ = build_adjacency(g.blocks_.size(), g.edges_);

  const auto dist = bfs_distances(g.adjacency_, 0);
  for (std::size_t i = 0; i < dist.size(); ++i) {
    if (dist[i] == kUnreached) {
      throw SpgError(ErrorKind::DisconnectedGraph,
                     "block " + std::to_string(i) + " is not reachable from block 0");
    }
  }

  g.family_.reserve(g.owner_.size());
  for (const auto& [a, owner] : g.owner_) g.family_.push_back(a);

  if (apices) {
    if (apices->second < apices->first) std::swap(apices->first, apices->second);
    if (!g.owner_.contains(apices->first) || !g.owner_.contains(apices->second) ||
        !apices->first.is_disjoint(apices->second) ||
        apices->first.size() + apices->second.size() != n) {
      throw SpgError(ErrorKind::NotASpindle,
                     "apices " + format_subset(apices->first) + " and " +
                         format_subset(apices->second) +
                         " are not two members of the family partitioning the symbols");
    }
    g.apices_ = std::move(apices);
  }
  return g;
}

bool Spg::has_edge(std::size_t i, std::size_t j) const {
  if (i >= adjacency_.size()) return false;
  const auto& list = adjacency_[i];
  return std::binary_search(list.begin(), list.end(), j);
}

std::optional<std::size_t> Spg::block_of(const DSet& a) const {
  auto it = owner_.find(a);
  if (it == owner_.end()) return std::nullopt;
  return it->second;
}

std::size_t Spg::require_block_of(const DSet& a) const {
  auto b = block_of(a);
  if (!b) {
    throw SpgError(ErrorKind::DSetNotPresent,
                   format_subset(a, symbols_) + " is not in any block");
  }
  return *b;
}

bool RestrictedView::survives(std::size_t block) const {
  return std::binary_search(surviving_blocks.begin(), surviving_blocks.end(), block);
}

std::vector<std::vector<std::size_t>> induced_components(
    const std::vector<std::vector<std::size_t>>& adjacency, const std::vector<bool>& keep) {
  std::vector<std::vector<std::size_t>> components;
  std::vector<bool> seen(adjacency.size(), false);
  for (std::size_t start = 0; start < adjacency.size(); ++start) {
    if (!keep[start] || seen[start]) continue;
    std::vector<std::size_t> component;
    std::vector<std::size_t> stack{start};
    seen[start] = true;
    while (!stack.empty()) {
      std::size_t v = stack.back();
      stack.pop_back();
      component.push_back(v);
      for (std::size_t w : adjacency[v]) {
        if (keep[w] && !seen[w]) {
          seen[w] = true;
          stack.push_back(w);
        }
      }
    }
    std::sort(component.begin(), component.end());
    components.push_back(std::move(component));
  }
  return components;
}

RestrictedView restriction(const Spg& g, const Face& face) {
  for (Symbol s : face) {
    if (s >= g.n()) {
      throw SpgError(ErrorKind::UnknownSymbol,
                     "symbol " + std::to_string(s) + " is not in 0.." +
                         std::to_string(g.n() == 0 ? 0 : g.n() - 1));
    }
  }
  RestrictedView view;
  view.face = face;
  std::vector<bool> keep(g.block_count(), false);
  for (std::size_t i = 0; i < g.block_count(); ++i) {
    for (const DSet& a : g.block(i)) {
      if (a.includes(face)) {
        keep[i] = true;
        break;
      }
    }
    if (keep[i]) view.surviving_blocks.push_back(i);
  }
  for (const Edge& e : g.edges()) {
    if (keep[e.u] && keep[e.v]) view.induced_edges.push_back(e);
  }
  view.components = induced_components(g.neighbors(), keep);
  return view;
}

std::vector<std::size_t> bfs_distances(const std::vector<std::vector<std::size_t>>& adjacency,
                                       std::size_t source) {
  std::vector<std::size_t> dist(adjacency.size(), kUnreached);
  if (source >= adjacency.size()) return dist;
  std::queue<std::size_t> frontier;
  dist[source] = 0;
  frontier.push(source);
  while (!frontier.empty()) {
    std::size_t v = frontier.front();
    frontier.pop();
    for (std::size_t w : adjacency[v]) {
      if (dist[w] == kUnreached) {
        dist[w] = dist[v] + 1;
        frontier.push(w);
      }
    }
  }
  return dist;
}

DiameterResult diameter(const Spg& g) {
  DiameterResult result;
  for (std::size_t i = 0; i < g.block_count(); ++i) {
    const auto dist = bfs_distances(g.neighbors(), i);
    for (std::size_t j = i + 1; j < dist.size(); ++j) {
      if (dist[j] > result.value) {
        result.value = dist[j];
        result.farthest_pair = {i, j};
      }
    }
  }
  return result;
}

std::size_t distance(const Spg& g, const DSet& a, const DSet& b) {
  const std::size_t from = g.require_block_of(a);
  const std::size_t to = g.require_block_of(b);
  return bfs_distances(g.neighbors(), from)[to];
}

Spg contraction(const Spg& g, Edge edge) {
  if (edge.v >= g.block_count() || !g.has_edge(edge.u, edge.v)) {
    throw SpgError(ErrorKind::NoSuchEdge,
                   "blocks " + edge_text(edge.u, edge.v) + " are not joined by an edge");
  }
  const std::size_t keep = edge.u;
  const std::size_t gone = edge.v;
  auto remap = [&](std::size_t k) {
    if (k == gone) return keep;
    return k > gone ? k - 1 : k;
  };

  std::vector<Block> blocks;
  blocks.reserve(g.block_count() - 1);
  for (std::size_t k = 0; k < g.block_count(); ++k) {
    if (k == gone) continue;
    Block b = g.block(k);
    if (k == keep) b.insert(b.end(), g.block(gone).begin(), g.block(gone).end());
    blocks.push_back(std::move(b));
  }
  std::vector<Edge> edges;
  edges.reserve(g.edges().size());
  for (const Edge& e : g.edges()) {
    const std::size_t a = remap(e.u);
    const std::size_t b = remap(e.v);
    if (a != b) edges.emplace_back(a, b);
  }
  return Spg::make(g.symbols(), g.d(), std::move(blocks), std::move(edges), g.apices());
}

Spg edge_addition(const Spg& g, std::size_t i, std::size_t j) {
  if (i == j) {
    throw SpgError(ErrorKind::SelfLoop, "cannot join block " + std::to_string(i) + " to itself");
  }
  if (i >= g.block_count() || j >= g.block_count()) {
    throw SpgError(ErrorKind::BadEdge, "edge " + edge_text(i, j) + " is invalid for " +
                                           std::to_string(g.block_count()) + " blocks");
  }
  if (g.has_edge(i, j)) {
    throw SpgError(ErrorKind::EdgeExists, "blocks " + edge_text(i, j) + " are already adjacent");
  }
  std::vector<Edge> edges = g.edges();
  edges.emplace_back(i, j);
  return Spg::make(g.symbols(), g.d(), g.blocks(), std::move(edges), g.apices());
}

bool same_structure(const Spg& a, const Spg& b) {
  if (a.n() != b.n() || a.d() != b.d() || a.block_count() != b.block_count() ||
      a.edges().size() != b.edges().size() || a.family() != b.family()) {
    return false;
  }
  // identify blocks by their first (smallest) d-set
  std::set<Block> blocks_a(a.blocks().begin(), a.blocks().end());
  std::set<Block> blocks_b(b.blocks().begin(), b.blocks().end());
  if (blocks_a != blocks_b) return false;
  auto edge_contents = [](const Spg& g) {
    std::set<std::pair<DSet, DSet>> out;
    for (const Edge& e : g.edges()) {
      DSet x = g.block(e.u).front();
      DSet y = g.block(e.v).front();
      if (y < x) std::swap(x, y);
      out.emplace(std::move(x), std::move(y));
    }
    return out;
  };
  return edge_contents(a) == edge_contents(b);
}

}  // namespace spg
