#include "spg/strategy.hpp"

#include <algorithm>
#include <limits>
#include <optional>
#include <set>
#include <tuple>

namespace spg {

namespace {

constexpr std::size_t kUnreached = std::numeric_limits<std::size_t>::max();

bool is_main(Property p) {
  return std::find(kMainProperties.begin(), kMainProperties.end(), p) != kMainProperties.end();
}

std::size_t count_failures(const Spg& g, const std::vector<Property>& targets) {
  std::size_t count = 0;
  for (Property p : targets) count += check_property(g, p).holds ? 0 : 1;
  return count;
}

std::vector<std::size_t> multi_source_distances(const Spg& g,
                                                const std::vector<std::size_t>& sources) {
  std::vector<std::size_t> dist(g.block_count(), kUnreached);
  std::vector<std::size_t> queue;
  for (std::size_t s : sources) {
    dist[s] = 0;
    queue.push_back(s);
  }
  for (std::size_t head = 0; head < queue.size(); ++head) {
    const std::size_t v = queue[head];
    for (std::size_t w : g.neighbors()[v]) {
      if (dist[w] != kUnreached) continue;
      dist[w] = dist[v] + 1;
      queue.push_back(w);
    }
  }
  return dist;
}

void dimension_reduction_moves(const Spg& g, const CheckResult& violation, std::set<Move>& out) {
  const RestrictedView view = restriction(g, *violation.witness.face);
  const auto component_of = [&](std::size_t block) -> const std::vector<std::size_t>& {
    for (const auto& c : view.components) {
      if (std::binary_search(c.begin(), c.end(), block)) return c;
    }
    return view.components.front();
  };
  const auto& first = component_of(violation.witness.blocks.at(0));
  const auto& second = component_of(violation.witness.blocks.at(1));
  for (std::size_t x : first) {
    for (std::size_t y : second) out.insert({MoveKind::AddEdge, Edge(x, y)});
  }
  const auto from_first = multi_source_distances(g, first);
  const auto from_second = multi_source_distances(g, second);
  std::size_t gap = kUnreached;
  for (std::size_t y : second) gap = std::min(gap, from_first[y]);
  for (const Edge& e : g.edges()) {
    const bool forward = from_first[e.u] + 1 + from_second[e.v] == gap;
    const bool backward = from_first[e.v] + 1 + from_second[e.u] == gap;
    if (forward || backward) out.insert({MoveKind::Contract, e});
  }
}

void adjacency_moves(const Spg& g, std::size_t a, std::size_t b, std::set<Move>& out) {
  if (a == b) return;
  if (!g.has_edge(a, b)) out.insert({MoveKind::AddEdge, Edge(a, b)});
  for (std::size_t x : g.neighbors()[a]) {
    if (!g.has_edge(x, b)) continue;
    out.insert({MoveKind::Contract, Edge(a, x)});
    out.insert({MoveKind::Contract, Edge(x, b)});
  }
}

std::vector<CheckResult> failures_of(const Spg& g, const std::vector<Property>& targets) {
  std::vector<CheckResult> out;
  for (Property p : kMainProperties) {
    if (std::find(targets.begin(), targets.end(), p) == targets.end()) continue;
    CheckResult r = check_property(g, p);
    if (!r.holds) out.push_back(std::move(r));
  }
  return out;
}

/// Best move over the violations in order; nullopt when none has a move.
std::optional<Move> best_move(const Spg& g, const std::vector<Property>& targets) {
  for (const CheckResult& v : failures_of(g, targets)) {
    const auto ranked = candidate_moves(g, v, targets);
    if (!ranked.empty()) return ranked.front().move;
  }
  return std::nullopt;
}

StrategyTrace start_trace(const Spg& g, const std::vector<Property>& targets) {
  StrategyTrace trace{g, targets, diameter(g).value, {}, g, {}};
  if (!check_endpoint_count(g).holds) {
    trace.warnings.push_back("the initial graph fails endpoint-count; no move can repair it");
  }
  return trace;
}

void record(StrategyTrace& trace, const Move& move, const Spg& after) {
  trace.steps.push_back({move, diameter(after).value, step_report(after)});
  trace.final_graph = after;
}

StrategyTrace trace_of(const Spg& g, const std::vector<Property>& targets,
                       const std::vector<Move>& moves) {
  StrategyTrace trace = start_trace(g, targets);
  for (const Move& m : moves) record(trace, m, apply_move(trace.final_graph, m));
  return trace;
}

StrategyTrace greedy(const Spg& g, const std::vector<Property>& targets,
                     const StrategyOptions& options) {
  StrategyTrace trace = start_trace(g, targets);
  Spg current = g;
  while (!failures_of(current, targets).empty()) {
    if (trace.steps.size() >= options.budget) {
      throw StrategyExhausted("budget of " + std::to_string(options.budget) + " moves exhausted",
                              std::move(trace));
    }
    const auto move = best_move(current, targets);
    if (!move) throw StrategyExhausted("no candidate move remains", std::move(trace));
    current = apply_move(current, *move);
    record(trace, *move, current);
  }
  return trace;
}

struct BeamState {
  Spg graph;
  std::vector<Move> moves;
  std::size_t failures = 0;
  std::size_t diam = 0;
};

bool beam_less(const BeamState& a, const BeamState& b) {
  return std::tie(a.failures, b.diam, a.moves) < std::tie(b.failures, a.diam, b.moves);
}

StrategyTrace beam(const Spg& g, const std::vector<Property>& targets,
                   const StrategyOptions& options) {
  std::vector<BeamState> frontier{{g, {}, count_failures(g, targets), diameter(g).value}};
  for (std::size_t depth = 0;; ++depth) {
    std::vector<const BeamState*> done;
    for (const auto& s : frontier) {
      if (s.failures == 0) done.push_back(&s);
    }
    if (!done.empty()) {
      const BeamState* best = *std::min_element(
          done.begin(), done.end(), [](const BeamState* a, const BeamState* b) {
            return std::tie(b->diam, a->moves) < std::tie(a->diam, b->moves);
          });
      return trace_of(g, targets, best->moves);
    }
    const auto& lead = frontier.front();
    if (depth >= options.budget) {
      throw StrategyExhausted("budget of " + std::to_string(options.budget) + " moves exhausted",
                              trace_of(g, targets, lead.moves));
    }
    std::vector<BeamState> next;
    for (const auto& s : frontier) {
      std::set<Move> seen;
      for (const CheckResult& v : failures_of(s.graph, targets)) {
        for (const RankedMove& r : candidate_moves(s.graph, v, targets)) {
          if (!seen.insert(r.move).second) continue;
          BeamState child{apply_move(s.graph, r.move), s.moves, r.violations_after,
                          r.diameter_after};
          child.moves.push_back(r.move);
          next.push_back(std::move(child));
        }
      }
    }
    if (next.empty()) {
      throw StrategyExhausted("no candidate move remains", trace_of(g, targets, lead.moves));
    }
    std::sort(next.begin(), next.end(), beam_less);
    std::vector<BeamState> kept;
    for (auto& s : next) {
      if (kept.size() == options.beam_width) break;
      const bool duplicate = std::any_of(kept.begin(), kept.end(),
                                         [&](const BeamState& k) { return k.graph == s.graph; });
      if (!duplicate) kept.push_back(std::move(s));
    }
    frontier = std::move(kept);
  }
}

}  // namespace

std::string_view move_kind_name(MoveKind kind) {
  return kind == MoveKind::Contract ? "contract" : "addEdge";
}

MoveKind parse_move_kind(std::string_view name) {
  if (name == "contract") return MoveKind::Contract;
  if (name == "addEdge") return MoveKind::AddEdge;
  throw SpgError(ErrorKind::BadParameter, "unknown move kind '" + std::string(name) + "'");
}

Spg apply_move(const Spg& g, const Move& move) {
  if (move.kind == MoveKind::Contract) return contraction(g, move.endpoints);
  return edge_addition(g, move.endpoints.u, move.endpoints.v);
}

void require_main_targets(const std::vector<Property>& targets) {
  for (Property p : targets) {
    if (!is_main(p)) {
      throw SpgError(ErrorKind::BadParameter,
                     std::string(property_name(p)) + " is not a main property");
    }
  }
}

std::vector<CheckResult> violations(const Spg& g, const std::vector<Property>& targets) {
  require_main_targets(targets);
  return failures_of(g, targets);
}

std::vector<RankedMove> candidate_moves(const Spg& g, const CheckResult& violation,
                                        const std::vector<Property>& targets) {
  require_main_targets(targets);
  if (violation.holds) return {};
  std::set<Move> moves;
  const Witness& w = violation.witness;
  switch (violation.property) {
    case Property::DimensionReduction:
      dimension_reduction_moves(g, violation, moves);
      break;
    case Property::Adjacency:
      adjacency_moves(g, w.blocks.at(0), w.blocks.at(1), moves);
      break;
    case Property::StrongAdjacency:
      if (w.dsets.empty()) {
        moves.insert({MoveKind::Contract, Edge(w.blocks.at(0), w.blocks.at(1))});
      } else {
        adjacency_moves(g, w.blocks.at(0), w.blocks.at(1), moves);
      }
      break;
    default:
      break;
  }

  std::vector<Property> held;
  for (Property p : targets) {
    if (check_property(g, p).holds) held.push_back(p);
  }
  std::vector<RankedMove> ranked;
  for (const Move& m : moves) {
    const Spg after = apply_move(g, m);
    const bool breaks = std::any_of(held.begin(), held.end(),
                                    [&](Property p) { return !check_property(after, p).holds; });
    if (breaks) continue;
    ranked.push_back({m, diameter(after).value, count_failures(after, targets)});
  }
  std::sort(ranked.begin(), ranked.end(), [](const RankedMove& a, const RankedMove& b) {
    const int ka = a.move.kind == MoveKind::AddEdge ? 0 : 1;
    const int kb = b.move.kind == MoveKind::AddEdge ? 0 : 1;
    return std::tie(b.diameter_after, a.violations_after, ka, a.move.endpoints) <
           std::tie(a.diameter_after, b.violations_after, kb, b.move.endpoints);
  });
  return ranked;
}

std::vector<Move> StrategyTrace::moves() const {
  std::vector<Move> out;
  for (const auto& s : steps) out.push_back(s.move);
  return out;
}

StrategyTrace strategy_search(const Spg& g, const std::vector<Property>& targets,
                              const StrategyOptions& options) {
  require_main_targets(targets);
  if (targets.empty()) throw SpgError(ErrorKind::BadParameter, "no target properties");
  if (options.beam_width == 0) return greedy(g, targets, options);
  return beam(g, targets, options);
}

std::vector<Spg> replay(const Spg& initial, const std::vector<Move>& moves) {
  std::vector<Spg> states{initial};
  for (const Move& m : moves) states.push_back(apply_move(states.back(), m));
  return states;
}

bool verify_trace(const StrategyTrace& trace) {
  const auto states = replay(trace.initial, trace.moves());
  if (diameter(trace.initial).value != trace.initial_diameter) return false;
  for (std::size_t i = 0; i < trace.steps.size(); ++i) {
    const Spg& s = states[i + 1];
    if (diameter(s).value != trace.steps[i].diameter) return false;
    if (!(step_report(s) == trace.steps[i].report)) return false;
  }
  return states.back() == trace.final_graph;
}

PropertyReport step_report(const Spg& g) { return property_report(g); }

}  // namespace spg
