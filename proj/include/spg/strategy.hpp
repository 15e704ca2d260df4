#ifndef SPG_STRATEGY_HPP
#define SPG_STRATEGY_HPP

#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

#include "spg/error.hpp"
#include "spg/properties.hpp"
#include "spg/spg.hpp"

namespace spg {

enum class MoveKind { Contract, AddEdge };

/// "contract" / "addEdge".
std::string_view move_kind_name(MoveKind kind);
/// Errors: BadParameter.
MoveKind parse_move_kind(std::string_view name);

struct Move {
  MoveKind kind = MoveKind::Contract;
  Edge endpoints;

  friend bool operator==(const Move&, const Move&) = default;
  friend auto operator<=>(const Move&, const Move&) = default;
};

/// Contraction or edge addition; errors are those of the core operation.
Spg apply_move(const Spg& g, const Move& move);

/// Errors: BadParameter unless every target is a main property.
void require_main_targets(const std::vector<Property>& targets);

/// Current failures among `targets`, in main-property order.
std::vector<CheckResult> violations(const Spg& g, const std::vector<Property>& targets);

struct RankedMove {
  Move move;
  std::size_t diameter_after = 0;
  /// Failing targets after the move.
  std::size_t violations_after = 0;
};

/// Moves aimed at one violation, minus those that would break a target that
/// currently holds. Ranked by diameter after the move (larger first), then
/// fewer remaining violations, then edge additions before contractions, then
/// endpoints.
///
/// dimension-reduction: edges joining the two witness components of G_F and
/// contractions of edges on shortest paths between them. adjacency: the
/// missing edge and contractions through common neighbors. strong-adjacency:
/// contraction of the unwitnessed edge (or the adjacency repairs when the
/// failure is an adjacency one). endpoint-count: none, no move changes the
/// family.
std::vector<RankedMove> candidate_moves(const Spg& g, const CheckResult& violation,
                                        const std::vector<Property>& targets);

struct TraceStep {
  Move move;
  std::size_t diameter = 0;
  PropertyReport report;
};

struct StrategyTrace {
  Spg initial;
  std::vector<Property> targets;
  std::size_t initial_diameter = 0;
  std::vector<TraceStep> steps;
  Spg final_graph;
  std::vector<std::string> warnings;

  std::vector<Move> moves() const;
};

struct StrategyOptions {
  std::size_t budget = 200;  ///< maximum number of moves
  /// 0 = greedy; otherwise a beam of this width (the CLI uses 8).
  std::size_t beam_width = 0;
};

/// Raised when the budget runs out or no candidate move remains; carries the
/// moves made so far.
class StrategyExhausted : public SpgError {
 public:
  StrategyExhausted(const std::string& message, StrategyTrace partial)
      : SpgError(ErrorKind::BudgetExhausted, message), trace_(std::move(partial)) {}
  const StrategyTrace& trace() const noexcept { return trace_; }

 private:
  StrategyTrace trace_;
};

/// Applies the best candidate move for the first violation that has one until
/// every target holds. Deterministic. Errors: StrategyExhausted, BadParameter.
StrategyTrace strategy_search(const Spg& g, const std::vector<Property>& targets,
                              const StrategyOptions& options = {});

/// Every intermediate state of a move sequence, starting with `initial`.
std::vector<Spg> replay(const Spg& initial, const std::vector<Move>& moves);

/// Replays the trace and compares each recorded diameter, report and the
/// final graph.
bool verify_trace(const StrategyTrace& trace);

/// Report attached to every trace step and workbench response.
PropertyReport step_report(const Spg& g);

}  // namespace spg

#endif  // SPG_STRATEGY_HPP
