#ifndef SPG_IO_HPP
#define SPG_IO_HPP

#include <string>
#include <string_view>

#include <json.hpp>

#include "spg/layers.hpp"
#include "spg/oracle.hpp"
#include "spg/properties.hpp"
#include "spg/spg.hpp"
#include "spg/strategy.hpp"

namespace spg::io {

using Json = nlohmann::ordered_json;

inline constexpr std::string_view kSpgFormat = "spg/1";
inline constexpr std::string_view kTraceFormat = "spg-trace/1";

// Canonical SPG document:
//   {"format":"spg/1","n":..,"d":..,"labels":[..]?,"vertices":[[[..],..],..],
//    "edges":[[u,v],..]?,"apices":[[..],[..]]?}
// Keys appear in exactly this order. Layer families omit "edges" (the path
// 0-1-...-t is implied).

Json spg_to_json(const Spg& g);
/// Compact single-line form.
std::string serialize(const Spg& g);
Json clf_to_json(const ConnectedLayerFamily& clf);
std::string serialize(const ConnectedLayerFamily& clf);

/// Errors: SyntaxError (malformed JSON, unknown or misordered keys,
/// non-canonical entries; the message names the field), ValidationError
/// wrapping the core error raised by Spg::make.
Spg spg_from_json(const Json& doc);
Spg parse_spg(std::string_view text);
/// As parse_spg, then requires the path shape of a layer family.
/// Errors: additionally ValidationError(InvalidClf).
ConnectedLayerFamily parse_clf(std::string_view text);

/// Comma separated symbols, by label when the set is labeled, else by index.
/// Errors: UnknownSymbol, WrongCardinality (repeated symbol).
SymbolSubset parse_subset(std::string_view text, const SymbolSet& symbols);
/// "i,j". Errors: BadParameter.
Edge parse_edge(std::string_view text);

Json subset_to_json(const SymbolSubset& s);
Json witness_to_json(const Witness& w);
Json check_to_json(const CheckResult& r);
Json report_to_json(const PropertyReport& report);
Json diameter_to_json(const DiameterResult& d);
Json view_to_json(const RestrictedView& view);
Json layering_to_json(const Layering& layering, const DSet& root);
Json move_to_json(const Move& m);
/// Errors: SyntaxError.
Move move_from_json(const Json& j);
Json ranked_moves_to_json(const std::vector<RankedMove>& moves);
Json clf_search_to_json(std::size_t n, std::size_t d, oracle::ClfVariant variant,
                        const oracle::ClfSearchResult& result);

Json trace_to_json(const StrategyTrace& trace);
std::string serialize(const StrategyTrace& trace);
/// Rebuilds the trace by replaying its moves from the initial graph; every
/// recorded step must match the replay. Errors: SyntaxError, ValidationError.
StrategyTrace trace_from_json(const Json& doc);
StrategyTrace parse_trace(std::string_view text);

/// Parses text into JSON. Errors: SyntaxError with line and column.
Json parse_json(std::string_view text);

}  // namespace spg::io

#endif  // SPG_IO_HPP
