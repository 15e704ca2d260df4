#include "spg/io.hpp"

#include <algorithm>
#include <charconv>

#include "spg/error.hpp"

namespace spg::io {

namespace {

[[noreturn]] void syntax(const std::string& field, const std::string& message) {
  throw SpgError(ErrorKind::SyntaxError, field + ": " + message);
}

std::size_t as_index(const Json& j, const std::string& field) {
  if (!j.is_number_unsigned()) syntax(field, "expected a non-negative integer");
  return j.get<std::size_t>();
}

const Json& as_array(const Json& j, const std::string& field) {
  if (!j.is_array()) syntax(field, "expected an array");
  return j;
}

SymbolSubset subset_from_json(const Json& j, const std::string& field) {
  as_array(j, field);
  std::vector<Symbol> members;
  for (std::size_t i = 0; i < j.size(); ++i) {
    const std::size_t s = as_index(j[i], field + "[" + std::to_string(i) + "]");
    if (!members.empty() && s <= members.back()) {
      syntax(field, "entries must be strictly ascending");
    }
    members.push_back(static_cast<Symbol>(s));
  }
  return SymbolSubset::from_sorted(std::move(members));
}

/// Checks that the object's keys are a subsequence of `order` containing
/// every key in `required`.
void check_keys(const Json& doc, const std::vector<std::string>& order,
                const std::vector<std::string>& required, const std::string& where) {
  if (!doc.is_object()) syntax(where, "expected an object");
  std::size_t position = 0;
  for (const auto& [key, value] : doc.items()) {
    (void)value;
    auto it = std::find(order.begin(), order.end(), key);
    if (it == order.end()) syntax(where + "." + key, "unknown key");
    const auto index = static_cast<std::size_t>(it - order.begin());
    if (index < position) syntax(where + "." + key, "key out of canonical order");
    position = index + 1;
  }
  for (const auto& key : required) {
    if (!doc.contains(key)) syntax(where + "." + key, "missing");
  }
}

Json layers_to_json(const std::vector<Block>& blocks) {
  Json out = Json::array();
  for (const auto& block : blocks) {
    Json b = Json::array();
    for (const DSet& a : block) b.push_back(subset_to_json(a));
    out.push_back(std::move(b));
  }
  return out;
}

Json header(const SymbolSet& symbols, std::size_t d) {
  Json doc;
  doc["format"] = kSpgFormat;
  doc["n"] = symbols.size();
  doc["d"] = d;
  if (symbols.has_labels()) doc["labels"] = symbols.labels();
  return doc;
}

template <typename T>
std::optional<T> try_number(std::string_view text) {
  T value{};
  auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
  if (ec != std::errc() || ptr != text.data() + text.size()) return std::nullopt;
  return value;
}

std::vector<std::string_view> split(std::string_view text) {
  std::vector<std::string_view> out;
  std::size_t start = 0;
  while (start <= text.size()) {
    std::size_t comma = text.find(',', start);
    if (comma == std::string_view::npos) comma = text.size();
    std::string_view item = text.substr(start, comma - start);
    while (!item.empty() && item.front() == ' ') item.remove_prefix(1);
    while (!item.empty() && item.back() == ' ') item.remove_suffix(1);
    if (!item.empty()) out.push_back(item);
    start = comma + 1;
  }
  return out;
}

}  // namespace

Json parse_json(std::string_view text) {
  try {
    return Json::parse(text.begin(), text.end());
  } catch (const nlohmann::json::parse_error& e) {
    std::size_t line = 1;
    std::size_t column = 1;
    for (std::size_t i = 0; i + 1 < e.byte && i < text.size(); ++i) {
      if (text[i] == '\n') {
        ++line;
        column = 1;
      } else {
        ++column;
      }
    }
    syntax("line " + std::to_string(line) + ", column " + std::to_string(column),
           "malformed JSON");
  }
}

Json subset_to_json(const SymbolSubset& s) {
  Json out = Json::array();
  for (Symbol x : s) out.push_back(x);
  return out;
}

Json spg_to_json(const Spg& g) {
  Json doc = header(g.symbols(), g.d());
  doc["vertices"] = layers_to_json(g.blocks());
  Json edges = Json::array();
  for (const Edge& e : g.edges()) edges.push_back({e.u, e.v});
  doc["edges"] = std::move(edges);
  if (g.apices()) {
    doc["apices"] = {subset_to_json(g.apices()->first), subset_to_json(g.apices()->second)};
  }
  return doc;
}

std::string serialize(const Spg& g) { return spg_to_json(g).dump(); }

Json clf_to_json(const ConnectedLayerFamily& clf) {
  Json doc = header(clf.symbols(), clf.d());
  doc["vertices"] = layers_to_json(clf.layers());
  return doc;
}

std::string serialize(const ConnectedLayerFamily& clf) { return clf_to_json(clf).dump(); }

Spg spg_from_json(const Json& doc) {
  check_keys(doc, {"format", "n", "d", "labels", "vertices", "edges", "apices"},
             {"format", "n", "d", "vertices"}, "document");
  if (!doc["format"].is_string() || doc["format"].get<std::string>() != kSpgFormat) {
    syntax("format", "expected \"" + std::string(kSpgFormat) + "\"");
  }
  const std::size_t n = as_index(doc["n"], "n");
  const std::size_t d = as_index(doc["d"], "d");

  std::vector<Block> blocks;
  const Json& vertices = as_array(doc["vertices"], "vertices");
  for (std::size_t i = 0; i < vertices.size(); ++i) {
    const std::string field = "vertices[" + std::to_string(i) + "]";
    as_array(vertices[i], field);
    Block block;
    for (std::size_t k = 0; k < vertices[i].size(); ++k) {
      DSet a = subset_from_json(vertices[i][k], field + "[" + std::to_string(k) + "]");
      if (!block.empty() && !(block.back() < a)) {
        syntax(field + "[" + std::to_string(k) + "]", "d-sets of a vertex must be ascending");
      }
      block.push_back(std::move(a));
    }
    blocks.push_back(std::move(block));
  }

  std::vector<Edge> edges;
  const bool path = !doc.contains("edges");
  if (path) {
    for (std::size_t i = 0; i + 1 < blocks.size(); ++i) edges.emplace_back(i, i + 1);
  } else {
    const Json& list = as_array(doc["edges"], "edges");
    for (std::size_t i = 0; i < list.size(); ++i) {
      const std::string field = "edges[" + std::to_string(i) + "]";
      if (!list[i].is_array() || list[i].size() != 2) syntax(field, "expected a pair [u,v]");
      const std::size_t u = as_index(list[i][0], field + "[0]");
      const std::size_t v = as_index(list[i][1], field + "[1]");
      if (u >= v) syntax(field, "smaller index must come first");
      Edge e(u, v);
      if (!edges.empty() && !(edges.back() < e)) {
        syntax(field, "edges must be sorted and distinct");
      }
      edges.push_back(e);
    }
  }

  std::optional<Apices> apices;
  if (doc.contains("apices")) {
    const Json& pair = doc["apices"];
    if (!pair.is_array() || pair.size() != 2) syntax("apices", "expected two d-sets");
    DSet first = subset_from_json(pair[0], "apices[0]");
    DSet second = subset_from_json(pair[1], "apices[1]");
    if (!(first < second)) syntax("apices", "apices must be ascending");
    apices = Apices{std::move(first), std::move(second)};
  }

  try {
    SymbolSet symbols(n);
    if (doc.contains("labels")) {
      const Json& labels = as_array(doc["labels"], "labels");
      std::vector<std::string> names;
      for (std::size_t i = 0; i < labels.size(); ++i) {
        if (!labels[i].is_string()) syntax("labels[" + std::to_string(i) + "]", "expected a string");
        names.push_back(labels[i].get<std::string>());
      }
      symbols = SymbolSet(n, std::move(names));
    }
    return Spg::make(std::move(symbols), d, std::move(blocks), std::move(edges),
                     std::move(apices));
  } catch (const SpgError& e) {
    if (e.kind() == ErrorKind::SyntaxError) throw;
    throw ValidationError(e);
  }
}

Spg parse_spg(std::string_view text) { return spg_from_json(parse_json(text)); }

ConnectedLayerFamily parse_clf(std::string_view text) {
  const Spg g = parse_spg(text);
  try {
    return spg_to_clf(g);
  } catch (const SpgError& e) {
    throw ValidationError(e);
  }
}

SymbolSubset parse_subset(std::string_view text, const SymbolSet& symbols) {
  std::vector<Symbol> members;
  if (!symbols.has_labels()) {
    for (std::string_view token : split(text)) {
      auto value = try_number<Symbol>(token);
      if (!value || *value >= symbols.size()) {
        throw SpgError(ErrorKind::UnknownSymbol, "no symbol '" + std::string(token) + "'");
      }
      members.push_back(*value);
    }
    return SymbolSubset(std::move(members));
  }
  // labels may themselves contain commas: take the longest label that ends at
  // a comma or at the end of the text
  const auto& labels = symbols.labels();
  std::size_t pos = 0;
  while (pos < text.size()) {
    if (text[pos] == ',' || text[pos] == ' ') {
      ++pos;
      continue;
    }
    std::optional<std::size_t> best;
    for (std::size_t i = 0; i < labels.size(); ++i) {
      const std::string& label = labels[i];
      if (label.empty() || text.substr(pos, label.size()) != label) continue;
      const std::size_t end = pos + label.size();
      if (end != text.size() && text[end] != ',') continue;
      if (!best || label.size() > labels[*best].size()) best = i;
    }
    if (!best) {
      throw SpgError(ErrorKind::UnknownSymbol,
                     "no symbol label matches at '" + std::string(text.substr(pos)) + "'");
    }
    members.push_back(static_cast<Symbol>(*best));
    pos += labels[*best].size();
  }
  return SymbolSubset(std::move(members));
}

Edge parse_edge(std::string_view text) {
  const auto parts = split(text);
  if (parts.size() == 2) {
    auto u = try_number<std::size_t>(parts[0]);
    auto v = try_number<std::size_t>(parts[1]);
    if (u && v) return Edge(*u, *v);
  }
  throw SpgError(ErrorKind::BadParameter, "expected an edge 'i,j', got '" + std::string(text) + "'");
}

Json witness_to_json(const Witness& w) {
  Json out = Json::object();
  if (w.face) out["face"] = subset_to_json(*w.face);
  if (!w.dsets.empty()) {
    Json dsets = Json::array();
    for (const DSet& a : w.dsets) dsets.push_back(subset_to_json(a));
    out["dsets"] = std::move(dsets);
  }
  if (!w.blocks.empty()) out["blocks"] = w.blocks;
  if (w.count) out["count"] = *w.count;
  if (!w.note.empty()) out["note"] = w.note;
  return out;
}

Json check_to_json(const CheckResult& r) {
  Json out;
  out["property"] = property_name(r.property);
  out["holds"] = r.holds;
  const Json w = witness_to_json(r.witness);
  if (!w.empty()) out[r.holds ? "evidence" : "witness"] = w;
  return out;
}

Json report_to_json(const PropertyReport& report) {
  Json out = Json::array();
  for (const CheckResult& r : report.results()) out.push_back(check_to_json(r));
  return out;
}

Json diameter_to_json(const DiameterResult& d) {
  Json out;
  out["value"] = d.value;
  out["farthest_pair"] = {d.farthest_pair.first, d.farthest_pair.second};
  return out;
}

Json view_to_json(const RestrictedView& view) {
  Json out;
  out["face"] = subset_to_json(view.face);
  out["surviving_blocks"] = view.surviving_blocks;
  Json edges = Json::array();
  for (const Edge& e : view.induced_edges) edges.push_back({e.u, e.v});
  out["induced_edges"] = std::move(edges);
  out["components"] = view.components;
  out["connected"] = view.connected();
  return out;
}

Json layering_to_json(const Layering& layering, const DSet& root) {
  Json out;
  out["root"] = subset_to_json(root);
  out["layers"] = layers_to_json(layering.layers);
  out["clf"] = layering.valid();
  if (!layering.valid()) out["witness"] = witness_to_json(layering.validity.witness);
  return out;
}

Json move_to_json(const Move& m) {
  Json out;
  out["kind"] = move_kind_name(m.kind);
  out["endpoints"] = {m.endpoints.u, m.endpoints.v};
  return out;
}

Move move_from_json(const Json& j) {
  check_keys(j, {"kind", "endpoints"}, {"kind", "endpoints"}, "move");
  if (!j["kind"].is_string()) syntax("move.kind", "expected a string");
  MoveKind kind;
  try {
    kind = parse_move_kind(j["kind"].get<std::string>());
  } catch (const SpgError& e) {
    syntax("move.kind", e.detail());
  }
  const Json& ends = j["endpoints"];
  if (!ends.is_array() || ends.size() != 2) syntax("move.endpoints", "expected a pair [i,j]");
  return {kind, Edge(as_index(ends[0], "move.endpoints[0]"), as_index(ends[1], "move.endpoints[1]"))};
}

Json ranked_moves_to_json(const std::vector<RankedMove>& moves) {
  Json out = Json::array();
  for (const RankedMove& r : moves) {
    Json item = move_to_json(r.move);
    item["diameter_after"] = r.diameter_after;
    item["violations_after"] = r.violations_after;
    out.push_back(std::move(item));
  }
  return out;
}

Json clf_search_to_json(std::size_t n, std::size_t d, oracle::ClfVariant variant,
                        const oracle::ClfSearchResult& result) {
  Json out;
  out["n"] = n;
  out["d"] = d;
  out["variant"] = variant == oracle::ClfVariant::OneSubset ? "one-subset" : "general";
  out["diameter"] = result.diameter;
  out["witness"] = layers_to_json(result.witness);
  if (result.maximal_classes) out["maximal_classes"] = *result.maximal_classes;
  out["nodes_explored"] = result.nodes_explored;
  return out;
}

Json trace_to_json(const StrategyTrace& trace) {
  Json out;
  out["format"] = kTraceFormat;
  Json targets = Json::array();
  for (Property p : trace.targets) targets.push_back(property_name(p));
  out["targets"] = std::move(targets);
  out["initial"] = spg_to_json(trace.initial);
  out["initial_diameter"] = trace.initial_diameter;
  Json steps = Json::array();
  for (const TraceStep& s : trace.steps) {
    Json step;
    step["move"] = move_to_json(s.move);
    step["diameter"] = s.diameter;
    step["report"] = report_to_json(s.report);
    steps.push_back(std::move(step));
  }
  out["steps"] = std::move(steps);
  out["final"] = spg_to_json(trace.final_graph);
  out["warnings"] = trace.warnings;
  return out;
}

std::string serialize(const StrategyTrace& trace) { return trace_to_json(trace).dump(); }

StrategyTrace trace_from_json(const Json& doc) {
  check_keys(doc, {"format", "targets", "initial", "initial_diameter", "steps", "final", "warnings"},
             {"format", "targets", "initial", "steps"}, "trace");
  if (!doc["format"].is_string() || doc["format"].get<std::string>() != kTraceFormat) {
    syntax("format", "expected \"" + std::string(kTraceFormat) + "\"");
  }
  std::vector<Property> targets;
  for (const Json& t : as_array(doc["targets"], "targets")) {
    if (!t.is_string()) syntax("targets", "expected property names");
    try {
      targets.push_back(parse_property(t.get<std::string>()));
    } catch (const SpgError& e) {
      syntax("targets", e.detail());
    }
  }
  const Spg initial = spg_from_json(doc["initial"]);
  StrategyTrace trace{initial, targets, diameter(initial).value, {}, initial, {}};
  const Json& steps = as_array(doc["steps"], "steps");
  for (std::size_t i = 0; i < steps.size(); ++i) {
    const std::string field = "steps[" + std::to_string(i) + "]";
    if (!steps[i].is_object() || !steps[i].contains("move")) syntax(field, "missing move");
    const Move m = move_from_json(steps[i]["move"]);
    Spg next = [&] {
      try {
        return apply_move(trace.final_graph, m);
      } catch (const SpgError& e) {
        throw ValidationError(e);
      }
    }();
    trace.steps.push_back({m, diameter(next).value, step_report(next)});
    trace.final_graph = std::move(next);
  }
  if (doc.contains("warnings")) {
    for (const Json& w : as_array(doc["warnings"], "warnings")) {
      if (!w.is_string()) syntax("warnings", "expected strings");
      trace.warnings.push_back(w.get<std::string>());
    }
  }
  // recorded metrics must agree with the replay
  const Json replayed = trace_to_json(trace);
  for (const char* key : {"initial_diameter", "final"}) {
    if (doc.contains(key) && doc[key] != replayed[key]) {
      throw SpgError(ErrorKind::ValidationError, std::string(key) + " does not match the replay");
    }
  }
  for (std::size_t i = 0; i < steps.size(); ++i) {
    for (const char* key : {"diameter", "report"}) {
      if (steps[i].contains(key) && steps[i][key] != replayed["steps"][i][key]) {
        throw SpgError(ErrorKind::ValidationError, "steps[" + std::to_string(i) + "]." + key +
                                                       " does not match the replay");
      }
    }
  }
  return trace;
}

StrategyTrace parse_trace(std::string_view text) { return trace_from_json(parse_json(text)); }

}  // namespace spg::io
