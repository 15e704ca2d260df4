#include <gtest/gtest.h>

#include <random>

#include "spg/generators.hpp"
#include "spg/io.hpp"
#include "spg/sampling.hpp"
#include "support.hpp"

using namespace spg;
using spg::testing::kind_of;

namespace {

ErrorKind cause_of(const std::string& text) {
  try {
    io::parse_spg(text);
  } catch (const ValidationError& e) {
    return e.cause();
  }
  return ErrorKind::BadParameter;
}

std::string error_text(const std::string& text) {
  try {
    io::parse_spg(text);
  } catch (const SpgError& e) {
    return e.what();
  }
  return "";
}

}  // namespace

TEST(SpgDocument, FigureOneRoundTrip) {
  const Spg fig = gen_figure1();
  const std::string text = io::serialize(fig);
  EXPECT_EQ(io::parse_spg(text), fig);
  EXPECT_EQ(io::serialize(io::parse_spg(text)), text);
  EXPECT_EQ(text.rfind("{\"format\":\"spg/1\",\"n\":6,\"d\":3,\"labels\":[\"1\"", 0), 0u);
}

TEST(SpgDocument, RoundTripOnGeneratorsAndRandomInstances) {
  std::vector<Spg> samples{gen_spindle_family(3), gen_cyclic_construction(12, 8),
                           gen_cube_spg(4)};
  std::mt19937_64 rng(1);
  for (int i = 0; i < 50; ++i) samples.push_back(random_spg(rng, {}));
  for (const Spg& g : samples) {
    const std::string text = io::serialize(g);
    EXPECT_EQ(io::parse_spg(text), g);
    EXPECT_EQ(io::serialize(io::parse_spg(text)), text);
  }
}

TEST(SpgDocument, SpindleKeepsApices) {
  const Spg g = gen_spindle_family(2);
  EXPECT_EQ(io::parse_spg(io::serialize(g)).apices(), g.apices());
}

TEST(SpgDocument, ClfOmitsEdges) {
  const auto clf = gen_hirsch_path_clf(5, 2);
  const std::string text = io::serialize(clf);
  EXPECT_EQ(text.find("edges"), std::string::npos);
  EXPECT_EQ(io::parse_clf(text).layers(), clf.layers());
  EXPECT_EQ(io::parse_spg(text).edges().size(), 3u);
}

TEST(SpgDocument, OverlappingBlocksIsAValidationError) {
  EXPECT_EQ(cause_of(R"({"format":"spg/1","n":3,"d":2,"vertices":[[[0,1]],[[0,1]]],"edges":[[0,1]]})"),
            ErrorKind::OverlappingBlocks);
  EXPECT_EQ(cause_of(R"({"format":"spg/1","n":4,"d":2,"vertices":[[[0,1]],[[2,3]]],"edges":[]})"),
            ErrorKind::DisconnectedGraph);
}

TEST(SpgDocument, UnsortedDSetNamesTheEntry) {
  const std::string text =
      R"({"format":"spg/1","n":3,"d":2,"vertices":[[[0,1]],[[2,1]]],"edges":[[0,1]]})";
  EXPECT_EQ(kind_of([&] { io::parse_spg(text); }), ErrorKind::SyntaxError);
  EXPECT_NE(error_text(text).find("vertices[1][0]"), std::string::npos);
}

TEST(SpgDocument, NonCanonicalDocumentsAreSyntaxErrors) {
  const std::vector<std::string> bad{
      R"({"n":3,"format":"spg/1","d":2,"vertices":[[[0,1]]]})",
      R"({"format":"spg/2","n":3,"d":2,"vertices":[[[0,1]]]})",
      R"({"format":"spg/1","n":3,"d":2,"vertices":[[[1,2],[0,1]]]})",
      R"({"format":"spg/1","n":3,"d":2,"vertices":[[[0,1]],[[1,2]]],"edges":[[1,0]]})",
      R"({"format":"spg/1","n":3,"d":2,"vertices":[[[0,1]],[[1,2]]],"edges":[[0,1],[0,1]]})",
      R"({"format":"spg/1","n":3,"d":2,"vertices":[[[0,1]]],"extra":1})",
      R"({"format":"spg/1","n":3,"d":2})",
      R"({"format":"spg/1","n":-3,"d":2,"vertices":[[[0,1]]]})",
      "{\"format\":\"spg/1\",\n\"n\":3,"};
  for (const auto& text : bad) {
    EXPECT_EQ(kind_of([&] { io::parse_spg(text); }), ErrorKind::SyntaxError) << text;
  }
  EXPECT_NE(error_text(bad.back()).find("line 2"), std::string::npos);
}

TEST(SpgDocument, ClfParserRejectsNonPaths) {
  const std::string text =
      R"({"format":"spg/1","n":3,"d":2,"vertices":[[[0,1]],[[1,2]],[[0,2]]]})";
  EXPECT_EQ(kind_of([&] { io::parse_clf(text); }), ErrorKind::ValidationError);
}

TEST(ParseSubset, UsesLabelsWhenPresent) {
  const Spg fig = gen_figure1();
  EXPECT_EQ(io::parse_subset("1,2,3", fig.symbols()), DSet({0, 1, 2}));
  EXPECT_EQ(io::parse_subset("", fig.symbols()), Face{});
  EXPECT_EQ(kind_of([&] { io::parse_subset("0", fig.symbols()); }), ErrorKind::UnknownSymbol);
  EXPECT_EQ(io::parse_subset("0,2", SymbolSet(3)), DSet({0, 2}));
  EXPECT_EQ(kind_of([] { io::parse_subset("1,1", SymbolSet(3)); }), ErrorKind::WrongCardinality);
}

TEST(ParseEdge, Forms) {
  EXPECT_EQ(io::parse_edge("3,1"), Edge(1, 3));
  EXPECT_EQ(kind_of([] { io::parse_edge("3"); }), ErrorKind::BadParameter);
  EXPECT_EQ(kind_of([] { io::parse_edge("a,b"); }), ErrorKind::BadParameter);
}

TEST(Trace, RoundTripAndTamperDetection) {
  const std::vector<Property> targets(kMainProperties.begin(), kMainProperties.end());
  const StrategyTrace trace = strategy_search(gen_spindle_family(2), targets);
  const std::string text = io::serialize(trace);
  const StrategyTrace back = io::parse_trace(text);
  EXPECT_EQ(io::serialize(back), text);
  EXPECT_EQ(back.final_graph, trace.final_graph);

  io::Json doc = io::parse_json(text);
  doc["steps"][0]["diameter"] = 99;
  EXPECT_EQ(kind_of([&] { io::trace_from_json(doc); }), ErrorKind::ValidationError);
}

TEST(Move, JsonForm) {
  const Move m{MoveKind::AddEdge, Edge(4, 2)};
  EXPECT_EQ(io::move_to_json(m).dump(), R"({"kind":"addEdge","endpoints":[2,4]})");
  EXPECT_EQ(io::move_from_json(io::move_to_json(m)), m);
  EXPECT_EQ(kind_of([] { io::move_from_json(io::parse_json(R"({"kind":"x","endpoints":[0,1]})")); }),
            ErrorKind::SyntaxError);
}

TEST(ParseSubset, LabelsContainingCommas) {
  const Spg g = gen_spindle_family(1);
  EXPECT_EQ(io::parse_subset("(1,1),(2,2)", g.symbols()), DSet({0, 3}));
  EXPECT_EQ(kind_of([&] { io::parse_subset("(1,3)", g.symbols()); }), ErrorKind::UnknownSymbol);
}
