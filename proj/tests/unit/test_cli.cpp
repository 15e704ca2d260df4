#include <gtest/gtest.h>

#include <filesystem>
#include <fstream>
#include <sstream>

#include "spg/cli.hpp"
#include "spg/generators.hpp"
#include "spg/io.hpp"

namespace fs = std::filesystem;

namespace {

struct CliRun {
  int code;
  std::string out;
  std::string err;
};

CliRun run(const std::vector<std::string>& args) {
  std::ostringstream out, err;
  const int code = spg::cli::cli_main(args, out, err);
  return {code, out.str(), err.str()};
}

class Cli : public ::testing::Test {
 protected:
  void SetUp() override {
    dir_ = fs::temp_directory_path() /
           ("spg_cli_" + std::string(::testing::UnitTest::GetInstance()->current_test_info()->name()));
    fs::create_directories(dir_);
  }
  void TearDown() override { fs::remove_all(dir_); }

  std::string write(const std::string& name, const std::string& text) {
    const std::string path = (dir_ / name).string();
    std::ofstream(path) << text;
    return path;
  }
  std::string generate(const std::string& name, const std::vector<std::string>& args) {
    std::vector<std::string> full{"generate"};
    full.insert(full.end(), args.begin(), args.end());
    const CliRun r = run(full);
    EXPECT_EQ(r.code, 0) << r.err;
    return write(name, r.out);
  }

  fs::path dir_;
};

}  // namespace

TEST_F(Cli, SpindleDiameter) {
  const std::string file = generate("s3.json", {"spindle", "--m", "3"});
  const CliRun r = run({"diameter", file});
  EXPECT_EQ(r.code, 0);
  EXPECT_EQ(spg::io::parse_json(r.out)["value"], 18);
}

TEST_F(Cli, CyclicChecksFollowTheConstruction) {
  // strong adjacency is unattainable at (12,8); endpoint-count and one-subset hold
  const std::string file = generate("c.json", {"cyclic", "--n", "12", "--d", "8"});
  EXPECT_EQ(run({"check", file, "--properties", "endpoint-count,one-subset"}).code, 0);
  const std::string wide = generate("c14.json", {"cyclic", "--n", "14", "--d", "8"});
  EXPECT_EQ(run({"check", wide, "--properties", "strong-adjacency,endpoint-count,one-subset"}).code,
            0);
}

TEST_F(Cli, FigureOneOneSubsetFails) {
  const std::string file = generate("f.json", {"figure1"});
  const CliRun r = run({"check", file, "--properties", "one-subset"});
  EXPECT_EQ(r.code, 1);
  EXPECT_FALSE(spg::io::parse_json(r.out)["report"][0]["holds"].get<bool>());
}

TEST_F(Cli, CheckTableAndBrute) {
  const std::string file = generate("f.json", {"figure1"});
  const CliRun r = run({"check", file, "--properties", "main", "--brute", "--format", "table"});
  EXPECT_EQ(r.code, 0);
  EXPECT_NE(r.out.find("dimension-reduction"), std::string::npos);
  EXPECT_NE(r.out.find("brute dimension-reduction"), std::string::npos);
}

TEST_F(Cli, OutputIsDeterministic) {
  const std::string file = generate("f.json", {"figure1"});
  EXPECT_EQ(run({"check", file}).out, run({"check", file}).out);
  EXPECT_EQ(run({"generate", "cyclic", "--n", "14", "--d", "8"}).out,
            run({"generate", "cyclic", "--n", "14", "--d", "8"}).out);
}

TEST_F(Cli, GraphOperations) {
  const std::string file = generate("f.json", {"figure1"});
  EXPECT_EQ(spg::io::parse_json(run({"distance", file, "--from", "2,4,6", "--to", "1,5,6"}).out)["distance"],
            2);
  const CliRun view = run({"restrict", file, "--face", "4,5"});
  EXPECT_EQ(spg::io::parse_json(view.out)["surviving_blocks"], spg::io::Json::parse("[2]"));
  const CliRun contracted = run({"contract", file, "--edge", "0,1"});
  EXPECT_EQ(contracted.code, 0);
  EXPECT_EQ(spg::io::parse_spg(contracted.out).block_count(), 5u);
  const CliRun added = run({"add-edge", file, "--edge", "1,3"});
  EXPECT_EQ(spg::io::parse_spg(added.out).edges().size(), 11u);
  const CliRun layered = run({"layer", file, "--root", "1,2,3"});
  EXPECT_TRUE(spg::io::parse_json(layered.out)["clf"].get<bool>());
}

TEST_F(Cli, DomainErrorsExitOneWithName) {
  const std::string file = generate("f.json", {"figure1"});
  const CliRun r = run({"contract", file, "--edge", "0,2"});
  EXPECT_EQ(r.code, 1);
  EXPECT_EQ(r.err.rfind("NoSuchEdge", 0), 0u);
  const std::string bad = write("bad.json", R"({"format":"spg/1","n":3,"d":2,"vertices":[[[1,0]]]})");
  const CliRun parse = run({"diameter", bad});
  EXPECT_EQ(parse.code, 1);
  EXPECT_EQ(parse.err.rfind("SyntaxError", 0), 0u);
}

TEST_F(Cli, UsageErrorsExitTwo) {
  EXPECT_EQ(run({}).code, 2);
  EXPECT_EQ(run({"frobnicate"}).code, 2);
  EXPECT_EQ(run({"generate", "spindle"}).code, 2);
  EXPECT_EQ(run({"diameter", (dir_ / "missing.json").string()}).code, 2);
  EXPECT_EQ(run({"check", "--format", "xml"}).code, 2);
}

TEST_F(Cli, SearchWritesReplayableTrace) {
  const std::string file = generate("s2.json", {"spindle", "--m", "2"});
  const std::string trace = (dir_ / "trace.json").string();
  const CliRun r = run({"search", file, "--targets", "main", "--budget", "200", "--out", trace});
  EXPECT_EQ(r.code, 0) << r.err;
  EXPECT_TRUE(spg::io::parse_json(r.out)["completed"].get<bool>());
  const CliRun replayed = run({"search", "--replay", trace});
  EXPECT_EQ(replayed.code, 0);
  std::ifstream in(trace);
  std::stringstream text;
  text << in.rdbuf();
  EXPECT_EQ(spg::io::serialize(spg::io::parse_trace(text.str()).final_graph) + "\n", replayed.out);

  const CliRun exhausted = run({"search", file, "--budget", "0"});
  EXPECT_EQ(exhausted.code, 1);
  EXPECT_EQ(exhausted.err.rfind("BudgetExhausted", 0), 0u);
}

TEST_F(Cli, OracleCommands) {
  const std::string file = generate("f.json", {"figure1"});
  EXPECT_EQ(run({"oracle", "dimension-reduction", file}).code, 0);
  EXPECT_EQ(spg::io::parse_json(run({"oracle", "diameter", file}).out)["value"], 2);
  const CliRun clf = run({"oracle", "max-clf", "--n", "5", "--d", "2"});
  EXPECT_EQ(spg::io::parse_json(clf.out)["diameter"], 3);
  const CliRun sweep = run({"oracle", "sweep", "--random", "20"});
  EXPECT_EQ(sweep.code, 0);
  EXPECT_EQ(spg::io::parse_json(sweep.out)["disagreements"], 0);
  EXPECT_EQ(run({"oracle", "max-clf", "--n", "8", "--d", "3"}).code, 1);
}

TEST_F(Cli, GenerateOutAfterGeneratorName) {
  const std::string path = (dir_ / "g.json").string();
  const CliRun r = run({"generate", "spindle", "--m", "2", "--out", path});
  ASSERT_EQ(r.code, 0) << r.err;
  std::ifstream in(path);
  const std::string text((std::istreambuf_iterator<char>(in)), std::istreambuf_iterator<char>());
  EXPECT_EQ(text, spg::io::serialize(spg::gen_spindle_family(2)) + "\n");
}
