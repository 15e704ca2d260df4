#include "spg/cli.hpp"

#include <CLI11.hpp>
#include <fstream>
#include <iomanip>
#include <random>
#include <sstream>

#include "spg/error.hpp"
#include "spg/generators.hpp"
#include "spg/io.hpp"
#include "spg/oracle.hpp"
#include "spg/sampling.hpp"
#include "spg/workbench.hpp"

namespace spg::cli {

namespace {

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw SpgError(ErrorKind::BadParameter, "cannot read '" + path + "'");
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return buffer.str();
}

void write_file(const std::string& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw SpgError(ErrorKind::BadParameter, "cannot write '" + path + "'");
  out << text << '\n';
}

Spg load(const std::string& path) { return io::parse_spg(read_file(path)); }

void emit(std::ostream& out, const io::Json& j) { out << j.dump() << '\n'; }

void print_table(std::ostream& out, const PropertyReport& report) {
  for (const CheckResult& r : report.results()) {
    out << std::left << std::setw(26) << property_name(r.property) << (r.holds ? "PASS" : "FAIL");
    if (!r.holds && !r.witness.note.empty()) out << "  " << r.witness.note;
    out << '\n';
  }
}

struct SweepCounts {
  std::uint64_t exhaustive = 0;
  std::uint64_t random = 0;
  std::uint64_t disagreements = 0;
};

SweepCounts sweep(std::uint64_t seed, std::size_t random_count) {
  SweepCounts counts;
  auto compare = [&](const Spg& g) {
    if (check_dimension_reduction(g).holds != oracle::brute_dimension_reduction(g).holds) {
      ++counts.disagreements;
    }
  };
  for (std::size_t n = 2; n <= 4; ++n) {
    counts.exhaustive += oracle::enumerate_spgs(n, 2, 4, compare);
  }
  std::mt19937_64 rng(seed);
  RandomSpgParams params;
  for (std::size_t i = 0; i < random_count; ++i) {
    params.n = std::uniform_int_distribution<std::size_t>(3, 6)(rng);
    params.d = 3;
    compare(random_spg(rng, params));
    ++counts.random;
  }
  return counts;
}

}  // namespace

int cli_main(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Subset partition graph toolkit", "spg"};
  app.require_subcommand(1);

  std::string file;
  std::string out_path;
  std::size_t m = 0, n = 0, d = 0, dim = 0;

  // generate
  auto* generate = app.add_subcommand("generate", "Write a generated instance as JSON");
  generate->require_subcommand(1);
  generate->add_option("--out", out_path, "Output file (default: stdout)");
  generate->fallthrough();  // lets "generate spindle --m 3 --out f" reach --out
  auto* gen_spindle = generate->add_subcommand("spindle", "Quadratic spindle family");
  gen_spindle->add_option("--m", m)->required();
  auto* gen_cyclic = generate->add_subcommand("cyclic", "Cyclic-polytope construction");
  gen_cyclic->add_option("--n", n)->required();
  gen_cyclic->add_option("--d", d)->required();
  auto* gen_cube = generate->add_subcommand("cube", "Cube SPG");
  gen_cube->add_option("--dim", dim)->required();
  auto* gen_hirsch = generate->add_subcommand("hirsch-path", "Hirsch path layer family");
  gen_hirsch->add_option("--n", n)->required();
  gen_hirsch->add_option("--d", d)->required();
  auto* gen_figure1 = generate->add_subcommand("figure1", "Six-block example");

  // check
  std::string properties = "all";
  std::string format = "json";
  bool brute = false;
  auto* check = app.add_subcommand("check", "Run property checkers");
  check->add_option("file", file)->required()->check(CLI::ExistingFile);
  check->add_option("--properties", properties, "Comma list, 'main' or 'all'");
  check->add_flag("--brute", brute, "Also run the brute-force dimension reduction oracle");
  check->add_option("--format", format)->check(CLI::IsMember({"json", "table"}));

  auto* diam = app.add_subcommand("diameter", "Block-graph diameter");
  diam->add_option("file", file)->required()->check(CLI::ExistingFile);

  std::string from, to, face, edge, root;
  auto* dist = app.add_subcommand("distance", "Block distance between two d-sets");
  dist->add_option("file", file)->required()->check(CLI::ExistingFile);
  dist->add_option("--from", from)->required();
  dist->add_option("--to", to)->required();

  auto* restrict_cmd = app.add_subcommand("restrict", "Restriction to a face");
  restrict_cmd->add_option("file", file)->required()->check(CLI::ExistingFile);
  restrict_cmd->add_option("--face", face)->required();

  auto* contract = app.add_subcommand("contract", "Contract an edge");
  contract->add_option("file", file)->required()->check(CLI::ExistingFile);
  contract->add_option("--edge", edge)->required();

  auto* add_edge = app.add_subcommand("add-edge", "Add an edge");
  add_edge->add_option("file", file)->required()->check(CLI::ExistingFile);
  add_edge->add_option("--edge", edge)->required();

  auto* layer = app.add_subcommand("layer", "Layer by distance from a d-set");
  layer->add_option("file", file)->required()->check(CLI::ExistingFile);
  layer->add_option("--root", root)->required();

  std::string targets = "main";
  std::string replay_path;
  std::size_t budget = 200;
  bool use_beam = false;
  auto* search = app.add_subcommand("search", "Greedy repair of main properties");
  search->add_option("file", file)->check(CLI::ExistingFile);
  search->add_option("--targets", targets);
  search->add_option("--budget", budget);
  search->add_option("--out", out_path, "Trace output file");
  search->add_flag("--beam", use_beam, "Beam search of width 8");
  search->add_option("--replay", replay_path, "Verify a trace and print its final graph")
      ->check(CLI::ExistingFile);

  // oracle
  auto* oracle_cmd = app.add_subcommand("oracle", "Brute-force references");
  oracle_cmd->require_subcommand(1);
  auto* or_dr = oracle_cmd->add_subcommand("dimension-reduction", "Check every face");
  or_dr->add_option("file", file)->required()->check(CLI::ExistingFile);
  auto* or_diam = oracle_cmd->add_subcommand("diameter", "All-pairs shortest paths");
  or_diam->add_option("file", file)->required()->check(CLI::ExistingFile);
  std::string variant = "one-subset";
  double time_limit = 60.0;
  auto* or_clf = oracle_cmd->add_subcommand("max-clf", "Longest layer family");
  or_clf->add_option("--n", n)->required();
  or_clf->add_option("--d", d)->required();
  or_clf->add_option("--variant", variant)->check(CLI::IsMember({"one-subset", "general"}));
  or_clf->add_option("--time-limit", time_limit, "Seconds");
  std::uint64_t seed = 1;
  std::size_t random_count = 200;
  auto* or_sweep = oracle_cmd->add_subcommand("sweep", "Fast vs brute dimension reduction");
  or_sweep->add_option("--seed", seed);
  or_sweep->add_option("--random", random_count);

  std::string bind = "127.0.0.1";
  int port = 8080;
  auto* serve_cmd = app.add_subcommand("serve", "Run the workbench HTTP service");
  serve_cmd->add_option("--port", port);
  serve_cmd->add_option("--bind", bind);

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return 0;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return 0;
  } catch (const CLI::ParseError& e) {
    err << "usage error: " << e.what() << '\n';
    return 2;
  }

  try {
    if (generate->parsed()) {
      std::string text;
      if (gen_spindle->parsed()) text = io::serialize(gen_spindle_family(m));
      if (gen_cyclic->parsed()) text = io::serialize(gen_cyclic_construction(n, d));
      if (gen_cube->parsed()) text = io::serialize(gen_cube_spg(dim));
      if (gen_hirsch->parsed()) text = io::serialize(gen_hirsch_path_clf(n, d));
      if (gen_figure1->parsed()) text = io::serialize(spg::gen_figure1());
      if (out_path.empty()) {
        out << text << '\n';
      } else {
        write_file(out_path, text);
      }
      return 0;
    }
    if (check->parsed()) {
      const Spg g = load(file);
      const auto selection = parse_property_list(properties);
      const PropertyReport report = property_report(g, selection);
      bool ok = std::all_of(report.results().begin(), report.results().end(),
                            [](const CheckResult& r) { return r.holds; });
      std::optional<CheckResult> brute_result;
      if (brute) {
        brute_result = oracle::brute_dimension_reduction(g);
        ok = ok && brute_result->holds;
      }
      if (format == "table") {
        print_table(out, report);
        if (brute_result) {
          out << std::left << std::setw(26) << "brute dimension-reduction"
              << (brute_result->holds ? "PASS" : "FAIL") << '\n';
        }
      } else {
        io::Json j;
        j["report"] = io::report_to_json(report);
        if (brute_result) j["brute"] = io::check_to_json(*brute_result);
        emit(out, j);
      }
      return ok ? 0 : 1;
    }
    if (diam->parsed()) {
      emit(out, io::diameter_to_json(diameter(load(file))));
      return 0;
    }
    if (dist->parsed()) {
      const Spg g = load(file);
      io::Json j;
      j["distance"] = distance(g, io::parse_subset(from, g.symbols()),
                               io::parse_subset(to, g.symbols()));
      emit(out, j);
      return 0;
    }
    if (restrict_cmd->parsed()) {
      const Spg g = load(file);
      emit(out, io::view_to_json(restriction(g, io::parse_subset(face, g.symbols()))));
      return 0;
    }
    if (contract->parsed()) {
      out << io::serialize(contraction(load(file), io::parse_edge(edge))) << '\n';
      return 0;
    }
    if (add_edge->parsed()) {
      const Edge e = io::parse_edge(edge);
      out << io::serialize(edge_addition(load(file), e.u, e.v)) << '\n';
      return 0;
    }
    if (layer->parsed()) {
      const Spg g = load(file);
      const DSet r = io::parse_subset(root, g.symbols());
      emit(out, io::layering_to_json(spg_layering(g, r), r));
      return 0;
    }
    if (search->parsed()) {
      if (!replay_path.empty()) {
        const StrategyTrace trace = io::parse_trace(read_file(replay_path));
        out << io::serialize(trace.final_graph) << '\n';
        return 0;
      }
      if (file.empty()) {
        err << "usage error: search needs FILE or --replay\n";
        return 2;
      }
      const Spg g = load(file);
      StrategyOptions options{budget, use_beam ? std::size_t{8} : std::size_t{0}};
      auto summarize = [&](const StrategyTrace& trace, bool completed) {
        if (!out_path.empty()) write_file(out_path, io::serialize(trace));
        io::Json j;
        j["completed"] = completed;
        j["moves"] = trace.steps.size();
        j["initial_diameter"] = trace.initial_diameter;
        j["final_diameter"] = diameter(trace.final_graph).value;
        j["warnings"] = trace.warnings;
        emit(out, j);
      };
      try {
        summarize(strategy_search(g, parse_property_list(targets), options), true);
        return 0;
      } catch (const StrategyExhausted& e) {
        summarize(e.trace(), false);
        err << e.name() << ": " << e.detail() << '\n';
        return 1;
      }
    }
    if (oracle_cmd->parsed()) {
      if (or_dr->parsed()) {
        const CheckResult r = oracle::brute_dimension_reduction(load(file));
        emit(out, io::check_to_json(r));
        return r.holds ? 0 : 1;
      }
      if (or_diam->parsed()) {
        io::Json j;
        j["value"] = oracle::brute_diameter(load(file));
        emit(out, j);
        return 0;
      }
      if (or_clf->parsed()) {
        auto budget_limits = oracle::OracleBudget::clf_search();
        budget_limits.time_limit = std::chrono::milliseconds(static_cast<long long>(time_limit * 1000));
        const auto v = variant == "general" ? oracle::ClfVariant::General
                                            : oracle::ClfVariant::OneSubset;
        emit(out, io::clf_search_to_json(n, d, v, oracle::brute_max_clf_diameter(n, d, v, budget_limits)));
        return 0;
      }
      if (or_sweep->parsed()) {
        const SweepCounts counts = sweep(seed, random_count);
        io::Json j;
        j["exhaustive"] = counts.exhaustive;
        j["random"] = counts.random;
        j["disagreements"] = counts.disagreements;
        emit(out, j);
        return counts.disagreements == 0 ? 0 : 1;
      }
    }
    if (serve_cmd->parsed()) {
      workbench::Workbench wb;
      err << "serving on http://" << bind << ":" << port << '\n';
      if (!workbench::serve(wb, bind, port)) {
        throw SpgError(ErrorKind::BadParameter, "cannot listen on " + bind + ":" + std::to_string(port));
      }
      return 0;
    }
  } catch (const SpgError& e) {
    err << e.name() << ": " << e.detail() << '\n';
    return 1;
  }
  return 2;
}

}  // namespace spg::cli
