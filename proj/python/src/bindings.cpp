// Python bindings. Graphs cross the boundary as canonical JSON documents.

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <chrono>
#include <string>
#include <vector>

#include "spg/generators.hpp"
#include "spg/io.hpp"
#include "spg/layers.hpp"
#include "spg/oracle.hpp"
#include "spg/strategy.hpp"

namespace py = pybind11;
using namespace spg;

namespace {

std::string dump(const io::Json& j) { return j.dump(); }

std::vector<Property> properties_of(const std::vector<std::string>& names) {
  if (names.empty()) return {kAllProperties.begin(), kAllProperties.end()};
  std::vector<Property> out;
  for (const auto& name : names) out.push_back(parse_property(name));
  return out;
}

std::vector<Property> targets_of(const std::vector<std::string>& names) {
  if (names.empty()) return {kMainProperties.begin(), kMainProperties.end()};
  return properties_of(names);
}

DSet dset_of(const Spg& g, const std::string& text) { return DSet(io::parse_subset(text, g.symbols())); }

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Subset partition graphs: generators, property checks, moves and search.";

  // created once and kept for the interpreter's lifetime
  static PyObject* spg_error_type = PyErr_NewException("spgkit._core.SpgError", PyExc_RuntimeError, nullptr);
  m.attr("SpgError") = py::handle(spg_error_type);
  py::register_exception_translator([](std::exception_ptr p) {
    try {
      if (p) std::rethrow_exception(p);
    } catch (const SpgError& e) {
      py::object err = py::handle(spg_error_type)(std::string(e.name()) + ": " + e.detail());
      err.attr("name") = std::string(e.name());
      err.attr("detail") = e.detail();
      err.attr("trace") = py::none();
      if (const auto* exhausted = dynamic_cast<const StrategyExhausted*>(&e)) {
        err.attr("trace") = io::serialize(exhausted->trace());
      }
      PyErr_SetObject(spg_error_type, err.ptr());
    }
  });

  m.def("spindle", [](std::size_t size) { return io::serialize(gen_spindle_family(size)); },
        py::arg("m"));
  m.def("cyclic", [](std::size_t n, std::size_t d) { return io::serialize(gen_cyclic_construction(n, d)); },
        py::arg("n"), py::arg("d"));
  m.def("cube", [](std::size_t dim) { return io::serialize(gen_cube_spg(dim)); }, py::arg("dim"));
  m.def("hirsch_path", [](std::size_t n, std::size_t d) { return io::serialize(gen_hirsch_path_clf(n, d)); },
        py::arg("n"), py::arg("d"));
  m.def("figure1", [] { return io::serialize(gen_figure1()); });

  m.def("normalize", [](const std::string& doc) { return io::serialize(io::parse_spg(doc)); },
        py::arg("doc"), "Validates a document and returns its canonical form.");
  m.def("check",
        [](const std::string& doc, const std::vector<std::string>& properties) {
          return dump(io::report_to_json(property_report(io::parse_spg(doc), properties_of(properties))));
        },
        py::arg("doc"), py::arg("properties") = std::vector<std::string>{});
  m.def("brute_dimension_reduction",
        [](const std::string& doc) {
          return dump(io::check_to_json(oracle::brute_dimension_reduction(io::parse_spg(doc))));
        },
        py::arg("doc"));
  m.def("diameter", [](const std::string& doc) { return dump(io::diameter_to_json(diameter(io::parse_spg(doc)))); },
        py::arg("doc"));
  m.def("distance",
        [](const std::string& doc, const std::string& a, const std::string& b) {
          const Spg g = io::parse_spg(doc);
          return distance(g, dset_of(g, a), dset_of(g, b));
        },
        py::arg("doc"), py::arg("a"), py::arg("b"));
  m.def("restrict",
        [](const std::string& doc, const std::string& face) {
          const Spg g = io::parse_spg(doc);
          return dump(io::view_to_json(restriction(g, Face(io::parse_subset(face, g.symbols())))));
        },
        py::arg("doc"), py::arg("face"));
  m.def("layering",
        [](const std::string& doc, const std::string& root) {
          const Spg g = io::parse_spg(doc);
          const DSet a = dset_of(g, root);
          return dump(io::layering_to_json(spg_layering(g, a), a));
        },
        py::arg("doc"), py::arg("root"));
  m.def("contract",
        [](const std::string& doc, std::size_t i, std::size_t j) {
          return io::serialize(contraction(io::parse_spg(doc), Edge(i, j)));
        },
        py::arg("doc"), py::arg("i"), py::arg("j"));
  m.def("add_edge",
        [](const std::string& doc, std::size_t i, std::size_t j) {
          return io::serialize(edge_addition(io::parse_spg(doc), i, j));
        },
        py::arg("doc"), py::arg("i"), py::arg("j"));

  m.def("search",
        [](const std::string& doc, const std::vector<std::string>& targets, std::size_t budget,
           std::size_t beam) {
          return io::serialize(strategy_search(io::parse_spg(doc), targets_of(targets), {budget, beam}));
        },
        py::arg("doc"), py::arg("targets") = std::vector<std::string>{}, py::arg("budget") = 200,
        py::arg("beam") = 0);
  m.def("verify_trace",
        [](const std::string& trace) { return verify_trace(io::parse_trace(trace)); }, py::arg("trace"),
        "Replays a trace; False (or ValidationError) when it does not reproduce.");

  m.def("max_clf",
        [](std::size_t n, std::size_t d, const std::string& variant, double time_limit) {
          if (variant != "general" && variant != "one-subset") {
            throw SpgError(ErrorKind::BadParameter, "variant must be one-subset or general");
          }
          const auto v = variant == "general" ? oracle::ClfVariant::General : oracle::ClfVariant::OneSubset;
          auto budget = oracle::OracleBudget::clf_search();
          budget.time_limit = std::chrono::milliseconds(static_cast<long long>(time_limit * 1000));
          oracle::ClfSearchResult result;
          {
            py::gil_scoped_release release;
            result = oracle::brute_max_clf_diameter(n, d, v, budget);
          }
          return dump(io::clf_search_to_json(n, d, v, result));
        },
        py::arg("n"), py::arg("d"), py::arg("variant") = "one-subset", py::arg("time_limit") = 60.0);
}
