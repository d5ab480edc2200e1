// Copyright (c) apasp contributors.
// SPDX-License-Identifier: Apache-2.0

// Low-level bindings. Weights cross the boundary as raw scaled integers;
// the Python package converts them.

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <optional>
#include <sstream>
#include <string>
#include <tuple>
#include <vector>

#include "apasp/harness.hpp"
#include "apasp/io.hpp"
#include "apasp/oracle.hpp"
#include "apasp/queries.hpp"
#include "apasp/scheduler.hpp"

namespace py = pybind11;

namespace apasp {
namespace {

using RawChange = std::pair<Vid, std::optional<std::int64_t>>;

py::int_ to_py(const BigInt& v) {
  return py::int_(py::reinterpret_steal<py::object>(
      PyLong_FromString(v.str().c_str(), nullptr, 10)));
}

py::object to_fraction(const Rational& r) {
  static py::object fraction = py::module_::import("fractions").attr("Fraction");
  return fraction(to_py(boost::multiprecision::numerator(r)),
                  to_py(boost::multiprecision::denominator(r)));
}

std::vector<EdgeChange> changes(const std::vector<RawChange>& raw) {
  std::vector<EdgeChange> out;
  out.reserve(raw.size());
  for (const auto& [u, w] : raw) {
    out.push_back({u, w ? std::optional<Weight>(Weight(*w)) : std::nullopt});
  }
  return out;
}

UpdateKind parse_kind(const std::string& k) {
  if (k == "insert") return UpdateKind::kInsert;
  if (k == "delete") return UpdateKind::kDelete;
  if (k == "reweight") return UpdateKind::kReweight;
  throw py::value_error("update kind must be insert, delete or reweight");
}

std::optional<std::int64_t> raw_distance(const Distance& d) {
  if (!d.finite()) return std::nullopt;
  return d.value().raw();
}

}  // namespace
}  // namespace apasp

PYBIND11_MODULE(_core, m) {
  using namespace apasp;
  m.doc() = "Fully dynamic all-pairs shortest paths with path counts";

  // translators run newest first, so the base class goes first
  py::register_exception<Error>(m, "Error", PyExc_RuntimeError);
  py::register_exception<GraphError>(m, "GraphError", PyExc_ValueError);
  py::register_exception<ParseError>(m, "ParseError", PyExc_ValueError);

  py::class_<DynGraph>(m, "Graph")
      .def(py::init<std::size_t, bool>(), py::arg("n"), py::arg("alive") = true)
      .def_property_readonly("capacity", &DynGraph::capacity)
      .def_property_readonly("live_count", &DynGraph::live_count)
      .def_property_readonly("edge_count", &DynGraph::edge_count)
      .def("alive", &DynGraph::alive)
      .def("set_alive", &DynGraph::set_alive)
      .def("add_edge",
           [](DynGraph& g, Vid u, Vid v, std::int64_t raw) { g.add_edge(u, v, Weight(raw)); })
      .def("remove_edge", &DynGraph::remove_edge)
      .def("weight",
           [](const DynGraph& g, Vid u, Vid v) -> std::optional<std::int64_t> {
             if (!g.alive(u) || !g.alive(v)) return std::nullopt;
             auto w = g.weight(u, v);
             return w ? std::optional<std::int64_t>(w->raw()) : std::nullopt;
           })
      .def("edges",
           [](const DynGraph& g) {
             std::vector<std::tuple<Vid, Vid, std::int64_t>> out;
             for (const auto& e : g.edges()) out.emplace_back(e.u, e.v, e.w.raw());
             return out;
           })
      .def("live_vertices", &DynGraph::live_vertices)
      .def("__eq__", [](const DynGraph& a, const DynGraph& b) { return a == b; });

  m.def("parse_graph", [](const std::string& text, std::int64_t scale) {
    std::istringstream in(text);
    return parse_graph(in, WeightScale(scale));
  }, py::arg("text"), py::arg("scale") = 1000);
  m.def("format_graph", [](const DynGraph& g, std::int64_t scale) {
    std::ostringstream out;
    write_graph(out, g, WeightScale(scale));
    return out.str();
  }, py::arg("graph"), py::arg("scale") = 1000);
  m.def("load_graph", [](const std::string& path, std::int64_t scale) {
    return load_graph(path, WeightScale(scale));
  }, py::arg("path"), py::arg("scale") = 1000);
  m.def("parse_weight", [](const std::string& text, std::int64_t scale) {
    return WeightScale(scale).parse_raw(text);
  }, py::arg("text"), py::arg("scale") = 1000);

  py::class_<DynamicApasp>(m, "DynamicApasp")
      .def(py::init([](const DynGraph& g) { return new DynamicApasp(g); }), py::arg("graph"))
      .def("apply",
           [](DynamicApasp& d, Vid v, const std::string& kind,
              const std::vector<RawChange>& out, const std::vector<RawChange>& in) {
             VertexUpdate up{v, parse_kind(kind), changes(out), changes(in)};
             return d.apply(up).size();
           },
           py::arg("v"), py::arg("kind"), py::arg("out") = std::vector<RawChange>{},
           py::arg("in_") = std::vector<RawChange>{},
           "Applies one vertex update; returns the number of vertex updates run, "
           "dummies included.")
      .def_property_readonly("graph", &DynamicApasp::graph, py::return_value_policy::copy)
      .def_property_readonly("step", &DynamicApasp::step)
      .def_property_readonly("epoch", &DynamicApasp::epoch)
      .def_property_readonly("real_updates", &DynamicApasp::real_updates)
      .def_property_readonly("total_dummies", &DynamicApasp::total_dummies)
      .def_property_readonly("triple_count",
                             [](const DynamicApasp& d) {
                               return d.tuples().p_size() + d.tuples().s_size();
                             })
      .def("distance",
           [](const DynamicApasp& d, Vid x, Vid y) {
             return raw_distance(Queries(d.graph(), d.tuples()).distance(x, y));
           })
      .def("sigma",
           [](const DynamicApasp& d, Vid x, Vid y) {
             return to_py(Queries(d.graph(), d.tuples()).sigma(x, y));
           })
      .def("paths",
           [](const DynamicApasp& d, Vid x, Vid y, std::size_t limit) {
             return Queries(d.graph(), d.tuples()).enumerate_paths(x, y, limit);
           },
           py::arg("x"), py::arg("y"), py::arg("limit") = 1000)
      .def("in_dag",
           [](const DynamicApasp& d, Vid x) {
             return Queries(d.graph(), d.tuples()).build_in_dag(x).edges;
           })
      .def("betweenness", [](const DynamicApasp& d) {
        py::list out;
        for (const auto& r : Queries(d.graph(), d.tuples()).bc_all()) out.append(to_fraction(r));
        return out;
      });

  m.def("static_distances", [](const DynGraph& g) {
    const auto r = oracle::static_apasp(g);
    std::vector<std::vector<std::optional<std::int64_t>>> d(r.n);
    for (Vid x = 0; x < r.n; ++x) {
      for (Vid y = 0; y < r.n; ++y) d[x].push_back(raw_distance(r.d(x, y)));
    }
    return d;
  }, "Dijkstra distances between all pairs; None when unreachable.");
  m.def("static_betweenness", [](const DynGraph& g) {
    py::list out;
    for (const auto& r : oracle::static_bc(g, oracle::static_apasp(g))) out.append(to_fraction(r));
    return out;
  });

  m.def("verify",
        [](const std::string& graph, const std::string& trace, std::uint64_t every,
           std::size_t census_max_n, bool bc, std::int64_t scale) {
          const WeightScale ws(scale);
          VerifyOptions opt;
          opt.every = every;
          opt.census_max_n = census_max_n;
          opt.bc = bc;
          const auto r = verify_workload(load_graph(graph, ws), load_trace(trace, ws), ws, opt);
          py::dict out;
          out["ok"] = r.ok;
          out["steps"] = r.steps;
          out["updates"] = r.updates;
          out["checkpoints"] = r.checkpoints;
          out["failed_check"] = r.failed_check;
          out["failures"] = r.failures;
          out["max_bulk_ratio"] = r.max_bulk_ratio;
          out["max_cleanup_ratio"] = r.max_cleanup_ratio;
          return out;
        },
        py::arg("graph"), py::arg("trace"), py::arg("every") = 1, py::arg("census_max_n") = 12,
        py::arg("bc") = true, py::arg("scale") = 1000);
}
