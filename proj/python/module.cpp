// Python bindings for the main operations: graphs and their graph6 codec,
// the condition catalog, the exact cycle oracles, the named families, the
// enumerator, the constructive cycle grower, and infinite-graph probes.

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "hamlocal/conditions.hpp"
#include "hamlocal/constructive.hpp"
#include "hamlocal/enumerate.hpp"
#include "hamlocal/families.hpp"
#include "hamlocal/graph.hpp"
#include "hamlocal/harness.hpp"
#include "hamlocal/infinite.hpp"
#include "hamlocal/metrics.hpp"
#include "hamlocal/oracles.hpp"

namespace py = pybind11;
using namespace hamlocal;

namespace {

std::string answer_name(Answer a) {
  switch (a) {
    case Answer::Yes: return "yes";
    case Answer::No: return "no";
    default: return "resource-limit";
  }
}

py::dict report_dict(const ConditionReport& r) {
  py::dict d;
  d["condition"] = r.condition;
  d["verdict"] = r.verdict == Verdict::Pass
                     ? "pass"
                     : (r.verdict == Verdict::Fail ? "fail" : "not-applicable");
  if (r.witness) {
    py::dict w;
    w["vertices"] = r.witness->vertices;
    w["center"] = r.witness->center;
    w["lhs"] = r.witness->lhs;
    w["rhs"] = r.witness->rhs;
    w["detail"] = r.witness->detail;
    d["witness"] = w;
  }
  if (r.verdict == Verdict::NotApplicable) d["reason"] = r.reason;
  return d;
}

}  // namespace

PYBIND11_MODULE(hamlocal, m) {
  m.doc() =
      "Ball-local sufficient conditions for Hamiltonicity and dominating "
      "cycles: condition checkers, exact cycle oracles, tight graph "
      "families, and finite-window probes of infinite graphs.";

  py::class_<Graph>(m, "Graph")
      .def(py::init([](int n) { return Graph(n); }), py::arg("n"))
      .def_static(
          "from_edges",
          [](int n, const std::vector<std::pair<int, int>>& edges) {
            return Graph::from_edge_list(n, edges);
          },
          py::arg("n"), py::arg("edges"))
      .def_static("from_graph6",
                  [](const std::string& text) { return parse_graph6(text); })
      .def_property_readonly("n", &Graph::num_vertices)
      .def_property_readonly("m", &Graph::num_edges)
      .def("degree", &Graph::degree, py::arg("v"))
      .def("adjacent", &Graph::adjacent, py::arg("u"), py::arg("v"))
      .def("neighbors", &Graph::neighbor_list, py::arg("v"))
      .def("edges", &Graph::edge_list)
      .def("graph6", [](const Graph& g) { return encode_graph6(g); })
      .def("__eq__", [](const Graph& a, const Graph& b) { return a == b; })
      .def("__len__", &Graph::num_vertices)
      .def("__repr__", [](const Graph& g) {
        std::ostringstream out;
        out << "Graph(n=" << g.num_vertices() << ", m=" << g.num_edges()
            << ", graph6=" << encode_graph6(g) << ")";
        return out.str();
      });

  m.def("parse_graph6", &parse_graph6, py::arg("text"));
  m.def("encode_graph6", &encode_graph6, py::arg("graph"));

  // Conditions.
  m.def("catalog_ids", [] { return catalog_ids(); });
  m.def("extra_predicate_ids", [] { return extra_predicate_ids(); });
  m.def(
      "check_condition",
      [](const Graph& g, const std::string& id) {
        return report_dict(check_condition(g, id));
      },
      py::arg("graph"), py::arg("condition"),
      "Evaluate one condition; returns a dict with verdict and, on fail, the "
      "violating witness.");
  m.def(
      "guaranteed_conclusion",
      [](const std::string& id) -> std::optional<std::string> {
        auto c = guaranteed_conclusion(id);
        if (!c) return std::nullopt;
        return conclusion_tag(*c);
      },
      py::arg("condition"));

  // Exact oracles.
  m.def(
      "is_hamiltonian",
      [](const Graph& g) {
        CycleSearchResult r = is_hamiltonian(g);
        py::dict d;
        d["answer"] = answer_name(r.answer);
        d["cycle"] = r.certificate;
        return d;
      },
      py::arg("graph"));
  m.def(
      "longest_cycle",
      [](const Graph& g) {
        LongestCycleResult r = longest_cycle(g);
        py::dict d;
        d["answer"] = answer_name(r.answer);
        d["length"] = r.length;
        d["cycle"] = r.cycle;
        return d;
      },
      py::arg("graph"));
  m.def(
      "all_longest_cycles_dominating",
      [](const Graph& g) {
        DominatingCheckResult r = all_longest_cycles_dominating(g);
        py::dict d;
        d["answer"] = answer_name(r.answer);
        d["longest_length"] = r.longest_length;
        if (r.counterexample) d["counterexample"] = *r.counterexample;
        return d;
      },
      py::arg("graph"));

  // Metrics used by the conditions.
  m.def("distances_from", &distances_from, py::arg("graph"), py::arg("u"));
  m.def(
      "ball_members",
      [](const Graph& g, int u, int r) { return ball(g, u, r).to_parent; },
      py::arg("graph"), py::arg("u"), py::arg("r"),
      "Sorted vertices of the ball of radius r around u.");
  m.def("vertex_connectivity", &vertex_connectivity, py::arg("graph"));
  m.def("independence_number", &independence_number, py::arg("graph"));
  m.def("diameter", &diameter, py::arg("graph"));

  // Families and enumeration.
  m.def(
      "named_family",
      [](const std::string& name, const std::vector<long long>& params) {
        return named_family(name, params);
      },
      py::arg("name"), py::arg("params"));
  m.def("family_names", [] { return family_names(); });
  m.def(
      "connected_graphs",
      [](int n) {
        if (n < 1 || n > 10)
          throw std::invalid_argument("connected_graphs: need 1 <= n <= 10");
        std::vector<Graph> out;
        enumerate_connected(n, [&](const Graph& g) {
          out.push_back(g);
          return true;
        });
        return out;
      },
      py::arg("n"),
      "All connected graphs on exactly n vertices, one per isomorphism "
      "class.");

  // Constructive growth.
  m.def(
      "grow_hamilton_cycle",
      [](const Graph& g, const std::vector<int>& start) {
        OrientedCycle c = grow_hamilton_cycle(g, OrientedCycle(g, start));
        return c.vertices();
      },
      py::arg("graph"), py::arg("start_cycle"),
      "Grow a Hamilton cycle from a seed cycle by radius-12 local steps.");

  // Infinite graphs through finite windows.
  m.def(
      "curve_probe",
      [](const std::string& oracle_name, const std::vector<int64_t>& set,
         int cap) {
        ProbeResult r = curve_probe(oracle_from_name(oracle_name), set, cap);
        py::dict d;
        d["set"] = r.set;
        d["anchor"] = r.anchor;
        d["spread"] = r.spread;
        d["window_radius"] = r.window_radius;
        d["window_size"] = r.window_size;
        d["answer"] = answer_name(r.answer);
        d["cycle"] = r.cycle;
        return d;
      },
      py::arg("oracle"), py::arg("set"), py::arg("cap") = 64,
      "Find a cycle through the given vertex set of an infinite graph "
      "('path' or 'layered:<p>') using a finite window.");
}
