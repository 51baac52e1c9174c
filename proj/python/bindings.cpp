#include <pybind11/functional.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "switchkit/switchkit.hpp"

namespace py = pybind11;
using namespace switchkit;

namespace {

VertexSet to_set(const Graph& g, const std::vector<int>& vs) {
  for (int v : vs) {
    if (v < 0 || v >= g.order()) throw VertexOutOfRange("vertex " + std::to_string(v) + " out of range");
  }
  return VertexSet::of(g.order(), std::span<const int>(vs));
}

std::optional<std::vector<int>> to_list(const std::optional<VertexSet>& a) {
  if (!a) return std::nullopt;
  return a->to_vector();
}

std::vector<std::vector<int>> to_lists(const std::vector<VertexSet>& sets) {
  std::vector<std::vector<int>> out;
  for (const auto& a : sets) out.push_back(a.to_vector());
  return out;
}

LowerClassId lower_id(const std::string& name) {
  if (auto id = parse_lower_class(name)) return *id;
  throw py::value_error("unknown lower class '" + name + "'");
}

UpperClassId upper_id(const std::string& name) {
  if (auto id = parse_upper_class(name)) return *id;
  throw py::value_error("unknown upper class '" + name + "'");
}

// Python callables need the GIL; the oracle runs them on the calling thread.
GraphPredicate wrap(const py::function& f) {
  return [f](const Graph& g) { return f(g).cast<bool>(); };
}

ReductionTarget target_of(const std::string& name) {
  if (name == "p10") return ReductionTarget::P10;
  if (name == "c7") return ReductionTarget::C7;
  throw py::value_error("unknown target '" + name + "'");
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Seidel switching toolkit";

  auto base = py::register_exception<Error>(m, "SwitchkitError", PyExc_ValueError);
  py::register_exception<TooLarge>(m, "TooLarge", base.ptr());
  py::register_exception<BudgetExceeded>(m, "BudgetExceeded", base.ptr());
  py::register_exception<MalformedGraph6>(m, "MalformedGraph6", base.ptr());
  py::register_exception<MalformedInput>(m, "MalformedInput", base.ptr());
  py::register_exception<VertexOutOfRange>(m, "VertexOutOfRange", base.ptr());
  py::register_exception<SizeMismatch>(m, "SizeMismatch", base.ptr());
  py::register_exception<ArityMismatch>(m, "ArityMismatch", base.ptr());
  py::register_exception<NotVariableOnly>(m, "NotVariableOnly", base.ptr());

  py::class_<Graph>(m, "Graph")
      .def(py::init<int>(), py::arg("n"))
      .def_static(
          "from_edges",
          [](int n, const std::vector<std::pair<int, int>>& edges) { return Graph::from_edges(n, std::span(edges)); },
          py::arg("n"), py::arg("edges"))
      .def_static("from_graph6", [](const std::string& s) { return parse_graph6(s); })
      .def("graph6", [](const Graph& g) { return to_graph6(g); })
      .def_property_readonly("order", &Graph::order)
      .def("edge_count", &Graph::edge_count)
      .def("edges", &Graph::edges)
      .def("adjacent", &Graph::adjacent)
      .def("degree", &Graph::degree)
      .def("neighbors", [](const Graph& g, int v) { return g.neighbors(v).to_vector(); })
      .def("__eq__", [](const Graph& a, const Graph& b) { return a == b; })
      .def("__repr__", [](const Graph& g) { return "Graph('" + to_graph6(g) + "')"; });

  m.def("parse_graph6", &parse_graph6);
  m.def("to_graph6", &to_graph6);
  m.def("seidel_switch", [](const Graph& g, const std::vector<int>& a) { return seidel_switch(g, to_set(g, a)); },
        py::arg("g"), py::arg("a"));
  m.def("complement", &complement);
  m.def("induced", [](const Graph& g, const std::vector<int>& vs) { return induced(g, to_set(g, vs)); });
  m.def("switching_class", &switching_class);
  m.def("are_isomorphic", &are_isomorphic);
  m.def("are_switching_equivalent", &are_switching_equivalent);
  m.def("all_graphs", &all_graphs);

  m.def("pattern", [](const std::string& name) { return pattern(name); });
  m.def("pattern_names", &pattern_names);
  m.def("profile_graph", [](const std::string& text) { return profile_graph(Profile::parse(text)); });
  m.def("contains_induced", [](const Graph& g, const Graph& h) { return contains_induced(g, h); });
  m.def("find_induced_path", [](const Graph& g, int k) { return find_induced_path(g, k); });
  m.def("find_induced_cycle", [](const Graph& g, int k) { return find_induced_cycle(g, k); });

  m.def("lower_classes", [] {
    std::vector<std::string> out;
    for (auto id : all_lower_classes()) out.push_back(to_string(id));
    return out;
  });
  m.def("recognize_lower", [](const Graph& g, const std::string& name) { return recognize_lower(g, lower_id(name)); });
  m.def("lower_profile", [](const Graph& g, const std::string& name) -> std::optional<std::string> {
    if (auto p = lower_profile(g, lower_id(name))) return p->to_string();
    return std::nullopt;
  });

  m.def("upper_classes", [] {
    std::vector<std::string> out;
    for (auto id : all_upper_classes()) out.push_back(to_string(id));
    return out;
  });
  m.def(
      "solve_upper",
      [](const Graph& g, const std::string& name, int p, int q) { return to_list(solve_upper(g, upper_id(name), p, q)); },
      py::arg("g"), py::arg("cls"), py::arg("p") = 2, py::arg("q") = 2);
  m.def("enumerate_upper", [](const Graph& g, const std::string& name) { return to_lists(enumerate_upper(g, upper_id(name))); });
  m.def(
      "in_upper_class",
      [](const Graph& g, const std::string& name, int p, int q) { return upper_class_predicate(upper_id(name), p, q)(g); },
      py::arg("g"), py::arg("cls"), py::arg("p") = 2, py::arg("q") = 2);
  m.def("oracle_upper", [](const Graph& g, const py::function& pred) { return to_list(oracle_upper(g, wrap(pred))); });
  m.def("oracle_upper_all", [](const Graph& g, const py::function& pred) { return to_lists(oracle_upper_all(g, wrap(pred))); });
  m.def("oracle_lower", [](const Graph& g, const py::function& pred) { return oracle_lower(g, wrap(pred)); });

  py::class_<NaeFormula>(m, "NaeFormula")
      .def(py::init([](int k, int num_vars, const std::vector<std::vector<int>>& clauses) {
             NaeFormula f{k, num_vars, clauses};
             f.validate();
             return f;
           }),
           py::arg("k"), py::arg("num_vars"), py::arg("clauses"))
      .def_static("parse", &parse_nae)
      .def_readonly("k", &NaeFormula::k)
      .def_readonly("num_vars", &NaeFormula::num_vars)
      .def_readonly("clauses", &NaeFormula::clauses)
      .def("text", [](const NaeFormula& f) { return to_text(f); })
      .def("evaluate", [](const NaeFormula& f, const std::vector<bool>& a) { return nae_eval(f, a); })
      .def("padded", &pad_nae);

  py::class_<ReductionInstance>(m, "ReductionInstance")
      .def_readonly("graph", &ReductionInstance::graph)
      .def_readonly("formula", &ReductionInstance::formula)
      .def_readonly("variable_vertices", &ReductionInstance::variable_vertices)
      .def("roles_json", [](const ReductionInstance& inst) { return roles_json(inst); })
      .def("switching_set",
           [](const ReductionInstance& inst, const std::vector<bool>& a) {
             return assignment_to_switching_set(inst, a).to_vector();
           })
      .def(
          "verify",
          [](const ReductionInstance& inst, const std::vector<bool>& a, std::uint64_t budget) {
            return verify_instance(inst, a, SearchBudget{budget});
          },
          py::arg("assignment"), py::arg("budget") = SearchBudget{}.max_nodes);

  m.def("build_instance", [](const NaeFormula& f, const std::string& target) {
    return target_of(target) == ReductionTarget::P10 ? build_p10_instance(f) : build_c7_instance(f);
  });
}
