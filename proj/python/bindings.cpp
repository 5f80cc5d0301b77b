#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <sstream>

#include "lva/encode.hpp"
#include "lva/gadgetlab.hpp"
#include "lva/io.hpp"
#include "lva/oracle.hpp"
#include "lva/predicates.hpp"
#include "lva/reduction.hpp"
#include "lva/search.hpp"
#include "lva/solver.hpp"

namespace py = pybind11;
using namespace lva;

namespace {

Partition to_partition(const Graph& g, const std::vector<int>& classes, int k) {
  if (static_cast<int>(classes.size()) != g.order()) throw std::invalid_argument("one class per vertex expected");
  return Partition(k, classes);
}

std::vector<int> classes_of(const Partition& p) { return {p.classes().begin(), p.classes().end()}; }

Engine engine_of(const std::string& name) {
  if (name == "oracle") return Engine::Oracle;
  if (name == "sat") return Engine::Sat;
  throw std::invalid_argument("engine must be 'oracle' or 'sat'");
}

Variant variant_of(const std::string& name) {
  if (name == "md6") return Variant::Md6;
  if (name == "md5") return Variant::Md5;
  throw std::invalid_argument("variant must be 'md6' or 'md5'");
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Linear vertex arboricity: exact solver, SAT/ILP encodings, reductions and gadget checks";

  py::register_exception<ParseError>(m, "ParseError", PyExc_ValueError);
  py::register_exception<InstanceTooLarge>(m, "InstanceTooLarge", PyExc_ValueError);
  py::register_exception<BudgetExceeded>(m, "BudgetExceeded", PyExc_RuntimeError);

  py::class_<Graph>(m, "Graph")
      .def(py::init([](int n, const std::vector<Edge>& edges) { return Graph::from_edges(n, edges); }),
           py::arg("n"), py::arg("edges") = std::vector<Edge>{})
      .def_property_readonly("order", &Graph::order)
      .def_property_readonly("size", &Graph::size)
      .def("edges", &Graph::edges)
      .def("degree", &Graph::degree)
      .def("adjacent", &Graph::adjacent)
      .def("label", &Graph::label)
      .def("max_degree", [](const Graph& g) { return max_degree(g); })
      .def("__eq__", [](const Graph& a, const Graph& b) { return a == b; })
      .def("__repr__", [](const Graph& g) {
        return "Graph(n=" + std::to_string(g.order()) + ", m=" + std::to_string(g.size()) + ")";
      });

  m.def("parse_graph6", [](const std::string& s) { return parse_graph6(s); });
  m.def("emit_graph6", &emit_graph6);
  m.def("parse_labeled", [](const std::string& s) { return parse_labeled(std::string_view(s)); });
  m.def("emit_labeled", &emit_labeled);

  m.def("complete", &named::complete);
  m.def("cycle", &named::cycle);
  m.def("path", &named::path);
  m.def("dodecahedron", &named::dodecahedron);
  m.def("k5_minus", &k5_minus);

  m.def(
      "is_legal_partition",
      [](const Graph& g, const std::vector<int>& classes) {
        int k = 1;
        for (int c : classes) k = std::max(k, c + 1);
        return is_legal_partition(g, to_partition(g, classes, k));
      },
      "Every class induces a linear forest.");

  m.def(
      "lva",
      [](const Graph& g, int k_max, const std::string& engine) -> py::object {
        EngineOptions opt;
        opt.engine = engine_of(engine);
        auto r = lva_value(g, k_max, opt);
        if (!r) return py::none();
        return py::make_tuple(r->value, classes_of(r->witness));
      },
      py::arg("g"), py::arg("k_max") = 8, py::arg("engine") = "oracle",
      "(value, classes) for the smallest k <= k_max, or None.");

  m.def(
      "decide",
      [](const Graph& g, int k, const std::string& engine) -> py::object {
        EngineOptions opt;
        opt.engine = engine_of(engine);
        auto p = decide_lva(g, k, opt);
        if (!p) return py::none();
        return py::cast(classes_of(*p));
      },
      py::arg("g"), py::arg("k"), py::arg("engine") = "oracle");

  m.def("matsumoto_bound", &matsumoto_bound);

  m.def(
      "build_cnf",
      [](const Graph& g, int k) {
        auto f = build_cnf(g, k);
        return py::make_tuple(f.num_vars, f.clauses);
      },
      "(num_vars, clauses) with signed 1-based literals.");
  m.def("dimacs", [](const Graph& g, int k) { return emit_dimacs(build_cnf(g, k)); });
  m.def("lp", [](const Graph& g, int k) {
    const VarMap map(g.order(), k);
    return emit_lp(build_ilp(g, k), &map);
  });

  m.def(
      "solve",
      [](int num_vars, const std::vector<std::vector<int>>& clauses, const std::string& strategy) -> py::object {
        SolverOptions opt;
        if (strategy == "dpll")
          opt.strategy = Strategy::Dpll;
        else if (strategy != "cdcl")
          throw std::invalid_argument("strategy must be 'cdcl' or 'dpll'");
        auto out = solve(CnfFormula{num_vars, clauses}, opt);
        if (!out.satisfiable()) return py::none();
        std::vector<int> lits;
        for (int v = 1; v <= num_vars; ++v) lits.push_back(out.model[v] ? v : -v);
        return py::cast(lits);
      },
      py::arg("num_vars"), py::arg("clauses"), py::arg("strategy") = "cdcl",
      "A model as signed literals, or None if unsatisfiable.");

  m.def(
      "reduce",
      [](const std::string& r3sat, const std::string& variant) {
        const auto inst = parse_r3sat(r3sat);
        const auto out = reduce(inst, variant_of(variant));
        py::dict d;
        d["graph"] = out.graph;
        d["literal_vertex"] = out.literal_vertex;
        d["zero_vertices"] = out.zero_vertices;
        d["mapping_json"] = out.mapping_json();
        return d;
      },
      py::arg("r3sat"), py::arg("variant") = "md6");

  m.def("validate_r3sat", [](const std::string& r3sat) {
    std::vector<std::string> msgs;
    for (const auto& v : validate_instance(parse_r3sat(r3sat))) msgs.push_back(v.message);
    return msgs;
  });

  m.def("lemma_ids", &lemma_ids);
  m.def("verify_lemma", [](const std::string& id) {
    const auto c = verify_lemma(id);
    py::dict d;
    d["id"] = c.id;
    d["pass"] = c.pass;
    d["legal"] = c.report.legal.size();
    d["examined"] = c.report.examined;
    d["summary"] = c.summary();
    return d;
  });

  m.def(
      "search",
      [](const std::string& corpus, int k, int max_deg, int min_conn) {
        std::istringstream in(corpus);
        SearchOptions opt;
        opt.k = k;
        opt.max_degree = max_deg;
        opt.min_connectivity = min_conn;
        const auto s = run_search(in, opt);
        py::dict d;
        d["decided"] = s.decided;
        d["yes"] = s.yes;
        d["no"] = s.no;
        d["filtered"] = s.filtered;
        d["errors"] = s.errors;
        std::vector<std::string> ce;
        for (const auto& r : s.counterexamples()) ce.push_back(r.text);
        d["counterexamples"] = ce;
        return d;
      },
      py::arg("corpus"), py::arg("k") = 2, py::arg("max_degree") = -1, py::arg("min_connectivity") = 0);
}
