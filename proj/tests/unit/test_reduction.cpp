#include <doctest.h>

#include <set>

#include "lva/encode.hpp"
#include "lva/predicates.hpp"
#include "lva/reduction.hpp"
#include "lva/solver.hpp"

using namespace lva;

namespace {

Vertex at(const Graph& g, std::string_view label) {
  auto v = g.find_label(label);
  REQUIRE_MESSAGE(v.has_value(), "missing label ", label);
  return *v;
}

bool triangle(const Graph& g, std::string_view a, std::string_view b, std::string_view c) {
  const Vertex x = at(g, a), y = at(g, b), z = at(g, c);
  return g.adjacent(x, y) && g.adjacent(y, z) && g.adjacent(x, z);
}

Restricted3Sat unsat4() {
  Restricted3Sat f;
  f.num_vars = 4;
  f.clauses = {{-4, -1}, {-3, 4}, {-2, 1}, {1, 2}, {2, 3}, {3, 4}};
  return f;
}

}  // namespace

TEST_SUITE("reduction") {

TEST_CASE("validate_instance") {
  CHECK(validate_instance(sample_formula()).empty());
  CHECK(validate_instance(unsat4()).empty());

  Restricted3Sat f2;
  f2.num_vars = 2;
  f2.clauses = {{1, 2}, {1, -2}, {1, 2}};
  auto v = validate_instance(f2);
  REQUIRE(v.size() == 1);
  CHECK(v[0].kind == Violation::Kind::Occurrences);
  CHECK(v[0].variable == 1);
  CHECK(v[0].message.find("clause 1") != std::string::npos);

  Restricted3Sat f3;
  f3.num_vars = 3;
  f3.clauses = {{-1, 2, 3}, {1, -2}, {2, -3}, {1, 3}};
  v = validate_instance(f3);
  REQUIRE(v.size() == 1);
  CHECK(v[0].kind == Violation::Kind::ClauseShape);
  CHECK(v[0].clause == 0);

  Restricted3Sat rep;
  rep.num_vars = 1;
  rep.clauses = {{1, 1}, {-1, 2}};
  CHECK(validate_instance(rep).size() >= 2);
  CHECK_THROWS_AS(reduce_md6(f2), std::invalid_argument);
  CHECK_THROWS_AS(reduce_md5(f3), std::invalid_argument);
}

TEST_CASE("parse and emit") {
  const auto f = parse_r3sat("c sample\np r3sat 4 5\n-1 -2 0\n1 2 3 0\n1 3 4\n\n-3 4 0\n2 -4 0\n");
  CHECK(f.clauses == sample_formula().clauses);
  CHECK(f.clause_lines == std::vector<std::size_t>{3, 4, 5, 7, 8});
  CHECK(parse_r3sat(emit_r3sat(f)).clauses == f.clauses);
  try {
    parse_r3sat("p r3sat 2 2\n1 2 0\n1 x 0\n");
    FAIL("no error");
  } catch (const ParseError& e) {
    CHECK(e.offset() == 3);
  }
  CHECK_THROWS_AS(parse_r3sat("1 2 0\n"), ParseError);
  CHECK_THROWS_AS(parse_r3sat("p r3sat 2 2\n1 2 0\n"), ParseError);
  CHECK_THROWS_AS(parse_r3sat("p r3sat 2 1\n1 3 0\n"), ParseError);
  CHECK_THROWS_AS(parse_r3sat("p r3sat 2 1\n1 0 2\n"), ParseError);
}

TEST_CASE("satisfiability of the fixed instances") {
  CHECK(brute_force_sat(sample_formula()).has_value());
  CHECK_FALSE(brute_force_sat(unsat4()).has_value());
  const auto i2 = enumerate_instances(2);
  const auto i3 = enumerate_instances(3);
  CHECK(i2.size() == 2);
  CHECK(i3.size() == 8);
  for (const auto& f : i3) {
    CHECK(validate_instance(f).empty());
    CHECK(brute_force_sat(f).has_value());
  }
}

TEST_CASE("basic block") {
  const Graph b = basic_block_b();
  CHECK(b.order() == 7);
  CHECK(b.size() == 15);
  for (auto t : {"234", "267", "124", "125", "345", "245", "246", "247"})
    CHECK(triangle(b, std::string(1, t[0]), std::string(1, t[1]), std::string(1, t[2])));
  CHECK(b.degree(at(b, "1")) == 4);
  CHECK(b.degree(at(b, "7")) == 4);
  CHECK(b.degree(at(b, "2")) == 6);
  CHECK(b.adjacent(at(b, "1"), at(b, "7")));
}

TEST_CASE("gadget sizes") {
  CHECK(variable_gadget_md6().order() == 12);
  CHECK(max_degree(variable_gadget_md6()) == 6);
  CHECK(clause_gadget_md6(2).order() == 11);
  CHECK(clause_gadget_md6(3).order() == 12);
  CHECK(k5_minus().size() == 9);
  CHECK_FALSE(k5_minus().adjacent(0, 1));
  const Graph v5 = variable_gadget_md5();
  CHECK(v5.order() == 10);
  CHECK(max_degree(v5) <= 5);
  CHECK(clause_gadget_md5(3).order() == 6);
  CHECK(is_cycle_graph(clause_gadget_md5(3)));
  CHECK(is_cycle_graph(clause_gadget_md5(2)));
  const Graph s = starter_gadget();
  CHECK(s.order() == 22);
  CHECK(max_degree(s) <= 5);
  CHECK(s.adjacent(at(s, "z0"), at(s, "z1")));
  CHECK(s.adjacent(at(s, "z1"), at(s, "z2")));
  CHECK_THROWS_AS(clause_gadget_md6(4), std::invalid_argument);
  CHECK_THROWS_AS(clause_gadget_md5(1), std::invalid_argument);
}

TEST_CASE("md5 link") {
  const Graph g = clause_link_md5();
  CHECK(g.order() == 15);
  CHECK(max_degree(g) <= 5);
  // K.1 - L.z1 - K.3 - R.z0 - K.1 is a 4-cycle.
  CHECK(g.adjacent(at(g, "K.1"), at(g, "L.z1")));
  CHECK(g.adjacent(at(g, "L.z1"), at(g, "K.3")));
  CHECK(g.adjacent(at(g, "K.3"), at(g, "R.z0")));
  CHECK(g.adjacent(at(g, "R.z0"), at(g, "K.1")));
  CHECK(g.adjacent(at(g, "K.2"), at(g, "R.z1")));
  GraphBuilder b(2);
  CHECK_THROWS_AS(link_md5(b, {0}, {1}), std::invalid_argument);
}

TEST_CASE("reduction sizes and degree audit") {
  const auto f = sample_formula();
  const auto r6 = reduce_md6(f);
  CHECK(r6.graph.order() == 12 * 4 + 9 * 5 + 7 * 4);
  CHECK(max_degree(r6.graph) <= 6);
  const auto r5 = reduce_md5(f);
  CHECK(r5.graph.order() == 10 * 4 + 3 * 5 + 19 + 3 * 4);
  CHECK(max_degree(r5.graph) <= 5);
  for (const auto* r : {&r6, &r5}) {
    CHECK(is_connected(r->graph));
    CHECK(r->literal_vertex.size() == 5);
    std::set<Vertex> lits;
    for (const auto& c : r->literal_vertex) lits.insert(c.begin(), c.end());
    CHECK(lits.size() == 12);  // each occurrence consumes its own vertex
    for (const auto& zs : r->zero_vertices)
      for (Vertex z : zs) CHECK(r->graph.degree(z) <= (r == &r6 ? 6 : 5));
  }
  CHECK(r6.graph.find_label("x1.a1=C2.l1").has_value());
  CHECK(r6.graph.find_label("x1.abar=C1.l1").has_value());
  CHECK(r5.mapping_json().find("\"variant\": \"md5\"") != std::string::npos);
}

TEST_CASE("forward and backward translation") {
  const auto f = sample_formula();
  const auto values = *brute_force_sat(f);
  for (auto variant : {Variant::Md6, Variant::Md5}) {
    const auto r = reduce(f, variant);
    const Partition p = assignment_to_coloring(f, r, values);
    CHECK(is_legal_partition(r.graph, p));
    CHECK(coloring_to_assignment(f, r, p) == values);
    // swapping the two colours describes the same assignment
    std::vector<int> swapped(p.classes().begin(), p.classes().end());
    for (int& c : swapped) c = 1 - c;
    CHECK(coloring_to_assignment(f, r, Partition(2, swapped)) == values);
  }
  std::vector<bool> bad(5, false);
  CHECK_THROWS_AS(assignment_to_coloring(f, reduce_md5(f), bad), std::invalid_argument);
}

TEST_CASE("md5 graph of the sample formula is 2-colourable by SAT") {
  const auto f = sample_formula();
  const auto r = reduce_md5(f);
  const auto out = solve(build_cnf(r.graph, 2));
  REQUIRE(out.satisfiable());
  const Partition p = decode_model(r.graph, 2, VarMap(r.graph.order(), 2), out.model);
  CHECK(first_falsified_clause(f, coloring_to_assignment(f, r, p)) < 0);
}

}  // TEST_SUITE
