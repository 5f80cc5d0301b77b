#include <doctest.h>

#include <algorithm>
#include <random>
#include <set>

#include "lva/encode.hpp"
#include "lva/enumerate.hpp"
#include "lva/oracle.hpp"
#include "lva/predicates.hpp"
#include "lva/reduction.hpp"
#include "lva/solver.hpp"

using namespace lva;

TEST_SUITE("encode") {

TEST_CASE("variable numbering") {
  const VarMap m(3, 2);
  CHECK(m.total() == 12);
  CHECK(m.color_var(0, 0) == 1);
  CHECK(m.color_var(2, 1) == 6);
  CHECK(m.order_var(0, 1) == 7);
  CHECK(m.order_var(0, 2) == 8);
  CHECK(m.order_var(1, 0) == 9);
  CHECK(m.order_var(2, 1) == 12);
  std::set<int> ids;
  for (int id = 1; id <= m.total(); ++id) {
    auto r = m.role(id);
    ids.insert(r.kind == 'c' ? m.color_var(r.a, r.b) : m.order_var(r.a, r.b));
  }
  CHECK(ids.size() == 12);
  CHECK(*ids.begin() == 1);
  CHECK(m.name(9) == "x_1_0");
  CHECK(VarMap::from_json(m.to_json()).total() == 12);
}

TEST_CASE("ILP sizes") {
  const auto k3 = build_ilp(named::complete(3), 2);
  CHECK(k3.num_vars == 12);
  CHECK(k3.constraints.size() == expected_ilp_constraint_count(3, 3, 2));
  CHECK(expected_ilp_constraint_count(3, 3, 2) == 3 + 3 + 6 + 12);
  const auto one = build_ilp(named::empty(1), 1);
  REQUIRE(one.constraints.size() == 1);
  CHECK(one.constraints[0].relation == Relation::Equal);
  CHECK_THROWS_AS(build_ilp(named::empty(1), 0), std::invalid_argument);
  CHECK_THROWS_AS(build_cnf(named::empty(1), 0), std::invalid_argument);
}

TEST_CASE("sizes match the closed forms on random graphs") {
  std::mt19937_64 rng(31);
  for (int trial = 0; trial < 40; ++trial) {
    const int n = 1 + static_cast<int>(rng() % 12), k = 1 + static_cast<int>(rng() % 4);
    const Graph g = random_graph(n, 0.4, rng);
    const auto ilp = build_ilp(g, k);
    const auto cnf = build_cnf(g, k);
    CHECK(static_cast<std::size_t>(ilp.num_vars) == expected_variable_count(n, k));
    CHECK(static_cast<std::size_t>(cnf.num_vars) == static_cast<std::size_t>(n * k + n * (n - 1)));
    CHECK(ilp.constraints.size() == expected_ilp_constraint_count(n, g.size(), k));
    CHECK(cnf.clauses.size() == expected_cnf_clause_count(n, g.size(), k));
    for (const auto& c : cnf.clauses) {
      REQUIRE_FALSE(c.empty());
      for (int lit : c) REQUIRE(std::abs(lit) <= cnf.num_vars);
    }
    for (const auto& c : ilp.constraints)
      for (auto [coef, var] : c.terms) REQUIRE((var >= 1 && var <= ilp.num_vars && coef != 0));
  }
}

TEST_CASE("satisfiability of small encodings") {
  CHECK(solve(build_cnf(named::path(3), 1)).satisfiable());
  CHECK_FALSE(solve(build_cnf(named::cycle(3), 1)).satisfiable());
  CHECK(solve(build_cnf(named::dodecahedron(), 2)).satisfiable());
  CHECK_FALSE(solve(build_cnf(named::complete(5), 2)).satisfiable());
  CHECK(solve(build_cnf(named::complete(5), 3)).satisfiable());
}

TEST_CASE("decode_model") {
  const Graph c5 = named::cycle(5);
  const auto out = solve(build_cnf(c5, 2));
  REQUIRE(out.satisfiable());
  const auto p = decode_model(c5, 2, VarMap(5, 2), out.model);
  CHECK(is_legal_partition(c5, p));

  const auto one = solve(build_cnf(named::empty(1), 1));
  CHECK(decode_model(named::empty(1), 1, VarMap(1, 1), one.model)[0] == 0);

  // K5-: vertices 1 and 2 (ids 0 and 1) must share a colour.
  const Graph km = k5_minus();
  const auto o2 = solve(build_cnf(km, 2));
  REQUIRE(o2.satisfiable());
  const auto p2 = decode_model(km, 2, VarMap(5, 2), o2.model);
  CHECK(is_legal_partition(km, p2));
  CHECK(p2[0] == p2[1]);

  Assignment bad(VarMap(1, 2).total() + 1, false);
  CHECK_THROWS_AS(decode_model(named::empty(1), 2, VarMap(1, 2), bad), std::invalid_argument);
  bad[1] = bad[2] = true;
  CHECK_THROWS_AS(decode_model(named::empty(1), 2, VarMap(1, 2), bad), std::invalid_argument);
}

TEST_CASE("emit_dimacs") {
  CHECK(emit_dimacs(CnfFormula{}) == "p cnf 0 0\n");
  CHECK(emit_dimacs(CnfFormula{1, {{1}}}) == "p cnf 1 1\n1 0\n");
  const auto f = build_cnf(named::cycle(3), 1);
  const auto text = emit_dimacs(f);
  CHECK(text.rfind("p cnf 9 " + std::to_string(f.clauses.size()) + "\n", 0) == 0);
  // 3 unit colour clauses, 6 pair clauses, 6 triples, 2*3*1*1 middle clauses
  CHECK(f.clauses.size() == 3 + 6 + 6 + 6);
  const auto back = parse_dimacs(text);
  CHECK(back.num_vars == f.num_vars);
  CHECK(back.clauses == f.clauses);
  CHECK_THROWS_AS(parse_dimacs("p cnf 1 2\n1 0\n"), ParseError);
  CHECK_THROWS_AS(parse_dimacs("p cnf 1 1\n2 0\n"), ParseError);
}

TEST_CASE("emit_lp") {
  const auto text = emit_lp(build_ilp(named::complete(3), 2), nullptr);
  std::size_t ones = 0;
  for (std::size_t p = 0; (p = text.find("\n one_", p)) != std::string::npos; ++p) ++ones;
  CHECK(ones == 3);
  CHECK(text.rfind("Minimize\n obj: 0\nSubject To\n", 0) == 0);
  CHECK(text.find("\nBinary\n") != std::string::npos);
  CHECK(text.substr(text.size() - 4) == "End\n");
  const IlpModel one{1, {{"r", {{1, 1}}, Relation::Equal, 1}}};
  CHECK(emit_lp(one) == "Minimize\n obj: 0\nSubject To\n r: v1 = 1\nBinary\n v1\nEnd\n");
  const IlpModel neg{2, {{"r", {{-1, 1}, {2, 2}}, Relation::LessEqual, 0}}};
  CHECK(emit_lp(neg).find(" r: -v1 + 2 v2 <= 0\n") != std::string::npos);
}

TEST_CASE("model lines") {
  const auto a = parse_model("c comment\ns SATISFIABLE\nv 1 -2\nv 3 0\n", 3);
  CHECK(a[1]);
  CHECK_FALSE(a[2]);
  CHECK(a[3]);
  CHECK(parse_model(emit_model(a), 3) == a);
  CHECK_THROWS_AS(parse_model("4 0", 3), ParseError);
  CHECK_THROWS_AS(parse_model("1 x 0", 3), ParseError);
}

TEST_CASE("lifting a legal partition satisfies the formula") {
  std::mt19937_64 rng(32);
  for (int trial = 0; trial < 100; ++trial) {
    const Graph g = random_graph(1 + static_cast<int>(rng() % 9), 0.4, rng);
    const auto r = lva_exact(g, 9);
    REQUIRE(r);
    const int k = r->value + static_cast<int>(rng() % 2);
    const Partition p(k, std::vector<int>(r->witness.classes().begin(), r->witness.classes().end()));
    const auto a = lift_partition(g, p);
    REQUIRE(satisfies(build_cnf(g, k), a));
    CHECK(decode_model(g, k, VarMap(g.order(), k), a) == p);
  }
  CHECK_THROWS_AS(lift_partition(named::complete(3), Partition(1, {0, 0, 0})), std::invalid_argument);
}

TEST_CASE("SAT agrees with the oracle on all graphs up to 5 vertices") {
  for (int n = 1; n <= 5; ++n)
    for (const auto& g : nonisomorphic_graphs(n))
      for (int k = 1; k <= 3; ++k) {
        const auto out = solve(build_cnf(g, k));
        REQUIRE(out.satisfiable() == find_legal_partition(g, k).has_value());
        if (out.satisfiable()) REQUIRE(is_legal_partition(g, decode_model(g, k, VarMap(n, k), out.model)));
      }
}

}  // TEST_SUITE
