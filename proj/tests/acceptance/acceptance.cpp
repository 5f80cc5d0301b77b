// Runs the nine acceptance criteria and prints one PASS/FAIL line each.
// Exit status is the number of failed criteria.
#include <chrono>
#include <filesystem>
#include <fstream>
#include <functional>
#include <iostream>
#include <random>
#include <sstream>

#include "lva/encode.hpp"
#include "lva/enumerate.hpp"
#include "lva/gadgetlab.hpp"
#include "lva/io.hpp"
#include "lva/oracle.hpp"
#include "lva/predicates.hpp"
#include "lva/reduction.hpp"
#include "lva/search.hpp"
#include "lva/solver.hpp"

using namespace lva;
namespace fs = std::filesystem;

namespace {

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point t0) {
  return std::chrono::duration<double>(Clock::now() - t0).count();
}

struct Result {
  bool pass = true;
  std::string note;
  void fail(const std::string& why) {
    if (pass) note = why;
    pass = false;
  }
};

Result criterion_lemmas() {
  Result r;
  const auto t0 = Clock::now();
  int passed = 0;
  for (const auto& id : lemma_ids()) {
    const auto c = verify_lemma(id);
    if (c.pass)
      ++passed;
    else
      r.fail(id + " failed: " + c.statement);
    if ((id == "L1" || id == "L6") && c.report.legal.size() != 1)
      r.fail(id + " has " + std::to_string(c.report.legal.size()) + " legal colourings");
  }
  const double t = seconds_since(t0);
  if (t >= 5) r.fail("took " + std::to_string(t) + " s");
  if (r.pass) r.note = std::to_string(passed) + "/6 lemmas in " + std::to_string(t).substr(0, 5) + " s";
  return r;
}

Result criterion_constants() {
  Result r;
  const std::pair<std::string, std::pair<Graph, int>> cases[] = {
      {"K5", {named::complete(5), 3}}, {"K5-", {k5_minus(), 2}}, {"dodecahedron", {named::dodecahedron(), 2}}};
  double worst = 0;
  for (const auto& [name, gv] : cases)
    for (Engine e : {Engine::Oracle, Engine::Sat}) {
      EngineOptions opt;
      opt.engine = e;
      const auto t0 = Clock::now();
      const auto v = lva_value(gv.first, 6, opt);
      const double t = seconds_since(t0);
      worst = std::max(worst, t);
      const std::string eng = e == Engine::Oracle ? "oracle" : "sat";
      if (!v || v->value != gv.second) r.fail(name + " by " + eng + " gave " + (v ? std::to_string(v->value) : "none"));
      if (v && !is_legal_partition(gv.first, v->witness)) r.fail(name + " witness illegal");
      if (t >= 1) r.fail(name + " by " + eng + " took " + std::to_string(t) + " s");
    }
  if (r.pass) r.note = "3 graphs x 2 engines, slowest " + std::to_string(worst).substr(0, 5) + " s";
  return r;
}

Result criterion_matsumoto() {
  Result r;
  std::size_t graphs = 0, even = 0;
  for (int n = 1; n <= 8; ++n)
    for (const auto& g : nonisomorphic_connected_graphs(n)) {
      ++graphs;
      const int value = lva_exact(g, 8)->value;
      const int bound = matsumoto_bound(g);
      if (value > bound) r.fail("bound violated by " + emit_graph6(g));
      if (max_degree(g) % 2 == 0) {
        ++even;
        if ((value == bound) != (is_cycle_graph(g) || is_complete_graph(g)))
          r.fail("equality case violated by " + emit_graph6(g));
      }
    }
  if (r.pass) r.note = std::to_string(graphs) + " connected graphs, " + std::to_string(even) + " with even max degree";
  return r;
}

Result criterion_degree4() {
  Result r;
  std::size_t graphs = 0;
  const auto k5 = canonical_code(named::complete(5));
  for (int n = 1; n <= 8; ++n)
    for (const auto& g : nonisomorphic_connected_graphs(n)) {
      if (max_degree(g) > 4) continue;
      ++graphs;
      const bool is_k5 = n == 5 && canonical_code(g) == k5;
      const int value = lva_exact(g, 8)->value;
      if (!is_k5 && value > 2) r.fail("lva 3 for " + emit_graph6(g));
      if (is_k5 && value != 3) r.fail("K5 did not need 3 classes");
    }
  if (r.pass) r.note = std::to_string(graphs) + " connected graphs with max degree <= 4";
  return r;
}

Result criterion_encoding() {
  Result r;
  std::size_t checks = 0;
  for (int n = 1; n <= 7; ++n)
    for (const auto& g : nonisomorphic_graphs(n)) {
      const int value = lva_exact(g, 8)->value;
      for (int k = 1; k <= 3; ++k) {
        ++checks;
        const auto out = solve(build_cnf(g, k));
        if (out.satisfiable() != (value <= k)) r.fail("disagreement at k=" + std::to_string(k) + " on " + emit_graph6(g));
        if (out.satisfiable() && !is_legal_partition(g, decode_model(g, k, VarMap(n, k), out.model)))
          r.fail("decoded partition illegal for " + emit_graph6(g));
      }
    }
  if (r.pass) r.note = std::to_string(checks) + " (graph, k) pairs";
  return r;
}

Result criterion_sizes() {
  Result r;
  std::mt19937_64 rng(2024);
  for (int i = 0; i < 20; ++i) {
    const long n = 1 + static_cast<long>(rng() % 15), k = 1 + static_cast<long>(rng() % 4);
    const Graph g = random_graph(static_cast<int>(n), 0.35, rng);
    const long m = g.size();
    const IlpModel ilp = build_ilp(g, static_cast<int>(k));
    const long mid = n >= 2 ? n - 2 : 0;
    const long vars = n * k + n * (n - 1);
    const long cons = n + n * (n - 1) / 2 + n * (n - 1) * mid + 2 * m * mid * k;
    if (ilp.num_vars != vars || build_cnf(g, static_cast<int>(k)).num_vars != vars)
      r.fail("variable count " + std::to_string(ilp.num_vars) + " != " + std::to_string(vars));
    if (static_cast<long>(ilp.constraints.size()) != cons)
      r.fail("constraint count " + std::to_string(ilp.constraints.size()) + " != " + std::to_string(cons));
  }
  if (r.pass) r.note = "20 random (g, k)";
  return r;
}

Result criterion_reduction() {
  Result r;
  std::vector<Restricted3Sat> pool;
  for (int v = 2; v <= 3; ++v)
    for (auto& f : enumerate_instances(v)) pool.push_back(std::move(f));
  pool.push_back(sample_formula());
  int extra_sat = 0;
  for (auto& f : enumerate_instances(4)) {
    const bool sat = brute_force_sat(f).has_value();
    if (!sat || extra_sat++ < 6) pool.push_back(std::move(f));
  }
  std::size_t sat_count = 0;
  for (const auto& f : pool) {
    const bool sat = brute_force_sat(f).has_value();
    sat_count += sat;
    for (Variant variant : {Variant::Md6, Variant::Md5}) {
      const auto red = reduce(f, variant);
      const int cap = variant == Variant::Md6 ? 6 : 5;
      if (max_degree(red.graph) > cap) r.fail("degree audit failed: " + emit_r3sat(f));
      const auto out = solve(build_cnf(red.graph, 2));
      if (out.satisfiable() != sat)
        r.fail(std::string(variant == Variant::Md6 ? "md6" : "md5") + " disagrees on\n" + emit_r3sat(f));
      if (out.satisfiable()) {
        const Partition p = decode_model(red.graph, 2, VarMap(red.graph.order(), 2), out.model);
        if (first_falsified_clause(f, coloring_to_assignment(f, red, p)) >= 0) r.fail("backward translation failed");
      }
    }
  }
  if (r.pass)
    r.note = std::to_string(pool.size()) + " instances (" + std::to_string(pool.size() - sat_count) +
             " unsatisfiable), both variants";
  return r;
}

Result criterion_search() {
  Result r;
  const fs::path dir = fs::path(LVA_TEST_DATA) / "corpus";
  std::vector<fs::path> files;
  if (fs::is_directory(dir))
    for (const auto& e : fs::directory_iterator(dir))
      if (e.path().extension() == ".g6") files.push_back(e.path());
  if (files.empty()) {
    r.fail("no corpus under " + dir.string());
    return r;
  }
  std::sort(files.begin(), files.end());
  std::stringstream all;
  for (const auto& p : files) all << std::ifstream(p).rdbuf();
  SearchOptions opt;
  opt.k = 2;
  opt.max_degree = 5;
  opt.min_connectivity = 3;
  opt.limit_n = 10;
  opt.threads = default_thread_count();
  const auto t0 = Clock::now();
  const auto s = run_search(all, opt);
  if (s.errors) r.fail(std::to_string(s.errors) + " corpus lines failed to parse");
  for (const auto& c : s.counterexamples()) r.fail("lva > 2: " + c.text);
  if (s.decided == 0) r.fail("nothing decided");
  if (r.pass)
    r.note = std::to_string(s.decided) + " graphs decided, 0 with lva > 2, " + std::to_string(s.filtered) +
             " filtered, " + std::to_string(seconds_since(t0)).substr(0, 5) + " s";
  return r;
}

Result criterion_properties() {
  Result r;
  std::mt19937_64 rng(99);
  std::size_t cases = 0;
  EngineOptions sat;
  sat.engine = Engine::Sat;
  for (int trial = 0; trial < 300; ++trial, ++cases) {
    const int n = 1 + static_cast<int>(rng() % 12);
    const Graph g = random_graph(n, 0.1 + 0.8 * static_cast<double>(rng() % 100) / 100.0, rng);
    if (parse_graph6(emit_graph6(g)) != g) r.fail("graph6 round trip");
    if (parse_labeled(emit_labeled(g)) != g) r.fail("labeled round trip");
    const auto f = build_cnf(g, 1 + static_cast<int>(rng() % 3));
    const auto back = parse_dimacs(emit_dimacs(f));
    if (back.num_vars != f.num_vars || back.clauses != f.clauses) r.fail("DIMACS round trip");

    std::vector<Vertex> sub;
    for (Vertex v = 0; v < n; ++v)
      if (rng() % 2) sub.push_back(v);
    const VertexSet u(n, sub);
    if (!u.empty() && conn(g, u) != literal::conn(g, u)) r.fail("conn disagrees with its literal form");
    if (path_set(g, u) != literal::path_set(g, u)) r.fail("path_set disagrees with its literal form");

    const auto a = lva_value(g, 8), b = lva_value(g, 8, sat);
    if (!a || !b || a->value != b->value) r.fail("engines disagree on " + emit_graph6(g));
    if (a && a->value >= 2) {
      const auto p = decide_lva(g, 2);
      const bool has2 = p.has_value();
      if (has2) {
        std::vector<int> swapped(p->classes().begin(), p->classes().end());
        for (int& c : swapped) c = 1 - c;
        if (!is_legal_partition(g, Partition(2, swapped))) r.fail("colour swap broke legality");
      }
      if (has2 != (a->value == 2)) r.fail("decision disagrees with value");
    }
    if (a && lva_value(random_relabel(g, rng), 8)->value != a->value) r.fail("relabelling changed lva");
  }
  if (r.pass) r.note = std::to_string(cases) + " random graphs: round trips, predicates, swap, engines";
  return r;
}

}  // namespace

int main() {
  const std::pair<const char*, std::function<Result()>> criteria[] = {
      {"lemma certificates", criterion_lemmas},
      {"constants by both engines", criterion_constants},
      {"degree bound and equality cases, n <= 8", criterion_matsumoto},
      {"max degree 4 implies lva <= 2 except K5, n <= 8", criterion_degree4},
      {"CNF encoding equivalence, n <= 7, k <= 3", criterion_encoding},
      {"encoding sizes", criterion_sizes},
      {"reduction correctness, <= 4 variables", criterion_reduction},
      {"corpus search", criterion_search},
      {"property suites", criterion_properties},
  };
  int failed = 0, i = 0;
  for (const auto& [name, run] : criteria) {
    ++i;
    const auto t0 = Clock::now();
    Result r;
    try {
      r = run();
    } catch (const std::exception& e) {
      r.fail(std::string("exception: ") + e.what());
    }
    failed += !r.pass;
    std::cout << (r.pass ? "PASS" : "FAIL") << " " << i << " " << name << ": " << r.note << " ["
              << std::to_string(seconds_since(t0)).substr(0, 6) << " s]" << std::endl;
  }
  return failed;
}
