#include <doctest.h>

#include <cstdlib>
#include <random>
#include <sstream>

#include "lva/enumerate.hpp"
#include "lva/io.hpp"
#include "lva/search.hpp"

using namespace lva;

namespace {

SearchSummary run(const std::string& text, SearchOptions opt = {}) {
  std::istringstream in(text);
  return run_search(in, opt);
}

}  // namespace

TEST_SUITE("search") {

TEST_CASE("is_k_connected") {
  CHECK(is_k_connected(named::complete(4), 3));
  CHECK_FALSE(is_k_connected(named::complete(3), 3));
  CHECK(is_k_connected(named::cycle(5), 2));
  CHECK_FALSE(is_k_connected(named::cycle(5), 3));
  CHECK_FALSE(is_k_connected(named::path(4), 2));
  CHECK(is_k_connected(named::dodecahedron(), 3));
  CHECK(is_k_connected(named::octahedron(), 4));
  CHECK_FALSE(is_k_connected(named::octahedron(), 5));
  CHECK(is_k_connected(named::empty(1), 0));
  CHECK_FALSE(is_k_connected(named::empty(2), 1));
}

TEST_CASE("engines agree") {
  EngineOptions sat;
  sat.engine = Engine::Sat;
  std::mt19937_64 rng(61);
  for (int trial = 0; trial < 60; ++trial) {
    const Graph g = random_graph(1 + static_cast<int>(rng() % 10), 0.5, rng);
    const auto a = lva_value(g, 6), b = lva_value(g, 6, sat);
    REQUIRE(a);
    REQUIRE(b);
    CHECK(a->value == b->value);
  }
  CHECK_FALSE(decide_lva(named::complete(5), 2, sat).has_value());
  CHECK(decide_lva(named::dodecahedron(), 2, sat).has_value());
}

TEST_CASE("run_search") {
  const std::string k5 = emit_graph6(named::complete(5));
  const std::string dod = emit_graph6(named::dodecahedron());
  const auto s = run("# corpus\n" + k5 + "\n\n" + dod + "\nbad!\n");
  CHECK(s.lines == 3);
  CHECK(s.errors == 1);
  CHECK(s.yes == 1);
  CHECK(s.no == 1);
  REQUIRE(s.counterexamples().size() == 1);
  CHECK(s.counterexamples()[0].line == 2);
  CHECK(s.counterexamples()[0].text == k5);
  REQUIRE(s.records.size() == 3);
  CHECK(s.records[2].status == SearchRecord::Status::Error);

  SearchOptions filt;
  filt.max_degree = 3;
  filt.min_connectivity = 3;
  const auto f = run(k5 + "\n" + dod + "\n" + emit_graph6(named::cycle(6)) + "\n", filt);
  CHECK(f.filtered == 2);
  CHECK(f.yes == 1);
  CHECK(f.counterexamples().empty());

  CHECK(run("").lines == 0);
}

TEST_CASE("threaded search keeps input order") {
  std::mt19937_64 rng(62);
  std::string text;
  for (int i = 0; i < 80; ++i) text += emit_graph6(random_graph(3 + static_cast<int>(rng() % 8), 0.6, rng)) + "\n";
  SearchOptions one, many;
  many.threads = 4;
  const auto a = run(text, one), b = run(text, many);
  REQUIRE(a.records.size() == b.records.size());
  for (std::size_t i = 0; i < a.records.size(); ++i) {
    CHECK(a.records[i].line == b.records[i].line);
    CHECK(a.records[i].status == b.records[i].status);
  }
}

TEST_CASE("thread count from the environment") {
  ::setenv("LVA_LAB_THREADS", "3", 1);
  CHECK(default_thread_count() == 3);
  ::setenv("LVA_LAB_THREADS", "zero", 1);
  CHECK(default_thread_count() >= 1);
  ::unsetenv("LVA_LAB_THREADS");
  CHECK(default_thread_count() >= 1);
}

}  // TEST_SUITE
