#include <doctest.h>

#include <algorithm>
#include <random>
#include <set>

#include "lva/enumerate.hpp"
#include "lva/gadgetlab.hpp"
#include "lva/reduction.hpp"

using namespace lva;

TEST_SUITE("gadgetlab") {

TEST_CASE("anchored block B") {
  const Graph b = basic_block_b();
  const auto r = enumerate_legal(b, {anchor_at(b, "1", kGray)});
  CHECK(r.examined == 64);
  REQUIRE(r.unique());
  CHECK(r.forced.size() == 7);
  CHECK(r.legal[0][*b.find_label("2")] == kWhite);
  CHECK(r.legal[0][*b.find_label("4")] == kWhite);
}

TEST_CASE("small counts") {
  // K5-: one class is {1,2,x}, the other the remaining pair.
  const auto k = enumerate_legal(k5_minus(), {});
  CHECK(k.legal.size() == 6);
  for (const auto& col : k.legal) CHECK(col[0] == col[1]);
  CHECK(enumerate_legal(named::cycle(3), {}).legal.size() == 6);
  CHECK(enumerate_legal(named::complete(5), {}).legal.empty());
  CHECK(enumerate_legal(Graph{}, {}).legal.size() == 1);
}

TEST_CASE("colour swap symmetry without anchors") {
  std::mt19937_64 rng(51);
  for (int trial = 0; trial < 30; ++trial) {
    const Graph g = random_graph(1 + static_cast<int>(rng() % 10), 0.5, rng);
    const auto r = enumerate_legal(g, {});
    CHECK(r.legal.size() % 2 == 0);
    std::set<std::vector<int>> all(r.legal.begin(), r.legal.end());
    for (auto col : r.legal) {
      for (int& c : col) c = 1 - c;
      CHECK(all.count(col) == 1);
    }
  }
}

TEST_CASE("threads do not change the result") {
  const Graph g = starter_gadget();
  EnumerateOptions one, four;
  four.threads = 4;
  const auto a = enumerate_legal(g, {}, one);
  auto b = enumerate_legal(g, {}, four);
  std::sort(b.legal.begin(), b.legal.end());
  auto al = a.legal;
  std::sort(al.begin(), al.end());
  CHECK(al == b.legal);
}

TEST_CASE("argument checks") {
  const Graph b = basic_block_b();
  CHECK_THROWS_AS(enumerate_legal(b, {{0, kWhite}, {0, kGray}}), std::invalid_argument);
  CHECK_THROWS_AS(enumerate_legal(b, {{7, kWhite}}), std::invalid_argument);
  CHECK_THROWS_AS(enumerate_legal(b, {{0, 2}}), std::invalid_argument);
  EnumerateOptions small;
  small.max_vertices = 6;
  CHECK_THROWS_AS(enumerate_legal(b, {}, small), std::invalid_argument);
  CHECK_THROWS_AS(anchor_at(b, "nope", kWhite), std::invalid_argument);
  CHECK_THROWS_AS(verify_lemma("L9"), std::invalid_argument);
}

TEST_CASE("lemma certificates") {
  for (const auto& id : lemma_ids()) {
    const auto c = verify_lemma(id);
    CHECK_MESSAGE(c.pass, c.summary());
    CHECK(c.to_json().find("\"verdict\": \"pass\"") != std::string::npos);
  }
  CHECK(verify_lemma("L3").report.legal.size() == 7);
  CHECK(verify_lemma("L4").report.unique());
  CHECK(verify_lemma("L6").report.unique());
}

}  // TEST_SUITE
