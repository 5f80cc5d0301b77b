#pragma once

#include <cstdint>
#include <functional>
#include <random>
#include <vector>

#include "lva/graph.hpp"

namespace lva {

/// Canonical upper-triangle adjacency code (bit i*(i-1)/2 + j for j < i) under
/// colour-refined vertex orderings. Isomorphic graphs get equal codes. n <= 11.
std::uint64_t canonical_code(const Graph& g);
Graph graph_from_code(int n, std::uint64_t code);

/// One representative per isomorphism class on exactly n vertices (n <= 10),
/// built by adding a vertex to every class on n-1 vertices and deduplicating
/// canonical codes.
std::vector<Graph> nonisomorphic_graphs(int n);
std::vector<Graph> nonisomorphic_connected_graphs(int n);

/// G(n, p) with a caller-owned engine.
Graph random_graph(int n, double p, std::mt19937_64& rng);
/// Random vertex permutation of g.
Graph random_relabel(const Graph& g, std::mt19937_64& rng);

}  // namespace lva
