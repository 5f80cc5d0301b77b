#pragma once

#include "lva/graph.hpp"

namespace lva {

/// G[U] is connected. Throws std::invalid_argument for empty U.
bool conn(const Graph& g, const VertexSet& u);
/// Every vertex of U has exactly two neighbours in U.
bool cycle_set(const Graph& g, const VertexSet& u);
/// G[U] is a single cycle.
bool cycle(const Graph& g, const VertexSet& u);
/// Some vertex of U has at least three neighbours in U.
bool star(const Graph& g, const VertexSet& u);
/// G[U] is a linear forest: in-set degree <= 2 and acyclic.
bool path_set(const Graph& g, const VertexSet& u);

/// Every class of `p` induces a linear forest. Throws std::invalid_argument if
/// the partition does not cover exactly the vertices of `g`.
bool is_legal_partition(const Graph& g, const Partition& p);

// Literal subset-quantified definitions. Exponential in |U|; for
// cross-checking the fast forms only. Throw std::invalid_argument if |U| > 20.
namespace literal {
bool conn(const Graph& g, const VertexSet& u);
bool path_set(const Graph& g, const VertexSet& u);
}  // namespace literal

}  // namespace lva
