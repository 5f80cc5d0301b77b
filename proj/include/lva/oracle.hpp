#pragma once

#include <cstdint>
#include <optional>

#include "lva/graph.hpp"

namespace lva {

struct LvaResult {
  int value = 0;      // 0 only for the empty graph
  Partition witness;  // legal, with exactly `value` classes
};

struct OracleLimits {
  int max_vertices = 20;
};

/// Thrown when an input exceeds OracleLimits::max_vertices.
class InstanceTooLarge : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A legal k-partition of g, or nullopt if none exists. Backtracking with
/// descending-degree order and first-use symmetry breaking.
std::optional<Partition> find_legal_partition(const Graph& g, int k, const OracleLimits& limits = {});

/// Extend a partial colouring (`fixed[v]` in [0,k) or -1) to a legal
/// k-partition. Free vertices are tried in breadth-first order from the fixed
/// ones. No size guard: meant for graphs whose free part is heavily forced.
std::optional<Partition> extend_partition(const Graph& g, int k, const std::vector<int>& fixed);

/// Smallest k <= k_max admitting a legal partition, or nullopt if lva > k_max.
/// Disconnected graphs are solved per component.
std::optional<LvaResult> lva_exact(const Graph& g, int k_max, const OracleLimits& limits = {});

/// 1 + floor(Delta/2). Throws for empty or disconnected graphs.
int matsumoto_bound(const Graph& g);

/// Truth of  [lva(g) == bound]  <=>  [g is a cycle or complete]  for this g.
/// Requires g connected, nonempty, with even maximum degree.
bool check_matsumoto_equality(const Graph& g, const OracleLimits& limits = {});

}  // namespace lva
