#include "lva/predicates.hpp"

#include <numeric>

namespace lva {

namespace {

void check_universe(const Graph& g, const VertexSet& u) {
  if (u.universe() != g.order()) throw std::invalid_argument("vertex set belongs to a graph of different order");
}

int inner_degree(const Graph& g, const VertexSet& u, Vertex v) {
  int d = 0;
  for (Vertex w : g.neighbors(v)) d += u.contains(w);
  return d;
}

int find(std::vector<int>& p, int x) {
  while (p[x] != x) x = p[x] = p[p[x]];
  return x;
}

// G[U] has no cycle.
bool acyclic(const Graph& g, const VertexSet& u) {
  std::vector<int> parent(static_cast<std::size_t>(g.order()));
  std::iota(parent.begin(), parent.end(), 0);
  for (Vertex v : u.members())
    for (Vertex w : g.neighbors(v)) {
      if (w <= v || !u.contains(w)) continue;
      int a = find(parent, v), b = find(parent, w);
      if (a == b) return false;
      parent[a] = b;
    }
  return true;
}

}  // namespace

bool conn(const Graph& g, const VertexSet& u) {
  check_universe(g, u);
  if (u.empty()) throw std::invalid_argument("conn: empty vertex set");
  std::vector<char> seen(static_cast<std::size_t>(g.order()), 0);
  std::vector<Vertex> stack{u.members().front()};
  seen[stack.back()] = 1;
  std::size_t reached = 1;
  while (!stack.empty()) {
    Vertex v = stack.back();
    stack.pop_back();
    for (Vertex w : g.neighbors(v))
      if (u.contains(w) && !seen[w]) {
        seen[w] = 1;
        ++reached;
        stack.push_back(w);
      }
  }
  return reached == u.size();
}

bool cycle_set(const Graph& g, const VertexSet& u) {
  check_universe(g, u);
  for (Vertex v : u.members())
    if (inner_degree(g, u, v) != 2) return false;
  return true;
}

bool cycle(const Graph& g, const VertexSet& u) { return !u.empty() && cycle_set(g, u) && conn(g, u); }

bool star(const Graph& g, const VertexSet& u) {
  check_universe(g, u);
  for (Vertex v : u.members())
    if (inner_degree(g, u, v) >= 3) return true;
  return false;
}

bool path_set(const Graph& g, const VertexSet& u) {
  check_universe(g, u);
  for (Vertex v : u.members())
    if (inner_degree(g, u, v) > 2) return false;
  return acyclic(g, u);
}

bool is_legal_partition(const Graph& g, const Partition& p) {
  if (p.order() != g.order()) throw std::invalid_argument("partition does not cover the graph's vertices");
  for (int c = 0; c < p.k(); ++c)
    if (!path_set(g, p.members(c))) return false;
  return true;
}

namespace literal {

namespace {

constexpr std::size_t kLimit = 20;

std::vector<Vertex> subset(std::span<const Vertex> m, std::uint32_t mask) {
  std::vector<Vertex> out;
  for (std::size_t i = 0; i < m.size(); ++i)
    if (mask >> i & 1U) out.push_back(m[i]);
  return out;
}

}  // namespace

bool conn(const Graph& g, const VertexSet& u) {
  check_universe(g, u);
  if (u.empty()) throw std::invalid_argument("conn: empty vertex set");
  if (u.size() > kLimit) throw std::invalid_argument("literal::conn: set too large");
  auto m = u.members();
  const std::uint32_t full = (std::uint32_t{1} << m.size()) - 1;
  // Every nonempty proper subset has an edge leaving it within U.
  for (std::uint32_t s = 1; s < full; ++s) {
    bool crossing = false;
    for (std::size_t i = 0; i < m.size() && !crossing; ++i) {
      if (!(s >> i & 1U)) continue;
      for (std::size_t j = 0; j < m.size(); ++j)
        if (!(s >> j & 1U) && g.adjacent(m[i], m[j])) {
          crossing = true;
          break;
        }
    }
    if (!crossing) return false;
  }
  return true;
}

bool path_set(const Graph& g, const VertexSet& u) {
  check_universe(g, u);
  if (u.size() > kLimit) throw std::invalid_argument("literal::path_set: set too large");
  auto m = u.members();
  const std::uint32_t full = (std::uint32_t{1} << m.size()) - 1;
  for (std::uint32_t s = 1; s <= full && s != 0; ++s) {
    VertexSet sub(g.order(), subset(m, s));
    if (lva::star(g, sub)) return false;
    if (lva::cycle_set(g, sub) && literal::conn(g, sub)) return false;
  }
  return true;
}

}  // namespace literal

}  // namespace lva
