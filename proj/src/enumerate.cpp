#include "lva/enumerate.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <numeric>
#include <unordered_set>

namespace lva {

namespace {

inline int bit_index(int i, int j) { return i > j ? i * (i - 1) / 2 + j : j * (j - 1) / 2 + i; }

// Stable colour refinement; returns a colour per vertex with colours ordered
// by an isomorphism-invariant key.
std::vector<int> refine(const Graph& g) {
  const int n = g.order();
  std::vector<int> col(static_cast<std::size_t>(n));
  for (Vertex v = 0; v < n; ++v) col[v] = g.degree(v);
  for (;;) {
    std::vector<std::pair<int, std::vector<int>>> key(static_cast<std::size_t>(n));
    for (Vertex v = 0; v < n; ++v) {
      key[v].first = col[v];
      for (Vertex w : g.neighbors(v)) key[v].second.push_back(col[w]);
      std::sort(key[v].second.begin(), key[v].second.end());
    }
    auto sorted = key;
    std::sort(sorted.begin(), sorted.end());
    sorted.erase(std::unique(sorted.begin(), sorted.end()), sorted.end());
    std::vector<int> next(static_cast<std::size_t>(n));
    for (Vertex v = 0; v < n; ++v)
      next[v] = static_cast<int>(std::lower_bound(sorted.begin(), sorted.end(), key[v]) - sorted.begin());
    int before = static_cast<int>(std::set<int>(col.begin(), col.end()).size());
    col = std::move(next);
    if (static_cast<int>(sorted.size()) == before) return col;
  }
}

}  // namespace

std::uint64_t canonical_code(const Graph& g) {
  const int n = g.order();
  if (n > 11) throw std::invalid_argument("canonical_code: n must be at most 11");
  const auto col = refine(g);
  // Cells in colour order; positions are assigned cell by cell.
  std::map<int, std::vector<Vertex>> cells;
  for (Vertex v = 0; v < n; ++v) cells[col[v]].push_back(v);
  std::vector<std::vector<Vertex>> cell_list;
  for (auto& [c, vs] : cells) cell_list.push_back(vs);

  std::vector<Vertex> order;  // order[pos] = vertex
  std::uint64_t best = UINT64_MAX;
  auto rec = [&](auto& self, std::size_t ci) -> void {
    if (ci == cell_list.size()) {
      std::uint64_t code = 0;
      for (int i = 1; i < n; ++i)
        for (int j = 0; j < i; ++j)
          if (g.adjacent(order[i], order[j])) code |= std::uint64_t{1} << bit_index(i, j);
      best = std::min(best, code);
      return;
    }
    auto cell = cell_list[ci];
    std::sort(cell.begin(), cell.end());
    do {
      order.insert(order.end(), cell.begin(), cell.end());
      self(self, ci + 1);
      order.resize(order.size() - cell.size());
    } while (std::next_permutation(cell.begin(), cell.end()));
  };
  rec(rec, 0);
  return n == 0 ? 0 : best;
}

Graph graph_from_code(int n, std::uint64_t code) {
  GraphBuilder b(n);
  for (int i = 1; i < n; ++i)
    for (int j = 0; j < i; ++j)
      if (code >> bit_index(i, j) & 1U) b.add_edge(j, i);
  return b.build();
}

std::vector<Graph> nonisomorphic_graphs(int n) {
  if (n < 0 || n > 10) throw std::invalid_argument("nonisomorphic_graphs: n must be in [0, 10]");
  if (n == 0) return {Graph{}};
  std::vector<std::uint64_t> layer{0};  // n = 1
  for (int m = 2; m <= n; ++m) {
    std::unordered_set<std::uint64_t> next;
    for (std::uint64_t code : layer) {
      for (std::uint32_t nb = 0; nb < (1U << (m - 1)); ++nb) {
        std::uint64_t c = code;
        for (int j = 0; j < m - 1; ++j)
          if (nb >> j & 1U) c |= std::uint64_t{1} << bit_index(m - 1, j);
        next.insert(canonical_code(graph_from_code(m, c)));
      }
    }
    layer.assign(next.begin(), next.end());
    std::sort(layer.begin(), layer.end());
  }
  std::vector<Graph> out;
  out.reserve(layer.size());
  for (auto c : layer) out.push_back(graph_from_code(n, c));
  return out;
}

std::vector<Graph> nonisomorphic_connected_graphs(int n) {
  std::vector<Graph> out;
  for (auto& g : nonisomorphic_graphs(n))
    if (is_connected(g)) out.push_back(std::move(g));
  return out;
}

Graph random_graph(int n, double p, std::mt19937_64& rng) {
  std::bernoulli_distribution coin(p);
  GraphBuilder b(n);
  for (Vertex u = 0; u < n; ++u)
    for (Vertex v = u + 1; v < n; ++v)
      if (coin(rng)) b.add_edge(u, v);
  return b.build();
}

Graph random_relabel(const Graph& g, std::mt19937_64& rng) {
  std::vector<Vertex> perm(static_cast<std::size_t>(g.order()));
  std::iota(perm.begin(), perm.end(), 0);
  std::shuffle(perm.begin(), perm.end(), rng);
  return permuted(g, perm);
}

}  // namespace lva
