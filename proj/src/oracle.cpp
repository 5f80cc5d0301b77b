#include "lva/oracle.hpp"

#include <algorithm>
#include <cassert>
#include <numeric>

#include "lva/predicates.hpp"

namespace lva {

namespace {

class Search {
 public:
  Search(const Graph& g, int k, std::vector<Vertex> order, std::vector<int> fixed = {})
      : g_(g), k_(k), order_(std::move(order)), fixed_(std::move(fixed)) {
    const auto n = static_cast<std::size_t>(g.order());
    color_.assign(n, -1);
    deg_.assign(n, 0);
    parent_.resize(n);
    std::iota(parent_.begin(), parent_.end(), 0);
    rank_.assign(n, 1);
  }

  bool run() { return place(0, -1); }
  const std::vector<int>& colors() const { return color_; }

 private:
  int find(int x) const {
    while (parent_[x] != x) x = parent_[x];
    return x;
  }

  bool place(std::size_t i, int max_used) {
    if (i == order_.size()) return true;
    const Vertex v = order_[i];
    // First-use symmetry breaking only holds when nothing is precoloured.
    int lo = 0, hi = fixed_.empty() ? std::min(k_ - 1, max_used + 1) : k_ - 1;
    if (!fixed_.empty() && fixed_[v] >= 0) lo = hi = fixed_[v];
    for (int c = lo; c <= hi; ++c) {
      const std::size_t mark = trail_.size();
      if (assign(v, c) && place(i + 1, std::max(max_used, c))) return true;
      undo(v, mark);
    }
    return false;
  }

  // Colours v with c, recording union-find changes on the trail. Returns false
  // if the class stops being a linear forest; caller undoes either way.
  bool assign(Vertex v, int c) {
    color_[v] = c;
    int same = 0;
    for (Vertex w : g_.neighbors(v)) {
      if (color_[w] != c) continue;
      if (++same > 2 || deg_[w] >= 2) return false;
    }
    for (Vertex w : g_.neighbors(v)) {
      if (color_[w] != c) continue;
      ++deg_[v];
      ++deg_[w];
      touched_.push_back(w);
      int a = find(v), b = find(w);
      if (a == b) return false;
      if (rank_[a] < rank_[b]) std::swap(a, b);
      parent_[b] = a;
      rank_[a] += rank_[b];
      trail_.push_back(b);
    }
    return true;
  }

  void undo(Vertex v, std::size_t mark) {
    while (trail_.size() > mark) {
      int b = trail_.back();
      trail_.pop_back();
      int a = parent_[b];
      rank_[a] -= rank_[b];
      parent_[b] = b;
    }
    while (!touched_.empty() && deg_[v] > 0) {
      --deg_[touched_.back()];
      --deg_[v];
      touched_.pop_back();
    }
    color_[v] = -1;
  }

  const Graph& g_;
  int k_;
  std::vector<Vertex> order_;
  std::vector<int> fixed_;
  std::vector<int> color_, deg_, parent_, rank_;
  std::vector<int> trail_;
  std::vector<Vertex> touched_;
};

void guard(const Graph& g, const OracleLimits& limits) {
  if (g.order() > limits.max_vertices)
    throw InstanceTooLarge("graph has " + std::to_string(g.order()) + " vertices; oracle limit is " +
                           std::to_string(limits.max_vertices));
}

}  // namespace

std::optional<Partition> find_legal_partition(const Graph& g, int k, const OracleLimits& limits) {
  if (k < 1) throw std::invalid_argument("k must be at least 1");
  guard(g, limits);
  std::vector<Vertex> order(static_cast<std::size_t>(g.order()));
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(), [&](Vertex a, Vertex b) { return g.degree(a) > g.degree(b); });
  Search s(g, k, std::move(order));
  if (!s.run()) return std::nullopt;
  Partition p(k, s.colors());
#ifndef NDEBUG
  assert(is_legal_partition(g, p));
#endif
  return p;
}

std::optional<Partition> extend_partition(const Graph& g, int k, const std::vector<int>& fixed) {
  if (k < 1) throw std::invalid_argument("k must be at least 1");
  if (static_cast<int>(fixed.size()) != g.order()) throw std::invalid_argument("precolouring size mismatch");
  std::vector<Vertex> order;
  std::vector<char> queued(fixed.size(), 0);
  for (Vertex v = 0; v < g.order(); ++v)
    if (fixed[v] >= 0) {
      if (fixed[v] >= k) throw std::invalid_argument("precoloured class out of range");
      order.push_back(v);
      queued[v] = 1;
    }
  // Free vertices one free component at a time, breadth-first within each,
  // so independent gadgets are not interleaved.
  for (Vertex s0 = 0; s0 < g.order(); ++s0) {
    if (queued[s0]) continue;
    std::size_t head = order.size();
    order.push_back(s0);
    queued[s0] = 1;
    for (; head < order.size(); ++head)
      for (Vertex w : g.neighbors(order[head]))
        if (!queued[w]) {
          queued[w] = 1;
          order.push_back(w);
        }
  }
  std::vector<int> f = fixed;
  if (std::none_of(f.begin(), f.end(), [](int c) { return c >= 0; })) f.clear();
  Search s(g, k, std::move(order), std::move(f));
  if (!s.run()) return std::nullopt;
  return Partition(k, s.colors());
}

std::optional<LvaResult> lva_exact(const Graph& g, int k_max, const OracleLimits& limits) {
  if (k_max < 1) throw std::invalid_argument("k_max must be at least 1");
  guard(g, limits);
  if (g.empty()) return LvaResult{0, Partition(0, {})};

  std::vector<int> colors(static_cast<std::size_t>(g.order()), 0);
  int value = 1;
  for (const auto& comp : connected_components(g)) {
    const Graph h = induced_subgraph(g, comp);
    std::optional<Partition> found;
    // Components are independent, so each can start from the running maximum.
    for (int k = value; k <= k_max && !found; ++k) {
      found = find_legal_partition(h, k, limits);
      if (found) value = std::max(value, k);
    }
    if (!found) return std::nullopt;
    for (std::size_t i = 0; i < comp.size(); ++i) colors[comp[i]] = (*found)[static_cast<Vertex>(i)];
  }
  return LvaResult{value, Partition(value, std::move(colors))};
}

int matsumoto_bound(const Graph& g) {
  if (g.empty()) throw std::invalid_argument("matsumoto_bound: empty graph");
  if (!is_connected(g)) throw std::invalid_argument("matsumoto_bound: graph is disconnected");
  return 1 + max_degree(g) / 2;
}

bool check_matsumoto_equality(const Graph& g, const OracleLimits& limits) {
  const int bound = matsumoto_bound(g);
  if (max_degree(g) % 2 != 0) throw std::invalid_argument("check_matsumoto_equality: maximum degree is odd");
  auto r = lva_exact(g, bound, limits);
  const bool attains = r && r->value == bound;
  return attains == (is_cycle_graph(g) || is_complete_graph(g));
}

}  // namespace lva
