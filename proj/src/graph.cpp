#include "lva/graph.hpp"

#include <algorithm>
#include <numeric>

namespace lva {

GraphBuilder::GraphBuilder(int n) {
  if (n < 0) throw std::invalid_argument("vertex count must be non-negative");
  adjacency_.resize(static_cast<std::size_t>(n));
  labels_.resize(static_cast<std::size_t>(n));
}

Vertex GraphBuilder::add_vertex(std::string label) {
  adjacency_.emplace_back();
  labels_.push_back(std::move(label));
  return order() - 1;
}

void GraphBuilder::check(Vertex v) const {
  if (v < 0 || v >= order())
    throw std::invalid_argument("vertex " + std::to_string(v) + " out of range");
}

void GraphBuilder::add_edge(Vertex u, Vertex v) {
  check(u);
  check(v);
  if (u == v) throw std::invalid_argument("self-loop at vertex " + std::to_string(u));
  if (has_edge(u, v)) return;
  adjacency_[u].push_back(v);
  adjacency_[v].push_back(u);
}

bool GraphBuilder::has_edge(Vertex u, Vertex v) const {
  check(u);
  check(v);
  const auto& a = adjacency_[u];
  return std::find(a.begin(), a.end(), v) != a.end();
}

void GraphBuilder::set_label(Vertex v, std::string label) {
  check(v);
  labels_[v] = std::move(label);
}

const std::string& GraphBuilder::label(Vertex v) const {
  check(v);
  return labels_[v];
}

Graph GraphBuilder::build() const {
  Graph g;
  g.n_ = order();
  g.words_ = (static_cast<std::size_t>(g.n_) + 63) / 64;
  g.rows_.assign(static_cast<std::size_t>(g.n_) * g.words_, 0);
  g.offsets_.assign(static_cast<std::size_t>(g.n_) + 1, 0);
  for (Vertex v = 0; v < g.n_; ++v)
    g.offsets_[v + 1] = g.offsets_[v] + static_cast<int>(adjacency_[v].size());
  g.adjacency_.reserve(static_cast<std::size_t>(g.offsets_.back()));
  for (Vertex v = 0; v < g.n_; ++v) {
    std::vector<Vertex> nb = adjacency_[v];
    std::sort(nb.begin(), nb.end());
    for (Vertex u : nb) {
      g.adjacency_.push_back(u);
      g.rows_[static_cast<std::size_t>(v) * g.words_ + (u >> 6)] |= std::uint64_t{1} << (u & 63);
    }
  }
  g.m_ = g.offsets_.back() / 2;
  g.labels_ = labels_;
  return g;
}

Graph Graph::from_edges(int n, std::span<const Edge> edges) {
  GraphBuilder b(n);
  for (auto [u, v] : edges) {
    if (u != v && u >= 0 && v >= 0 && u < n && v < n && b.has_edge(u, v))
      throw std::invalid_argument("parallel edge {" + std::to_string(u) + "," +
                                  std::to_string(v) + "}");
    b.add_edge(u, v);
  }
  return b.build();
}

std::vector<Edge> Graph::edges() const {
  std::vector<Edge> out;
  out.reserve(static_cast<std::size_t>(m_));
  for (Vertex u = 0; u < n_; ++u)
    for (Vertex v : neighbors(u))
      if (u < v) out.emplace_back(u, v);
  return out;
}

const std::string& Graph::label(Vertex v) const { return labels_.at(static_cast<std::size_t>(v)); }

bool Graph::has_labels() const noexcept {
  return std::any_of(labels_.begin(), labels_.end(), [](const std::string& s) { return !s.empty(); });
}

std::optional<Vertex> Graph::find_label(std::string_view label) const {
  for (Vertex v = 0; v < n_; ++v)
    if (labels_[v] == label) return v;
  return std::nullopt;
}

bool operator==(const Graph& a, const Graph& b) {
  return a.n_ == b.n_ && a.m_ == b.m_ && a.offsets_ == b.offsets_ && a.adjacency_ == b.adjacency_ &&
         a.labels_ == b.labels_;
}

VertexSet::VertexSet(int universe, std::vector<Vertex> members)
    : universe_(universe), members_(std::move(members)), mask_(static_cast<std::size_t>(universe), 0) {
  if (universe < 0) throw std::invalid_argument("negative universe size");
  std::sort(members_.begin(), members_.end());
  members_.erase(std::unique(members_.begin(), members_.end()), members_.end());
  for (Vertex v : members_) {
    if (v < 0 || v >= universe)
      throw std::invalid_argument("vertex " + std::to_string(v) + " outside graph of order " +
                                  std::to_string(universe));
    mask_[static_cast<std::size_t>(v)] = 1;
  }
}

VertexSet VertexSet::all(int universe) {
  std::vector<Vertex> m(static_cast<std::size_t>(universe));
  std::iota(m.begin(), m.end(), 0);
  return VertexSet(universe, std::move(m));
}

Partition::Partition(int k, std::vector<int> classes) : k_(k), classes_(std::move(classes)) {
  if (k < 1 && !(k == 0 && classes_.empty()))
    throw std::invalid_argument("partition needs at least one class");
  for (int c : classes_)
    if (c < 0 || c >= k)
      throw std::invalid_argument("class " + std::to_string(c) + " outside [0," + std::to_string(k) + ")");
}

VertexSet Partition::members(int cls) const {
  std::vector<Vertex> m;
  for (Vertex v = 0; v < order(); ++v)
    if (classes_[static_cast<std::size_t>(v)] == cls) m.push_back(v);
  return VertexSet(order(), std::move(m));
}

int Partition::used_classes() const {
  std::vector<char> seen(static_cast<std::size_t>(k_), 0);
  for (int c : classes_) seen[static_cast<std::size_t>(c)] = 1;
  return static_cast<int>(std::count(seen.begin(), seen.end(), 1));
}

int max_degree(const Graph& g) {
  int d = 0;
  for (Vertex v = 0; v < g.order(); ++v) d = std::max(d, g.degree(v));
  return d;
}

std::vector<std::vector<Vertex>> connected_components(const Graph& g) {
  std::vector<int> comp(static_cast<std::size_t>(g.order()), -1);
  std::vector<std::vector<Vertex>> out;
  std::vector<Vertex> stack;
  for (Vertex s = 0; s < g.order(); ++s) {
    if (comp[s] >= 0) continue;
    const int id = static_cast<int>(out.size());
    out.emplace_back();
    comp[s] = id;
    stack.push_back(s);
    while (!stack.empty()) {
      Vertex v = stack.back();
      stack.pop_back();
      out.back().push_back(v);
      for (Vertex u : g.neighbors(v))
        if (comp[u] < 0) {
          comp[u] = id;
          stack.push_back(u);
        }
    }
    std::sort(out.back().begin(), out.back().end());
  }
  return out;
}

bool is_connected(const Graph& g) { return g.order() > 0 && connected_components(g).size() == 1; }

Graph induced_subgraph(const Graph& g, std::span<const Vertex> vertices) {
  std::vector<int> pos(static_cast<std::size_t>(g.order()), -1);
  GraphBuilder b;
  for (Vertex v : vertices) {
    if (pos.at(static_cast<std::size_t>(v)) >= 0) throw std::invalid_argument("repeated vertex in selection");
    pos[v] = b.add_vertex(g.label(v));
  }
  for (Vertex v : vertices)
    for (Vertex u : g.neighbors(v))
      if (pos[u] >= 0 && pos[v] < pos[u]) b.add_edge(pos[v], pos[u]);
  return b.build();
}

Graph permuted(const Graph& g, std::span<const Vertex> perm) {
  if (static_cast<int>(perm.size()) != g.order()) throw std::invalid_argument("permutation size mismatch");
  GraphBuilder b(g.order());
  std::vector<char> hit(perm.size(), 0);
  for (Vertex v = 0; v < g.order(); ++v) {
    Vertex p = perm[v];
    if (p < 0 || p >= g.order() || hit[p]) throw std::invalid_argument("not a permutation");
    hit[p] = 1;
    b.set_label(p, g.label(v));
  }
  for (auto [u, v] : g.edges()) b.add_edge(perm[u], perm[v]);
  return b.build();
}

bool is_cycle_graph(const Graph& g) {
  if (g.order() < 3 || g.size() != g.order()) return false;
  for (Vertex v = 0; v < g.order(); ++v)
    if (g.degree(v) != 2) return false;
  return is_connected(g);
}

bool is_complete_graph(const Graph& g) {
  const long n = g.order();
  return n > 0 && g.size() == n * (n - 1) / 2;
}

namespace named {

Graph complete(int n) {
  GraphBuilder b(n);
  for (Vertex u = 0; u < n; ++u)
    for (Vertex v = u + 1; v < n; ++v) b.add_edge(u, v);
  return b.build();
}

Graph cycle(int n) {
  if (n < 3) throw std::invalid_argument("a cycle needs at least 3 vertices");
  GraphBuilder b(n);
  for (Vertex v = 0; v < n; ++v) b.add_edge(v, (v + 1) % n);
  return b.build();
}

Graph path(int n) {
  GraphBuilder b(n);
  for (Vertex v = 0; v + 1 < n; ++v) b.add_edge(v, v + 1);
  return b.build();
}

Graph star(int leaves) {
  GraphBuilder b(leaves + 1);
  for (Vertex v = 1; v <= leaves; ++v) b.add_edge(0, v);
  return b.build();
}

Graph empty(int n) { return GraphBuilder(n).build(); }

Graph dodecahedron() {
  // Outer 5-cycle, middle 10-cycle, inner 5-cycle.
  GraphBuilder b(20);
  for (int i = 0; i < 5; ++i) {
    b.add_edge(i, (i + 1) % 5);
    b.add_edge(i, 5 + 2 * i);
    b.add_edge(15 + i, 15 + (i + 1) % 5);
    b.add_edge(15 + i, 5 + (2 * i + 1) % 10);
  }
  for (int i = 0; i < 10; ++i) b.add_edge(5 + i, 5 + (i + 1) % 10);
  return b.build();
}

Graph octahedron() {
  GraphBuilder b(6);
  for (Vertex u = 0; u < 6; ++u)
    for (Vertex v = u + 1; v < 6; ++v)
      if (v != u + 3) b.add_edge(u, v);
  return b.build();
}

}  // namespace named

}  // namespace lva
