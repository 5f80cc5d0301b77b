#pragma once

#include <cstddef>
#include <cstdint>
#include <map>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace lva {

using Vertex = int;
using Edge = std::pair<Vertex, Vertex>;

// Raised by every text parser in the library. `offset` is a byte offset for
// single-line formats and a 1-based line number for line-oriented ones.
class ParseError : public std::runtime_error {
 public:
  ParseError(const std::string& what, std::size_t offset)
      : std::runtime_error(what), offset_(offset) {}
  std::size_t offset() const noexcept { return offset_; }

 private:
  std::size_t offset_;
};

class Graph;

/// Mutable staging area for a Graph. Vertices are dense ids 0..n-1; labels are
/// opaque strings with no effect on any predicate.
class GraphBuilder {
 public:
  GraphBuilder() = default;
  explicit GraphBuilder(int n);

  Vertex add_vertex(std::string label = {});
  /// Throws std::invalid_argument on self-loops or out-of-range ids. Adding an
  /// existing edge again is a no-op.
  void add_edge(Vertex u, Vertex v);
  bool has_edge(Vertex u, Vertex v) const;
  void set_label(Vertex v, std::string label);
  const std::string& label(Vertex v) const;
  int order() const noexcept { return static_cast<int>(adjacency_.size()); }

  Graph build() const;

 private:
  void check(Vertex v) const;

  std::vector<std::vector<Vertex>> adjacency_;
  std::vector<std::string> labels_;
};

/// Undirected simple graph, immutable after construction.
class Graph {
 public:
  Graph() = default;

  static Graph from_edges(int n, std::span<const Edge> edges);

  int order() const noexcept { return n_; }
  int size() const noexcept { return m_; }
  bool empty() const noexcept { return n_ == 0; }

  bool adjacent(Vertex u, Vertex v) const noexcept {
    return (rows_[static_cast<std::size_t>(u) * words_ + (v >> 6)] >> (v & 63)) & 1U;
  }
  std::span<const Vertex> neighbors(Vertex v) const noexcept {
    return {adjacency_.data() + offsets_[v], adjacency_.data() + offsets_[v + 1]};
  }
  int degree(Vertex v) const noexcept { return offsets_[v + 1] - offsets_[v]; }

  /// Edges as (u, v) with u < v, in lexicographic order.
  std::vector<Edge> edges() const;

  const std::string& label(Vertex v) const;
  bool has_labels() const noexcept;
  std::optional<Vertex> find_label(std::string_view label) const;

  /// Structural equality and equal labels.
  friend bool operator==(const Graph& a, const Graph& b);

 private:
  friend class GraphBuilder;

  int n_ = 0;
  int m_ = 0;
  std::size_t words_ = 0;
  std::vector<int> offsets_{0};
  std::vector<Vertex> adjacency_;
  std::vector<std::uint64_t> rows_;
  std::vector<std::string> labels_;
};

/// A subset of the vertices of some graph with `universe` vertices.
class VertexSet {
 public:
  VertexSet() = default;
  /// Members are deduplicated and sorted; throws if any id is outside
  /// [0, universe).
  VertexSet(int universe, std::vector<Vertex> members);

  static VertexSet all(int universe);

  int universe() const noexcept { return universe_; }
  std::span<const Vertex> members() const noexcept { return members_; }
  std::size_t size() const noexcept { return members_.size(); }
  bool empty() const noexcept { return members_.empty(); }
  bool contains(Vertex v) const noexcept {
    return v >= 0 && v < universe_ && mask_[static_cast<std::size_t>(v)] != 0;
  }

 private:
  int universe_ = 0;
  std::vector<Vertex> members_;
  std::vector<char> mask_;
};

/// Assignment of each vertex to one of `k` classes numbered 0..k-1.
class Partition {
 public:
  Partition() = default;
  /// Throws std::invalid_argument if k < 1 or a class is outside [0, k).
  /// The empty partition of the empty graph has k = 0.
  Partition(int k, std::vector<int> classes);

  int k() const noexcept { return k_; }
  int order() const noexcept { return static_cast<int>(classes_.size()); }
  int operator[](Vertex v) const noexcept { return classes_[static_cast<std::size_t>(v)]; }
  std::span<const int> classes() const noexcept { return classes_; }
  VertexSet members(int cls) const;
  /// Number of classes that are actually used.
  int used_classes() const;

  friend bool operator==(const Partition&, const Partition&) = default;

 private:
  int k_ = 0;
  std::vector<int> classes_;
};

int max_degree(const Graph& g);
bool is_connected(const Graph& g);
/// Connected components as sorted vertex lists, ordered by smallest member.
std::vector<std::vector<Vertex>> connected_components(const Graph& g);
/// G[U] with vertices renumbered in the order of `vertices`; labels carried.
Graph induced_subgraph(const Graph& g, std::span<const Vertex> vertices);
/// Relabel: vertex v of `g` becomes `perm[v]` in the result.
Graph permuted(const Graph& g, std::span<const Vertex> perm);

bool is_cycle_graph(const Graph& g);
bool is_complete_graph(const Graph& g);

// Named small graphs used throughout tests and examples.
namespace named {
Graph complete(int n);
Graph cycle(int n);
Graph path(int n);
Graph star(int leaves);
Graph empty(int n);
Graph dodecahedron();
Graph octahedron();
}  // namespace named

}  // namespace lva
