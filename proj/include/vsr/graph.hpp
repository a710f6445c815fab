#pragma once

#include <cstddef>
#include <span>
#include <utility>
#include <vector>

namespace vsr {

using Vertex = int;
using Edge = std::pair<Vertex, Vertex>;

/// Simple undirected graph over the dense vertex ids 0..n-1.
///
/// Immutable once built. Neighbour lists are sorted, so iteration order is
/// deterministic everywhere downstream.
class Graph {
 public:
  Graph() = default;
  explicit Graph(int vertex_count);
  /// Throws InputError on self-loops, duplicate edges or out-of-range ids.
  Graph(int vertex_count, std::span<const Edge> edges);
  Graph(int vertex_count, std::initializer_list<Edge> edges);

  int vertex_count() const noexcept { return static_cast<int>(adjacency_.size()); }
  std::size_t edge_count() const noexcept { return edge_count_; }

  bool contains(Vertex v) const noexcept { return v >= 0 && v < vertex_count(); }
  const std::vector<Vertex>& neighbors(Vertex v) const { return adjacency_.at(static_cast<std::size_t>(v)); }
  std::size_t degree(Vertex v) const { return neighbors(v).size(); }
  bool adjacent(Vertex a, Vertex b) const;

  /// All edges as (low, high) pairs in lexicographic order.
  std::vector<Edge> edges() const;

  friend bool operator==(const Graph&, const Graph&) = default;

 private:
  std::vector<std::vector<Vertex>> adjacency_;
  std::size_t edge_count_ = 0;
};

/// Marks the vertices reachable from `start` while avoiding `blocked`.
/// `blocked` has one entry per vertex; a blocked start yields an empty set.
std::vector<char> reachable_from(const Graph& g, Vertex start, std::span<const char> blocked);

bool is_connected(const Graph& g);

/// Longest shortest path. Throws InputError on a disconnected graph.
int diameter(const Graph& g);

/// Subgraph induced by `keep` (sorted, distinct), relabelled to 0..|keep|-1 in order.
Graph induced_subgraph(const Graph& g, std::span<const Vertex> keep);

/// Biconnected components as sorted vertex lists, plus the sorted cut vertices.
/// Bridges appear as two-vertex blocks; isolated vertices are not reported.
struct BlockStructure {
  std::vector<std::vector<Vertex>> blocks;
  std::vector<Vertex> cut_vertices;
};
BlockStructure biconnected_blocks(const Graph& g);

}  // namespace vsr
