#include "vsr/graph.hpp"

#include <algorithm>
#include <deque>
#include <functional>
#include <string>

#include "vsr/error.hpp"

namespace vsr {

Graph::Graph(int vertex_count) {
  if (vertex_count < 0) throw InputError("negative vertex count");
  adjacency_.resize(static_cast<std::size_t>(vertex_count));
}

Graph::Graph(int vertex_count, std::span<const Edge> edges) : Graph(vertex_count) {
  for (auto [a, b] : edges) {
    if (!contains(a) || !contains(b)) {
      throw InputError("edge " + std::to_string(a) + "-" + std::to_string(b) + " has an endpoint out of range");
    }
    if (a == b) throw InputError("self-loop at " + std::to_string(a));
    adjacency_[static_cast<std::size_t>(a)].push_back(b);
    adjacency_[static_cast<std::size_t>(b)].push_back(a);
  }
  for (auto& list : adjacency_) {
    std::sort(list.begin(), list.end());
    if (std::adjacent_find(list.begin(), list.end()) != list.end()) throw InputError("duplicate edge");
  }
  edge_count_ = edges.size();
}

Graph::Graph(int vertex_count, std::initializer_list<Edge> edges)
    : Graph(vertex_count, std::span<const Edge>(edges.begin(), edges.size())) {}

bool Graph::adjacent(Vertex a, Vertex b) const {
  if (!contains(a) || !contains(b)) return false;
  const auto& list = neighbors(a);
  return std::binary_search(list.begin(), list.end(), b);
}

std::vector<Edge> Graph::edges() const {
  std::vector<Edge> out;
  out.reserve(edge_count_);
  for (Vertex a = 0; a < vertex_count(); ++a) {
    for (Vertex b : neighbors(a)) {
      if (a < b) out.emplace_back(a, b);
    }
  }
  return out;
}

std::vector<char> reachable_from(const Graph& g, Vertex start, std::span<const char> blocked) {
  std::vector<char> seen(static_cast<std::size_t>(g.vertex_count()), 0);
  if (blocked[static_cast<std::size_t>(start)]) return seen;
  std::vector<Vertex> stack{start};
  seen[static_cast<std::size_t>(start)] = 1;
  while (!stack.empty()) {
    Vertex v = stack.back();
    stack.pop_back();
    for (Vertex w : g.neighbors(v)) {
      auto i = static_cast<std::size_t>(w);
      if (!seen[i] && !blocked[i]) {
        seen[i] = 1;
        stack.push_back(w);
      }
    }
  }
  return seen;
}

bool is_connected(const Graph& g) {
  if (g.vertex_count() == 0) return true;
  std::vector<char> none(static_cast<std::size_t>(g.vertex_count()), 0);
  auto seen = reachable_from(g, 0, none);
  return std::all_of(seen.begin(), seen.end(), [](char c) { return c != 0; });
}

int diameter(const Graph& g) {
  int n = g.vertex_count();
  int best = 0;
  std::vector<int> dist(static_cast<std::size_t>(n));
  for (Vertex source = 0; source < n; ++source) {
    std::fill(dist.begin(), dist.end(), -1);
    std::deque<Vertex> queue{source};
    dist[static_cast<std::size_t>(source)] = 0;
    int reached = 1;
    while (!queue.empty()) {
      Vertex v = queue.front();
      queue.pop_front();
      for (Vertex w : g.neighbors(v)) {
        auto& d = dist[static_cast<std::size_t>(w)];
        if (d < 0) {
          d = dist[static_cast<std::size_t>(v)] + 1;
          best = std::max(best, d);
          ++reached;
          queue.push_back(w);
        }
      }
    }
    if (reached != n) throw InputError("diameter of a disconnected graph is undefined");
  }
  return best;
}

Graph induced_subgraph(const Graph& g, std::span<const Vertex> keep) {
  std::vector<int> index(static_cast<std::size_t>(g.vertex_count()), -1);
  for (std::size_t i = 0; i < keep.size(); ++i) {
    if (!g.contains(keep[i])) throw InputError("induced_subgraph: vertex out of range");
    index[static_cast<std::size_t>(keep[i])] = static_cast<int>(i);
  }
  std::vector<Edge> edges;
  for (std::size_t i = 0; i < keep.size(); ++i) {
    for (Vertex w : g.neighbors(keep[i])) {
      int j = index[static_cast<std::size_t>(w)];
      if (j > static_cast<int>(i)) edges.emplace_back(static_cast<int>(i), j);
    }
  }
  return Graph(static_cast<int>(keep.size()), edges);
}

// Iterative Hopcroft-Tarjan over an explicit stack of (vertex, next neighbour index).
BlockStructure biconnected_blocks(const Graph& g) {
  int n = g.vertex_count();
  std::vector<int> disc(static_cast<std::size_t>(n), -1), low(static_cast<std::size_t>(n), 0);
  std::vector<char> is_cut(static_cast<std::size_t>(n), 0);
  std::vector<Edge> edge_stack;
  BlockStructure out;
  int timer = 0;

  auto pop_block = [&](Vertex u, Vertex v) {
    std::vector<Vertex> block;
    while (true) {
      Edge e = edge_stack.back();
      edge_stack.pop_back();
      block.push_back(e.first);
      block.push_back(e.second);
      if (e == Edge{u, v}) break;
    }
    std::sort(block.begin(), block.end());
    block.erase(std::unique(block.begin(), block.end()), block.end());
    out.blocks.push_back(std::move(block));
  };

  for (Vertex root = 0; root < n; ++root) {
    if (disc[static_cast<std::size_t>(root)] >= 0) continue;
    disc[static_cast<std::size_t>(root)] = low[static_cast<std::size_t>(root)] = timer++;
    int root_children = 0;
    struct Frame {
      Vertex v;
      Vertex parent;
      std::size_t next;
    };
    std::vector<Frame> stack{{root, -1, 0}};
    while (!stack.empty()) {
      Frame& f = stack.back();
      auto vi = static_cast<std::size_t>(f.v);
      const auto& nbrs = g.neighbors(f.v);
      if (f.next < nbrs.size()) {
        Vertex w = nbrs[f.next++];
        auto wi = static_cast<std::size_t>(w);
        if (disc[wi] < 0) {
          edge_stack.emplace_back(f.v, w);
          disc[wi] = low[wi] = timer++;
          if (f.v == root) ++root_children;
          stack.push_back({w, f.v, 0});
        } else if (w != f.parent && disc[wi] < disc[vi]) {
          edge_stack.emplace_back(f.v, w);
          low[vi] = std::min(low[vi], disc[wi]);
        }
        continue;
      }
      Vertex v = f.v;
      Vertex parent = f.parent;
      stack.pop_back();
      if (parent < 0) continue;
      auto pi = static_cast<std::size_t>(parent);
      low[pi] = std::min(low[pi], low[vi]);
      if (low[vi] >= disc[pi]) {
        if (parent != root) is_cut[pi] = 1;
        pop_block(parent, v);
      }
    }
    if (root_children > 1) is_cut[static_cast<std::size_t>(root)] = 1;
  }
  for (Vertex v = 0; v < n; ++v) {
    if (is_cut[static_cast<std::size_t>(v)]) out.cut_vertices.push_back(v);
  }
  std::sort(out.blocks.begin(), out.blocks.end());
  return out;
}

}  // namespace vsr
