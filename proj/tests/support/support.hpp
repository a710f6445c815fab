#pragma once

// Test-only helpers: graph generators, brute-force reference answers and
// the hand-drawn fixtures. Nothing here calls the code under test except for
// the basic Graph/SeparatorState types and is_separator.

#include <cstdint>
#include <functional>
#include <optional>
#include <random>
#include <string>
#include <vector>

#include "vsr/graph.hpp"
#include "vsr/instance.hpp"
#include "vsr/series_parallel.hpp"
#include "vsr/state.hpp"

namespace vsr::testing {

using Rng = std::mt19937_64;

// ---- generators

Graph random_graph(int n, double p, Rng& rng);
Graph random_connected_graph(int n, double p, Rng& rng);
/// Random series-parallel graph on exactly n vertices: 2-connected blocks
/// grown by random S/P operations, glued at cut vertices, then relabelled.
Graph random_sp_graph(int n, Rng& rng);
/// Random bipartite graph; part A is the returned vertex list.
std::pair<Graph, std::vector<Vertex>> random_bipartite_graph(int n, double p, Rng& rng);

/// Calls f on every labelled graph with n vertices (2^(n(n-1)/2) of them).
void for_each_labelled_graph(int n, const std::function<void(const Graph&)>& f);

Graph complete_graph(int n);
Graph cycle_graph(int n);
Graph path_graph(int n);

/// Uniformly random non-adjacent pair, if one exists.
std::optional<std::pair<Vertex, Vertex>> random_nonadjacent_pair(const Graph& g, Rng& rng);

// ---- brute force

/// Every st-separator, by subset enumeration (n <= 20).
std::vector<SeparatorState> all_separators(const Graph& g, Vertex s, Vertex t);
std::vector<SeparatorState> all_separators_of_size(const Graph& g, Vertex s, Vertex t, std::size_t size);
/// Minimal st-separators by subset enumeration: separators no proper subset
/// of which separates (checked over all proper subsets).
std::vector<SeparatorState> brute_minimal_separators(const Graph& g, Vertex s, Vertex t);
/// Smallest separating subset size, by enumeration in increasing size.
std::size_t brute_min_separator_size(const Graph& g, Vertex s, Vertex t);
/// Maximum number of internally vertex-disjoint st-paths (unit-capacity flow
/// with split vertices).
std::size_t vertex_disjoint_paths(const Graph& g, Vertex s, Vertex t);
/// Plain BFS connectivity in G - removed.
bool brute_separates(const Graph& g, Vertex s, Vertex t, const SeparatorState& removed);

/// Three pairwise non-adjacent vertices or an induced K4 - e, by enumeration.
bool brute_has_3p1_or_diamond(const Graph& g);

// ---- fixtures (vertex names in comments)

struct NamedGraph {
  Graph graph;
  Vertex s;
  Vertex t;
};

// u=0, u1..u8=1..8, v=9.
NamedGraph figure1();
// u=0, u1=1, u2=2, z=3, v=4, v1..v3=5..7.
NamedGraph figure2();
// u=0, u1..u4=1..4, v=5, v1..v4=6..9; the u1-v1 edge is optional.
NamedGraph figure3(bool with_u1v1);
// s=0, t=1, a=2, b=3, x1=4, x2=5, y1=6, y2=7, z1=8, z2=9.
NamedGraph figure8();
/// The construction of figure8() whose canonical separator is {a, b}.
PSTree figure8_tree();
// u=0, v=1, a=2, a1=3, b=4, a2=5, t=6, z=7, s=8; terminals s and t.
NamedGraph figure5();
/// The construction of figure5() in which z subdivides a copy of ab.
PSTree figure5_tree();

}  // namespace vsr::testing
