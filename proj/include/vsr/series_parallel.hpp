#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "vsr/instance.hpp"

namespace vsr {

enum class SpOp { Leaf, Series, Parallel };

/// One edge of some construction stage G_i. Internal nodes record the
/// operation applied to that edge; `created` is the vertex a Series
/// operation introduced. The left child of a Series node joins `a` and
/// `created`, the right child joins `created` and `b`.
struct PSNode {
  Vertex a = -1;
  Vertex b = -1;
  SpOp op = SpOp::Leaf;
  int left = -1;
  int right = -1;
  int parent = -1;
  Vertex created = -1;
};

/// Full binary tree of series/parallel operations over a 2-connected block.
/// Node ids are stable edge ids shared by every construction stage.
class PSTree {
 public:
  int root() const noexcept { return root_; }
  const std::vector<PSNode>& nodes() const noexcept { return nodes_; }
  const PSNode& node(int id) const { return nodes_.at(static_cast<std::size_t>(id)); }

  /// The two vertices of G_1.
  Edge base_vertices() const { return {node(root_).a, node(root_).b}; }
  bool is_base_vertex(Vertex v) const;
  /// Every vertex of the block, ascending.
  const std::vector<Vertex>& vertices() const noexcept { return vertices_; }
  bool contains(Vertex v) const;

  /// Inclusive ancestry.
  bool is_ancestor(int ancestor, int descendant) const;
  int lca(int x, int y) const;
  int depth(int id) const { return depth_.at(static_cast<std::size_t>(id)); }

  /// The Series node that created v; empty for the base vertices.
  std::optional<int> support(Vertex v) const;
  /// Series nodes whose subtree created v, from the outermost down to the
  /// support. Consecutive entries share exactly one endpoint.
  std::vector<int> span(Vertex v) const;
  /// Vertices created inside the subtree of `id` (ascending). For a Series
  /// node these are exactly its pieces.
  std::vector<Vertex> pieces(int id) const;
  bool is_piece(Vertex v, int id) const;

  /// Number of Parallel operations applied to a uv-edge.
  int epsilon(Vertex u, Vertex v) const;
  /// Whether some stage contains a uv-edge.
  bool edge_ever_exists(Vertex u, Vertex v) const;

  std::vector<int> leaves() const;
  /// Replays the operations from G_1 and returns the multigraph edges of the
  /// final stage (each as (low, high), sorted, repeats kept). Throws
  /// ContractViolation if an operation targets an edge that is not present.
  std::vector<Edge> replay() const;

  /// Nested term, e.g. "P(0-2: S(0-2/1: 0-1, 1-2), S(0-2/3: 0-3, 2-3))".
  std::string to_string() const;

 private:
  friend class PSTreeBuilder;
  friend PSTree decompose_block(const std::vector<Edge>& edges);
  void finalize();

  std::vector<PSNode> nodes_;
  int root_ = -1;
  std::vector<Vertex> vertices_;
  std::vector<int> depth_;
  std::vector<int> enter_;
  std::vector<int> exit_;
  std::vector<std::pair<Vertex, int>> support_;  // sorted by vertex
};

/// Records an explicit construction starting from the edge ab.
class PSTreeBuilder {
 public:
  PSTreeBuilder(Vertex a, Vertex b);

  int root() const noexcept { return 0; }
  /// Duplicates a current leaf edge; returns the two copies.
  std::pair<int, int> parallel(int edge);
  /// Subdivides a current leaf edge with a new vertex; returns (a-z, z-b).
  /// Throws InputError when `edge` is not a leaf or `created` is in use.
  std::pair<int, int> series(int edge, Vertex created);
  /// Throws ContractViolation unless the root is a Parallel node and every
  /// created vertex is new.
  PSTree build() &&;

 private:
  PSTree tree_;
};

/// Reduces a 2-connected block (at least three vertices) to a single edge:
/// parallel reductions first (lowest endpoint pair, lowest edge ids), then
/// a series reduction at the lowest-numbered degree-2 vertex. The record,
/// reversed, is the PS-tree. Throws NotSeriesParallel when stuck.
PSTree decompose_block(const std::vector<Edge>& edges);

struct SpBlock {
  std::vector<Vertex> vertices;
  std::vector<Edge> edges;
  /// Absent for bridges.
  std::optional<PSTree> tree;
};

struct SpDecomposition {
  std::vector<SpBlock> blocks;
  std::vector<Vertex> cut_vertices;

  /// The unique block holding both vertices, if any.
  std::optional<std::size_t> block_containing(Vertex x, Vertex y) const;
};

/// PS-trees for every 2-connected block. Throws NotSeriesParallel naming the
/// first block that does not reduce.
SpDecomposition recognize_and_decompose(const Graph& g);
bool is_series_parallel(const Graph& g);

enum class PairKind {
  Parallel,
  Serial,
  Sequential,
  Nested,
  RootBoth,
  RootEdge,
  RootNoEdge,
  CutVertexSeparated,
};

std::string_view pair_kind_name(PairKind kind) noexcept;

/// Relative position of a non-adjacent pair in the PS-tree.
///
/// Witnesses: Parallel(a, b); Serial/Nested/RootNoEdge(a, z) with z stored in
/// `b`; Sequential/RootEdge(a) with `v_st`; RootBoth(v_st);
/// CutVertexSeparated(cut). When `swapped` is set the witnesses describe the
/// pair as (t, s). `anchor` is the tree edge whose endpoints form the
/// canonical separator for the two-vertex kinds.
struct PairClassification {
  PairKind kind = PairKind::Parallel;
  Vertex a = -1;
  Vertex b = -1;
  std::vector<Vertex> v_st;
  Vertex cut = -1;
  bool swapped = false;
  int anchor = -1;
  std::optional<std::size_t> block;
};

PairClassification classify_pair(const PSTree& tree, Vertex s, Vertex t);
PairClassification classify_pair(const Graph& g, const SpDecomposition& decomposition, Vertex s, Vertex t);

struct CanonicalSeparator {
  SeparatorState members;
  PairClassification classification;
  int epsilon = 0;
};

CanonicalSeparator canonical_separator(const PSTree& tree, Vertex s, Vertex t);
CanonicalSeparator canonical_separator(const Graph& g, const SpDecomposition& decomposition, Vertex s, Vertex t);

/// Bookkeeping for the constructive solver.
struct SpSolveStats {
  std::size_t lemma_moves = 0;
  std::size_t search_fallbacks = 0;
  std::size_t search_moves = 0;
  std::size_t pathway_checks = 0;
  std::size_t pathway_violations = 0;
};

/// TJ sequence from a minimal separator to a separator containing M(s, t).
/// Moves come from the case analysis for the pair (span walking, the
/// parallel pathway, support pieces, completion onto M); every state is
/// checked with is_separator. If the case analysis stalls, a bounded
/// best-first search over jumps finishes the walk and is counted in `stats`.
/// Throws ContractViolation when `minimal` is not a minimal separator.
ReconfigSequence reconfigure_to_canonical(const Graph& g, const SpDecomposition& decomposition, Vertex s,
                                          Vertex t, const SeparatorState& minimal, SpSolveStats* stats = nullptr);

/// Always-YES TJ solver on graphs whose blocks are series-parallel.
ReconfigSequence sp_solve_tj(const ReconfigInstance& instance, SpSolveStats* stats = nullptr);
/// Same, with a caller-supplied decomposition of the instance graph (for
/// example one built with PSTreeBuilder); canonical separators follow it.
ReconfigSequence sp_solve_tj(const ReconfigInstance& instance, const SpDecomposition& decomposition,
                             SpSolveStats* stats = nullptr);

}  // namespace vsr
