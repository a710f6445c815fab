#pragma once

#include <cstddef>
#include <optional>
#include <utility>
#include <vector>

#include "vsr/instance.hpp"

namespace vsr {

/// All minimal st-separators of a graph, each once, in ascending order.
struct SeparatorFamily {
  Vertex s = 0;
  Vertex t = 0;
  std::vector<SeparatorState> members;
};

struct EnumerationOptions {
  std::size_t family_cap = 1'000'000;
};

/// Output-sensitive listing: start from the separator closest to s and close
/// under the expansion S -> N(component of t in G - N[C_s(S) + x]) for each
/// x in S not adjacent to t. Throws InputError on adjacent terminals and
/// ResourceLimit past `family_cap`.
SeparatorFamily enumerate_minimal_separators(const Graph& g, Vertex s, Vertex t,
                                             const EnumerationOptions& options = {});

/// Nodes are the family members; Si and Sj are adjacent iff |Si u Sj| <= bound.
struct OverlapGraph {
  std::vector<SeparatorState> nodes;
  std::vector<std::vector<std::size_t>> adjacency;
  int bound = 0;

  std::vector<std::pair<std::size_t, std::size_t>> edges() const;
  std::optional<std::size_t> index_of(const SeparatorState& S) const;
};

OverlapGraph build_overlap_graph(const SeparatorFamily& family, int k);

struct TameAnswer {
  bool reachable = false;
  std::optional<ReconfigSequence> sequence;
  std::size_t family_size = 0;
};

/// Decides a TAR(k) instance through the overlap graph: YES iff the minimal
/// separators inside source and target share a component. On YES the
/// certificate shrinks the source, walks a shortest overlap path (adding the
/// next separator's vertices, then dropping the old ones, ascending ids) and
/// grows into the target.
TameAnswer tame_solve(const ReconfigInstance& instance, const EnumerationOptions& options = {});

/// TJ variant: decided through the bound k + 1; the certificate is built
/// directly as token jumps along the same overlap path.
TameAnswer tame_solve_tj(const ReconfigInstance& instance, const EnumerationOptions& options = {});

}  // namespace vsr
