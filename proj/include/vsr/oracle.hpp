#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "vsr/instance.hpp"

namespace vsr {

struct OracleOptions {
  /// Maximum number of distinct states discovered before giving up.
  std::size_t state_cap = 5'000'000;
};

/// Outcome of the exhaustive search. When `reachable` holds, `distance` is the
/// exact number of rule applications and `sequence` has distance + 1 states.
struct OracleResult {
  bool reachable = false;
  std::optional<std::size_t> distance;
  std::optional<ReconfigSequence> sequence;
  std::size_t states_explored = 0;
};

/// Every separator state adjacent to S under the instance rule, sorted.
std::vector<SeparatorState> rule_neighbors(const ReconfigInstance& instance, const SeparatorState& S);

/// Breadth-first search over the reconfiguration graph. Throws ResourceLimit
/// once more than `state_cap` states have been discovered.
OracleResult solve_bfs(const ReconfigInstance& instance, const OracleOptions& options = {});

/// The reconfiguration graph restricted to the instance's cardinalities:
/// separators of size |source| for TS/TJ, of size <= k for TAR.
struct ReconfigGraph {
  Rule rule = Rule::TJ;
  int k = 0;
  std::vector<SeparatorState> states;
  std::vector<std::pair<std::size_t, std::size_t>> edges;
};

/// Best-first search over rule moves between two states, ordered by the
/// number of source tokens still off the target, ties by state order. Finds
/// a sequence whenever one exists (not necessarily shortest); nullopt means
/// the target is unreachable. Throws ResourceLimit past `state_cap`.
std::optional<ReconfigSequence> guided_search(const Graph& g, Vertex s, Vertex t, Rule rule, int k,
                                              const SeparatorState& from, const SeparatorState& to,
                                              std::size_t state_cap);

ReconfigGraph export_reconfig_graph(const ReconfigInstance& instance, const OracleOptions& options = {});

/// DOT text: one node per state labelled with its members, undirected edges,
/// rule and k recorded as graph attributes.
std::string to_dot(const ReconfigGraph& graph);

}  // namespace vsr
