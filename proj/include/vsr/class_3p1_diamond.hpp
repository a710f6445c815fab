#pragma once

#include <optional>
#include <string>
#include <utility>
#include <variant>
#include <vector>

#include "vsr/instance.hpp"

namespace vsr {

/// Two cliques sharing exactly the cut vertex `cut`, no other edges.
struct CutVertexCliques {
  std::vector<Vertex> q1;
  std::vector<Vertex> q2;
  Vertex cut = 0;
};

/// Two disjoint cliques covering V whose cross edges form a matching.
struct MatchedCliques {
  std::vector<Vertex> q1;
  std::vector<Vertex> q2;
  std::vector<Edge> matching;
};

struct SpecialC5 {};

struct NotInScopeReason {
  std::string reason;
};

using Characterization = std::variant<CutVertexCliques, MatchedCliques, SpecialC5, NotInScopeReason>;

/// Brute force: no three pairwise non-adjacent vertices, no induced diamond.
bool is_3p1_diamond_free(const Graph& g);

/// Structural recognition for connected, non-complete graphs on at least
/// four vertices; anything else is NotInScopeReason. Membership in the class
/// holds exactly when the result is one of the three structural variants.
Characterization characterize(const Graph& g);

bool in_class(const Characterization& c) noexcept;
std::string describe(const Characterization& c);

struct ClassAnswer {
  bool reachable = false;
  std::optional<ReconfigSequence> sequence;
};

/// TJ: always YES, through a canonical separator (the cut vertex, or one
/// endpoint per cross edge) padded to the token count.
/// TAR: NO exactly on trivially negative instances, otherwise solved through
/// the equivalent TJ instance and lifted back.
/// Throws NotInScope when the graph is not a class member.
ClassAnswer solve_tar_tj_3p1d(const ReconfigInstance& instance);

/// TS decision by token bookkeeping over the clique structure; the special
/// C5 case is decided by exhaustive search. Certificates are built by
/// clique-local slides, falling back to exhaustive search when needed.
ClassAnswer solve_ts_3p1d(const ReconfigInstance& instance);

}  // namespace vsr
