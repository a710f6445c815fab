#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "vsr/graph.hpp"
#include "vsr/state.hpp"

namespace vsr {

enum class Rule { TS, TJ, TAR };

std::string_view rule_name(Rule rule) noexcept;
/// Parses "TS", "TJ" or "TAR" (case-insensitive). Throws FormatError.
Rule parse_rule(std::string_view text);

/// Ordered list of states; the certificate for a reconfiguration.
using ReconfigSequence = std::vector<SeparatorState>;

/// A graph, a non-adjacent terminal pair, a rule and two separators.
///
/// `create` enforces every invariant: terminals distinct and non-adjacent,
/// both states separators avoiding the terminals, equal sizes for TS/TJ and
/// max(|source|, |target|) <= k for TAR(k).
class ReconfigInstance {
 public:
  static ReconfigInstance create(Graph graph, Vertex s, Vertex t, Rule rule, SeparatorState source,
                                 SeparatorState target, int k = 0);

  const Graph& graph() const noexcept { return graph_; }
  Vertex s() const noexcept { return s_; }
  Vertex t() const noexcept { return t_; }
  Rule rule() const noexcept { return rule_; }
  /// The TAR bound; 0 for TS and TJ.
  int k() const noexcept { return k_; }
  const SeparatorState& source() const noexcept { return source_; }
  const SeparatorState& target() const noexcept { return target_; }

  /// Same graph and terminals, other endpoints/rule; re-validated.
  ReconfigInstance with_states(SeparatorState source, SeparatorState target) const;
  ReconfigInstance with_rule(Rule rule, int k = 0) const;
  ReconfigInstance reversed() const;

 private:
  ReconfigInstance() = default;

  Graph graph_;
  Vertex s_ = 0;
  Vertex t_ = 0;
  Rule rule_ = Rule::TJ;
  int k_ = 0;
  SeparatorState source_;
  SeparatorState target_;
};

/// Rule adjacency between two states, ignoring the separator property.
bool rule_adjacent(const Graph& g, Rule rule, int k, const SeparatorState& a, const SeparatorState& b);

enum class VerifyFailure {
  None,
  Empty,
  SourceMismatch,
  TargetMismatch,
  InvalidState,
  NotSeparator,
  NotAdjacent,
};

std::string_view verify_failure_name(VerifyFailure reason) noexcept;

struct VerifyReport {
  VerifyFailure reason = VerifyFailure::None;
  /// Index of the offending state (or the first state of the offending pair).
  std::size_t index = 0;

  bool ok() const noexcept { return reason == VerifyFailure::None; }
  explicit operator bool() const noexcept { return ok(); }
};

/// Endpoints match, every state separates, consecutive states rule-adjacent.
VerifyReport verify_sequence(const ReconfigInstance& instance, const ReconfigSequence& seq);

/// As verify_sequence without the endpoint checks.
VerifyReport verify_transitions(const Graph& g, Vertex s, Vertex t, Rule rule, int k,
                                const ReconfigSequence& seq);

/// Drops immediate repetitions (a state equal to its predecessor).
ReconfigSequence remove_repeats(ReconfigSequence seq);

}  // namespace vsr
