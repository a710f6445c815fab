#include "vsr/instance.hpp"

#include <algorithm>
#include <cctype>
#include <string>

#include "vsr/error.hpp"
#include "vsr/separator.hpp"

namespace vsr {

std::string_view rule_name(Rule rule) noexcept {
  switch (rule) {
    case Rule::TS:
      return "TS";
    case Rule::TJ:
      return "TJ";
    case Rule::TAR:
      return "TAR";
  }
  return "?";
}

Rule parse_rule(std::string_view text) {
  std::string upper(text);
  std::transform(upper.begin(), upper.end(), upper.begin(), [](unsigned char c) { return std::toupper(c); });
  if (upper == "TS") return Rule::TS;
  if (upper == "TJ") return Rule::TJ;
  if (upper == "TAR") return Rule::TAR;
  throw FormatError("unknown rule '" + std::string(text) + "' (expected TS, TJ or TAR)");
}

ReconfigInstance ReconfigInstance::create(Graph graph, Vertex s, Vertex t, Rule rule, SeparatorState source,
                                          SeparatorState target, int k) {
  check_terminals(graph, s, t);
  if (graph.adjacent(s, t)) {
    throw InputError("terminals " + std::to_string(s) + " and " + std::to_string(t) + " are adjacent");
  }
  check_state(graph, s, t, source);
  check_state(graph, s, t, target);
  if (!is_separator(graph, s, t, source)) throw InputError("source is not an st-separator");
  if (!is_separator(graph, s, t, target)) throw InputError("target is not an st-separator");
  if (rule == Rule::TAR) {
    if (k < 1) throw InputError("TAR needs a positive bound k");
    if (std::max(source.size(), target.size()) > static_cast<std::size_t>(k)) {
      throw InputError("source or target exceeds the TAR bound k = " + std::to_string(k));
    }
  } else {
    if (source.size() != target.size()) throw InputError("TS/TJ source and target must have equal size");
    k = 0;
  }
  ReconfigInstance out;
  out.graph_ = std::move(graph);
  out.s_ = s;
  out.t_ = t;
  out.rule_ = rule;
  out.k_ = k;
  out.source_ = std::move(source);
  out.target_ = std::move(target);
  return out;
}

ReconfigInstance ReconfigInstance::with_states(SeparatorState source, SeparatorState target) const {
  return create(graph_, s_, t_, rule_, std::move(source), std::move(target), k_);
}

ReconfigInstance ReconfigInstance::with_rule(Rule rule, int k) const {
  return create(graph_, s_, t_, rule, source_, target_, k);
}

ReconfigInstance ReconfigInstance::reversed() const { return with_states(target_, source_); }

bool rule_adjacent(const Graph& g, Rule rule, int k, const SeparatorState& a, const SeparatorState& b) {
  switch (rule) {
    case Rule::TAR:
      return symmetric_difference_size(a, b) == 1 && std::max(a.size(), b.size()) <= static_cast<std::size_t>(k);
    case Rule::TJ:
    case Rule::TS: {
      if (a.size() != b.size()) return false;
      SeparatorState gone = set_difference(a, b);
      if (gone.size() != 1) return false;
      if (rule == Rule::TJ) return true;
      SeparatorState added = set_difference(b, a);
      return g.adjacent(*gone.begin(), *added.begin());
    }
  }
  return false;
}

std::string_view verify_failure_name(VerifyFailure reason) noexcept {
  switch (reason) {
    case VerifyFailure::None:
      return "ok";
    case VerifyFailure::Empty:
      return "empty sequence";
    case VerifyFailure::SourceMismatch:
      return "first state is not the source";
    case VerifyFailure::TargetMismatch:
      return "last state is not the target";
    case VerifyFailure::InvalidState:
      return "invalid state";
    case VerifyFailure::NotSeparator:
      return "state is not an st-separator";
    case VerifyFailure::NotAdjacent:
      return "consecutive states are not adjacent under the rule";
  }
  return "?";
}

VerifyReport verify_transitions(const Graph& g, Vertex s, Vertex t, Rule rule, int k, const ReconfigSequence& seq) {
  if (seq.empty()) return {VerifyFailure::Empty, 0};
  for (std::size_t i = 0; i < seq.size(); ++i) {
    const auto& S = seq[i];
    bool valid = std::all_of(S.begin(), S.end(), [&](Vertex v) { return g.contains(v) && v != s && v != t; });
    if (!valid || (rule == Rule::TAR && S.size() > static_cast<std::size_t>(k))) {
      return {VerifyFailure::InvalidState, i};
    }
    if (!is_separator(g, s, t, S)) return {VerifyFailure::NotSeparator, i};
    if (i > 0 && !rule_adjacent(g, rule, k, seq[i - 1], S)) return {VerifyFailure::NotAdjacent, i - 1};
  }
  return {};
}

VerifyReport verify_sequence(const ReconfigInstance& instance, const ReconfigSequence& seq) {
  if (seq.empty()) return {VerifyFailure::Empty, 0};
  if (seq.front() != instance.source()) return {VerifyFailure::SourceMismatch, 0};
  if (seq.back() != instance.target()) return {VerifyFailure::TargetMismatch, seq.size() - 1};
  return verify_transitions(instance.graph(), instance.s(), instance.t(), instance.rule(), instance.k(), seq);
}

ReconfigSequence remove_repeats(ReconfigSequence seq) {
  seq.erase(std::unique(seq.begin(), seq.end()), seq.end());
  return seq;
}

}  // namespace vsr
