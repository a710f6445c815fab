#include "vsr/tar_tj.hpp"

#include <algorithm>
#include <string>

#include "vsr/error.hpp"
#include "vsr/separator.hpp"

namespace vsr {

ReconfigSequence normalize_tar_sequence(const Graph& g, Vertex s, Vertex t, const ReconfigSequence& input, int k) {
  ReconfigSequence seq = remove_repeats(input);
  if (seq.empty()) throw ContractViolation("normalize_tar_sequence: empty sequence");
  auto report = verify_transitions(g, s, t, Rule::TAR, k + 1, seq);
  if (!report) {
    throw ContractViolation("normalize_tar_sequence: invalid input (" + std::string(verify_failure_name(report.reason)) +
                            " at " + std::to_string(report.index) + ")");
  }
  auto size_k = static_cast<std::size_t>(k);
  if (seq.front().size() != size_k || seq.back().size() != size_k) {
    throw ContractViolation("normalize_tar_sequence: endpoints must have exactly k vertices");
  }

  while (true) {
    auto smallest = std::min_element(seq.begin(), seq.end(),
                                     [](const auto& a, const auto& b) { return a.size() < b.size(); });
    if (smallest->size() >= size_k) break;
    // An interior local minimum: both neighbours are one larger.
    auto j = static_cast<std::size_t>(smallest - seq.begin());
    SeparatorState a = set_difference(seq[j - 1], seq[j]);
    SeparatorState b = set_difference(seq[j + 1], seq[j]);
    if (a == b) {
      // S_{j-1} = S_{j+1}: a detour, cut it out.
      seq.erase(seq.begin() + static_cast<std::ptrdiff_t>(j), seq.begin() + static_cast<std::ptrdiff_t>(j) + 2);
      continue;
    }
    seq[j] = set_union(seq[j], set_union(a, b));
  }

  for (std::size_t i = 0; i < seq.size(); ++i) {
    if (seq[i].size() != size_k + (i % 2)) {
      throw ContractViolation("normalize_tar_sequence: sizes cannot be brought into alternating form");
    }
  }
  return seq;
}

ReconfigSequence tj_to_tar_sequence(const ReconfigSequence& seq) {
  if (seq.empty()) throw InputError("tj_to_tar_sequence: empty sequence");
  ReconfigSequence out{seq.front()};
  for (std::size_t i = 1; i < seq.size(); ++i) {
    const auto& a = seq[i - 1];
    const auto& b = seq[i];
    if (a.size() != b.size() || set_difference(a, b).size() != 1) {
      throw InputError("tj_to_tar_sequence: states " + std::to_string(i - 1) + " and " + std::to_string(i) +
                       " are not one jump apart");
    }
    out.push_back(set_union(a, b));
    out.push_back(b);
  }
  return out;
}

ReconfigSequence tar_to_tj_sequence(const Graph& g, Vertex s, Vertex t, const ReconfigSequence& seq, int k) {
  if (seq.empty() || !verify_transitions(g, s, t, Rule::TAR, k + 1, seq)) {
    throw ContractViolation("tar_to_tj_sequence: not a valid (k+1)-TAR sequence");
  }
  ReconfigSequence out;
  for (std::size_t i = 0; i < seq.size(); ++i) {
    if (seq[i].size() != static_cast<std::size_t>(k) + (i % 2)) {
      throw ContractViolation("tar_to_tj_sequence: sequence is not normalized");
    }
    if (i % 2 == 0) out.push_back(seq[i]);
  }
  if (seq.size() % 2 == 0) throw ContractViolation("tar_to_tj_sequence: sequence is not normalized");
  return out;
}

bool is_trivially_negative_tar(const ReconfigInstance& instance) {
  if (instance.rule() != Rule::TAR) throw InputError("is_trivially_negative_tar: TAR instance required");
  if (instance.source() == instance.target()) return false;
  auto k = static_cast<std::size_t>(instance.k());
  auto tight = [&](const SeparatorState& S) {
    return S.size() == k && is_minimal_separator(instance.graph(), instance.s(), instance.t(), S);
  };
  return tight(instance.source()) || tight(instance.target());
}

namespace {

SeparatorState padded_minimal(const ReconfigInstance& instance, const SeparatorState& S, std::size_t size) {
  SeparatorState out = shrink_to_minimal(instance.graph(), instance.s(), instance.t(), S);
  if (out.size() > size) {
    throw ContractViolation("tar_to_tj_instance: a minimal separator of size k cannot be shrunk to k - 1 tokens");
  }
  for (Vertex v = 0; v < instance.graph().vertex_count() && out.size() < size; ++v) {
    if (v != instance.s() && v != instance.t() && !out.contains(v)) out = out.with(v);
  }
  return out;
}

// Removals of S - P ascending, then additions of P - S ascending.
ReconfigSequence monotone_bridge(const SeparatorState& from, const SeparatorState& to) {
  ReconfigSequence out{from};
  for (Vertex v : set_difference(from, to)) out.push_back(out.back().without(v));
  for (Vertex v : set_difference(to, from)) out.push_back(out.back().with(v));
  return out;
}

}  // namespace

TarToTjConversion tar_to_tj_instance(const ReconfigInstance& instance) {
  if (instance.rule() != Rule::TAR) throw InputError("tar_to_tj_instance: TAR instance required");
  if (is_trivially_negative_tar(instance)) {
    throw ContractViolation("tar_to_tj_instance: instance is trivially negative (see is_trivially_negative_tar)");
  }
  if (instance.k() - 1 > instance.graph().vertex_count() - 2) {
    throw InputError("tar_to_tj_instance: k - 1 exceeds n - 2, padding impossible (see with_binding_bound)");
  }
  auto size = static_cast<std::size_t>(instance.k() - 1);
  SeparatorState a = padded_minimal(instance, instance.source(), size);
  SeparatorState b = padded_minimal(instance, instance.target(), size);
  TarToTjConversion out{
      ReconfigInstance::create(instance.graph(), instance.s(), instance.t(), Rule::TJ, a, b),
      monotone_bridge(instance.source(), a),
      monotone_bridge(instance.target(), b),
      instance.k(),
  };
  return out;
}

ReconfigInstance with_binding_bound(const ReconfigInstance& instance) {
  if (instance.rule() != Rule::TAR) throw InputError("with_binding_bound: TAR instance required");
  int cap = std::max(1, instance.graph().vertex_count() - 1);
  return instance.k() <= cap ? instance : instance.with_rule(Rule::TAR, cap);
}

ReconfigInstance tj_to_tar_instance(const ReconfigInstance& instance) {
  if (instance.rule() != Rule::TJ) throw InputError("tj_to_tar_instance: TJ instance required");
  return instance.with_rule(Rule::TAR, static_cast<int>(instance.source().size()) + 1);
}

ReconfigSequence lift_tj_solution(const TarToTjConversion& conversion, const ReconfigSequence& tj_sequence) {
  if (tj_sequence.empty() || tj_sequence.front() != conversion.tj.source() ||
      tj_sequence.back() != conversion.tj.target()) {
    throw InputError("lift_tj_solution: sequence does not connect the converted endpoints");
  }
  ReconfigSequence out = conversion.source_bridge;
  for (auto& S : tj_to_tar_sequence(tj_sequence)) out.push_back(std::move(S));
  for (auto it = conversion.target_bridge.rbegin(); it != conversion.target_bridge.rend(); ++it) out.push_back(*it);
  return remove_repeats(std::move(out));
}

}  // namespace vsr
