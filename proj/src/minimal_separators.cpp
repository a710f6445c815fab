#include "vsr/minimal_separators.hpp"

#include <algorithm>
#include <deque>
#include <set>
#include <string>

#include "vsr/error.hpp"
#include "vsr/separator.hpp"

namespace vsr {

namespace {

// Closed neighbourhood mask of a vertex set given as a mask.
std::vector<char> closed_neighborhood(const Graph& g, const std::vector<char>& set) {
  std::vector<char> out = set;
  for (Vertex v = 0; v < g.vertex_count(); ++v) {
    if (!set[static_cast<std::size_t>(v)]) continue;
    for (Vertex w : g.neighbors(v)) out[static_cast<std::size_t>(w)] = 1;
  }
  return out;
}

SeparatorState component_neighborhood(const Graph& g, Vertex t, const std::vector<char>& blocked) {
  return neighborhood_of(g, reachable_from(g, t, blocked));
}

}  // namespace

SeparatorFamily enumerate_minimal_separators(const Graph& g, Vertex s, Vertex t, const EnumerationOptions& options) {
  check_terminals(g, s, t);
  if (g.adjacent(s, t)) throw InputError("enumerate_minimal_separators: terminals are adjacent");
  SeparatorFamily family{s, t, {}};
  std::vector<char> none(static_cast<std::size_t>(g.vertex_count()), 0);
  if (!reachable_from(g, s, none)[static_cast<std::size_t>(t)]) {
    family.members.push_back(SeparatorState{});
    return family;
  }

  std::vector<char> only_s(static_cast<std::size_t>(g.vertex_count()), 0);
  only_s[static_cast<std::size_t>(s)] = 1;
  SeparatorState seed = component_neighborhood(g, t, closed_neighborhood(g, only_s));

  std::set<SeparatorState> seen{seed};
  std::deque<SeparatorState> queue{seed};
  while (!queue.empty()) {
    SeparatorState S = std::move(queue.front());
    queue.pop_front();
    auto side_s = reachable_from(g, s, S.mask(g.vertex_count()));
    for (Vertex x : S) {
      if (g.adjacent(x, t)) continue;
      auto grow = side_s;
      grow[static_cast<std::size_t>(x)] = 1;
      SeparatorState next = component_neighborhood(g, t, closed_neighborhood(g, grow));
      if (seen.insert(next).second) {
        if (seen.size() > options.family_cap) {
          throw ResourceLimit("minimal separator family exceeds the cap of " + std::to_string(options.family_cap));
        }
        queue.push_back(std::move(next));
      }
    }
  }
  family.members.assign(seen.begin(), seen.end());
  return family;
}

std::vector<std::pair<std::size_t, std::size_t>> OverlapGraph::edges() const {
  std::vector<std::pair<std::size_t, std::size_t>> out;
  for (std::size_t i = 0; i < adjacency.size(); ++i) {
    for (std::size_t j : adjacency[i]) {
      if (i < j) out.emplace_back(i, j);
    }
  }
  return out;
}

std::optional<std::size_t> OverlapGraph::index_of(const SeparatorState& S) const {
  auto it = std::lower_bound(nodes.begin(), nodes.end(), S);
  if (it == nodes.end() || *it != S) return std::nullopt;
  return static_cast<std::size_t>(it - nodes.begin());
}

OverlapGraph build_overlap_graph(const SeparatorFamily& family, int k) {
  OverlapGraph out;
  out.nodes = family.members;
  std::sort(out.nodes.begin(), out.nodes.end());
  out.bound = k;
  out.adjacency.resize(out.nodes.size());
  for (std::size_t i = 0; i < out.nodes.size(); ++i) {
    for (std::size_t j = i + 1; j < out.nodes.size(); ++j) {
      if (set_union(out.nodes[i], out.nodes[j]).size() <= static_cast<std::size_t>(k)) {
        out.adjacency[i].push_back(j);
        out.adjacency[j].push_back(i);
      }
    }
  }
  return out;
}

namespace {

// Shortest path of family members from `from` to `to`, or empty when none.
std::vector<SeparatorState> overlap_path(const OverlapGraph& h, const SeparatorState& from, const SeparatorState& to) {
  auto a = h.index_of(from);
  auto b = h.index_of(to);
  if (!a || !b) throw ContractViolation("overlap_path: endpoint is not a family member");
  std::vector<std::size_t> parent(h.nodes.size(), h.nodes.size());
  parent[*a] = *a;
  std::deque<std::size_t> queue{*a};
  while (!queue.empty() && parent[*b] == h.nodes.size()) {
    std::size_t i = queue.front();
    queue.pop_front();
    for (std::size_t j : h.adjacency[i]) {
      if (parent[j] == h.nodes.size()) {
        parent[j] = i;
        queue.push_back(j);
      }
    }
  }
  if (parent[*b] == h.nodes.size()) return {};
  std::vector<SeparatorState> path;
  for (std::size_t i = *b;; i = parent[i]) {
    path.push_back(h.nodes[i]);
    if (i == *a) break;
  }
  std::reverse(path.begin(), path.end());
  return path;
}

struct OverlapSetup {
  SeparatorState source_min;
  SeparatorState target_min;
  std::vector<SeparatorState> path;
  std::size_t family_size = 0;
};

OverlapSetup overlap_setup(const ReconfigInstance& instance, int bound, const EnumerationOptions& options) {
  const Graph& g = instance.graph();
  OverlapSetup out;
  out.source_min = shrink_to_minimal(g, instance.s(), instance.t(), instance.source());
  out.target_min = shrink_to_minimal(g, instance.s(), instance.t(), instance.target());
  auto family = enumerate_minimal_separators(g, instance.s(), instance.t(), options);
  out.family_size = family.members.size();
  out.path = overlap_path(build_overlap_graph(family, bound), out.source_min, out.target_min);
  return out;
}

}  // namespace

TameAnswer tame_solve(const ReconfigInstance& instance, const EnumerationOptions& options) {
  if (instance.rule() != Rule::TAR) throw InputError("tame_solve: TAR instance required");
  TameAnswer answer;
  if (instance.source() == instance.target()) {
    answer.reachable = true;
    answer.sequence = ReconfigSequence{instance.source()};
    return answer;
  }
  auto setup = overlap_setup(instance, instance.k(), options);
  answer.family_size = setup.family_size;
  if (setup.path.empty()) return answer;

  ReconfigSequence seq{instance.source()};
  auto step_to = [&](const SeparatorState& goal) {
    for (Vertex v : set_difference(goal, seq.back())) seq.push_back(seq.back().with(v));
    for (Vertex v : set_difference(seq.back(), goal)) seq.push_back(seq.back().without(v));
  };
  for (const auto& P : setup.path) step_to(P);
  step_to(instance.target());
  answer.reachable = true;
  answer.sequence = remove_repeats(std::move(seq));
  return answer;
}

TameAnswer tame_solve_tj(const ReconfigInstance& instance, const EnumerationOptions& options) {
  if (instance.rule() != Rule::TJ) throw InputError("tame_solve_tj: TJ instance required");
  TameAnswer answer;
  if (instance.source() == instance.target()) {
    answer.reachable = true;
    answer.sequence = ReconfigSequence{instance.source()};
    return answer;
  }
  int k = static_cast<int>(instance.source().size());
  auto setup = overlap_setup(instance, k + 1, options);
  answer.family_size = setup.family_size;
  if (setup.path.empty()) return answer;

  // X always contains the current family member P; a jump either retires a
  // token outside P and the next member, or (when X = P + one more vertex of
  // the next member) retires a token of P that the next member does not need.
  ReconfigSequence seq{instance.source()};
  for (std::size_t i = 1; i < setup.path.size(); ++i) {
    const auto& from = setup.path[i - 1];
    const auto& goal = setup.path[i];
    while (!seq.back().contains_all(goal)) {
      const auto& X = seq.back();
      Vertex v = *set_difference(goal, X).begin();
      SeparatorState surplus = set_difference(X, set_union(from, goal));
      Vertex w = surplus.empty() ? *set_difference(from, goal).begin() : *surplus.begin();
      seq.push_back(X.moved(w, v));
    }
  }
  while (seq.back() != instance.target()) {
    const auto& X = seq.back();
    seq.push_back(X.moved(*set_difference(X, instance.target()).begin(),
                          *set_difference(instance.target(), X).begin()));
  }
  answer.reachable = true;
  answer.sequence = std::move(seq);
  return answer;
}

}  // namespace vsr
