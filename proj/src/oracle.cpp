#include "vsr/oracle.hpp"

#include <algorithm>
#include <deque>
#include <set>
#include <unordered_map>
#include <unordered_set>

#include "vsr/error.hpp"
#include "vsr/separator.hpp"

namespace vsr {

namespace {

std::vector<SeparatorState> candidates(const Graph& g, Vertex s, Vertex t, Rule rule, int k,
                                       const SeparatorState& S) {
  std::vector<SeparatorState> out;
  int n = g.vertex_count();
  auto free_vertex = [&](Vertex v) { return v != s && v != t && !S.contains(v); };
  switch (rule) {
    case Rule::TS:
      for (Vertex u : S) {
        for (Vertex v : g.neighbors(u)) {
          if (free_vertex(v)) out.push_back(S.moved(u, v));
        }
      }
      break;
    case Rule::TJ:
      for (Vertex u : S) {
        for (Vertex v = 0; v < n; ++v) {
          if (free_vertex(v)) out.push_back(S.moved(u, v));
        }
      }
      break;
    case Rule::TAR:
      if (S.size() < static_cast<std::size_t>(k)) {
        for (Vertex v = 0; v < n; ++v) {
          if (free_vertex(v)) out.push_back(S.with(v));
        }
      }
      for (Vertex u : S) out.push_back(S.without(u));
      break;
  }
  return out;
}

std::vector<SeparatorState> separating_neighbors(const Graph& g, Vertex s, Vertex t, Rule rule, int k,
                                                 const SeparatorState& S) {
  auto out = candidates(g, s, t, rule, k, S);
  std::erase_if(out, [&](const SeparatorState& c) { return !is_separator(g, s, t, c); });
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace

std::vector<SeparatorState> rule_neighbors(const ReconfigInstance& instance, const SeparatorState& S) {
  check_state(instance.graph(), instance.s(), instance.t(), S);
  return separating_neighbors(instance.graph(), instance.s(), instance.t(), instance.rule(), instance.k(), S);
}

OracleResult solve_bfs(const ReconfigInstance& instance, const OracleOptions& options) {
  OracleResult result;
  const auto& source = instance.source();
  const auto& target = instance.target();
  std::vector<SeparatorState> states{source};
  std::vector<std::size_t> parent{0};
  std::unordered_map<SeparatorState, std::size_t> index{{source, 0}};
  std::optional<std::size_t> found;
  if (source == target) found = 0;

  for (std::size_t head = 0; head < states.size() && !found; ++head) {
    auto next = separating_neighbors(instance.graph(), instance.s(), instance.t(), instance.rule(), instance.k(),
                                     states[head]);
    for (auto& S : next) {
      if (index.contains(S)) continue;
      if (states.size() >= options.state_cap) {
        throw ResourceLimit("oracle state cap of " + std::to_string(options.state_cap) + " exceeded");
      }
      index.emplace(S, states.size());
      parent.push_back(head);
      states.push_back(std::move(S));
      if (states.back() == target) {
        found = states.size() - 1;
        break;
      }
    }
  }
  result.states_explored = states.size();
  if (!found) return result;

  ReconfigSequence seq;
  for (std::size_t i = *found;; i = parent[i]) {
    seq.push_back(states[i]);
    if (i == 0) break;
  }
  std::reverse(seq.begin(), seq.end());
  result.reachable = true;
  result.distance = seq.size() - 1;
  result.sequence = std::move(seq);
  return result;
}

std::optional<ReconfigSequence> guided_search(const Graph& g, Vertex s, Vertex t, Rule rule, int k,
                                              const SeparatorState& from, const SeparatorState& to,
                                              std::size_t state_cap) {
  auto distance_to_goal = [&](const SeparatorState& S) { return symmetric_difference_size(S, to); };
  std::unordered_map<SeparatorState, SeparatorState> parent{{from, from}};
  std::set<std::pair<std::size_t, SeparatorState>> open{{distance_to_goal(from), from}};
  std::unordered_set<SeparatorState> closed;
  while (!open.empty()) {
    SeparatorState S = open.begin()->second;
    open.erase(open.begin());
    if (S == to) {
      ReconfigSequence seq{S};
      while (seq.back() != from) seq.push_back(parent.at(seq.back()));
      std::reverse(seq.begin(), seq.end());
      return seq;
    }
    if (!closed.insert(S).second) continue;
    for (auto& next : separating_neighbors(g, s, t, rule, k, S)) {
      if (parent.contains(next)) continue;
      if (parent.size() >= state_cap) {
        throw ResourceLimit("guided search state cap of " + std::to_string(state_cap) + " exceeded");
      }
      parent.emplace(next, S);
      open.emplace(distance_to_goal(next), std::move(next));
    }
  }
  return std::nullopt;
}

namespace {

// Calls f on every r-subset of `pool` in lexicographic order.
template <typename F>
void for_each_subset(const std::vector<Vertex>& pool, std::size_t r, F&& f) {
  if (r > pool.size()) return;
  std::vector<std::size_t> idx(r);
  for (std::size_t i = 0; i < r; ++i) idx[i] = i;
  std::vector<Vertex> members(r);
  while (true) {
    for (std::size_t i = 0; i < r; ++i) members[i] = pool[idx[i]];
    f(SeparatorState(members));
    std::size_t i = r;
    while (i > 0 && idx[i - 1] == pool.size() - r + (i - 1)) --i;
    if (i == 0) return;
    ++idx[i - 1];
    for (std::size_t j = i; j < r; ++j) idx[j] = idx[j - 1] + 1;
  }
}

double binomial(std::size_t n, std::size_t r) {
  double out = 1;
  for (std::size_t i = 0; i < r; ++i) out = out * static_cast<double>(n - i) / static_cast<double>(i + 1);
  return out;
}

}  // namespace

ReconfigGraph export_reconfig_graph(const ReconfigInstance& instance, const OracleOptions& options) {
  const Graph& g = instance.graph();
  Vertex s = instance.s();
  Vertex t = instance.t();
  std::vector<Vertex> pool;
  for (Vertex v = 0; v < g.vertex_count(); ++v) {
    if (v != s && v != t) pool.push_back(v);
  }
  std::size_t low = instance.source().size();
  std::size_t high = low;
  if (instance.rule() == Rule::TAR) {
    low = 0;
    high = std::min(pool.size(), static_cast<std::size_t>(instance.k()));
  }
  double total = 0;
  for (std::size_t r = low; r <= high; ++r) total += binomial(pool.size(), r);
  if (total > static_cast<double>(options.state_cap)) {
    throw ResourceLimit("reconfiguration graph export would examine more than " +
                        std::to_string(options.state_cap) + " states");
  }

  ReconfigGraph out;
  out.rule = instance.rule();
  out.k = instance.k();
  for (std::size_t r = low; r <= high; ++r) {
    for_each_subset(pool, r, [&](SeparatorState S) {
      if (is_separator(g, s, t, S)) out.states.push_back(std::move(S));
    });
  }
  std::sort(out.states.begin(), out.states.end());
  std::unordered_map<SeparatorState, std::size_t> index;
  for (std::size_t i = 0; i < out.states.size(); ++i) index.emplace(out.states[i], i);
  for (std::size_t i = 0; i < out.states.size(); ++i) {
    for (const auto& S : separating_neighbors(g, s, t, out.rule, out.k, out.states[i])) {
      auto it = index.find(S);
      if (it != index.end() && it->second > i) out.edges.emplace_back(i, it->second);
    }
  }
  std::sort(out.edges.begin(), out.edges.end());
  return out;
}

namespace {

std::string dot_id(const SeparatorState& S) {
  std::string out;
  for (Vertex v : S) {
    if (!out.empty()) out += ',';
    out += std::to_string(v);
  }
  return out;
}

}  // namespace

std::string to_dot(const ReconfigGraph& graph) {
  std::string out = "graph R {\n";
  out += "  rule=\"" + std::string(rule_name(graph.rule)) + "\";\n";
  out += "  k=" + std::to_string(graph.k) + ";\n";
  for (const auto& S : graph.states) {
    out += "  \"" + dot_id(S) + "\" [label=\"{" + dot_id(S) + "}\"];\n";
  }
  for (auto [i, j] : graph.edges) {
    out += "  \"" + dot_id(graph.states[i]) + "\" -- \"" + dot_id(graph.states[j]) + "\";\n";
  }
  out += "}\n";
  return out;
}

}  // namespace vsr
