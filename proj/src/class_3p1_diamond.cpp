#include "vsr/class_3p1_diamond.hpp"

#include <algorithm>
#include <cassert>
#include <cstdint>
#include <string>

#include "vsr/error.hpp"
#include "vsr/oracle.hpp"
#include "vsr/separator.hpp"
#include "vsr/tar_tj.hpp"

namespace vsr {

bool is_3p1_diamond_free(const Graph& g) {
  int n = g.vertex_count();
  for (Vertex a = 0; a < n; ++a) {
    for (Vertex b = a + 1; b < n; ++b) {
      for (Vertex c = b + 1; c < n; ++c) {
        if (!g.adjacent(a, b) && !g.adjacent(a, c) && !g.adjacent(b, c)) return false;
        for (Vertex d = c + 1; d < n; ++d) {
          const Vertex q[4] = {a, b, c, d};
          int edges = 0;
          for (int i = 0; i < 4; ++i) {
            for (int j = i + 1; j < 4; ++j) edges += g.adjacent(q[i], q[j]) ? 1 : 0;
          }
          if (edges == 5) return false;
        }
      }
    }
  }
  return true;
}

namespace {

bool is_clique(const Graph& g, const std::vector<Vertex>& vs) {
  for (std::size_t i = 0; i < vs.size(); ++i) {
    for (std::size_t j = i + 1; j < vs.size(); ++j) {
      if (!g.adjacent(vs[i], vs[j])) return false;
    }
  }
  return true;
}

std::optional<CutVertexCliques> match_cut_vertex(const Graph& g) {
  auto blocks = biconnected_blocks(g);
  if (blocks.cut_vertices.size() != 1 || blocks.blocks.size() != 2) return std::nullopt;
  Vertex w = blocks.cut_vertices.front();
  const auto& q1 = blocks.blocks[0];
  const auto& q2 = blocks.blocks[1];
  if (!is_clique(g, q1) || !is_clique(g, q2)) return std::nullopt;
  return CutVertexCliques{q1, q2, w};
}

// Splits V into two cliques whose cross edges form a matching: the cliques
// are the colour classes of a 2-colouring of the complement.
std::optional<MatchedCliques> match_matched_cliques(const Graph& g) {
  int n = g.vertex_count();
  std::vector<int> comp(static_cast<std::size_t>(n), -1), colour(static_cast<std::size_t>(n), 0);
  int components = 0;
  for (Vertex root = 0; root < n; ++root) {
    if (comp[static_cast<std::size_t>(root)] >= 0) continue;
    std::vector<Vertex> stack{root};
    comp[static_cast<std::size_t>(root)] = components;
    while (!stack.empty()) {
      Vertex v = stack.back();
      stack.pop_back();
      for (Vertex w = 0; w < n; ++w) {
        if (w == v || g.adjacent(v, w)) continue;
        auto wi = static_cast<std::size_t>(w);
        int want = 1 - colour[static_cast<std::size_t>(v)];
        if (comp[wi] < 0) {
          comp[wi] = components;
          colour[wi] = want;
          stack.push_back(w);
        } else if (colour[wi] != want) {
          return std::nullopt;
        }
      }
    }
    ++components;
  }
  if (components - 1 > 20) return std::nullopt;
  // Component 0 keeps its colouring so that vertex 0 always lands in q1.
  std::uint32_t flips = 1U << (components - 1);
  for (std::uint32_t mask = 0; mask < flips; ++mask) {
    std::vector<char> side(static_cast<std::size_t>(n));
    for (Vertex v = 0; v < n; ++v) {
      int c = comp[static_cast<std::size_t>(v)];
      bool flip = c > 0 && ((mask >> (c - 1)) & 1U);
      side[static_cast<std::size_t>(v)] = static_cast<char>(colour[static_cast<std::size_t>(v)] ^ (flip ? 1 : 0));
    }
    MatchedCliques out;
    for (Vertex v = 0; v < n; ++v) (side[static_cast<std::size_t>(v)] == side[0] ? out.q1 : out.q2).push_back(v);
    if (out.q2.empty()) continue;
    std::vector<int> cross(static_cast<std::size_t>(n), 0);
    bool matching = true;
    for (auto [a, b] : g.edges()) {
      if (side[static_cast<std::size_t>(a)] == side[static_cast<std::size_t>(b)]) continue;
      if (++cross[static_cast<std::size_t>(a)] > 1 || ++cross[static_cast<std::size_t>(b)] > 1) matching = false;
      out.matching.emplace_back(a, b);
    }
    if (matching) return out;
  }
  return std::nullopt;
}

bool is_c5(const Graph& g) {
  if (g.vertex_count() != 5 || g.edge_count() != 5 || !is_connected(g)) return false;
  for (Vertex v = 0; v < 5; ++v) {
    if (g.degree(v) != 2) return false;
  }
  return true;
}

Characterization characterize_unchecked(const Graph& g) {
  int n = g.vertex_count();
  if (n < 4) return NotInScopeReason{"fewer than four vertices"};
  if (!is_connected(g)) return NotInScopeReason{"disconnected"};
  if (g.edge_count() == static_cast<std::size_t>(n) * static_cast<std::size_t>(n - 1) / 2) {
    return NotInScopeReason{"complete graph"};
  }
  if (auto c = match_cut_vertex(g)) return *c;
  if (auto m = match_matched_cliques(g)) return *m;
  if (is_c5(g)) return SpecialC5{};
  return NotInScopeReason{"contains an independent triple or an induced diamond"};
}

std::string join(const std::vector<Vertex>& vs) {
  std::string out;
  for (Vertex v : vs) {
    if (!out.empty()) out += ' ';
    out += std::to_string(v);
  }
  return out;
}

}  // namespace

Characterization characterize(const Graph& g) {
  Characterization c = characterize_unchecked(g);
#ifndef NDEBUG
  if (g.vertex_count() >= 4 && is_connected(g) && !std::holds_alternative<NotInScopeReason>(c)) {
    assert(is_3p1_diamond_free(g));
  }
#endif
  return c;
}

bool in_class(const Characterization& c) noexcept { return !std::holds_alternative<NotInScopeReason>(c); }

std::string describe(const Characterization& c) {
  if (auto* cut = std::get_if<CutVertexCliques>(&c)) {
    return "cut-vertex-cliques\nq1 " + join(cut->q1) + "\nq2 " + join(cut->q2) + "\ncut " + std::to_string(cut->cut);
  }
  if (auto* m = std::get_if<MatchedCliques>(&c)) {
    std::string edges;
    for (auto [a, b] : m->matching) edges += (edges.empty() ? "" : " ") + std::to_string(a) + "-" + std::to_string(b);
    return "matched-cliques\nq1 " + join(m->q1) + "\nq2 " + join(m->q2) + "\nmatching " + edges;
  }
  if (std::holds_alternative<SpecialC5>(c)) return "special-c5";
  return "not-in-scope\nreason " + std::get<NotInScopeReason>(c).reason;
}

namespace {

Characterization require_class(const Graph& g) {
  auto c = characterize(g);
  if (!in_class(c)) throw NotInScope("graph is not {3P1, diamond}-free: " + std::get<NotInScopeReason>(c).reason);
  return c;
}

// A minimal separator every member of the class admits directly: the cut
// vertex, or one endpoint per cross edge (avoiding the terminals).
SeparatorState structural_separator(const Characterization& c, const ReconfigInstance& instance) {
  if (auto* cut = std::get_if<CutVertexCliques>(&c)) return SeparatorState{cut->cut};
  if (auto* m = std::get_if<MatchedCliques>(&c)) {
    std::vector<Vertex> out;
    for (auto [a, b] : m->matching) {
      if (a == instance.s() || a == instance.t()) {
        out.push_back(b);
      } else if (b == instance.s() || b == instance.t()) {
        out.push_back(a);
      } else {
        out.push_back(std::min(a, b));
      }
    }
    return SeparatorState(std::move(out));
  }
  return shrink_to_minimal(instance.graph(), instance.s(), instance.t(), instance.source());
}

SeparatorState pad(const ReconfigInstance& instance, SeparatorState S, std::size_t size) {
  for (Vertex v = 0; v < instance.graph().vertex_count() && S.size() < size; ++v) {
    if (v != instance.s() && v != instance.t()) S = S.with(v);
  }
  return S;
}

// Jumps from X towards Y, lowest token first, each jump checked; the
// structure of the class guarantees progress, and a search finishes the walk
// should that ever fail.
ReconfigSequence greedy_jumps(const ReconfigInstance& instance, const SeparatorState& from, const SeparatorState& to) {
  const Graph& g = instance.graph();
  ReconfigSequence seq{from};
  while (seq.back() != to) {
    const auto& X = seq.back();
    std::optional<SeparatorState> next;
    for (Vertex w : set_difference(X, to)) {
      for (Vertex x : set_difference(to, X)) {
        auto candidate = X.moved(w, x);
        if (is_separator(g, instance.s(), instance.t(), candidate)) {
          next = std::move(candidate);
          break;
        }
      }
      if (next) break;
    }
    if (!next) {
      auto rest = guided_search(g, instance.s(), instance.t(), Rule::TJ, 0, X, to, 1'000'000);
      if (!rest) throw ContractViolation("class solver: no jump sequence between separators");
      seq.insert(seq.end(), rest->begin() + 1, rest->end());
      break;
    }
    seq.push_back(std::move(*next));
  }
  return seq;
}

ReconfigSequence join_through(ReconfigSequence forward, const ReconfigSequence& backward) {
  forward.insert(forward.end(), backward.rbegin() + 1, backward.rend());
  return forward;
}

ClassAnswer solve_tj(const Characterization& c, const ReconfigInstance& instance) {
  if (instance.source() == instance.target()) return {true, ReconfigSequence{instance.source()}};
  SeparatorState hub = pad(instance, structural_separator(c, instance), instance.source().size());
  auto seq = join_through(greedy_jumps(instance, instance.source(), hub), greedy_jumps(instance, instance.target(), hub));
  return {true, remove_repeats(std::move(seq))};
}

}  // namespace

ClassAnswer solve_tar_tj_3p1d(const ReconfigInstance& instance) {
  auto c = require_class(instance.graph());
  switch (instance.rule()) {
    case Rule::TJ:
      return solve_tj(c, instance);
    case Rule::TAR: {
      if (instance.source() == instance.target()) return {true, ReconfigSequence{instance.source()}};
      if (is_trivially_negative_tar(instance)) return {false, std::nullopt};
      auto conversion = tar_to_tj_instance(with_binding_bound(instance));
      auto tj = solve_tj(c, conversion.tj);
      return {true, lift_tj_solution(conversion, *tj.sequence)};
    }
    case Rule::TS:
      break;
  }
  throw InputError("solve_tar_tj_3p1d: TJ or TAR instance required");
}

namespace {

std::size_t count_in(const SeparatorState& S, const std::vector<Vertex>& part) {
  return static_cast<std::size_t>(
      std::count_if(part.begin(), part.end(), [&](Vertex v) { return S.contains(v); }));
}

// Slides inside each clique: every token off the target jumps to a free
// target vertex of its own clique, which is adjacent. Valid whenever the
// vertices that keep the state separating stay occupied throughout.
ReconfigSequence clique_slides(const ReconfigInstance& instance, const std::vector<std::vector<Vertex>>& parts) {
  ReconfigSequence seq{instance.source()};
  for (const auto& part : parts) {
    while (true) {
      const auto& X = seq.back();
      std::optional<Vertex> from, to;
      for (Vertex v : part) {
        if (!from && X.contains(v) && !instance.target().contains(v)) from = v;
        if (!to && !X.contains(v) && instance.target().contains(v)) to = v;
      }
      if (!from || !to) break;
      seq.push_back(X.moved(*from, *to));
    }
  }
  return seq;
}

std::vector<Vertex> minus(std::vector<Vertex> part, std::initializer_list<Vertex> drop) {
  std::erase_if(part, [&](Vertex v) { return std::find(drop.begin(), drop.end(), v) != drop.end(); });
  return part;
}

ClassAnswer certified(const ReconfigInstance& instance, ReconfigSequence seq) {
  if (!verify_sequence(instance, seq)) {
    auto found = guided_search(instance.graph(), instance.s(), instance.t(), Rule::TS, 0, instance.source(),
                               instance.target(), 1'000'000);
    if (!found) throw ContractViolation("TS class solver: decided YES but no sliding sequence exists");
    seq = std::move(*found);
  }
  return {true, std::move(seq)};
}

}  // namespace

ClassAnswer solve_ts_3p1d(const ReconfigInstance& instance) {
  if (instance.rule() != Rule::TS) throw InputError("solve_ts_3p1d: TS instance required");
  auto c = require_class(instance.graph());
  const auto& A = instance.source();
  const auto& B = instance.target();
  if (A == B) return {true, ReconfigSequence{A}};
  Vertex s = instance.s();
  Vertex t = instance.t();

  if (auto* cut = std::get_if<CutVertexCliques>(&c)) {
    // s and t sit in different cliques and both see the cut vertex, so its
    // token never moves and nothing crosses between the cliques.
    auto left = minus(cut->q1, {cut->cut});
    if (count_in(A, left) != count_in(B, left)) return {false, std::nullopt};
    return certified(instance, clique_slides(instance, {left, minus(cut->q2, {cut->cut})}));
  }

  if (auto* m = std::get_if<MatchedCliques>(&c)) {
    // Partners of the terminals are occupied in every separator and cannot
    // slide. Tokens change cliques only across a cross edge avoiding both
    // terminals; with such an edge present every pair of equal-size
    // separators is connected.
    bool passage = std::any_of(m->matching.begin(), m->matching.end(), [&](Edge e) {
      return e.first != s && e.first != t && e.second != s && e.second != t;
    });
    if (!passage) {
      if (count_in(A, m->q1) != count_in(B, m->q1)) return {false, std::nullopt};
      return certified(instance, clique_slides(instance, {m->q1, m->q2}));
    }
    auto found = guided_search(instance.graph(), s, t, Rule::TS, 0, A, B, 1'000'000);
    if (!found) throw ContractViolation("TS class solver: passage edge present but target unreachable");
    return {true, std::move(*found)};
  }

  auto result = solve_bfs(instance);
  return {result.reachable, result.sequence};
}

}  // namespace vsr
