#include "vsr/bipartite.hpp"

#include <algorithm>
#include <string>

#include "vsr/error.hpp"

namespace vsr {

std::optional<PeanutWitness> peanut_witness_for(const Graph& g, Vertex u, Vertex v) {
  if (!g.contains(u) || !g.contains(v) || u == v || g.adjacent(u, v)) return std::nullopt;
  int n = g.vertex_count();
  // side[x]: 1 for A = N(u) + v, 2 for B = N(v) + u.
  std::vector<int> side(static_cast<std::size_t>(n), 0);
  auto mark = [&](Vertex x, int which) {
    auto& slot = side[static_cast<std::size_t>(x)];
    if (slot != 0 && slot != which) return false;
    slot = which;
    return true;
  };
  if (!mark(v, 1) || !mark(u, 2)) return std::nullopt;
  for (Vertex x : g.neighbors(u)) {
    if (!mark(x, 1)) return std::nullopt;
  }
  for (Vertex x : g.neighbors(v)) {
    if (!mark(x, 2)) return std::nullopt;
  }
  PeanutWitness out{u, v, {}, {}};
  for (Vertex x = 0; x < n; ++x) {
    int which = side[static_cast<std::size_t>(x)];
    if (which == 0) return std::nullopt;
    for (Vertex y : g.neighbors(x)) {
      if (side[static_cast<std::size_t>(y)] == which) return std::nullopt;
    }
    (which == 1 ? out.side_a : out.side_b).push_back(x);
  }
  return out;
}

std::optional<PeanutWitness> is_peanut_like(const Graph& g) {
  for (Vertex u = 0; u < g.vertex_count(); ++u) {
    for (Vertex v = 0; v < g.vertex_count(); ++v) {
      if (auto w = peanut_witness_for(g, u, v)) return w;
    }
  }
  return std::nullopt;
}

bool is_independent(const Graph& g, const SeparatorState& set) {
  for (Vertex v : set) {
    if (!g.contains(v)) return false;
    for (Vertex w : g.neighbors(v)) {
      if (set.contains(w)) return false;
    }
  }
  return true;
}

bool verify_isr_transitions(const IsrInstance& isr, const ReconfigSequence& seq) {
  if (seq.empty()) return false;
  for (std::size_t i = 0; i < seq.size(); ++i) {
    if (!is_independent(isr.graph, seq[i])) return false;
    if (i > 0 && !rule_adjacent(isr.graph, isr.rule, 0, seq[i - 1], seq[i])) return false;
  }
  return true;
}

namespace {

SeparatorState complement_in(const std::vector<Vertex>& universe, const SeparatorState& S) {
  std::vector<Vertex> out;
  for (Vertex v : universe) {
    if (!S.contains(v)) out.push_back(v);
  }
  return SeparatorState(std::move(out));
}

std::vector<Vertex> iota_vertices(int n) {
  std::vector<Vertex> out(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) out[static_cast<std::size_t>(i)] = i;
  return out;
}

void check_isr(const IsrInstance& isr) {
  const Graph& g = isr.graph;
  if (isr.rule == Rule::TAR) throw InputError("ISR reduction supports TS and TJ only; convert TAR to TJ first");
  std::vector<char> in_a(static_cast<std::size_t>(g.vertex_count()), 0);
  for (Vertex v : isr.part_a) {
    if (!g.contains(v)) throw InputError("part vertex " + std::to_string(v) + " out of range");
    in_a[static_cast<std::size_t>(v)] = 1;
  }
  for (auto [a, b] : g.edges()) {
    if (in_a[static_cast<std::size_t>(a)] == in_a[static_cast<std::size_t>(b)]) {
      throw InputError("edge " + std::to_string(a) + "-" + std::to_string(b) + " does not cross the bipartition");
    }
  }
  if (!is_independent(g, isr.source)) throw InputError("ISR source is not an independent set");
  if (!is_independent(g, isr.target)) throw InputError("ISR target is not an independent set");
  if (isr.source.size() != isr.target.size()) throw InputError("ISR source and target must have equal size");
}

}  // namespace

Reduction isr_to_vsr(const IsrInstance& isr) {
  check_isr(isr);
  const Graph& g = isr.graph;
  int n = g.vertex_count();
  Vertex u = n;
  Vertex v = n + 1;
  std::vector<Edge> edges = g.edges();
  std::vector<char> in_a(static_cast<std::size_t>(n), 0);
  for (Vertex x : isr.part_a) in_a[static_cast<std::size_t>(x)] = 1;
  for (Vertex x = 0; x < n; ++x) edges.emplace_back(x, in_a[static_cast<std::size_t>(x)] ? u : v);
  auto universe = iota_vertices(n);
  auto vsr = ReconfigInstance::create(Graph(n + 2, edges), u, v, isr.rule, complement_in(universe, isr.source),
                                      complement_in(universe, isr.target));
  IsrInstance copy = isr;
  std::sort(copy.part_a.begin(), copy.part_a.end());
  return Reduction{std::move(copy), std::move(vsr), universe};
}

Reduction vsr_to_isr(const ReconfigInstance& instance, const PeanutWitness& witness) {
  if (instance.rule() == Rule::TAR) throw InputError("ISR reduction supports TS and TJ only; convert TAR to TJ first");
  bool foci_are_terminals = (witness.u == instance.s() && witness.v == instance.t()) ||
                            (witness.u == instance.t() && witness.v == instance.s());
  if (!foci_are_terminals) throw InputError("the peanut foci must be the instance terminals");
  const Graph& h = instance.graph();
  if (!peanut_witness_for(h, witness.u, witness.v)) throw InputError("witness does not certify a peanut-like graph");

  std::vector<Vertex> keep;
  std::vector<int> h_to_g(static_cast<std::size_t>(h.vertex_count()), -1);
  for (Vertex x = 0; x < h.vertex_count(); ++x) {
    if (x == witness.u || x == witness.v) continue;
    h_to_g[static_cast<std::size_t>(x)] = static_cast<int>(keep.size());
    keep.push_back(x);
  }
  Graph g = induced_subgraph(h, keep);
  std::vector<Vertex> part_a;
  for (Vertex x : h.neighbors(witness.u)) part_a.push_back(h_to_g[static_cast<std::size_t>(x)]);
  std::sort(part_a.begin(), part_a.end());

  auto to_g = [&](const SeparatorState& S) {
    std::vector<Vertex> out;
    for (Vertex x : S) out.push_back(h_to_g[static_cast<std::size_t>(x)]);
    return complement_in(iota_vertices(g.vertex_count()), SeparatorState(std::move(out)));
  };
  IsrInstance isr{g, part_a, instance.rule(), to_g(instance.source()), to_g(instance.target())};
  return Reduction{std::move(isr), instance, std::move(keep)};
}

ReconfigSequence translate_sequence(const Reduction& reduction, Direction direction, const ReconfigSequence& seq) {
  const auto& g_to_h = reduction.g_to_h;
  const ReconfigInstance& vsr = reduction.vsr;
  int n = reduction.isr.graph.vertex_count();
  ReconfigSequence out;
  if (direction == Direction::IsrToVsr) {
    if (!verify_isr_transitions(reduction.isr, seq)) throw InputError("translate_sequence: invalid ISR sequence");
    for (const auto& I : seq) {
      std::vector<Vertex> S;
      for (Vertex x = 0; x < n; ++x) {
        if (!I.contains(x)) S.push_back(g_to_h[static_cast<std::size_t>(x)]);
      }
      out.emplace_back(std::move(S));
    }
    return out;
  }
  if (!verify_transitions(vsr.graph(), vsr.s(), vsr.t(), vsr.rule(), vsr.k(), seq)) {
    throw InputError("translate_sequence: invalid separator sequence");
  }
  for (const auto& S : seq) {
    std::vector<Vertex> I;
    for (Vertex x = 0; x < n; ++x) {
      if (!S.contains(g_to_h[static_cast<std::size_t>(x)])) I.push_back(x);
    }
    out.emplace_back(std::move(I));
  }
  return out;
}

}  // namespace vsr
