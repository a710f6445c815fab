#pragma once

#include <optional>
#include <vector>

#include "vsr/instance.hpp"

namespace vsr {

/// Foci u, v of a peanut-like bipartite graph with sides A (holding v) and
/// B (holding u) such that N(u) = A - {v} and N(v) = B - {u}.
struct PeanutWitness {
  Vertex u = 0;
  Vertex v = 0;
  std::vector<Vertex> side_a;
  std::vector<Vertex> side_b;
};

/// Lexicographically smallest (u, v) satisfying the foci condition.
std::optional<PeanutWitness> is_peanut_like(const Graph& g);
/// Checks one specific ordered pair.
std::optional<PeanutWitness> peanut_witness_for(const Graph& g, Vertex u, Vertex v);

/// Independent set reconfiguration on a bipartite graph with parts A and B
/// (B is the complement of `part_a`). Only TS and TJ are carried across.
struct IsrInstance {
  Graph graph;
  std::vector<Vertex> part_a;
  Rule rule = Rule::TJ;
  SeparatorState source;
  SeparatorState target;
};

bool is_independent(const Graph& g, const SeparatorState& set);
/// Independence of every state and TS/TJ adjacency of consecutive states.
bool verify_isr_transitions(const IsrInstance& isr, const ReconfigSequence& seq);

/// Both sides of the correspondence plus the vertex map between them.
/// The base graph G sits inside H with ids g_to_h[x]; H also holds the foci.
struct Reduction {
  IsrInstance isr;
  ReconfigInstance vsr;
  std::vector<Vertex> g_to_h;
};

/// H = G + u + v with u = n adjacent to all of A and v = n + 1 adjacent to
/// all of B; separators are the complements of the independent sets.
Reduction isr_to_vsr(const IsrInstance& isr);

/// Removes the foci of a peanut-like instance (which must be its terminals);
/// G keeps the remaining vertices in increasing id order.
Reduction vsr_to_isr(const ReconfigInstance& instance, const PeanutWitness& witness);

enum class Direction { IsrToVsr, VsrToIsr };

/// Complements every state. The input must be valid on its own side (TS or
/// TJ); the output is then valid on the other side under the same rule.
ReconfigSequence translate_sequence(const Reduction& reduction, Direction direction, const ReconfigSequence& seq);

}  // namespace vsr
