#pragma once

#include "vsr/graph.hpp"
#include "vsr/state.hpp"

namespace vsr {

// Separator predicates. All take a terminal pair s != t and a state that
// avoids both terminals; violations raise InputError. Adjacent terminals are
// accepted here and simply have no separator.

/// True iff t is unreachable from s in G - S.
bool is_separator(const Graph& g, Vertex s, Vertex t, const SeparatorState& S);

/// True iff S separates and no single member can be dropped. For vertex
/// separators single-vertex removal is enough to certify minimality.
bool is_minimal_separator(const Graph& g, Vertex s, Vertex t, const SeparatorState& S);

/// Minimal separator inside S: with C_s the component of s in G - S and
/// S1 = N(C_s), returns N(C_t) for C_t the component of t in G - S1.
/// Throws ContractViolation when S does not separate.
SeparatorState shrink_to_minimal(const Graph& g, Vertex s, Vertex t, const SeparatorState& S);

/// Vertices outside `component` adjacent to it.
SeparatorState neighborhood_of(const Graph& g, std::span<const char> component);

/// Validates a terminal pair: ids in range and distinct.
void check_terminals(const Graph& g, Vertex s, Vertex t);
/// Validates a state against a terminal pair: ids in range, avoids s and t.
void check_state(const Graph& g, Vertex s, Vertex t, const SeparatorState& S);

}  // namespace vsr
