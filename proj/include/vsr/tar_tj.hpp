#pragma once

#include "vsr/instance.hpp"

namespace vsr {

// Conversions between token jumping and bounded token addition/removal.
//
// A TJ move A -> A - a + b corresponds to the two TAR moves A -> A + b -> A + b - a,
// which is why TJ on k tokens matches TAR with bound k + 1 and TJ distances
// are exactly half the TAR distances.

/// Rewrites a (k+1)-TAR sequence between two size-k separators so that odd
/// positions (1-based) have size k and even positions size k + 1. While some
/// state is smaller than k, the first smallest state S_j is replaced by
/// S_j + {a, b} where S_{j-1} = S_j + a and S_{j+1} = S_j + b; when a = b the
/// detour S_j, S_{j+1} is dropped instead (never happens on shortest input).
/// Immediate repetitions are dropped first. Throws ContractViolation when the
/// input is invalid.
ReconfigSequence normalize_tar_sequence(const Graph& g, Vertex s, Vertex t, const ReconfigSequence& seq,
                                        int k);

/// Interleaves TJ states with the union of each consecutive pair. The result
/// has 2 * len - 1 states and is a (k+1)-TAR sequence. Throws InputError
/// when consecutive states are not one jump apart.
ReconfigSequence tj_to_tar_sequence(const ReconfigSequence& seq);

/// Keeps the odd positions of an alternating (k+1)-TAR sequence. Throws
/// ContractViolation when the sequence is not in normalized form.
ReconfigSequence tar_to_tj_sequence(const Graph& g, Vertex s, Vertex t, const ReconfigSequence& seq, int k);

/// Source differs from target and one endpoint is a minimal separator of size k.
/// Such TAR(k) instances are always negative.
bool is_trivially_negative_tar(const ReconfigInstance& instance);

/// An equivalent TJ instance on k - 1 tokens plus the TAR sequences linking
/// the original endpoints to the new ones.
struct TarToTjConversion {
  ReconfigInstance tj;
  /// source -> tj.source(), valid under the original TAR bound.
  ReconfigSequence source_bridge;
  /// target -> tj.target(), valid under the original TAR bound.
  ReconfigSequence target_bridge;
  int k = 0;
};

/// Each endpoint is shrunk to a minimal separator and padded with the
/// smallest free ids (excluding s and t) up to k - 1 vertices.
/// Throws ContractViolation when an endpoint is a minimal separator of size k
/// (trivially negative input, or identical endpoints that need no conversion)
/// and InputError when k - 1 > n - 2 (apply with_binding_bound first).
TarToTjConversion tar_to_tj_instance(const ReconfigInstance& instance);

/// States never exceed n - 2 vertices, so a bound above n - 1 never binds;
/// returns the instance with k lowered to n - 1 in that case.
ReconfigInstance with_binding_bound(const ReconfigInstance& instance);

/// Same graph, terminals and states under TAR with bound k + 1.
ReconfigInstance tj_to_tar_instance(const ReconfigInstance& instance);

/// Turns a TJ certificate for `conversion.tj` into a TAR(k) certificate for
/// the original instance: source bridge, interleaved TJ part, reversed
/// target bridge.
ReconfigSequence lift_tj_solution(const TarToTjConversion& conversion, const ReconfigSequence& tj_sequence);

}  // namespace vsr
