#pragma once

#include <compare>
#include <cstddef>
#include <functional>
#include <initializer_list>
#include <string>
#include <vector>

#include "vsr/graph.hpp"

namespace vsr {

/// A set of token positions, stored as a sorted duplicate-free vertex list.
///
/// Equality and ordering are those of the sorted list, so a state can key
/// ordered and hashed containers directly.
class SeparatorState {
 public:
  SeparatorState() = default;
  SeparatorState(std::initializer_list<Vertex> members);
  explicit SeparatorState(std::vector<Vertex> members);

  const std::vector<Vertex>& members() const noexcept { return members_; }
  std::size_t size() const noexcept { return members_.size(); }
  bool empty() const noexcept { return members_.empty(); }
  bool contains(Vertex v) const;
  bool contains_all(const SeparatorState& other) const;

  auto begin() const noexcept { return members_.begin(); }
  auto end() const noexcept { return members_.end(); }

  SeparatorState with(Vertex v) const;
  SeparatorState without(Vertex v) const;
  /// Replaces `from` by `to` (a single token jump).
  SeparatorState moved(Vertex from, Vertex to) const;

  /// Membership mask with one entry per vertex of a graph of size n.
  std::vector<char> mask(int n) const;

  /// "1 3 4"; the empty state renders as "-".
  std::string to_string() const;

  friend auto operator<=>(const SeparatorState&, const SeparatorState&) = default;
  friend bool operator==(const SeparatorState&, const SeparatorState&) = default;

 private:
  std::vector<Vertex> members_;
};

SeparatorState set_union(const SeparatorState& a, const SeparatorState& b);
SeparatorState set_difference(const SeparatorState& a, const SeparatorState& b);
SeparatorState set_intersection(const SeparatorState& a, const SeparatorState& b);
std::size_t symmetric_difference_size(const SeparatorState& a, const SeparatorState& b);

struct SeparatorStateHash {
  std::size_t operator()(const SeparatorState& s) const noexcept;
};

}  // namespace vsr

template <>
struct std::hash<vsr::SeparatorState> : vsr::SeparatorStateHash {};
