#include "vsr/state.hpp"

#include <algorithm>
#include <iterator>

#include "vsr/error.hpp"

namespace vsr {

SeparatorState::SeparatorState(std::initializer_list<Vertex> members)
    : SeparatorState(std::vector<Vertex>(members)) {}

SeparatorState::SeparatorState(std::vector<Vertex> members) : members_(std::move(members)) {
  std::sort(members_.begin(), members_.end());
  members_.erase(std::unique(members_.begin(), members_.end()), members_.end());
}

bool SeparatorState::contains(Vertex v) const { return std::binary_search(members_.begin(), members_.end(), v); }

bool SeparatorState::contains_all(const SeparatorState& other) const {
  return std::includes(members_.begin(), members_.end(), other.members_.begin(), other.members_.end());
}

SeparatorState SeparatorState::with(Vertex v) const {
  SeparatorState out = *this;
  auto it = std::lower_bound(out.members_.begin(), out.members_.end(), v);
  if (it == out.members_.end() || *it != v) out.members_.insert(it, v);
  return out;
}

SeparatorState SeparatorState::without(Vertex v) const {
  SeparatorState out = *this;
  auto it = std::lower_bound(out.members_.begin(), out.members_.end(), v);
  if (it != out.members_.end() && *it == v) out.members_.erase(it);
  return out;
}

SeparatorState SeparatorState::moved(Vertex from, Vertex to) const {
  if (!contains(from) || contains(to)) throw InputError("moved: token must leave an occupied vertex for a free one");
  return without(from).with(to);
}

std::vector<char> SeparatorState::mask(int n) const {
  std::vector<char> out(static_cast<std::size_t>(n), 0);
  for (Vertex v : members_) {
    if (v < 0 || v >= n) throw InputError("state member " + std::to_string(v) + " out of range");
    out[static_cast<std::size_t>(v)] = 1;
  }
  return out;
}

std::string SeparatorState::to_string() const {
  if (members_.empty()) return "-";
  std::string out;
  for (Vertex v : members_) {
    if (!out.empty()) out += ' ';
    out += std::to_string(v);
  }
  return out;
}

SeparatorState set_union(const SeparatorState& a, const SeparatorState& b) {
  std::vector<Vertex> out;
  std::set_union(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
  return SeparatorState(std::move(out));
}

SeparatorState set_difference(const SeparatorState& a, const SeparatorState& b) {
  std::vector<Vertex> out;
  std::set_difference(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
  return SeparatorState(std::move(out));
}

SeparatorState set_intersection(const SeparatorState& a, const SeparatorState& b) {
  std::vector<Vertex> out;
  std::set_intersection(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
  return SeparatorState(std::move(out));
}

std::size_t symmetric_difference_size(const SeparatorState& a, const SeparatorState& b) {
  std::size_t common = set_intersection(a, b).size();
  return a.size() + b.size() - 2 * common;
}

std::size_t SeparatorStateHash::operator()(const SeparatorState& s) const noexcept {
  // FNV-1a over the member ids.
  std::size_t h = 1469598103934665603ULL;
  for (Vertex v : s) {
    h ^= static_cast<std::size_t>(v) + 0x9e3779b97f4a7c15ULL;
    h *= 1099511628211ULL;
  }
  return h;
}

}  // namespace vsr
