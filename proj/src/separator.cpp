#include "vsr/separator.hpp"

#include <string>

#include "vsr/error.hpp"

namespace vsr {

void check_terminals(const Graph& g, Vertex s, Vertex t) {
  if (!g.contains(s) || !g.contains(t)) {
    throw InputError("terminal out of range (n = " + std::to_string(g.vertex_count()) + ")");
  }
  if (s == t) throw InputError("terminals must be distinct");
}

void check_state(const Graph& g, Vertex s, Vertex t, const SeparatorState& S) {
  check_terminals(g, s, t);
  for (Vertex v : S) {
    if (!g.contains(v)) throw InputError("state member " + std::to_string(v) + " out of range");
    if (v == s || v == t) throw InputError("state contains terminal " + std::to_string(v));
  }
}

namespace {

bool separates(const Graph& g, Vertex s, Vertex t, std::vector<char>& blocked) {
  return !reachable_from(g, s, blocked)[static_cast<std::size_t>(t)];
}

}  // namespace

bool is_separator(const Graph& g, Vertex s, Vertex t, const SeparatorState& S) {
  check_state(g, s, t, S);
  auto blocked = S.mask(g.vertex_count());
  return separates(g, s, t, blocked);
}

bool is_minimal_separator(const Graph& g, Vertex s, Vertex t, const SeparatorState& S) {
  check_state(g, s, t, S);
  auto blocked = S.mask(g.vertex_count());
  if (!separates(g, s, t, blocked)) return false;
  for (Vertex v : S) {
    blocked[static_cast<std::size_t>(v)] = 0;
    bool still = separates(g, s, t, blocked);
    blocked[static_cast<std::size_t>(v)] = 1;
    if (still) return false;
  }
  return true;
}

SeparatorState neighborhood_of(const Graph& g, std::span<const char> component) {
  std::vector<char> mark(static_cast<std::size_t>(g.vertex_count()), 0);
  std::vector<Vertex> out;
  for (Vertex v = 0; v < g.vertex_count(); ++v) {
    if (!component[static_cast<std::size_t>(v)]) continue;
    for (Vertex w : g.neighbors(v)) {
      auto wi = static_cast<std::size_t>(w);
      if (!component[wi] && !mark[wi]) {
        mark[wi] = 1;
        out.push_back(w);
      }
    }
  }
  return SeparatorState(std::move(out));
}

SeparatorState shrink_to_minimal(const Graph& g, Vertex s, Vertex t, const SeparatorState& S) {
  if (!is_separator(g, s, t, S)) throw ContractViolation("shrink_to_minimal: input is not an st-separator");
  auto blocked = S.mask(g.vertex_count());
  SeparatorState near_s = neighborhood_of(g, reachable_from(g, s, blocked));
  auto blocked_s = near_s.mask(g.vertex_count());
  return neighborhood_of(g, reachable_from(g, t, blocked_s));
}

}  // namespace vsr
