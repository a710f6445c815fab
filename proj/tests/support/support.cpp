#include "support.hpp"

#include <algorithm>
#include <numeric>
#include <queue>
#include <set>

namespace vsr::testing {

namespace {

Graph relabel(int n, const std::vector<Edge>& edges, Rng& rng) {
  std::vector<Vertex> perm(static_cast<std::size_t>(n));
  std::iota(perm.begin(), perm.end(), 0);
  std::shuffle(perm.begin(), perm.end(), rng);
  std::set<Edge> simple;
  for (auto [a, b] : edges) {
    Vertex x = perm[static_cast<std::size_t>(a)];
    Vertex y = perm[static_cast<std::size_t>(b)];
    simple.insert({std::min(x, y), std::max(x, y)});
  }
  return Graph(n, std::vector<Edge>(simple.begin(), simple.end()));
}

std::uint32_t bit(Vertex v) { return std::uint32_t{1} << v; }

bool mask_separates(const Graph& g, Vertex s, Vertex t, std::uint32_t removed) {
  std::vector<char> seen(static_cast<std::size_t>(g.vertex_count()), 0);
  std::queue<Vertex> q;
  q.push(s);
  seen[static_cast<std::size_t>(s)] = 1;
  while (!q.empty()) {
    Vertex x = q.front();
    q.pop();
    if (x == t) return false;
    for (Vertex y : g.neighbors(x)) {
      if ((removed & bit(y)) || seen[static_cast<std::size_t>(y)]) continue;
      seen[static_cast<std::size_t>(y)] = 1;
      q.push(y);
    }
  }
  return true;
}

SeparatorState from_mask(std::uint32_t mask, int n) {
  std::vector<Vertex> out;
  for (Vertex v = 0; v < n; ++v) {
    if (mask & bit(v)) out.push_back(v);
  }
  return SeparatorState(std::move(out));
}

std::vector<std::uint32_t> separator_masks(const Graph& g, Vertex s, Vertex t) {
  std::vector<std::uint32_t> out;
  std::uint32_t terminals = bit(s) | bit(t);
  for (std::uint32_t m = 0; m < (std::uint32_t{1} << g.vertex_count()); ++m) {
    if ((m & terminals) == 0 && mask_separates(g, s, t, m)) out.push_back(m);
  }
  return out;
}

}  // namespace

Graph random_graph(int n, double p, Rng& rng) {
  std::bernoulli_distribution coin(p);
  std::vector<Edge> edges;
  for (Vertex a = 0; a < n; ++a) {
    for (Vertex b = a + 1; b < n; ++b) {
      if (coin(rng)) edges.emplace_back(a, b);
    }
  }
  return Graph(n, edges);
}

Graph random_connected_graph(int n, double p, Rng& rng) {
  // A random spanning tree plus independent extra edges.
  std::bernoulli_distribution coin(p);
  std::vector<Edge> edges;
  for (Vertex v = 1; v < n; ++v) {
    std::uniform_int_distribution<Vertex> pick(0, v - 1);
    edges.emplace_back(pick(rng), v);
  }
  for (Vertex a = 0; a < n; ++a) {
    for (Vertex b = a + 1; b < n; ++b) {
      if (coin(rng)) edges.emplace_back(a, b);
    }
  }
  return relabel(n, edges, rng);
}

Graph random_sp_graph(int n, Rng& rng) {
  std::vector<Edge> multi{{0, 1}};
  int count = 2;
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  while (count < n) {
    double r = unit(rng);
    if (r < 0.1) {
      std::uniform_int_distribution<Vertex> pick(0, count - 1);
      multi.emplace_back(pick(rng), count++);
      continue;
    }
    std::uniform_int_distribution<std::size_t> pick(0, multi.size() - 1);
    std::size_t e = pick(rng);
    if (r < 0.4) {
      multi.push_back(multi[e]);
    } else {
      auto [a, b] = multi[e];
      multi[e] = {a, count};
      multi.emplace_back(count, b);
      ++count;
    }
  }
  return relabel(std::max(n, 2), multi, rng);
}

std::pair<Graph, std::vector<Vertex>> random_bipartite_graph(int n, double p, Rng& rng) {
  std::bernoulli_distribution coin(p);
  std::bernoulli_distribution side(0.5);
  std::vector<char> in_a(static_cast<std::size_t>(n));
  for (auto& x : in_a) x = side(rng);
  std::vector<Edge> edges;
  std::vector<Vertex> part_a;
  for (Vertex a = 0; a < n; ++a) {
    if (in_a[static_cast<std::size_t>(a)]) part_a.push_back(a);
    for (Vertex b = a + 1; b < n; ++b) {
      if (in_a[static_cast<std::size_t>(a)] != in_a[static_cast<std::size_t>(b)] && coin(rng)) edges.emplace_back(a, b);
    }
  }
  return {Graph(n, edges), part_a};
}

void for_each_labelled_graph(int n, const std::function<void(const Graph&)>& f) {
  std::vector<Edge> pairs;
  for (Vertex a = 0; a < n; ++a) {
    for (Vertex b = a + 1; b < n; ++b) pairs.emplace_back(a, b);
  }
  std::vector<Edge> edges;
  for (std::uint64_t m = 0; m < (std::uint64_t{1} << pairs.size()); ++m) {
    edges.clear();
    for (std::size_t i = 0; i < pairs.size(); ++i) {
      if (m >> i & 1) edges.push_back(pairs[i]);
    }
    f(Graph(n, edges));
  }
}

Graph complete_graph(int n) {
  std::vector<Edge> edges;
  for (Vertex a = 0; a < n; ++a) {
    for (Vertex b = a + 1; b < n; ++b) edges.emplace_back(a, b);
  }
  return Graph(n, edges);
}

Graph cycle_graph(int n) {
  std::vector<Edge> edges;
  for (Vertex v = 0; v < n; ++v) edges.emplace_back(std::min(v, (v + 1) % n), std::max(v, (v + 1) % n));
  return Graph(n, edges);
}

Graph path_graph(int n) {
  std::vector<Edge> edges;
  for (Vertex v = 0; v + 1 < n; ++v) edges.emplace_back(v, v + 1);
  return Graph(n, edges);
}

std::optional<std::pair<Vertex, Vertex>> random_nonadjacent_pair(const Graph& g, Rng& rng) {
  std::vector<std::pair<Vertex, Vertex>> pairs;
  for (Vertex a = 0; a < g.vertex_count(); ++a) {
    for (Vertex b = a + 1; b < g.vertex_count(); ++b) {
      if (!g.adjacent(a, b)) pairs.emplace_back(a, b);
    }
  }
  if (pairs.empty()) return std::nullopt;
  std::uniform_int_distribution<std::size_t> pick(0, pairs.size() - 1);
  auto p = pairs[pick(rng)];
  if (std::bernoulli_distribution(0.5)(rng)) std::swap(p.first, p.second);
  return p;
}

std::vector<SeparatorState> all_separators(const Graph& g, Vertex s, Vertex t) {
  std::vector<SeparatorState> out;
  for (auto m : separator_masks(g, s, t)) out.push_back(from_mask(m, g.vertex_count()));
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<SeparatorState> all_separators_of_size(const Graph& g, Vertex s, Vertex t, std::size_t size) {
  std::vector<SeparatorState> out;
  for (auto& S : all_separators(g, s, t)) {
    if (S.size() == size) out.push_back(std::move(S));
  }
  return out;
}

std::vector<SeparatorState> brute_minimal_separators(const Graph& g, Vertex s, Vertex t) {
  auto masks = separator_masks(g, s, t);
  std::vector<SeparatorState> out;
  for (auto m : masks) {
    bool minimal = std::none_of(masks.begin(), masks.end(), [&](std::uint32_t o) { return o != m && (o & m) == o; });
    if (minimal) out.push_back(from_mask(m, g.vertex_count()));
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::size_t brute_min_separator_size(const Graph& g, Vertex s, Vertex t) {
  int n = g.vertex_count();
  std::vector<Vertex> inner;
  for (Vertex v = 0; v < n; ++v) {
    if (v != s && v != t) inner.push_back(v);
  }
  for (std::size_t size = 0; size <= inner.size(); ++size) {
    std::vector<char> choose(inner.size(), 0);
    std::fill(choose.end() - static_cast<std::ptrdiff_t>(size), choose.end(), 1);
    do {
      std::uint32_t m = 0;
      for (std::size_t i = 0; i < inner.size(); ++i) {
        if (choose[i]) m |= bit(inner[i]);
      }
      if (mask_separates(g, s, t, m)) return size;
    } while (std::next_permutation(choose.begin(), choose.end()));
  }
  return inner.size();
}

std::size_t vertex_disjoint_paths(const Graph& g, Vertex s, Vertex t) {
  // Node v splits into in = 2v and out = 2v + 1 with capacity 1 (terminals
  // unbounded); each edge becomes two arcs out -> in.
  int n = g.vertex_count();
  int big = n + 1;
  std::vector<std::vector<int>> cap(static_cast<std::size_t>(2 * n), std::vector<int>(static_cast<std::size_t>(2 * n), 0));
  auto at = [&](int a, int b) -> int& { return cap[static_cast<std::size_t>(a)][static_cast<std::size_t>(b)]; };
  for (Vertex v = 0; v < n; ++v) at(2 * v, 2 * v + 1) = (v == s || v == t) ? big : 1;
  for (auto [a, b] : g.edges()) {
    at(2 * a + 1, 2 * b) = big;
    at(2 * b + 1, 2 * a) = big;
  }
  int source = 2 * s + 1;
  int sink = 2 * t;
  std::size_t flow = 0;
  while (true) {
    std::vector<int> parent(static_cast<std::size_t>(2 * n), -1);
    parent[static_cast<std::size_t>(source)] = source;
    std::queue<int> q;
    q.push(source);
    while (!q.empty() && parent[static_cast<std::size_t>(sink)] < 0) {
      int x = q.front();
      q.pop();
      for (int y = 0; y < 2 * n; ++y) {
        if (at(x, y) > 0 && parent[static_cast<std::size_t>(y)] < 0) {
          parent[static_cast<std::size_t>(y)] = x;
          q.push(y);
        }
      }
    }
    if (parent[static_cast<std::size_t>(sink)] < 0) return flow;
    for (int y = sink; y != source; y = parent[static_cast<std::size_t>(y)]) {
      int x = parent[static_cast<std::size_t>(y)];
      at(x, y) -= 1;
      at(y, x) += 1;
    }
    ++flow;
  }
}

bool brute_separates(const Graph& g, Vertex s, Vertex t, const SeparatorState& removed) {
  std::uint32_t m = 0;
  for (Vertex v : removed) m |= bit(v);
  return mask_separates(g, s, t, m);
}

bool brute_has_3p1_or_diamond(const Graph& g) {
  int n = g.vertex_count();
  for (Vertex a = 0; a < n; ++a) {
    for (Vertex b = a + 1; b < n; ++b) {
      for (Vertex c = b + 1; c < n; ++c) {
        if (!g.adjacent(a, b) && !g.adjacent(a, c) && !g.adjacent(b, c)) return true;
        for (Vertex d = c + 1; d < n; ++d) {
          Vertex q[4] = {a, b, c, d};
          int edges = 0;
          for (int i = 0; i < 4; ++i) {
            for (int j = i + 1; j < 4; ++j) edges += g.adjacent(q[i], q[j]) ? 1 : 0;
          }
          if (edges == 5) return true;
        }
      }
    }
  }
  return false;
}

NamedGraph figure1() {
  return {Graph(10, {{4, 1}, {1, 2}, {2, 3}, {3, 5}, {5, 6}, {6, 3}, {3, 4}, {4, 6}, {6, 7},
                     {7, 5}, {5, 4}, {0, 1}, {4, 7}, {7, 8}, {6, 8}, {8, 9}, {9, 7}}),
          0, 9};
}

NamedGraph figure2() {
  std::vector<Edge> edges;
  auto clique = [&](std::vector<Vertex> q) {
    for (std::size_t i = 0; i < q.size(); ++i) {
      for (std::size_t j = i + 1; j < q.size(); ++j) edges.emplace_back(q[i], q[j]);
    }
  };
  clique({0, 1, 2, 3});
  clique({3, 4, 5, 6, 7});
  return {Graph(8, edges), 0, 4};
}

NamedGraph figure3(bool with_u1v1) {
  std::vector<Edge> edges;
  auto clique = [&](std::vector<Vertex> q) {
    for (std::size_t i = 0; i < q.size(); ++i) {
      for (std::size_t j = i + 1; j < q.size(); ++j) edges.emplace_back(q[i], q[j]);
    }
  };
  clique({0, 1, 2, 3, 4});
  clique({5, 6, 7, 8, 9});
  edges.emplace_back(0, 9);
  edges.emplace_back(2, 5);
  if (with_u1v1) edges.emplace_back(1, 6);
  return {Graph(10, edges), 0, 5};
}

NamedGraph figure8() {
  enum : Vertex { s, t, a, b, x1, x2, y1, y2, z1, z2 };
  return {Graph(10, {{x1, a}, {a, s}, {s, b}, {b, y1}, {y1, z1}, {z1, x1}, {x1, x2}, {x2, z2}, {z2, y2}, {y2, t},
                     {t, x2}, {y2, y1}}),
          s, t};
}

PSTree figure8_tree() {
  enum : Vertex { s, t, a, b, x1, x2, y1, y2, z1, z2 };
  PSTreeBuilder builder(a, b);
  auto [e_s, e_t] = builder.parallel(builder.root());
  builder.series(e_s, s);
  auto [a_y1, y1_b] = builder.series(e_t, y1);
  (void)y1_b;
  auto [a_x1, x1_y1] = builder.series(a_y1, x1);
  (void)a_x1;
  auto [c1, c2] = builder.parallel(x1_y1);
  builder.series(c1, z1);
  auto [x1_y2, y2_y1] = builder.series(c2, y2);
  (void)y2_y1;
  auto [x1_x2, x2_y2] = builder.series(x1_y2, x2);
  (void)x1_x2;
  auto [d1, d2] = builder.parallel(x2_y2);
  builder.series(d1, z2);
  builder.series(d2, t);
  return std::move(builder).build();
}

NamedGraph figure5() {
  enum : Vertex { u, v, a, a1, b, a2, t, z, s };
  return {Graph(9, {{u, a}, {a, a1}, {a1, b}, {b, v}, {v, a2}, {a2, u}, {a, t}, {t, z}, {z, s}, {s, b}}), s, t};
}

PSTree figure5_tree() {
  enum : Vertex { u, v, a, a1, b, a2, t, z, s };
  PSTreeBuilder builder(u, v);
  auto [uv1, uv2] = builder.parallel(builder.root());
  builder.series(uv1, a2);
  auto [u_a, a_v] = builder.series(uv2, a);
  (void)u_a;
  auto [a_b, b_v] = builder.series(a_v, b);
  (void)b_v;
  auto [ab1, ab2] = builder.parallel(a_b);
  builder.series(ab1, a1);
  auto [a_z, z_b] = builder.series(ab2, z);
  builder.series(a_z, t);
  builder.series(z_b, s);
  return std::move(builder).build();
}

}  // namespace vsr::testing
