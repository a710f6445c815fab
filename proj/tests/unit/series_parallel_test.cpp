#include <gtest/gtest.h>

#include <algorithm>

#include "support.hpp"
#include "vsr/error.hpp"
#include "vsr/oracle.hpp"
#include "vsr/separator.hpp"
#include "vsr/series_parallel.hpp"

using namespace vsr;
using namespace vsr::testing;

namespace {

std::size_t count_ops(const PSTree& tree, SpOp op) {
  return static_cast<std::size_t>(
      std::count_if(tree.nodes().begin(), tree.nodes().end(), [&](const PSNode& n) { return n.op == op; }));
}

// 0-2 doubled, each copy subdivided: 1 on the first, 3 on the second.
struct C4Build {
  PSTree tree;
  int first = -1;
};

C4Build c4_double_edge() {
  PSTreeBuilder builder(0, 2);
  auto [c1, c2] = builder.parallel(builder.root());
  builder.series(c1, 1);
  builder.series(c2, 3);
  return {std::move(builder).build(), c1};
}

// u=0, v=1, z1..z3=2..4.
Graph k23() { return Graph(5, {{0, 2}, {0, 3}, {0, 4}, {1, 2}, {1, 3}, {1, 4}}); }

struct K23Build {
  PSTree tree;
  int z1_copy = -1;
};

K23Build k23_tree() {
  PSTreeBuilder builder(0, 1);
  auto [e1, e2] = builder.parallel(builder.root());
  auto [e3, e4] = builder.parallel(e2);
  builder.series(e1, 2);
  builder.series(e3, 3);
  builder.series(e4, 4);
  return {std::move(builder).build(), e1};
}

SpDecomposition with_tree(const Graph& g, PSTree tree) {
  auto dec = recognize_and_decompose(g);
  dec.blocks.front().tree = std::move(tree);
  return dec;
}

std::vector<Edge> sorted_edges(std::vector<Edge> edges) {
  std::sort(edges.begin(), edges.end());
  return edges;
}

}  // namespace

TEST(PSTree, TriangleHasOneSeriesUnderTheRoot) {
  auto dec = recognize_and_decompose(complete_graph(3));
  ASSERT_EQ(dec.blocks.size(), 1u);
  const auto& tree = *dec.blocks[0].tree;
  EXPECT_EQ(tree.node(tree.root()).op, SpOp::Parallel);
  EXPECT_EQ(count_ops(tree, SpOp::Series), 1u);
  EXPECT_EQ(count_ops(tree, SpOp::Parallel), 1u);
  auto [a, b] = tree.base_vertices();
  EXPECT_EQ(tree.epsilon(a, b), 1);
  EXPECT_EQ(tree.replay(), complete_graph(3).edges());
}

TEST(PSTree, K23Decomposition) {
  auto dec = recognize_and_decompose(k23());
  const auto& tree = *dec.blocks.front().tree;
  EXPECT_EQ(count_ops(tree, SpOp::Parallel), 2u);
  EXPECT_EQ(count_ops(tree, SpOp::Series), 3u);
  EXPECT_EQ(tree.replay(), k23().edges());
}

TEST(PSTree, K23Construction) {
  auto [tree, z1_copy] = k23_tree();
  EXPECT_EQ(tree.replay(), k23().edges());
  EXPECT_EQ(tree.epsilon(0, 1), 2);
  EXPECT_EQ(tree.span(2), std::vector<int>{z1_copy});
  EXPECT_FALSE(tree.support(0));
  EXPECT_TRUE(tree.span(1).empty());

  auto c = classify_pair(tree, 0, 1);
  EXPECT_EQ(c.kind, PairKind::RootBoth);
  EXPECT_EQ(c.v_st, (std::vector<Vertex>{2, 3, 4}));
  auto m = canonical_separator(tree, 0, 1);
  EXPECT_EQ(m.members, (SeparatorState{2, 3, 4}));
  EXPECT_EQ(m.members.size(), static_cast<std::size_t>(m.epsilon + 1));
  EXPECT_EQ(brute_min_separator_size(k23(), 0, 1), 3u);
}

TEST(PSTree, C4DoubleEdge) {
  auto [tree, first] = c4_double_edge();
  EXPECT_EQ(sorted_edges(tree.replay()), cycle_graph(4).edges());
  EXPECT_EQ(tree.support(1), first);
  EXPECT_EQ(tree.span(1), std::vector<int>{first});
  auto c = classify_pair(tree, 1, 3);
  EXPECT_EQ(c.kind, PairKind::Parallel);
  EXPECT_EQ(std::minmax(c.a, c.b), std::minmax(0, 2));
  EXPECT_EQ(tree.epsilon(1, 3), 0);
  EXPECT_FALSE(tree.edge_ever_exists(1, 3));
  EXPECT_TRUE(tree.edge_ever_exists(0, 2));
  EXPECT_EQ(canonical_separator(tree, 1, 3).members, (SeparatorState{0, 2}));
  EXPECT_EQ(tree.pieces(tree.root()), (std::vector<Vertex>{1, 3}));
  EXPECT_EQ(tree.lca(tree.node(first).left, tree.node(first).right), first);
  EXPECT_TRUE(tree.is_ancestor(tree.root(), first));
}

TEST(PSTree, SerialPairFixture) {
  enum : Vertex { a = 2, z = 7 };
  auto f = figure5();
  auto tree = figure5_tree();
  EXPECT_EQ(sorted_edges(tree.replay()), f.graph.edges());
  auto c = classify_pair(tree, f.s, f.t);
  EXPECT_EQ(c.kind, PairKind::Serial);
  EXPECT_EQ(c.a, a);
  EXPECT_EQ(c.b, z);
  EXPECT_EQ(canonical_separator(tree, f.s, f.t).members, (SeparatorState{a, z}));
  EXPECT_TRUE(is_minimal_separator(f.graph, f.s, f.t, {a, z}));
}

TEST(PSTree, FigureEightCanonical) {
  enum : Vertex { a = 2, b = 3, x1, x2, y1, y2 };
  auto f = figure8();
  auto dec = with_tree(f.graph, figure8_tree());
  EXPECT_EQ(canonical_separator(f.graph, dec, f.s, f.t).members, (SeparatorState{a, b}));
  auto walk = reconfigure_to_canonical(f.graph, dec, f.s, f.t, {x2, y2});
  EXPECT_EQ(walk, (ReconfigSequence{{x2, y2}, {x1, y2}, {x1, y1}, {a, y1}, {a, b}}));
}

TEST(PSTree, BuilderContract) {
  PSTreeBuilder no_parallel(0, 1);
  no_parallel.series(no_parallel.root(), 2);
  EXPECT_THROW(std::move(no_parallel).build(), ContractViolation);

  PSTreeBuilder reused(0, 1);
  auto [p, q] = reused.parallel(reused.root());
  reused.series(p, 2);
  EXPECT_THROW(reused.series(q, 2), InputError);
  EXPECT_THROW(reused.series(p, 3), InputError);  // p is no longer a leaf
}

TEST(Recognition, RejectsK4) {
  EXPECT_THROW(recognize_and_decompose(complete_graph(4)), NotSeriesParallel);
  EXPECT_FALSE(is_series_parallel(complete_graph(4)));
  // K4 with one subdivided edge sits in a block beside a triangle.
  Graph g(7, {{0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 4}, {4, 3}, {2, 3}, {3, 5}, {3, 6}, {5, 6}});
  EXPECT_FALSE(is_series_parallel(g));
}

TEST(Recognition, BlocksAndCutVertices) {
  Graph bowtie(5, {{0, 1}, {0, 2}, {1, 2}, {2, 3}, {2, 4}, {3, 4}});
  auto dec = recognize_and_decompose(bowtie);
  EXPECT_EQ(dec.blocks.size(), 2u);
  EXPECT_EQ(dec.cut_vertices, std::vector<Vertex>{2});
  ASSERT_TRUE(dec.block_containing(0, 1));
  EXPECT_EQ(dec.blocks[*dec.block_containing(0, 1)].vertices, (std::vector<Vertex>{0, 1, 2}));
  EXPECT_FALSE(dec.block_containing(0, 3));
  auto c = classify_pair(bowtie, dec, 0, 3);
  EXPECT_EQ(c.kind, PairKind::CutVertexSeparated);
  EXPECT_EQ(c.cut, 2);
  EXPECT_EQ(canonical_separator(bowtie, dec, 0, 3).members, SeparatorState{2});

  auto path = recognize_and_decompose(path_graph(4));
  EXPECT_EQ(path.blocks.size(), 3u);
  for (const auto& block : path.blocks) EXPECT_FALSE(block.tree);
  EXPECT_THROW(classify_pair(path_graph(4), path, 0, 1), InputError);
}

TEST(Recognition, RandomGraphsReplay) {
  Rng rng(41);
  for (int i = 0; i < 300; ++i) {
    Graph g = random_sp_graph(std::uniform_int_distribution<int>(3, 25)(rng), rng);
    auto dec = recognize_and_decompose(g);
    std::vector<Edge> all;
    for (const auto& block : dec.blocks) {
      auto edges = block.tree ? block.tree->replay() : block.edges;
      EXPECT_EQ(sorted_edges(edges), sorted_edges(block.edges));
      all.insert(all.end(), edges.begin(), edges.end());
    }
    EXPECT_EQ(sorted_edges(all), g.edges());
  }
}

// Canonical separators have the size of a minimum separator when the
// brute-force answer is available.
TEST(Canonical, MinimalAndMinimum) {
  Rng rng(43);
  int checked = 0;
  for (int i = 0; i < 400; ++i) {
    Graph g = random_sp_graph(std::uniform_int_distribution<int>(4, 12)(rng), rng);
    auto st = random_nonadjacent_pair(g, rng);
    if (!st) continue;
    auto [s, t] = *st;
    auto c = canonical_separator(g, recognize_and_decompose(g), s, t);
    EXPECT_TRUE(is_minimal_separator(g, s, t, c.members)) << pair_kind_name(c.classification.kind);
    EXPECT_EQ(c.members.size(), brute_min_separator_size(g, s, t)) << pair_kind_name(c.classification.kind);
    ++checked;
  }
  EXPECT_GT(checked, 300);
}

TEST(Canonical, WalkRequiresMinimalStart) {
  auto dec = recognize_and_decompose(path_graph(4));
  EXPECT_THROW(reconfigure_to_canonical(path_graph(4), dec, 0, 3, {1, 2}), ContractViolation);
}

TEST(Canonical, WalksReachM) {
  Rng rng(47);
  SpSolveStats stats;
  int walks = 0;
  for (int i = 0; i < 300; ++i) {
    Graph g = random_sp_graph(std::uniform_int_distribution<int>(4, 12)(rng), rng);
    auto st = random_nonadjacent_pair(g, rng);
    if (!st) continue;
    auto [s, t] = *st;
    auto dec = recognize_and_decompose(g);
    auto m = canonical_separator(g, dec, s, t).members;
    for (const auto& A : brute_minimal_separators(g, s, t)) {
      auto walk = reconfigure_to_canonical(g, dec, s, t, A, &stats);
      ASSERT_FALSE(walk.empty());
      EXPECT_EQ(walk.front(), A);
      EXPECT_TRUE(walk.back().contains_all(m));
      EXPECT_TRUE(verify_transitions(g, s, t, Rule::TJ, 0, walk));
      ++walks;
    }
  }
  EXPECT_GT(walks, 300);
  EXPECT_EQ(stats.pathway_violations, 0u);
}

TEST(SpSolve, AlwaysYesAndValid) {
  Rng rng(53);
  int solved = 0;
  for (int i = 0; i < 300; ++i) {
    Graph g = random_sp_graph(std::uniform_int_distribution<int>(4, 11)(rng), rng);
    auto st = random_nonadjacent_pair(g, rng);
    if (!st) continue;
    auto [s, t] = *st;
    auto seps = all_separators(g, s, t);
    std::uniform_int_distribution<std::size_t> pick(0, seps.size() - 1);
    const auto& A = seps[pick(rng)];
    auto same = all_separators_of_size(g, s, t, A.size());
    const auto& B = same[pick(rng) % same.size()];
    auto inst = ReconfigInstance::create(g, s, t, Rule::TJ, A, B);
    auto seq = sp_solve_tj(inst);
    EXPECT_TRUE(verify_sequence(inst, seq));
    EXPECT_TRUE(solve_bfs(inst).reachable);
    ++solved;
  }
  EXPECT_GT(solved, 200);
}

TEST(SpSolve, RefusesNonSeriesParallel) {
  Graph g(6, {{0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3}, {2, 3}, {1, 4}, {2, 4}, {3, 4}, {4, 5}});
  auto inst = ReconfigInstance::create(g, 0, 4, Rule::TJ, {1, 2, 3}, {1, 2, 3});
  EXPECT_THROW(sp_solve_tj(inst), NotSeriesParallel);
}
