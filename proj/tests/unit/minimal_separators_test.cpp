#include <gtest/gtest.h>

#include "support.hpp"
#include "vsr/error.hpp"
#include "vsr/minimal_separators.hpp"
#include "vsr/oracle.hpp"

using namespace vsr;
using namespace vsr::testing;

namespace {

// Sides {0, 1} and {2, 3, 4}.
Graph k23() { return Graph(5, {{0, 2}, {0, 3}, {0, 4}, {1, 2}, {1, 3}, {1, 4}}); }

}  // namespace

TEST(MinimalSeparators, SmallFamilies) {
  EXPECT_EQ(enumerate_minimal_separators(path_graph(3), 0, 2).members, (std::vector<SeparatorState>{{1}}));
  EXPECT_EQ(enumerate_minimal_separators(cycle_graph(5), 0, 2).members,
            (std::vector<SeparatorState>{{1, 3}, {1, 4}}));
  EXPECT_EQ(enumerate_minimal_separators(k23(), 0, 1).members, (std::vector<SeparatorState>{{2, 3, 4}}));
  EXPECT_EQ(enumerate_minimal_separators(path_graph(5), 0, 4).members,
            (std::vector<SeparatorState>{{1}, {2}, {3}}));
}

TEST(MinimalSeparators, AdjacentTerminalsAreRejected) {
  EXPECT_THROW(enumerate_minimal_separators(path_graph(3), 0, 1), InputError);
}

TEST(MinimalSeparators, FamilyCap) {
  EXPECT_THROW(enumerate_minimal_separators(cycle_graph(5), 0, 2, {.family_cap = 1}), ResourceLimit);
  EXPECT_NO_THROW(enumerate_minimal_separators(cycle_graph(5), 0, 2, {.family_cap = 2}));
}

TEST(MinimalSeparators, MatchesBruteForce) {
  Rng rng(7);
  for (int i = 0; i < 500; ++i) {
    Graph g = random_graph(std::uniform_int_distribution<int>(3, 10)(rng), 0.3, rng);
    auto st = random_nonadjacent_pair(g, rng);
    if (!st) continue;
    auto family = enumerate_minimal_separators(g, st->first, st->second);
    EXPECT_EQ(family.members, brute_minimal_separators(g, st->first, st->second));
  }
}

TEST(OverlapGraph, BoundControlsEdges) {
  auto family = enumerate_minimal_separators(cycle_graph(5), 0, 2);
  auto loose = build_overlap_graph(family, 3);
  EXPECT_EQ(loose.edges(), (std::vector<std::pair<std::size_t, std::size_t>>{{0, 1}}));
  EXPECT_EQ(loose.index_of({1, 4}), 1u);
  EXPECT_FALSE(loose.index_of({1, 3, 4}));
  EXPECT_TRUE(build_overlap_graph(family, 2).edges().empty());
}

TEST(Tame, C5Examples) {
  auto inst = ReconfigInstance::create(cycle_graph(5), 0, 2, Rule::TAR, {1, 3}, {1, 4}, 3);
  auto yes = tame_solve(inst);
  ASSERT_TRUE(yes.reachable);
  EXPECT_EQ(*yes.sequence, (ReconfigSequence{{1, 3}, {1, 3, 4}, {1, 4}}));
  EXPECT_EQ(yes.family_size, 2u);
  EXPECT_FALSE(tame_solve(inst.with_rule(Rule::TAR, 2)).reachable);

  auto tj = tame_solve_tj(inst.with_rule(Rule::TJ));
  ASSERT_TRUE(tj.reachable);
  EXPECT_EQ(*tj.sequence, (ReconfigSequence{{1, 3}, {1, 4}}));
}

TEST(Tame, NonMinimalEndpointsShrinkFirst) {
  // P5 with s=0, t=4; {1, 2} -> {2, 3} under TAR(2).
  auto inst = ReconfigInstance::create(path_graph(5), 0, 4, Rule::TAR, {1, 2}, {2, 3}, 2);
  auto r = tame_solve(inst);
  ASSERT_TRUE(r.reachable);
  EXPECT_TRUE(verify_sequence(inst, *r.sequence));
  EXPECT_EQ(r.sequence->front(), (SeparatorState{1, 2}));
}

TEST(Tame, AgreesWithOracle) {
  Rng rng(13);
  int yes = 0;
  int no = 0;
  for (int i = 0; i < 600; ++i) {
    Graph g = random_connected_graph(std::uniform_int_distribution<int>(4, 9)(rng), 0.3, rng);
    auto st = random_nonadjacent_pair(g, rng);
    if (!st) continue;
    auto [s, t] = *st;
    auto seps = all_separators(g, s, t);
    if (seps.empty()) continue;
    // Minimal endpoints make tight bounds, and so negative answers, common.
    auto pool = i % 2 ? brute_minimal_separators(g, s, t) : seps;
    std::uniform_int_distribution<std::size_t> pick(0, pool.size() - 1);
    const auto& A = pool[pick(rng)];
    const auto& B = pool[pick(rng)];
    int low = static_cast<int>(std::max(A.size(), B.size()));
    int k = std::uniform_int_distribution<int>(low, low + 1)(rng);
    auto inst = ReconfigInstance::create(g, s, t, Rule::TAR, A, B, k);
    auto answer = tame_solve(inst);
    EXPECT_EQ(answer.reachable, solve_bfs(inst).reachable);
    if (answer.reachable) {
      EXPECT_TRUE(verify_sequence(inst, *answer.sequence));
      ++yes;
    } else {
      ++no;
    }

    auto same = all_separators_of_size(g, s, t, A.size());
    auto tj = ReconfigInstance::create(g, s, t, Rule::TJ, A, same[pick(rng) % same.size()]);
    auto tj_answer = tame_solve_tj(tj);
    EXPECT_EQ(tj_answer.reachable, solve_bfs(tj).reachable);
    if (tj_answer.reachable) EXPECT_TRUE(verify_sequence(tj, *tj_answer.sequence));
  }
  EXPECT_GT(yes, 50);
  EXPECT_GT(no, 20);
}
