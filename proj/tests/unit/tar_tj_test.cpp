#include <gtest/gtest.h>

#include "support.hpp"
#include "vsr/error.hpp"
#include "vsr/oracle.hpp"
#include "vsr/tar_tj.hpp"

using namespace vsr;
using namespace vsr::testing;

namespace {

// s=0, t=1, c=2, x=3, y=4; every separator holds c.
Graph star() { return Graph(5, {{0, 2}, {2, 1}, {0, 3}, {0, 4}}); }

}  // namespace

TEST(TarTj, InterleaveAndBack) {
  ReconfigSequence tj{{1, 3}, {1, 4}};
  auto tar = tj_to_tar_sequence(tj);
  EXPECT_EQ(tar, (ReconfigSequence{{1, 3}, {1, 3, 4}, {1, 4}}));
  EXPECT_EQ(tar_to_tj_sequence(cycle_graph(5), 0, 2, tar, 2), tj);
  EXPECT_THROW(tj_to_tar_sequence({{1, 3}, {2, 4}, {1, 3}}), InputError);
  EXPECT_THROW(tj_to_tar_sequence({}), InputError);
  // Even length is not alternating.
  EXPECT_THROW(tar_to_tj_sequence(cycle_graph(5), 0, 2, {{1, 3}, {1, 3, 4}}, 2), ContractViolation);
}

TEST(TarTj, NormalizeFillsDips) {
  ReconfigSequence dip{{2, 3}, {2}, {2, 4}};
  EXPECT_EQ(normalize_tar_sequence(star(), 0, 1, dip, 2), (ReconfigSequence{{2, 3}, {2, 3, 4}, {2, 4}}));
  ReconfigSequence detour{{2, 3}, {2}, {2, 3}};
  EXPECT_EQ(normalize_tar_sequence(star(), 0, 1, detour, 2), (ReconfigSequence{{2, 3}}));
  ReconfigSequence repeats{{2, 3}, {2, 3}, {2}, {2, 4}, {2, 4}};
  EXPECT_EQ(normalize_tar_sequence(star(), 0, 1, repeats, 2).size(), 3u);
  EXPECT_THROW(normalize_tar_sequence(star(), 0, 1, {{2}}, 2), ContractViolation);
  EXPECT_THROW(normalize_tar_sequence(star(), 0, 1, {{2, 3}, {3}}, 2), ContractViolation);
}

TEST(TarTj, TriviallyNegative) {
  auto c5 = ReconfigInstance::create(cycle_graph(5), 0, 2, Rule::TAR, {1, 3}, {1, 4}, 2);
  EXPECT_TRUE(is_trivially_negative_tar(c5));
  EXPECT_FALSE(solve_bfs(c5).reachable);
  EXPECT_FALSE(is_trivially_negative_tar(c5.with_rule(Rule::TAR, 3)));
  EXPECT_FALSE(is_trivially_negative_tar(c5.with_states({1, 3}, {1, 3})));
  EXPECT_THROW(is_trivially_negative_tar(c5.with_rule(Rule::TJ)), InputError);
  EXPECT_THROW(tar_to_tj_instance(c5), ContractViolation);
  // {2, 3} is not minimal: the tight bound does not matter.
  auto s = ReconfigInstance::create(star(), 0, 1, Rule::TAR, {2, 3}, {2, 4}, 2);
  EXPECT_FALSE(is_trivially_negative_tar(s));
}

TEST(TarTj, StarConversionAndLift) {
  auto inst = ReconfigInstance::create(star(), 0, 1, Rule::TAR, {2, 3}, {2, 4}, 2);
  auto conv = tar_to_tj_instance(inst);
  EXPECT_EQ(conv.k, 2);
  EXPECT_EQ(conv.tj.rule(), Rule::TJ);
  EXPECT_EQ(conv.tj.source(), (SeparatorState{2}));
  EXPECT_EQ(conv.tj.target(), (SeparatorState{2}));
  EXPECT_EQ(conv.source_bridge, (ReconfigSequence{{2, 3}, {2}}));
  EXPECT_EQ(conv.target_bridge, (ReconfigSequence{{2, 4}, {2}}));
  auto lifted = lift_tj_solution(conv, {{2}});
  EXPECT_EQ(lifted, (ReconfigSequence{{2, 3}, {2}, {2, 4}}));
  EXPECT_TRUE(verify_sequence(inst, lifted));
}

TEST(TarTj, PaddingUsesSmallestFreeIds) {
  auto inst = ReconfigInstance::create(cycle_graph(5), 0, 2, Rule::TAR, {1, 3}, {1, 4}, 4);
  auto conv = tar_to_tj_instance(inst);
  EXPECT_EQ(conv.tj.source(), (SeparatorState{1, 3, 4}));
  EXPECT_EQ(conv.tj.target(), (SeparatorState{1, 3, 4}));
}

TEST(TarTj, BindingBound) {
  auto loose = ReconfigInstance::create(cycle_graph(5), 0, 2, Rule::TAR, {1, 3}, {1, 4}, 7);
  EXPECT_THROW(tar_to_tj_instance(loose), InputError);
  EXPECT_EQ(with_binding_bound(loose).k(), 4);
  EXPECT_EQ(with_binding_bound(loose.with_rule(Rule::TAR, 3)).k(), 3);
  auto conv = tar_to_tj_instance(with_binding_bound(loose));
  auto lifted = lift_tj_solution(conv, *solve_bfs(conv.tj).sequence);
  EXPECT_TRUE(verify_sequence(loose, lifted));
}

TEST(TarTj, TjToTarInstance) {
  auto tj = ReconfigInstance::create(cycle_graph(5), 0, 2, Rule::TJ, {1, 3}, {1, 4});
  auto tar = tj_to_tar_instance(tj);
  EXPECT_EQ(tar.rule(), Rule::TAR);
  EXPECT_EQ(tar.k(), 3);
  EXPECT_EQ(tar.source(), tj.source());
}

// Distances: TAR(k+1) between size-k separators is exactly twice TJ.
TEST(TarTj, DistancesDoubleOnRandomGraphs) {
  Rng rng(101);
  int compared = 0;
  for (int i = 0; i < 300; ++i) {
    Graph g = random_connected_graph(std::uniform_int_distribution<int>(4, 8)(rng), 0.35, rng);
    auto st = random_nonadjacent_pair(g, rng);
    if (!st) continue;
    auto [s, t] = *st;
    auto seps = all_separators(g, s, t);
    if (seps.empty()) continue;
    std::uniform_int_distribution<std::size_t> pick(0, seps.size() - 1);
    const auto& A = seps[pick(rng)];
    auto same = all_separators_of_size(g, s, t, A.size());
    const auto& B = same[std::uniform_int_distribution<std::size_t>(0, same.size() - 1)(rng)];
    auto tj = ReconfigInstance::create(g, s, t, Rule::TJ, A, B);
    auto tar = tj_to_tar_instance(tj);
    auto rj = solve_bfs(tj);
    auto ra = solve_bfs(tar);
    ASSERT_EQ(rj.reachable, ra.reachable);
    if (!rj.reachable) continue;
    EXPECT_EQ(*ra.distance, 2 * *rj.distance);
    auto normalized = normalize_tar_sequence(g, s, t, *ra.sequence, static_cast<int>(A.size()));
    auto back = tar_to_tj_sequence(g, s, t, normalized, static_cast<int>(A.size()));
    EXPECT_TRUE(verify_sequence(tj, back));
    EXPECT_EQ(tj_to_tar_sequence(back), normalized);
    ++compared;
  }
  EXPECT_GT(compared, 100);
}

// Conversion preserves the answer and lifted certificates are valid.
TEST(TarTj, ConversionPreservesReachability) {
  Rng rng(202);
  int lifted_count = 0;
  for (int i = 0; i < 300; ++i) {
    Graph g = random_connected_graph(std::uniform_int_distribution<int>(4, 8)(rng), 0.35, rng);
    auto st = random_nonadjacent_pair(g, rng);
    if (!st) continue;
    auto [s, t] = *st;
    auto seps = all_separators(g, s, t);
    if (seps.empty()) continue;
    std::uniform_int_distribution<std::size_t> pick(0, seps.size() - 1);
    const auto& A = seps[pick(rng)];
    const auto& B = seps[pick(rng)];
    int low = static_cast<int>(std::max(A.size(), B.size()));
    int k = std::uniform_int_distribution<int>(std::max(low, 1), g.vertex_count() - 1)(rng);
    if (A == B) continue;
    auto inst = ReconfigInstance::create(g, s, t, Rule::TAR, A, B, k);
    bool truth = solve_bfs(inst).reachable;
    if (is_trivially_negative_tar(inst)) {
      EXPECT_FALSE(truth);
      continue;
    }
    auto conv = tar_to_tj_instance(inst);
    auto tj = solve_bfs(conv.tj);
    EXPECT_EQ(truth, tj.reachable);
    if (!tj.reachable) continue;
    auto lifted = lift_tj_solution(conv, *tj.sequence);
    EXPECT_TRUE(verify_sequence(inst, lifted));
    ++lifted_count;
  }
  EXPECT_GT(lifted_count, 100);
}
