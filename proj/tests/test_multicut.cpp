#include <algorithm>
#include <numeric>
#include <random>

#include <gtest/gtest.h>

#include "grr/error.hpp"
#include "grr/multicut.hpp"
#include "grr/oracle.hpp"

using namespace grr;

namespace {

MulticutInstance path4()
{
    // Vertices 1..4 of the path become 0..3; edge 1 is the middle edge 2-3.
    return {4, {{0, 1}, {1, 2}, {2, 3}}, {Rational(1), Rational(1), Rational(1)}, {{0, 2}, {1, 3}}};
}

MulticutInstance star_triple()
{
    // Center 0, leaves a=1, b=2, d=3.
    return {4, {{0, 1}, {0, 2}, {0, 3}}, {Rational(1), Rational(1), Rational(1)}, {{1, 2}, {2, 3}, {1, 3}}};
}

}  // namespace

TEST(IsMulticut, Examples)
{
    const MulticutInstance inst = path4();
    EXPECT_TRUE(is_multicut(inst, {1}));
    EXPECT_FALSE(is_multicut(inst, {0}));
    MulticutInstance empty = inst;
    empty.terminal_pairs.clear();
    EXPECT_TRUE(is_multicut(empty, {}));
    EXPECT_TRUE(is_minimal_multicut(inst, {1}));
    EXPECT_FALSE(is_minimal_multicut(inst, {0, 1}));
}

TEST(ValidateInstance, Rejections)
{
    MulticutInstance cyc = path4();
    cyc.edges.push_back({3, 0});
    cyc.weights.push_back(Rational(1));
    EXPECT_THROW(validate_instance(cyc), GrrError);
    MulticutInstance self = path4();
    self.terminal_pairs.push_back({2, 2});
    EXPECT_THROW(validate_instance(self), GrrError);
}

TEST(SolveExactSmall, Examples)
{
    const Cut a = solve_exact_small(path4());
    EXPECT_EQ(a.total_weight, Rational(1));
    EXPECT_EQ(a.edges, std::vector<int>{1});
    EXPECT_EQ(solve_exact_small(star_triple()).total_weight, Rational(2));
    MulticutInstance none = path4();
    none.terminal_pairs.clear();
    EXPECT_TRUE(solve_exact_small(none).edges.empty());
}

TEST(SolveExactSmall, BudgetExceeded)
{
    MulticutInstance big;
    big.vertex_count = 27;
    for (int i = 0; i + 1 < 27; ++i) {
        big.edges.emplace_back(i, i + 1);
        big.weights.emplace_back(1);
    }
    big.terminal_pairs = {{0, 26}};
    EXPECT_THROW(solve_exact_small(big), GrrError);
}

TEST(SolveExactSmall, RespectsWeights)
{
    MulticutInstance inst = path4();
    inst.weights = {Rational(1, 3), Rational(5), Rational(1, 2)};
    const Cut c = solve_exact_small(inst);
    EXPECT_EQ(c.total_weight, Rational(5, 6));
    EXPECT_EQ(c.edges, (std::vector<int>{0, 2}));
}

TEST(ApproxGvy, Examples)
{
    const Cut a = approx_gvy(path4());
    EXPECT_LE(a.total_weight, Rational(2));
    EXPECT_TRUE(is_multicut(path4(), a.edges));
    const Cut b = approx_gvy(star_triple());
    EXPECT_EQ(b.total_weight, Rational(2));
    EXPECT_TRUE(is_minimal_multicut(star_triple(), b.edges));
}

TEST(ApproxGvy, WithinTwiceOptimum)
{
    std::mt19937_64 rng(41);
    for (int i = 0; i < 300; ++i) {
        const int vertices = 2 + static_cast<int>(rng() % 20);
        const int pairs = static_cast<int>(rng() % 11);
        const MulticutInstance inst = oracle::random_multicut_instance(rng, vertices, pairs);
        const Cut exact = solve_exact_small(inst);
        const Cut approx = approx_gvy(inst);
        ASSERT_TRUE(is_multicut(inst, exact.edges));
        ASSERT_TRUE(is_multicut(inst, approx.edges));
        ASSERT_TRUE(is_minimal_multicut(inst, approx.edges));
        ASSERT_LE(exact.total_weight, approx.total_weight);
        ASSERT_LE(approx.total_weight, Rational(2) * exact.total_weight);
    }
}

TEST(SolveExactSmall, InvariantUnderRelabeling)
{
    std::mt19937_64 rng(42);
    for (int i = 0; i < 150; ++i) {
        const MulticutInstance inst =
            oracle::random_multicut_instance(rng, 3 + static_cast<int>(rng() % 14), 1 + static_cast<int>(rng() % 8));
        std::vector<int> perm(inst.vertex_count);
        std::iota(perm.begin(), perm.end(), 0);
        std::shuffle(perm.begin(), perm.end(), rng);
        MulticutInstance relabeled = inst;
        for (auto& [u, v] : relabeled.edges) {
            u = perm[u];
            v = perm[v];
        }
        for (auto& [u, v] : relabeled.terminal_pairs) {
            u = perm[u];
            v = perm[v];
        }
        ASSERT_EQ(solve_exact_small(inst).total_weight, solve_exact_small(relabeled).total_weight);
    }
}

TEST(TreePathEdges, Path)
{
    EXPECT_EQ(tree_path_edges(path4(), 0, 3), (std::vector<int>{0, 1, 2}));
    EXPECT_EQ(tree_path_edges(star_triple(), 1, 3), (std::vector<int>{0, 2}));
}
