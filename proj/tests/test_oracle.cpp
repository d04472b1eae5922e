#include <algorithm>
#include <random>

#include <gtest/gtest.h>

#include "grr/error.hpp"
#include "grr/oracle.hpp"

using namespace grr;

TEST(BruteForceMinGtd, Fixtures)
{
    EXPECT_EQ(oracle::brute_force_min_gtd(oracle::p_acute(), ContactMode::Any).size, 2);
    EXPECT_EQ(oracle::brute_force_min_gtd(oracle::star3(), ContactMode::Proper).size, 1);
    EXPECT_EQ(oracle::brute_force_min_gtd(oracle::plus_star(), ContactMode::Noncrossing).size, 1);
    EXPECT_EQ(oracle::brute_force_min_gtd(oracle::plus_star(), ContactMode::Any).size, 1);
    EXPECT_EQ(oracle::brute_force_min_gtd(oracle::split_comb(), ContactMode::Any).size, 3);
}

TEST(BruteForceMinGtd, BudgetExceeded)
{
    std::mt19937_64 rng(81);
    const Drawing big = oracle::random_tree_drawing(rng, 11, 8);
    EXPECT_THROW(oracle::brute_force_min_gtd(big, ContactMode::Proper), GrrError);
}

TEST(BruteForceMinGtd, ModeChainAndUpperBound)
{
    std::mt19937_64 rng(82);
    for (int i = 0; i < 150; ++i) {
        const Drawing d = oracle::random_tree_drawing(rng, 2 + static_cast<int>(rng() % 7), 4);
        const auto any = oracle::brute_force_min_gtd(d, ContactMode::Any);
        const auto nc = oracle::brute_force_min_gtd(d, ContactMode::Noncrossing);
        const auto pr = oracle::brute_force_min_gtd(d, ContactMode::Proper);
        ASSERT_LE(any.size, nc.size);
        ASSERT_LE(nc.size, pr.size);
        ASSERT_LE(pr.size, d.edge_count());
        ASSERT_TRUE(validate_partition(d, any.partition).ok());
        ASSERT_TRUE(validate_partition(d, nc.partition).ok());
        ASSERT_TRUE(validate_partition(d, pr.partition).ok());
        ASSERT_EQ(any.partition.size(), any.size);
    }
}

TEST(BruteForceMinGtd, IndependentOfEdgeOrder)
{
    std::mt19937_64 rng(83);
    for (int i = 0; i < 60; ++i) {
        const Drawing d = oracle::random_tree_drawing(rng, 3 + static_cast<int>(rng() % 5), 4);
        RawDrawing raw = d.to_raw();
        std::shuffle(raw.edges.begin(), raw.edges.end(), rng);
        for (auto& [u, v] : raw.edges) {
            if (rng() % 2) std::swap(u, v);
        }
        const Drawing shuffled = validate_drawing(raw);
        for (ContactMode mode : {ContactMode::Proper, ContactMode::Noncrossing, ContactMode::Any}) {
            ASSERT_EQ(oracle::brute_force_min_gtd(d, mode).size, oracle::brute_force_min_gtd(shuffled, mode).size);
        }
    }
}

TEST(BruteForceMinPolygon, Fixtures)
{
    EXPECT_EQ(oracle::brute_force_min_polygon(oracle::u_shape()), 2);
    EXPECT_EQ(oracle::brute_force_min_polygon(oracle::rect()), 1);
    EXPECT_EQ(oracle::brute_force_min_polygon(oracle::convex_fan()), 1);
    EXPECT_EQ(oracle::brute_force_min_polygon(oracle::two_notch_comb()), 3);
}

TEST(SampledProbe, Fixtures)
{
    const auto rect = oracle::sampled_grr_probe(oracle::rect().polygon, 500, 1);
    EXPECT_EQ(rect.attempted, 500);
    EXPECT_EQ(rect.success_rate(), 1.0);
    EXPECT_EQ(rect.monotonicity_violations, 0);

    const auto l = oracle::sampled_grr_probe(oracle::l_shape().polygon, 500, 2);
    EXPECT_EQ(l.success_rate(), 1.0);
    EXPECT_EQ(l.monotonicity_violations, 0);

    const Point s{Rational(1, 2), Rational(5, 2)};
    const Point t{Rational(5, 2), Rational(5, 2)};
    const auto u = oracle::sampled_grr_probe(oracle::u_shape().polygon, 500, 3, {{s, t}});
    EXPECT_LT(u.succeeded, u.attempted);
    ASSERT_TRUE(u.first_failure.has_value());
    EXPECT_EQ(u.monotonicity_violations, 0);
}

TEST(Generators, DeterministicGivenSeed)
{
    std::mt19937_64 a(84);
    std::mt19937_64 b(84);
    for (int i = 0; i < 20; ++i) {
        const Drawing da = oracle::random_tree_drawing(a, 6);
        const Drawing db = oracle::random_tree_drawing(b, 6);
        ASSERT_EQ(da.edge_count(), db.edge_count());
        for (int v = 0; v < da.vertex_count(); ++v) ASSERT_EQ(da.point(v), db.point(v));
        const TriangulatedPolygon pa = oracle::random_triangulated_polygon(a, 7);
        const TriangulatedPolygon pb = oracle::random_triangulated_polygon(b, 7);
        ASSERT_EQ(pa.polygon.vertices(), pb.polygon.vertices());
        ASSERT_EQ(pa.diagonals, pb.diagonals);
    }
}
