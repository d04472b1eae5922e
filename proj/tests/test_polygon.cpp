#include <random>

#include <gtest/gtest.h>

#include "grr/error.hpp"
#include "grr/oracle.hpp"
#include "grr/polygon.hpp"
#include "support.hpp"

using namespace grr;
using grr::testing::pt;

namespace {

ErrorCode rejection(const std::vector<Point>& pts, const std::vector<std::pair<int, int>>& diagonals)
{
    try {
        build_dual_tree(Polygon(pts), diagonals);
    } catch (const GrrError& e) {
        return e.code();
    }
    ADD_FAILURE() << "expected rejection";
    return ErrorCode::SyntaxError;
}

const std::vector<Point> kRect = {pt(0, 0), pt(4, 0), pt(4, 2), pt(0, 2)};

}  // namespace

TEST(Polygon, RejectsInvalidBoundaries)
{
    EXPECT_THROW(Polygon({pt(0, 0), pt(1, 0)}), GrrError);
    EXPECT_THROW(Polygon({pt(0, 0), pt(0, 2), pt(4, 2), pt(4, 0)}), GrrError);  // clockwise
    EXPECT_THROW(Polygon({pt(0, 0), pt(2, 2), pt(2, 0), pt(0, 2)}), GrrError);  // bow tie
    EXPECT_THROW(Polygon({pt(0, 0), pt(2, 0), pt(2, 0), pt(0, 2)}), GrrError);
}

TEST(Polygon, Locate)
{
    const Polygon u = oracle::u_shape().polygon;
    EXPECT_EQ(locate(u, pt(1, 0)), Location::Boundary);
    EXPECT_EQ(locate(u, {Rational(1, 2), Rational(5, 2)}), Location::Inside);
    EXPECT_EQ(locate(u, {Rational(3, 2), Rational(2)}), Location::Outside);
    EXPECT_EQ(locate(u, pt(2, 3)), Location::Boundary);
    EXPECT_EQ(locate(u, pt(4, 1)), Location::Outside);
}

TEST(Polygon, InsidePrefix)
{
    const Polygon u = oracle::u_shape().polygon;
    EXPECT_EQ(inside_prefix(u, {Rational(1, 2), Rational(5, 2)}, {Rational(5, 2), Rational(5, 2)}), Rational(1, 4));
    EXPECT_TRUE(segment_inside(u, pt(0, 0), pt(3, 0)));
    EXPECT_TRUE(segment_inside(u, pt(1, 1), pt(2, 1)));
    EXPECT_FALSE(segment_inside(u, pt(1, 3), pt(2, 3)));
}

TEST(BuildDualTree, Rect)
{
    const TriangulatedPolygon tp = build_dual_tree(Polygon(kRect), {{0, 2}});
    EXPECT_EQ(tp.triangle_count(), 2);
    ASSERT_EQ(tp.dual_edges.size(), 1u);
    EXPECT_EQ(tp.dual_edges[0].diagonal, 0);
}

TEST(BuildDualTree, UShapeIsPath)
{
    const TriangulatedPolygon tp = oracle::u_shape();
    EXPECT_EQ(tp.triangle_count(), 6);
    int leaves = 0;
    for (const auto& adj : tp.dual_adjacency) {
        EXPECT_LE(adj.size(), 2u);
        leaves += adj.size() == 1 ? 1 : 0;
    }
    EXPECT_EQ(leaves, 2);
    EXPECT_NO_THROW(tp.triangle_index(7, 5, 6));
    EXPECT_THROW(tp.triangle_index(0, 1, 2), GrrError);
}

TEST(BuildDualTree, Rejections)
{
    EXPECT_EQ(rejection(kRect, {}), ErrorCode::IncompleteTriangulation);
    EXPECT_EQ(rejection(kRect, {{0, 2}, {1, 3}}), ErrorCode::CrossingDiagonals);
    EXPECT_EQ(rejection(kRect, {{0, 1}}), ErrorCode::CrossingDiagonals);
    EXPECT_EQ(rejection(kRect, {{0, 9}}), ErrorCode::UnknownVertex);
    // Diagonal outside the U.
    EXPECT_EQ(rejection(oracle::u_shape().polygon.vertices(), {{3, 6}, {0, 5}, {0, 4}, {1, 4}, {1, 3}}),
              ErrorCode::CrossingDiagonals);
}

TEST(BuildDualTree, RandomPolygonsAreConsistent)
{
    std::mt19937_64 rng(51);
    for (int i = 0; i < 100; ++i) {
        const TriangulatedPolygon tp = oracle::random_triangulated_polygon(rng, 2 + static_cast<int>(rng() % 11));
        ASSERT_EQ(tp.triangle_count(), tp.polygon.size() - 2);
        ASSERT_EQ(static_cast<int>(tp.dual_edges.size()), tp.triangle_count() - 1);
        Rational area;
        for (int t = 0; t < tp.triangle_count(); ++t) {
            const Triangle tri = tp.triangle_points(t);
            const Rational a = twice_signed_area({tri[0], tri[1], tri[2]});
            ASSERT_GT(a, Rational(0));
            area += a;
            ASSERT_LE(tp.dual_adjacency[t].size(), 3u);
        }
        ASSERT_EQ(area, twice_signed_area(tp.polygon.vertices()));
        std::vector<int> all(tp.triangle_count());
        for (int t = 0; t < tp.triangle_count(); ++t) all[t] = t;
        ASSERT_EQ(static_cast<int>(piece_boundary(tp, all).size()), tp.polygon.size());
    }
}

TEST(PieceBoundary, UShapeArms)
{
    const TriangulatedPolygon tp = oracle::u_shape();
    const int left = tp.triangle_index(5, 6, 7);
    const int corner = tp.triangle_index(0, 5, 7);
    const std::vector<int> ring = piece_boundary(tp, {left, corner});
    EXPECT_EQ(ring.size(), 4u);
    EXPECT_GT(twice_signed_area([&] {
                  std::vector<Point> pts;
                  for (int v : ring) pts.push_back(tp.polygon.vertex(v));
                  return pts;
              }()),
              Rational(0));
}
