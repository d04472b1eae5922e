#include <algorithm>
#include <random>

#include <gtest/gtest.h>

#include "grr/analysis.hpp"
#include "grr/error.hpp"
#include "grr/oracle.hpp"
#include "support.hpp"

using namespace grr;
using grr::testing::pt;

namespace {

Drawing two_edges(Point a, Point b, Point c, Point d)
{
    return validate_drawing({{{0, a}, {1, b}, {2, c}, {3, d}}, {{0, 1}, {2, 3}}});
}

}  // namespace

TEST(DrawingConflict, Examples)
{
    const Drawing parallel = two_edges(pt(0, 0), pt(2, 0), pt(0, 1), pt(2, 1));
    const auto w = drawing_edges_conflict(parallel, 0, 1);
    ASSERT_TRUE(w.has_value());
    EXPECT_EQ(w->p, pt(1, 0));
    EXPECT_EQ(w->hit, pt(1, 1));

    const Drawing bent = validate_drawing({{{0, pt(0, 0)}, {1, pt(1, 0)}, {2, pt(2, 1)}}, {{0, 1}, {1, 2}}});
    EXPECT_FALSE(drawing_edges_conflict(bent, 0, 1).has_value());

    const Drawing acute = oracle::p_acute();
    EXPECT_TRUE(drawing_edges_conflict(acute, 0, 1).has_value());
    EXPECT_FALSE(drawing_edges_conflict(acute, 0, 0).has_value());
    EXPECT_THROW(drawing_edges_conflict(acute, 0, 7), GrrError);
}

TEST(DrawingConflict, ClosedEndpointOfOtherEdgeCounts)
{
    // f touches the open slab of e only at its endpoint (1,3).
    const Drawing d = two_edges(pt(0, 0), pt(2, 0), pt(1, 3), pt(5, 3));
    EXPECT_TRUE(drawing_edges_conflict(d, 0, 1).has_value());
    const Drawing miss = two_edges(pt(0, 0), pt(2, 0), pt(2, 3), pt(5, 3));
    EXPECT_FALSE(drawing_edges_conflict(miss, 0, 1).has_value());
}

TEST(DrawingConflict, WitnessIsOrthogonalProjection)
{
    std::mt19937_64 rng(31);
    int witnesses = 0;
    for (int i = 0; i < 200; ++i) {
        const Drawing d = oracle::random_tree_drawing(rng, 5, 5);
        for (int e = 0; e < d.edge_count(); ++e) {
            for (int f = 0; f < d.edge_count(); ++f) {
                const auto w = drawing_edges_conflict(d, e, f);
                if (!w) continue;
                ++witnesses;
                ASSERT_TRUE(in_relative_interior(w->p, d.segment(e)));
                ASSERT_TRUE(on_segment(w->hit, d.segment(f)));
                ASSERT_TRUE(dot(w->hit - w->p, d.segment(e).direction()).is_zero());
            }
        }
    }
    EXPECT_GT(witnesses, 100);
}

TEST(PolygonConflict, ConvexHasNone)
{
    const Polygon quad({pt(0, 0), pt(4, 0), pt(4, 2), pt(0, 2)});
    for (int e = 0; e < 4; ++e) {
        for (int f = 0; f < 4; ++f) {
            if (e == f) continue;
            EXPECT_FALSE(polygon_edges_conflict(quad, e, f).has_value());
        }
    }
}

TEST(PolygonConflict, UShapeInnerWalls)
{
    const Polygon& u = oracle::u_shape().polygon;
    // Edge 3 runs (2,3)-(2,1), edge 5 runs (1,1)-(1,3).
    const auto w = polygon_edges_conflict(u, 3, 5);
    ASSERT_TRUE(w.has_value());
    EXPECT_EQ(w->p, pt(2, 2));
    EXPECT_EQ(w->hit, pt(1, 2));
    // Bottom edge against the left outer wall.
    EXPECT_FALSE(polygon_edges_conflict(u, 0, 7).has_value());
    EXPECT_FALSE(polygon_edges_conflict(u, 7, 0).has_value());
}

TEST(PathIncreasingChord, Examples)
{
    EXPECT_TRUE(path_increasing_chord({pt(0, 0), pt(1, 0), pt(2, 1)}));
    EXPECT_FALSE(path_increasing_chord({pt(0, 0), pt(2, 0), pt(0, 1)}));
    EXPECT_TRUE(path_increasing_chord({pt(3, 1), pt(-2, 5)}));
    EXPECT_THROW(path_increasing_chord({pt(0, 0)}), GrrError);
    EXPECT_THROW(path_increasing_chord({pt(0, 0), pt(0, 0), pt(1, 1)}), GrrError);
}

namespace {

struct PathPoint {
    int edge;
    Rational t;
    Point p;
};

// Definitional chord check on vertices plus projections of every vertex onto
// every edge interior: for a <= b <= d along the path, |ab| <= |ad| and
// |db| <= |da|.
bool chord_check(const std::vector<Point>& path)
{
    std::vector<PathPoint> cand;
    const int k = static_cast<int>(path.size());
    for (int i = 0; i < k; ++i) cand.push_back({i, Rational(0), path[i]});
    for (int e = 0; e + 1 < k; ++e) {
        const Point dir = path[e + 1] - path[e];
        for (const Point& w : path) {
            const Rational t = dot(w - path[e], dir) / squared_norm(dir);
            if (t > Rational(0) && t < Rational(1)) cand.push_back({e, t, lerp(path[e], path[e + 1], t)});
        }
    }
    std::sort(cand.begin(), cand.end(), [](const PathPoint& a, const PathPoint& b) {
        return a.edge != b.edge ? a.edge < b.edge : a.t < b.t;
    });
    const std::size_t c = cand.size();
    std::vector<Rational> dist(c * c);
    for (std::size_t i = 0; i < c; ++i) {
        for (std::size_t j = 0; j < c; ++j) dist[i * c + j] = squared_distance(cand[i].p, cand[j].p);
    }
    for (std::size_t a = 0; a < c; ++a) {
        for (std::size_t b = a; b < c; ++b) {
            for (std::size_t d = b; d < c; ++d) {
                if (dist[a * c + b] > dist[a * c + d]) return false;
                if (dist[d * c + b] > dist[d * c + a]) return false;
            }
        }
    }
    return true;
}

std::vector<Point> random_simple_path(std::mt19937_64& rng)
{
    std::uniform_int_distribution<int> len(2, 10);
    std::uniform_int_distribution<int> step(-3, 3);
    const bool drifting = rng() % 2 == 0;
    for (;;) {
        const int k = len(rng);
        std::vector<Point> path{pt(0, 0)};
        while (static_cast<int>(path.size()) < k) {
            int dx = step(rng);
            int dy = step(rng);
            if (drifting) {
                dx = std::abs(dx) + 1;
                dy = std::abs(dy) - 1;
            }
            if (dx == 0 && dy == 0) continue;
            path.push_back(path.back() + pt(dx, dy));
        }
        RawDrawing raw;
        for (int i = 0; i < k; ++i) raw.vertices.push_back({i, path[i]});
        for (int i = 0; i + 1 < k; ++i) raw.edges.emplace_back(i, i + 1);
        try {
            validate_drawing(raw);
            return path;
        } catch (const GrrError&) {
        }
    }
}

}  // namespace

TEST(PathIncreasingChord, AgreesWithChordDefinition)
{
    std::mt19937_64 rng(32);
    int positives = 0;
    for (int i = 0; i < 1000; ++i) {
        const auto path = random_simple_path(rng);
        const bool expected = chord_check(path);
        positives += expected ? 1 : 0;
        ASSERT_EQ(path_increasing_chord(path), expected) << "path #" << i;
    }
    EXPECT_GT(positives, 100);
    EXPECT_LT(positives, 900);
}

TEST(TreeIncreasingChord, Examples)
{
    const Drawing star = oracle::star3();
    EXPECT_TRUE(tree_increasing_chord(star, {0, 1, 2}));
    const Drawing acute = oracle::p_acute();
    EXPECT_FALSE(tree_increasing_chord(acute, {0, 1}));
    const Drawing plus = oracle::plus_star();
    EXPECT_TRUE(tree_increasing_chord(plus, {0, 1, 2, 3}));
}

TEST(TreeIncreasingChord, DisconnectedSubsetIsFalse)
{
    const Drawing d = validate_drawing(
        {{{0, pt(0, 0)}, {1, pt(1, 0)}, {2, pt(2, 0)}, {3, pt(3, 0)}}, {{0, 1}, {1, 2}, {2, 3}}});
    EXPECT_TRUE(tree_increasing_chord(d, {0, 1, 2}));
    EXPECT_FALSE(tree_increasing_chord(d, {0, 2}));
}

TEST(TreeIncreasingChord, EqualsAllPathsIncreasingChord)
{
    std::mt19937_64 rng(33);
    int positives = 0;
    for (int i = 0; i < 500; ++i) {
        const Drawing d = oracle::random_tree_drawing(rng, 2 + static_cast<int>(rng() % 6), 4);
        const std::vector<int> edges = grr::testing::random_subtree(d, rng);
        const bool expected = grr::testing::all_paths_increasing_chord(d, edges);
        positives += expected ? 1 : 0;
        ASSERT_EQ(tree_increasing_chord(d, edges), expected);
    }
    EXPECT_GT(positives, 50);
}

TEST(FourPathUnion, Examples)
{
    const RootPath seg = {pt(0, 0), pt(1, 0)};
    EXPECT_TRUE(four_path_union_ic(seg, seg, seg, seg));
    const RootPath east = {pt(0, 0), pt(2, 0)};
    const RootPath obtuse = {pt(0, 0), pt(-2, 1)};
    const RootPath acute = {pt(0, 0), pt(2, 1)};
    EXPECT_TRUE(four_path_union_ic(east, east, obtuse, obtuse));
    EXPECT_FALSE(four_path_union_ic(east, east, acute, acute));
    EXPECT_THROW(four_path_union_ic(east, {pt(1, 0), pt(2, 0)}, east, east), GrrError);
}

TEST(FourPathUnion, AgreesWithUnionTest)
{
    std::mt19937_64 rng(34);
    for (int i = 0; i < 1000; ++i) {
        const Drawing d = oracle::random_tree_drawing(rng, 3 + static_cast<int>(rng() % 6), 4);
        const int origin = static_cast<int>(rng() % d.vertex_count());
        std::vector<RootPath> paths;
        std::vector<int> edges;
        for (int k = 0; k < 4; ++k) {
            const int target = static_cast<int>(rng() % d.vertex_count());
            const auto [points, path_edges] = grr::testing::tree_path(d, origin, target == origin ? (target + 1) % d.vertex_count() : target);
            paths.push_back(points);
            edges.insert(edges.end(), path_edges.begin(), path_edges.end());
        }
        std::sort(edges.begin(), edges.end());
        edges.erase(std::unique(edges.begin(), edges.end()), edges.end());
        ASSERT_EQ(four_path_union_ic(paths[0], paths[1], paths[2], paths[3]), tree_increasing_chord(d, edges));
    }
}

TEST(FourPathUnion, OutermostPathsDecideMerge)
{
    // Two increasing-chord trees meeting at a vertex merge into an
    // increasing-chord tree iff the union of their outermost root paths does.
    std::mt19937_64 rng(35);
    int checked = 0;
    int positives = 0;
    for (int attempt = 0; checked < 1000 && attempt < 200000; ++attempt) {
        const Drawing d = oracle::random_tree_drawing(rng, 3 + static_cast<int>(rng() % 5), 4);
        const auto split = grr::testing::random_split_at_vertex(d, rng);
        if (!split) continue;
        if (!tree_increasing_chord(d, split->first.edges) || !tree_increasing_chord(d, split->second.edges)) continue;
        ++checked;
        std::vector<int> all(d.edge_count());
        for (int e = 0; e < d.edge_count(); ++e) all[e] = e;
        const bool whole = tree_increasing_chord(d, all);
        positives += whole ? 1 : 0;
        ASSERT_EQ(four_path_union_ic(split->first.leftmost, split->first.rightmost, split->second.leftmost,
                                     split->second.rightmost),
                  whole);
    }
    EXPECT_EQ(checked, 1000);
    EXPECT_GT(positives, 50);
}

TEST(ClockwiseBetween, Examples)
{
    const RootPath e = {pt(0, 0), pt(1, 0)};
    const RootPath s = {pt(0, 0), pt(0, -1)};
    const RootPath w = {pt(0, 0), pt(-1, 0)};
    EXPECT_TRUE(clockwise_between(e, s, w));
    EXPECT_FALSE(clockwise_between(e, w, s));
    EXPECT_TRUE(clockwise_between(e, e, w));
    EXPECT_TRUE(clockwise_between(s, w, e));
}

TEST(TrianglesConflict, Examples)
{
    const TriangulatedPolygon r = oracle::rect();
    EXPECT_FALSE(triangles_conflict(r, 0, 1));
    const TriangulatedPolygon u = oracle::u_shape();
    EXPECT_TRUE(triangles_conflict(u, u.triangle_index(5, 6, 7), u.triangle_index(1, 2, 3)));
    EXPECT_FALSE(triangles_conflict(u, u.triangle_index(0, 5, 7), u.triangle_index(0, 4, 5)));
    EXPECT_THROW(triangles_conflict(u, 0, 0), GrrError);
    EXPECT_THROW(triangles_conflict(u, 0, 9), GrrError);
}

TEST(TrianglesConflict, Symmetric)
{
    std::mt19937_64 rng(36);
    for (int i = 0; i < 60; ++i) {
        const TriangulatedPolygon tp = oracle::random_triangulated_polygon(rng, 8);
        for (int a = 0; a < tp.triangle_count(); ++a) {
            for (int b = a + 1; b < tp.triangle_count(); ++b) {
                ASSERT_EQ(triangles_conflict(tp, a, b), triangles_conflict(tp, b, a));
            }
        }
    }
}

TEST(PolygonIsGrr, Examples)
{
    EXPECT_FALSE(polygon_is_grr(oracle::convex_fan().polygon).has_value());
    EXPECT_FALSE(polygon_is_grr(oracle::rect().polygon).has_value());
    EXPECT_TRUE(polygon_is_grr(oracle::u_shape().polygon).has_value());
    EXPECT_FALSE(polygon_is_grr(Polygon({pt(0, 0), pt(2, 0), pt(2, 1), pt(1, 1), pt(1, 2), pt(0, 2)})).has_value());
}

TEST(PolygonIsGrr, WitnessSoundness)
{
    std::mt19937_64 rng(37);
    std::vector<Polygon> polys;
    for (const auto& f : oracle::polygon_fixtures()) polys.push_back(f.polygon.polygon);
    for (int i = 0; i < 200; ++i) polys.push_back(oracle::random_triangulated_polygon(rng, 10).polygon);
    int witnesses = 0;
    for (const Polygon& poly : polys) {
        const auto w = polygon_is_grr(poly);
        if (!w) continue;
        ++witnesses;
        ASSERT_TRUE(grr::testing::witness_is_sound(poly, *w));
    }
    EXPECT_GT(witnesses, 20);
}

TEST(PolygonIsGrr, EarOnNonGrrStaysNonGrr)
{
    std::mt19937_64 rng(38);
    const Polygon u = oracle::u_shape().polygon;
    std::uniform_int_distribution<int> coord(-8, 16);
    int attached = 0;
    for (int attempt = 0; attempt < 4000 && attached < 300; ++attempt) {
        const int e = static_cast<int>(rng() % u.size());
        const Point w{Rational(coord(rng), 2), Rational(coord(rng), 2)};
        if (orientation(u.vertex(e), u.vertex(u.next(e)), w) >= 0) continue;
        std::vector<Point> pts = u.vertices();
        pts.insert(pts.begin() + e + 1, w);
        try {
            const Polygon bigger(pts);
            ++attached;
            ASSERT_TRUE(polygon_is_grr(bigger).has_value());
        } catch (const GrrError&) {
        }
    }
    EXPECT_GT(attached, 100);
}

TEST(TraceGreedyPath, Examples)
{
    const Polygon square({pt(0, 0), pt(4, 0), pt(4, 4), pt(0, 4)});
    const GreedyTrace direct = trace_greedy_path(square, pt(1, 1), pt(3, 3));
    EXPECT_TRUE(direct.reached);
    EXPECT_EQ(direct.waypoints, (std::vector<Point>{pt(1, 1), pt(3, 3)}));

    const Polygon u = oracle::u_shape().polygon;
    const Point s{Rational(1, 2), Rational(5, 2)};
    const Point t{Rational(5, 2), Rational(5, 2)};
    const GreedyTrace stuck = trace_greedy_path(u, s, t);
    EXPECT_FALSE(stuck.reached);
    ASSERT_TRUE(stuck.failure.has_value());
    EXPECT_EQ(*stuck.failure, (Point{Rational(1), Rational(5, 2)}));

    const Polygon l = oracle::l_shape().polygon;
    const GreedyTrace around = trace_greedy_path(l, pt(2, 1), pt(0, 2));
    EXPECT_TRUE(around.reached);
    EXPECT_EQ(around.waypoints, (std::vector<Point>{pt(2, 1), pt(1, 1), pt(0, 2)}));
    EXPECT_TRUE(oracle::trace_is_monotone(l, around, pt(0, 2)));

    EXPECT_THROW(trace_greedy_path(square, pt(5, 5), pt(1, 1)), GrrError);
}
