#pragma once

#include <cstdint>
#include <optional>
#include <random>
#include <string>
#include <utility>
#include <vector>

#include "grr/analysis.hpp"
#include "grr/drawing.hpp"
#include "grr/multicut.hpp"
#include "grr/polygon_decomposition.hpp"
#include "grr/tree_decomposition.hpp"

namespace grr::oracle {

// Named fixtures.
Drawing p_ic();
Drawing p_acute();
Drawing star3();
Drawing plus_star();
/// Path a0-a1-c0-c1-Q-P with three mutually conflicting edges; the long
/// middle edge can be split so that two components suffice.
Drawing split_comb();
TriangulatedPolygon rect();
TriangulatedPolygon l_shape();
TriangulatedPolygon u_shape();
TriangulatedPolygon two_notch_comb();
TriangulatedPolygon convex_fan();

struct NamedDrawing {
    std::string name;
    Drawing drawing;
};
struct NamedPolygon {
    std::string name;
    TriangulatedPolygon polygon;
};
std::vector<NamedDrawing> tree_fixtures();
std::vector<NamedPolygon> polygon_fixtures();

/// Tree drawing with `edges` edges on the integer grid [-grid, grid]^2.
Drawing random_tree_drawing(std::mt19937_64& rng, int edges, int grid = 6);
/// Triangulated polygon grown by gluing ears onto a triangle, with integer
/// coordinates in [0, grid]^2. May stop short of `triangles` when no ear fits.
TriangulatedPolygon random_triangulated_polygon(std::mt19937_64& rng, int triangles, int grid = 8);
/// Random tree on `vertices` vertices with unit weights and random pairs.
MulticutInstance random_multicut_instance(std::mt19937_64& rng, int vertices, int pairs);

struct BruteForceResult {
    int size;
    Partition partition;
};

/// Exhaustive search over set partitions of the edges. Throws
/// BudgetExceeded above `max_edges`.
BruteForceResult brute_force_min_gtd(const Drawing& d, ContactMode mode, int max_edges = 10);

/// Exhaustive search over all chord cuts; pieces are tested by the edge
/// conflict criterion on their union polygon. Throws BudgetExceeded above
/// 14 triangles.
int brute_force_min_polygon(const TriangulatedPolygon& tp);

/// True iff a dual-connected triangle set forms a simple polygon that passes
/// polygon_is_grr.
bool piece_is_grr(const TriangulatedPolygon& tp, const std::vector<int>& piece);

struct ProbeReport {
    int attempted = 0;
    int succeeded = 0;
    int monotonicity_violations = 0;
    std::optional<std::pair<Point, Point>> first_failure;

    double success_rate() const { return attempted == 0 ? 1.0 : static_cast<double>(succeeded) / attempted; }
};

/// Checks a trace: consecutive waypoints inside the polygon, distance to the
/// target strictly decreasing along every segment, ending at the target.
bool trace_is_monotone(const Polygon& poly, const GreedyTrace& trace, const Point& t);

/// Random point of the closed polygon with coordinates on a 1/16 grid.
Point random_point_in(const Polygon& poly, std::mt19937_64& rng);

ProbeReport sampled_grr_probe(const Polygon& poly, int n_pairs, std::uint64_t seed,
                              const std::vector<std::pair<Point, Point>>& extra_pairs = {});

}  // namespace grr::oracle
