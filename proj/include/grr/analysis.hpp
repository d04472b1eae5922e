#pragma once

#include <optional>
#include <utility>
#include <variant>
#include <vector>

#include "grr/drawing.hpp"
#include "grr/polygon.hpp"

namespace grr {

/// A normal at `p` (relative interior of edge_e) passing through `hit` on edge_f.
struct ConflictWitness {
    int edge_e;
    int edge_f;
    Point p;
    Point hit;
};

/// Segment-level form of the drawing conflict: some point of f projects
/// orthogonally into the relative interior of e. Returns (p, hit).
std::optional<std::pair<Point, Point>> segment_conflict(const Segment& e, const Segment& f);

/// Directed test: a normal line at an interior point of e meets f.
std::optional<ConflictWitness> drawing_edges_conflict(const Drawing& d, int e, int f);
/// True iff e conflicts with f or f conflicts with e.
bool edges_conflict_either(const Drawing& d, int e, int f);

/// Directed test: f meets the outward half-strip of boundary edge e.
std::optional<ConflictWitness> polygon_edges_conflict(const Polygon& poly, int e, int f);

/// Self-approaching in both directions, checked with closed halfplanes at
/// every vertex. Throws DegeneratePath on fewer than two points or repeated
/// consecutive points.
bool path_increasing_chord(const std::vector<Point>& points);

/// Connected, acyclic and free of conflicting pairs.
bool tree_increasing_chord(const Drawing& d, const std::vector<int>& edges);

/// Points of a path starting at the common origin.
using RootPath = std::vector<Point>;

/// Merges shared prefixes of four root paths and tests the union tree.
/// Throws InvalidPathFamily when the union is not a plane tree.
bool four_path_union_ic(const RootPath& r1, const RootPath& r2, const RootPath& r3, const RootPath& r4);

/// True iff the clockwise walk around the union tree, starting at the common
/// origin along its clockwise-first edge, first reaches the three endpoints in
/// cyclic order t1, t2, t3 (coinciding endpoints allowed).
bool clockwise_between(const RootPath& r1, const RootPath& r2, const RootPath& r3);

/// Uses the two half-strips of each triangle built on its edges away from the
/// dual path to the other triangle; conflicting if either direction reaches
/// the other triangle's open interior. Throws SameTriangle or UnknownTriangle.
bool triangles_conflict(const TriangulatedPolygon& tp, int ti, int tj);

/// nullopt when the polygon is a GRR, otherwise a conflicting edge pair.
std::optional<ConflictWitness> polygon_is_grr(const Polygon& poly);

struct GreedyTrace {
    std::vector<Point> waypoints;
    bool reached = false;
    /// Local minimum where the procedure stopped when not reached.
    std::optional<Point> failure;
};

/// Straight moves towards t and boundary walks towards the neighbor of least
/// angle to t; ties prefer the lexicographically smaller endpoint. Throws
/// PointOutsidePolygon.
GreedyTrace trace_greedy_path(const Polygon& poly, const Point& s, const Point& t);

}  // namespace grr
