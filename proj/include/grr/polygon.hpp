#pragma once

#include <array>
#include <utility>
#include <vector>

#include "grr/geometry.hpp"

namespace grr {

/// Simple counterclockwise polygon without holes. Edge i runs from vertex i
/// to vertex i+1 (cyclically).
class Polygon {
public:
    /// Throws NotSimple for fewer than three vertices, repeated or
    /// self-intersecting boundaries, and clockwise orientation.
    explicit Polygon(std::vector<Point> boundary);

    int size() const { return static_cast<int>(pts_.size()); }
    const Point& vertex(int i) const { return pts_[i]; }
    const std::vector<Point>& vertices() const { return pts_; }
    Segment edge(int i) const { return Segment(pts_[i], pts_[(i + 1) % size()]); }
    int next(int i) const { return (i + 1) % size(); }
    int prev(int i) const { return (i + size() - 1) % size(); }

private:
    std::vector<Point> pts_;
};

enum class Location { Inside, Boundary, Outside };

Location locate(const Polygon& poly, const Point& p);
inline bool contains(const Polygon& poly, const Point& p) { return locate(poly, p) != Location::Outside; }

/// Largest t in [0, 1] such that the segment from a to a + t (b - a) lies in
/// the closed polygon. Requires a to lie in the polygon.
Rational inside_prefix(const Polygon& poly, const Point& a, const Point& b);

/// True iff the closed segment a-b lies in the closed polygon.
bool segment_inside(const Polygon& poly, const Point& a, const Point& b);

struct DualEdge {
    int t1;
    int t2;
    int diagonal;
};

struct TriangulatedPolygon {
    Polygon polygon;
    /// Boundary index pairs, stored with the smaller index first.
    std::vector<std::pair<int, int>> diagonals;
    /// Counterclockwise boundary index triples, sorted by vertex set.
    std::vector<std::array<int, 3>> triangles;
    /// Dual edge k crosses diagonal k.
    std::vector<DualEdge> dual_edges;
    /// Per triangle: (neighbor triangle, dual edge index).
    std::vector<std::vector<std::pair<int, int>>> dual_adjacency;

    int triangle_count() const { return static_cast<int>(triangles.size()); }
    Triangle triangle_points(int t) const;
    /// Triangle with the given vertex set in any order; throws UnknownTriangle.
    int triangle_index(int a, int b, int c) const;
};

/// Derives triangles and the dual tree. Throws UnknownVertex,
/// CrossingDiagonals or IncompleteTriangulation.
TriangulatedPolygon build_dual_tree(Polygon polygon, const std::vector<std::pair<int, int>>& diagonals);

/// Boundary of the union of a dual-connected triangle set, as boundary
/// indices in counterclockwise order. Throws NotSimple when the union has a
/// repeated boundary vertex.
std::vector<int> piece_boundary(const TriangulatedPolygon& tp, const std::vector<int>& triangle_ids);

}  // namespace grr
