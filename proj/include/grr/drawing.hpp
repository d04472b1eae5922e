#pragma once

#include <unordered_map>
#include <utility>
#include <vector>

#include "grr/geometry.hpp"

namespace grr {

using VertexId = int;

struct RawVertex {
    VertexId id;
    Point p;
};

/// Unvalidated input: vertices with caller-chosen ids, edges as id pairs.
struct RawDrawing {
    std::vector<RawVertex> vertices;
    std::vector<std::pair<VertexId, VertexId>> edges;
};

/// A validated plane straight-line drawing. Vertices and edges are addressed
/// by dense indices; the caller's ids are kept for reporting.
class Drawing {
public:
    struct Edge {
        int u;
        int v;
    };

    int vertex_count() const { return static_cast<int>(points_.size()); }
    int edge_count() const { return static_cast<int>(edges_.size()); }

    const Point& point(int v) const { return points_[v]; }
    VertexId id(int v) const { return ids_[v]; }
    /// Index of a vertex id; throws UnknownVertex.
    int index_of(VertexId id) const;
    bool has_id(VertexId id) const { return index_.count(id) != 0; }

    const Edge& edge(int e) const { return edges_[e]; }
    Segment segment(int e) const { return Segment(points_[edges_[e].u], points_[edges_[e].v]); }
    /// Incident edge indices in input order.
    const std::vector<int>& incident(int v) const { return incident_[v]; }
    int degree(int v) const { return static_cast<int>(incident_[v].size()); }
    int other_end(int e, int v) const { return edges_[e].u == v ? edges_[e].v : edges_[e].u; }
    /// Edge joining two vertex indices, or -1.
    int edge_between(int u, int v) const;

    RawDrawing to_raw() const;

private:
    friend Drawing validate_drawing(const RawDrawing& raw);

    std::vector<Point> points_;
    std::vector<VertexId> ids_;
    std::unordered_map<VertexId, int> index_;
    std::vector<Edge> edges_;
    std::vector<std::vector<int>> incident_;
};

/// Checks distinct points, nonzero edges and planarity. Throws GrrError with
/// DuplicateVertex, UnknownVertex, ZeroLengthEdge, CrossingEdges or
/// OverlappingEdges; pair-related errors carry the offending edge indices.
Drawing validate_drawing(const RawDrawing& raw);

/// Incident edges of vertex `v` (an id) sorted by direction, clockwise from
/// the positive x-axis.
std::vector<int> clockwise_order(const Drawing& d, VertexId v);
/// Same, addressed by vertex index.
std::vector<int> clockwise_order_at(const Drawing& d, int v);

bool is_tree(const Drawing& d);

struct RootedTree {
    const Drawing* drawing = nullptr;
    int root = -1;
    std::vector<int> parent;       ///< -1 at the root
    std::vector<int> parent_edge;  ///< -1 at the root
    /// Children listed clockwise, starting right after the parent edge.
    std::vector<std::vector<int>> children;
    std::vector<int> depth;
    /// Children before parents.
    std::vector<int> postorder;
};

/// Roots a tree drawing at a degree-1 vertex id. The drawing must outlive the
/// result. Throws NotATree or RootNotDegreeOne.
RootedTree root_tree(const Drawing& d, VertexId root);

struct EdgePiece {
    int original_edge;
    /// Parameter interval along the original edge, from its u end to its v end.
    Rational t0;
    Rational t1;
};

struct SubdividedDrawing {
    Drawing drawing;
    /// One entry per edge of `drawing`.
    std::vector<EdgePiece> origin;
};

/// Splits every original edge where a normal line through an endpoint of
/// another original edge crosses its relative interior. Original ids are
/// kept; new vertices get fresh ids above the largest input id.
SubdividedDrawing subdivide(const Drawing& d);

}  // namespace grr
