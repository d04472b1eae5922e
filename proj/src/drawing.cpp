#include "grr/drawing.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <set>

#include "grr/error.hpp"

namespace grr {

int Drawing::index_of(VertexId id) const
{
    auto it = index_.find(id);
    if (it == index_.end()) throw GrrError(ErrorCode::UnknownVertex, "no vertex with id " + std::to_string(id));
    return it->second;
}

int Drawing::edge_between(int u, int v) const
{
    for (int e : incident_[u]) {
        if (other_end(e, u) == v) return e;
    }
    return -1;
}

RawDrawing Drawing::to_raw() const
{
    RawDrawing raw;
    for (int v = 0; v < vertex_count(); ++v) raw.vertices.push_back({ids_[v], points_[v]});
    for (const Edge& e : edges_) raw.edges.emplace_back(ids_[e.u], ids_[e.v]);
    return raw;
}

Drawing validate_drawing(const RawDrawing& raw)
{
    Drawing d;
    std::map<Point, VertexId> seen;
    for (const RawVertex& rv : raw.vertices) {
        if (d.index_.count(rv.id)) {
            throw GrrError(ErrorCode::DuplicateVertex, "vertex id " + std::to_string(rv.id) + " repeated");
        }
        if (auto it = seen.find(rv.p); it != seen.end()) {
            throw GrrError(ErrorCode::DuplicateVertex, "vertices " + std::to_string(it->second) + " and " +
                                                           std::to_string(rv.id) + " share a position",
                           std::make_pair(it->second, rv.id));
        }
        seen.emplace(rv.p, rv.id);
        d.index_.emplace(rv.id, static_cast<int>(d.points_.size()));
        d.points_.push_back(rv.p);
        d.ids_.push_back(rv.id);
    }
    d.incident_.assign(d.points_.size(), {});

    for (const auto& [a, b] : raw.edges) {
        const int u = d.index_of(a);
        const int v = d.index_of(b);
        if (u == v) throw GrrError(ErrorCode::ZeroLengthEdge, "edge joins vertex " + std::to_string(a) + " to itself");
        const int e = static_cast<int>(d.edges_.size());
        d.edges_.push_back({u, v});
        d.incident_[u].push_back(e);
        d.incident_[v].push_back(e);
    }

    const int m = d.edge_count();
    for (int e = 0; e < m; ++e) {
        const Segment se = d.segment(e);
        const auto& ee = d.edges_[e];
        for (int f = e + 1; f < m; ++f) {
            const auto& ef = d.edges_[f];
            const auto pair = std::make_pair(e, f);
            const bool same_ends = (ee.u == ef.u && ee.v == ef.v) || (ee.u == ef.v && ee.v == ef.u);
            if (same_ends) throw GrrError(ErrorCode::OverlappingEdges, "parallel edges", pair);
            const auto hit = segment_intersection(se, d.segment(f));
            if (std::holds_alternative<std::monostate>(hit)) continue;
            if (std::holds_alternative<Segment>(hit)) {
                throw GrrError(ErrorCode::OverlappingEdges,
                               "edges " + std::to_string(e) + " and " + std::to_string(f) + " overlap", pair);
            }
            const Point& p = std::get<Point>(hit);
            int shared = -1;
            if (ee.u == ef.u || ee.u == ef.v) shared = ee.u;
            if (ee.v == ef.u || ee.v == ef.v) shared = ee.v;
            if (shared < 0 || p != d.points_[shared]) {
                throw GrrError(ErrorCode::CrossingEdges,
                               "edges " + std::to_string(e) + " and " + std::to_string(f) + " cross", pair);
            }
        }
        for (int v = 0; v < d.vertex_count(); ++v) {
            if (v == ee.u || v == ee.v) continue;
            if (on_segment(d.points_[v], se)) {
                throw GrrError(ErrorCode::CrossingEdges,
                               "vertex " + std::to_string(d.ids_[v]) + " lies on edge " + std::to_string(e),
                               std::make_pair(e, e));
            }
        }
    }
    return d;
}

std::vector<int> clockwise_order_at(const Drawing& d, int v)
{
    std::vector<int> order = d.incident(v);
    const Point& o = d.point(v);
    std::sort(order.begin(), order.end(), [&](int e, int f) {
        return clockwise_angle_less(d.point(d.other_end(e, v)) - o, d.point(d.other_end(f, v)) - o);
    });
    return order;
}

std::vector<int> clockwise_order(const Drawing& d, VertexId v) { return clockwise_order_at(d, d.index_of(v)); }

bool is_tree(const Drawing& d)
{
    const int n = d.vertex_count();
    if (n == 0 || d.edge_count() != n - 1) return false;
    std::vector<char> seen(n, 0);
    std::vector<int> stack{0};
    seen[0] = 1;
    int reached = 1;
    while (!stack.empty()) {
        const int v = stack.back();
        stack.pop_back();
        for (int e : d.incident(v)) {
            const int w = d.other_end(e, v);
            if (!seen[w]) {
                seen[w] = 1;
                ++reached;
                stack.push_back(w);
            }
        }
    }
    return reached == n;
}

RootedTree root_tree(const Drawing& d, VertexId root_id)
{
    if (!is_tree(d)) throw GrrError(ErrorCode::NotATree, "drawing is not a tree");
    const int root = d.index_of(root_id);
    if (d.degree(root) != 1) {
        throw GrrError(ErrorCode::RootNotDegreeOne, "root " + std::to_string(root_id) + " has degree " +
                                                        std::to_string(d.degree(root)));
    }
    const int n = d.vertex_count();
    RootedTree rt;
    rt.drawing = &d;
    rt.root = root;
    rt.parent.assign(n, -1);
    rt.parent_edge.assign(n, -1);
    rt.children.assign(n, {});
    rt.depth.assign(n, 0);

    std::vector<int> preorder;
    std::vector<int> stack{root};
    while (!stack.empty()) {
        const int v = stack.back();
        stack.pop_back();
        preorder.push_back(v);
        std::vector<int> order = clockwise_order_at(d, v);
        if (rt.parent_edge[v] >= 0) {
            auto it = std::find(order.begin(), order.end(), rt.parent_edge[v]);
            std::rotate(order.begin(), it, order.end());
            order.erase(order.begin());
        }
        for (int e : order) {
            const int w = d.other_end(e, v);
            rt.parent[w] = v;
            rt.parent_edge[w] = e;
            rt.depth[w] = rt.depth[v] + 1;
            rt.children[v].push_back(w);
        }
        for (auto it = rt.children[v].rbegin(); it != rt.children[v].rend(); ++it) stack.push_back(*it);
    }
    rt.postorder.assign(preorder.rbegin(), preorder.rend());
    return rt;
}

SubdividedDrawing subdivide(const Drawing& d)
{
    const int m = d.edge_count();
    std::vector<std::set<Rational>> cuts(m);
    for (int f = 0; f < m; ++f) {
        const Point& c = d.point(d.edge(f).u);
        const Point g = d.point(d.edge(f).v) - c;
        for (int e = 0; e < m; ++e) {
            if (e == f) continue;
            const Point& a = d.point(d.edge(e).u);
            const Point& b = d.point(d.edge(e).v);
            const Point dir = b - a;
            const Rational denom = dot(g, dir);
            if (denom.is_zero()) continue;
            for (const Point* end : {&a, &b}) {
                const Rational t = dot(*end - c, dir) / denom;
                if (t.sign() > 0 && t < Rational(1)) cuts[f].insert(t);
            }
        }
    }

    RawDrawing raw = d.to_raw();
    raw.edges.clear();
    VertexId next_id = 0;
    for (const RawVertex& v : raw.vertices) next_id = std::max(next_id, v.id + 1);

    std::vector<EdgePiece> origin;
    for (int f = 0; f < m; ++f) {
        const int u = d.edge(f).u;
        const int v = d.edge(f).v;
        VertexId prev = d.id(u);
        Rational prev_t(0);
        for (const Rational& t : cuts[f]) {
            const VertexId fresh = next_id++;
            raw.vertices.push_back({fresh, lerp(d.point(u), d.point(v), t)});
            raw.edges.emplace_back(prev, fresh);
            origin.push_back({f, prev_t, t});
            prev = fresh;
            prev_t = t;
        }
        raw.edges.emplace_back(prev, d.id(v));
        origin.push_back({f, prev_t, Rational(1)});
    }
    return {validate_drawing(raw), std::move(origin)};
}

}  // namespace grr
