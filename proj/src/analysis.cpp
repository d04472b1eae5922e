#include "grr/analysis.hpp"

#include <algorithm>
#include <map>
#include <queue>
#include <set>

#include "grr/error.hpp"

namespace grr {

std::optional<std::pair<Point, Point>> segment_conflict(const Segment& e, const Segment& f)
{
    const Point& a = e.a();
    const Point d = e.direction();
    const Rational len2 = squared_norm(d);
    const Rational s0 = dot(f.a() - a, d);
    const Rational s1 = dot(f.b() - a, d);
    const Rational lo = min(s0, s1);
    const Rational hi = max(s0, s1);
    if (hi.sign() <= 0 || lo >= len2) return std::nullopt;

    const Rational sigma = (max(lo, Rational(0)) + min(hi, len2)) / Rational(2);
    const Point p = a + (sigma / len2) * d;
    const Point hit = s0 == s1 ? f.a() : lerp(f.a(), f.b(), (sigma - s0) / (s1 - s0));
    return std::make_pair(p, hit);
}

namespace {

void check_edge(const Drawing& d, int e)
{
    if (e < 0 || e >= d.edge_count()) throw GrrError(ErrorCode::UnknownEdge, "edge " + std::to_string(e));
}

}  // namespace

std::optional<ConflictWitness> drawing_edges_conflict(const Drawing& d, int e, int f)
{
    check_edge(d, e);
    check_edge(d, f);
    if (e == f) return std::nullopt;
    auto hit = segment_conflict(d.segment(e), d.segment(f));
    if (!hit) return std::nullopt;
    return ConflictWitness{e, f, hit->first, hit->second};
}

bool edges_conflict_either(const Drawing& d, int e, int f)
{
    const Segment se = d.segment(e);
    const Segment sf = d.segment(f);
    return segment_conflict(se, sf).has_value() || segment_conflict(sf, se).has_value();
}

std::optional<ConflictWitness> polygon_edges_conflict(const Polygon& poly, int e, int f)
{
    if (e < 0 || e >= poly.size() || f < 0 || f >= poly.size()) {
        throw GrrError(ErrorCode::UnknownEdge, "boundary edge out of range", std::make_pair(e, f));
    }
    if (e == f) return std::nullopt;
    const Segment se = poly.edge(e);
    const Point d = se.direction();
    // Interior lies to the left of a counterclockwise edge.
    const HalfStrip strip(se, se.a() + Point{-d.y, d.x});
    const Segment sf = poly.edge(f);
    const auto t = halfstrip_hit_parameter(strip, sf, false);
    if (!t) return std::nullopt;
    const Point hit = lerp(sf.a(), sf.b(), *t);
    return ConflictWitness{e, f, project_onto_line(hit, se.a(), se.b()), hit};
}

bool path_increasing_chord(const std::vector<Point>& points)
{
    const std::size_t n = points.size();
    if (n < 2) throw GrrError(ErrorCode::DegeneratePath, "path needs two points");
    for (std::size_t i = 0; i + 1 < n; ++i) {
        if (points[i] == points[i + 1]) throw GrrError(ErrorCode::DegeneratePath, "repeated consecutive point");
    }
    for (std::size_t i = 0; i + 1 < n; ++i) {
        const HalfplaneHP forward(points[i], points[i + 1]);
        for (std::size_t k = i + 2; k < n; ++k) {
            if (!in_hp(forward, points[k])) return false;
        }
        const HalfplaneHP backward(points[i + 1], points[i]);
        for (std::size_t k = 0; k < i; ++k) {
            if (!in_hp(backward, points[k])) return false;
        }
    }
    return true;
}

bool tree_increasing_chord(const Drawing& d, const std::vector<int>& edges)
{
    std::vector<int> es(edges);
    std::sort(es.begin(), es.end());
    es.erase(std::unique(es.begin(), es.end()), es.end());
    if (es.empty()) return false;
    for (int e : es) check_edge(d, e);

    std::map<int, std::vector<int>> adj;
    for (int e : es) {
        adj[d.edge(e).u].push_back(d.edge(e).v);
        adj[d.edge(e).v].push_back(d.edge(e).u);
    }
    if (adj.size() != es.size() + 1) return false;
    std::set<int> seen{adj.begin()->first};
    std::vector<int> stack{adj.begin()->first};
    while (!stack.empty()) {
        const int v = stack.back();
        stack.pop_back();
        for (int w : adj[v]) {
            if (seen.insert(w).second) stack.push_back(w);
        }
    }
    if (seen.size() != adj.size()) return false;

    for (std::size_t i = 0; i < es.size(); ++i) {
        for (std::size_t j = i + 1; j < es.size(); ++j) {
            if (edges_conflict_either(d, es[i], es[j])) return false;
        }
    }
    return true;
}

namespace {

struct UnionTree {
    std::vector<Point> nodes;
    std::vector<std::set<int>> adj;
    std::vector<std::pair<int, int>> edges;
    std::vector<int> endpoint;  // node index of each path's last point
};

UnionTree build_union(const std::vector<const RootPath*>& paths)
{
    UnionTree u;
    std::map<Point, int> index;
    auto node = [&](const Point& p) {
        auto [it, fresh] = index.emplace(p, static_cast<int>(u.nodes.size()));
        if (fresh) {
            u.nodes.push_back(p);
            u.adj.emplace_back();
        }
        return it->second;
    };
    const Point* origin = nullptr;
    for (const RootPath* path : paths) {
        if (path->empty()) throw GrrError(ErrorCode::InvalidPathFamily, "empty path");
        if (origin == nullptr) origin = &path->front();
        if (path->front() != *origin) throw GrrError(ErrorCode::InvalidPathFamily, "paths start at different points");
        int prev = node(path->front());
        for (std::size_t i = 1; i < path->size(); ++i) {
            const int cur = node((*path)[i]);
            if (cur == prev) throw GrrError(ErrorCode::InvalidPathFamily, "repeated consecutive point");
            if (u.adj[prev].insert(cur).second) {
                u.adj[cur].insert(prev);
                u.edges.emplace_back(prev, cur);
            }
            prev = cur;
        }
        u.endpoint.push_back(prev);
    }
    if (u.edges.size() + 1 != u.nodes.size()) throw GrrError(ErrorCode::InvalidPathFamily, "union contains a cycle");
    for (std::size_t i = 0; i < u.edges.size(); ++i) {
        const auto [a, b] = u.edges[i];
        const Segment si(u.nodes[a], u.nodes[b]);
        for (std::size_t j = i + 1; j < u.edges.size(); ++j) {
            const auto [c, e] = u.edges[j];
            const auto hit = segment_intersection(si, Segment(u.nodes[c], u.nodes[e]));
            if (std::holds_alternative<std::monostate>(hit)) continue;
            int shared = -1;
            if (a == c || a == e) shared = a;
            if (b == c || b == e) shared = b;
            const Point* p = std::get_if<Point>(&hit);
            if (shared < 0 || p == nullptr || *p != u.nodes[shared]) {
                throw GrrError(ErrorCode::InvalidPathFamily, "union is not a plane tree");
            }
        }
    }
    return u;
}

}  // namespace

bool four_path_union_ic(const RootPath& r1, const RootPath& r2, const RootPath& r3, const RootPath& r4)
{
    const UnionTree u = build_union({&r1, &r2, &r3, &r4});
    for (std::size_t i = 0; i < u.edges.size(); ++i) {
        const Segment si(u.nodes[u.edges[i].first], u.nodes[u.edges[i].second]);
        for (std::size_t j = 0; j < u.edges.size(); ++j) {
            if (i == j) continue;
            const Segment sj(u.nodes[u.edges[j].first], u.nodes[u.edges[j].second]);
            if (segment_conflict(si, sj)) return false;
        }
    }
    return true;
}

bool clockwise_between(const RootPath& r1, const RootPath& r2, const RootPath& r3)
{
    const UnionTree u = build_union({&r1, &r2, &r3});
    const int origin = 0;
    const int n = static_cast<int>(u.nodes.size());
    std::vector<std::vector<int>> order(n);
    for (int v = 0; v < n; ++v) {
        order[v].assign(u.adj[v].begin(), u.adj[v].end());
        std::sort(order[v].begin(), order[v].end(), [&](int a, int b) {
            return clockwise_angle_less(u.nodes[a] - u.nodes[v], u.nodes[b] - u.nodes[v]);
        });
    }
    std::vector<int> first(n, -1);
    first[origin] = 0;
    if (!order[origin].empty()) {
        int from = origin;
        int cur = order[origin].front();
        int step = 1;
        const int steps = 2 * static_cast<int>(u.edges.size());
        for (; step <= steps; ++step) {
            if (first[cur] < 0) first[cur] = step;
            const auto& nb = order[cur];
            const auto it = std::find(nb.begin(), nb.end(), from);
            const int next = *(std::next(it) == nb.end() ? nb.begin() : std::next(it));
            from = cur;
            cur = next;
        }
    }
    const int p1 = first[u.endpoint[0]];
    const int p2 = first[u.endpoint[1]];
    const int p3 = first[u.endpoint[2]];
    return (p1 <= p2 && p2 <= p3) || (p2 <= p3 && p3 <= p1) || (p3 <= p1 && p1 <= p2);
}

namespace {

// First dual edge on the path from `from` towards `to`.
int first_dual_step(const TriangulatedPolygon& tp, int from, int to)
{
    const int k = tp.triangle_count();
    std::vector<int> via(k, -1);
    std::vector<int> prev(k, -1);
    std::vector<char> seen(k, 0);
    std::queue<int> q;
    q.push(from);
    seen[from] = 1;
    while (!q.empty()) {
        const int t = q.front();
        q.pop();
        for (const auto& [nb, edge] : tp.dual_adjacency[t]) {
            if (seen[nb]) continue;
            seen[nb] = 1;
            prev[nb] = t;
            via[nb] = edge;
            q.push(nb);
        }
    }
    int cur = to;
    while (prev[cur] != from) cur = prev[cur];
    return via[cur];
}

bool strips_reach(const TriangulatedPolygon& tp, int ti, int tj)
{
    const auto [d1, d2] = tp.diagonals[tp.dual_edges[first_dual_step(tp, ti, tj)].diagonal];
    int apex = -1;
    for (int v : tp.triangles[ti]) {
        if (v != d1 && v != d2) apex = v;
    }
    const Point& u1 = tp.polygon.vertex(d1);
    const Point& u2 = tp.polygon.vertex(d2);
    const Point& u3 = tp.polygon.vertex(apex);
    const Triangle target = tp.triangle_points(tj);
    return halfstrip_meets_triangle_interior(HalfStrip(Segment(u2, u3), u1), target) ||
           halfstrip_meets_triangle_interior(HalfStrip(Segment(u1, u3), u2), target);
}

}  // namespace

bool triangles_conflict(const TriangulatedPolygon& tp, int ti, int tj)
{
    const int k = tp.triangle_count();
    if (ti < 0 || tj < 0 || ti >= k || tj >= k) {
        throw GrrError(ErrorCode::UnknownTriangle, "triangle out of range", std::make_pair(ti, tj));
    }
    if (ti == tj) throw GrrError(ErrorCode::SameTriangle, "a triangle does not conflict with itself");
    return strips_reach(tp, ti, tj) || strips_reach(tp, tj, ti);
}

std::optional<ConflictWitness> polygon_is_grr(const Polygon& poly)
{
    for (int e = 0; e < poly.size(); ++e) {
        for (int f = 0; f < poly.size(); ++f) {
            if (auto w = polygon_edges_conflict(poly, e, f)) return w;
        }
    }
    return std::nullopt;
}

namespace {

// Cosine-squared key with sign: larger means a smaller angle between u and w.
Rational angle_key(const Point& u, const Point& w)
{
    const Rational c = dot(u, w);
    return Rational(c.sign()) * c * c / squared_norm(u);
}

}  // namespace

GreedyTrace trace_greedy_path(const Polygon& poly, const Point& s, const Point& t)
{
    if (!contains(poly, s)) throw GrrError(ErrorCode::PointOutsidePolygon, "start point outside the polygon");
    if (!contains(poly, t)) throw GrrError(ErrorCode::PointOutsidePolygon, "target point outside the polygon");

    GreedyTrace trace;
    trace.waypoints.push_back(s);
    Point p = s;
    const int n = poly.size();
    const int cap = 8 * n + 16;
    auto fail = [&](const Point& at) {
        trace.reached = false;
        trace.failure = at;
        return trace;
    };

    for (int iter = 0; iter < cap; ++iter) {
        if (p == t) {
            trace.reached = true;
            return trace;
        }
        const Rational reach = inside_prefix(poly, p, t);
        if (reach == Rational(1)) {
            trace.waypoints.push_back(t);
            trace.reached = true;
            return trace;
        }
        if (reach.sign() > 0) {
            p = lerp(p, t, reach);
            trace.waypoints.push_back(p);
        }

        std::vector<Point> candidates;
        for (int i = 0; i < n; ++i) {
            if (poly.vertex(i) == p) {
                candidates = {poly.vertex(poly.prev(i)), poly.vertex(poly.next(i))};
                break;
            }
        }
        if (candidates.empty()) {
            for (int i = 0; i < n; ++i) {
                if (on_segment(p, poly.edge(i))) {
                    candidates = {poly.vertex(i), poly.vertex(poly.next(i))};
                    break;
                }
            }
        }
        if (candidates.empty()) return fail(p);

        const Point w = t - p;
        const Rational k0 = angle_key(candidates[0] - p, w);
        const Rational k1 = angle_key(candidates[1] - p, w);
        Point v = candidates[0];
        if (k1 > k0 || (k1 == k0 && candidates[1] < candidates[0])) v = candidates[1];

        if (dot(v - p, v - t).sign() > 0) return fail(p);
        p = v;
        trace.waypoints.push_back(p);
    }
    return fail(p);
}

}  // namespace grr
