#include "support.hpp"

#include <algorithm>
#include <set>

namespace grr::testing {

std::vector<int> random_subtree(const Drawing& d, std::mt19937_64& rng)
{
    const int target = 1 + static_cast<int>(rng() % d.edge_count());
    std::set<int> chosen{static_cast<int>(rng() % d.edge_count())};
    while (static_cast<int>(chosen.size()) < target) {
        std::vector<int> frontier;
        for (int e : chosen) {
            for (int v : {d.edge(e).u, d.edge(e).v}) {
                for (int f : d.incident(v)) {
                    if (!chosen.count(f)) frontier.push_back(f);
                }
            }
        }
        if (frontier.empty()) break;
        chosen.insert(frontier[rng() % frontier.size()]);
    }
    return {chosen.begin(), chosen.end()};
}

std::pair<std::vector<Point>, std::vector<int>> tree_path(const Drawing& d, int s, int t)
{
    std::vector<int> via(d.vertex_count(), -2);
    std::vector<int> queue{s};
    via[s] = -1;
    for (std::size_t i = 0; i < queue.size(); ++i) {
        for (int e : d.incident(queue[i])) {
            const int w = d.other_end(e, queue[i]);
            if (via[w] != -2) continue;
            via[w] = e;
            queue.push_back(w);
        }
    }
    std::vector<Point> points{d.point(t)};
    std::vector<int> edges;
    for (int v = t; v != s;) {
        edges.push_back(via[v]);
        v = d.other_end(via[v], v);
        points.push_back(d.point(v));
    }
    std::reverse(points.begin(), points.end());
    std::reverse(edges.begin(), edges.end());
    return {points, edges};
}

bool all_paths_increasing_chord(const Drawing& d, const std::vector<int>& edges)
{
    std::set<int> verts;
    for (int e : edges) {
        verts.insert(d.edge(e).u);
        verts.insert(d.edge(e).v);
    }
    for (int s : verts) {
        for (int t : verts) {
            if (s < t && !path_increasing_chord(tree_path(d, s, t).first)) return false;
        }
    }
    return true;
}

namespace {

RootPath outermost(const Drawing& d, int v, int first_edge, bool leftmost)
{
    RootPath path{d.point(v)};
    int from = v;
    int e = first_edge;
    for (;;) {
        const int w = d.other_end(e, from);
        path.push_back(d.point(w));
        if (d.degree(w) == 1) return path;
        const std::vector<int> order = clockwise_order_at(d, w);
        const auto at = std::find(order.begin(), order.end(), e) - order.begin();
        const int k = static_cast<int>(order.size());
        const int step = leftmost ? 1 : k - 1;
        from = w;
        e = order[(at + step) % k];
    }
}

Side side_of(const Drawing& d, int v, const std::vector<int>& block)
{
    Side side;
    std::vector<int> stack;
    std::set<int> seen{v};
    for (int e : block) {
        side.edges.push_back(e);
        stack.push_back(d.other_end(e, v));
    }
    while (!stack.empty()) {
        const int w = stack.back();
        stack.pop_back();
        if (!seen.insert(w).second) continue;
        for (int f : d.incident(w)) {
            const int x = d.other_end(f, w);
            if (seen.count(x)) continue;
            side.edges.push_back(f);
            stack.push_back(x);
        }
    }
    std::sort(side.edges.begin(), side.edges.end());
    side.leftmost = outermost(d, v, block.front(), true);
    side.rightmost = outermost(d, v, block.back(), false);
    return side;
}

}  // namespace

std::optional<std::pair<Side, Side>> random_split_at_vertex(const Drawing& d, std::mt19937_64& rng)
{
    std::vector<int> candidates;
    for (int v = 0; v < d.vertex_count(); ++v) {
        if (d.degree(v) >= 2) candidates.push_back(v);
    }
    if (candidates.empty()) return std::nullopt;
    const int v = candidates[rng() % candidates.size()];
    const std::vector<int> order = clockwise_order_at(d, v);
    const int k = static_cast<int>(order.size());
    const int start = static_cast<int>(rng() % k);
    const int len = 1 + static_cast<int>(rng() % (k - 1));
    std::vector<int> first;
    std::vector<int> second;
    for (int i = 0; i < k; ++i) (i < len ? first : second).push_back(order[(start + i) % k]);
    return std::make_pair(side_of(d, v, first), side_of(d, v, second));
}

bool witness_is_sound(const Polygon& poly, const ConflictWitness& w)
{
    const Segment e = poly.edge(w.edge_e);
    const Point dir = e.direction();
    const Point outward{dir.y, -dir.x};
    if (!in_relative_interior(w.p, e)) return false;
    if (!on_segment(w.hit, poly.edge(w.edge_f))) return false;
    if (!dot(w.hit - w.p, dir).is_zero()) return false;
    if (dot(w.hit - w.p, outward) <= Rational(0)) return false;
    // No point of e near p is closer to hit, so a trace from p towards hit
    // cannot start along e.
    const GreedyTrace trace = trace_greedy_path(poly, w.p, w.hit);
    return !trace.reached || trace.waypoints.size() < 2 || !on_segment(trace.waypoints[1], e) ||
           trace.waypoints[1] == w.hit;
}

}  // namespace grr::testing
