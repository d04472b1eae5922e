#include "grr/oracle.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <set>
#include <unordered_map>

#include "grr/error.hpp"

namespace grr::oracle {

namespace {

Point pt(std::int64_t x, std::int64_t y) { return {Rational(x), Rational(y)}; }

Drawing make_drawing(const std::vector<Point>& points, const std::vector<std::pair<int, int>>& edges)
{
    RawDrawing raw;
    for (int i = 0; i < static_cast<int>(points.size()); ++i) raw.vertices.push_back({i, points[i]});
    raw.edges = edges;
    return validate_drawing(raw);
}

TriangulatedPolygon make_polygon(const std::vector<Point>& points, const std::vector<std::pair<int, int>>& diagonals)
{
    return build_dual_tree(Polygon(points), diagonals);
}

}  // namespace

Drawing p_ic() { return make_drawing({pt(0, 0), pt(1, 0), pt(2, 1)}, {{0, 1}, {1, 2}}); }

Drawing p_acute() { return make_drawing({pt(0, 0), pt(2, 0), pt(0, 1)}, {{0, 1}, {1, 2}}); }

Drawing star3() { return make_drawing({pt(0, 0), pt(0, 2), pt(2, -1), pt(-2, -1)}, {{0, 1}, {0, 2}, {0, 3}}); }

Drawing plus_star()
{
    return make_drawing({pt(0, 0), pt(0, 1), pt(1, 0), pt(0, -1), pt(-1, 0)}, {{0, 1}, {0, 2}, {0, 3}, {0, 4}});
}

Drawing split_comb()
{
    return make_drawing({pt(-2, 18), pt(-4, 16), pt(0, 0), pt(20, 0), pt(25, -8), pt(24, -10)},
                        {{0, 1}, {1, 2}, {2, 3}, {3, 4}, {4, 5}});
}

TriangulatedPolygon rect() { return make_polygon({pt(0, 0), pt(4, 0), pt(4, 2), pt(0, 2)}, {{0, 2}}); }

TriangulatedPolygon l_shape()
{
    return make_polygon({pt(0, 0), pt(2, 0), pt(2, 1), pt(1, 1), pt(1, 2), pt(0, 2)}, {{0, 2}, {0, 3}, {3, 5}});
}

TriangulatedPolygon u_shape()
{
    return make_polygon({pt(0, 0), pt(3, 0), pt(3, 3), pt(2, 3), pt(2, 1), pt(1, 1), pt(1, 3), pt(0, 3)},
                        {{5, 7}, {0, 5}, {0, 4}, {1, 4}, {1, 3}});
}

TriangulatedPolygon two_notch_comb()
{
    return make_polygon({pt(0, 0), pt(5, 0), pt(5, 3), pt(4, 3), pt(4, 1), pt(3, 1), pt(3, 3), pt(2, 3), pt(2, 1),
                         pt(1, 1), pt(1, 3), pt(0, 3)},
                        {{2, 4}, {1, 4}, {5, 7}, {5, 8}, {9, 11}, {0, 9}, {0, 4}, {0, 5}, {0, 8}});
}

TriangulatedPolygon convex_fan()
{
    return make_polygon({pt(0, 0), pt(3, -1), pt(6, 0), pt(7, 3), pt(5, 6), pt(1, 6), pt(-1, 3)},
                        {{0, 2}, {0, 3}, {0, 4}, {0, 5}});
}

std::vector<NamedDrawing> tree_fixtures()
{
    return {{"p_ic", p_ic()}, {"p_acute", p_acute()}, {"star3", star3()}, {"plus_star", plus_star()},
            {"split_comb", split_comb()}};
}

std::vector<NamedPolygon> polygon_fixtures()
{
    return {{"rect", rect()},       {"l_shape", l_shape()},       {"ushape", u_shape()},
            {"two_notch_comb", two_notch_comb()}, {"convex_fan", convex_fan()}};
}

Drawing random_tree_drawing(std::mt19937_64& rng, int edges, int grid)
{
    std::uniform_int_distribution<int> coord(-grid, grid);
    std::vector<Point> pts{pt(coord(rng), coord(rng))};
    std::vector<std::pair<int, int>> es;
    while (static_cast<int>(es.size()) < edges) {
        const int u = std::uniform_int_distribution<int>(0, static_cast<int>(pts.size()) - 1)(rng);
        const Point p = pt(coord(rng), coord(rng));
        if (std::find(pts.begin(), pts.end(), p) != pts.end()) continue;
        const Segment s(pts[u], p);
        bool ok = true;
        for (const auto& [a, b] : es) {
            const auto hit = segment_intersection(s, Segment(pts[a], pts[b]));
            if (std::holds_alternative<std::monostate>(hit)) continue;
            const Point* q = std::get_if<Point>(&hit);
            if (q == nullptr || (a != u && b != u) || *q != pts[u]) {
                ok = false;
                break;
            }
        }
        for (int w = 0; ok && w < static_cast<int>(pts.size()); ++w) {
            if (w != u && on_segment(pts[w], s)) ok = false;
        }
        if (!ok) continue;
        pts.push_back(p);
        es.emplace_back(u, static_cast<int>(pts.size()) - 1);
    }
    return make_drawing(pts, es);
}

namespace {

bool in_closed_triangle(const Point& z, const Point& a, const Point& b, const Point& c)
{
    const int o1 = orientation(a, b, z);
    const int o2 = orientation(b, c, z);
    const int o3 = orientation(c, a, z);
    const bool has_neg = o1 < 0 || o2 < 0 || o3 < 0;
    const bool has_pos = o1 > 0 || o2 > 0 || o3 > 0;
    return !(has_neg && has_pos);
}

}  // namespace

TriangulatedPolygon random_triangulated_polygon(std::mt19937_64& rng, int triangles, int grid)
{
    std::uniform_int_distribution<int> coord(0, grid);
    std::vector<Point> points;
    std::vector<int> ring;
    for (;;) {
        points = {pt(coord(rng), coord(rng)), pt(coord(rng), coord(rng)), pt(coord(rng), coord(rng))};
        const int o = orientation(points[0], points[1], points[2]);
        if (o == 0) continue;
        if (o < 0) std::swap(points[1], points[2]);
        ring = {0, 1, 2};
        break;
    }
    std::vector<std::pair<int, int>> diag_ids;
    int made = 1;
    for (int attempt = 0; made < triangles && attempt < 2000; ++attempt) {
        const int k = static_cast<int>(ring.size());
        const int i = std::uniform_int_distribution<int>(0, k - 1)(rng);
        const int u = ring[i];
        const int v = ring[(i + 1) % k];
        const Point w = pt(coord(rng), coord(rng));
        if (std::find(points.begin(), points.end(), w) != points.end()) continue;
        if (orientation(points[u], points[v], w) >= 0) continue;
        bool clear = true;
        for (int z : ring) {
            if (z != u && z != v && in_closed_triangle(points[z], points[u], w, points[v])) clear = false;
        }
        if (!clear) continue;
        std::vector<int> grown(ring);
        grown.insert(grown.begin() + i + 1, static_cast<int>(points.size()));
        std::vector<Point> boundary;
        for (int z : grown) boundary.push_back(z < static_cast<int>(points.size()) ? points[z] : w);
        try {
            Polygon check(boundary);
        } catch (const GrrError&) {
            continue;
        }
        points.push_back(w);
        ring = std::move(grown);
        diag_ids.emplace_back(u, v);
        ++made;
    }
    std::map<int, int> position;
    std::vector<Point> boundary;
    for (int z : ring) {
        position[z] = static_cast<int>(boundary.size());
        boundary.push_back(points[z]);
    }
    std::vector<std::pair<int, int>> diagonals;
    for (const auto& [a, b] : diag_ids) diagonals.emplace_back(position[a], position[b]);
    return build_dual_tree(Polygon(boundary), diagonals);
}

MulticutInstance random_multicut_instance(std::mt19937_64& rng, int vertices, int pairs)
{
    MulticutInstance inst;
    inst.vertex_count = vertices;
    for (int v = 1; v < vertices; ++v) {
        inst.edges.emplace_back(std::uniform_int_distribution<int>(0, v - 1)(rng), v);
    }
    inst.weights.assign(inst.edges.size(), Rational(1));
    std::uniform_int_distribution<int> pick(0, vertices - 1);
    while (static_cast<int>(inst.terminal_pairs.size()) < pairs && vertices > 1) {
        const int s = pick(rng);
        const int t = pick(rng);
        if (s != t) inst.terminal_pairs.emplace_back(s, t);
    }
    return inst;
}

BruteForceResult brute_force_min_gtd(const Drawing& d, ContactMode mode, int max_edges)
{
    const int m = d.edge_count();
    if (m > max_edges) throw GrrError(ErrorCode::BudgetExceeded, "brute force limited to " + std::to_string(max_edges) + " edges");
    std::vector<std::vector<char>> conflict(m, std::vector<char>(m, 0));
    for (int e = 0; e < m; ++e) {
        for (int f = e + 1; f < m; ++f) conflict[e][f] = conflict[f][e] = edges_conflict_either(d, e, f);
    }

    std::vector<int> comp_of(m, -1);
    std::vector<std::vector<int>> comps;
    int best = m + 1;
    std::vector<int> best_assignment;

    auto feasible = [&]() {
        for (const auto& c : comps) {
            std::set<int> vs;
            for (int e : c) {
                vs.insert(d.edge(e).u);
                vs.insert(d.edge(e).v);
            }
            if (vs.size() != c.size() + 1) return false;
        }
        for (int v = 0; v < d.vertex_count(); ++v) {
            if (!contacts_allowed(d, v, comp_of, mode)) return false;
        }
        return true;
    };

    std::function<void(int)> search = [&](int e) {
        if (static_cast<int>(comps.size()) >= best) return;
        if (e == m) {
            if (feasible()) {
                best = static_cast<int>(comps.size());
                best_assignment = comp_of;
            }
            return;
        }
        for (std::size_t c = 0; c < comps.size(); ++c) {
            if (std::any_of(comps[c].begin(), comps[c].end(), [&](int f) { return conflict[e][f] != 0; })) continue;
            comps[c].push_back(e);
            comp_of[e] = static_cast<int>(c);
            search(e + 1);
            comps[c].pop_back();
            comp_of[e] = -1;
        }
        if (static_cast<int>(comps.size()) + 1 < best) {
            comps.push_back({e});
            comp_of[e] = static_cast<int>(comps.size()) - 1;
            search(e + 1);
            comps.pop_back();
            comp_of[e] = -1;
        }
    };
    search(0);

    Partition p;
    p.mode = mode;
    p.components.assign(best, {});
    for (int e = 0; e < m; ++e) p.components[best_assignment[e]].push_back(e);
    normalize(p);
    return {best, p};
}

bool piece_is_grr(const TriangulatedPolygon& tp, const std::vector<int>& piece)
{
    try {
        return !polygon_is_grr(piece_polygon(tp, piece)).has_value();
    } catch (const GrrError&) {
        return false;
    }
}

int brute_force_min_polygon(const TriangulatedPolygon& tp)
{
    if (tp.triangle_count() > 14) throw GrrError(ErrorCode::BudgetExceeded, "brute force limited to 14 triangles");
    const int edges = static_cast<int>(tp.dual_edges.size());
    std::unordered_map<std::uint32_t, bool> cache;
    int best = tp.triangle_count();
    for (std::uint32_t mask = 0; mask < (1u << edges); ++mask) {
        const int pieces = __builtin_popcount(mask) + 1;
        if (pieces >= best) continue;
        std::vector<int> cut;
        for (int e = 0; e < edges; ++e) {
            if (mask & (1u << e)) cut.push_back(e);
        }
        const PolygonDecomposition dec = decomposition_from_cut(tp, cut);
        bool ok = true;
        for (const auto& piece : dec.pieces) {
            std::uint32_t key = 0;
            for (int t : piece) key |= 1u << t;
            auto it = cache.find(key);
            if (it == cache.end()) it = cache.emplace(key, piece_is_grr(tp, piece)).first;
            if (!it->second) {
                ok = false;
                break;
            }
        }
        if (ok) best = pieces;
    }
    return best;
}

bool trace_is_monotone(const Polygon& poly, const GreedyTrace& trace, const Point& t)
{
    if (trace.waypoints.empty() || trace.waypoints.back() != t) return false;
    for (std::size_t k = 0; k + 1 < trace.waypoints.size(); ++k) {
        const Point& a = trace.waypoints[k];
        const Point& b = trace.waypoints[k + 1];
        if (a == b) return false;
        if (!segment_inside(poly, a, b)) return false;
        if (!segment_strictly_approaches(a, b, t)) return false;
    }
    return true;
}

Point random_point_in(const Polygon& poly, std::mt19937_64& rng)
{
    Rational minx = poly.vertex(0).x, maxx = minx, miny = poly.vertex(0).y, maxy = miny;
    for (const Point& p : poly.vertices()) {
        minx = min(minx, p.x);
        maxx = max(maxx, p.x);
        miny = min(miny, p.y);
        maxy = max(maxy, p.y);
    }
    constexpr int steps = 64;
    std::uniform_int_distribution<int> k(0, steps);
    for (;;) {
        const Point p{minx + (maxx - minx) * Rational(k(rng), steps), miny + (maxy - miny) * Rational(k(rng), steps)};
        if (contains(poly, p)) return p;
    }
}

ProbeReport sampled_grr_probe(const Polygon& poly, int n_pairs, std::uint64_t seed,
                              const std::vector<std::pair<Point, Point>>& extra_pairs)
{
    std::mt19937_64 rng(seed);
    std::vector<std::pair<Point, Point>> pairs(extra_pairs);
    for (int i = 0; i < n_pairs; ++i) {
        Point s = random_point_in(poly, rng);
        Point t = random_point_in(poly, rng);
        pairs.emplace_back(std::move(s), std::move(t));
    }
    ProbeReport report;
    for (const auto& [s, t] : pairs) {
        ++report.attempted;
        const GreedyTrace trace = trace_greedy_path(poly, s, t);
        if (!trace.reached) {
            if (!report.first_failure) report.first_failure = std::make_pair(s, t);
            continue;
        }
        if (!trace_is_monotone(poly, trace, t)) {
            ++report.monotonicity_violations;
            if (!report.first_failure) report.first_failure = std::make_pair(s, t);
            continue;
        }
        ++report.succeeded;
    }
    return report;
}

}  // namespace grr::oracle
