#include "grr/polygon.hpp"

#include <algorithm>
#include <map>
#include <set>

#include "grr/error.hpp"

namespace grr {

Polygon::Polygon(std::vector<Point> boundary) : pts_(std::move(boundary))
{
    const int n = size();
    if (n < 3) throw GrrError(ErrorCode::NotSimple, "polygon needs at least three vertices");
    std::set<Point> distinct(pts_.begin(), pts_.end());
    if (static_cast<int>(distinct.size()) != n) throw GrrError(ErrorCode::NotSimple, "repeated boundary vertex");

    for (int i = 0; i < n; ++i) {
        const Segment ei = edge(i);
        for (int j = i + 1; j < n; ++j) {
            const auto hit = segment_intersection(ei, edge(j));
            if (std::holds_alternative<std::monostate>(hit)) continue;
            const bool adjacent = j == i + 1 || (i == 0 && j == n - 1);
            if (adjacent && std::holds_alternative<Point>(hit)) {
                const Point& shared = j == i + 1 ? pts_[j] : pts_[0];
                if (std::get<Point>(hit) == shared) continue;
            }
            throw GrrError(ErrorCode::NotSimple,
                           "boundary edges " + std::to_string(i) + " and " + std::to_string(j) + " intersect",
                           std::make_pair(i, j));
        }
    }
    if (twice_signed_area(pts_).sign() <= 0) {
        throw GrrError(ErrorCode::NotSimple, "boundary is not counterclockwise");
    }
}

Location locate(const Polygon& poly, const Point& p)
{
    bool inside = false;
    const int n = poly.size();
    for (int i = 0; i < n; ++i) {
        const Point& a = poly.vertex(i);
        const Point& b = poly.vertex(poly.next(i));
        if (on_segment(p, Segment(a, b))) return Location::Boundary;
        if ((a.y > p.y) != (b.y > p.y)) {
            const Rational x = a.x + (p.y - a.y) * (b.x - a.x) / (b.y - a.y);
            if (p.x < x) inside = !inside;
        }
    }
    return inside ? Location::Inside : Location::Outside;
}

Rational inside_prefix(const Polygon& poly, const Point& a, const Point& b)
{
    if (a == b) return Rational(1);
    const Segment ab(a, b);
    const Point dir = b - a;
    const Rational len2 = squared_norm(dir);
    std::set<Rational> params{Rational(0), Rational(1)};
    auto param_of = [&](const Point& q) { return dot(q - a, dir) / len2; };
    for (int i = 0; i < poly.size(); ++i) {
        const auto hit = segment_intersection(ab, poly.edge(i));
        if (const Point* q = std::get_if<Point>(&hit)) {
            params.insert(param_of(*q));
        } else if (const Segment* s = std::get_if<Segment>(&hit)) {
            params.insert(param_of(s->a()));
            params.insert(param_of(s->b()));
        }
    }
    Rational reach(0);
    for (auto it = params.begin(); std::next(it) != params.end(); ++it) {
        const Rational mid = (*it + *std::next(it)) / Rational(2);
        if (locate(poly, lerp(a, b, mid)) == Location::Outside) break;
        reach = *std::next(it);
    }
    return reach;
}

bool segment_inside(const Polygon& poly, const Point& a, const Point& b)
{
    if (!contains(poly, a) || !contains(poly, b)) return false;
    return inside_prefix(poly, a, b) == Rational(1);
}

Triangle TriangulatedPolygon::triangle_points(int t) const
{
    const auto& tri = triangles.at(t);
    return {polygon.vertex(tri[0]), polygon.vertex(tri[1]), polygon.vertex(tri[2])};
}

int TriangulatedPolygon::triangle_index(int a, int b, int c) const
{
    std::array<int, 3> key{a, b, c};
    std::sort(key.begin(), key.end());
    for (int t = 0; t < triangle_count(); ++t) {
        std::array<int, 3> s = triangles[t];
        std::sort(s.begin(), s.end());
        if (s == key) return t;
    }
    throw GrrError(ErrorCode::UnknownTriangle, "no triangle with the given vertices");
}

namespace {

void split_into_triangles(const std::vector<int>& ring, const std::vector<std::pair<int, int>>& diags,
                          std::vector<std::array<int, 3>>& out)
{
    if (ring.size() == 3) {
        out.push_back({ring[0], ring[1], ring[2]});
        return;
    }
    const int k = static_cast<int>(ring.size());
    std::map<int, int> pos;
    for (int i = 0; i < k; ++i) pos[ring[i]] = i;
    for (const auto& [u, v] : diags) {
        auto iu = pos.find(u);
        auto iv = pos.find(v);
        if (iu == pos.end() || iv == pos.end()) continue;
        int a = std::min(iu->second, iv->second);
        int b = std::max(iu->second, iv->second);
        if (b - a == 1 || (a == 0 && b == k - 1)) continue;
        std::vector<int> left(ring.begin() + a, ring.begin() + b + 1);
        std::vector<int> right(ring.begin() + b, ring.end());
        right.insert(right.end(), ring.begin(), ring.begin() + a + 1);
        std::vector<std::pair<int, int>> rest;
        for (const auto& dg : diags) {
            if (dg != std::make_pair(u, v)) rest.push_back(dg);
        }
        split_into_triangles(left, rest, out);
        split_into_triangles(right, rest, out);
        return;
    }
    throw GrrError(ErrorCode::IncompleteTriangulation, "a face with more than three vertices remains");
}

}  // namespace

TriangulatedPolygon build_dual_tree(Polygon polygon, const std::vector<std::pair<int, int>>& diagonals)
{
    const int n = polygon.size();
    std::vector<std::pair<int, int>> diags;
    std::set<std::pair<int, int>> seen;
    for (auto [i, j] : diagonals) {
        if (i < 0 || j < 0 || i >= n || j >= n) {
            throw GrrError(ErrorCode::UnknownVertex, "diagonal references a missing vertex", std::make_pair(i, j));
        }
        if (i > j) std::swap(i, j);
        if (i == j || j == i + 1 || (i == 0 && j == n - 1)) {
            throw GrrError(ErrorCode::CrossingDiagonals, "diagonal coincides with the boundary", std::make_pair(i, j));
        }
        if (!seen.insert({i, j}).second) {
            throw GrrError(ErrorCode::CrossingDiagonals, "diagonal listed twice", std::make_pair(i, j));
        }
        const Segment s(polygon.vertex(i), polygon.vertex(j));
        bool blocked = !segment_inside(polygon, s.a(), s.b());
        for (int k = 0; k < n && !blocked; ++k) {
            if (k != i && k != j && on_segment(polygon.vertex(k), s)) blocked = true;
        }
        if (blocked) throw GrrError(ErrorCode::CrossingDiagonals, "diagonal leaves the polygon", std::make_pair(i, j));
        diags.emplace_back(i, j);
    }
    for (std::size_t a = 0; a < diags.size(); ++a) {
        for (std::size_t b = a + 1; b < diags.size(); ++b) {
            const auto [i, j] = diags[a];
            const auto [k, l] = diags[b];
            if (i == k || i == l || j == k || j == l) continue;
            const Segment s1(polygon.vertex(i), polygon.vertex(j));
            const Segment s2(polygon.vertex(k), polygon.vertex(l));
            if (segments_touch(s1, s2)) {
                throw GrrError(ErrorCode::CrossingDiagonals, "diagonals cross",
                               std::make_pair(static_cast<int>(a), static_cast<int>(b)));
            }
        }
    }
    if (static_cast<int>(diags.size()) != n - 3) {
        throw GrrError(ErrorCode::IncompleteTriangulation,
                       "expected " + std::to_string(n - 3) + " diagonals, got " + std::to_string(diags.size()));
    }

    std::vector<int> ring(n);
    for (int i = 0; i < n; ++i) ring[i] = i;
    std::vector<std::array<int, 3>> tris;
    split_into_triangles(ring, diags, tris);
    std::sort(tris.begin(), tris.end(), [](std::array<int, 3> x, std::array<int, 3> y) {
        std::sort(x.begin(), x.end());
        std::sort(y.begin(), y.end());
        return x < y;
    });

    TriangulatedPolygon tp{std::move(polygon), diags, tris, {}, {}};
    tp.dual_adjacency.assign(tris.size(), {});
    for (int k = 0; k < static_cast<int>(diags.size()); ++k) {
        const auto [i, j] = diags[k];
        std::vector<int> owners;
        for (int t = 0; t < static_cast<int>(tris.size()); ++t) {
            const auto& tr = tris[t];
            const bool has_i = std::find(tr.begin(), tr.end(), i) != tr.end();
            const bool has_j = std::find(tr.begin(), tr.end(), j) != tr.end();
            if (has_i && has_j) owners.push_back(t);
        }
        if (owners.size() != 2) throw GrrError(ErrorCode::IncompleteTriangulation, "diagonal does not border two triangles");
        tp.dual_edges.push_back({owners[0], owners[1], k});
        tp.dual_adjacency[owners[0]].emplace_back(owners[1], k);
        tp.dual_adjacency[owners[1]].emplace_back(owners[0], k);
    }
    return tp;
}

std::vector<int> piece_boundary(const TriangulatedPolygon& tp, const std::vector<int>& triangle_ids)
{
    std::set<std::pair<int, int>> directed;
    for (int t : triangle_ids) {
        const auto& tr = tp.triangles.at(t);
        for (int k = 0; k < 3; ++k) directed.insert({tr[k], tr[(k + 1) % 3]});
    }
    std::map<int, int> succ;
    for (const auto& [a, b] : directed) {
        if (directed.count({b, a})) continue;
        if (!succ.emplace(a, b).second) {
            throw GrrError(ErrorCode::NotSimple, "piece boundary repeats vertex " + std::to_string(a));
        }
    }
    std::vector<int> ring;
    if (succ.empty()) return ring;
    const int start = succ.begin()->first;
    int cur = start;
    do {
        ring.push_back(cur);
        cur = succ.at(cur);
    } while (cur != start && ring.size() <= succ.size());
    if (ring.size() != succ.size()) throw GrrError(ErrorCode::NotSimple, "piece boundary is not a single cycle");
    return ring;
}

}  // namespace grr
