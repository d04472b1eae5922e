#include "grr/polygon_decomposition.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <set>

#include "grr/analysis.hpp"
#include "grr/error.hpp"

namespace grr {

std::vector<std::pair<int, int>> conflicting_triangle_pairs(const TriangulatedPolygon& tp)
{
    std::vector<std::pair<int, int>> out;
    for (int i = 0; i < tp.triangle_count(); ++i) {
        for (int j = i + 1; j < tp.triangle_count(); ++j) {
            if (triangles_conflict(tp, i, j)) out.emplace_back(i, j);
        }
    }
    return out;
}

MulticutInstance dual_multicut_instance(const TriangulatedPolygon& tp)
{
    MulticutInstance inst;
    inst.vertex_count = tp.triangle_count();
    for (const DualEdge& e : tp.dual_edges) inst.edges.emplace_back(e.t1, e.t2);
    inst.weights.assign(inst.edges.size(), Rational(1));
    inst.terminal_pairs = conflicting_triangle_pairs(tp);
    return inst;
}

PolygonDecomposition decomposition_from_cut(const TriangulatedPolygon& tp, const std::vector<int>& cut)
{
    std::vector<int> parent(tp.triangle_count());
    std::iota(parent.begin(), parent.end(), 0);
    auto find = [&](int x) {
        while (parent[x] != x) x = parent[x] = parent[parent[x]];
        return x;
    };
    const std::set<int> removed(cut.begin(), cut.end());
    for (int e = 0; e < static_cast<int>(tp.dual_edges.size()); ++e) {
        if (!removed.count(e)) parent[find(tp.dual_edges[e].t1)] = find(tp.dual_edges[e].t2);
    }
    std::map<int, std::vector<int>> groups;
    for (int t = 0; t < tp.triangle_count(); ++t) groups[find(t)].push_back(t);
    PolygonDecomposition out;
    for (auto& [root, tris] : groups) out.pieces.push_back(std::move(tris));
    std::sort(out.pieces.begin(), out.pieces.end());
    out.cut_diagonals.assign(removed.begin(), removed.end());
    return out;
}

Polygon piece_polygon(const TriangulatedPolygon& tp, const std::vector<int>& piece)
{
    std::vector<Point> pts;
    for (int v : piece_boundary(tp, piece)) pts.push_back(tp.polygon.vertex(v));
    return Polygon(std::move(pts));
}

PolygonDecomposition decompose_polygon_approx(const TriangulatedPolygon& tp)
{
    return decomposition_from_cut(tp, approx_gvy(dual_multicut_instance(tp)).edges);
}

PolygonDecomposition decompose_polygon_exact_small(const TriangulatedPolygon& tp)
{
    if (tp.dual_edges.size() > 25) throw GrrError(ErrorCode::BudgetExceeded, "exact decomposition limited to 25 dual edges");
    return decomposition_from_cut(tp, solve_exact_small(dual_multicut_instance(tp)).edges);
}

}  // namespace grr
