#pragma once

#include <utility>
#include <vector>

#include "grr/multicut.hpp"
#include "grr/polygon.hpp"

namespace grr {

struct PolygonDecomposition {
    /// Sorted triangle ids per piece, pieces ordered by smallest id.
    std::vector<std::vector<int>> pieces;
    /// Indices into TriangulatedPolygon::diagonals.
    std::vector<int> cut_diagonals;

    int size() const { return static_cast<int>(pieces.size()); }
};

/// Unordered conflicting triangle pairs (smaller id first), sorted.
std::vector<std::pair<int, int>> conflicting_triangle_pairs(const TriangulatedPolygon& tp);

/// Dual tree with unit weights and the conflicting pairs as terminals.
MulticutInstance dual_multicut_instance(const TriangulatedPolygon& tp);

/// Pieces left after cutting the given diagonals.
PolygonDecomposition decomposition_from_cut(const TriangulatedPolygon& tp, const std::vector<int>& cut);

/// Union of a piece's triangles as a polygon.
Polygon piece_polygon(const TriangulatedPolygon& tp, const std::vector<int>& piece);

PolygonDecomposition decompose_polygon_approx(const TriangulatedPolygon& tp);
/// Throws BudgetExceeded above 25 dual edges.
PolygonDecomposition decompose_polygon_exact_small(const TriangulatedPolygon& tp);

}  // namespace grr
