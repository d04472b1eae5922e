#pragma once

#include <optional>
#include <random>
#include <utility>
#include <vector>

#include "grr/analysis.hpp"
#include "grr/drawing.hpp"

namespace grr::testing {

inline Point pt(std::int64_t x, std::int64_t y) { return {Rational(x), Rational(y)}; }

/// Connected edge subset grown from a random edge.
std::vector<int> random_subtree(const Drawing& d, std::mt19937_64& rng);

/// Every vertex pair of the subtree is joined by an increasing-chord path.
bool all_paths_increasing_chord(const Drawing& d, const std::vector<int>& edges);

/// Points and edges of the tree path from vertex index s to t.
std::pair<std::vector<Point>, std::vector<int>> tree_path(const Drawing& d, int s, int t);

struct Side {
    std::vector<int> edges;
    RootPath leftmost;
    RootPath rightmost;
};

/// Splits the edges at a random vertex of degree at least two into two
/// cyclically consecutive blocks and returns the subtrees behind them with
/// their outermost root paths.
std::optional<std::pair<Side, Side>> random_split_at_vertex(const Drawing& d, std::mt19937_64& rng);

/// p is interior to e and is the foot of the outward normal through hit on f.
bool witness_is_sound(const Polygon& poly, const ConflictWitness& w);

}  // namespace grr::testing
