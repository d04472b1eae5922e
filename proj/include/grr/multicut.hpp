#pragma once

#include <utility>
#include <vector>

#include "grr/rational.hpp"

namespace grr {

/// Tree on vertices 0..vertex_count-1 with positive edge weights and
/// terminal pairs that must be separated.
struct MulticutInstance {
    int vertex_count = 0;
    std::vector<std::pair<int, int>> edges;
    std::vector<Rational> weights;
    std::vector<std::pair<int, int>> terminal_pairs;
};

struct Cut {
    std::vector<int> edges;  ///< sorted edge indices
    Rational total_weight;
};

/// Throws NotATree, UnknownVertex or InvalidPathFamily (a pair joining a
/// vertex to itself).
void validate_instance(const MulticutInstance& inst);

bool is_multicut(const MulticutInstance& inst, const std::vector<int>& cut);
/// A multicut from which no single edge can be dropped.
bool is_minimal_multicut(const MulticutInstance& inst, const std::vector<int>& cut);

/// Edge indices on the tree path joining u and v.
std::vector<int> tree_path_edges(const MulticutInstance& inst, int u, int v);

/// Branch and bound over hitting sets of terminal paths. Throws
/// BudgetExceeded above 25 edges.
Cut solve_exact_small(const MulticutInstance& inst);

/// Primal-dual 2-approximation: pairs are processed by decreasing depth of
/// their lowest common ancestor, each raising its dual until an edge of its
/// path saturates, followed by reverse deletion.
Cut approx_gvy(const MulticutInstance& inst);

}  // namespace grr
