#pragma once

#include <array>
#include <optional>
#include <string>
#include <vector>

#include "grr/drawing.hpp"
#include "grr/multicut.hpp"

namespace grr {

enum class ContactMode { Proper, Noncrossing, Any };

const char* to_string(ContactMode mode);
/// Accepts "proper", "noncrossing" and "any"; throws std::invalid_argument.
ContactMode parse_contact_mode(const std::string& text);

struct Partition {
    /// Each component is a sorted list of edge indices; components are
    /// ordered by their smallest edge.
    std::vector<std::vector<int>> components;
    ContactMode mode = ContactMode::Proper;
    /// Present when the edges belong to a subdivided drawing.
    std::optional<std::vector<EdgePiece>> origin;

    int size() const { return static_cast<int>(components.size()); }
};

/// Sorts every component and orders components by their smallest edge.
void normalize(Partition& p);

/// Symmetric table: is the tree path between two vertex indices
/// increasing-chord. Pairs of equal vertices are true.
class PathIcTable {
public:
    PathIcTable() = default;
    PathIcTable(int n, std::vector<char> bits) : n_(n), bits_(std::move(bits)) {}
    bool operator()(int s, int t) const { return bits_[static_cast<std::size_t>(s) * n_ + t] != 0; }
    int size() const { return n_; }

private:
    int n_ = 0;
    std::vector<char> bits_;
};

PathIcTable precompute_path_ic(const RootedTree& rt);

struct FrameValue {
    int a;
    int b;
    int value;
};

struct SigmaValue {
    int a;
    int b;
    /// Indexed by the root component's degree at the vertex; slot 0 unused.
    std::array<int, 5> by_degree;
    int value;
};

/// Finite table entries kept for inspection; sizes above this are infinite.
struct DpTables {
    static constexpr int infinity = 1 << 29;
    std::vector<std::vector<FrameValue>> tau;
    std::vector<std::vector<SigmaValue>> sigma;
};

/// Minimum decomposition into increasing-chord subtrees with the given
/// contact mode (Proper or Noncrossing). Throws std::invalid_argument for Any.
Partition min_gtd_exact(const RootedTree& rt, ContactMode mode, DpTables* tables = nullptr);
/// Roots the drawing at its degree-1 vertex with the smallest id.
Partition min_gtd_exact(const Drawing& d, ContactMode mode);

/// Smallest id among degree-1 vertices; throws NotATree when there is none.
VertexId default_root(const Drawing& d);

struct SplitDecomposition {
    SubdividedDrawing subdivided;
    /// Edge indices refer to subdivided.drawing; origin is filled in.
    Partition partition;
};

SplitDecomposition min_gtd_with_splits(const Drawing& d, ContactMode mode);

/// Vertex i of the drawing becomes vertex i, edge e becomes vertex n + e;
/// tree edge 2e joins u to n + e and 2e + 1 joins n + e to v. Terminals are
/// the conflicting edge pairs.
MulticutInstance build_multicut_instance(const Drawing& d);

/// Components induced by removing `cut` from the instance built above.
Partition partition_from_cut(const Drawing& d, const MulticutInstance& inst, const std::vector<int>& cut);
/// Edges of the instance cut by a partition: 2e or 2e+1 wherever a vertex
/// separates components.
std::vector<int> cut_from_partition(const Drawing& d, const Partition& p);

Partition approx_gtd_proper(const Drawing& d);

struct PartitionReport {
    bool coverage = true;
    bool connectivity = true;
    bool acyclicity = true;
    bool conflict_free = true;
    bool single_shared_point = true;
    bool contacts = true;
    bool degree_bound = true;
    std::vector<std::string> failures;

    bool ok() const { return failures.empty(); }
};

PartitionReport validate_partition(const Drawing& d, const Partition& p);

/// Contact check at one vertex given the component of each incident edge.
bool contacts_allowed(const Drawing& d, int v, const std::vector<int>& component_of_edge, ContactMode mode);

}  // namespace grr
