#include "grr/multicut.hpp"

#include <algorithm>
#include <cstdint>
#include <numeric>

#include "grr/error.hpp"

namespace grr {

namespace {

struct RootedView {
    std::vector<int> parent;
    std::vector<int> parent_edge;
    std::vector<int> depth;
};

RootedView root_at_zero(const MulticutInstance& inst)
{
    const int n = inst.vertex_count;
    std::vector<std::vector<std::pair<int, int>>> adj(n);
    for (int e = 0; e < static_cast<int>(inst.edges.size()); ++e) {
        adj[inst.edges[e].first].emplace_back(inst.edges[e].second, e);
        adj[inst.edges[e].second].emplace_back(inst.edges[e].first, e);
    }
    RootedView rv{std::vector<int>(n, -1), std::vector<int>(n, -1), std::vector<int>(n, -1)};
    if (n == 0) return rv;
    rv.depth[0] = 0;
    std::vector<int> stack{0};
    while (!stack.empty()) {
        const int v = stack.back();
        stack.pop_back();
        for (const auto& [w, e] : adj[v]) {
            if (rv.depth[w] >= 0) continue;
            rv.depth[w] = rv.depth[v] + 1;
            rv.parent[w] = v;
            rv.parent_edge[w] = e;
            stack.push_back(w);
        }
    }
    return rv;
}

int lca(const RootedView& rv, int u, int v)
{
    while (rv.depth[u] > rv.depth[v]) u = rv.parent[u];
    while (rv.depth[v] > rv.depth[u]) v = rv.parent[v];
    while (u != v) {
        u = rv.parent[u];
        v = rv.parent[v];
    }
    return u;
}

std::vector<int> path_edges(const RootedView& rv, int u, int v)
{
    std::vector<int> out;
    const int top = lca(rv, u, v);
    for (int x = u; x != top; x = rv.parent[x]) out.push_back(rv.parent_edge[x]);
    for (int x = v; x != top; x = rv.parent[x]) out.push_back(rv.parent_edge[x]);
    std::sort(out.begin(), out.end());
    return out;
}

Rational weight_of(const MulticutInstance& inst, const std::vector<int>& cut)
{
    Rational w(0);
    for (int e : cut) w += inst.weights[e];
    return w;
}

}  // namespace

void validate_instance(const MulticutInstance& inst)
{
    const int n = inst.vertex_count;
    if (n <= 0 || static_cast<int>(inst.edges.size()) != n - 1) {
        throw GrrError(ErrorCode::NotATree, "multicut instance needs a tree");
    }
    if (inst.weights.size() != inst.edges.size()) {
        throw GrrError(ErrorCode::UnknownEdge, "one weight per edge required");
    }
    for (const auto& [u, v] : inst.edges) {
        if (u < 0 || v < 0 || u >= n || v >= n) throw GrrError(ErrorCode::UnknownVertex, "edge endpoint out of range");
    }
    for (const Rational& w : inst.weights) {
        if (w.sign() <= 0) throw GrrError(ErrorCode::UnknownEdge, "weights must be positive");
    }
    const RootedView rv = root_at_zero(inst);
    if (std::any_of(rv.depth.begin(), rv.depth.end(), [](int dpt) { return dpt < 0; })) {
        throw GrrError(ErrorCode::NotATree, "multicut tree is disconnected");
    }
    for (const auto& [s, t] : inst.terminal_pairs) {
        if (s < 0 || t < 0 || s >= n || t >= n) throw GrrError(ErrorCode::UnknownVertex, "terminal out of range");
        if (s == t) throw GrrError(ErrorCode::InvalidPathFamily, "terminal pair joins a vertex to itself");
    }
}

std::vector<int> tree_path_edges(const MulticutInstance& inst, int u, int v)
{
    return path_edges(root_at_zero(inst), u, v);
}

bool is_multicut(const MulticutInstance& inst, const std::vector<int>& cut)
{
    const RootedView rv = root_at_zero(inst);
    std::vector<char> removed(inst.edges.size(), 0);
    for (int e : cut) removed.at(e) = 1;
    for (const auto& [s, t] : inst.terminal_pairs) {
        const auto path = path_edges(rv, s, t);
        if (std::none_of(path.begin(), path.end(), [&](int e) { return removed[e] != 0; })) return false;
    }
    return true;
}

bool is_minimal_multicut(const MulticutInstance& inst, const std::vector<int>& cut)
{
    if (!is_multicut(inst, cut)) return false;
    for (std::size_t i = 0; i < cut.size(); ++i) {
        std::vector<int> smaller(cut);
        smaller.erase(smaller.begin() + static_cast<std::ptrdiff_t>(i));
        if (is_multicut(inst, smaller)) return false;
    }
    return true;
}

namespace {

struct HittingSearch {
    const MulticutInstance& inst;
    std::vector<std::uint64_t> paths;
    std::uint64_t best_mask = 0;
    Rational best_weight;
    bool found = false;

    void run(std::uint64_t chosen, std::uint64_t banned, const Rational& weight)
    {
        if (found && weight >= best_weight) return;
        const std::uint64_t* target = nullptr;
        int target_len = 0;
        for (const std::uint64_t& p : paths) {
            if (p & chosen) continue;
            const int len = __builtin_popcountll(p & ~banned);
            if (len == 0) return;
            if (target == nullptr || len < target_len) {
                target = &p;
                target_len = len;
            }
        }
        if (target == nullptr) {
            best_mask = chosen;
            best_weight = weight;
            found = true;
            return;
        }
        std::uint64_t options = *target & ~banned;
        std::uint64_t excluded = banned;
        while (options) {
            const int e = __builtin_ctzll(options);
            options &= options - 1;
            run(chosen | (std::uint64_t{1} << e), excluded, weight + inst.weights[e]);
            excluded |= std::uint64_t{1} << e;
        }
    }
};

}  // namespace

Cut solve_exact_small(const MulticutInstance& inst)
{
    validate_instance(inst);
    if (inst.edges.size() > 25) {
        throw GrrError(ErrorCode::BudgetExceeded, "exact multicut limited to 25 edges");
    }
    const RootedView rv = root_at_zero(inst);
    HittingSearch search{inst, {}, 0, Rational(0), false};
    for (const auto& [s, t] : inst.terminal_pairs) {
        std::uint64_t mask = 0;
        for (int e : path_edges(rv, s, t)) mask |= std::uint64_t{1} << e;
        search.paths.push_back(mask);
    }
    search.run(0, 0, Rational(0));
    Cut cut;
    for (int e = 0; e < static_cast<int>(inst.edges.size()); ++e) {
        if (search.best_mask & (std::uint64_t{1} << e)) cut.edges.push_back(e);
    }
    cut.total_weight = weight_of(inst, cut.edges);
    return cut;
}

Cut approx_gvy(const MulticutInstance& inst)
{
    validate_instance(inst);
    const RootedView rv = root_at_zero(inst);
    const int pair_count = static_cast<int>(inst.terminal_pairs.size());

    std::vector<int> order(pair_count);
    std::vector<int> top(pair_count);
    for (int i = 0; i < pair_count; ++i) {
        order[i] = i;
        top[i] = lca(rv, inst.terminal_pairs[i].first, inst.terminal_pairs[i].second);
    }
    std::stable_sort(order.begin(), order.end(), [&](int a, int b) {
        if (rv.depth[top[a]] != rv.depth[top[b]]) return rv.depth[top[a]] > rv.depth[top[b]];
        return top[a] < top[b];
    });

    std::vector<Rational> load(inst.edges.size(), Rational(0));
    std::vector<char> in_cut(inst.edges.size(), 0);
    std::vector<int> added;
    for (int i : order) {
        const auto path = path_edges(rv, inst.terminal_pairs[i].first, inst.terminal_pairs[i].second);
        if (std::any_of(path.begin(), path.end(), [&](int e) { return in_cut[e] != 0; })) continue;
        Rational raise = inst.weights[path.front()] - load[path.front()];
        for (int e : path) raise = min(raise, inst.weights[e] - load[e]);
        for (int e : path) {
            load[e] += raise;
            if (load[e] == inst.weights[e]) {
                in_cut[e] = 1;
                added.push_back(e);
            }
        }
    }

    std::vector<int> current(added);
    for (auto it = added.rbegin(); it != added.rend(); ++it) {
        std::vector<int> without;
        for (int e : current) {
            if (e != *it) without.push_back(e);
        }
        if (is_multicut(inst, without)) current = std::move(without);
    }
    std::sort(current.begin(), current.end());
    return {current, weight_of(inst, current)};
}

}  // namespace grr
