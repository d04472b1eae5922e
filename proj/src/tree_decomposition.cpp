#include "grr/tree_decomposition.hpp"

#include <algorithm>
#include <cstdint>
#include <map>
#include <numeric>
#include <set>
#include <stdexcept>
#include <unordered_map>

#include "grr/analysis.hpp"
#include "grr/error.hpp"

namespace grr {

const char* to_string(ContactMode mode)
{
    switch (mode) {
    case ContactMode::Proper: return "proper";
    case ContactMode::Noncrossing: return "noncrossing";
    case ContactMode::Any: return "any";
    }
    return "proper";
}

ContactMode parse_contact_mode(const std::string& text)
{
    if (text == "proper") return ContactMode::Proper;
    if (text == "noncrossing") return ContactMode::Noncrossing;
    if (text == "any") return ContactMode::Any;
    throw std::invalid_argument("unknown contact mode: " + text);
}

void normalize(Partition& p)
{
    for (auto& c : p.components) std::sort(c.begin(), c.end());
    std::sort(p.components.begin(), p.components.end(),
              [](const std::vector<int>& a, const std::vector<int>& b) { return a.front() < b.front(); });
}

namespace {

using Bits = std::vector<std::uint64_t>;

bool intersects(const Bits& a, const Bits& b)
{
    for (std::size_t i = 0; i < a.size(); ++i) {
        if (a[i] & b[i]) return true;
    }
    return false;
}

std::vector<Bits> conflict_rows(const Drawing& d)
{
    const int m = d.edge_count();
    const std::size_t words = (static_cast<std::size_t>(m) + 63) / 64;
    std::vector<Bits> rows(m, Bits(words, 0));
    for (int e = 0; e < m; ++e) {
        for (int f = e + 1; f < m; ++f) {
            if (edges_conflict_either(d, e, f)) {
                rows[e][f / 64] |= std::uint64_t{1} << (f % 64);
                rows[f][e / 64] |= std::uint64_t{1} << (e % 64);
            }
        }
    }
    return rows;
}

}  // namespace

PathIcTable precompute_path_ic(const RootedTree& rt)
{
    const Drawing& d = *rt.drawing;
    const int n = d.vertex_count();
    const std::vector<Bits> rows = conflict_rows(d);
    const std::size_t words = rows.empty() ? 1 : rows.front().size();
    std::vector<char> bits(static_cast<std::size_t>(n) * n, 0);

    for (int s = 0; s < n; ++s) {
        std::vector<Bits> path(n);
        std::vector<char> seen(n, 0);
        std::vector<char> ok(n, 0);
        std::vector<int> queue{s};
        path[s] = Bits(words, 0);
        seen[s] = 1;
        ok[s] = 1;
        for (std::size_t head = 0; head < queue.size(); ++head) {
            const int v = queue[head];
            for (int e : d.incident(v)) {
                const int w = d.other_end(e, v);
                if (seen[w]) continue;
                seen[w] = 1;
                path[w] = path[v];
                ok[w] = ok[v] && !intersects(rows[e], path[v]);
                path[w][e / 64] |= std::uint64_t{1} << (e % 64);
                queue.push_back(w);
            }
        }
        for (int t = 0; t < n; ++t) bits[static_cast<std::size_t>(s) * n + t] = ok[t];
    }
    return PathIcTable(n, std::move(bits));
}

namespace {

constexpr int kInf = DpTables::infinity;

struct Back {
    int x = -1;
    int y = -1;
    int degree = 0;
};

enum class FrameKind { Leaf, Alone, AloneWithComponent, Extend };

struct Frame {
    int a;
    int b;
    int value;
    FrameKind kind;
    Back back;
};

struct SigmaEntry {
    int a;
    int b;
    int i;
    int l;
    std::array<int, 5> val;
    std::array<Back, 5> back;
    int value() const { return *std::min_element(val.begin() + 1, val.end()); }
};

struct VertexTables {
    std::vector<Frame> frames;
    std::unordered_map<std::int64_t, int> frame_at;
    int best = -1;  // index into frames
    std::vector<SigmaEntry> sigma;
    std::unordered_map<std::int64_t, int> sigma_at;
    int d = 0;
    std::vector<int> m_val;
    std::vector<Back> m_back;
    std::vector<int> best_sigma;
    std::vector<Back> best_sigma_back;
};

class GtdSolver {
public:
    GtdSolver(const RootedTree& rt, ContactMode mode)
        : rt_(rt), d_(*rt.drawing), mode_(mode), ic_(precompute_path_ic(rt)), n_(d_.vertex_count()),
          branch_(static_cast<std::size_t>(n_) * n_, -1), t_(n_)
    {
        for (int u = 0; u < n_; ++u) {
            const auto& ch = rt_.children[u];
            for (int c = 0; c < static_cast<int>(ch.size()); ++c) {
                std::vector<int> stack{ch[c]};
                while (!stack.empty()) {
                    const int w = stack.back();
                    stack.pop_back();
                    branch_[idx(u, w)] = c;
                    for (int z : rt_.children[w]) stack.push_back(z);
                }
            }
        }
    }

    Partition solve(DpTables* tables)
    {
        for (int u : rt_.postorder) {
            if (u != rt_.root) fill(u);
        }
        const int v = rt_.children[rt_.root].front();
        Partition p;
        p.mode = mode_;
        std::vector<int> comp;
        const Frame& f = t_[v].frames[t_[v].best];
        rebuild_tau(v, f.a, f.b, comp, p);
        p.components.push_back(std::move(comp));
        normalize(p);
        if (tables != nullptr) export_tables(*tables);
        return p;
    }

private:
    std::size_t idx(int u, int w) const { return static_cast<std::size_t>(u) * n_ + w; }
    std::int64_t key(int a, int b) const { return static_cast<std::int64_t>(a) * n_ + b; }
    bool id_less(int a1, int b1, int a2, int b2) const
    {
        if (d_.id(a1) != d_.id(a2)) return d_.id(a1) < d_.id(a2);
        return d_.id(b1) < d_.id(b2);
    }
    bool ic4(int a, int x, int y, int b) const { return ic_(a, y) && ic_(a, b) && ic_(x, y) && ic_(x, b); }

    int M(int u, int i, int l) const
    {
        if (i > l) return 0;
        return t_[u].m_val[static_cast<std::size_t>(i) * t_[u].d + l];
    }

    int child_best(int c) const { return t_[c].frames[t_[c].best].value; }

    void relax(VertexTables& vt, int a, int b, int i, int l, int degree, int value, Back back)
    {
        const std::int64_t k = key(a, b);
        auto it = vt.sigma_at.find(k);
        if (it == vt.sigma_at.end()) {
            SigmaEntry e{a, b, i, l, {}, {}};
            e.val.fill(kInf);
            it = vt.sigma_at.emplace(k, static_cast<int>(vt.sigma.size())).first;
            vt.sigma.push_back(e);
        }
        SigmaEntry& e = vt.sigma[it->second];
        if (value < e.val[degree]) {
            e.val[degree] = value;
            e.back[degree] = back;
        }
    }

    void fill(int u)
    {
        VertexTables& vt = t_[u];
        const auto& ch = rt_.children[u];
        const int d = static_cast<int>(ch.size());
        vt.d = d;
        if (d == 0) {
            vt.frames.push_back({u, u, 1, FrameKind::Leaf, {}});
            vt.frame_at[key(u, u)] = 0;
            vt.best = 0;
            return;
        }
        const std::size_t dd = static_cast<std::size_t>(d) * d;
        vt.m_val.assign(dd, kInf);
        vt.m_back.assign(dd, {});
        vt.best_sigma.assign(dd, kInf);
        vt.best_sigma_back.assign(dd, {});
        std::vector<std::vector<int>> by_pair(dd);

        for (int s = 0; s < d; ++s) {
            for (int i = 0; i + s < d; ++i) {
                const int l = i + s;
                const std::size_t pl = static_cast<std::size_t>(i) * d + l;
                const std::size_t before = vt.sigma.size();
                if (s == 0) {
                    for (const Frame& f : t_[ch[i]].frames) relax(vt, f.a, f.b, i, i, 1, f.value, {});
                } else {
                    const auto& last = t_[ch[l]].frames;
                    for (int degree = 2; degree <= 4; ++degree) {
                        for (int j = i; j < l; ++j) {
                            const int mid = M(u, j + 1, l - 1);
                            const std::vector<int> prefix = by_pair[static_cast<std::size_t>(i) * d + j];
                            for (int ei : prefix) {
                                const int a = vt.sigma[ei].a;
                                const int x = vt.sigma[ei].b;
                                const int vp = vt.sigma[ei].val[degree - 1];
                                if (vp >= kInf) continue;
                                for (const Frame& f : last) {
                                    if (!ic4(a, x, f.a, f.b)) continue;
                                    relax(vt, a, f.b, i, l, degree, vp + mid + f.value - 1, {x, f.a, degree - 1});
                                }
                            }
                        }
                    }
                }
                for (std::size_t e = before; e < vt.sigma.size(); ++e) by_pair[pl].push_back(static_cast<int>(e));
                std::sort(by_pair[pl].begin(), by_pair[pl].end(), [&](int p, int q) {
                    return id_less(vt.sigma[p].a, vt.sigma[p].b, vt.sigma[q].a, vt.sigma[q].b);
                });
                for (int e : by_pair[pl]) {
                    const SigmaEntry& se = vt.sigma[e];
                    for (int degree = 1; degree <= 4; ++degree) {
                        if (se.val[degree] < vt.best_sigma[pl]) {
                            vt.best_sigma[pl] = se.val[degree];
                            vt.best_sigma_back[pl] = {se.a, se.b, degree};
                        }
                    }
                }

                if (mode_ == ContactMode::Proper) {
                    int sum = 0;
                    for (int m = i; m <= l; ++m) sum += child_best(ch[m]);
                    vt.m_val[pl] = sum;
                } else {
                    for (int j = i; j <= l; ++j) {
                        for (int k = j; k <= l; ++k) {
                            const std::size_t jk = static_cast<std::size_t>(j) * d + k;
                            if (vt.best_sigma[jk] >= kInf) continue;
                            const int v = M(u, i, j - 1) + vt.best_sigma[jk] + M(u, k + 1, l);
                            if (v < vt.m_val[pl]) {
                                vt.m_val[pl] = v;
                                vt.m_back[pl] = vt.best_sigma_back[jk];
                            }
                        }
                    }
                }
            }
        }

        std::vector<Frame> frames;
        if (mode_ == ContactMode::Noncrossing) {
            frames.push_back({u, u, 1 + M(u, 0, d - 1), FrameKind::Alone, {}});
        } else {
            Frame alone{u, u, kInf, FrameKind::AloneWithComponent, {}};
            for (int j = 0; j < d; ++j) {
                for (int k = j; k < d; ++k) {
                    const std::size_t jk = static_cast<std::size_t>(j) * d + k;
                    if (vt.best_sigma[jk] >= kInf) continue;
                    const int v = 1 + M(u, 0, j - 1) + vt.best_sigma[jk] + M(u, k + 1, d - 1);
                    if (v < alone.value) {
                        alone.value = v;
                        alone.back = vt.best_sigma_back[jk];
                    }
                }
            }
            frames.push_back(alone);
        }

        const int p = rt_.parent[u];
        for (const SigmaEntry& se : vt.sigma) {
            if (!ic_(p, se.a) || !ic_(p, se.b)) continue;
            Frame f{se.a, se.b, kInf, FrameKind::Extend, {}};
            for (int degree = 1; degree <= 3; ++degree) {
                if (se.val[degree] >= kInf) continue;
                const int v = M(u, 0, se.i - 1) + se.val[degree] + M(u, se.l + 1, d - 1);
                if (v < f.value) {
                    f.value = v;
                    f.back = {se.a, se.b, degree};
                }
            }
            if (f.value < kInf) frames.push_back(f);
        }
        std::sort(frames.begin(), frames.end(),
                  [&](const Frame& x, const Frame& y) { return id_less(x.a, x.b, y.a, y.b); });
        vt.frames = std::move(frames);
        vt.best = 0;
        for (int k = 0; k < static_cast<int>(vt.frames.size()); ++k) {
            vt.frame_at[key(vt.frames[k].a, vt.frames[k].b)] = k;
            if (vt.frames[k].value < vt.frames[vt.best].value) vt.best = k;
        }
    }

    void rebuild_tau(int u, int a, int b, std::vector<int>& comp, Partition& out) const
    {
        const VertexTables& vt = t_[u];
        const Frame& f = vt.frames[vt.frame_at.at(key(a, b))];
        comp.push_back(rt_.parent_edge[u]);
        switch (f.kind) {
        case FrameKind::Leaf: return;
        case FrameKind::Alone: rebuild_m(u, 0, vt.d - 1, out); return;
        case FrameKind::AloneWithComponent: {
            const int j = branch_[idx(u, f.back.x)];
            const int k = branch_[idx(u, f.back.y)];
            rebuild_m(u, 0, j - 1, out);
            std::vector<int> inner;
            rebuild_sigma(u, f.back.x, f.back.y, f.back.degree, inner, out);
            out.components.push_back(std::move(inner));
            rebuild_m(u, k + 1, vt.d - 1, out);
            return;
        }
        case FrameKind::Extend: {
            const int j = branch_[idx(u, a)];
            const int k = branch_[idx(u, b)];
            rebuild_m(u, 0, j - 1, out);
            rebuild_sigma(u, a, b, f.back.degree, comp, out);
            rebuild_m(u, k + 1, vt.d - 1, out);
            return;
        }
        }
    }

    void rebuild_sigma(int u, int a, int b, int degree, std::vector<int>& comp, Partition& out) const
    {
        const VertexTables& vt = t_[u];
        const auto& ch = rt_.children[u];
        if (degree == 1) {
            rebuild_tau(ch[branch_[idx(u, a)]], a, b, comp, out);
            return;
        }
        const SigmaEntry& se = vt.sigma[vt.sigma_at.at(key(a, b))];
        const Back& bk = se.back[degree];
        rebuild_sigma(u, a, bk.x, bk.degree, comp, out);
        rebuild_m(u, branch_[idx(u, bk.x)] + 1, se.l - 1, out);
        rebuild_tau(ch[se.l], bk.y, b, comp, out);
    }

    void rebuild_m(int u, int i, int l, Partition& out) const
    {
        if (i > l) return;
        const VertexTables& vt = t_[u];
        const auto& ch = rt_.children[u];
        if (mode_ == ContactMode::Proper) {
            for (int m = i; m <= l; ++m) {
                const Frame& f = t_[ch[m]].frames[t_[ch[m]].best];
                std::vector<int> comp;
                rebuild_tau(ch[m], f.a, f.b, comp, out);
                out.components.push_back(std::move(comp));
            }
            return;
        }
        const Back& bk = vt.m_back[static_cast<std::size_t>(i) * vt.d + l];
        const int j = branch_[idx(u, bk.x)];
        const int k = branch_[idx(u, bk.y)];
        rebuild_m(u, i, j - 1, out);
        std::vector<int> comp;
        rebuild_sigma(u, bk.x, bk.y, bk.degree, comp, out);
        out.components.push_back(std::move(comp));
        rebuild_m(u, k + 1, l, out);
    }

    void export_tables(DpTables& tables) const
    {
        tables.tau.assign(n_, {});
        tables.sigma.assign(n_, {});
        for (int u = 0; u < n_; ++u) {
            for (const Frame& f : t_[u].frames) tables.tau[u].push_back({f.a, f.b, f.value});
            for (const SigmaEntry& se : t_[u].sigma) tables.sigma[u].push_back({se.a, se.b, se.val, se.value()});
        }
    }

    const RootedTree& rt_;
    const Drawing& d_;
    ContactMode mode_;
    PathIcTable ic_;
    int n_;
    std::vector<int> branch_;
    std::vector<VertexTables> t_;
};

}  // namespace

Partition min_gtd_exact(const RootedTree& rt, ContactMode mode, DpTables* tables)
{
    if (mode == ContactMode::Any) throw std::invalid_argument("the exact program supports proper and noncrossing");
    GtdSolver solver(rt, mode);
    return solver.solve(tables);
}

VertexId default_root(const Drawing& d)
{
    std::optional<VertexId> best;
    for (int v = 0; v < d.vertex_count(); ++v) {
        if (d.degree(v) == 1 && (!best || d.id(v) < *best)) best = d.id(v);
    }
    if (!best) throw GrrError(ErrorCode::NotATree, "no degree-1 vertex");
    return *best;
}

Partition min_gtd_exact(const Drawing& d, ContactMode mode)
{
    const RootedTree rt = root_tree(d, default_root(d));
    return min_gtd_exact(rt, mode);
}

SplitDecomposition min_gtd_with_splits(const Drawing& d, ContactMode mode)
{
    SplitDecomposition out{subdivide(d), {}};
    const Drawing& sd = out.subdivided.drawing;
    const RootedTree rt = root_tree(sd, default_root(sd));
    out.partition = min_gtd_exact(rt, mode);
    out.partition.origin = out.subdivided.origin;
    return out;
}

MulticutInstance build_multicut_instance(const Drawing& d)
{
    const int n = d.vertex_count();
    const int m = d.edge_count();
    MulticutInstance inst;
    inst.vertex_count = n + m;
    for (int e = 0; e < m; ++e) {
        inst.edges.emplace_back(d.edge(e).u, n + e);
        inst.edges.emplace_back(n + e, d.edge(e).v);
    }
    inst.weights.assign(inst.edges.size(), Rational(1));
    for (int e = 0; e < m; ++e) {
        for (int f = e + 1; f < m; ++f) {
            if (edges_conflict_either(d, e, f)) inst.terminal_pairs.emplace_back(n + e, n + f);
        }
    }
    return inst;
}

Partition partition_from_cut(const Drawing& d, const MulticutInstance& inst, const std::vector<int>& cut)
{
    std::vector<int> parent(inst.vertex_count);
    std::iota(parent.begin(), parent.end(), 0);
    auto find = [&](int x) {
        while (parent[x] != x) x = parent[x] = parent[parent[x]];
        return x;
    };
    const std::set<int> removed(cut.begin(), cut.end());
    for (int e = 0; e < static_cast<int>(inst.edges.size()); ++e) {
        if (removed.count(e)) continue;
        parent[find(inst.edges[e].first)] = find(inst.edges[e].second);
    }
    std::map<int, std::vector<int>> groups;
    const int n = d.vertex_count();
    for (int e = 0; e < d.edge_count(); ++e) groups[find(n + e)].push_back(e);
    Partition p;
    p.mode = ContactMode::Proper;
    for (auto& [root, edges] : groups) p.components.push_back(std::move(edges));
    normalize(p);
    return p;
}

std::vector<int> cut_from_partition(const Drawing& d, const Partition& p)
{
    std::vector<int> comp_of(d.edge_count(), -1);
    for (int c = 0; c < p.size(); ++c) {
        for (int e : p.components[c]) comp_of[e] = c;
    }
    std::vector<int> cut;
    for (int v = 0; v < d.vertex_count(); ++v) {
        std::map<int, int> count;
        for (int e : d.incident(v)) ++count[comp_of[e]];
        int keep = -1;
        for (const auto& [c, k] : count) {
            if (k >= 2 && keep < 0) keep = c;
        }
        if (keep < 0 && !count.empty()) keep = count.begin()->first;
        for (int e : d.incident(v)) {
            if (comp_of[e] == keep) continue;
            cut.push_back(d.edge(e).u == v ? 2 * e : 2 * e + 1);
        }
    }
    std::sort(cut.begin(), cut.end());
    return cut;
}

Partition approx_gtd_proper(const Drawing& d)
{
    const MulticutInstance inst = build_multicut_instance(d);
    const Cut cut = approx_gvy(inst);
    return partition_from_cut(d, inst, cut.edges);
}

bool contacts_allowed(const Drawing& d, int v, const std::vector<int>& component_of_edge, ContactMode mode)
{
    if (mode == ContactMode::Any) return true;
    const std::vector<int> order = clockwise_order_at(d, v);
    std::map<int, int> count;
    for (int e : order) ++count[component_of_edge[e]];
    if (mode == ContactMode::Proper) {
        int wide = 0;
        for (const auto& [c, k] : count) wide += k >= 2 ? 1 : 0;
        return wide <= 1;
    }
    for (auto a = count.begin(); a != count.end(); ++a) {
        for (auto b = std::next(a); b != count.end(); ++b) {
            std::vector<int> labels;
            for (int e : order) {
                const int c = component_of_edge[e];
                if (c == a->first || c == b->first) labels.push_back(c);
            }
            int changes = 0;
            for (std::size_t i = 0; i < labels.size(); ++i) {
                if (labels[i] != labels[(i + 1) % labels.size()]) ++changes;
            }
            if (changes > 2) return false;
        }
    }
    return true;
}

PartitionReport validate_partition(const Drawing& d, const Partition& p)
{
    PartitionReport r;
    const int m = d.edge_count();
    std::vector<int> comp_of(m, -1);
    for (int c = 0; c < p.size(); ++c) {
        if (p.components[c].empty()) r.coverage = false;
        for (int e : p.components[c]) {
            if (e < 0 || e >= m || comp_of[e] >= 0) {
                r.coverage = false;
                continue;
            }
            comp_of[e] = c;
        }
    }
    if (std::find(comp_of.begin(), comp_of.end(), -1) != comp_of.end()) r.coverage = false;
    if (!r.coverage) {
        r.failures.push_back("coverage");
        return r;
    }

    std::vector<std::set<int>> vertices(p.size());
    for (int c = 0; c < p.size(); ++c) {
        const auto& edges = p.components[c];
        std::map<int, std::vector<int>> adj;
        for (int e : edges) {
            adj[d.edge(e).u].push_back(d.edge(e).v);
            adj[d.edge(e).v].push_back(d.edge(e).u);
        }
        for (const auto& [v, nb] : adj) {
            vertices[c].insert(v);
            if (nb.size() > 4) r.degree_bound = false;
        }
        std::set<int> seen{adj.begin()->first};
        std::vector<int> stack{adj.begin()->first};
        while (!stack.empty()) {
            const int v = stack.back();
            stack.pop_back();
            for (int w : adj[v]) {
                if (seen.insert(w).second) stack.push_back(w);
            }
        }
        if (seen.size() != adj.size()) r.connectivity = false;
        if (adj.size() != edges.size() + 1) r.acyclicity = false;
        for (std::size_t i = 0; i < edges.size(); ++i) {
            for (std::size_t j = i + 1; j < edges.size(); ++j) {
                if (edges_conflict_either(d, edges[i], edges[j])) r.conflict_free = false;
            }
        }
    }
    for (int a = 0; a < p.size(); ++a) {
        for (int b = a + 1; b < p.size(); ++b) {
            int shared = 0;
            for (int v : vertices[a]) shared += vertices[b].count(v) ? 1 : 0;
            if (shared > 1) r.single_shared_point = false;
        }
    }
    for (int v = 0; v < d.vertex_count(); ++v) {
        if (!contacts_allowed(d, v, comp_of, p.mode)) r.contacts = false;
    }
    if (!r.connectivity) r.failures.push_back("connectivity");
    if (!r.acyclicity) r.failures.push_back("acyclicity");
    if (!r.conflict_free) r.failures.push_back("conflict-freeness");
    if (!r.single_shared_point) r.failures.push_back("single shared point");
    if (!r.contacts) r.failures.push_back(std::string("contacts (") + to_string(p.mode) + ")");
    if (!r.degree_bound) r.failures.push_back("degree bound");
    return r;
}

}  // namespace grr
