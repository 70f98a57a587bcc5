#include <algorithm>
#include <numeric>
#include <queue>
#include <stdexcept>

#include "rightcay/topology.hpp"

// Exact genus by branch and bound over rotation systems, built one edge at
// a time. Inserting an edge whose two corners lie on distinct faces of the
// same component adds a handle; otherwise the genus is unchanged. The
// partial genus is therefore monotone along any completion and prunes
// against the target. One reflection is quotiented: while every vertex
// still has at most two darts the partial embedding equals its mirror
// image, so the corner choice at the first vertex reaching three darts is
// fixed.

namespace rightcay::topo {

namespace {

int trace_genus(int n, const std::vector<std::pair<int, int>>& edges,
                const std::vector<std::vector<int>>& order, int base) {
    const int m = static_cast<int>(edges.size());
    std::vector<int> next(static_cast<size_t>(2 * m), -1);
    auto dart = [&edges](int u, int v) {
        auto it = std::lower_bound(edges.begin(), edges.end(),
                                   std::pair<int, int>(std::min(u, v), std::max(u, v)));
        return 2 * static_cast<int>(it - edges.begin()) + (u < v ? 0 : 1);
    };
    for (int v = 0; v < n; ++v) {
        const auto& cyc = order[static_cast<size_t>(v)];
        for (size_t i = 0; i < cyc.size(); ++i)
            next[static_cast<size_t>(dart(v, cyc[i]))] = dart(v, cyc[(i + 1) % cyc.size()]);
    }
    std::vector<char> seen(static_cast<size_t>(2 * m), 0);
    int faces = 0;
    for (int d0 = 0; d0 < 2 * m; ++d0) {
        if (seen[static_cast<size_t>(d0)]) continue;
        ++faces;
        int d = d0;
        do {
            seen[static_cast<size_t>(d)] = 1;
            d = next[static_cast<size_t>(d ^ 1)];
        } while (d != d0);
    }
    return (base - faces) / 2;
}

// constant so that genus = (base - faces)/2 over the non-isolated part
int genus_base(const SimpleGraph& g) {
    auto comp = g.component_ids();
    const int ncomp = comp.empty() ? 0 : 1 + *std::max_element(comp.begin(), comp.end());
    std::vector<char> comp_has_edge(static_cast<size_t>(ncomp), 0);
    for (auto [u, v] : g.edges()) comp_has_edge[static_cast<size_t>(comp[static_cast<size_t>(u)])] = 1;
    const int c_eff = static_cast<int>(std::count(comp_has_edge.begin(), comp_has_edge.end(), 1));
    int n_eff = 0;
    for (int v = 0; v < g.vertex_count(); ++v)
        if (g.degree(v) > 0) ++n_eff;
    return 2 * c_eff - n_eff + g.edge_count();
}

// shared edge-by-edge insertion state for the exact search and the greedy
// constructive heuristic
struct Inserter {
    const SimpleGraph& g;
    std::vector<std::pair<int, int>> edges;
    std::vector<int> order;  // edge indices; BFS-ish so the prefix stays connected
    int n, m;

    struct State {
        std::vector<int> rot_next;
        std::vector<int> face_id;
        std::vector<int> some_dart;
        std::vector<int> comp;
        std::vector<int> dart_cnt;
        int next_face = 0;
        int genus = 0;
        bool mirror_virgin = true;
    };

    explicit Inserter(const SimpleGraph& graph)
        : g(graph), edges(graph.edges()), n(graph.vertex_count()), m(graph.edge_count()) {
        std::vector<int> pos(static_cast<size_t>(n), -1);
        int next_pos = 0;
        std::vector<int> by_degree(static_cast<size_t>(n));
        std::iota(by_degree.begin(), by_degree.end(), 0);
        std::sort(by_degree.begin(), by_degree.end(),
                  [&](int a, int b) { return g.degree(a) > g.degree(b); });
        for (int s : by_degree) {
            if (pos[static_cast<size_t>(s)] != -1) continue;
            std::queue<int> q;
            q.push(s);
            pos[static_cast<size_t>(s)] = next_pos++;
            while (!q.empty()) {
                int u = q.front();
                q.pop();
                for (int v : g.neighbors(u))
                    if (pos[static_cast<size_t>(v)] == -1) {
                        pos[static_cast<size_t>(v)] = next_pos++;
                        q.push(v);
                    }
            }
        }
        order.resize(static_cast<size_t>(m));
        std::iota(order.begin(), order.end(), 0);
        auto key = [&](int e) {
            int a = pos[static_cast<size_t>(edges[static_cast<size_t>(e)].first)];
            int b = pos[static_cast<size_t>(edges[static_cast<size_t>(e)].second)];
            return std::pair<int, int>(std::max(a, b), std::min(a, b));
        };
        std::sort(order.begin(), order.end(), [&](int x, int y) { return key(x) < key(y); });
    }

    State initial_state() const {
        State st;
        st.rot_next.assign(static_cast<size_t>(2 * m), -1);
        st.face_id.assign(static_cast<size_t>(2 * m), -1);
        st.some_dart.assign(static_cast<size_t>(n), -1);
        st.comp.resize(static_cast<size_t>(n));
        std::iota(st.comp.begin(), st.comp.end(), 0);
        st.dart_cnt.assign(static_cast<size_t>(n), 0);
        return st;
    }

    int find_comp(State& st, int v) const {
        while (st.comp[static_cast<size_t>(v)] != v) {
            st.comp[static_cast<size_t>(v)] = st.comp[static_cast<size_t>(st.comp[static_cast<size_t>(v)])];
            v = st.comp[static_cast<size_t>(v)];
        }
        return v;
    }

    std::vector<int> darts_at(const State& st, int u) const {
        std::vector<int> out;
        int d0 = st.some_dart[static_cast<size_t>(u)];
        if (d0 == -1) return out;
        int d = d0;
        do {
            out.push_back(d);
            d = st.rot_next[static_cast<size_t>(d)];
        } while (d != d0);
        return out;
    }

    int corner_bump(State& st, int cu, int cv, int u, int v) const {
        if (cu == -1 || cv == -1) return 0;
        if (find_comp(st, u) != find_comp(st, v)) return 0;
        return st.face_id[static_cast<size_t>(cu ^ 1)] != st.face_id[static_cast<size_t>(cv ^ 1)] ? 1 : 0;
    }

    void apply(State& st, int e, int cu, int cv) const {
        auto [u, v] = edges[static_cast<size_t>(e)];
        const int a = 2 * e, b = 2 * e + 1;
        st.genus += corner_bump(st, cu, cv, u, v);
        const int ru = find_comp(st, u), rv = find_comp(st, v);
        if (ru != rv) st.comp[static_cast<size_t>(ru)] = rv;
        insert_dart(st, u, a, cu);
        insert_dart(st, v, b, cv);
        const int f1 = st.next_face++;
        int d = a;
        do {
            st.face_id[static_cast<size_t>(d)] = f1;
            d = st.rot_next[static_cast<size_t>(d ^ 1)];
        } while (d != a);
        if (st.face_id[static_cast<size_t>(b)] != f1) {
            const int f2 = st.next_face++;
            d = b;
            do {
                st.face_id[static_cast<size_t>(d)] = f2;
                d = st.rot_next[static_cast<size_t>(d ^ 1)];
            } while (d != b);
        }
        st.mirror_virgin = st.mirror_virgin && st.dart_cnt[static_cast<size_t>(u)] < 3 &&
                           st.dart_cnt[static_cast<size_t>(v)] < 3;
    }

    void insert_dart(State& st, int u, int nd, int after) const {
        if (after == -1) {
            st.rot_next[static_cast<size_t>(nd)] = nd;
            st.some_dart[static_cast<size_t>(u)] = nd;
        } else {
            st.rot_next[static_cast<size_t>(nd)] = st.rot_next[static_cast<size_t>(after)];
            st.rot_next[static_cast<size_t>(after)] = nd;
        }
        ++st.dart_cnt[static_cast<size_t>(u)];
    }

    std::vector<std::vector<int>> rotation(const State& st) const {
        std::vector<std::vector<int>> rot(static_cast<size_t>(n));
        for (int v = 0; v < n; ++v)
            for (int d : darts_at(st, v)) {
                auto [x, y] = edges[static_cast<size_t>(d >> 1)];
                rot[static_cast<size_t>(v)].push_back((d & 1) ? x : y);
            }
        return rot;
    }
};

struct EmbedSearch {
    Inserter ins;
    int target;
    long long budget;
    long long expansions = 0;
    bool out_of_budget = false;
    std::vector<std::vector<int>> found_rotation;

    EmbedSearch(const SimpleGraph& graph, int target_genus, long long node_budget)
        : ins(graph), target(target_genus), budget(node_budget) {}

    bool dfs(size_t level, Inserter::State& st) {
        if (level == ins.order.size()) {
            found_rotation = ins.rotation(st);
            return true;
        }
        const int e = ins.order[level];
        auto [u, v] = ins.edges[static_cast<size_t>(e)];
        std::vector<int> cu_list = ins.darts_at(st, u);
        std::vector<int> cv_list = ins.darts_at(st, v);
        if (st.mirror_virgin && cu_list.size() == 2) cu_list.pop_back();
        else if (st.mirror_virgin && cv_list.size() == 2) cv_list.pop_back();
        if (cu_list.empty()) cu_list.push_back(-1);
        if (cv_list.empty()) cv_list.push_back(-1);

        struct Child { int cu, cv, bump; };
        std::vector<Child> children;
        children.reserve(cu_list.size() * cv_list.size());
        for (int cu : cu_list)
            for (int cv : cv_list) {
                int bump = ins.corner_bump(st, cu, cv, u, v);
                if (st.genus + bump > target) continue;
                children.push_back({cu, cv, bump});
            }
        std::stable_sort(children.begin(), children.end(),
                         [](const Child& a, const Child& b) { return a.bump < b.bump; });
        for (const Child& ch : children) {
            if (++expansions > budget) {
                out_of_budget = true;
                return false;
            }
            Inserter::State child = st;
            ins.apply(child, e, ch.cu, ch.cv);
            if (dfs(level + 1, child)) return true;
            if (out_of_budget) return false;
        }
        return false;
    }

    bool run() {
        Inserter::State st = ins.initial_state();
        return dfs(0, st);
    }
};

// one randomized greedy insertion pass: minimal genus bump, random ties
std::vector<std::vector<int>> greedy_rotation(const Inserter& ins, std::mt19937& rng, int& genus_out) {
    Inserter::State st = ins.initial_state();
    for (int e : ins.order) {
        auto [u, v] = ins.edges[static_cast<size_t>(e)];
        std::vector<int> cus = ins.darts_at(st, u);
        std::vector<int> cvs = ins.darts_at(st, v);
        if (cus.empty()) cus.push_back(-1);
        if (cvs.empty()) cvs.push_back(-1);
        std::vector<std::pair<int, int>> best;
        int best_bump = 2;
        for (int cu : cus)
            for (int cv : cvs) {
                int bump = ins.corner_bump(st, cu, cv, u, v);
                if (bump < best_bump) {
                    best_bump = bump;
                    best.clear();
                }
                if (bump == best_bump) best.emplace_back(cu, cv);
            }
        auto [cu, cv] = best[rng() % best.size()];
        ins.apply(st, e, cu, cv);
    }
    genus_out = st.genus;
    return ins.rotation(st);
}

}  // namespace

GenusBounds exact_genus(const SimpleGraph& g, long long budget) {
    auto comp = g.component_ids();
    const int ncomp = comp.empty() ? 0 : 1 + *std::max_element(comp.begin(), comp.end());
    if (ncomp > 1) {
        // genus is additive over components
        GenusBounds total;
        total.lower = 0;
        total.lower_reason = BoundReason::PlanarTest;
        int upper_sum = 0;
        bool have_upper = true;
        RotationSystem rot;
        rot.order.resize(static_cast<size_t>(g.vertex_count()));
        for (int c = 0; c < ncomp; ++c) {
            std::vector<int> verts;
            for (int v = 0; v < g.vertex_count(); ++v)
                if (comp[static_cast<size_t>(v)] == c) verts.push_back(v);
            auto [sub, old_of] = g.induced(verts);
            GenusBounds part = exact_genus(sub, budget);
            total.lower += part.lower;
            if (part.lower_reason == BoundReason::EulerGirth ||
                part.lower_reason == BoundReason::ExhaustedSearch)
                total.lower_reason = part.lower_reason;
            if (part.upper && have_upper) {
                upper_sum += *part.upper;
                for (int lv = 0; lv < sub.vertex_count(); ++lv)
                    for (int w : part.certificate->rotation.order[static_cast<size_t>(lv)])
                        rot.order[static_cast<size_t>(old_of[static_cast<size_t>(lv)])]
                            .push_back(old_of[static_cast<size_t>(w)]);
            } else {
                have_upper = false;
            }
        }
        if (have_upper) {
            total.upper = upper_sum;
            total.certificate = face_trace(g, rot);
        }
        return total;
    }

    PlanarityResult pl = is_planar(g);
    if (pl.planar) {
        GenusBounds out;
        out.lower = 0;
        out.lower_reason = BoundReason::PlanarTest;
        out.upper = 0;
        out.certificate = pl.embedding;
        return out;
    }

    const int elb = euler_lower_bound(g);
    int lower = std::max(1, elb);
    BoundReason reason = elb >= 2 ? BoundReason::EulerGirth : BoundReason::PlanarTest;

    EmbeddingCertificate best = heuristic_upper(g, 20'000, 7);
    if (best.genus == lower)
        return GenusBounds{lower, reason, best.genus, best};

    long long used = 0;
    for (int target = lower;; ++target) {
        if (target >= best.genus)
            return GenusBounds{best.genus, reason, best.genus, best};
        EmbedSearch search(g, target, budget - used);
        bool ok = search.run();
        used += search.expansions;
        if (ok) {
            RotationSystem rot{search.found_rotation};
            EmbeddingCertificate cert = face_trace(g, rot);
            return GenusBounds{cert.genus, reason, cert.genus, cert};
        }
        if (search.out_of_budget)
            return GenusBounds{target, reason, best.genus, best};
        lower = target + 1;
        reason = BoundReason::ExhaustedSearch;
    }
}

EmbeddingCertificate heuristic_upper(const SimpleGraph& g, long long effort, unsigned seed) {
    PlanarityResult pl = is_planar(g);
    if (pl.planar) return *pl.embedding;

    const auto edges = g.edges();
    const int n = g.vertex_count();
    const int base = genus_base(g);
    std::mt19937 rng(seed);
    Inserter ins(g);

    // phase 1: randomized greedy constructions
    RotationSystem best_rot = default_rotation(g);
    int best = trace_genus(n, edges, best_rot.order, base);
    long long evals = 0;
    const long long greedy_budget = effort / 4;
    while (evals < greedy_budget && best > 1) {
        int got = 0;
        auto rot = greedy_rotation(ins, rng, got);
        evals += g.edge_count();
        if (got < best) {
            best = got;
            best_rot.order = std::move(rot);
        }
    }

    // phase 2: polish by relocating single darts, plateau moves allowed
    std::vector<int> movable;
    for (int v = 0; v < n; ++v)
        if (g.degree(v) >= 3) movable.push_back(v);
    if (!movable.empty() && best > 1) {
        RotationSystem rot = best_rot;
        int cur = best;
        const long long polish_end = effort / 2;
        while (evals < polish_end && best > 1) {
            int v = movable[rng() % movable.size()];
            auto& cyc = rot.order[static_cast<size_t>(v)];
            size_t i = rng() % cyc.size();
            size_t j = rng() % (cyc.size() - 1);
            if (j >= i) ++j;
            int moved = cyc[i];
            cyc.erase(cyc.begin() + static_cast<long>(i));
            cyc.insert(cyc.begin() + static_cast<long>(j > i ? j - 1 : j), moved);
            int next = trace_genus(n, edges, rot.order, base);
            ++evals;
            if (next <= cur) {
                cur = next;
                if (cur < best) {
                    best = cur;
                    best_rot = rot;
                }
            } else {
                size_t at = j > i ? j - 1 : j;
                int back = cyc[at];
                cyc.erase(cyc.begin() + static_cast<long>(at));
                cyc.insert(cyc.begin() + static_cast<long>(i), back);
            }
        }
    }

    // phase 3: descending-target searches with the remaining effort as the
    // node budget; every success replaces the certificate
    while (best > 1 && evals < effort) {
        EmbedSearch search(g, best - 1, effort - evals);
        bool ok = search.run();
        evals += search.expansions;
        if (!ok) break;
        best_rot.order = search.found_rotation;
        best = trace_genus(n, edges, best_rot.order, base);
    }
    return face_trace(g, best_rot);
}

}  // namespace rightcay::topo
