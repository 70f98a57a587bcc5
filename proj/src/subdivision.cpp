#include <algorithm>
#include <stdexcept>

#include "rightcay/topology.hpp"

// Subdivision search: assign branch vertices in a canonical order (cutting
// pattern symmetry), then extend internally-disjoint paths one pattern edge
// at a time, backtracking over both path choices and branch assignments.

namespace rightcay::topo {

namespace {

struct PatternInfo {
    int k;                                       // branch vertex count
    std::vector<std::pair<int, int>> edges;      // pattern edges
    std::vector<int> degree;                     // pattern degrees
    std::vector<std::pair<int, int>> less_than;  // canonical-order constraints
};

PatternInfo pattern_info(Pattern p) {
    PatternInfo info;
    SimpleGraph h = pattern_graph(p);
    info.k = h.vertex_count();
    info.edges = h.edges();
    info.degree.resize(static_cast<size_t>(info.k));
    for (int v = 0; v < info.k; ++v) info.degree[static_cast<size_t>(v)] = h.degree(v);
    switch (p) {
        case Pattern::K5:
            info.less_than = {{0, 1}, {1, 2}, {2, 3}, {3, 4}};
            break;
        case Pattern::K4:
            info.less_than = {{0, 1}, {1, 2}, {2, 3}};
            break;
        case Pattern::K33:
            info.less_than = {{0, 1}, {1, 2}, {3, 4}, {4, 5}, {0, 3}};
            break;
        case Pattern::K23:
            info.less_than = {{0, 1}, {2, 3}, {3, 4}};
            break;
        case Pattern::K22:
            info.less_than = {{0, 1}, {2, 3}, {0, 2}};
            break;
    }
    return info;
}

struct SubdivisionSearch {
    const SimpleGraph& g;
    PatternInfo info;
    std::vector<int> branch;          // role -> vertex, -1 unassigned
    std::vector<char> used;           // vertex used as branch or path interior
    std::vector<std::vector<int>> paths;

    bool paths_from(size_t edge_idx) {
        if (edge_idx == info.edges.size()) return true;
        auto [ru, rv] = info.edges[edge_idx];
        int s = branch[static_cast<size_t>(ru)];
        int t = branch[static_cast<size_t>(rv)];
        std::vector<int> path{s};
        return extend_path(edge_idx, s, t, path);
    }

    bool target_reachable(int at, int target) const {
        std::vector<char> seen(static_cast<size_t>(g.vertex_count()), 0);
        std::vector<int> stack{at};
        seen[static_cast<size_t>(at)] = 1;
        while (!stack.empty()) {
            int u = stack.back();
            stack.pop_back();
            for (int w : g.neighbors(u)) {
                if (w == target) return true;
                if (!used[static_cast<size_t>(w)] && !seen[static_cast<size_t>(w)]) {
                    seen[static_cast<size_t>(w)] = 1;
                    stack.push_back(w);
                }
            }
        }
        return false;
    }

    bool extend_path(size_t edge_idx, int at, int target, std::vector<int>& path) {
        if (!target_reachable(at, target)) return false;
        for (int w : g.neighbors(at)) {
            if (w == target) {
                paths.push_back(path);
                paths.back().push_back(target);
                if (paths_from(edge_idx + 1)) return true;
                paths.pop_back();
                continue;
            }
            if (used[static_cast<size_t>(w)]) continue;
            used[static_cast<size_t>(w)] = 1;
            path.push_back(w);
            if (extend_path(edge_idx, w, target, path)) return true;
            path.pop_back();
            used[static_cast<size_t>(w)] = 0;
        }
        return false;
    }

    bool assign(int role) {
        if (role == info.k) {
            paths.clear();
            std::vector<char> saved = used;
            if (paths_from(0)) return true;
            used = std::move(saved);
            return false;
        }
        for (int v = 0; v < g.vertex_count(); ++v) {
            if (used[static_cast<size_t>(v)]) continue;
            if (g.degree(v) < info.degree[static_cast<size_t>(role)]) continue;
            bool ok = true;
            for (auto [a, b] : info.less_than) {
                if (b == role && branch[static_cast<size_t>(a)] != -1 && branch[static_cast<size_t>(a)] >= v) ok = false;
                if (a == role && branch[static_cast<size_t>(b)] != -1 && branch[static_cast<size_t>(b)] <= v) ok = false;
            }
            if (!ok) continue;
            branch[static_cast<size_t>(role)] = v;
            used[static_cast<size_t>(v)] = 1;
            if (assign(role + 1)) return true;
            branch[static_cast<size_t>(role)] = -1;
            used[static_cast<size_t>(v)] = 0;
        }
        return false;
    }
};

}  // namespace

std::optional<KuratowskiWitness> find_subdivision(const SimpleGraph& g, Pattern pattern) {
    if (g.vertex_count() > 100)
        throw std::invalid_argument("find_subdivision: vertex count exceeds 100");
    SubdivisionSearch search{g, pattern_info(pattern), {}, {}, {}};
    search.branch.assign(static_cast<size_t>(search.info.k), -1);
    search.used.assign(static_cast<size_t>(g.vertex_count()), 0);
    if (!search.assign(0)) return std::nullopt;
    KuratowskiWitness w;
    w.pattern = pattern;
    w.branch_vertices = search.branch;
    w.paths = search.paths;
    return w;
}

bool validate_witness(const SimpleGraph& g, const KuratowskiWitness& w) {
    PatternInfo info = pattern_info(w.pattern);
    if (static_cast<int>(w.branch_vertices.size()) != info.k) return false;
    if (w.paths.size() != info.edges.size()) return false;
    std::vector<char> seen(static_cast<size_t>(g.vertex_count()), 0);
    for (int b : w.branch_vertices) {
        if (b < 0 || b >= g.vertex_count() || seen[static_cast<size_t>(b)]) return false;
        seen[static_cast<size_t>(b)] = 1;
    }
    std::vector<char> interior(static_cast<size_t>(g.vertex_count()), 0);
    for (size_t i = 0; i < w.paths.size(); ++i) {
        const auto& path = w.paths[i];
        auto [ru, rv] = info.edges[i];
        if (path.size() < 2) return false;
        if (path.front() != w.branch_vertices[static_cast<size_t>(ru)]) return false;
        if (path.back() != w.branch_vertices[static_cast<size_t>(rv)]) return false;
        for (size_t j = 0; j + 1 < path.size(); ++j)
            if (!g.has_edge(path[j], path[j + 1])) return false;
        for (size_t j = 1; j + 1 < path.size(); ++j) {
            int v = path[j];
            if (seen[static_cast<size_t>(v)] || interior[static_cast<size_t>(v)]) return false;
            interior[static_cast<size_t>(v)] = 1;
        }
    }
    return true;
}

SimpleGraph witness_subgraph(const SimpleGraph& g, const KuratowskiWitness& w) {
    SimpleGraph sub(g.vertex_count());
    for (const auto& path : w.paths)
        for (size_t j = 0; j + 1 < path.size(); ++j) sub.add_edge(path[j], path[j + 1]);
    return sub;
}

}  // namespace rightcay::topo
