#include <algorithm>
#include <queue>
#include <set>
#include <stdexcept>

#include "rightcay/topology.hpp"

// Planarity by face-based incremental embedding (Demoucron, Malgrange,
// Pertuiset): start with a cycle of a biconnected block, then repeatedly
// route a path of some unembedded fragment through a face whose boundary
// contains all of the fragment's attachment vertices. A fragment with no
// admissible face certifies non-planarity; the Kuratowski witness is then
// produced by the subdivision search. Blocks are embedded independently and
// their rotations concatenated at cut vertices.

namespace rightcay::topo {

namespace {

struct BlockFinder {
    const SimpleGraph& g;
    std::vector<int> disc, low;
    std::vector<std::pair<int, int>> estack;
    std::vector<std::vector<std::pair<int, int>>> blocks;
    int timer = 0;

    explicit BlockFinder(const SimpleGraph& graph)
        : g(graph),
          disc(static_cast<size_t>(graph.vertex_count()), -1),
          low(static_cast<size_t>(graph.vertex_count()), -1) {}

    void dfs(int u, int parent) {
        disc[static_cast<size_t>(u)] = low[static_cast<size_t>(u)] = timer++;
        for (int v : g.neighbors(u)) {
            if (v == parent) continue;
            if (disc[static_cast<size_t>(v)] == -1) {
                estack.emplace_back(u, v);
                dfs(v, u);
                low[static_cast<size_t>(u)] =
                    std::min(low[static_cast<size_t>(u)], low[static_cast<size_t>(v)]);
                if (low[static_cast<size_t>(v)] >= disc[static_cast<size_t>(u)]) {
                    blocks.emplace_back();
                    while (true) {
                        auto e = estack.back();
                        estack.pop_back();
                        blocks.back().push_back(e);
                        if (e == std::make_pair(u, v)) break;
                    }
                }
            } else if (disc[static_cast<size_t>(v)] < disc[static_cast<size_t>(u)]) {
                estack.emplace_back(u, v);
                low[static_cast<size_t>(u)] =
                    std::min(low[static_cast<size_t>(u)], disc[static_cast<size_t>(v)]);
            }
        }
    }

    void run() {
        for (int v = 0; v < g.vertex_count(); ++v)
            if (disc[static_cast<size_t>(v)] == -1) dfs(v, -1);
    }
};

struct Dmp {
    const SimpleGraph& g;
    std::vector<std::pair<int, int>> edges;
    int n, m;
    std::vector<std::vector<int>> faces;  // dart walks
    std::vector<char> hv;                 // vertex embedded
    std::vector<char> he;                 // edge embedded (by edge index)
    int embedded = 0;

    explicit Dmp(const SimpleGraph& graph)
        : g(graph), edges(graph.edges()), n(graph.vertex_count()), m(graph.edge_count()),
          hv(static_cast<size_t>(n), 0), he(static_cast<size_t>(m), 0) {}

    int edge_index(int u, int v) const {
        auto it = std::lower_bound(edges.begin(), edges.end(),
                                   std::pair<int, int>(std::min(u, v), std::max(u, v)));
        return static_cast<int>(it - edges.begin());
    }
    int dart(int u, int v) const { return 2 * edge_index(u, v) + (u < v ? 0 : 1); }
    int origin(int d) const {
        const auto& e = edges[static_cast<size_t>(d >> 1)];
        return (d & 1) ? e.second : e.first;
    }

    bool cycle_dfs(int u, int parent, std::vector<int>& path, std::vector<char>& on_path,
                   std::vector<char>& visited, std::vector<int>& cycle) const {
        visited[static_cast<size_t>(u)] = 1;
        on_path[static_cast<size_t>(u)] = 1;
        path.push_back(u);
        for (int v : g.neighbors(u)) {
            if (v == parent) continue;
            if (on_path[static_cast<size_t>(v)]) {
                auto it = std::find(path.begin(), path.end(), v);
                cycle.assign(it, path.end());
                return true;
            }
            if (!visited[static_cast<size_t>(v)] && cycle_dfs(v, u, path, on_path, visited, cycle))
                return true;
        }
        on_path[static_cast<size_t>(u)] = 0;
        path.pop_back();
        return false;
    }

    std::vector<int> initial_cycle() const {
        std::vector<int> path, cycle;
        std::vector<char> on_path(static_cast<size_t>(n), 0), visited(static_cast<size_t>(n), 0);
        if (!cycle_dfs(0, -1, path, on_path, visited, cycle))
            throw std::logic_error("biconnected block without a cycle");
        return cycle;
    }

    void add_cycle(const std::vector<int>& cyc) {
        std::vector<int> fwd, bwd;
        const size_t k = cyc.size();
        for (size_t i = 0; i < k; ++i) {
            int u = cyc[i], v = cyc[(i + 1) % k];
            fwd.push_back(dart(u, v));
            bwd.push_back(dart(cyc[(k - i) % k], cyc[k - 1 - i]));
            hv[static_cast<size_t>(u)] = 1;
            he[static_cast<size_t>(edge_index(u, v))] = 1;
            ++embedded;
        }
        faces.push_back(std::move(fwd));
        faces.push_back(std::move(bwd));
    }

    struct Fragment {
        std::vector<int> attachments;       // sorted H-vertices
        int chord_edge = -1;                // edge index when the fragment is a chord
        std::vector<int> interior;          // non-H vertices otherwise
    };

    std::vector<Fragment> fragments() const {
        std::vector<Fragment> out;
        for (int e = 0; e < m; ++e) {
            if (he[static_cast<size_t>(e)]) continue;
            auto [u, v] = edges[static_cast<size_t>(e)];
            if (hv[static_cast<size_t>(u)] && hv[static_cast<size_t>(v)]) {
                Fragment f;
                f.attachments = {std::min(u, v), std::max(u, v)};
                f.chord_edge = e;
                out.push_back(std::move(f));
            }
        }
        std::vector<char> visited(static_cast<size_t>(n), 0);
        for (int s = 0; s < n; ++s) {
            if (hv[static_cast<size_t>(s)] || visited[static_cast<size_t>(s)]) continue;
            Fragment f;
            std::vector<int> stack{s};
            visited[static_cast<size_t>(s)] = 1;
            std::vector<char> att(static_cast<size_t>(n), 0);
            while (!stack.empty()) {
                int u = stack.back();
                stack.pop_back();
                f.interior.push_back(u);
                for (int v : g.neighbors(u)) {
                    if (hv[static_cast<size_t>(v)]) {
                        att[static_cast<size_t>(v)] = 1;
                    } else if (!visited[static_cast<size_t>(v)]) {
                        visited[static_cast<size_t>(v)] = 1;
                        stack.push_back(v);
                    }
                }
            }
            for (int v = 0; v < n; ++v)
                if (att[static_cast<size_t>(v)]) f.attachments.push_back(v);
            out.push_back(std::move(f));
        }
        return out;
    }

    // path through the fragment between two attachments (interior only)
    std::vector<int> fragment_path(const Fragment& f) const {
        if (f.chord_edge != -1)
            return {edges[static_cast<size_t>(f.chord_edge)].first,
                    edges[static_cast<size_t>(f.chord_edge)].second};
        std::vector<char> in_interior(static_cast<size_t>(n), 0);
        for (int v : f.interior) in_interior[static_cast<size_t>(v)] = 1;
        const int start = f.attachments[0];
        std::vector<int> prev(static_cast<size_t>(n), -2);
        std::queue<int> q;
        for (int v : g.neighbors(start))
            if (in_interior[static_cast<size_t>(v)] && prev[static_cast<size_t>(v)] == -2) {
                prev[static_cast<size_t>(v)] = start;
                q.push(v);
            }
        while (!q.empty()) {
            int u = q.front();
            q.pop();
            for (int v : g.neighbors(u)) {
                if (v != start && hv[static_cast<size_t>(v)]) {
                    // reached another attachment
                    std::vector<int> path{v, u};
                    int w = u;
                    while (prev[static_cast<size_t>(w)] != start) {
                        w = prev[static_cast<size_t>(w)];
                        path.push_back(w);
                    }
                    path.push_back(start);
                    std::reverse(path.begin(), path.end());
                    return path;
                }
                if (in_interior[static_cast<size_t>(v)] && prev[static_cast<size_t>(v)] == -2) {
                    prev[static_cast<size_t>(v)] = u;
                    q.push(v);
                }
            }
        }
        throw std::logic_error("fragment with an unreachable second attachment");
    }

    void embed_path(int face_idx, const std::vector<int>& path) {
        std::vector<int>& walk = faces[static_cast<size_t>(face_idx)];
        const int u = path.front(), v = path.back();
        const size_t L = walk.size();
        size_t i = L, j = L;
        for (size_t k = 0; k < L; ++k) {
            if (origin(walk[k]) == u) i = k;
            if (origin(walk[k]) == v) j = k;
        }
        if (i == L || j == L) throw std::logic_error("attachment missing from chosen face");

        std::vector<int> fwd, bwd;
        for (size_t k = 0; k + 1 < path.size(); ++k) fwd.push_back(dart(path[k], path[k + 1]));
        for (size_t k = path.size(); k > 1; --k) bwd.push_back(dart(path[k - 1], path[k - 2]));

        std::vector<int> f1 = fwd, f2 = bwd;
        for (size_t k = j; k != i; k = (k + 1) % L) f1.push_back(walk[k]);
        for (size_t k = i; k != j; k = (k + 1) % L) f2.push_back(walk[k]);

        faces[static_cast<size_t>(face_idx)] = std::move(f1);
        faces.push_back(std::move(f2));

        for (int w : path) hv[static_cast<size_t>(w)] = 1;
        for (size_t k = 0; k + 1 < path.size(); ++k) {
            he[static_cast<size_t>(edge_index(path[k], path[k + 1]))] = 1;
            ++embedded;
        }
    }

    bool run() {
        if (n < 3) throw std::logic_error("DMP expects blocks with at least 3 vertices");
        if (n >= 3 && m > 3 * n - 6) return false;
        add_cycle(initial_cycle());
        while (embedded < m) {
            auto frags = fragments();
            if (frags.empty()) throw std::logic_error("unembedded edges but no fragments");

            std::vector<std::vector<int>> face_vertices(faces.size());
            for (size_t fi = 0; fi < faces.size(); ++fi) {
                std::vector<int> vs;
                vs.reserve(faces[fi].size());
                for (int d : faces[fi]) vs.push_back(origin(d));
                std::sort(vs.begin(), vs.end());
                face_vertices[fi] = std::move(vs);
            }

            int chosen = -1, chosen_face = -1;
            for (size_t k = 0; k < frags.size(); ++k) {
                int count = 0, first_face = -1;
                for (size_t fi = 0; fi < faces.size(); ++fi) {
                    if (std::includes(face_vertices[fi].begin(), face_vertices[fi].end(),
                                      frags[k].attachments.begin(), frags[k].attachments.end())) {
                        if (first_face == -1) first_face = static_cast<int>(fi);
                        ++count;
                    }
                }
                if (count == 0) return false;  // no admissible face: non-planar
                if (count == 1) {
                    chosen = static_cast<int>(k);
                    chosen_face = first_face;
                    break;
                }
                if (chosen == -1) {
                    chosen = static_cast<int>(k);
                    chosen_face = first_face;
                }
            }
            embed_path(chosen_face, fragment_path(frags[static_cast<size_t>(chosen)]));
        }
        return true;
    }

    // rotation from the face permutation: R(e) = phi(twin(e))
    std::vector<std::vector<int>> rotation() const {
        std::vector<int> next_in_face(static_cast<size_t>(2 * m), -1);
        for (const auto& walk : faces)
            for (size_t k = 0; k < walk.size(); ++k)
                next_in_face[static_cast<size_t>(walk[k])] = walk[(k + 1) % walk.size()];
        std::vector<std::vector<int>> rot(static_cast<size_t>(n));
        std::vector<char> placed(static_cast<size_t>(2 * m), 0);
        for (int d0 = 0; d0 < 2 * m; ++d0) {
            if (placed[static_cast<size_t>(d0)]) continue;
            int v = origin(d0);
            int d = d0;
            do {
                placed[static_cast<size_t>(d)] = 1;
                rot[static_cast<size_t>(v)].push_back(d);
                d = next_in_face[static_cast<size_t>(d ^ 1)];
            } while (d != d0);
        }
        for (int v = 0; v < n; ++v)
            if (static_cast<int>(rot[static_cast<size_t>(v)].size()) != g.degree(v))
                throw std::logic_error("face set does not induce a single rotation cycle");
        return rot;
    }
};

}  // namespace

std::optional<RotationSystem> planar_embed(const SimpleGraph& g);

std::optional<RotationSystem> planar_embed(const SimpleGraph& g) {
    RotationSystem rot;
    rot.order.resize(static_cast<size_t>(g.vertex_count()));

    BlockFinder finder(g);
    finder.run();
    for (const auto& block_edges : finder.blocks) {
        if (block_edges.size() == 1) {
            auto [u, v] = block_edges[0];
            rot.order[static_cast<size_t>(u)].push_back(v);
            rot.order[static_cast<size_t>(v)].push_back(u);
            continue;
        }
        std::vector<int> verts;
        for (auto [u, v] : block_edges) {
            verts.push_back(u);
            verts.push_back(v);
        }
        std::sort(verts.begin(), verts.end());
        verts.erase(std::unique(verts.begin(), verts.end()), verts.end());
        std::vector<int> local_of(static_cast<size_t>(g.vertex_count()), -1);
        for (size_t i = 0; i < verts.size(); ++i) local_of[static_cast<size_t>(verts[i])] = static_cast<int>(i);
        SimpleGraph local(static_cast<int>(verts.size()));
        for (auto [u, v] : block_edges)
            local.add_edge(local_of[static_cast<size_t>(u)], local_of[static_cast<size_t>(v)]);

        Dmp dmp(local);
        if (!dmp.run()) return std::nullopt;
        auto block_rot = dmp.rotation();
        for (size_t lv = 0; lv < verts.size(); ++lv)
            for (int d : block_rot[lv])
                rot.order[static_cast<size_t>(verts[lv])].push_back(verts[static_cast<size_t>(dmp.origin(d ^ 1))]);
    }
    return rot;
}

bool planar(const SimpleGraph& g) { return planar_embed(g).has_value(); }

namespace {

// Shrink g to an edge-minimal subgraph still violating the predicate
// ("planar" or "outer planar"). One pass suffices: once keeping an edge
// leaves the rest planar, any further-shrunk graph without it is planar
// too. The result's edges form exactly a forbidden subdivision.
template <typename Planarish>
SimpleGraph minimal_core(const SimpleGraph& g, Planarish&& is_fine) {
    SimpleGraph cur = g;
    for (int v = 0; v < cur.vertex_count(); ++v) {
        if (cur.degree(v) == 0) continue;
        SimpleGraph without(cur.vertex_count());
        for (auto [a, b] : cur.edges())
            if (a != v && b != v) without.add_edge(a, b);
        if (!is_fine(without)) cur = std::move(without);
    }
    for (auto [u, v] : cur.edges()) {
        SimpleGraph without(cur.vertex_count());
        for (auto [a, b] : cur.edges())
            if (!(a == u && b == v)) without.add_edge(a, b);
        if (!is_fine(without)) cur = std::move(without);
    }
    return cur;
}

// Walk a subdivision path from branch vertex b through degree-2 vertices.
std::vector<int> walk_path(const SimpleGraph& core, int b, int first) {
    std::vector<int> path{b, first};
    int prev = b, cur = first;
    while (core.degree(cur) == 2) {
        int next = core.neighbors(cur)[0] == prev ? core.neighbors(cur)[1] : core.neighbors(cur)[0];
        path.push_back(next);
        prev = cur;
        cur = next;
    }
    return path;
}

struct ParsedPaths {
    std::vector<int> branch;                     // sorted
    std::vector<std::vector<int>> between;       // one path per branch pair, as found
};

ParsedPaths parse_core_paths(const SimpleGraph& core, int expected_branch_degree) {
    ParsedPaths out;
    for (int v = 0; v < core.vertex_count(); ++v) {
        int d = core.degree(v);
        if (d == 0 || d == 2) continue;
        if (d != expected_branch_degree)
            throw std::logic_error("core vertex degree does not match the expected pattern");
        out.branch.push_back(v);
    }
    std::set<std::pair<int, int>> used;  // darts consumed by emitted paths
    for (int b : out.branch)
        for (int nb : core.neighbors(b)) {
            if (used.count({b, nb})) continue;
            std::vector<int> path = walk_path(core, b, nb);
            for (size_t i = 0; i + 1 < path.size(); ++i) {
                used.insert({path[i], path[i + 1]});
                used.insert({path[i + 1], path[i]});
            }
            out.between.push_back(std::move(path));
        }
    return out;
}

std::vector<int> oriented_path(const ParsedPaths& parsed, int from, int to) {
    for (const auto& p : parsed.between) {
        if (p.front() == from && p.back() == to) return p;
        if (p.front() == to && p.back() == from) {
            std::vector<int> rev(p.rbegin(), p.rend());
            return rev;
        }
    }
    throw std::logic_error("missing subdivision path between branch vertices");
}

KuratowskiWitness parse_kuratowski(const SimpleGraph& core) {
    int deg3 = 0, deg4 = 0;
    for (int v = 0; v < core.vertex_count(); ++v) {
        if (core.degree(v) == 3) ++deg3;
        if (core.degree(v) == 4) ++deg4;
    }
    KuratowskiWitness w;
    if (deg4 == 5 && deg3 == 0) {
        w.pattern = Pattern::K5;
        ParsedPaths parsed = parse_core_paths(core, 4);
        w.branch_vertices = parsed.branch;
        for (auto [i, j] : pattern_graph(Pattern::K5).edges())
            w.paths.push_back(oriented_path(parsed, parsed.branch[static_cast<size_t>(i)],
                                            parsed.branch[static_cast<size_t>(j)]));
        return w;
    }
    if (deg3 == 6 && deg4 == 0) {
        w.pattern = Pattern::K33;
        ParsedPaths parsed = parse_core_paths(core, 3);
        // split the six branch vertices into the two sides
        auto path_joins = [&parsed](int a, int b) {
            for (const auto& p : parsed.between)
                if ((p.front() == a && p.back() == b) || (p.front() == b && p.back() == a))
                    return true;
            return false;
        };
        std::vector<int> side_a{parsed.branch[0]}, side_b;
        for (size_t i = 1; i < parsed.branch.size(); ++i) {
            if (path_joins(parsed.branch[0], parsed.branch[i])) side_b.push_back(parsed.branch[i]);
            else side_a.push_back(parsed.branch[i]);
        }
        if (side_a.size() != 3 || side_b.size() != 3)
            throw std::logic_error("core does not split into K33 sides");
        if (side_b[0] < side_a[0]) std::swap(side_a, side_b);
        std::vector<int> roles(6);
        for (int i = 0; i < 3; ++i) {
            roles[static_cast<size_t>(i)] = side_a[static_cast<size_t>(i)];
            roles[static_cast<size_t>(3 + i)] = side_b[static_cast<size_t>(i)];
        }
        w.branch_vertices = roles;
        for (auto [i, j] : pattern_graph(Pattern::K33).edges())
            w.paths.push_back(oriented_path(parsed, roles[static_cast<size_t>(i)],
                                            roles[static_cast<size_t>(j)]));
        return w;
    }
    throw std::logic_error("minimal non-planar core is not a K5 or K33 subdivision");
}

KuratowskiWitness parse_outer_witness(const SimpleGraph& core) {
    int deg3 = 0;
    for (int v = 0; v < core.vertex_count(); ++v)
        if (core.degree(v) >= 3) ++deg3;
    KuratowskiWitness w;
    if (deg3 == 4) {
        w.pattern = Pattern::K4;
        ParsedPaths parsed = parse_core_paths(core, 3);
        w.branch_vertices = parsed.branch;
        for (auto [i, j] : pattern_graph(Pattern::K4).edges())
            w.paths.push_back(oriented_path(parsed, parsed.branch[static_cast<size_t>(i)],
                                            parsed.branch[static_cast<size_t>(j)]));
        return w;
    }
    if (deg3 == 2) {
        // a theta graph: three internally disjoint paths between the two
        // degree-3 vertices, each of length >= 2; the second vertex of each
        // path serves as a 3-side branch vertex of K23
        w.pattern = Pattern::K23;
        ParsedPaths parsed = parse_core_paths(core, 3);
        int a = parsed.branch[0], b = parsed.branch[1];
        if (parsed.between.size() != 3)
            throw std::logic_error("theta core without exactly three paths");
        std::vector<std::pair<int, std::vector<int>>> halves;  // (x_i, full path a..b)
        for (const auto& p : parsed.between) {
            std::vector<int> from_a = p.front() == a ? p : std::vector<int>(p.rbegin(), p.rend());
            if (from_a.size() < 3)
                throw std::logic_error("theta path too short for a K23 subdivision");
            halves.emplace_back(from_a[1], from_a);
        }
        std::sort(halves.begin(), halves.end());
        w.branch_vertices = {a, b, halves[0].first, halves[1].first, halves[2].first};
        // K23 pattern edges: (0,2),(0,3),(0,4),(1,2),(1,3),(1,4)
        for (auto [i, j] : pattern_graph(Pattern::K23).edges()) {
            const auto& full = halves[static_cast<size_t>(j - 2)].second;
            int x = halves[static_cast<size_t>(j - 2)].first;
            if (i == 0) {
                w.paths.push_back({a, x});
            } else {
                std::vector<int> rest(full.begin() + 1, full.end());
                std::reverse(rest.begin(), rest.end());  // b .. x
                w.paths.push_back(std::move(rest));
            }
        }
        return w;
    }
    throw std::logic_error("minimal non-outer-planar core is not a K4 or K23 subdivision");
}

}  // namespace

PlanarityResult is_planar(const SimpleGraph& g) {
    PlanarityResult result;
    auto rot = planar_embed(g);
    if (rot) {
        result.planar = true;
        result.embedding = face_trace(g, *rot);
        if (result.embedding->genus != 0)
            throw std::logic_error("planar embedding traced to nonzero genus");
        return result;
    }
    result.planar = false;
    if (g.vertex_count() <= 16) {
        // small graphs: backtracking search, which also realizes the
        // smallest branch assignment in the canonical role order
        result.witness = find_subdivision(g, Pattern::K33);
        if (!result.witness) result.witness = find_subdivision(g, Pattern::K5);
    } else {
        SimpleGraph core = minimal_core(g, [](const SimpleGraph& h) { return planar(h); });
        result.witness = parse_kuratowski(core);
    }
    if (!result.witness || !validate_witness(g, *result.witness))
        throw std::logic_error("non-planar graph without a valid K5 or K33 subdivision");
    return result;
}

OuterPlanarityResult is_outer_planar(const SimpleGraph& g) {
    OuterPlanarityResult result;
    const int n = g.vertex_count();

    SimpleGraph apex(n + 1);
    for (auto [u, v] : g.edges()) apex.add_edge(u, v);
    for (int v = 0; v < n; ++v) apex.add_edge(v, n);

    auto rot = planar_embed(apex);
    if (rot) {
        result.outer_planar = true;
        RotationSystem inner;
        inner.order.resize(static_cast<size_t>(n));
        for (int v = 0; v < n; ++v) {
            for (int w : rot->order[static_cast<size_t>(v)])
                if (w != n) inner.order[static_cast<size_t>(v)].push_back(w);
        }
        result.embedding = face_trace(g, inner);
        if (g.connected() && n > 0 && g.edge_count() > 0) {
            for (size_t f = 0; f < result.embedding->faces.size(); ++f) {
                std::vector<int> vs = result.embedding->faces[f];
                std::sort(vs.begin(), vs.end());
                vs.erase(std::unique(vs.begin(), vs.end()), vs.end());
                if (static_cast<int>(vs.size()) == n) {
                    result.outer_face = static_cast<int>(f);
                    break;
                }
            }
            if (result.outer_face == -1)
                throw std::logic_error("outer-planar embedding lost its outer face");
        }
        return result;
    }
    result.outer_planar = false;
    if (g.vertex_count() <= 16) {
        result.witness = find_subdivision(g, Pattern::K4);
        if (!result.witness) result.witness = find_subdivision(g, Pattern::K23);
    } else {
        auto outer_fine = [](const SimpleGraph& h) {
            SimpleGraph cone(h.vertex_count() + 1);
            for (auto [u, v] : h.edges()) cone.add_edge(u, v);
            for (int v = 0; v < h.vertex_count(); ++v) cone.add_edge(v, h.vertex_count());
            return planar(cone);
        };
        SimpleGraph core = minimal_core(g, outer_fine);
        result.witness = parse_outer_witness(core);
    }
    if (!result.witness || !validate_witness(g, *result.witness))
        throw std::logic_error("non-outer-planar graph without a valid K4 or K23 subdivision");
    return result;
}

}  // namespace rightcay::topo
