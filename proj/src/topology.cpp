#include "rightcay/topology.hpp"

#include <algorithm>
#include <limits>
#include <queue>
#include <stdexcept>

// Face tracing and the counting invariants. Darts: edge e = (u,v) with
// u < v contributes dart 2e (u -> v) and dart 2e+1 (v -> u); twin(d) = d^1.
// With R the rotation (clockwise successor around the origin) the face
// permutation is phi(d) = R(twin(d)).

namespace rightcay::topo {

namespace {

struct Darts {
    std::vector<std::pair<int, int>> edge_list;
    std::vector<int> edge_index_flat;  // not used for large graphs; lookup below

    int origin(int d) const {
        const auto& e = edge_list[static_cast<size_t>(d >> 1)];
        return (d & 1) ? e.second : e.first;
    }
    int head(int d) const {
        const auto& e = edge_list[static_cast<size_t>(d >> 1)];
        return (d & 1) ? e.first : e.second;
    }
};

int dart_from_to(const std::vector<std::pair<int, int>>& edges, int u, int v) {
    auto it = std::lower_bound(edges.begin(), edges.end(),
                               std::pair<int, int>(std::min(u, v), std::max(u, v)));
    int e = static_cast<int>(it - edges.begin());
    return 2 * e + (u < v ? 0 : 1);
}

}  // namespace

RotationSystem default_rotation(const SimpleGraph& g) {
    RotationSystem r;
    r.order.resize(static_cast<size_t>(g.vertex_count()));
    for (int v = 0; v < g.vertex_count(); ++v) r.order[static_cast<size_t>(v)] = g.neighbors(v);
    return r;
}

RotationSystem random_rotation(const SimpleGraph& g, std::mt19937& rng) {
    RotationSystem r = default_rotation(g);
    for (auto& cyc : r.order)
        for (size_t i = cyc.size(); i > 1; --i) std::swap(cyc[i - 1], cyc[rng() % i]);
    return r;
}

EmbeddingCertificate face_trace(const SimpleGraph& g, const RotationSystem& rot) {
    const int n = g.vertex_count();
    if (static_cast<int>(rot.order.size()) != n)
        throw std::invalid_argument("rotation system size does not match graph");
    auto edges = g.edges();
    const int m = g.edge_count();

    // validate: rot.order[v] is a permutation of neighbors(v)
    std::vector<int> next(static_cast<size_t>(2 * m), -1);
    for (int v = 0; v < n; ++v) {
        std::vector<int> sorted = rot.order[static_cast<size_t>(v)];
        std::sort(sorted.begin(), sorted.end());
        if (sorted != g.neighbors(v))
            throw std::invalid_argument("rotation at vertex " + std::to_string(v) +
                                        " is not a permutation of its neighbors");
        const auto& cyc = rot.order[static_cast<size_t>(v)];
        for (size_t i = 0; i < cyc.size(); ++i) {
            int d = dart_from_to(edges, v, cyc[i]);
            int d2 = dart_from_to(edges, v, cyc[(i + 1) % cyc.size()]);
            next[static_cast<size_t>(d)] = d2;
        }
    }

    EmbeddingCertificate cert;
    cert.graph = g;
    cert.rotation = rot;

    Darts darts{edges, {}};
    std::vector<char> seen(static_cast<size_t>(2 * m), 0);
    std::vector<int> face_of_dart(static_cast<size_t>(2 * m), -1);
    for (int d0 = 0; d0 < 2 * m; ++d0) {
        if (seen[static_cast<size_t>(d0)]) continue;
        std::vector<int> walk;
        int d = d0;
        do {
            seen[static_cast<size_t>(d)] = 1;
            face_of_dart[static_cast<size_t>(d)] = static_cast<int>(cert.faces.size());
            walk.push_back(darts.origin(d));
            d = next[static_cast<size_t>(d ^ 1)];
        } while (d != d0);
        cert.faces.push_back(std::move(walk));
    }

    // per-component accounting; an isolated vertex is its own sphere
    auto comp = g.component_ids();
    int ncomp = comp.empty() ? 0 : 1 + *std::max_element(comp.begin(), comp.end());
    std::vector<int> cn(static_cast<size_t>(ncomp), 0), cm(static_cast<size_t>(ncomp), 0),
        cf(static_cast<size_t>(ncomp), 0);
    for (int v = 0; v < n; ++v) ++cn[static_cast<size_t>(comp[static_cast<size_t>(v)])];
    for (auto [u, v] : edges) ++cm[static_cast<size_t>(comp[static_cast<size_t>(u)])];
    for (const auto& f : cert.faces) ++cf[static_cast<size_t>(comp[static_cast<size_t>(f[0])])];
    int genus = 0;
    for (int c = 0; c < ncomp; ++c) {
        if (cm[static_cast<size_t>(c)] == 0) continue;  // single vertex, genus 0
        int chi = cn[static_cast<size_t>(c)] - cm[static_cast<size_t>(c)] + cf[static_cast<size_t>(c)];
        if ((2 - chi) % 2 != 0 || chi > 2)
            throw std::logic_error("face tracing produced an invalid Euler characteristic");
        genus += (2 - chi) / 2;
    }
    cert.genus = genus;
    return cert;
}

bool revalidate(const EmbeddingCertificate& cert) {
    try {
        EmbeddingCertificate fresh = face_trace(cert.graph, cert.rotation);
        if (fresh.genus != cert.genus) return false;
        if (fresh.faces.size() != cert.faces.size()) return false;
        size_t total = 0, expected = 0;
        for (const auto& f : fresh.faces) total += f.size();
        for (const auto& f : cert.faces) expected += f.size();
        return total == expected && total == 2 * static_cast<size_t>(cert.graph.edge_count());
    } catch (const std::exception&) {
        return false;
    }
}

EmbeddingCertificate relabel_certificate(const EmbeddingCertificate& cert,
                                         const std::vector<int>& perm) {
    EmbeddingCertificate out;
    out.graph = cert.graph.relabeled(perm);
    out.rotation.order.resize(cert.rotation.order.size());
    for (size_t v = 0; v < cert.rotation.order.size(); ++v) {
        std::vector<int> cyc;
        cyc.reserve(cert.rotation.order[v].size());
        for (int w : cert.rotation.order[v]) cyc.push_back(perm[static_cast<size_t>(w)]);
        out.rotation.order[static_cast<size_t>(perm[v])] = std::move(cyc);
    }
    out = face_trace(out.graph, out.rotation);
    return out;
}

std::optional<int> girth(const SimpleGraph& g) {
    const int n = g.vertex_count();
    int best = std::numeric_limits<int>::max();
    for (int s = 0; s < n; ++s) {
        std::vector<int> dist(static_cast<size_t>(n), -1), parent(static_cast<size_t>(n), -1);
        std::queue<int> q;
        dist[static_cast<size_t>(s)] = 0;
        q.push(s);
        while (!q.empty()) {
            int u = q.front();
            q.pop();
            if (2 * dist[static_cast<size_t>(u)] >= best) break;
            for (int v : g.neighbors(u)) {
                if (dist[static_cast<size_t>(v)] == -1) {
                    dist[static_cast<size_t>(v)] = dist[static_cast<size_t>(u)] + 1;
                    parent[static_cast<size_t>(v)] = u;
                    q.push(v);
                } else if (v != parent[static_cast<size_t>(u)]) {
                    best = std::min(best, dist[static_cast<size_t>(u)] + dist[static_cast<size_t>(v)] + 1);
                }
            }
        }
    }
    if (best == std::numeric_limits<int>::max()) return std::nullopt;
    return best;
}

int euler_lower_bound(const SimpleGraph& g) {
    auto comp = g.component_ids();
    int ncomp = comp.empty() ? 0 : 1 + *std::max_element(comp.begin(), comp.end());
    int total = 0;
    for (int c = 0; c < ncomp; ++c) {
        std::vector<int> verts;
        for (int v = 0; v < g.vertex_count(); ++v)
            if (comp[static_cast<size_t>(v)] == c) verts.push_back(v);
        auto [sub, back] = g.induced(verts);
        (void)back;
        const int n = sub.vertex_count(), m = sub.edge_count();
        if (n < 3 || m < n) continue;
        auto gr = girth(sub);
        if (!gr) continue;
        const int fmax = 2 * m / *gr;
        const int twice = 2 - n + m - fmax;  // 2g must be at least this
        if (twice > 0) total += (twice + 1) / 2;
    }
    return total;
}

std::vector<int> edge_triangle_profile(const SimpleGraph& g) {
    auto edges = g.edges();
    std::vector<int> out;
    out.reserve(edges.size());
    for (auto [u, v] : edges) {
        const auto& nu = g.neighbors(u);
        const auto& nv = g.neighbors(v);
        int count = 0;
        size_t i = 0, j = 0;
        while (i < nu.size() && j < nv.size()) {
            if (nu[i] == nv[j]) ++count, ++i, ++j;
            else if (nu[i] < nv[j]) ++i;
            else ++j;
        }
        out.push_back(count);
    }
    return out;
}

const char* pattern_name(Pattern p) {
    switch (p) {
        case Pattern::K5: return "K5";
        case Pattern::K33: return "K33";
        case Pattern::K4: return "K4";
        case Pattern::K23: return "K23";
        case Pattern::K22: return "K22";
    }
    return "?";
}

SimpleGraph pattern_graph(Pattern p) {
    switch (p) {
        case Pattern::K5: return graphs::complete(5);
        case Pattern::K33: return graphs::complete_bipartite(3, 3);
        case Pattern::K4: return graphs::complete(4);
        case Pattern::K23: return graphs::complete_bipartite(2, 3);
        case Pattern::K22: return graphs::complete_bipartite(2, 2);
    }
    throw std::invalid_argument("unknown pattern");
}

const char* bound_reason_name(BoundReason r) {
    switch (r) {
        case BoundReason::PlanarTest: return "planar-test";
        case BoundReason::EulerGirth: return "euler-girth";
        case BoundReason::SubgraphObstruction: return "subgraph-obstruction";
        case BoundReason::ExhaustedSearch: return "exhausted-search";
    }
    return "?";
}

}  // namespace rightcay::topo
