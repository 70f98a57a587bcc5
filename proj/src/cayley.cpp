#include "rightcay/cayley.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>

namespace rightcay::cayley {

ColorDigraph cayley_color_graph(const algebra::MulTable& s, const algebra::GeneratingSet& c) {
    ColorDigraph d;
    d.vertex_count = s.order;
    d.labels = s.names;
    d.arcs.reserve(static_cast<size_t>(s.order) * c.elements.size());
    for (int u = 0; u < s.order; ++u)
        for (size_t k = 0; k < c.elements.size(); ++k)
            d.arcs.push_back({u, s.at(u, c.elements[k]), static_cast<int>(k)});
    return d;
}

SimpleGraph suppress(const ColorDigraph& d) {
    SimpleGraph g(d.vertex_count);
    g.labels = d.labels;
    for (const auto& a : d.arcs)
        if (a.src != a.dst) g.add_edge(a.src, a.dst);
    return g;
}

SimpleGraph cayley_graph(const algebra::MulTable& s, const algebra::GeneratingSet& c) {
    return suppress(cayley_color_graph(s, c));
}

namespace {

// Iterated neighborhood-color refinement. Returns per-vertex color ids,
// canonical across graphs (colors are ranks of sorted signatures).
std::vector<int> refine_colors(const SimpleGraph& g, std::vector<int> colors) {
    const int n = g.vertex_count();
    while (true) {
        std::vector<std::pair<std::vector<int>, int>> sig(static_cast<size_t>(n));
        for (int v = 0; v < n; ++v) {
            std::vector<int> nb;
            nb.reserve(g.neighbors(v).size() + 1);
            nb.push_back(colors[static_cast<size_t>(v)]);
            for (int u : g.neighbors(v)) nb.push_back(colors[static_cast<size_t>(u)]);
            std::sort(nb.begin() + 1, nb.end());
            sig[static_cast<size_t>(v)] = {std::move(nb), v};
        }
        std::map<std::vector<int>, int> rank;
        for (const auto& [key, v] : sig) rank.emplace(key, 0);
        int next = 0;
        for (auto& [key, r] : rank) r = next++;
        std::vector<int> fresh(static_cast<size_t>(n));
        for (const auto& [key, v] : sig) fresh[static_cast<size_t>(v)] = rank[key];
        if (fresh == colors) return colors;
        colors = std::move(fresh);
    }
}

struct IsoSearch {
    const SimpleGraph& x;
    const SimpleGraph& y;
    std::vector<int> map_xy;   // -1 when unassigned
    std::vector<int> map_yx;
    std::vector<int> order;    // vertices of x in assignment order

    bool consistent(int xv, int yv) const {
        for (int xu : x.neighbors(xv)) {
            int yu = map_xy[static_cast<size_t>(xu)];
            if (yu != -1 && !y.has_edge(yv, yu)) return false;
        }
        // non-adjacency must be preserved as well
        int mapped_neighbors = 0;
        for (int xu : x.neighbors(xv))
            if (map_xy[static_cast<size_t>(xu)] != -1) ++mapped_neighbors;
        int y_mapped_neighbors = 0;
        for (int yu : y.neighbors(yv))
            if (map_yx[static_cast<size_t>(yu)] != -1) ++y_mapped_neighbors;
        return mapped_neighbors == y_mapped_neighbors;
    }

    bool extend(size_t depth, const std::vector<int>& cx, const std::vector<int>& cy) {
        if (depth == order.size()) return true;
        int xv = order[depth];
        for (int yv = 0; yv < y.vertex_count(); ++yv) {
            if (map_yx[static_cast<size_t>(yv)] != -1) continue;
            if (cx[static_cast<size_t>(xv)] != cy[static_cast<size_t>(yv)]) continue;
            if (!consistent(xv, yv)) continue;
            map_xy[static_cast<size_t>(xv)] = yv;
            map_yx[static_cast<size_t>(yv)] = xv;
            if (extend(depth + 1, cx, cy)) return true;
            map_xy[static_cast<size_t>(xv)] = -1;
            map_yx[static_cast<size_t>(yv)] = -1;
        }
        return false;
    }
};

}  // namespace

std::optional<std::vector<int>> graph_isomorphic(const SimpleGraph& x, const SimpleGraph& y,
                                                 const std::vector<std::pair<int, int>>& forced) {
    if (x.vertex_count() > 500 || y.vertex_count() > 500)
        throw std::invalid_argument("graph_isomorphic: vertex count exceeds 500");
    const int n = x.vertex_count();
    if (n != y.vertex_count() || x.edge_count() != y.edge_count()) return std::nullopt;
    if (n == 0) return std::vector<int>{};

    std::vector<int> cx(static_cast<size_t>(n), 0), cy(static_cast<size_t>(n), 0);
    for (size_t i = 0; i < forced.size(); ++i) {
        auto [xv, yv] = forced[i];
        cx[static_cast<size_t>(xv)] = -static_cast<int>(i) - 1;
        cy[static_cast<size_t>(yv)] = -static_cast<int>(i) - 1;
    }
    cx = refine_colors(x, std::move(cx));
    cy = refine_colors(y, std::move(cy));

    auto histogram = [n](const std::vector<int>& c) {
        std::vector<int> h = c;
        std::sort(h.begin(), h.end());
        return h;
    };
    if (histogram(cx) != histogram(cy)) return std::nullopt;

    IsoSearch search{x, y,
                     std::vector<int>(static_cast<size_t>(n), -1),
                     std::vector<int>(static_cast<size_t>(n), -1),
                     {}};
    // assign rarest colors first, then by degree
    std::map<int, int> count;
    for (int c : cx) ++count[c];
    search.order.resize(static_cast<size_t>(n));
    for (int v = 0; v < n; ++v) search.order[static_cast<size_t>(v)] = v;
    std::sort(search.order.begin(), search.order.end(), [&](int a, int b) {
        int fa = count[cx[static_cast<size_t>(a)]], fb = count[cx[static_cast<size_t>(b)]];
        if (fa != fb) return fa < fb;
        if (x.degree(a) != x.degree(b)) return x.degree(a) > x.degree(b);
        return a < b;
    });
    if (!search.extend(0, cx, cy)) return std::nullopt;
    return search.map_xy;
}

bool vertex_transitive(const SimpleGraph& g) {
    for (int v = 1; v < g.vertex_count(); ++v)
        if (!graph_isomorphic(g, g, {{0, v}})) return false;
    return true;
}

}  // namespace rightcay::cayley
