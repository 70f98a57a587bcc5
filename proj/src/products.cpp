#include "rightcay/products.hpp"

#include <algorithm>
#include <set>
#include <sstream>
#include <stdexcept>

namespace rightcay::products {

namespace {

int color_count(const ColorDigraph& d) {
    int c = 0;
    for (const auto& a : d.arcs) c = std::max(c, a.color + 1);
    return c;
}

ColorDigraph symmetric_encoding(const SimpleGraph& g) {
    ColorDigraph d;
    d.vertex_count = g.vertex_count();
    d.labels = g.labels;
    for (auto [u, v] : g.edges()) {
        d.arcs.push_back({u, v, 0});
        d.arcs.push_back({v, u, 0});
    }
    return d;
}

}  // namespace

ColorDigraph cross_product(const ColorDigraph& x, const ColorDigraph& y) {
    ColorDigraph d;
    d.vertex_count = x.vertex_count * y.vertex_count;
    const int cy = std::max(1, color_count(y));
    d.arcs.reserve(x.arcs.size() * y.arcs.size());
    for (const auto& a : x.arcs)
        for (const auto& b : y.arcs)
            d.arcs.push_back({a.src * y.vertex_count + b.src,
                              a.dst * y.vertex_count + b.dst,
                              a.color * cy + b.color});
    if (!x.labels.empty() && !y.labels.empty()) {
        d.labels.resize(static_cast<size_t>(d.vertex_count));
        for (int u = 0; u < x.vertex_count; ++u)
            for (int v = 0; v < y.vertex_count; ++v)
                d.labels[static_cast<size_t>(u * y.vertex_count + v)] =
                    "(" + x.labels[static_cast<size_t>(u)] + "," + y.labels[static_cast<size_t>(v)] + ")";
    }
    return d;
}

SimpleGraph cross_product(const SimpleGraph& x, const SimpleGraph& y) {
    return cayley::suppress(cross_product(symmetric_encoding(x), symmetric_encoding(y)));
}

SimpleGraph lexicographic(const SimpleGraph& x, const SimpleGraph& y) {
    const int ny = y.vertex_count();
    SimpleGraph g(x.vertex_count() * ny);
    for (auto [u1, v1] : x.edges())
        for (int u2 = 0; u2 < ny; ++u2)
            for (int v2 = 0; v2 < ny; ++v2) g.add_edge(u1 * ny + u2, v1 * ny + v2);
    for (int u1 = 0; u1 < x.vertex_count(); ++u1)
        for (auto [u2, v2] : y.edges()) g.add_edge(u1 * ny + u2, u1 * ny + v2);
    return g;
}

SimpleGraph blowup(const SimpleGraph& x, int r) {
    if (r < 1) throw std::invalid_argument("blowup: r must be >= 1");
    return lexicographic(x, graphs::edgeless(r));
}

SimpleGraph box_product(const SimpleGraph& x, const SimpleGraph& y) {
    const int ny = y.vertex_count();
    SimpleGraph g(x.vertex_count() * ny);
    for (auto [u1, v1] : x.edges())
        for (int w = 0; w < ny; ++w) g.add_edge(u1 * ny + w, v1 * ny + w);
    for (int w = 0; w < x.vertex_count(); ++w)
        for (auto [u2, v2] : y.edges()) g.add_edge(w * ny + u2, w * ny + v2);
    return g;
}

ProductWitness verify_cross_identity(const algebra::MulTable& s, const algebra::GeneratingSet& cs,
                                     const algebra::MulTable& t, const algebra::GeneratingSet& dt) {
    ProductWitness w;
    w.kind = "cross";
    w.left_id = "Cay(SxT, CxD)";
    w.right_id = "Cay(S,C) x Cay(T,D)";

    const algebra::MulTable st = algebra::direct_product(s, t);
    std::vector<int> cd;
    for (int c : cs.elements)
        for (int d : dt.elements) cd.push_back(c * t.order + d);
    ColorDigraph direct = cayley::cayley_color_graph(st, algebra::make_generating_set(st, cd));
    ColorDigraph product = cross_product(cayley::cayley_color_graph(s, cs),
                                         cayley::cayley_color_graph(t, dt));

    // The canonical generator indexing agrees: generator (c_i, d_j) has
    // color i*|D|+j on both sides because cd was built in row-major order.
    auto key = [](const ColorDigraph& d) {
        std::vector<ColorDigraph::Arc> a = d.arcs;
        std::sort(a.begin(), a.end());
        return a;
    };
    auto ka = key(direct);
    auto kb = key(product);
    if (direct.vertex_count == product.vertex_count && ka == kb) {
        w.holds = true;
        return w;
    }
    w.holds = false;
    std::vector<ColorDigraph::Arc> diff;
    std::set_symmetric_difference(ka.begin(), ka.end(), kb.begin(), kb.end(), std::back_inserter(diff));
    if (!diff.empty()) {
        std::ostringstream os;
        os << "arc (" << diff[0].src << " -> " << diff[0].dst << ", color " << diff[0].color
           << ") present on one side only";
        w.counterexample = os.str();
    } else {
        w.counterexample = "vertex counts differ";
    }
    return w;
}

LexWitness verify_lex_identity(const algebra::MulTable& s, const algebra::GeneratingSet& cs,
                               const algebra::MulTable& t, const algebra::GeneratingSet& dt) {
    if (!s.identity) throw std::invalid_argument("verify_lex_identity: S must be a monoid");
    LexWitness out;
    out.witness.kind = "lexicographic";
    out.witness.left_id = "Cay(SxT, (CxT) u ({1}xD))";
    out.witness.right_id = "Cay(S,C)[Cay(T,D)]";

    bool right_group = true;
    for (int x = 0; x < t.order && right_group; ++x) {
        std::set<int> row;
        for (int u = 0; u < t.order; ++u) row.insert(t.at(x, u));
        right_group = static_cast<int>(row.size()) == t.order;
    }
    out.t_is_right_group = right_group;

    const algebra::MulTable st = algebra::direct_product(s, t);
    std::vector<int> gens;
    for (int c : cs.elements)
        for (int u = 0; u < t.order; ++u) gens.push_back(c * t.order + u);
    for (int d : dt.elements) gens.push_back(*s.identity * t.order + d);
    SimpleGraph lhs = cayley::cayley_graph(st, algebra::make_generating_set(st, gens));
    SimpleGraph rhs = lexicographic(cayley::cayley_graph(s, cs), cayley::cayley_graph(t, dt));

    if (lhs == rhs) {
        out.witness.holds = true;
        return out;
    }
    out.witness.holds = false;
    auto ea = lhs.edges();
    auto eb = rhs.edges();
    std::vector<std::pair<int, int>> diff;
    std::set_symmetric_difference(ea.begin(), ea.end(), eb.begin(), eb.end(), std::back_inserter(diff));
    std::ostringstream os;
    if (!diff.empty()) {
        bool in_lhs = std::binary_search(ea.begin(), ea.end(), diff[0]);
        os << "edge {" << diff[0].first << "," << diff[0].second << "} in "
           << (in_lhs ? "Cay(SxT) only" : "the lexicographic product only");
    } else {
        os << "vertex counts differ";
    }
    out.witness.counterexample = os.str();
    return out;
}

}  // namespace rightcay::products
