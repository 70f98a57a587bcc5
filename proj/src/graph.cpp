#include "rightcay/graph.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace rightcay {

SimpleGraph::SimpleGraph(int n) : n_(n), adj_(static_cast<size_t>(n)) {
    if (n < 0) throw std::invalid_argument("vertex count must be non-negative");
}

SimpleGraph SimpleGraph::from_edges(int n, const std::vector<std::pair<int, int>>& edges) {
    SimpleGraph g(n);
    for (auto [u, v] : edges) g.add_edge(u, v);
    return g;
}

void SimpleGraph::add_edge(int u, int v) {
    if (u < 0 || v < 0 || u >= n_ || v >= n_) throw std::invalid_argument("edge endpoint out of range");
    if (u == v) throw std::invalid_argument("loops are not allowed in a simple graph");
    auto& nu = adj_[static_cast<size_t>(u)];
    auto it = std::lower_bound(nu.begin(), nu.end(), v);
    if (it != nu.end() && *it == v) return;
    nu.insert(it, v);
    auto& nv = adj_[static_cast<size_t>(v)];
    nv.insert(std::lower_bound(nv.begin(), nv.end(), u), u);
    ++m_;
}

bool SimpleGraph::has_edge(int u, int v) const {
    if (u < 0 || v < 0 || u >= n_ || v >= n_ || u == v) return false;
    const auto& nu = adj_[static_cast<size_t>(u)];
    return std::binary_search(nu.begin(), nu.end(), v);
}

std::vector<std::pair<int, int>> SimpleGraph::edges() const {
    std::vector<std::pair<int, int>> out;
    out.reserve(static_cast<size_t>(m_));
    for (int u = 0; u < n_; ++u)
        for (int v : adj_[static_cast<size_t>(u)])
            if (u < v) out.emplace_back(u, v);
    return out;
}

std::vector<int> SimpleGraph::component_ids() const {
    std::vector<int> comp(static_cast<size_t>(n_), -1);
    int c = 0;
    for (int s = 0; s < n_; ++s) {
        if (comp[static_cast<size_t>(s)] != -1) continue;
        std::vector<int> stack{s};
        comp[static_cast<size_t>(s)] = c;
        while (!stack.empty()) {
            int u = stack.back();
            stack.pop_back();
            for (int v : adj_[static_cast<size_t>(u)])
                if (comp[static_cast<size_t>(v)] == -1) {
                    comp[static_cast<size_t>(v)] = c;
                    stack.push_back(v);
                }
        }
        ++c;
    }
    return comp;
}

bool SimpleGraph::connected() const {
    if (n_ <= 1) return true;
    auto comp = component_ids();
    return std::all_of(comp.begin(), comp.end(), [](int c) { return c == 0; });
}

std::pair<SimpleGraph, std::vector<int>> SimpleGraph::induced(const std::vector<int>& vertices) const {
    std::vector<int> old_of = vertices;
    std::vector<int> new_of(static_cast<size_t>(n_), -1);
    for (size_t i = 0; i < vertices.size(); ++i) new_of[static_cast<size_t>(vertices[i])] = static_cast<int>(i);
    SimpleGraph g(static_cast<int>(vertices.size()));
    for (int u : vertices)
        for (int v : adj_[static_cast<size_t>(u)])
            if (u < v && new_of[static_cast<size_t>(v)] != -1)
                g.add_edge(new_of[static_cast<size_t>(u)], new_of[static_cast<size_t>(v)]);
    return {std::move(g), std::move(old_of)};
}

SimpleGraph SimpleGraph::relabeled(const std::vector<int>& perm) const {
    SimpleGraph g(n_);
    for (auto [u, v] : edges()) g.add_edge(perm[static_cast<size_t>(u)], perm[static_cast<size_t>(v)]);
    if (!labels.empty()) {
        g.labels.resize(static_cast<size_t>(n_));
        for (int v = 0; v < n_; ++v) g.labels[static_cast<size_t>(perm[static_cast<size_t>(v)])] = labels[static_cast<size_t>(v)];
    }
    return g;
}

namespace graphs {

SimpleGraph edgeless(int n) { return SimpleGraph(n); }

SimpleGraph complete(int n) {
    SimpleGraph g(n);
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v) g.add_edge(u, v);
    return g;
}

SimpleGraph complete_bipartite(int a, int b) {
    SimpleGraph g(a + b);
    for (int u = 0; u < a; ++u)
        for (int v = 0; v < b; ++v) g.add_edge(u, a + v);
    return g;
}

SimpleGraph cycle(int n) {
    if (n < 3) throw std::invalid_argument("cycle needs n >= 3");
    SimpleGraph g(n);
    for (int i = 0; i < n; ++i) g.add_edge(i, (i + 1) % n);
    return g;
}

SimpleGraph path(int n) {
    SimpleGraph g(n);
    for (int i = 0; i + 1 < n; ++i) g.add_edge(i, i + 1);
    return g;
}

}  // namespace graphs

namespace {

const char* kPalette[] = {"#e41a1c", "#377eb8", "#4daf4a", "#984ea3",
                          "#ff7f00", "#a65628", "#f781bf", "#999999"};

std::string label_or_index(const std::vector<std::string>& labels, int v) {
    if (v < static_cast<int>(labels.size()) && !labels[static_cast<size_t>(v)].empty())
        return labels[static_cast<size_t>(v)];
    return std::to_string(v);
}

}  // namespace

std::string to_dot(const ColorDigraph& d) {
    std::ostringstream os;
    os << "digraph cayley {\n";
    for (int v = 0; v < d.vertex_count; ++v)
        os << "  " << v << " [label=\"" << label_or_index(d.labels, v) << "\"];\n";
    for (const auto& a : d.arcs)
        os << "  " << a.src << " -> " << a.dst << " [color=\"" << kPalette[a.color % 8]
           << "\", label=\"c" << a.color << "\"];\n";
    os << "}\n";
    return os.str();
}

std::string to_dot(const SimpleGraph& g) {
    std::ostringstream os;
    os << "graph g {\n";
    for (int v = 0; v < g.vertex_count(); ++v)
        os << "  " << v << " [label=\"" << label_or_index(g.labels, v) << "\"];\n";
    for (auto [u, v] : g.edges()) os << "  " << u << " -- " << v << ";\n";
    os << "}\n";
    return os.str();
}

std::string to_edge_list(const SimpleGraph& g) {
    std::ostringstream os;
    os << "# vertices " << g.vertex_count() << "\n";
    for (auto [u, v] : g.edges()) os << u << " " << v << "\n";
    return os.str();
}

SimpleGraph read_edge_list(const std::string& text) {
    std::istringstream is(text);
    std::string line;
    std::vector<std::pair<int, int>> edges;
    int n = 0;
    while (std::getline(is, line)) {
        std::istringstream ls(line);
        std::string first;
        if (!(ls >> first)) continue;
        if (first == "#") {
            std::string key;
            int value = 0;
            if (ls >> key >> value && key == "vertices") n = std::max(n, value);
            continue;
        }
        int u = std::stoi(first), v = 0;
        if (!(ls >> v)) throw std::invalid_argument("bad edge list line: " + line);
        if (u < 0 || v < 0) throw std::invalid_argument("negative vertex in edge list");
        n = std::max({n, u + 1, v + 1});
        edges.emplace_back(u, v);
    }
    return SimpleGraph::from_edges(n, edges);
}

}  // namespace rightcay
