#pragma once

#include <string>
#include <utility>
#include <vector>

namespace rightcay {

/// Directed multigraph with generator-colored arcs; loops and parallel
/// arcs are kept. This is the colored object the graph products act on.
struct ColorDigraph {
    int vertex_count = 0;
    struct Arc {
        int src, dst, color;
        auto operator<=>(const Arc&) const = default;
    };
    std::vector<Arc> arcs;
    std::vector<std::string> labels;
};

/// Undirected, loop-free, simple graph. Edges are stored as sorted pairs
/// (u < v); neighbor lists are kept sorted.
class SimpleGraph {
public:
    SimpleGraph() = default;
    explicit SimpleGraph(int n);

    static SimpleGraph from_edges(int n, const std::vector<std::pair<int, int>>& edges);

    void add_edge(int u, int v);  // rejects loops, ignores duplicates
    bool has_edge(int u, int v) const;

    int vertex_count() const { return n_; }
    int edge_count() const { return m_; }
    int degree(int v) const { return static_cast<int>(adj_[static_cast<size_t>(v)].size()); }
    const std::vector<int>& neighbors(int v) const { return adj_[static_cast<size_t>(v)]; }

    std::vector<std::pair<int, int>> edges() const;  // sorted (u < v)

    std::vector<int> component_ids() const;
    bool connected() const;  // true for the empty graph and singletons

    /// Induced subgraph on the given vertices (new labels 0..k-1 in the
    /// given order); second result maps new index -> old vertex.
    std::pair<SimpleGraph, std::vector<int>> induced(const std::vector<int>& vertices) const;

    /// New graph with vertex v renamed perm[v].
    SimpleGraph relabeled(const std::vector<int>& perm) const;

    bool operator==(const SimpleGraph& o) const { return n_ == o.n_ && adj_ == o.adj_; }

    std::vector<std::string> labels;  // optional display labels

private:
    int n_ = 0;
    int m_ = 0;
    std::vector<std::vector<int>> adj_;
};

namespace graphs {
SimpleGraph edgeless(int n);
SimpleGraph complete(int n);
SimpleGraph complete_bipartite(int a, int b);  // parts {0..a-1}, {a..a+b-1}
SimpleGraph cycle(int n);                      // n >= 3
SimpleGraph path(int n);
}  // namespace graphs

std::string to_dot(const ColorDigraph& d);
std::string to_dot(const SimpleGraph& g);
std::string to_edge_list(const SimpleGraph& g);
SimpleGraph read_edge_list(const std::string& text);

}  // namespace rightcay
