#pragma once

#include <optional>

#include "rightcay/graph.hpp"
#include "rightcay/multable.hpp"

namespace rightcay::cayley {

/// Cayley color graph under the right action: one arc u -> u*c per element
/// u and generator c, colored by the generator's position in c.
ColorDigraph cayley_color_graph(const algebra::MulTable& s, const algebra::GeneratingSet& c);

/// Drop directions, colors, loops and multiplicities.
SimpleGraph suppress(const ColorDigraph& d);

SimpleGraph cayley_graph(const algebra::MulTable& s, const algebra::GeneratingSet& c);

/// Vertex bijection x -> y preserving adjacency both ways, or nullopt.
/// `forced` pins images of chosen vertices. Both graphs must have at most
/// 500 vertices.
std::optional<std::vector<int>> graph_isomorphic(
    const SimpleGraph& x, const SimpleGraph& y,
    const std::vector<std::pair<int, int>>& forced = {});

/// True iff for every vertex v there is an automorphism mapping 0 to v.
bool vertex_transitive(const SimpleGraph& g);

}  // namespace rightcay::cayley
