#pragma once

#include <string>

#include "rightcay/topology.hpp"

namespace rightcay::embeddings {

/// Genus-1 certificate for Cay(Z_n x R_2, {1} x R_2) under the canonical
/// indexing (g, r_i) -> 2g + i: a square grid on the torus with 2n vertices,
/// 4n edges and 2n quadrilateral faces. Defined for n >= 4 (smaller cases
/// are planar or complete bipartite).
topo::EmbeddingCertificate torus_square_grid(int n);

/// Genus-1 certificate for Cay(Z_3 x R_3, {1} x R_3), the complete
/// tripartite K_{3,3,3} drawn as a triangular grid on the torus: 9 vertices,
/// 27 edges, 18 triangular faces.
topo::EmbeddingCertificate torus_triangular_grid_Z3R3();

/// Genus-1 certificate for K_{r,r}, r in {3, 4}, with parts {0..r-1} and
/// {r..2r-1}.
topo::EmbeddingCertificate torus_Krr(int r);

/// Genus-3 certificate for (C_3 box K_2)[K-bar_2], the 6-regular graph on 12
/// vertices with 36 edges, regenerated by the seeded heuristic search and
/// validated by face tracing. Throws if the search fails within its effort.
topo::EmbeddingCertificate triple_torus_example();

/// Certificate text format: the graph's per-vertex cyclic neighbor order
/// plus the claimed genus. Loading re-derives faces and genus and refuses a
/// mismatch; the stored genus is never trusted.
std::string certificate_to_text(const topo::EmbeddingCertificate& cert);
topo::EmbeddingCertificate certificate_from_text(const std::string& text);

}  // namespace rightcay::embeddings
