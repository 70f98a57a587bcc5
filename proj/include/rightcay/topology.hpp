#pragma once

#include <optional>
#include <random>
#include <string>
#include <vector>

#include "rightcay/graph.hpp"

namespace rightcay::topo {

/// Per-vertex cyclic order of incident edge-ends, given as the cyclic
/// order of neighbors (the graph is simple, so the two coincide). A
/// rotation system is exactly a 2-cell embedding on an orientable surface.
struct RotationSystem {
    std::vector<std::vector<int>> order;
};

RotationSystem default_rotation(const SimpleGraph& g);  // sorted neighbors
RotationSystem random_rotation(const SimpleGraph& g, std::mt19937& rng);

/// A certified embedding: faces are re-derivable from the rotation by face
/// tracing, and the genus satisfies n - m + f = 2 - 2g on each component.
struct EmbeddingCertificate {
    SimpleGraph graph;
    RotationSystem rotation;
    std::vector<std::vector<int>> faces;  // closed vertex walks
    int genus = 0;
};

/// Trace faces of the rotation system and derive the genus. Throws on a
/// malformed rotation. Disconnected input is traced per component and the
/// genus summed.
EmbeddingCertificate face_trace(const SimpleGraph& g, const RotationSystem& rot);

/// Re-derives faces and genus from graph+rotation; true iff they match.
bool revalidate(const EmbeddingCertificate& cert);

/// Relabel a certificate's vertices: new vertex of v is perm[v].
EmbeddingCertificate relabel_certificate(const EmbeddingCertificate& cert,
                                         const std::vector<int>& perm);

enum class Pattern { K5, K33, K4, K23, K22 };

const char* pattern_name(Pattern p);
SimpleGraph pattern_graph(Pattern p);

/// A subdivision witness: branch vertices plus internally-disjoint paths
/// realizing the pattern's edges.
struct KuratowskiWitness {
    Pattern pattern;
    std::vector<int> branch_vertices;
    std::vector<std::vector<int>> paths;  // paths[i] realizes pattern edge i
};

bool validate_witness(const SimpleGraph& g, const KuratowskiWitness& w);

/// Subgraph of g formed by the witness paths, as a graph on g's vertices.
SimpleGraph witness_subgraph(const SimpleGraph& g, const KuratowskiWitness& w);

/// Backtracking search over branch assignments with disjoint-path
/// extension. Deterministic; finds the witness with the lexicographically
/// smallest branch assignment under the pattern's canonical ordering.
/// Throws above 100 vertices.
std::optional<KuratowskiWitness> find_subdivision(const SimpleGraph& g, Pattern pattern);

struct PlanarityResult {
    bool planar = false;
    std::optional<EmbeddingCertificate> embedding;  // genus 0 when planar
    std::optional<KuratowskiWitness> witness;       // K5 or K33 subdivision otherwise
};

PlanarityResult is_planar(const SimpleGraph& g);

/// Planarity flag only, no certificate or witness.
bool planar(const SimpleGraph& g);

struct OuterPlanarityResult {
    bool outer_planar = false;
    std::optional<EmbeddingCertificate> embedding;  // planar, with one face meeting all vertices
    int outer_face = -1;                            // index into embedding->faces
    std::optional<KuratowskiWitness> witness;       // K4 or K23 subdivision otherwise
};

OuterPlanarityResult is_outer_planar(const SimpleGraph& g);

/// Length of a shortest cycle; nullopt for forests.
std::optional<int> girth(const SimpleGraph& g);

/// Least g with n - m + f = 2 - 2g satisfiable under f <= 2m/girth, summed
/// over components and floored at 0. Purely counting; combine with a
/// non-planarity witness for stronger bounds.
int euler_lower_bound(const SimpleGraph& g);

/// Number of triangles through each edge, aligned with g.edges().
std::vector<int> edge_triangle_profile(const SimpleGraph& g);

enum class BoundReason { PlanarTest, EulerGirth, SubgraphObstruction, ExhaustedSearch };

const char* bound_reason_name(BoundReason r);

struct GenusBounds {
    int lower = 0;
    BoundReason lower_reason = BoundReason::PlanarTest;
    std::optional<int> upper;
    std::optional<EmbeddingCertificate> certificate;
    bool exact() const { return upper.has_value() && *upper == lower; }
};

/// Branch-and-bound over rotation systems built edge by edge: inserting an
/// edge across two distinct faces of the same component adds a handle, so
/// the partial genus is monotone and prunes against the target. The budget
/// counts node expansions; exhausting it yields certified bounds rather
/// than an error.
GenusBounds exact_genus(const SimpleGraph& g, long long budget = 10'000'000);

/// Local search over rotation systems minimizing the traced genus. The
/// result is a valid certificate whose genus is an upper bound only.
EmbeddingCertificate heuristic_upper(const SimpleGraph& g, long long effort = 200'000,
                                     unsigned seed = 1);

}  // namespace rightcay::topo
