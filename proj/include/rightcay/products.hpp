#pragma once

#include <optional>
#include <string>

#include "rightcay/cayley.hpp"
#include "rightcay/graph.hpp"
#include "rightcay/multable.hpp"

namespace rightcay::products {

/// Outcome of checking one of the product identities. When the identity
/// holds the witness carries the canonical equality; otherwise it carries a
/// concrete counterexample (an arc or edge present on one side only).
struct ProductWitness {
    std::string left_id;
    std::string right_id;
    std::string kind;
    bool holds = false;
    std::string counterexample;  // empty when holds
};

/// Cross (tensor) product at the colored level: arcs pair with arcs, so
/// loops participate. Vertex (u1,u2) has index u1*|y| + u2, color (c,d)
/// index c*|colors(y)| + d.
ColorDigraph cross_product(const ColorDigraph& x, const ColorDigraph& y);

/// Cross product of simple graphs via their symmetric digraph encodings.
SimpleGraph cross_product(const SimpleGraph& x, const SimpleGraph& y);

/// Lexicographic product X[Y]: (u1,u2) ~ (v1,v2) iff u1 ~ v1, or u1 = v1
/// and u2 ~ v2. Vertex (u1,u2) has index u1*|y| + u2.
SimpleGraph lexicographic(const SimpleGraph& x, const SimpleGraph& y);

/// X[K̄_r]: every vertex becomes r independent vertices, every edge a K_{r,r}.
SimpleGraph blowup(const SimpleGraph& x, int r);

/// Cartesian (box) product.
SimpleGraph box_product(const SimpleGraph& x, const SimpleGraph& y);

/// Checks Cay(S x T, C x D) = Cay(S,C) x Cay(T,D) as colored digraphs,
/// under the canonical pair indexing (exact equality, not isomorphism).
ProductWitness verify_cross_identity(const algebra::MulTable& s, const algebra::GeneratingSet& cs,
                                     const algebra::MulTable& t, const algebra::GeneratingSet& dt);

/// Checks Cay(S x T, (C x T) u ({1_S} x D)) = Cay(S,C)[Cay(T,D)] as simple
/// graphs; requires S to have an identity. Also records whether tT = T for
/// every t, the right-group criterion the identity is equivalent to.
struct LexWitness {
    ProductWitness witness;
    bool t_is_right_group = false;  // tT = T for all t in T
};

LexWitness verify_lex_identity(const algebra::MulTable& s, const algebra::GeneratingSet& cs,
                               const algebra::MulTable& t, const algebra::GeneratingSet& dt);

}  // namespace rightcay::products
