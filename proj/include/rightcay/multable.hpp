#pragma once

#include <optional>
#include <string>
#include <vector>

namespace rightcay::algebra {

/// A finite semigroup given by an explicit multiplication table.
/// Elements are the indices 0..order-1; names are display-only.
/// Associativity is checked exhaustively on construction for order <= 64,
/// and on a random sample of >= 1000 triples above that.
struct MulTable {
    int order = 0;
    std::vector<int> table;               // row-major, order x order
    std::vector<std::string> names;
    std::optional<int> identity;

    int at(int i, int j) const { return table[static_cast<size_t>(i) * order + j]; }

    bool is_group() const;
    const std::string& name_of(int x) const { return names[static_cast<size_t>(x)]; }
};

/// A set of generators, stored as sorted unique element indices.
struct GeneratingSet {
    std::vector<int> elements;
};

GeneratingSet make_generating_set(const MulTable& s, std::vector<int> elements);

/// Validates entries, associativity and (if given) the identity, then
/// detects a two-sided identity when none was supplied.
MulTable make_table(int order, std::vector<int> table, std::vector<std::string> names = {});

MulTable make_cyclic(int n);
MulTable make_dihedral(int n);       // order 2n, n >= 2
MulTable make_symmetric(int n);      // n <= 5
MulTable make_alternating(int n);    // n <= 5
MulTable make_right_zero(int r);     // r_i r_j = r_j
MulTable make_left_zero(int r);      // t u = t; not a right group for r >= 2

MulTable direct_product(const MulTable& a, const MulTable& b);

/// Least k >= 1 with x^k = identity. Requires a group.
int element_order(const MulTable& s, int x);

/// Closure of the given elements under the table product.
std::vector<int> closure(const MulTable& s, const std::vector<int>& elements);

bool generates(const MulTable& s, const GeneratingSet& c);

/// All inclusion-minimal generating sets of a group, deduplicated and in
/// lexicographic order of their sorted element indices. Throws when the
/// group order exceeds the cap.
std::vector<GeneratingSet> minimal_generating_sets(const MulTable& s, int order_cap = 120);

/// True iff some pair of order-2 elements generates the group.
bool two_involutions_generate(const MulTable& s);

bool is_involution(const MulTable& s, int x);

/// Parse result of a group-spec string such as "Z6", "D4" or "Z2xD5xR2".
struct GroupSpec {
    MulTable table;
    std::vector<int> factor_sizes;    // sizes of the factors, left to right
    std::string text;                 // normalized spec
};

GroupSpec parse_group_spec(const std::string& spec);

/// Parse a generator list against a spec. Accepts plain element indices and
/// tuples such as "(1,*)" whose arity matches the number of factors; '*'
/// expands over all elements of that factor.
std::vector<int> parse_generators(const GroupSpec& spec, const std::string& gens);

}  // namespace rightcay::algebra
