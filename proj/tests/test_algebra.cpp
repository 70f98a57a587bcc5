#include <set>

#include "doctest.h"
#include "rightcay/multable.hpp"

using namespace rightcay::algebra;

namespace {

// independent subset-enumeration oracle for generating sets of small tables
std::set<std::vector<int>> brute_minimal_sets(const MulTable& s) {
    std::set<std::vector<int>> generating;
    const int n = s.order;
    for (int mask = 1; mask < (1 << n); ++mask) {
        std::vector<int> set;
        for (int i = 0; i < n; ++i)
            if (mask & (1 << i)) set.push_back(i);
        if (static_cast<int>(closure(s, set).size()) == n) generating.insert(set);
    }
    std::set<std::vector<int>> minimal;
    for (const auto& set : generating) {
        bool has_proper_subset = false;
        for (size_t drop = 0; drop < set.size() && !has_proper_subset; ++drop) {
            std::vector<int> sub;
            for (size_t i = 0; i < set.size(); ++i)
                if (i != drop) sub.push_back(set[i]);
            has_proper_subset = !sub.empty() && generating.count(sub) > 0;
        }
        if (!has_proper_subset) minimal.insert(set);
    }
    return minimal;
}

}  // namespace

TEST_CASE("cyclic groups") {
    MulTable z1 = make_cyclic(1);
    CHECK(z1.order == 1);
    CHECK(z1.identity == 0);

    MulTable z6 = make_cyclic(6);
    CHECK(z6.at(2, 3) == 5);
    CHECK(z6.at(3, 3) == 0);
    CHECK(z6.is_group());

    MulTable z4 = make_cyclic(4);
    // repeated-multiplication oracle for the order of element 1
    int p = 1, k = 1;
    while (p != 0) {
        p = z4.at(p, 1);
        ++k;
    }
    CHECK(k == 4);  // walked 1 -> 2 -> 3 -> 0
    CHECK(element_order(z4, 1) == 4);
    CHECK(element_order(z6, 1) == 6);
    CHECK(element_order(z6, 2) == 3);
    CHECK(element_order(z6, 3) == 2);
}

TEST_CASE("dihedral groups") {
    CHECK_THROWS(make_dihedral(1));

    MulTable d2 = make_dihedral(2);
    CHECK(d2.order == 4);
    int involutions = 0;
    for (int x = 0; x < d2.order; ++x)
        if (is_involution(d2, x)) ++involutions;
    CHECK(involutions == 3);  // Klein four group

    MulTable d3 = make_dihedral(3);
    CHECK(d3.order == 6);
    involutions = 0;
    for (int x = 0; x < d3.order; ++x)
        if (d3.at(x, x) == *d3.identity && x != *d3.identity) ++involutions;
    CHECK(involutions == 3);

    CHECK(make_dihedral(5).order == 10);

    MulTable d4 = make_dihedral(4);
    for (int f = 4; f < 8; ++f) CHECK(element_order(d4, f) == 2);
}

TEST_CASE("symmetric and alternating groups") {
    CHECK(make_alternating(4).order == 12);
    CHECK(make_symmetric(4).order == 24);
    CHECK_THROWS(make_symmetric(6));

    // A5 is simple: the normal closure of any non-identity element is A5
    MulTable a5 = make_alternating(5);
    CHECK(a5.order == 60);
    CHECK(a5.is_group());
    std::vector<int> inverse(static_cast<size_t>(a5.order));
    for (int x = 0; x < a5.order; ++x)
        for (int y = 0; y < a5.order; ++y)
            if (a5.at(x, y) == *a5.identity) inverse[static_cast<size_t>(x)] = y;
    for (int x = 1; x < a5.order; ++x) {
        // close {x} under conjugation, then take the generated subgroup
        std::vector<int> conjugates;
        std::vector<char> seen(static_cast<size_t>(a5.order), 0);
        conjugates.push_back(x);
        seen[static_cast<size_t>(x)] = 1;
        for (size_t i = 0; i < conjugates.size(); ++i)
            for (int gq = 0; gq < a5.order; ++gq) {
                int c = a5.at(a5.at(gq, conjugates[i]), inverse[static_cast<size_t>(gq)]);
                if (!seen[static_cast<size_t>(c)]) {
                    seen[static_cast<size_t>(c)] = 1;
                    conjugates.push_back(c);
                }
            }
        CHECK(closure(a5, conjugates).size() == 60);
    }
}

TEST_CASE("right-zero semigroups") {
    MulTable r1 = make_right_zero(1);
    CHECK(r1.order == 1);
    CHECK(r1.identity == 0);

    MulTable r3 = make_right_zero(3);
    CHECK(r3.at(0, 2) == 2);
    CHECK(r3.at(2, 0) == 0);
    CHECK_FALSE(r3.identity.has_value());

    // tT = T for every t: each row is onto
    MulTable r2 = make_right_zero(2);
    for (int t = 0; t < 2; ++t) {
        std::set<int> row;
        for (int u = 0; u < 2; ++u) row.insert(r2.at(t, u));
        CHECK(row.size() == 2);
    }
}

TEST_CASE("direct products") {
    MulTable z2z3 = direct_product(make_cyclic(2), make_cyclic(3));
    CHECK(z2z3.order == 6);
    CHECK(z2z3.is_group());
    // isomorphic to Z6: has an element of order 6
    bool has_order6 = false;
    for (int x = 0; x < 6; ++x) has_order6 = has_order6 || element_order(z2z3, x) == 6;
    CHECK(has_order6);

    MulTable z3r2 = direct_product(make_cyclic(3), make_right_zero(2));
    CHECK(z3r2.order == 6);
    CHECK_FALSE(z3r2.identity.has_value());

    CHECK(direct_product(make_cyclic(2), make_dihedral(3)).order == 12);

    // projections are homomorphisms (all pairs, both coordinates)
    MulTable a = make_dihedral(3), b = make_cyclic(4);
    MulTable ab = direct_product(a, b);
    for (int x = 0; x < ab.order; ++x)
        for (int y = 0; y < ab.order; ++y) {
            int p = ab.at(x, y);
            CHECK(p / b.order == a.at(x / b.order, y / b.order));
            CHECK(p % b.order == b.at(x % b.order, y % b.order));
        }
}

TEST_CASE("generates and closure") {
    MulTable z6 = make_cyclic(6);
    CHECK(generates(z6, make_generating_set(z6, {1})));
    CHECK(generates(z6, make_generating_set(z6, {2, 3})));
    CHECK_FALSE(generates(z6, make_generating_set(z6, {2})));
    MulTable z4 = make_cyclic(4);
    CHECK_FALSE(generates(z4, make_generating_set(z4, {2})));
    CHECK(closure(z4, {2}) == std::vector<int>{0, 2});
}

TEST_CASE("minimal generating sets") {
    MulTable z2 = make_cyclic(2);
    auto sets = minimal_generating_sets(z2);
    REQUIRE(sets.size() == 1);
    CHECK(sets[0].elements == std::vector<int>{1});

    MulTable z6 = make_cyclic(6);
    auto got = minimal_generating_sets(z6);
    std::set<std::vector<int>> got_set;
    for (const auto& s : got) got_set.insert(s.elements);
    CHECK(got_set == brute_minimal_sets(z6));
    CHECK(got_set.count({1}) == 1);
    CHECK(got_set.count({5}) == 1);
    CHECK(got_set.count({2, 3}) == 1);
    CHECK(got_set.count({1, 2}) == 0);

    MulTable d3 = make_dihedral(3);
    auto d3_sets = minimal_generating_sets(d3);
    std::set<std::vector<int>> d3_set;
    for (const auto& s : d3_sets) d3_set.insert(s.elements);
    CHECK(d3_set == brute_minimal_sets(d3));
    bool has_involution_pair = false;
    for (const auto& s : d3_sets)
        if (s.elements.size() == 2 && is_involution(d3, s.elements[0]) &&
            is_involution(d3, s.elements[1]))
            has_involution_pair = true;
    CHECK(has_involution_pair);

    // every output generates; every proper subset fails
    for (const auto& s : d3_sets) {
        CHECK(generates(d3, s));
        for (size_t drop = 0; drop < s.elements.size(); ++drop) {
            std::vector<int> sub;
            for (size_t i = 0; i < s.elements.size(); ++i)
                if (i != drop) sub.push_back(s.elements[i]);
            if (!sub.empty()) CHECK_FALSE(generates(d3, make_generating_set(d3, sub)));
        }
    }

    // Lagrange on a few groups
    for (const MulTable& grp : {make_dihedral(4), make_cyclic(9), make_alternating(4)})
        for (int x = 0; x < grp.order; ++x) CHECK(grp.order % element_order(grp, x) == 0);
}

TEST_CASE("two involutions generate") {
    CHECK(two_involutions_generate(make_dihedral(5)));
    CHECK_FALSE(two_involutions_generate(make_alternating(4)));
    CHECK_FALSE(two_involutions_generate(direct_product(make_cyclic(2), make_cyclic(4))));
}

TEST_CASE("group spec grammar") {
    GroupSpec z6 = parse_group_spec("Z6");
    CHECK(z6.table.order == 6);
    CHECK(parse_generators(z6, "1") == std::vector<int>{1});

    GroupSpec big = parse_group_spec("Z2xD5xR2");
    CHECK(big.table.order == 2 * 10 * 2);
    CHECK(big.factor_sizes == std::vector<int>{2, 10, 2});

    GroupSpec z2r3 = parse_group_spec("Z2xR3");
    auto gens = parse_generators(z2r3, "(1,*)");
    CHECK(gens == std::vector<int>{3, 4, 5});

    CHECK_THROWS(parse_group_spec("Q8"));
    CHECK_THROWS(parse_generators(z6, "7"));
    CHECK_THROWS(parse_generators(z2r3, "(1,2,3)"));
}

TEST_CASE("left zero is not a right group") {
    MulTable lz = make_left_zero(2);
    bool all_rows_onto = true;
    for (int t = 0; t < 2; ++t) {
        std::set<int> row;
        for (int u = 0; u < 2; ++u) row.insert(lz.at(t, u));
        all_rows_onto = all_rows_onto && row.size() == 2;
    }
    CHECK_FALSE(all_rows_onto);
}
