#include "doctest.h"
#include "rightcay/classify.hpp"
#include "rightcay/products.hpp"

using namespace rightcay;
using namespace rightcay::algebra;
using namespace rightcay::classify;

TEST_CASE("rule: nonplanar base") {
    MulTable z6 = make_cyclic(6);
    SimpleGraph k6 = cayley::cayley_graph(z6, make_generating_set(z6, {1, 2, 3}));
    auto ob = rule_nonplanar_base(k6, 2);
    REQUIRE(ob.has_value());
    CHECK(ob->bound >= 2);

    CHECK_FALSE(rule_nonplanar_base(graphs::cycle(6), 2).has_value());

    // the K5 blow-up needs 45 edges for 30 triangles but has only 40
    CHECK(topo::euler_lower_bound(products::blowup(graphs::complete(5), 2)) >= 2);
}

TEST_CASE("rule: r >= 5") {
    CHECK(rule_r5(graphs::complete(2), 5).has_value());
    CHECK(rule_r5(graphs::complete(2), 5)->bound == 3);  // K55 Euler-girth bound
    CHECK_FALSE(rule_r5(graphs::complete(2), 4).has_value());
    CHECK_FALSE(rule_r5(graphs::edgeless(1), 5).has_value());
}

TEST_CASE("rule: K22 blow-up") {
    auto ob = rule_K22(graphs::cycle(4), 3);
    REQUIRE(ob.has_value());
    CHECK(ob->bound == 4);  // C4 blown by 3 is K66
    CHECK_FALSE(rule_K22(graphs::cycle(3), 3).has_value());
    auto c5 = rule_K22(graphs::cycle(5), 4);
    REQUIRE(c5.has_value());
    CHECK(c5->bound >= 2);
}

TEST_CASE("rule: three-regular") {
    // D3 with a rotation and a flip: 3-regular planar prism
    MulTable d3 = make_dihedral(3);
    SimpleGraph prism = cayley::cayley_graph(d3, make_generating_set(d3, {1, 3}));
    auto ob = rule_threereg(prism, make_generating_set(d3, {1, 3}), d3);
    REQUIRE(ob.has_value());
    CHECK(ob->bound >= 2);

    // Z6 with {2,3}: an edge in no triangle
    MulTable z6 = make_cyclic(6);
    SimpleGraph pr2 = cayley::cayley_graph(z6, make_generating_set(z6, {2, 3}));
    auto ob2 = rule_threereg(pr2, make_generating_set(z6, {2, 3}), z6);
    REQUIRE(ob2.has_value());
    CHECK(ob2->detail.find("triangle") != std::string::npos);

    // degree-2 base violates the precondition
    SimpleGraph c6 = cayley::cayley_graph(z6, make_generating_set(z6, {1}));
    CHECK_THROWS(rule_threereg(c6, make_generating_set(z6, {1}), z6));
}

TEST_CASE("cyclic table matches the published grid") {
    // toroidal exactly for (2,3), (2,4), (3,3) and (n,2) with n >= 4
    for (int n = 2; n <= 8; ++n)
        for (int r = 1; r <= 5; ++r) {
            ClassificationRecord rec = cyclic_table(n, r);
            bool expect_toroidal =
                (n == 2 && (r == 3 || r == 4)) || (n == 3 && r == 3) || (n >= 4 && r == 2);
            CHECK_MESSAGE((rec.verdict == Verdict::Toroidal) == expect_toroidal,
                          "n=", n, " r=", r, " verdict=", verdict_name(rec.verdict));
            if (rec.verdict == Verdict::Toroidal) {
                // every toroidal verdict is backed by a validated genus-1
                // certificate plus a non-planarity witness
                bool found = false;
                for (const auto& out : rec.outcomes)
                    if (!out.skipped && out.verdict == Verdict::Toroidal) {
                        REQUIRE(out.certificate.has_value());
                        CHECK(out.certificate->genus == 1);
                        CHECK(topo::revalidate(*out.certificate));
                        REQUIRE(out.nonplanarity_witness.has_value());
                        CHECK(topo::validate_witness(out.certificate->graph,
                                                     *out.nonplanarity_witness));
                        found = true;
                    }
                CHECK(found);
            }
        }

    // specific verdicts called out in the grid
    CHECK(cyclic_table(2, 3).verdict == Verdict::Toroidal);   // K33
    CHECK(cyclic_table(3, 2).verdict == Verdict::Planar);     // octahedron
    ClassificationRecord k444 = cyclic_table(3, 4);
    CHECK(k444.verdict == Verdict::HigherGenus);
    bool has_count_detail = false;
    for (const auto& out : k444.outcomes)
        if (out.obstruction && out.obstruction->detail.find("20") != std::string::npos)
            has_count_detail = true;
    CHECK(has_count_detail);  // the 12 - 32 + 20 face-count contradiction
}

TEST_CASE("cyclic table degenerate n = 1") {
    // Z1 x R_r is the plain right-zero semigroup; its Cayley graph is K_r.
    // The published cyclic grid tacitly assumes a nontrivial group, so K5
    // being toroidal at r = 5 is recorded truthfully here.
    CHECK(cyclic_table(1, 1).verdict == Verdict::Planar);
    CHECK(cyclic_table(1, 4).verdict == Verdict::Planar);
    CHECK(cyclic_table(1, 5).verdict == Verdict::Toroidal);
}

TEST_CASE("classify known right groups") {
    MulTable d4 = make_dihedral(4);
    ClassificationRecord rec = classify_right_group(d4, 2, 10'000'000, "D4");
    CHECK(rec.verdict == Verdict::Toroidal);
    REQUIRE(rec.witness_gens.has_value());
    // the witnessing set is a pair of involutions whose base is an 8-cycle
    CHECK(rec.witness_gens->elements.size() == 2);
    for (int x : rec.witness_gens->elements) CHECK(is_involution(d4, x));
    SimpleGraph base = cayley::cayley_graph(d4, *rec.witness_gens);
    CHECK(cayley::graph_isomorphic(base, graphs::cycle(8)).has_value());

    MulTable z2z4 = direct_product(make_cyclic(2), make_cyclic(4));
    CHECK_FALSE(two_involutions_generate(z2z4));
    ClassificationRecord bad = classify_right_group(z2z4, 2, 10'000'000, "Z2xZ4");
    CHECK(bad.verdict == Verdict::HigherGenus);
    // every minimal generating set carries an obstruction
    for (const auto& out : bad.outcomes) {
        CHECK_FALSE(out.skipped);
        REQUIRE(out.obstruction.has_value());
        CHECK(out.obstruction->bound >= 2);
    }

    MulTable z2d3 = direct_product(make_cyclic(2), make_dihedral(3));
    ClassificationRecord good = classify_right_group(z2d3, 2, 10'000'000, "Z2xD3");
    CHECK(good.verdict == Verdict::Toroidal);
    SimpleGraph b2 = cayley::cayley_graph(z2d3, *good.witness_gens);
    CHECK(cayley::graph_isomorphic(b2, graphs::cycle(12)).has_value());
}

TEST_CASE("degree sum inequality on the excluded groups") {
    // |{c : ord 2}| + 2 |{c : ord >= 3}| >= 3 for every minimal generating
    // set of a group no pair of involutions generates (and that is not cyclic)
    for (auto [name, table] : std::initializer_list<std::pair<const char*, MulTable>>{
             {"A4", make_alternating(4)},
             {"S4", make_symmetric(4)},
             {"Z2xZ4", direct_product(make_cyclic(2), make_cyclic(4))},
             {"Z2xZ6", direct_product(make_cyclic(2), make_cyclic(6))}}) {
        for (const auto& c : minimal_generating_sets(table)) {
            int sum = 0;
            for (int x : c.elements) sum += is_involution(table, x) ? 1 : 2;
            CHECK_MESSAGE(sum >= 3, name, " set size ", c.elements.size());
        }
    }
}

TEST_CASE("monotonicity spot check: redundant generators only add edges") {
    // Cay(Z6, {1,3}) contains Cay(Z6, {1}); its blow-up cannot have smaller
    // genus class than the toroidal one of the cycle
    MulTable z6 = make_cyclic(6);
    MulTable gr = direct_product(z6, make_right_zero(2));
    SimpleGraph more = cayley::cayley_graph(
        gr, make_generating_set(gr, {1 * 2, 1 * 2 + 1, 3 * 2, 3 * 2 + 1}));
    SimpleGraph less = cayley::cayley_graph(gr, make_generating_set(gr, {2, 3}));
    for (auto [u, v] : less.edges()) CHECK(more.has_edge(u, v));
    CHECK_FALSE(topo::is_planar(more).planar);
    // K33 base: not toroidal either (nonplanar base rule)
    SimpleGraph base = cayley::cayley_graph(z6, make_generating_set(z6, {1, 3}));
    CHECK(rule_nonplanar_base(base, 2).has_value());
}

TEST_CASE("triple torus replay") {
    TripleTorusReplay replay = replay_triple_torus_proof();
    REQUIRE(replay.steps.size() == 5);
    for (const auto& s : replay.steps) CHECK_MESSAGE(s.pass, s.name, ": ", s.evidence);
    CHECK(replay.all_pass);
}

TEST_CASE("involution pair table") {
    auto rows = involution_pair_table();
    for (const auto& row : rows) {
        bool expect = row.group.substr(0, 1) == "D";  // exactly the dihedral rows
        CHECK_MESSAGE(row.two_involutions_generate == expect, row.group);
    }
}

TEST_CASE("no involution pair generates Z2 x D_even") {
    // ord((1, g1) * (0, g2)) = lcm(2, n), so for even n the dihedral-style
    // pair only reaches a subgroup of order 2n; brute force confirms that no
    // other pair helps either, which removes Z2 x D_even from the toroidal
    // family despite the published list
    CHECK_FALSE(two_involutions_generate(direct_product(make_cyclic(2), make_dihedral(2))));
    CHECK_FALSE(two_involutions_generate(direct_product(make_cyclic(2), make_dihedral(4))));
    CHECK(two_involutions_generate(direct_product(make_cyclic(2), make_dihedral(3))));
    CHECK(two_involutions_generate(direct_product(make_cyclic(2), make_dihedral(5))));
}

TEST_CASE("classification report on a reduced grid") {
    ClassificationReport rep = classification_report(4, 3);
    CHECK(rep.disagreements == 0);
    std::vector<std::string> errata;
    for (const auto& row : rep.rows) {
        if (row.known_erratum) {
            errata.push_back(row.group);
            CHECK(row.r == 2);
            CHECK(row.verdict == Verdict::HigherGenus);
        } else {
            CHECK_MESSAGE(row.agrees, row.group, " r=", row.r);
        }
    }
    CHECK(errata == std::vector<std::string>{"Z2xD2", "Z2xD4"});
    CHECK(rep.erratum_rows == 2);
}
