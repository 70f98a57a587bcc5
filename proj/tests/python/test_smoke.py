"""Smoke tests for the python module: the main operations end to end."""

import pytest

rc = pytest.importorskip("rightcay")


def test_cayley_graph_of_z6():
    z6 = rc.make_cyclic(6)
    c6 = rc.cayley_graph(z6, rc.generating_set(z6, [1]))
    assert c6.n == 6 and c6.m == 6
    assert rc.graph_isomorphic(c6, rc.cycle(6)) is not None

    k6 = rc.cayley_graph(z6, rc.generating_set(z6, [1, 2, 3]))
    assert k6 == rc.complete(6)


def test_group_constructors_and_queries():
    d4 = rc.make_dihedral(4)
    assert d4.order == 8 and d4.is_group()
    assert rc.element_order(d4, 1) == 4
    assert rc.two_involutions_generate(d4)

    a4 = rc.make_alternating(4)
    assert a4.order == 12
    assert not rc.two_involutions_generate(a4)

    sets = rc.minimal_generating_sets(rc.make_cyclic(6))
    assert [1] in [s.elements for s in sets]
    assert [2, 3] in [s.elements for s in sets]


def test_planarity_and_witnesses():
    res = rc.is_planar(rc.complete_bipartite(3, 3))
    assert not res.planar
    assert res.witness.pattern == rc.Pattern.K33

    oct_graph = rc.lexicographic(rc.cycle(3), rc.edgeless(2))
    res = rc.is_planar(oct_graph)
    assert res.planar and res.embedding.genus == 0

    outer = rc.is_outer_planar(rc.complete_bipartite(2, 3))
    assert not outer.outer_planar and outer.witness.pattern == rc.Pattern.K23


def test_genus_and_bounds():
    assert rc.euler_lower_bound(rc.complete_bipartite(6, 6)) == 4
    assert rc.euler_lower_bound(rc.complete_bipartite(5, 5)) == 3

    bounds = rc.exact_genus(rc.complete_bipartite(3, 3))
    assert bounds.exact() and bounds.lower == 1

    cert = rc.torus_Krr(4)
    assert cert.genus == 1 and len(cert.faces) == 8
    assert rc.revalidate(cert)

    text = rc.certificate_to_text(cert)
    assert rc.certificate_from_text(text).genus == 1


def test_products_and_blowup():
    z2 = rc.make_cyclic(2)
    r2 = rc.make_right_zero(2)
    w = rc.verify_cross_identity(z2, rc.generating_set(z2, [1]), r2, rc.generating_set(r2, [0, 1]))
    assert w.holds

    lex = rc.verify_lex_identity(z2, rc.generating_set(z2, [1]), r2, rc.generating_set(r2, [0, 1]))
    assert lex.t_is_right_group and lex.witness.holds

    assert rc.blowup(rc.complete(2), 3) == rc.complete_bipartite(3, 3)


def test_classification():
    rec = rc.cyclic_table(4, 2)
    assert rec.verdict == rc.Verdict.Toroidal

    rec = rc.cyclic_table(3, 2)
    assert rec.verdict == rc.Verdict.Planar

    d4 = rc.make_dihedral(4)
    rec = rc.classify_right_group(d4, 2, name="D4")
    assert rec.verdict == rc.Verdict.Toroidal
    assert len(rec.witness_gens) == 2

    replay = rc.replay_triple_torus_proof()
    assert replay.all_pass and len(replay.steps) == 5
