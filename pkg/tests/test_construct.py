import random

import pytest

from wdlat import catalog, construct
from wdlat import congruence as cg
from wdlat import lattice as lat
from wdlat import nfilters as nf
from wdlat import randgen
from wdlat import wdl as W
from wdlat.congruence import Partition
from wdlat.errors import InvalidCoordinate, InvalidInput, NotACongruence, SizeCapExceeded


def test_chain_values():
    c2 = construct.chain(2)
    assert (c2.delta, c2.nabla) == ((1, 0), (1, 0))
    c3 = construct.chain(3)
    assert c3.delta == (2, 2, 0)
    c4 = construct.chain(4)
    assert W.skeleton(c4) == W.dual_skeleton(c4) == frozenset({0, 3})
    with pytest.raises(InvalidInput):
        construct.chain(1)


def test_product_is_p6():
    prod = construct.product(construct.chain(2), construct.chain(3))
    assert prod.n == 6
    assert W.check_axioms(prod.lattice, prod.delta, prod.nabla).ok()
    assert W.find_wdl_isomorphism(prod, catalog("P6")) is not None


def test_product_of_two_point_chains_is_diamond():
    prod = construct.product(construct.chain(2), construct.chain(2))
    # Boolean algebra: complement is shared by both operations
    assert prod.delta == prod.nabla
    assert W.center(prod) == frozenset(range(4))


def test_product_center_with_boolean_factor():
    b = construct.product(construct.chain(2), construct.chain(2))  # 2x2 Boolean
    for n in (3, 4):
        p = construct.product(b, construct.chain(n))
        center = W.center(p)
        # center of (Boolean x chain) keeps the chain's bounds only
        assert center == frozenset(i for i in range(p.n) if i % n in (0, n - 1))
        assert len(center) == 2 * b.n


def test_product_passes_axioms_on_catalog_pairs():
    for n1, n2 in (("M42", "C3"), ("L6", "C2"), ("K7", "C2")):
        p = construct.product(catalog(n1), catalog(n2))
        assert W.check_axioms(p.lattice, p.delta, p.nabla).ok()


def test_power_is_l9():
    p = construct.power(construct.chain(3), 2)
    assert p.n == 9
    assert W.check_axioms(p.lattice, p.delta, p.nabla).ok()
    assert W.find_wdl_isomorphism(p, catalog("L9")) is not None


def test_power_one_is_identity():
    w = catalog("M42")
    p = construct.power(w, 1)
    assert p.delta == w.delta and p.nabla == w.nabla
    assert p.lattice.up == w.lattice.up


def test_power_skeleton_is_pointwise():
    w = construct.chain(3)
    p = construct.power(w, 2)
    s = W.skeleton(w)
    assert W.skeleton(p) == frozenset(
        i for i in range(9) if i // 3 in s and i % 3 in s)


def test_power_cap():
    with pytest.raises(SizeCapExceeded):
        construct.power(catalog("L16"), 4)


def test_subalgebra_generated():
    p6 = catalog("P6")
    assert construct.subalgebra_generated(p6, ()) == frozenset({0, 5})
    b = W.center(p6)
    for x in b:
        assert construct.subalgebra_generated(p6, {x}) <= b
    m7 = catalog("M7")
    e = m7.lattice.index_of_label("e")
    assert len(construct.subalgebra_generated(m7, {e})) == 5


def test_quotient_by_identity():
    w = catalog("P6")
    q, proj = construct.quotient(w, Partition.identity(6))
    assert q.n == 6
    assert W.find_wdl_isomorphism(q, w) is not None
    assert proj == tuple(range(6))


def test_quotient_chain_by_detcon_is_three_chain():
    for n in range(3, 7):
        c = construct.chain(n)
        q, _ = construct.quotient(c, cg.detcon(c))
        assert W.find_wdl_isomorphism(q, construct.chain(3)) is not None


def test_quotient_p6_by_filter_congruence():
    w = catalog("P6")
    f = frozenset({4, 5})  # the filter {b, 1}
    theta = cg.theta_f(w, f)
    assert [w.format_set(b) for b in theta.blocks()] == ["{0,u}", "{v,a}", "{b,1}"]
    q, proj = construct.quotient(w, theta)
    assert W.find_wdl_isomorphism(q, construct.chain(3)) is not None
    assert proj == (0, 0, 1, 1, 2, 2)


def test_quotient_rejects_non_congruence():
    w = catalog("P6")
    bad = Partition.from_blocks(6, [[0, 2], [1, 3, 4, 5]])
    with pytest.raises(NotACongruence):
        construct.quotient(w, bad)


def test_lift_filter_power():
    c3 = construct.chain(3)
    top_only = construct.lift_filter_power(c3, 2, 0, frozenset({2}))
    assert top_only == frozenset({6, 7, 8})
    assert nf.is_normal_filter(construct.power(c3, 2), top_only)
    g = construct.lift_filter_power(c3, 2, 0, frozenset({1, 2}))
    assert g == frozenset({3, 4, 5, 6, 7, 8})
    assert len(g) == 6
    with pytest.raises(InvalidCoordinate):
        construct.lift_filter_power(c3, 2, 2, frozenset({2}))


def test_lift_congruence_power():
    c3 = construct.chain(3)
    mu = construct.lift_congruence_power(c3, 2, 1, Partition.identity(3))
    assert mu.block_count == 3
    for i in range(9):
        for j in range(9):
            assert mu.same(i, j) == (i % 3 == j % 3)


def test_gamma_preserves_normality_and_theta():
    w = catalog("P6")
    p = construct.power(w, 2)
    for f in nf.all_normal_filters(w):
        gf = construct.lift_filter_power(w, 2, 1, f)
        assert nf.is_normal_filter(p, gf)
        assert construct.lift_congruence_power(w, 2, 1, cg.theta_f(w, f)) == cg.theta_f(p, gf)


def test_random_constructions_pass_axioms():
    rng = random.Random(11)
    for _ in range(10):
        w = randgen.random_distributive_wdl(rng, 8)
        assert W.check_axioms(w.lattice, w.delta, w.nabla).ok()
        p = construct.product(w, construct.chain(2))
        assert W.check_axioms(p.lattice, p.delta, p.nabla).ok()
