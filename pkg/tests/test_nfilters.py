import itertools

import pytest

from wdlat import catalog, construct
from wdlat import nfilters as nf
from wdlat import wdl as W
from wdlat.errors import EmptySubset, NotASubalgebra, NotNormal


def members(w, names):
    return frozenset(w.lattice.index_of_label(x) for x in names.split(","))


def test_classify_subset_basics():
    p6 = catalog("P6")
    assert nf.NORMAL_FILTER in nf.classify_subset(p6, frozenset({p6.top}))
    assert nf.classify_subset(p6, members(p6, "b,1")) >= {
        nf.ORDER_FILTER, nf.FILTER, nf.NORMAL_FILTER}
    assert nf.classify_subset(p6, members(p6, "u,a,1")) >= {
        nf.FILTER, nf.NORMAL_FILTER}
    whole = frozenset(range(6))
    assert nf.classify_subset(p6, whole) == frozenset({
        nf.ORDER_FILTER, nf.FILTER, nf.NORMAL_FILTER,
        nf.ORDER_IDEAL, nf.IDEAL, nf.NORMAL_IDEAL})
    with pytest.raises(EmptySubset):
        nf.classify_subset(p6, frozenset())


def test_filter_join_witness_story():
    """The published witness set for NF(L) vs the filter join, reproduced.

    f1 = {u,a,1} and f2 = {b,1} are normal filters; the upset generated by
    them together with a^b is exactly {v,u,a,b,1}, which is an order filter
    that is not eta-closed (v drops to 0).  Closing under meets forces
    u^b = 0 in as well, so the true filter join is improper.
    """
    p6 = catalog("P6")
    f1 = members(p6, "u,a,1")
    f2 = members(p6, "b,1")
    assert nf.is_normal_filter(p6, f1)
    assert nf.is_normal_filter(p6, f2)
    a, b = p6.lattice.index_of_label("a"), p6.lattice.index_of_label("b")
    v = p6.lattice.index_of_label("v")
    assert p6.meet(a, b) == v
    witness = frozenset().union(
        *(p6.lattice.upset(x) for x in f1 | f2 | {v}))
    assert p6.format_set(witness) == "{u,v,a,b,1}"
    tags = nf.classify_subset(p6, witness)
    assert nf.ORDER_FILTER in tags
    assert nf.FILTER not in tags  # u ^ b = 0 escapes the set
    assert nf.NORMAL_FILTER not in tags
    assert W.eta_delta(p6, v) == p6.bottom and p6.bottom not in witness
    # the full filter-lattice join is forced past the witness set
    joined = nf.filter_join(p6.lattice, f1, f2)
    assert v in joined
    assert joined == frozenset(range(6))


def test_normal_filter_generated():
    p6 = catalog("P6")
    assert nf.normal_filter_generated(p6, ()) == frozenset({p6.top})
    v = p6.lattice.index_of_label("v")
    assert nf.normal_filter_generated(p6, {v}) == frozenset(range(6))
    l6 = catalog("L6")
    a = l6.lattice.index_of_label("a")
    assert nf.normal_filter_generated(l6, {a}) == frozenset(range(6))
    assert nf.normal_ideal_generated(p6, ()) == frozenset({p6.bottom})


def test_generated_matches_intersection_oracle():
    for name in ("C4", "M42", "P6", "L6", "M7"):
        w = catalog(name)
        nfs = nf.all_normal_filters(w)
        for r in range(w.n + 1):
            for xs in itertools.combinations(range(w.n), r):
                xs = frozenset(xs)
                want = frozenset(range(w.n))
                for f in nfs:
                    if xs <= f:
                        want &= f
                assert nf.normal_filter_generated(w, xs) == want


def test_nf_join():
    p6 = catalog("P6")
    f1 = members(p6, "u,a,1")
    f2 = members(p6, "b,1")
    top = frozenset({p6.top})
    assert nf.nf_join(p6, f1, top) == f1
    assert nf.nf_join(p6, f1, f2) == frozenset(range(6))
    assert nf.nf_join(p6, f1, f2) == nf.normal_filter_generated(p6, f1 | f2)
    with pytest.raises(NotNormal):
        nf.nf_join(p6, members(p6, "a,1"), f2)


def test_principal_join_with_complement_is_improper():
    for name in ("M42", "P6", "L6", "K7", "L9"):
        w = catalog(name)
        for a in range(w.n):
            na = nf.nf_principal(w, a)
            nd = nf.nf_principal(w, w.delta[a])
            assert nf.nf_join(w, na, nd) == frozenset(range(w.n))


def test_all_normal_filters_goldens():
    p6 = catalog("P6")
    assert {p6.format_set(f) for f in nf.all_normal_filters(p6)} == {
        "{1}", "{b,1}", "{u,a,1}", "{0,u,v,a,b,1}"}
    l6 = catalog("L6")
    assert {l6.format_set(f) for f in nf.all_normal_filters(l6)} == {
        "{1}", "{0,u,v,a,b,1}"}
    l9 = catalog("L9")
    assert {l9.format_set(f) for f in nf.all_normal_filters(l9)} == {
        "{1}", "{u,d,1}", "{b,a,1}", "{0,c,v,b,w,u,a,d,1}"}
    c4 = catalog("C4")
    assert len(nf.all_normal_filters(c4)) == len(nf.all_normal_ideals(c4)) == 2


def test_nf_lattice_shape():
    p6 = catalog("P6")
    l = nf.nf_lattice(p6)
    assert l.n == 4
    assert l.labels[l.bottom] == "{1}"
    assert l.labels[l.top] == "{0,u,v,a,b,1}"
    # meet of the two proper filters is the bottom, join the top
    filters = nf.all_normal_filters(p6)
    mid = [i for i, f in enumerate(filters) if 1 < len(f) < 6]
    assert l.meet(mid[0], mid[1]) == l.bottom
    assert l.join(mid[0], mid[1]) == l.top


def test_filter_ideal_pairing():
    p6 = catalog("P6")
    assert nf.filter_to_ideal(p6, frozenset({p6.top})) == frozenset({p6.bottom})
    assert p6.format_set(nf.filter_to_ideal(p6, members(p6, "b,1"))) == "{0,u}"
    for name in ("C5", "M42", "P6", "L6", "K7", "L7", "M7", "N5", "L9", "L16"):
        w = catalog(name)
        for f in nf.all_normal_filters(w):
            assert nf.ideal_to_filter(w, nf.filter_to_ideal(w, f)) == f
        for i in nf.all_normal_ideals(w):
            assert nf.filter_to_ideal(w, nf.ideal_to_filter(w, i)) == i
    with pytest.raises(NotNormal):
        nf.filter_to_ideal(p6, members(p6, "a,1"))


def test_nf_ni_isomorphism_catalog():
    for name in ("C2", "C4", "M42", "P6", "L6", "K7", "M7", "L9"):
        ok, pairs = nf.check_nf_ni_isomorphism(catalog(name))
        assert ok, name
        assert len(pairs) == len(nf.all_normal_filters(catalog(name)))


def test_lift_filter_from_subalgebra():
    p6 = catalog("P6")
    b = W.center(p6)
    assert p6.format_set(b) == "{0,u,b,1}"
    sub, elems = W.sub_wdl(p6, b)
    lifted = set()
    for f in nf.all_filters(sub.lattice):
        g = frozenset(elems[i] for i in f)
        lifted.add(nf.lift_filter_from_subalgebra(p6, b, g))
    assert lifted == set(map(frozenset, nf.all_normal_filters(p6)))
    with pytest.raises(NotASubalgebra):
        nf.lift_filter_from_subalgebra(p6, frozenset({0, 2, 5}), frozenset({5}))
    with pytest.raises(NotNormal):
        nf.lift_filter_from_subalgebra(p6, b, frozenset({0}))


def test_nf_center_isomorphism():
    for name, count in (("P6", 4), ("L9", 4), ("C5", 2)):
        report = nf.check_nf_center_isomorphism(catalog(name))
        assert report.hypothesis_holds
        assert report.isomorphic
        assert report.center_filter_count == report.normal_filter_count == count
    chain5 = catalog("C5")
    report = nf.check_nf_center_isomorphism(chain5)
    assert all(s >= 1 for s in report.stabilization_steps)


def test_lift_from_subalgebra_top_filter():
    m7 = catalog("M7")
    m = construct.subalgebra_generated(m7, {m7.lattice.index_of_label("e")})
    top_m = frozenset({m7.top})
    assert nf.lift_filter_from_subalgebra(m7, m, top_m) == frozenset({m7.top})
