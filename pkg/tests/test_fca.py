import itertools
import random

import pytest

from wdlat import construct, fca
from wdlat import wdl as W
from wdlat.errors import FormatError

IDENTITY_2X2 = "B\n\n2\n2\n\ng0\ng1\nm0\nm1\nX.\n.X\n"


def brute_concepts(k):
    """Independent enumeration: every (extent, intent) fixed by derivation."""
    out = set()
    for r in range(k.n_objects + 1):
        for a in itertools.combinations(range(k.n_objects), r):
            a = frozenset(a)
            b = fca.derive_objects(k, a)
            a2 = fca.derive_attributes(k, b)
            out.add((a2, fca.derive_objects(k, a2)))
    return out


def test_parse_single_cell():
    k = fca.parse_cxt("B\n\n1\n1\n\ng\nm\nX\n")
    assert k.objects == ("g",) and k.attributes == ("m",)
    assert k.has(0, 0)


def test_parse_rejects_malformed():
    with pytest.raises(FormatError):
        fca.parse_cxt("C\n\n1\n1\n\ng\nm\nX\n")
    with pytest.raises(FormatError):
        fca.parse_cxt("B\n\n2\n1\n\ng\nm\nX\n")  # count mismatch
    with pytest.raises(FormatError):
        fca.parse_cxt("B\n\n1\n1\n\ng\nm\n?\n")  # bad cell
    with pytest.raises(FormatError):
        fca.parse_cxt("B\n\n1\n1\n\ng\nm\nXX\n")  # wrong width
    with pytest.raises(FormatError):
        fca.parse_cxt("B\n1\n1\n\ng\nm\nX\n")  # missing blank line


def test_round_trip_is_byte_identical():
    for text in (IDENTITY_2X2, "B\n\n1\n1\n\ng\nm\nX\n",
                 "B\n\n3\n2\n\na\nb\nc\nx\ny\nX.\n.X\nXX\n"):
        assert fca.emit_cxt(fca.parse_cxt(text)) == text
    rng = random.Random(5)
    for _ in range(10):
        k = fca.random_context(rng, 4, 3, 0.5)
        assert fca.parse_cxt(fca.emit_cxt(k)) == k


def test_derivations():
    k = fca.parse_cxt(IDENTITY_2X2)
    assert fca.derive_objects(k, frozenset()) == frozenset({0, 1})
    assert fca.derive_objects(k, frozenset({0, 1})) == frozenset()
    assert fca.derive_attributes(k, frozenset({0})) == frozenset({0})
    empty = fca.FormalContext(("g0", "g1"), ("m0", "m1"), (0, 0))
    assert fca.derive_objects(empty, frozenset({0})) == frozenset()
    assert fca.derive_objects(empty, frozenset()) == frozenset({0, 1})


def test_derivation_laws():
    rng = random.Random(9)
    for _ in range(20):
        k = fca.random_context(rng, 5, 5, rng.choice((0.3, 0.5, 0.7)))
        subsets = [frozenset(c) for r in range(6)
                   for c in itertools.combinations(range(5), r)]
        attrsets = [frozenset(c) for r in range(6)
                    for c in itertools.combinations(range(5), r)]
        for a in subsets:
            aa = fca.derive_attributes(k, fca.derive_objects(k, a))
            assert a <= aa
            assert fca.derive_objects(k, aa) == fca.derive_objects(k, a)
        for a in subsets:
            for b in attrsets:
                assert (b <= fca.derive_objects(k, a)) == \
                    (a <= fca.derive_attributes(k, b))


def test_concepts_identity_context():
    k = fca.parse_cxt(IDENTITY_2X2)
    cs = fca.concepts(k)
    assert len(cs) == 4
    assert {(tuple(sorted(c.extent)), tuple(sorted(c.intent))) for c in cs} == {
        ((), (0, 1)), ((0,), (0,)), ((1,), (1,)), ((0, 1), ())}
    assert {(frozenset(c.extent), frozenset(c.intent)) for c in cs} == \
        brute_concepts(k)


def test_full_incidence_collapses():
    k = fca.FormalContext(("g0", "g1"), ("m0", "m1"), (0b11, 0b11))
    cs = fca.concepts(k)
    assert len(cs) == 1  # G' = M and M' = G, one concept only
    w = fca.concept_algebra(k)
    assert w.n == 1


def test_concepts_have_global_bounds():
    rng = random.Random(2)
    for _ in range(10):
        k = fca.random_context(rng, 5, 4, 0.5)
        cs = fca.concepts(k)
        least = min(cs, key=lambda c: len(c.extent))
        greatest = max(cs, key=lambda c: len(c.extent))
        assert least.extent == fca.derive_attributes(k, fca.derive_objects(k, frozenset()))\
            or least.extent <= greatest.extent
        assert greatest.extent == fca.derive_attributes(k, frozenset())
        assert least.intent == fca.derive_objects(k, least.extent)
        extents = [frozenset(c.extent) for c in cs]
        assert len(set(extents)) == len(extents)


def test_concept_algebra_identity_context_is_boolean_diamond():
    k = fca.parse_cxt(IDENTITY_2X2)
    w = fca.concept_algebra(k)
    assert w.n == 4
    diamond = construct.product(construct.chain(2), construct.chain(2))
    assert W.find_wdl_isomorphism(w, diamond) is not None
    assert w.delta == w.nabla  # weak negation = weak opposition = complement


def test_concept_algebra_meets_joins_match_formulas():
    rng = random.Random(4)
    for _ in range(10):
        k = fca.random_context(rng, 4, 4, 0.5)
        cs = fca.concepts(k)
        w = fca.concept_algebra(k)
        for i, c in enumerate(cs):
            for j, d in enumerate(cs):
                m = cs[w.meet(i, j)]
                assert m.extent == c.extent & d.extent
                jn = cs[w.join(i, j)]
                assert jn.intent == c.intent & d.intent


def test_random_concept_algebras_pass_axioms():
    rng = random.Random(6)
    for _ in range(25):
        k = fca.random_context(rng, 5, 5, rng.choice((0.3, 0.5, 0.7)))
        w = fca.concept_algebra(k)
        assert W.check_axioms(w.lattice, w.delta, w.nabla).ok()
