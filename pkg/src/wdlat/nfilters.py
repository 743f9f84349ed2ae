"""Filters, ideals and their normal variants.

A normal filter is a filter closed under x -> nabla(delta(x)); normal ideals
are the dual notion.  The set NF(L) of normal filters, ordered by inclusion,
is a lattice whose join is NOT the filter-lattice join; nf_join implements
the characterisation via the derived operation bar_wedge.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable

from . import lattice as lat
from . import wdl as wdlmod
from .errors import EmptySubset, NotASubalgebra, NotNormal
from .lattice import BoundedLattice, mask_set, set_mask
from .wdl import Wdl, bar_wedge, eta_delta, eta_nabla, tilde_vee

ORDER_FILTER = "order_filter"
FILTER = "filter"
NORMAL_FILTER = "normal_filter"
ORDER_IDEAL = "order_ideal"
IDEAL = "ideal"
NORMAL_IDEAL = "normal_ideal"


def _upward_closure(l: BoundedLattice, xs: Iterable[int]) -> int:
    m = 0
    for x in xs:
        m |= l.up[x]
    return m


def _downward_closure(l: BoundedLattice, xs: Iterable[int]) -> int:
    m = 0
    for x in xs:
        m |= l.down[x]
    return m


def is_order_filter(l: BoundedLattice, s: frozenset[int]) -> bool:
    return bool(s) and all(l.up[x] & ~set_mask(s) == 0 for x in s)


def is_order_ideal(l: BoundedLattice, s: frozenset[int]) -> bool:
    return bool(s) and all(l.down[x] & ~set_mask(s) == 0 for x in s)


def is_filter(l: BoundedLattice, s: frozenset[int]) -> bool:
    return is_order_filter(l, s) and all(l.meet(x, y) in s for x in s for y in s)


def is_ideal(l: BoundedLattice, s: frozenset[int]) -> bool:
    return is_order_ideal(l, s) and all(l.join(x, y) in s for x in s for y in s)


def normal_filter_violation(w: Wdl, s: frozenset[int]) -> tuple | None:
    """First reason s fails to be a normal filter, or None."""
    if not s:
        return ("empty",)
    if not is_order_filter(w.lattice, s):
        x = next(x for x in sorted(s)
                 if w.lattice.up[x] & ~set_mask(s))
        return ("not_upward_closed", x)
    for x in sorted(s):
        for y in sorted(s):
            if w.meet(x, y) not in s:
                return ("not_meet_closed", x, y)
    for x in sorted(s):
        if eta_delta(w, x) not in s:
            return ("not_eta_closed", x)
    return None


def is_normal_filter(w: Wdl, s: frozenset[int]) -> bool:
    return normal_filter_violation(w, s) is None


def normal_ideal_violation(w: Wdl, s: frozenset[int]) -> tuple | None:
    if not s:
        return ("empty",)
    if not is_order_ideal(w.lattice, s):
        x = next(x for x in sorted(s)
                 if w.lattice.down[x] & ~set_mask(s))
        return ("not_downward_closed", x)
    for x in sorted(s):
        for y in sorted(s):
            if w.join(x, y) not in s:
                return ("not_join_closed", x, y)
    for x in sorted(s):
        if eta_nabla(w, x) not in s:
            return ("not_eta_closed", x)
    return None


def is_normal_ideal(w: Wdl, s: frozenset[int]) -> bool:
    return normal_ideal_violation(w, s) is None


def classify_subset(w: Wdl, s: frozenset[int]) -> frozenset[str]:
    """All applicable filter/ideal tags for a nonempty subset."""
    if not s:
        raise EmptySubset("cannot classify the empty subset")
    tags = []
    if is_order_filter(w.lattice, s):
        tags.append(ORDER_FILTER)
        if is_filter(w.lattice, s):
            tags.append(FILTER)
            if all(eta_delta(w, x) in s for x in s):
                tags.append(NORMAL_FILTER)
    if is_order_ideal(w.lattice, s):
        tags.append(ORDER_IDEAL)
        if is_ideal(w.lattice, s):
            tags.append(IDEAL)
            if all(eta_nabla(w, x) in s for x in s):
                tags.append(NORMAL_IDEAL)
    return frozenset(tags)


def filter_join(l: BoundedLattice, f: frozenset[int], g: frozenset[int]) -> frozenset[int]:
    """Join in the lattice of all filters: upsets of pairwise meets."""
    out = 0
    for a in f:
        for b in g:
            out |= l.up[l.meet(a, b)]
    return mask_set(out)


def normal_filter_generated(w: Wdl, xs: Iterable[int]) -> frozenset[int]:
    """Least normal filter containing xs (the top class for empty xs)."""
    xs = frozenset(xs)
    if not xs:
        return frozenset({w.top})
    cur = _upward_closure(w.lattice, xs)
    while True:
        nxt = cur
        elems = mask_set(cur)
        for x in elems:
            nxt |= w.lattice.up[eta_delta(w, x)]
            for y in elems:
                nxt |= w.lattice.up[w.meet(x, y)]
        if nxt == cur:
            return mask_set(cur)
        cur = nxt


def normal_ideal_generated(w: Wdl, xs: Iterable[int]) -> frozenset[int]:
    xs = frozenset(xs)
    if not xs:
        return frozenset({w.bottom})
    cur = _downward_closure(w.lattice, xs)
    while True:
        nxt = cur
        elems = mask_set(cur)
        for x in elems:
            nxt |= w.lattice.down[eta_nabla(w, x)]
            for y in elems:
                nxt |= w.lattice.down[w.join(x, y)]
        if nxt == cur:
            return mask_set(cur)
        cur = nxt


def nf_principal(w: Wdl, a: int) -> frozenset[int]:
    return normal_filter_generated(w, (a,))


def ni_principal(w: Wdl, a: int) -> frozenset[int]:
    return normal_ideal_generated(w, (a,))


def nf_join(w: Wdl, f: frozenset[int], g: frozenset[int]) -> frozenset[int]:
    """Join in NF(L): everything above some bar_wedge(a, b), a in f, b in g."""
    for s in (f, g):
        bad = normal_filter_violation(w, s)
        if bad is not None:
            raise NotNormal(bad)
    out = 0
    for a in f:
        for b in g:
            out |= w.lattice.up[bar_wedge(w, a, b)]
    return mask_set(out)


def ni_join(w: Wdl, i: frozenset[int], j: frozenset[int]) -> frozenset[int]:
    for s in (i, j):
        bad = normal_ideal_violation(w, s)
        if bad is not None:
            raise NotNormal(bad)
    out = 0
    for a in i:
        for b in j:
            out |= w.lattice.down[tilde_vee(w, a, b)]
    return mask_set(out)


def all_filters(l: BoundedLattice) -> list[frozenset[int]]:
    """All filters (meet-closed nonempty upsets), ordered by bitmask value."""
    out = []
    for m in lat.upset_masks(l):
        s = mask_set(m)
        if all(l.meet(x, y) in s for x in s for y in s):
            out.append(s)
    return out


def all_normal_filters(w: Wdl) -> list[frozenset[int]]:
    return [s for s in all_filters(w.lattice)
            if all(eta_delta(w, x) in s for x in s)]


def all_normal_ideals(w: Wdl) -> list[frozenset[int]]:
    out = []
    for m in lat.upset_masks(w.lattice.dual()):
        s = mask_set(m)
        if all(w.join(x, y) in s for x in s for y in s) and \
                all(eta_nabla(w, x) in s for x in s):
            out.append(s)
    return out


def nf_lattice(w: Wdl) -> BoundedLattice:
    """NF(L) ordered by inclusion; meet is intersection, join is nf_join."""
    filters = all_normal_filters(w)
    rows = [[f <= g for g in filters] for f in filters]
    labels = [w.format_set(f) for f in filters]
    return lat.validate_lattice(rows, labels)


def filter_to_ideal(w: Wdl, f: frozenset[int]) -> frozenset[int]:
    """The normal ideal paired with a normal filter: below some nabla(x)."""
    bad = normal_filter_violation(w, f)
    if bad is not None:
        raise NotNormal(bad)
    out = 0
    for x in f:
        out |= w.lattice.down[w.nabla[x]]
    return mask_set(out)


def ideal_to_filter(w: Wdl, j: frozenset[int]) -> frozenset[int]:
    bad = normal_ideal_violation(w, j)
    if bad is not None:
        raise NotNormal(bad)
    out = 0
    for x in j:
        out |= w.lattice.up[w.delta[x]]
    return mask_set(out)


def check_nf_ni_isomorphism(w: Wdl) -> tuple[bool, tuple[tuple[frozenset[int], frozenset[int]], ...]]:
    """Does ideal_to_filter give a lattice isomorphism NI(L) -> NF(L)?

    Verifies bijectivity with inverse filter_to_ideal, inclusion in both
    directions, and preservation of meets (intersection) and joins.
    """
    nf = all_normal_filters(w)
    ni = all_normal_ideals(w)
    pairs = tuple((i, ideal_to_filter(w, i)) for i in ni)
    images = [f for _, f in pairs]
    ok = (sorted(map(sorted, images)) == sorted(map(sorted, nf))
          and len(set(images)) == len(ni))
    if ok:
        ok = all(filter_to_ideal(w, f) == i for i, f in pairs)
    if ok:
        for i1, f1 in pairs:
            for i2, f2 in pairs:
                if (i1 <= i2) != (f1 <= f2):
                    ok = False
                if ideal_to_filter(w, i1 & i2) != f1 & f2:
                    ok = False
                if ideal_to_filter(w, ni_join(w, i1, i2)) != nf_join(w, f1, f2):
                    ok = False
    return ok, pairs


def lift_filter_from_subalgebra(w: Wdl, m: frozenset[int],
                                g: frozenset[int]) -> frozenset[int]:
    """Normal filter of the whole algebra generated upward from g inside m."""
    bad = wdlmod.subalgebra_violation(w, m)
    if bad is not None:
        raise NotASubalgebra(bad)
    if not g or not g <= m:
        raise NotNormal(("not_within_subalgebra",))
    for x in g:
        if eta_delta(w, x) not in g:
            raise NotNormal(("not_eta_closed", x))
        for y in g:
            if w.meet(x, y) not in g:
                raise NotNormal(("not_meet_closed", x, y))
        for y in m:
            if w.le(x, y) and y not in g:
                raise NotNormal(("not_upward_closed", x, y))
    return mask_set(_upward_closure(w.lattice, g))


@dataclass(frozen=True)
class CenterIsoReport:
    """Outcome of comparing NF(L) with the filters of the Boolean center."""

    stabilization_steps: tuple[int, ...]  # least n with x^(n(dn)) = x^((n+1)(dn))
    hypothesis_holds: bool
    isomorphic: bool
    center_filter_count: int
    normal_filter_count: int


def check_nf_center_isomorphism(w: Wdl) -> CenterIsoReport:
    """Is lifting an isomorphism from filters of the center onto NF(L)?

    The per-element normal chains always stabilise on a finite carrier; the
    report keeps the step counts so the hypothesis stays visible.
    """
    steps = tuple(max(1, len(wdlmod.normal_chain(w, x)) - 1) for x in range(w.n))
    b = wdlmod.center(w)
    elems = sorted(b)
    sub = lat.sublattice(w.lattice, elems)
    center_filters = [frozenset(elems[i] for i in f) for f in all_filters(sub)]
    lifted = [mask_set(_upward_closure(w.lattice, g)) for g in center_filters]
    nfs = all_normal_filters(w)
    iso = (sorted(map(sorted, lifted)) == sorted(map(sorted, nfs))
           and len(set(lifted)) == len(center_filters))
    if iso:
        for g1, f1 in zip(center_filters, lifted):
            for g2, f2 in zip(center_filters, lifted):
                if (g1 <= g2) != (f1 <= f2):
                    iso = False
    return CenterIsoReport(steps, True, iso, len(center_filters), len(nfs))
