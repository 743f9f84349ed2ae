"""Weakly dicomplemented lattices: axioms, derived operations, skeletons.

A Wdl is a bounded lattice together with two total unary maps delta (weak
complementation) and nabla (dual weak complementation) satisfying six
axioms, checked exhaustively by check_axioms():

    (1)  delta(delta(x)) <= x          (1') nabla(nabla(x)) >= x
    (2)  x <= y  =>  delta(y) <= delta(x)   and dually for nabla    (2')
    (3)  (x ^ y) v (x ^ delta(y)) = x  (3') (x v y) ^ (x v nabla(y)) = x
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Sequence

from . import lattice as lat
from .errors import (
    CarrierMismatch,
    InsufficientGenerators,
    InvalidInput,
    NotASubalgebra,
    NotAWdl,
    NotClosed,
)
from .lattice import BoundedLattice

AXIOM_IDS = ("1", "2", "3", "1'", "2'", "3'")


@dataclass(frozen=True)
class Wdl:
    lattice: BoundedLattice
    delta: tuple[int, ...]
    nabla: tuple[int, ...]

    @property
    def n(self) -> int:
        return self.lattice.n

    def le(self, x: int, y: int) -> bool:
        return self.lattice.le(x, y)

    def meet(self, x: int, y: int) -> int:
        return self.lattice.meet_table[x][y]

    def join(self, x: int, y: int) -> int:
        return self.lattice.join_table[x][y]

    @property
    def bottom(self) -> int:
        return self.lattice.bottom

    @property
    def top(self) -> int:
        return self.lattice.top

    def label(self, x: int) -> str:
        return self.lattice.labels[x]

    def format_set(self, s: Iterable[int]) -> str:
        return self.lattice.format_set(s)

    def same_carrier(self, other: "Wdl") -> bool:
        return self.lattice.same_carrier(other.lattice)


@dataclass(frozen=True)
class AxiomReport:
    """Outcome of the six axiom checks; a witness of None means the axiom holds."""

    witnesses: tuple[tuple[str, tuple[int, ...] | None], ...]

    def ok(self) -> bool:
        return all(w is None for _, w in self.witnesses)

    def failing(self) -> list[str]:
        return [a for a, w in self.witnesses if w is not None]

    def witness(self, axiom: str) -> tuple[int, ...] | None:
        return dict(self.witnesses)[axiom]

    def as_dict(self) -> dict[str, tuple[int, ...] | None]:
        return dict(self.witnesses)


def _check_total_map(n: int, m: Sequence[int], name: str) -> tuple[int, ...]:
    m = tuple(int(x) for x in m)
    if len(m) != n or any(not 0 <= x < n for x in m):
        raise InvalidInput(f"{name} must be a total map on 0..{n - 1}")
    return m


def check_axioms(lattice: BoundedLattice, delta: Sequence[int],
                 nabla: Sequence[int]) -> AxiomReport:
    """Exhaustively check the six axioms; first violating tuple per axiom."""
    n = lattice.n
    delta = _check_total_map(n, delta, "delta")
    nabla = _check_total_map(n, nabla, "nabla")
    le, meet, join = lattice.le, lattice.meet_table, lattice.join_table

    w1 = next(((x,) for x in range(n) if not le(delta[delta[x]], x)), None)
    w1d = next(((x,) for x in range(n) if not le(x, nabla[nabla[x]])), None)
    w2 = w2d = w3 = w3d = None
    for x in range(n):
        for y in range(n):
            if w2 is None and le(x, y) and not le(delta[y], delta[x]):
                w2 = (x, y)
            if w2d is None and le(x, y) and not le(nabla[y], nabla[x]):
                w2d = (x, y)
            if w3 is None and join[meet[x][y]][meet[x][delta[y]]] != x:
                w3 = (x, y)
            if w3d is None and meet[join[x][y]][join[x][nabla[y]]] != x:
                w3d = (x, y)
    return AxiomReport((("1", w1), ("2", w2), ("3", w3),
                        ("1'", w1d), ("2'", w2d), ("3'", w3d)))


def build_wdl(lattice: BoundedLattice, delta: Sequence[int],
              nabla: Sequence[int]) -> Wdl:
    """Construct a Wdl, raising NotAWdl (with the report) if an axiom fails."""
    report = check_axioms(lattice, delta, nabla)
    if not report.ok():
        raise NotAWdl(report)
    return Wdl(lattice, tuple(delta), tuple(nabla))


# -- derived operations -------------------------------------------------

def sqcap(w: Wdl, x: int, y: int) -> int:
    return w.nabla[w.join(w.nabla[x], w.nabla[y])]


def sqcup(w: Wdl, x: int, y: int) -> int:
    return w.nabla[w.meet(w.nabla[x], w.nabla[y])]


def bar_sqcap(w: Wdl, x: int, y: int) -> int:
    return w.delta[w.join(w.delta[x], w.delta[y])]


def under_sqcup(w: Wdl, x: int, y: int) -> int:
    return w.delta[w.meet(w.delta[x], w.delta[y])]


def bar_wedge(w: Wdl, x: int, y: int) -> int:
    return w.nabla[w.delta[w.meet(x, y)]]


def tilde_vee(w: Wdl, x: int, y: int) -> int:
    return w.delta[w.nabla[w.join(x, y)]]


_DERIVED = {
    "sqcap": sqcap,
    "sqcup": sqcup,
    "bar_sqcap": bar_sqcap,
    "under_sqcup": under_sqcup,
    "bar_wedge": bar_wedge,
    "tilde_vee": tilde_vee,
}


def derived_op(w: Wdl, op: str, x: int, y: int) -> int:
    try:
        fn = _DERIVED[op]
    except KeyError:
        raise InvalidInput(f"unknown derived op {op!r}") from None
    return fn(w, x, y)


def eta_delta(w: Wdl, x: int) -> int:
    return w.nabla[w.delta[x]]


def eta_nabla(w: Wdl, x: int) -> int:
    return w.delta[w.nabla[x]]


def normal_chain(w: Wdl, a: int) -> list[int]:
    """a, a^(dn), a^(2dn), ... up to the first repetition (the fixpoint)."""
    out = [a]
    while True:
        nxt = eta_delta(w, out[-1])
        if nxt == out[-1]:
            return out
        out.append(nxt)


def dual_normal_chain(w: Wdl, a: int) -> list[int]:
    out = [a]
    while True:
        nxt = eta_nabla(w, out[-1])
        if nxt == out[-1]:
            return out
        out.append(nxt)


# -- skeletons, center, dense sets --------------------------------------

def skeleton(w: Wdl) -> frozenset[int]:
    return frozenset(x for x in range(w.n) if w.nabla[w.nabla[x]] == x)


def dual_skeleton(w: Wdl) -> frozenset[int]:
    return frozenset(x for x in range(w.n) if w.delta[w.delta[x]] == x)


def center(w: Wdl) -> frozenset[int]:
    """Elements whose two complements coincide; a Boolean subalgebra."""
    return frozenset(x for x in range(w.n) if w.delta[x] == w.nabla[x])


def dense(w: Wdl) -> frozenset[int]:
    return frozenset(x for x in range(w.n) if w.nabla[x] == w.bottom)


def dual_dense(w: Wdl) -> frozenset[int]:
    return frozenset(x for x in range(w.n) if w.delta[x] == w.top)


def _induced_ops(w: Wdl, flavor: str):
    if flavor == "skeleton":
        return (lambda x, y: w.meet(x, y)), (lambda x, y: sqcup(w, x, y)), w.nabla
    if flavor == "dual_skeleton":
        return (lambda x, y: bar_sqcap(w, x, y)), (lambda x, y: w.join(x, y)), w.delta
    raise InvalidInput(f"unknown flavor {flavor!r}")


def _check_closed(w: Wdl, s: frozenset[int], flavor: str) -> list[int]:
    meet_i, join_i, comp = _induced_ops(w, flavor)
    elems = sorted(s)
    if w.bottom not in s or w.top not in s:
        raise NotClosed(("bounds", w.bottom, w.top))
    for x in elems:
        if comp[x] not in s:
            raise NotClosed(("complement", x))
        for y in elems:
            if meet_i(x, y) not in s:
                raise NotClosed(("meet", x, y))
            if join_i(x, y) not in s:
                raise NotClosed(("join", x, y))
    return elems


def is_ortholattice_on(w: Wdl, s: frozenset[int], flavor: str) -> bool:
    """Is the induced structure on s an ortholattice?

    Skeleton flavor uses (meet, induced join, nabla); dual flavor uses
    (induced meet, join, delta).  Raises NotClosed if s is not closed.
    """
    elems = _check_closed(w, s, flavor)
    meet_i, join_i, comp = _induced_ops(w, flavor)
    for x in elems:
        if comp[comp[x]] != x:
            return False
        if join_i(x, comp[x]) != w.top or meet_i(x, comp[x]) != w.bottom:
            return False
        for y in elems:
            if w.le(x, y) and not w.le(comp[y], comp[x]):
                return False
    return True


def is_boolean_on(w: Wdl, s: frozenset[int], flavor: str = "skeleton") -> bool:
    """Is the induced structure on s a Boolean algebra (distributive + complemented)?"""
    elems = _check_closed(w, s, flavor)
    meet_i, join_i, _ = _induced_ops(w, flavor)
    for x in elems:
        if not any(meet_i(x, y) == w.bottom and join_i(x, y) == w.top for y in elems):
            return False
        for y in elems:
            for z in elems:
                if meet_i(x, join_i(y, z)) != join_i(meet_i(x, y), meet_i(x, z)):
                    return False
    return True


@dataclass(frozen=True)
class WdlClassification:
    distributive: bool
    boolean_wdl: bool
    s_boolean: bool
    weak_s_boolean: bool
    pure: bool
    skeleton: frozenset[int]
    dual_skeleton: frozenset[int]
    center: frozenset[int]
    skeleton_is_boolean: bool
    dual_skeleton_is_boolean: bool
    skeleton_is_ortholattice: bool
    dual_skeleton_is_ortholattice: bool


def classify(w: Wdl) -> WdlClassification:
    s = skeleton(w)
    sd = dual_skeleton(w)
    b = center(w)
    s_bool = is_boolean_on(w, s, "skeleton")
    sd_bool = is_boolean_on(w, sd, "dual_skeleton")
    return WdlClassification(
        distributive=lat.is_distributive(w.lattice)[0],
        boolean_wdl=(s == sd == b),
        s_boolean=s_bool and sd_bool,
        weak_s_boolean=s_bool or sd_bool,
        pure=(s | sd == frozenset(range(w.n))),
        skeleton=s,
        dual_skeleton=sd,
        center=b,
        skeleton_is_boolean=s_bool,
        dual_skeleton_is_boolean=sd_bool,
        skeleton_is_ortholattice=is_ortholattice_on(w, s, "skeleton"),
        dual_skeleton_is_ortholattice=is_ortholattice_on(w, sd, "dual_skeleton"),
    )


# -- building dicomplementations ----------------------------------------

def standard_dicomplementation(lattice: BoundedLattice,
                               g: frozenset[int] | None = None,
                               h: frozenset[int] | None = None) -> Wdl:
    """delta(x) = join of the generators in g not below x, and dually.

    g must contain every join-irreducible, h every meet-irreducible;
    defaults are exactly those sets.
    """
    ji = lat.join_irreducibles(lattice)
    mi = lat.meet_irreducibles(lattice)
    g = ji if g is None else frozenset(g)
    h = mi if h is None else frozenset(h)
    if not ji <= g:
        raise InsufficientGenerators(
            f"missing join-irreducibles {sorted(ji - g)}")
    if not mi <= h:
        raise InsufficientGenerators(
            f"missing meet-irreducibles {sorted(mi - h)}")
    delta = [lattice.join_all(a for a in g if not lattice.le(a, x))
             for x in range(lattice.n)]
    nabla = [lattice.meet_all(m for m in h if not lattice.le(x, m))
             for x in range(lattice.n)]
    return build_wdl(lattice, delta, nabla)


def trivial_dicomplementation(lattice: BoundedLattice) -> Wdl:
    """Everything but the bounds maps to the opposite bound."""
    delta = [lattice.bottom if x == lattice.top else lattice.top
             for x in range(lattice.n)]
    nabla = [lattice.top if x == lattice.bottom else lattice.bottom
             for x in range(lattice.n)]
    return build_wdl(lattice, delta, nabla)


def finer_than(w1: Wdl, w2: Wdl) -> bool:
    """Pointwise comparison of two dicomplementations on one carrier."""
    if not w1.same_carrier(w2):
        raise CarrierMismatch("finer_than needs a shared carrier lattice")
    return all(w1.le(w1.delta[x], w2.delta[x]) and w1.le(w2.nabla[x], w1.nabla[x])
               for x in range(w1.n))


def find_wdl_isomorphism(w1: Wdl, w2: Wdl) -> tuple[int, ...] | None:
    """Order isomorphism commuting with both unary operations, if any."""
    return lat._find_iso(w1.lattice, w2.lattice,
                         (w1.delta, w1.nabla), (w2.delta, w2.nabla))


# -- subalgebras ----------------------------------------------------------

def subalgebra_violation(w: Wdl, s: frozenset[int]) -> tuple | None:
    """First closure failure of s under the four operations and bounds."""
    if w.bottom not in s or w.top not in s:
        return ("bounds",)
    for x in sorted(s):
        if w.delta[x] not in s:
            return ("delta", x)
        if w.nabla[x] not in s:
            return ("nabla", x)
        for y in sorted(s):
            if w.meet(x, y) not in s:
                return ("meet", x, y)
            if w.join(x, y) not in s:
                return ("join", x, y)
    return None


def is_subalgebra_closed(w: Wdl, s: frozenset[int]) -> bool:
    return subalgebra_violation(w, s) is None


def sub_wdl(w: Wdl, s: frozenset[int]) -> tuple[Wdl, tuple[int, ...]]:
    """Induced algebra on a closed subset; returns it with the element map.

    The map lists the parent index of each new element (new index i is
    sorted(s)[i]).
    """
    witness = subalgebra_violation(w, s)
    if witness is not None:
        raise NotASubalgebra(witness)
    elems = sorted(s)
    pos = {x: i for i, x in enumerate(elems)}
    sub = lat.sublattice(w.lattice, elems)
    delta = [pos[w.delta[x]] for x in elems]
    nabla = [pos[w.nabla[x]] for x in elems]
    return build_wdl(sub, delta, nabla), tuple(elems)
