"""Congruences: the full congruence lattice, filter-induced congruences,
the determination congruence, and the simple/subdirectly-irreducible,
regularity, permutability, restriction and extension machinery.

Everything is exhaustive and table-driven; the congruence lattice is the
join-closure of all principal congruences, which is complete for finite
algebras.  Documented for carriers up to 16 elements.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Sequence

from . import nfilters as nf
from . import wdl as wdlmod
from .errors import (
    HypothesisError,
    InvalidInput,
    NotACongruence,
    NotNormal,
    SizeCapExceeded,
)
from .wdl import Wdl

CONGRUENCE_ENUM_CAP = 24


@dataclass(frozen=True)
class Partition:
    """Equivalence relation on 0..n-1; block ids ordered by least member."""

    n: int
    block_of: tuple[int, ...]

    @staticmethod
    def make(n: int, block_of: Sequence[int]) -> "Partition":
        if len(block_of) != n:
            raise InvalidInput("partition must cover all elements")
        relabel: dict[int, int] = {}
        out = []
        for b in block_of:
            if b not in relabel:
                relabel[b] = len(relabel)
            out.append(relabel[b])
        return Partition(n, tuple(out))

    @staticmethod
    def identity(n: int) -> "Partition":
        return Partition(n, tuple(range(n)))

    @staticmethod
    def full(n: int) -> "Partition":
        return Partition(n, (0,) * n)

    @staticmethod
    def from_blocks(n: int, blocks: Iterable[Iterable[int]]) -> "Partition":
        block_of = [-1] * n
        for i, blk in enumerate(blocks):
            for x in blk:
                if not 0 <= x < n or block_of[x] != -1:
                    raise InvalidInput(f"element {x} misplaced in blocks")
            for x in blk:
                block_of[x] = i
        if -1 in block_of:
            raise InvalidInput("blocks do not cover the carrier")
        return Partition.make(n, block_of)

    @property
    def block_count(self) -> int:
        return max(self.block_of) + 1

    def blocks(self) -> tuple[tuple[int, ...], ...]:
        out: list[list[int]] = [[] for _ in range(self.block_count)]
        for x, b in enumerate(self.block_of):
            out[b].append(x)
        return tuple(tuple(blk) for blk in out)

    def same(self, x: int, y: int) -> bool:
        return self.block_of[x] == self.block_of[y]

    def block(self, x: int) -> frozenset[int]:
        b = self.block_of[x]
        return frozenset(i for i, bb in enumerate(self.block_of) if bb == b)

    def is_identity(self) -> bool:
        return self.block_count == self.n

    def is_full(self) -> bool:
        return self.block_count == 1

    def refines(self, other: "Partition") -> bool:
        """self <= other in the congruence order (self is finer)."""
        seen: dict[int, int] = {}
        for x in range(self.n):
            b = self.block_of[x]
            if b in seen:
                if other.block_of[x] != seen[b]:
                    return False
            else:
                seen[b] = other.block_of[x]
        return True

    def meet(self, other: "Partition") -> "Partition":
        return Partition.make(self.n, [self.block_of[x] * other.n + other.block_of[x]
                                       for x in range(self.n)])

    def join(self, other: "Partition") -> "Partition":
        """Transitive closure of the union of the two relations."""
        parent = list(range(self.n))

        def find(x: int) -> int:
            while parent[x] != x:
                parent[x] = parent[parent[x]]
                x = parent[x]
            return x

        for p in (self, other):
            reps: dict[int, int] = {}
            for x in range(self.n):
                b = p.block_of[x]
                if b in reps:
                    parent[find(x)] = find(reps[b])
                else:
                    reps[b] = x
        return Partition.make(self.n, [find(x) for x in range(self.n)])

    def pairs(self) -> frozenset[tuple[int, int]]:
        return frozenset((x, y) for x in range(self.n) for y in range(self.n)
                         if self.same(x, y))


def _blocks_str(w: Wdl, p: Partition) -> str:
    return " ".join(w.format_set(blk) for blk in p.blocks())


def is_congruence(w: Wdl, p: Partition) -> tuple[bool, tuple | None]:
    """Compatibility with meet, join, delta, nabla; least witness on failure."""
    if p.n != w.n:
        raise InvalidInput("partition size does not match the carrier")
    for x in range(w.n):
        for y in range(x + 1, w.n):
            if not p.same(x, y):
                continue
            if not p.same(w.delta[x], w.delta[y]):
                return False, ("delta", (x, y), None)
            if not p.same(w.nabla[x], w.nabla[y]):
                return False, ("nabla", (x, y), None)
            for z in range(w.n):
                if not p.same(w.meet(x, z), w.meet(y, z)):
                    return False, ("meet", (x, y), z)
                if not p.same(w.join(x, z), w.join(y, z)):
                    return False, ("join", (x, y), z)
    return True, None


def principal_congruence(w: Wdl, a: int, b: int) -> Partition:
    """Least congruence merging a and b, by closure under translations."""
    parent = list(range(w.n))

    def find(x: int) -> int:
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    work = []

    def union(x: int, y: int) -> None:
        rx, ry = find(x), find(y)
        if rx != ry:
            parent[rx] = ry
            work.append((x, y))

    union(a, b)
    while work:
        x, y = work.pop()
        union(w.delta[x], w.delta[y])
        union(w.nabla[x], w.nabla[y])
        for z in range(w.n):
            union(w.meet(x, z), w.meet(y, z))
            union(w.join(x, z), w.join(y, z))
    return Partition.make(w.n, [find(x) for x in range(w.n)])


@dataclass(frozen=True)
class CongruenceLattice:
    congruences: tuple[Partition, ...]  # sorted by block_of tuple
    identity_index: int
    full_index: int

    def __len__(self) -> int:
        return len(self.congruences)

    def refinement_pairs(self) -> list[tuple[int, int]]:
        cs = self.congruences
        return [(i, j) for i in range(len(cs)) for j in range(len(cs))
                if cs[i].refines(cs[j])]

    def atoms(self) -> list[Partition]:
        cs = self.congruences
        below = [c for c in cs if not c.is_identity()]
        return [c for c in below
                if not any(d.refines(c) and d != c and not d.is_identity()
                           for d in below)]

    def coatoms(self) -> list[Partition]:
        cs = self.congruences
        above = [c for c in cs if not c.is_full()]
        return [c for c in above
                if not any(c.refines(d) and d != c and not d.is_full()
                           for d in above)]


def all_congruences(w: Wdl) -> CongruenceLattice:
    """Join-closure of the principal congruences plus the identity."""
    if w.n > CONGRUENCE_ENUM_CAP:
        raise SizeCapExceeded(f"congruence enumeration capped at {CONGRUENCE_ENUM_CAP}")
    found = {Partition.identity(w.n)}
    for a in range(w.n):
        for b in range(a + 1, w.n):
            found.add(principal_congruence(w, a, b))
    frontier = list(found)
    while frontier:
        nxt = []
        for p in frontier:
            for q in list(found):
                j = p.join(q)
                if j not in found:
                    found.add(j)
                    nxt.append(j)
        frontier = nxt
    ordered = sorted(found, key=lambda p: p.block_of)
    ident = next(i for i, p in enumerate(ordered) if p.is_identity())
    full = next(i for i, p in enumerate(ordered) if p.is_full())
    return CongruenceLattice(tuple(ordered), ident, full)


def theta_f(w: Wdl, f: frozenset[int]) -> Partition:
    """The least congruence collapsing a normal filter f (distributive case):
    x ~ y iff x v delta(u) = y v delta(u) for some u in f.

    The relation is an equivalence for any normal filter; on a
    non-distributive carrier it may fail compatibility, which is_congruence
    decides at runtime.
    """
    bad = nf.normal_filter_violation(w, f)
    if bad is not None:
        raise NotNormal(bad)
    parent = list(range(w.n))

    def find(x: int) -> int:
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    for u in f:
        du = w.delta[u]
        by_value: dict[int, int] = {}
        for x in range(w.n):
            v = w.join(x, du)
            if v in by_value:
                parent[find(x)] = find(by_value[v])
            else:
                by_value[v] = x
    return Partition.make(w.n, [find(x) for x in range(w.n)])


def detcon(w: Wdl) -> Partition:
    """The determination relation: same weak complement and same dual one.

    Always an equivalence whose top class is {1}; a congruence has top
    class {1} exactly when it refines this relation.  The relation itself
    is a congruence on many but not all carriers, so callers that need a
    congruence must check (quotient() does).
    """
    key: dict[tuple[int, int], int] = {}
    block_of = []
    for x in range(w.n):
        k = (w.delta[x], w.nabla[x])
        if k not in key:
            key[k] = len(key)
        block_of.append(key[k])
    return Partition.make(w.n, block_of)


def cokernel(w: Wdl, p: Partition) -> frozenset[int]:
    """The class of the top element; a normal filter for congruences."""
    ok, witness = is_congruence(w, p)
    if not ok:
        raise NotACongruence(witness)
    return p.block(w.top)


def kernel(w: Wdl, p: Partition) -> frozenset[int]:
    ok, witness = is_congruence(w, p)
    if not ok:
        raise NotACongruence(witness)
    return p.block(w.bottom)


def is_regular(w: Wdl) -> bool:
    """Classes determine the congruence; equivalent to detcon being trivial."""
    return detcon(w).is_identity()


def is_simple(w: Wdl) -> bool:
    return len(all_congruences(w)) == 2


def is_subdirectly_irreducible(w: Wdl) -> tuple[bool, Partition | None]:
    """Decide via the monolith: the meet of all non-identity congruences."""
    con = all_congruences(w)
    nontrivial = [p for p in con.congruences if not p.is_identity()]
    if not nontrivial:
        return False, None
    monolith = nontrivial[0]
    for p in nontrivial[1:]:
        monolith = monolith.meet(p)
    if monolith.is_identity():
        return False, None
    return True, monolith


# -- relational calculus --------------------------------------------------

def compose(p: Partition, q: Partition) -> frozenset[tuple[int, int]]:
    """Relational product: (x, z) with x p y q z for some y."""
    n = p.n
    out = []
    for x in range(n):
        px = p.block_of[x]
        reach = {q.block_of[y] for y in range(n) if p.block_of[y] == px}
        out.extend((x, z) for z in range(n) if q.block_of[z] in reach)
    return frozenset(out)


def join_congruences(p: Partition, q: Partition) -> Partition:
    return p.join(q)


def _compose_pairs(r1: frozenset[tuple[int, int]],
                   r2: frozenset[tuple[int, int]]) -> frozenset[tuple[int, int]]:
    succ: dict[int, set[int]] = {}
    for y, z in r2:
        succ.setdefault(y, set()).add(z)
    return frozenset((x, z) for x, y in r1 for z in succ.get(y, ()))


def check_join_formula(w: Wdl, f: frozenset[int], psi: Partition) -> bool:
    """theta_f v psi as a relation equals theta_f ; psi ; theta_f."""
    tf = theta_f(w, f)
    lhs = tf.join(psi).pairs()
    rhs = _compose_pairs(_compose_pairs(tf.pairs(), psi.pairs()), tf.pairs())
    return lhs == rhs


def check_permutability(w: Wdl, f1: frozenset[int], f2: frozenset[int]) -> bool:
    """Filter-induced congruences commute and compose to their join."""
    t1 = theta_f(w, f1)
    t2 = theta_f(w, f2)
    fwd = compose(t1, t2)
    bwd = compose(t2, t1)
    return fwd == bwd == t1.join(t2).pairs()


def restrict(p: Partition, s: Iterable[int]) -> Partition:
    """Restriction to a subset, re-indexed along sorted(s)."""
    elems = sorted(s)
    return Partition.make(len(elems), [p.block_of[x] for x in elems])


def check_restriction_laws(w: Wdl) -> dict[str, bool]:
    """Joint report on how congruences restrict to the two skeletons."""
    s = sorted(wdlmod.skeleton(w))
    sd = sorted(wdlmod.dual_skeleton(w))
    con = all_congruences(w).congruences
    phi = detcon(w)

    report = {
        "detcon_trivial_on_skeleton": restrict(phi, s).is_identity(),
        "detcon_trivial_on_dual_skeleton": restrict(phi, sd).is_identity(),
    }
    largest = all(p.refines(phi) for p in con
                  if restrict(p, s).is_identity() and restrict(p, sd).is_identity())
    report["detcon_largest_with_trivial_restrictions"] = largest
    dist = True
    for p in con:
        for q in con:
            for dom in (s, sd):
                lhs = restrict(p.join(q), dom)
                if lhs != restrict(p, dom).join(restrict(q, dom)):
                    dist = False
    report["join_restriction_distributes"] = dist
    compat = True
    pos_s = {x: i for i, x in enumerate(s)}
    pos_sd = {x: i for i, x in enumerate(sd)}
    for p in con:
        rp = restrict(p, s)
        for x in s:
            for y in s:
                if rp.same(pos_s[x], pos_s[y]):
                    if not rp.same(pos_s[w.nabla[x]], pos_s[w.nabla[y]]):
                        compat = False
                    for z in s:
                        if not rp.same(pos_s[w.meet(x, z)], pos_s[w.meet(y, z)]):
                            compat = False
                        if not rp.same(pos_s[wdlmod.sqcup(w, x, z)],
                                       pos_s[wdlmod.sqcup(w, y, z)]):
                            compat = False
        rp = restrict(p, sd)
        for x in sd:
            for y in sd:
                if rp.same(pos_sd[x], pos_sd[y]):
                    if not rp.same(pos_sd[w.delta[x]], pos_sd[w.delta[y]]):
                        compat = False
                    for z in sd:
                        if not rp.same(pos_sd[w.join(x, z)], pos_sd[w.join(y, z)]):
                            compat = False
                        if not rp.same(pos_sd[wdlmod.bar_sqcap(w, x, z)],
                                       pos_sd[wdlmod.bar_sqcap(w, y, z)]):
                            compat = False
    report["restrictions_are_skeleton_congruences"] = compat
    full_beats = all(p.is_full() for p in con if phi.join(p).is_full())
    report["join_with_detcon_full_forces_full"] = full_beats
    lattice_congruences_below_detcon = True
    for p in _lattice_congruences_below(w, phi):
        ok, _ = is_congruence(w, p)
        if not ok:
            lattice_congruences_below_detcon = False
    report["lattice_congruences_below_detcon_are_congruences"] = lattice_congruences_below_detcon
    return report


def _lattice_congruences_below(w: Wdl, phi: Partition) -> list[Partition]:
    """Lattice-only congruences refining phi (built from lattice principals)."""
    seeds = []
    for x in range(w.n):
        for y in range(x + 1, w.n):
            if phi.same(x, y):
                seeds.append(_lattice_principal(w, x, y))
    out = {Partition.identity(w.n)}
    frontier = [p for p in seeds if p.refines(phi)]
    out.update(frontier)
    while frontier:
        nxt = []
        for p in frontier:
            for q in list(out):
                j = p.join(q)
                if j.refines(phi) and j not in out:
                    out.add(j)
                    nxt.append(j)
        frontier = nxt
    return sorted(out, key=lambda p: p.block_of)


def _lattice_principal(w: Wdl, a: int, b: int) -> Partition:
    parent = list(range(w.n))

    def find(x: int) -> int:
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    work = []

    def union(x: int, y: int) -> None:
        rx, ry = find(x), find(y)
        if rx != ry:
            parent[rx] = ry
            work.append((x, y))

    union(a, b)
    while work:
        x, y = work.pop()
        for z in range(w.n):
            union(w.meet(x, z), w.meet(y, z))
            union(w.join(x, z), w.join(y, z))
    return Partition.make(w.n, [find(x) for x in range(w.n)])


# -- extension and quotient-level checks ----------------------------------

def cep_extend(w: Wdl, m: frozenset[int], theta_m: Partition) -> Partition:
    """Extend a congruence of the induced algebra on m to the whole algebra.

    Requires a distributive regular carrier; the extension is the
    filter-induced congruence of the lift of the cokernel.
    """
    from . import lattice as lat
    if not lat.is_distributive(w.lattice)[0]:
        raise HypothesisError("carrier must be distributive")
    if not is_regular(w):
        raise HypothesisError("carrier must be regular")
    sub, elems = wdlmod.sub_wdl(w, m)
    if not is_regular(sub):
        raise HypothesisError("induced algebra must be regular")
    ok, witness = is_congruence(sub, theta_m)
    if not ok:
        raise NotACongruence(witness)
    g = frozenset(elems[i] for i in theta_m.block(sub.top))
    f_g = nf.lift_filter_from_subalgebra(w, m, g)
    return theta_f(w, f_g)


def maximal_normal_filters(w: Wdl) -> list[frozenset[int]]:
    """Maximal proper normal filters, in enumeration order."""
    proper = [f for f in nf.all_normal_filters(w) if len(f) < w.n]
    return [f for f in proper
            if not any(f < g for g in proper)]


def is_semisimple(w: Wdl) -> bool:
    """The maximal proper normal filters intersect to the top class alone."""
    maxes = maximal_normal_filters(w)
    if not maxes:
        return False
    acc = frozenset(range(w.n))
    for f in maxes:
        acc &= f
    return acc == frozenset({w.top})


def check_maximal_correspondence(w: Wdl) -> bool:
    """Coatoms of the congruence lattice match maximal proper normal filters."""
    con = all_congruences(w)
    coatoms = {p.block_of for p in con.coatoms()}
    maxes = set(map(frozenset, maximal_normal_filters(w)))
    for p in con.congruences:
        if p.is_full():
            continue
        lhs = p.block_of in coatoms
        rhs = frozenset(p.block(w.top)) in maxes
        if lhs != rhs:
            return False
    # every maximal normal filter shows up as some coatom's cokernel
    co_cokernels = {frozenset(p.block(w.top)) for p in con.coatoms()}
    return maxes == co_cokernels


def check_con_nf_isomorphism(w: Wdl) -> bool:
    """For a regular algebra: F -> theta_F is an order isomorphism onto Con."""
    if not is_regular(w):
        raise HypothesisError("carrier must be regular")
    nfs = nf.all_normal_filters(w)
    con = all_congruences(w)
    image = []
    for f in nfs:
        t = theta_f(w, f)
        ok, _ = is_congruence(w, t)
        if not ok or frozenset(t.block(w.top)) != f:
            return False
        image.append(t)
    if sorted(p.block_of for p in image) != sorted(p.block_of for p in con.congruences):
        return False
    return all((f <= g) == (tf.refines(tg))
               for f, tf in zip(nfs, image)
               for g, tg in zip(nfs, image))


def quotient_simple_iff_maximal(w: Wdl, f: frozenset[int]) -> bool:
    """Theorem instance: the quotient by theta_f is simple iff f is maximal."""
    from .construct import quotient
    if not is_regular(w):
        raise HypothesisError("carrier must be regular")
    q, _ = quotient(w, theta_f(w, f))
    lhs = is_simple(q)
    rhs = f in maximal_normal_filters(w)
    return lhs == rhs


def check_quotient_detcon_iso(w: Wdl, theta: Partition, beta: Partition) -> bool:
    """Congruences agreeing on both skeletons give isomorphic double quotients."""
    from .construct import quotient
    s = sorted(wdlmod.skeleton(w))
    sd = sorted(wdlmod.dual_skeleton(w))
    if restrict(theta, s) != restrict(beta, s) or restrict(theta, sd) != restrict(beta, sd):
        raise HypothesisError("congruences must agree on both skeletons")
    q1, _ = quotient(w, theta)
    q2, _ = quotient(w, beta)
    qq1, _ = quotient(q1, detcon(q1))
    qq2, _ = quotient(q2, detcon(q2))
    return wdlmod.find_wdl_isomorphism(qq1, qq2) is not None
