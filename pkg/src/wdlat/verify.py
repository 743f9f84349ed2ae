"""Executable structure-theorem suite.

Every statement the library implements is also runnable as a named check
against a concrete algebra: identities of the complements, skeleton and
center structure, normal-filter calculus, filter-induced congruences,
permutability, restriction, extension, and the power liftings.  Checks
whose hypotheses an algebra does not meet are reported as skipped, never
silently dropped.
"""

from __future__ import annotations

import random
from dataclasses import dataclass
from typing import Callable

from . import congruence as cg
from . import construct
from . import lattice as lat
from . import nfilters as nf
from . import wdl as wdlmod
from .congruence import Partition
from .wdl import (
    Wdl,
    bar_sqcap,
    bar_wedge,
    eta_delta,
    eta_nabla,
    sqcap,
    sqcup,
    tilde_vee,
    under_sqcup,
)

CON_SUITE_CAP = 16


@dataclass(frozen=True)
class CheckResult:
    name: str
    status: str  # "ok" | "fail" | "skip"
    detail: str = ""


def _fail(cond: bool, detail: str) -> tuple[bool, str]:
    return (True, "") if cond else (False, detail)


# -- identities of the unary operations -----------------------------------


def check_axioms_hold(w: Wdl):
    report = wdlmod.check_axioms(w.lattice, w.delta, w.nabla)
    return _fail(report.ok(), f"axioms failing: {report.failing()}")


def check_complement_identities(w: Wdl):
    d, nb = w.delta, w.nabla
    for x in range(w.n):
        if w.join(x, d[x]) != w.top:
            return False, f"x v delta(x) != 1 at {x}"
        if w.meet(x, nb[x]) != w.bottom:
            return False, f"x ^ nabla(x) != 0 at {x}"
        if not w.le(nb[x], d[x]):
            return False, f"nabla(x) <= delta(x) fails at {x}"
        for y in range(w.n):
            if d[w.meet(x, y)] != w.join(d[x], d[y]):
                return False, f"delta(x^y) = delta(x) v delta(y) fails at ({x},{y})"
            if nb[w.join(x, y)] != w.meet(nb[x], nb[y]):
                return False, f"nabla(x v y) = nabla(x) ^ nabla(y) fails at ({x},{y})"
            if bar_sqcap(w, x, y) != d[d[w.meet(x, y)]]:
                return False, f"induced meet identity fails at ({x},{y})"
            if sqcup(w, x, y) != nb[nb[w.join(x, y)]]:
                return False, f"induced join identity fails at ({x},{y})"
            if w.meet(y, x) == w.bottom and not w.le(x, d[y]):
                return False, f"disjointness bound fails at ({x},{y})"
            if w.join(y, x) == w.top and not w.le(nb[y], x):
                return False, f"cover bound fails at ({x},{y})"
    return True, ""


def check_galois_equivalences(w: Wdl):
    for x in range(w.n):
        for y in range(w.n):
            if w.le(w.delta[x], y) != w.le(w.delta[y], x):
                return False, f"delta adjunction fails at ({x},{y})"
            if w.le(y, w.nabla[x]) != w.le(x, w.nabla[y]):
                return False, f"nabla adjunction fails at ({x},{y})"
    return True, ""


def check_sandwich(w: Wdl):
    for x in range(w.n):
        dn = w.nabla[w.delta[x]]
        dd = w.delta[w.delta[x]]
        nn = w.nabla[w.nabla[x]]
        nd = w.delta[w.nabla[x]]
        if not (w.le(dn, dd) and w.le(dd, x) and w.le(x, nn) and w.le(nn, nd)):
            return False, f"sandwich chain fails at {x}"
    return True, ""


def check_closure_interior(w: Wdl):
    c = [w.nabla[w.nabla[x]] for x in range(w.n)]
    i = [w.delta[w.delta[x]] for x in range(w.n)]
    for x in range(w.n):
        if not w.le(x, c[x]) or c[c[x]] != c[x]:
            return False, f"closure operator fails at {x}"
        if not w.le(i[x], x) or i[i[x]] != i[x]:
            return False, f"interior operator fails at {x}"
        for y in range(w.n):
            if w.le(x, y) and not (w.le(c[x], c[y]) and w.le(i[x], i[y])):
                return False, f"monotonicity fails at ({x},{y})"
    return True, ""


def check_skeleton_structures(w: Wdl):
    s = wdlmod.skeleton(w)
    sd = wdlmod.dual_skeleton(w)
    b = wdlmod.center(w)
    if not wdlmod.is_ortholattice_on(w, s, "skeleton"):
        return False, "skeleton is not an ortholattice"
    if not wdlmod.is_ortholattice_on(w, sd, "dual_skeleton"):
        return False, "dual skeleton is not an ortholattice"
    if not wdlmod.is_boolean_on(w, b, "skeleton"):
        return False, "center is not a Boolean algebra"
    if not b <= (s & sd):
        return False, "center not inside both skeletons"
    if not wdlmod.is_subalgebra_closed(w, b):
        return False, "center is not a subalgebra"
    return True, ""


def check_center_identity(w: Wdl):
    fixed = all(eta_delta(w, x) == x for x in range(w.n))
    if fixed != (wdlmod.center(w) == frozenset(range(w.n))):
        return False, "x = eta_delta(x) identity does not match L = B(L)"
    return True, ""


def check_eta_properties(w: Wdl):
    for x in range(w.n):
        if not w.le(eta_delta(w, x), x) or not w.le(x, eta_nabla(w, x)):
            return False, f"eta bounds fail at {x}"
        if eta_delta(w, x) != bar_wedge(w, x, x):
            return False, f"eta_delta is not the diagonal of bar_wedge at {x}"
        for y in range(w.n):
            if w.le(x, y):
                if not w.le(eta_delta(w, x), eta_delta(w, y)):
                    return False, f"eta_delta not increasing at ({x},{y})"
                if not w.le(eta_nabla(w, x), eta_nabla(w, y)):
                    return False, f"eta_nabla not increasing at ({x},{y})"
            if eta_delta(w, w.meet(x, y)) != w.meet(eta_delta(w, x), eta_delta(w, y)):
                return False, f"eta_delta does not distribute over meet at ({x},{y})"
            if eta_nabla(w, w.join(x, y)) != w.join(eta_nabla(w, x), eta_nabla(w, y)):
                return False, f"eta_nabla does not distribute over join at ({x},{y})"
            if eta_delta(w, bar_wedge(w, x, y)) != bar_wedge(w, eta_delta(w, x), eta_delta(w, y)):
                return False, f"eta_delta / bar_wedge exchange fails at ({x},{y})"
            if eta_nabla(w, tilde_vee(w, x, y)) != tilde_vee(w, eta_nabla(w, x), eta_nabla(w, y)):
                return False, f"eta_nabla / tilde_vee exchange fails at ({x},{y})"
            if not (w.le(bar_wedge(w, x, y), bar_sqcap(w, x, y))
                    and w.le(bar_sqcap(w, x, y), w.meet(x, y))):
                return False, f"bar_wedge <= bar_sqcap <= meet fails at ({x},{y})"
            if not (w.le(w.join(x, y), sqcup(w, x, y))
                    and w.le(sqcup(w, x, y), tilde_vee(w, x, y))):
                return False, f"join <= sqcup <= tilde_vee fails at ({x},{y})"
        if bar_wedge(w, w.delta[x], x) != w.bottom:
            return False, f"bar_wedge(delta(x), x) != 0 at {x}"
        if tilde_vee(w, x, w.nabla[x]) != w.top:
            return False, f"tilde_vee(x, nabla(x)) != 1 at {x}"
    return True, ""


def check_derived_monotone(w: Wdl):
    ops = (sqcap, sqcup, bar_sqcap, under_sqcup, bar_wedge, tilde_vee)
    for a in range(w.n):
        for b in range(w.n):
            if not w.le(a, b):
                continue
            for x in range(w.n):
                for y in range(w.n):
                    if not w.le(x, y):
                        continue
                    for op in ops:
                        if not w.le(op(w, a, x), op(w, b, y)):
                            return False, f"{op.__name__} not monotone at ({a},{x})<=({b},{y})"
    return True, ""


def check_eta_power_meets(w: Wdl):
    for a in range(w.n):
        for b in range(w.n):
            xa, xb, xm = a, b, w.meet(a, b)
            for _ in range(4):
                xa, xb, xm = eta_delta(w, xa), eta_delta(w, xb), eta_delta(w, xm)
                if xm != w.meet(xa, xb):
                    return False, f"iterated eta_delta meet law fails at ({a},{b})"
            ya, yb, yj = a, b, w.join(a, b)
            for _ in range(4):
                ya, yb, yj = eta_nabla(w, ya), eta_nabla(w, yb), eta_nabla(w, yj)
                if yj != w.join(ya, yb):
                    return False, f"iterated eta_nabla join law fails at ({a},{b})"
    return True, ""


def check_dense_sets(w: Wdl):
    d = wdlmod.dense(w)
    dd = wdlmod.dual_dense(w)
    if d and not nf.is_order_filter(w.lattice, d):
        return False, "dense set is not an order filter"
    if dd and not nf.is_order_ideal(w.lattice, dd):
        return False, "dual dense set is not an order ideal"
    return True, ""


# -- normal filter calculus ------------------------------------------------


def check_nf_intersection_closed(w: Wdl):
    nfs = nf.all_normal_filters(w)
    for f in nfs:
        for g in nfs:
            if not nf.is_normal_filter(w, f & g):
                return False, f"intersection of normal filters not normal: {sorted(f)}, {sorted(g)}"
    if frozenset({w.top}) not in map(frozenset, nfs):
        return False, "top class is not a normal filter"
    if frozenset(range(w.n)) not in map(frozenset, nfs):
        return False, "the improper filter is missing"
    return True, ""


def _nfg_by_formula(w: Wdl, xs: frozenset[int]) -> frozenset[int]:
    """Oracle: thresholds are iterated eta images of finite meets of xs."""
    if not xs:
        return frozenset({w.top})
    meets = set(xs)
    while True:
        more = {w.meet(a, b) for a in meets for b in meets} | meets
        if more == meets:
            break
        meets = more
    out = 0
    for m in meets:
        for t in wdlmod.normal_chain(w, m):
            out |= w.lattice.up[t]
    return lat.mask_set(out)


def check_nfg_formula(w: Wdl):
    if w.n <= 7:
        import itertools
        subsets = [frozenset(c) for r in range(w.n + 1)
                   for c in itertools.combinations(range(w.n), r)]
    else:
        subsets = [frozenset()] + [frozenset({a}) for a in range(w.n)] + \
            [frozenset({a, b}) for a in range(w.n) for b in range(a + 1, w.n)]
    for xs in subsets:
        if nf.normal_filter_generated(w, xs) != _nfg_by_formula(w, xs):
            return False, f"generated normal filter mismatch at {sorted(xs)}"
    return True, ""


def check_nfg_brute(w: Wdl):
    import itertools
    nfs = nf.all_normal_filters(w)
    for r in range(w.n + 1):
        for c in itertools.combinations(range(w.n), r):
            xs = frozenset(c)
            want = frozenset(range(w.n))
            for f in nfs:
                if xs <= f:
                    want &= f
            if nf.normal_filter_generated(w, xs) != want:
                return False, f"least normal filter mismatch at {sorted(xs)}"
    return True, ""


def check_principal_nf(w: Wdl):
    top_set = frozenset(range(w.n))
    for a in range(w.n):
        na = nf.nf_principal(w, a)
        chain_sets = 0
        for t in wdlmod.normal_chain(w, a):
            chain_sets |= w.lattice.up[t]
        if na != lat.mask_set(chain_sets):
            return False, f"principal normal filter form fails at {a}"
        if na != nf.nf_principal(w, eta_delta(w, a)):
            return False, f"N[a) = N[eta(a)) fails at {a}"
        if (na == top_set) != (wdlmod.normal_chain(w, a)[-1] == w.bottom):
            return False, f"N[a) = L criterion fails at {a}"
        ia = nf.ni_principal(w, a)
        if (ia == top_set) != (wdlmod.dual_normal_chain(w, a)[-1] == w.top):
            return False, f"N(a] = L criterion fails at {a}"
        if ia != nf.ni_principal(w, eta_nabla(w, a)):
            return False, f"N(a] = N(eta_nabla(a)] fails at {a}"
        if nf.nf_join(w, na, nf.nf_principal(w, w.delta[a])) != top_set:
            return False, f"N[a) v N[delta(a)) = L fails at {a}"
        if nf.ni_join(w, ia, nf.ni_principal(w, w.nabla[a])) != top_set:
            return False, f"N(a] v N(nabla(a)] = L fails at {a}"
        for b in range(w.n):
            nb_ = nf.nf_principal(w, b)
            if w.le(a, b) and not (nb_ <= na and ia <= nf.ni_principal(w, b)):
                return False, f"principal antitonicity fails at ({a},{b})"
            joined = nf.nf_join(w, na, nb_)
            if joined != nf.nf_principal(w, w.meet(a, b)):
                return False, f"N[a) v N[b) = N[a^b) fails at ({a},{b})"
            if joined != nf.nf_principal(w, bar_wedge(w, a, b)):
                return False, f"N[a) v N[b) = N[a barwedge b) fails at ({a},{b})"
            if not nf.nf_principal(w, w.join(a, b)) <= (na & nb_):
                return False, f"N[a v b) inside N[a) ^ N[b) fails at ({a},{b})"
            ib = nf.ni_principal(w, b)
            if nf.ni_join(w, ia, ib) != nf.ni_principal(w, w.join(a, b)):
                return False, f"N(a] v N(b] = N(a v b] fails at ({a},{b})"
            if nf.ni_join(w, ia, ib) != nf.ni_principal(w, tilde_vee(w, a, b)):
                return False, f"N(a] v N(b] = N(a tildevee b] fails at ({a},{b})"
            if not (ia & ib) <= nf.ni_principal(w, tilde_vee(w, a, b)):
                return False, f"ideal-side intersection bound fails at ({a},{b})"
    return True, ""


def check_nf_characterization(w: Wdl):
    for mask in lat.upset_masks(w.lattice):
        s = lat.mask_set(mask)
        closed = all(bar_wedge(w, x, y) in s for x in s for y in s)
        if closed != nf.is_normal_filter(w, s):
            return False, f"bar_wedge characterisation fails at {sorted(s)}"
    return True, ""


def check_nf_ni_iso(w: Wdl):
    ok, _ = nf.check_nf_ni_isomorphism(w)
    return _fail(ok, "NI(L) and NF(L) are not isomorphic via the pairing")


def check_knormal(w: Wdl):
    for f in nf.all_normal_filters(w):
        j = nf.filter_to_ideal(w, f)
        if not nf.is_normal_ideal(w, j):
            return False, f"paired ideal not normal for {sorted(f)}"
        if nf.ideal_to_filter(w, j) != f:
            return False, f"filter round trip fails for {sorted(f)}"
        for x in f:
            if w.delta[x] not in j or w.nabla[x] not in j:
                return False, f"complements of {x} missing from paired ideal"
    for i in nf.all_normal_ideals(w):
        f = nf.ideal_to_filter(w, i)
        if not nf.is_normal_filter(w, f):
            return False, f"paired filter not normal for {sorted(i)}"
        if nf.filter_to_ideal(w, f) != i:
            return False, f"ideal round trip fails for {sorted(i)}"
    return True, ""


def check_center_lift(w: Wdl):
    b = wdlmod.center(w)
    elems = sorted(b)
    sub = lat.sublattice(w.lattice, elems)
    bfilters = [frozenset(elems[i] for i in f) for f in nf.all_filters(sub)]
    lifted = {}
    for g in bfilters:
        fg = nf.lift_filter_from_subalgebra(w, b, g)
        if not nf.is_normal_filter(w, fg):
            return False, f"lift of {sorted(g)} is not a normal filter"
        lifted[g] = fg
    for g in bfilters:
        for h in bfilters:
            if (g <= h) != (lifted[g] <= lifted[h]):
                return False, "lift does not reflect inclusion"
            if lifted[g] & lifted[h] != lifted[g & h]:
                return False, "lift does not preserve intersections"
            joined_in_b = nf.filter_join(w.lattice, g, h) & b
            if nf.nf_join(w, lifted[g], lifted[h]) != lifted[frozenset(joined_in_b)]:
                return False, "lift does not preserve joins"
    for f in nf.all_normal_filters(w):
        e = frozenset(f & b)
        up_e = frozenset().union(*[w.lattice.upset(x) for x in e]) if e else frozenset()
        if not up_e <= f:
            return False, "restriction lift escapes the filter"
        if up_e != f:
            return False, f"F != F_(F ^ B) for {sorted(f)} despite stabilisation"
    return True, ""


def check_nf_center_iso(w: Wdl):
    report = nf.check_nf_center_isomorphism(w)
    if report.hypothesis_holds and not report.isomorphic:
        return False, (f"NF(L) ({report.normal_filter_count}) does not match "
                       f"filters of the center ({report.center_filter_count})")
    return True, ""


# -- congruences -----------------------------------------------------------


def check_cokernels(w: Wdl):
    for p in cg.all_congruences(w).congruences:
        f = p.block(w.top)
        i = p.block(w.bottom)
        if not nf.is_normal_filter(w, f):
            return False, f"top class not a normal filter for {p.block_of}"
        if not nf.is_normal_ideal(w, i):
            return False, f"bottom class not a normal ideal for {p.block_of}"
        if nf.ideal_to_filter(w, i) != f or nf.filter_to_ideal(w, f) != i:
            return False, f"class pairing fails for {p.block_of}"
        if (f == frozenset({w.top})) != (i == frozenset({w.bottom})):
            return False, f"singleton top/bottom classes disagree for {p.block_of}"
        g = f & wdlmod.dual_skeleton(w)
        if nf.normal_filter_generated(w, g) != f:
            return False, f"top class not generated by its dual-skeleton part"
        if p.same(w.top, w.bottom) and not p.is_full():
            return False, "congruence collapsing the bounds is not full"
    return True, ""


def check_prop_bounded_skeletons(w: Wdl):
    s = wdlmod.skeleton(w)
    sd = wdlmod.dual_skeleton(w)
    if s != frozenset({w.bottom, w.top}) or sd != frozenset({w.bottom, w.top}):
        return True, ""  # hypothesis empty
    for p in cg.all_congruences(w).congruences:
        if p.is_full():
            continue
        if p.block(w.top) != frozenset({w.top}) or p.block(w.bottom) != frozenset({w.bottom}):
            return False, f"bound classes not singletons for {p.block_of}"
    return True, ""


def check_theta_f_least(w: Wdl):
    con = cg.all_congruences(w)
    for f in nf.all_normal_filters(w):
        t = cg.theta_f(w, f)
        ok, witness = cg.is_congruence(w, t)
        if not ok:
            return False, f"theta_F not a congruence for {sorted(f)}: {witness}"
        if t.block(w.top) != f:
            return False, f"cokernel of theta_F is not F for {sorted(f)}"
        for p in con.congruences:
            if f <= p.block(w.top) and not t.refines(p):
                return False, f"theta_F not least collapsing {sorted(f)}"
        oracle = Partition.identity(w.n)
        for x in f:
            oracle = oracle.join(cg.principal_congruence(w, x, w.top))
        if oracle != t:
            return False, f"theta_F differs from the generated congruence for {sorted(f)}"
        for x in range(w.n):
            for y in range(w.n):
                if t.same(x, y) and not any(
                        w.meet(x, u) == w.meet(y, u) for u in f):
                    return False, f"no meet witness for ({x},{y}) in theta_F"
    return True, ""


def check_theta_f_embedding(w: Wdl):
    nfs = nf.all_normal_filters(w)
    ts = {f: cg.theta_f(w, f) for f in nfs}
    for f in nfs:
        for g in nfs:
            if (f <= g) != ts[f].refines(ts[g]):
                return False, f"theta_F order embedding fails at {sorted(f)}, {sorted(g)}"
    return True, ""


def check_join_formula_all(w: Wdl):
    con = cg.all_congruences(w)
    for f in nf.all_normal_filters(w):
        for psi in con.congruences:
            if not cg.check_join_formula(w, f, psi):
                return False, f"join formula fails for {sorted(f)} and {psi.block_of}"
    return True, ""


def check_permutability_all(w: Wdl):
    nfs = nf.all_normal_filters(w)
    for f1 in nfs:
        for f2 in nfs:
            if not cg.check_permutability(w, f1, f2):
                return False, f"filter congruences do not permute: {sorted(f1)}, {sorted(f2)}"
    return True, ""


def check_detcon(w: Wdl):
    """Singleton top class characterisation of the determination relation.

    In full generality a congruence has top class {1} exactly when it is
    contained in the determination relation; when that relation is itself a
    congruence (it need not be), it is therefore the largest one.
    """
    phi = cg.detcon(w)
    if phi.block(w.top) != frozenset({w.top}):
        return False, "top class of the determination relation is not {1}"
    con = cg.all_congruences(w).congruences
    for p in con:
        singleton = p.block(w.top) == frozenset({w.top})
        if singleton != p.refines(phi):
            return False, f"singleton-top characterisation fails for {p.block_of}"
    phi_con, _ = cg.is_congruence(w, phi)
    if phi_con:
        best = [p for p in con if p.block(w.top) == frozenset({w.top})]
        if phi not in best or not all(p.refines(phi) for p in best):
            return False, "detcon is a congruence but not the maximum one"
    return True, ""


def check_regularity_oracle(w: Wdl):
    """Compare the detcon-based definition with the class-sharing one.

    detcon = identity always forces class-sharing regularity; the converse
    needs detcon to be a congruence.
    """
    con = cg.all_congruences(w).congruences
    by_classes = True
    for p in con:
        for q in con:
            if p == q:
                continue
            if any(p.block(a) == q.block(a) for a in range(w.n)):
                by_classes = False
    if cg.is_regular(w) and not by_classes:
        return False, "detcon is trivial but two congruences share a class"
    phi = cg.detcon(w)
    if cg.is_congruence(w, phi)[0] and by_classes != cg.is_regular(w):
        return False, "regularity does not match the class-sharing definition"
    return True, ""


def check_restrictions(w: Wdl):
    report = cg.check_restriction_laws(w)
    bad = [k for k, v in report.items() if not v]
    return _fail(not bad, f"restriction laws fail: {bad}")


def check_monolith_formula(w: Wdl):
    con = cg.all_congruences(w).congruences
    nontriv = [p for p in con if not p.is_identity()]
    if not nontriv:
        return True, ""
    acc = nontriv[0]
    for p in nontriv[1:]:
        acc = acc.meet(p)
    nfs = [f for f in nf.all_normal_filters(w) if f != frozenset({w.top})]
    acc2 = Partition.full(w.n)
    for f in nfs:
        acc2 = acc2.meet(cg.theta_f(w, f))
    return _fail(acc == acc2, "monolith formula via normal filters fails")


def check_si_simple_nf(w: Wdl):
    nfs = nf.all_normal_filters(w)
    simple_nf = len(nfs) == 2
    proper = [f for f in nfs if f != frozenset({w.top})]
    atoms = [f for f in proper
             if not any(g < f for g in proper)]
    si_nf = len(atoms) == 1
    si, _ = cg.is_subdirectly_irreducible(w)
    if cg.is_simple(w) != simple_nf:
        return False, "simplicity differs from the normal-filter count criterion"
    if si != si_nf:
        return False, "subdirect irreducibility differs from the unique-atom criterion"
    return True, ""


def check_con_nf_iso(w: Wdl):
    return _fail(cg.check_con_nf_isomorphism(w),
                 "Con(L) and NF(L) are not isomorphic")


def check_quotient_detcon_regular(w: Wdl):
    phi = cg.detcon(w)
    if not cg.is_congruence(w, phi)[0]:
        return True, "detcon is not a congruence here; nothing to factor"
    q, _ = construct.quotient(w, phi)
    return _fail(cg.is_regular(q), "quotient by detcon is not regular")


def check_quotient_simple_iff_maximal(w: Wdl):
    for f in nf.all_normal_filters(w):
        if not cg.quotient_simple_iff_maximal(w, f):
            return False, f"simple-quotient criterion fails at {sorted(f)}"
    return True, ""


def check_maximal_correspondence(w: Wdl):
    return _fail(cg.check_maximal_correspondence(w),
                 "maximal congruences do not match maximal normal filters")


def check_double_quotient_iso(w: Wdl):
    from .errors import NotACongruence
    con = cg.all_congruences(w).congruences
    s = sorted(wdlmod.skeleton(w))
    sd = sorted(wdlmod.dual_skeleton(w))
    pairs = 0
    for p in con:
        for q in con:
            if cg.restrict(p, s) == cg.restrict(q, s) and \
                    cg.restrict(p, sd) == cg.restrict(q, sd):
                try:
                    if not cg.check_quotient_detcon_iso(w, p, q):
                        return False, "double quotients not isomorphic"
                except NotACongruence:
                    continue  # detcon of a quotient need not be a congruence
                pairs += 1
                if pairs >= 25:
                    return True, ""
    return True, ""


def check_cep(w: Wdl):
    seeds = [frozenset(), *(frozenset({x}) for x in range(w.n))]
    for seed in seeds[:6]:
        m = construct.subalgebra_generated(w, seed)
        sub, elems = wdlmod.sub_wdl(w, m)
        for theta in cg.all_congruences(sub).congruences:
            beta = cg.cep_extend(w, m, theta)
            ok, _ = cg.is_congruence(w, beta)
            if not ok:
                return False, f"extension not a congruence for seed {sorted(seed)}"
            if cg.restrict(beta, elems) != theta:
                return False, f"extension does not restrict back for seed {sorted(seed)}"
    return True, ""


def check_subalgebra_inheritance(w: Wdl):
    regular = cg.is_regular(w)
    simple = cg.is_simple(w)
    for x in range(w.n):
        m = construct.subalgebra_generated(w, {x})
        sub, _ = wdlmod.sub_wdl(w, m)
        if regular and not cg.is_regular(sub):
            return False, f"subalgebra from {x} is not regular"
        if simple and sub.n >= 2 and not cg.is_simple(sub):
            return False, f"subalgebra from {x} is not simple"
    return True, ""


def check_finer_than_trivial(w: Wdl):
    top_structure = wdlmod.trivial_dicomplementation(w.lattice)
    if not wdlmod.finer_than(w, top_structure):
        return False, "algebra is not finer than the trivial structure"
    for f in nf.all_normal_filters(top_structure):
        if not nf.is_normal_filter(w, f):
            return False, f"{sorted(f)} normal for the trivial structure but not here"
    return True, ""


def check_power_properties(w: Wdl):
    p = construct.power(w, 2)
    digits = [(i // w.n, i % w.n) for i in range(p.n)]
    s, sd, b = wdlmod.skeleton(w), wdlmod.dual_skeleton(w), wdlmod.center(w)
    d, dd = wdlmod.dense(w), wdlmod.dual_dense(w)
    for target, source in ((wdlmod.skeleton(p), s), (wdlmod.dual_skeleton(p), sd),
                           (wdlmod.center(p), b), (wdlmod.dense(p), d),
                           (wdlmod.dual_dense(p), dd)):
        want = frozenset(i for i, (x, y) in enumerate(digits)
                         if x in source and y in source)
        if target != want:
            return False, "pointwise subset description fails on the square"
    cw, cp = wdlmod.classify(w), wdlmod.classify(p)
    for attr in ("boolean_wdl", "s_boolean", "distributive"):
        if getattr(cw, attr) != getattr(cp, attr):
            return False, f"{attr} not preserved/reflected by the square"
    # purity only lifts when one skeleton contains the other (mixed tuples
    # escape S^X u Sbar^X otherwise); it always descends to the base
    if cp.pure and not cw.pure:
        return False, "square is pure but the base is not"
    if cw.pure and (s <= sd or sd <= s) and not cp.pure:
        return False, "purity fails to lift despite nested skeletons"
    for a in range(w.n):
        pa = construct.constant_embedding(w, 2, a)
        if p.delta[pa] != construct.constant_embedding(w, 2, w.delta[a]):
            return False, "constant embedding does not respect delta"
        if p.nabla[pa] != construct.constant_embedding(w, 2, w.nabla[a]):
            return False, "constant embedding does not respect nabla"
        for b2 in range(w.n):
            pb = construct.constant_embedding(w, 2, b2)
            if w.le(a, b2) != p.le(pa, pb):
                return False, "constant embedding does not reflect order"
            if p.meet(pa, pb) != construct.constant_embedding(w, 2, w.meet(a, b2)):
                return False, "constant embedding does not respect meet"
            if p.join(pa, pb) != construct.constant_embedding(w, 2, w.join(a, b2)):
                return False, "constant embedding does not respect join"
    return True, ""


def check_power_liftings(w: Wdl):
    k, x = 2, 0
    p = construct.power(w, k)
    filters = nf.all_filters(w.lattice)
    lifted = {f: construct.lift_filter_power(w, k, x, f) for f in filters}
    for f in filters:
        if not nf.is_filter(p.lattice, lifted[f]):
            return False, f"lift of {sorted(f)} is not a filter"
        for g in filters:
            if (f <= g) != (lifted[f] <= lifted[g]):
                return False, "filter lift does not reflect inclusion"
            fj = nf.filter_join(w.lattice, f, g)
            if nf.filter_join(p.lattice, lifted[f], lifted[g]) != lifted[frozenset(fj)]:
                return False, "filter lift does not preserve joins"
    for f in nf.all_normal_filters(w):
        gf = construct.lift_filter_power(w, k, x, f)
        if not nf.is_normal_filter(p, gf):
            return False, f"lift of normal {sorted(f)} is not normal"
        if construct.lift_congruence_power(w, k, x, cg.theta_f(w, f)) != cg.theta_f(p, gf):
            return False, f"lifted congruence of {sorted(f)} is not theta of the lift"
    con = cg.all_congruences(w).congruences
    for t in con:
        mt = construct.lift_congruence_power(w, k, x, t)
        ok, _ = cg.is_congruence(p, mt)
        if not ok:
            return False, "lifted congruence is not a congruence"
        for t2 in con:
            if t.refines(t2) != mt.refines(construct.lift_congruence_power(w, k, x, t2)):
                return False, "congruence lift does not reflect inclusion"
    return True, ""


# -- the registry ----------------------------------------------------------

_CHECKS: list[tuple[str, frozenset[str], Callable]] = [
    ("axioms", frozenset(), check_axioms_hold),
    ("complement-identities", frozenset(), check_complement_identities),
    ("galois-equivalences", frozenset(), check_galois_equivalences),
    ("sandwich-chain", frozenset(), check_sandwich),
    ("closure-interior-operators", frozenset(), check_closure_interior),
    ("skeleton-structures", frozenset(), check_skeleton_structures),
    ("center-fixpoint-identity", frozenset(), check_center_identity),
    ("eta-properties", frozenset(), check_eta_properties),
    ("derived-ops-monotone", frozenset({"small"}), check_derived_monotone),
    ("iterated-eta-meet-laws", frozenset(), check_eta_power_meets),
    ("dense-sets", frozenset(), check_dense_sets),
    ("nf-intersection-closed", frozenset({"nf"}), check_nf_intersection_closed),
    ("nf-generation-formula", frozenset({"nf"}), check_nfg_formula),
    ("nf-generation-brute-oracle", frozenset({"tiny"}), check_nfg_brute),
    ("principal-nf-properties", frozenset({"nf"}), check_principal_nf),
    ("nf-barwedge-characterization", frozenset({"nf"}), check_nf_characterization),
    ("nf-ni-isomorphism", frozenset({"nf"}), check_nf_ni_iso),
    ("nf-ni-pairing-roundtrip", frozenset({"nf"}), check_knormal),
    ("center-filter-lift", frozenset({"nf"}), check_center_lift),
    ("nf-center-isomorphism", frozenset({"nf"}), check_nf_center_iso),
    ("congruence-class-structure", frozenset({"con"}), check_cokernels),
    ("two-point-skeleton-classes", frozenset({"con"}), check_prop_bounded_skeletons),
    ("theta-f-least-congruence", frozenset({"con", "distributive"}), check_theta_f_least),
    ("theta-f-order-embedding", frozenset({"nf", "distributive"}), check_theta_f_embedding),
    ("join-formula", frozenset({"con", "distributive"}), check_join_formula_all),
    ("filter-congruences-permute", frozenset({"nf", "distributive"}), check_permutability_all),
    ("determination-congruence", frozenset({"con"}), check_detcon),
    ("regularity-oracle", frozenset({"con"}), check_regularity_oracle),
    ("restriction-laws", frozenset({"con"}), check_restrictions),
    ("monolith-formula", frozenset({"con", "distributive", "regular"}), check_monolith_formula),
    ("si-simple-nf-criteria", frozenset({"con", "distributive", "regular"}), check_si_simple_nf),
    ("con-nf-isomorphism", frozenset({"con", "regular"}), check_con_nf_iso),
    ("quotient-by-detcon-regular", frozenset({"con"}), check_quotient_detcon_regular),
    ("simple-quotient-iff-maximal", frozenset({"con", "regular"}), check_quotient_simple_iff_maximal),
    ("maximal-congruence-correspondence", frozenset({"con", "distributive", "regular"}),
     check_maximal_correspondence),
    ("double-quotient-isomorphism", frozenset({"con"}), check_double_quotient_iso),
    ("congruence-extension", frozenset({"con", "distributive", "regular"}), check_cep),
    ("subalgebra-inheritance", frozenset({"con"}), check_subalgebra_inheritance),
    ("finer-than-trivial-structure", frozenset({"nf"}), check_finer_than_trivial),
    ("power-pointwise-structure", frozenset({"power"}), check_power_properties),
    ("power-liftings", frozenset({"power", "con"}), check_power_liftings),
]


def run_suite(w: Wdl) -> list[CheckResult]:
    """Run every applicable check; inapplicable ones are reported as skipped."""
    distributive = lat.is_distributive(w.lattice)[0]
    regular = cg.detcon(w).is_identity()
    results = []
    for name, needs, fn in _CHECKS:
        if "distributive" in needs and not distributive:
            results.append(CheckResult(name, "skip", "needs a distributive carrier"))
            continue
        if "regular" in needs and not regular:
            results.append(CheckResult(name, "skip", "needs a regular algebra"))
            continue
        if "con" in needs and w.n > CON_SUITE_CAP:
            results.append(CheckResult(name, "skip", "carrier too large for Con(L)"))
            continue
        if "nf" in needs and w.n > 20:
            results.append(CheckResult(name, "skip", "carrier too large for NF(L)"))
            continue
        if "tiny" in needs and w.n > 7:
            results.append(CheckResult(name, "skip", "brute-force oracle capped at 7"))
            continue
        if "small" in needs and w.n > 9:
            results.append(CheckResult(name, "skip", "quartic scan capped at 9"))
            continue
        if "power" in needs and w.n > 6:
            results.append(CheckResult(name, "skip", "square would be too large"))
            continue
        ok, detail = fn(w)
        results.append(CheckResult(name, "ok" if ok else "fail", detail))
    return results


def run_random_suite(seed: int, count: int, max_size: int = 8) -> list[tuple[str, list[CheckResult]]]:
    from . import randgen
    rng = random.Random(seed)
    out = []
    for i in range(count):
        w = randgen.random_distributive_wdl(rng, max_size)
        out.append((f"random-{i} (n={w.n})", run_suite(w)))
    return out
