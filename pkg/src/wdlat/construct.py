"""Builders: chains, products, powers, generated subalgebras, quotients,
and the coordinate liftings of filters and congruences into powers.

Product/power carriers are indexed row-major: in product(w1, w2) the pair
(i1, i2) sits at i1 * n2 + i2; a k-tuple in power(w, k) is read as k digits
base n, first coordinate most significant.
"""

from __future__ import annotations

from itertools import product as iproduct
from typing import Iterable

from . import congruence as cg
from . import lattice as lat
from . import wdl as wdlmod
from .congruence import Partition
from .errors import InvalidCoordinate, InvalidInput, NotACongruence, SizeCapExceeded
from .lattice import BoundedLattice
from .wdl import Wdl, build_wdl

POWER_CAP = 4096


def chain(n: int) -> Wdl:
    """The n-element chain with its unique dicomplementation."""
    if n < 2:
        raise InvalidInput("a chain needs at least 2 elements")
    up = tuple(((1 << n) - 1) & ~((1 << i) - 1) for i in range(n))
    if n == 2:
        labels = ["0", "1"]
    else:
        labels = ["0"] + [f"c{i}" for i in range(1, n - 1)] + ["1"]
    lattice = lat.validate_lattice(up, labels)
    return wdlmod.trivial_dicomplementation(lattice)


def product(w1: Wdl, w2: Wdl) -> Wdl:
    """Direct product; order, tables and both complementations componentwise."""
    n1, n2 = w1.n, w2.n
    n = n1 * n2
    l1, l2 = w1.lattice, w2.lattice
    up = []
    for i1 in range(n1):
        for i2 in range(n2):
            mask = 0
            rest = l1.up[i1]
            while rest:
                b = rest & -rest
                j1 = b.bit_length() - 1
                rest ^= b
                mask |= l2.up[i2] << (j1 * n2)
            up.append(mask)
    down = []
    for i1 in range(n1):
        for i2 in range(n2):
            mask = 0
            rest = l1.down[i1]
            while rest:
                b = rest & -rest
                j1 = b.bit_length() - 1
                rest ^= b
                mask |= l2.down[i2] << (j1 * n2)
            down.append(mask)
    meet_t = tuple(tuple(l1.meet_table[i1][j1] * n2 + l2.meet_table[i2][j2]
                         for j1 in range(n1) for j2 in range(n2))
                   for i1 in range(n1) for i2 in range(n2))
    join_t = tuple(tuple(l1.join_table[i1][j1] * n2 + l2.join_table[i2][j2]
                         for j1 in range(n1) for j2 in range(n2))
                   for i1 in range(n1) for i2 in range(n2))
    labels = tuple(f"({l1.labels[i1]},{l2.labels[i2]})"
                   for i1 in range(n1) for i2 in range(n2))
    lattice = BoundedLattice(n, tuple(up), tuple(down), meet_t, join_t,
                             l1.bottom * n2 + l2.bottom,
                             l1.top * n2 + l2.top, labels)
    delta = tuple(w1.delta[i1] * n2 + w2.delta[i2]
                  for i1 in range(n1) for i2 in range(n2))
    nabla = tuple(w1.nabla[i1] * n2 + w2.nabla[i2]
                  for i1 in range(n1) for i2 in range(n2))
    return Wdl(lattice, delta, nabla)


def power(w: Wdl, k: int) -> Wdl:
    """The k-th pointwise power; carrier = all k-tuples over the base."""
    if k < 1:
        raise InvalidInput("power exponent must be >= 1")
    if w.n ** k > POWER_CAP:
        raise SizeCapExceeded(f"power size {w.n ** k} exceeds cap {POWER_CAP}")
    out = w
    for _ in range(k - 1):
        out = product(out, w)
    if k == 1:
        return Wdl(w.lattice, w.delta, w.nabla)
    # relabel flattened nested pairs as plain tuples
    base = w.lattice.labels
    labels = ["(" + ",".join(base[d] for d in digits) + ")"
              for digits in iproduct(range(w.n), repeat=k)]
    return Wdl(out.lattice.relabel(labels), out.delta, out.nabla)


def power_index(base_n: int, digits: Iterable[int]) -> int:
    idx = 0
    for d in digits:
        idx = idx * base_n + d
    return idx


def power_digits(base_n: int, k: int, idx: int) -> tuple[int, ...]:
    out = []
    for _ in range(k):
        out.append(idx % base_n)
        idx //= base_n
    return tuple(reversed(out))


def constant_embedding(w: Wdl, k: int, a: int) -> int:
    """Index of the constant tuple a inside power(w, k)."""
    return power_index(w.n, [a] * k)


def lift_filter_power(w: Wdl, k: int, x: int, f: frozenset[int]) -> frozenset[int]:
    """Tuples of power(w, k) whose x-th coordinate lies in f."""
    if not 0 <= x < k:
        raise InvalidCoordinate(f"coordinate {x} outside 0..{k - 1}")
    if any(not 0 <= e < w.n for e in f):
        raise InvalidInput("filter elements outside the base carrier")
    shift = w.n ** (k - 1 - x)
    return frozenset(i for i in range(w.n ** k) if (i // shift) % w.n in f)


def lift_congruence_power(w: Wdl, k: int, x: int, theta: Partition) -> Partition:
    """Tuples identified iff their x-th coordinates are theta-equivalent."""
    if not 0 <= x < k:
        raise InvalidCoordinate(f"coordinate {x} outside 0..{k - 1}")
    if theta.n != w.n:
        raise InvalidInput("congruence size does not match the base carrier")
    shift = w.n ** (k - 1 - x)
    return Partition.make(w.n ** k,
                          [theta.block_of[(i // shift) % w.n]
                           for i in range(w.n ** k)])


def subalgebra_generated(w: Wdl, seed: Iterable[int]) -> frozenset[int]:
    """Least subset containing seed and the bounds, closed under all four ops."""
    cur = set(seed) | {w.bottom, w.top}
    while True:
        new = set(cur)
        for x in cur:
            new.add(w.delta[x])
            new.add(w.nabla[x])
            for y in cur:
                new.add(w.meet(x, y))
                new.add(w.join(x, y))
        if new == cur:
            return frozenset(cur)
        cur = new


def quotient(w: Wdl, theta: Partition) -> tuple[Wdl, tuple[int, ...]]:
    """Factor algebra and the projection map; blocks ordered by least member.

    Well-definedness of the block operations is re-verified exhaustively
    rather than trusted, so a non-congruence cannot slip through.
    """
    ok, witness = cg.is_congruence(w, theta)
    if not ok:
        raise NotACongruence(witness)
    blocks = theta.blocks()
    k = len(blocks)
    bl = theta.block_of
    reps = [blk[0] for blk in blocks]
    rows = [[any(w.le(x, y) for x in blocks[i] for y in blocks[j])
             for j in range(k)] for i in range(k)]
    labels = [w.format_set(blk) for blk in blocks]
    lattice = lat.validate_lattice(rows, labels)
    delta = [bl[w.delta[r]] for r in reps]
    nabla = [bl[w.nabla[r]] for r in reps]
    for x in range(w.n):
        if bl[w.delta[x]] != delta[bl[x]] or bl[w.nabla[x]] != nabla[bl[x]]:
            raise NotACongruence(("unary_not_well_defined", x))
        for y in range(w.n):
            if bl[w.meet(x, y)] != lattice.meet(bl[x], bl[y]):
                raise NotACongruence(("meet_not_well_defined", (x, y)))
            if bl[w.join(x, y)] != lattice.join(bl[x], bl[y]):
                raise NotACongruence(("join_not_well_defined", (x, y)))
    return build_wdl(lattice, delta, nabla), tuple(bl)
