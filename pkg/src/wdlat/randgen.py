"""Seeded random instances for the property suites.

Random distributive lattices are built as downset lattices of random posets
(every finite distributive lattice arises this way), then equipped with a
dicomplementation from a random superset of the irreducibles, which always
satisfies the axioms.
"""

from __future__ import annotations

import random

from . import lattice as lat
from . import wdl as wdlmod
from .lattice import BoundedLattice
from .wdl import Wdl


def random_poset_relation(rng: random.Random, m: int, edge_p: float = 0.4) -> list[int]:
    """Up-masks of a random partial order on 0..m-1 (edges only i < j)."""
    up = [1 << i for i in range(m)]
    for i in range(m - 1, -1, -1):
        for j in range(i + 1, m):
            if rng.random() < edge_p:
                up[i] |= up[j]
    return up


def downset_lattice(up: list[int]) -> BoundedLattice:
    """The lattice of downward-closed subsets of a poset, ordered by inclusion."""
    m = len(up)
    down_of = [0] * m
    for i in range(m):
        for j in range(m):
            if up[j] >> i & 1:
                down_of[i] |= 1 << j
    downsets = [d for d in range(1 << m)
                if all(not (d >> i & 1) or (down_of[i] & ~d) == 0 for i in range(m))]
    rows = [[(a & ~b) == 0 for b in downsets] for a in downsets]
    return lat.validate_lattice(rows)


def random_distributive_lattice(rng: random.Random, max_size: int = 8) -> BoundedLattice:
    while True:
        m = rng.randint(1, 6)
        l = downset_lattice(random_poset_relation(rng, m))
        if 2 <= l.n <= max_size:
            return l


def random_distributive_wdl(rng: random.Random, max_size: int = 8) -> Wdl:
    """Distributive carrier with a generator-based dicomplementation."""
    lattice = random_distributive_lattice(rng, max_size)
    ji = lat.join_irreducibles(lattice)
    mi = lat.meet_irreducibles(lattice)
    extra_g = frozenset(x for x in lattice.elements()
                        if x != lattice.bottom and rng.random() < 0.3)
    extra_h = frozenset(x for x in lattice.elements()
                        if x != lattice.top and rng.random() < 0.3)
    return wdlmod.standard_dicomplementation(lattice, ji | extra_g, mi | extra_h)


def random_regular_distributive_wdl(rng: random.Random, max_size: int = 8) -> Wdl:
    from .congruence import detcon
    while True:
        w = random_distributive_wdl(rng, max_size)
        if detcon(w).is_identity():
            return w
