"""Finite bounded lattices as explicit order / meet / join tables.

Elements are dense indices 0..n-1; labels are presentation-only.  The order
relation is stored as one bitmask per element (bit j of up[i] set iff i <= j),
which keeps the exhaustive desk-scale algorithms cheap and allocation-free.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Sequence

from .errors import (
    InvalidInput,
    NoBounds,
    NotALattice,
    NotAPartialOrder,
    SizeCapExceeded,
)

# Subset-enumerating operations refuse carriers larger than this.  The
# congruence / normal-filter machinery is only documented up to n = 16.
SUBSET_ENUM_CAP = 30


@dataclass(frozen=True)
class BoundedLattice:
    """A finite bounded lattice.

    up[i] / down[i] are bitmasks of the principal up-set / down-set of i.
    meet_table and join_table are n*n element tables consistent with the
    order.  Use validate_lattice() to build one from a raw relation; the
    constructors in construct.py build trusted instances directly.
    """

    n: int
    up: tuple[int, ...]
    down: tuple[int, ...]
    meet_table: tuple[tuple[int, ...], ...]
    join_table: tuple[tuple[int, ...], ...]
    bottom: int
    top: int
    labels: tuple[str, ...]

    def le(self, x: int, y: int) -> bool:
        return bool(self.up[x] >> y & 1)

    def meet(self, x: int, y: int) -> int:
        return self.meet_table[x][y]

    def join(self, x: int, y: int) -> int:
        return self.join_table[x][y]

    def meet_all(self, xs: Iterable[int]) -> int:
        out = self.top
        for x in xs:
            out = self.meet_table[out][x]
        return out

    def join_all(self, xs: Iterable[int]) -> int:
        out = self.bottom
        for x in xs:
            out = self.join_table[out][x]
        return out

    def elements(self) -> range:
        return range(self.n)

    @property
    def full_mask(self) -> int:
        return (1 << self.n) - 1

    def upset(self, x: int) -> frozenset[int]:
        return _mask_to_set(self.up[x])

    def downset(self, x: int) -> frozenset[int]:
        return _mask_to_set(self.down[x])

    def label(self, x: int) -> str:
        return self.labels[x]

    def index_of_label(self, name: str) -> int:
        try:
            return self.labels.index(name)
        except ValueError:
            raise InvalidInput(f"unknown element label {name!r}") from None

    def format_set(self, s: Iterable[int]) -> str:
        return "{" + ",".join(self.labels[i] for i in sorted(s)) + "}"

    def same_carrier(self, other: "BoundedLattice") -> bool:
        return self.n == other.n and self.up == other.up

    def relabel(self, labels: Sequence[str]) -> "BoundedLattice":
        labels = _check_labels(self.n, labels)
        return BoundedLattice(self.n, self.up, self.down, self.meet_table,
                              self.join_table, self.bottom, self.top, labels)

    def dual(self) -> "BoundedLattice":
        """The same carrier upside down (meets and joins swapped)."""
        return BoundedLattice(self.n, self.down, self.up, self.join_table,
                              self.meet_table, self.top, self.bottom, self.labels)


def _mask_to_set(mask: int) -> frozenset[int]:
    out = []
    while mask:
        b = mask & -mask
        out.append(b.bit_length() - 1)
        mask ^= b
    return frozenset(out)


def _set_to_mask(s: Iterable[int]) -> int:
    mask = 0
    for x in s:
        mask |= 1 << x
    return mask


def _check_labels(n: int, labels: Sequence[str] | None) -> tuple[str, ...]:
    if labels is None:
        return tuple(str(i) for i in range(n))
    labels = tuple(str(x) for x in labels)
    if len(labels) != n:
        raise InvalidInput(f"expected {n} labels, got {len(labels)}")
    if len(set(labels)) != n:
        raise InvalidInput("labels must be unique")
    return labels


def validate_lattice(leq: Sequence[Sequence[object]] | Sequence[int],
                     labels: Sequence[str] | None = None) -> BoundedLattice:
    """Check that a relation is a bounded lattice order and build the tables.

    `leq` is an n*n matrix of truthy values (leq[i][j] iff i <= j), or
    pre-packed bitmask rows.  Raises NotAPartialOrder / NotALattice /
    NoBounds with a witness on failure.
    """
    n = len(leq)
    if n < 1:
        raise InvalidInput("a bounded lattice needs at least one element")
    if isinstance(leq[0], int):
        up = tuple(int(r) for r in leq)  # type: ignore[arg-type]
        if any(r >> n for r in up):
            raise InvalidInput("bitmask row exceeds carrier size")
    else:
        rows = []
        for row in leq:  # type: ignore[assignment]
            row = list(row)
            if len(row) != n:
                raise InvalidInput("relation matrix must be square")
            rows.append(_set_to_mask(j for j, v in enumerate(row) if v))
        up = tuple(rows)

    for i in range(n):
        if not up[i] >> i & 1:
            raise NotAPartialOrder("missing reflexivity", (i, i))
    for i in range(n):
        for j in range(i + 1, n):
            if up[i] >> j & 1 and up[j] >> i & 1:
                raise NotAPartialOrder("antisymmetry fails", (i, j))
    for i in range(n):
        rest = up[i] & ~(1 << i)
        while rest:
            b = rest & -rest
            j = b.bit_length() - 1
            rest ^= b
            if up[j] & ~up[i]:
                k = ((up[j] & ~up[i]) & -(up[j] & ~up[i])).bit_length() - 1
                raise NotAPartialOrder(f"transitivity fails through {j}", (i, k))

    down = tuple(_set_to_mask(i for i in range(n) if up[i] >> j & 1)
                 for j in range(n))

    meet_t = [[0] * n for _ in range(n)]
    join_t = [[0] * n for _ in range(n)]
    for i in range(n):
        for j in range(i, n):
            m = _extreme(down[i] & down[j], down)
            if m is None:
                raise NotALattice("meet", (i, j))
            w = _extreme(up[i] & up[j], up)
            if w is None:
                raise NotALattice("join", (i, j))
            meet_t[i][j] = meet_t[j][i] = m
            join_t[i][j] = join_t[j][i] = w

    bottom = next((i for i in range(n) if up[i] == (1 << n) - 1), None)
    top = next((i for i in range(n) if down[i] == (1 << n) - 1), None)
    if bottom is None or top is None:
        raise NoBounds("no global minimum/maximum")  # unreachable once joins exist

    return BoundedLattice(n, up, down,
                          tuple(tuple(r) for r in meet_t),
                          tuple(tuple(r) for r in join_t),
                          bottom, top, _check_labels(n, labels))


def _extreme(candidates: int, reach: tuple[int, ...]) -> int | None:
    """The candidate that covers the whole candidate set, if one exists.

    With reach = down-masks this is the greatest candidate (every candidate
    below it); with reach = up-masks, the least.  Returns None when the
    candidate set has no such extreme, i.e. the bound is missing.
    """
    mask = candidates
    while mask:
        b = mask & -mask
        x = b.bit_length() - 1
        mask ^= b
        if candidates & ~reach[x] == 0:
            return x
    return None


def lattice_from_covers(n: int, covers: Iterable[tuple[int, int]],
                        labels: Sequence[str] | None = None) -> BoundedLattice:
    """Build from a cover list ((i, j) meaning i is covered by j)."""
    up = [1 << i for i in range(n)]
    edges = []
    for i, j in covers:
        if not (0 <= i < n and 0 <= j < n):
            raise InvalidInput(f"cover ({i}, {j}) out of range")
        edges.append((i, j))
    # reflexive-transitive closure by iterating until stable
    changed = True
    while changed:
        changed = False
        for i, j in edges:
            new = up[i] | up[j]
            if new != up[i]:
                up[i] = new
                changed = True
    for i in range(n):
        for j in range(n):
            if i != j and up[i] >> j & 1 and up[j] >> i & 1:
                raise NotAPartialOrder("covers contain a cycle", (i, j))
    return validate_lattice(tuple(up), labels)


def covers(lat: BoundedLattice) -> list[tuple[int, int]]:
    """All pairs (x, y) with x < y and nothing strictly between."""
    out = []
    for x in range(lat.n):
        strict = lat.up[x] & ~(1 << x)
        rest = strict
        while rest:
            b = rest & -rest
            y = b.bit_length() - 1
            rest ^= b
            between = strict & lat.down[y] & ~(1 << y)
            if between == 0:
                out.append((x, y))
    return sorted(out)


def join_irreducibles(lat: BoundedLattice) -> frozenset[int]:
    """Elements v with v != join of everything strictly below v."""
    out = []
    for v in range(lat.n):
        below = _mask_to_set(lat.down[v] & ~(1 << v))
        if lat.join_all(below) != v:
            out.append(v)
    return frozenset(out)


def meet_irreducibles(lat: BoundedLattice) -> frozenset[int]:
    out = []
    for v in range(lat.n):
        above = _mask_to_set(lat.up[v] & ~(1 << v))
        if lat.meet_all(above) != v:
            out.append(v)
    return frozenset(out)


def is_distributive(lat: BoundedLattice) -> tuple[bool, tuple[int, int, int] | None]:
    """Direct triple check of x ^ (y v z) = (x ^ y) v (x ^ z)."""
    meet, join = lat.meet_table, lat.join_table
    for x in range(lat.n):
        mx = meet[x]
        for y in range(lat.n):
            for z in range(y, lat.n):
                if mx[join[y][z]] != join[mx[y]][mx[z]]:
                    return False, (x, y, z)
    return True, None


def find_isomorphism(l1: BoundedLattice, l2: BoundedLattice) -> tuple[int, ...] | None:
    """First order-isomorphism in lexicographic backtracking order, if any."""
    return _find_iso(l1, l2, None, None)


def _find_iso(l1: BoundedLattice, l2: BoundedLattice,
              ops1, ops2) -> tuple[int, ...] | None:
    """Backtracking search for an order iso, optionally respecting unary ops.

    ops1/ops2 are parallel lists of unary tables that the mapping must
    commute with (used for full-algebra isomorphisms).
    """
    if l1.n != l2.n:
        return None
    n = l1.n
    prof1 = [(l1.up[i].bit_count(), l1.down[i].bit_count()) for i in range(n)]
    prof2 = [(l2.up[i].bit_count(), l2.down[i].bit_count()) for i in range(n)]
    if sorted(prof1) != sorted(prof2):
        return None
    cand = [[j for j in range(n) if prof2[j] == prof1[i]] for i in range(n)]
    phi = [-1] * n
    used = [False] * n

    def ops_ok(x: int) -> bool:
        if ops1 is None:
            return True
        for t1, t2 in zip(ops1, ops2):
            # image of x fixed: forward constraint where defined
            if phi[t1[x]] != -1 and phi[t1[x]] != t2[phi[x]]:
                return False
            # x may itself be the op-image of an already-assigned element
            for z in range(n):
                if phi[z] != -1 and t1[z] == x and t2[phi[z]] != phi[x]:
                    return False
        return True

    def extend(i: int) -> bool:
        if i == n:
            return True
        for j in cand[i]:
            if used[j]:
                continue
            ok = all((l1.le(k, i) == l2.le(phi[k], j)) and
                     (l1.le(i, k) == l2.le(j, phi[k]))
                     for k in range(i))
            if not ok:
                continue
            phi[i] = j
            used[j] = True
            if ops_ok(i) and extend(i + 1):
                return True
            phi[i] = -1
            used[j] = False
        return False

    return tuple(phi) if extend(0) else None


def is_sublattice_closed(lat: BoundedLattice, s: frozenset[int]) -> bool:
    """Closure under meet and join, bounds included."""
    if lat.bottom not in s or lat.top not in s:
        return False
    elems = sorted(s)
    return all(lat.meet(x, y) in s and lat.join(x, y) in s
               for x in elems for y in elems)


def upset_enumerate(lat: BoundedLattice) -> list[frozenset[int]]:
    """All nonempty upward-closed subsets, ordered by bitmask value."""
    return [_mask_to_set(m) for m in upset_masks(lat)]


def upset_masks(lat: BoundedLattice) -> list[int]:
    if lat.n > SUBSET_ENUM_CAP:
        raise SizeCapExceeded(f"subset enumeration capped at {SUBSET_ENUM_CAP} elements")
    n = lat.n
    # tops first: anything strictly above element i precedes i in this order
    order = sorted(range(n), key=lambda i: lat.up[i].bit_count())
    acc: list[int] = []

    def walk(pos: int, mask: int) -> None:
        if pos == n:
            if mask:
                acc.append(mask)
            return
        e = order[pos]
        walk(pos + 1, mask)
        above = lat.up[e] & ~(1 << e)
        if above & ~mask == 0:
            walk(pos + 1, mask | 1 << e)

    walk(0, 0)
    acc.sort()
    return acc


def sublattice(lat: BoundedLattice, elems: Sequence[int]) -> BoundedLattice:
    """Induced order on a meet/join-closed subset, re-indexed along sorted(elems)."""
    elems = sorted(elems)
    rows = [[lat.le(x, y) for y in elems] for x in elems]
    return validate_lattice(rows, [lat.labels[x] for x in elems])


def set_mask(s: Iterable[int]) -> int:
    return _set_to_mask(s)


def mask_set(mask: int) -> frozenset[int]:
    return _mask_to_set(mask)
