"""Formal Concept Analysis front end.

Parses Burmeister .cxt files, computes derivations and the concept lattice,
and equips it with weak negation / weak opposition to produce a concept
algebra.  Concepts are enumerated by closing every object subset, which is
fine at the supported sizes (at most 20 objects / attributes).
"""

from __future__ import annotations

import random
from dataclasses import dataclass

from . import lattice as lat
from . import wdl as wdlmod
from .errors import FormatError, InvalidInput, SizeCapExceeded
from .wdl import Wdl

CONTEXT_CAP = 20


@dataclass(frozen=True)
class FormalContext:
    """Objects, attributes and an incidence relation (one bitmask per object)."""

    objects: tuple[str, ...]
    attributes: tuple[str, ...]
    rows: tuple[int, ...]  # rows[g] has bit m set iff object g has attribute m

    def __post_init__(self):
        if len(self.rows) != len(self.objects):
            raise InvalidInput("incidence height must match object count")
        if any(r >> len(self.attributes) for r in self.rows):
            raise InvalidInput("incidence width must match attribute count")
        if len(set(self.objects)) != len(self.objects):
            raise InvalidInput("object names must be unique")
        if len(set(self.attributes)) != len(self.attributes):
            raise InvalidInput("attribute names must be unique")

    def has(self, g: int, m: int) -> bool:
        return bool(self.rows[g] >> m & 1)

    @property
    def n_objects(self) -> int:
        return len(self.objects)

    @property
    def n_attributes(self) -> int:
        return len(self.attributes)


@dataclass(frozen=True)
class Concept:
    extent: frozenset[int]
    intent: frozenset[int]


def parse_cxt(text: str) -> FormalContext:
    """Burmeister format: 'B', blank, counts, blank, names, then X/. rows."""
    lines = text.split("\n")
    if lines and lines[-1] == "":
        lines = lines[:-1]

    def take(i: int, what: str) -> str:
        if i >= len(lines):
            raise FormatError(f"unexpected end of file, expected {what}")
        return lines[i]

    if take(0, "header 'B'").strip() != "B":
        raise FormatError("first line must be 'B'")
    if take(1, "blank line") != "":
        raise FormatError("expected blank line after the header")
    try:
        n_obj = int(take(2, "object count"))
        n_att = int(take(3, "attribute count"))
    except ValueError:
        raise FormatError("counts must be integers") from None
    if n_obj < 0 or n_att < 0:
        raise FormatError("counts must be nonnegative")
    if take(4, "blank line") != "":
        raise FormatError("expected blank line after the counts")
    pos = 5
    objects = [take(pos + i, "object name") for i in range(n_obj)]
    pos += n_obj
    attributes = [take(pos + i, "attribute name") for i in range(n_att)]
    pos += n_att
    rows = []
    for i in range(n_obj):
        row = take(pos + i, "incidence row")
        if len(row) != n_att:
            raise FormatError(f"row {i} has width {len(row)}, expected {n_att}")
        mask = 0
        for m, ch in enumerate(row):
            if ch == "X":
                mask |= 1 << m
            elif ch != ".":
                raise FormatError(f"illegal character {ch!r} in row {i}")
        rows.append(mask)
    if pos + n_obj != len(lines):
        raise FormatError("trailing content after the incidence rows")
    return FormalContext(tuple(objects), tuple(attributes), tuple(rows))


def emit_cxt(k: FormalContext) -> str:
    rows = ["".join("X" if k.has(g, m) else "." for m in range(k.n_attributes))
            for g in range(k.n_objects)]
    return "\n".join(["B", "", str(k.n_objects), str(k.n_attributes), ""]
                     + list(k.objects) + list(k.attributes) + rows) + "\n"


def derive_objects(k: FormalContext, a: frozenset[int]) -> frozenset[int]:
    """Attributes common to all objects of a (all attributes for empty a)."""
    mask = (1 << k.n_attributes) - 1
    for g in a:
        mask &= k.rows[g]
    return lat.mask_set(mask)


def derive_attributes(k: FormalContext, b: frozenset[int]) -> frozenset[int]:
    bmask = lat.set_mask(b)
    return frozenset(g for g in range(k.n_objects)
                     if k.rows[g] & bmask == bmask)


def concepts(k: FormalContext) -> list[Concept]:
    """All concepts, ordered by extent bitmask (a linear order refining subset)."""
    if k.n_objects > CONTEXT_CAP or k.n_attributes > CONTEXT_CAP:
        raise SizeCapExceeded(f"context enumeration capped at {CONTEXT_CAP}")
    seen = {}
    for mask in range(1 << k.n_objects):
        a = lat.mask_set(mask)
        intent = derive_objects(k, a)
        extent = derive_attributes(k, intent)
        emask = lat.set_mask(extent)
        if emask not in seen:
            seen[emask] = Concept(extent, intent)
    return [seen[m] for m in sorted(seen)]


def concept_algebra(k: FormalContext) -> Wdl:
    """The concept lattice with weak negation and weak opposition.

    delta of (A, B) is the concept of the complement of the extent,
    nabla the concept of the complement of the intent.
    """
    cs = concepts(k)
    index = {lat.set_mask(c.extent): i for i, c in enumerate(cs)}
    rows = [[c.extent <= d.extent for d in cs] for c in cs]
    labels = ["{" + ",".join(k.objects[g] for g in sorted(c.extent)) + "}"
              for c in cs]
    lattice = lat.validate_lattice(rows, labels)
    all_objects = frozenset(range(k.n_objects))
    all_attributes = frozenset(range(k.n_attributes))
    delta = []
    nabla = []
    for c in cs:
        comp = all_objects - c.extent
        ext = derive_attributes(k, derive_objects(k, comp))
        delta.append(index[lat.set_mask(ext)])
        compb = all_attributes - c.intent
        ext = derive_attributes(k, compb)
        nabla.append(index[lat.set_mask(ext)])
    return wdlmod.build_wdl(lattice, delta, nabla)


def random_context(rng: random.Random, n_objects: int, n_attributes: int,
                   density: float) -> FormalContext:
    """Seeded random context; incidence cells are independent Bernoulli draws."""
    rows = []
    for _ in range(n_objects):
        mask = 0
        for m in range(n_attributes):
            if rng.random() < density:
                mask |= 1 << m
        rows.append(mask)
    return FormalContext(tuple(f"g{i}" for i in range(n_objects)),
                         tuple(f"m{j}" for j in range(n_attributes)),
                         tuple(rows))
