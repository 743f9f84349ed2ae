"""The .lat.json interchange format.

A UTF-8 JSON object with fields `name`, `size`, `covers` (pairs [i, j]
meaning i is covered by j), optional `labels`, and optional `delta` /
`nabla` arrays.  The order is the reflexive-transitive closure of the
covers; dangling indices and cycles are rejected.
"""

from __future__ import annotations

import json
from dataclasses import dataclass

from . import lattice as lat
from . import wdl as wdlmod
from .errors import FormatError, NotAPartialOrder
from .lattice import BoundedLattice
from .wdl import Wdl


@dataclass(frozen=True)
class LatFile:
    name: str
    lattice: BoundedLattice
    delta: tuple[int, ...] | None
    nabla: tuple[int, ...] | None

    def wdl(self) -> Wdl:
        if self.delta is None or self.nabla is None:
            raise FormatError(f"{self.name!r} carries no dicomplementation tables")
        return wdlmod.build_wdl(self.lattice, self.delta, self.nabla)


def loads(text: str) -> LatFile:
    try:
        doc = json.loads(text)
    except json.JSONDecodeError as exc:
        raise FormatError(f"invalid JSON: {exc}") from None
    if not isinstance(doc, dict):
        raise FormatError("top level must be an object")
    name = doc.get("name", "")
    if not isinstance(name, str):
        raise FormatError("'name' must be a string")
    size = doc.get("size")
    if not isinstance(size, int) or size < 1:
        raise FormatError("'size' must be a positive integer")
    covers = doc.get("covers")
    if not isinstance(covers, list):
        raise FormatError("'covers' must be an array of [i, j] pairs")
    pairs = []
    for c in covers:
        if (not isinstance(c, list) or len(c) != 2
                or not all(isinstance(x, int) for x in c)):
            raise FormatError(f"bad cover entry {c!r}")
        i, j = c
        if not (0 <= i < size and 0 <= j < size):
            raise FormatError(f"cover [{i}, {j}] has a dangling index")
        pairs.append((i, j))
    labels = doc.get("labels")
    if labels is not None:
        if (not isinstance(labels, list) or len(labels) != size
                or not all(isinstance(x, str) for x in labels)):
            raise FormatError("'labels' must be an array of size strings")
    try:
        lattice = lat.lattice_from_covers(size, pairs, labels)
    except NotAPartialOrder as exc:
        raise FormatError(f"covers are inconsistent: {exc}") from None

    def unary(key: str) -> tuple[int, ...] | None:
        arr = doc.get(key)
        if arr is None:
            return None
        if (not isinstance(arr, list) or len(arr) != size
                or not all(isinstance(x, int) and 0 <= x < size for x in arr)):
            raise FormatError(f"'{key}' must be an array of {size} element indices")
        return tuple(arr)

    return LatFile(name, lattice, unary("delta"), unary("nabla"))


def load(path: str) -> LatFile:
    with open(path, encoding="utf-8") as fh:
        return loads(fh.read())


def as_document(lattice: BoundedLattice, name: str,
                delta: tuple[int, ...] | None = None,
                nabla: tuple[int, ...] | None = None) -> dict:
    doc = {
        "name": name,
        "size": lattice.n,
        "covers": [list(c) for c in lat.covers(lattice)],
        "labels": list(lattice.labels),
    }
    if delta is not None:
        doc["delta"] = list(delta)
    if nabla is not None:
        doc["nabla"] = list(nabla)
    return doc


def dumps(obj: Wdl | BoundedLattice | LatFile, name: str = "") -> str:
    if isinstance(obj, LatFile):
        doc = as_document(obj.lattice, name or obj.name, obj.delta, obj.nabla)
    elif isinstance(obj, Wdl):
        doc = as_document(obj.lattice, name, obj.delta, obj.nabla)
    else:
        doc = as_document(obj, name)
    return json.dumps(doc, indent=2) + "\n"


def dump(obj: Wdl | BoundedLattice | LatFile, path: str, name: str = "") -> None:
    with open(path, "w", encoding="utf-8") as fh:
        fh.write(dumps(obj, name))
