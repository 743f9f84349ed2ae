"""Built-in example algebras, the single source of truth for golden tests.

Each entry stores its cover list and both complementation tables verbatim;
entries are validated against the six axioms at load time, and the two
entries that also arise from constructions (P6 as a product of chains, L9
as a square of a chain) are cross-checked against those constructions by
catalog_warnings().
"""

from __future__ import annotations

from functools import lru_cache

from . import construct
from . import lattice as lat
from . import wdl as wdlmod
from .errors import NotAWdl, UnknownName
from .wdl import Wdl

# name -> (labels, covers, delta, nabla); cover (a, b) means a is covered by b
_ENTRIES: dict[str, tuple[list[str], list[tuple[str, str]],
                          dict[str, str], dict[str, str]]] = {
    "M42": (
        ["0", "a", "b", "e", "1"],
        [("0", "a"), ("0", "b"), ("a", "e"), ("b", "e"), ("e", "1")],
        {"0": "1", "a": "1", "b": "1", "e": "1", "1": "0"},
        {"0": "1", "a": "b", "b": "a", "e": "0", "1": "0"},
    ),
    "P6": (
        ["0", "u", "v", "a", "b", "1"],
        [("0", "u"), ("0", "v"), ("u", "a"), ("v", "a"), ("v", "b"),
         ("a", "1"), ("b", "1")],
        {"0": "1", "u": "b", "v": "1", "a": "b", "b": "u", "1": "0"},
        {"0": "1", "u": "b", "v": "u", "a": "0", "b": "u", "1": "0"},
    ),
    "L6": (
        ["0", "u", "v", "a", "b", "1"],
        [("0", "u"), ("0", "v"), ("u", "a"), ("v", "a"), ("v", "b"),
         ("a", "1"), ("b", "1")],
        {"0": "1", "u": "b", "v": "1", "a": "b", "b": "u", "1": "0"},
        {"0": "1", "u": "v", "v": "u", "a": "0", "b": "0", "1": "0"},
    ),
    "K7": (
        ["0", "u", "v", "w", "a", "b", "1"],
        [("0", "u"), ("0", "v"), ("0", "w"), ("u", "a"), ("w", "a"),
         ("w", "b"), ("v", "b"), ("a", "1"), ("b", "1")],
        {"0": "1", "u": "b", "v": "a", "w": "1", "a": "v", "b": "u", "1": "0"},
        {"0": "1", "u": "v", "v": "u", "w": "0", "a": "0", "b": "0", "1": "0"},
    ),
    "L7": (
        ["0", "u", "v", "w", "a", "b", "1"],
        [("0", "u"), ("0", "v"), ("0", "w"), ("u", "a"), ("w", "a"),
         ("w", "b"), ("v", "b"), ("a", "1"), ("b", "1")],
        {"0": "1", "u": "1", "v": "1", "w": "1", "a": "b", "b": "a", "1": "0"},
        {"0": "1", "u": "v", "v": "u", "w": "0", "a": "0", "b": "0", "1": "0"},
    ),
    "M7": (
        ["0", "d", "c", "a", "b", "e", "1"],
        [("0", "d"), ("0", "c"), ("d", "a"), ("d", "b"), ("a", "e"),
         ("b", "e"), ("e", "1"), ("c", "1")],
        {"0": "1", "d": "1", "a": "1", "b": "1", "e": "c", "c": "e", "1": "0"},
        {"0": "1", "d": "c", "a": "0", "b": "0", "e": "0", "c": "d", "1": "0"},
    ),
    "N5": (
        ["0", "d", "e", "c", "1"],
        [("0", "d"), ("d", "e"), ("e", "1"), ("0", "c"), ("c", "1")],
        {"0": "1", "d": "1", "e": "c", "c": "e", "1": "0"},
        {"0": "1", "d": "c", "e": "0", "c": "d", "1": "0"},
    ),
    "L9": (
        ["0", "c", "v", "b", "w", "u", "a", "d", "1"],
        [("0", "c"), ("0", "v"), ("c", "b"), ("c", "w"), ("v", "w"),
         ("v", "u"), ("b", "a"), ("w", "a"), ("w", "d"), ("u", "d"),
         ("a", "1"), ("d", "1")],
        {"0": "1", "a": "u", "b": "u", "c": "1", "d": "b", "u": "b",
         "v": "1", "w": "1", "1": "0"},
        {"0": "1", "a": "0", "b": "u", "c": "u", "d": "0", "u": "b",
         "v": "b", "w": "0", "1": "0"},
    ),
}


def _l16_entry():
    # 4x4 grid, element (i, j) at index 4i + j.  Everything above u = (1,1)
    # is sent to 0 by nabla, the three lower-left chain elements a, b, c trade
    # places with their images an, bn, cn; delta is the dual picture around
    # t = (2,2) with mirror pairs c/cd, d/dd, e/an.
    grid_labels = {
        (0, 0): "0", (0, 1): "cn", (0, 2): "bn", (0, 3): "an",
        (1, 0): "a", (1, 1): "u", (1, 2): "v", (1, 3): "dd",
        (2, 0): "b", (2, 1): "w", (2, 2): "t", (2, 3): "cd",
        (3, 0): "c", (3, 1): "d", (3, 2): "e", (3, 3): "1",
    }
    labels = [grid_labels[(i, j)] for i in range(4) for j in range(4)]
    covers = []
    for i in range(4):
        for j in range(4):
            if i < 3:
                covers.append((grid_labels[(i, j)], grid_labels[(i + 1, j)]))
            if j < 3:
                covers.append((grid_labels[(i, j)], grid_labels[(i, j + 1)]))
    nabla = {}
    delta = {}
    mirror_n = {"a": "an", "b": "bn", "c": "cn"}
    mirror_d = {"c": "cd", "d": "dd", "e": "an"}
    for (i, j), name in grid_labels.items():
        if name == "0":
            nabla[name] = "1"
        elif i >= 1 and j >= 1:
            nabla[name] = "0"
        elif name in mirror_n:
            nabla[name] = mirror_n[name]
        else:
            nabla[name] = {v: k for k, v in mirror_n.items()}[name]
        if name == "1":
            delta[name] = "0"
        elif i <= 2 and j <= 2:
            delta[name] = "1"
        elif name in mirror_d:
            delta[name] = mirror_d[name]
        else:
            delta[name] = {v: k for k, v in mirror_d.items()}[name]
    return labels, covers, delta, nabla


_ENTRIES["L16"] = _l16_entry()

CATALOG_NAMES = ("C2", "C3", "C4", "C5", "C6", "C7",
                 "M42", "P6", "L6", "K7", "L7", "M7", "N5", "L9", "L16")


def _build(labels, covers, delta, nabla) -> Wdl:
    pos = {name: i for i, name in enumerate(labels)}
    lattice = lat.lattice_from_covers(
        len(labels), [(pos[a], pos[b]) for a, b in covers], labels)
    return wdlmod.build_wdl(lattice,
                            [pos[delta[x]] for x in labels],
                            [pos[nabla[x]] for x in labels])


@lru_cache(maxsize=None)
def catalog(name: str) -> Wdl:
    """Named example algebra; axioms are verified on construction."""
    key = name.upper()
    if key.startswith("C") and key[1:].isdigit() and key in CATALOG_NAMES:
        return construct.chain(int(key[1:]))
    if key not in _ENTRIES:
        raise UnknownName(f"unknown catalog entry {name!r} "
                          f"(known: {', '.join(CATALOG_NAMES)})")
    return _build(*_ENTRIES[key])


def catalog_names() -> tuple[str, ...]:
    return CATALOG_NAMES


def catalog_warnings() -> list[str]:
    """Validation findings: axiom failures and table/construction mismatches."""
    warnings = []
    for name in CATALOG_NAMES:
        try:
            catalog(name)
        except NotAWdl as exc:
            warnings.append(f"{name}: marked unverified, axioms fail: {exc}")
    warnings += _cross_check("P6", construct.product(construct.chain(2), construct.chain(3)),
                             _p6_product_map())
    warnings += _cross_check("L9", construct.power(construct.chain(3), 2),
                             _l9_power_map())
    return warnings


def _p6_product_map() -> dict[str, int]:
    # catalog label -> (i, j) in C2 x C3, row-major index 3i + j
    pairs = {"0": (0, 0), "u": (1, 0), "v": (0, 1), "a": (1, 1),
             "b": (0, 2), "1": (1, 2)}
    return {k: 3 * i + j for k, (i, j) in pairs.items()}


def _l9_power_map() -> dict[str, int]:
    pairs = {"0": (0, 0), "c": (0, 1), "b": (0, 2), "v": (1, 0),
             "w": (1, 1), "a": (1, 2), "u": (2, 0), "d": (2, 1), "1": (2, 2)}
    return {k: 3 * i + j for k, (i, j) in pairs.items()}


def _cross_check(name: str, built: Wdl, label_map: dict[str, int]) -> list[str]:
    """Compare a catalog entry with its construction through a pinned map."""
    entry = catalog(name)
    out = []
    phi = [label_map[entry.label(x)] for x in range(entry.n)]
    for x in range(entry.n):
        for y in range(entry.n):
            if entry.le(x, y) != built.le(phi[x], phi[y]):
                out.append(f"{name}: order disagrees with construction at "
                           f"({entry.label(x)}, {entry.label(y)})")
    for x in range(entry.n):
        if phi[entry.delta[x]] != built.delta[phi[x]]:
            out.append(f"{name}: printed delta({entry.label(x)}) disagrees "
                       f"with the construction")
        if phi[entry.nabla[x]] != built.nabla[phi[x]]:
            out.append(f"{name}: printed nabla({entry.label(x)}) disagrees "
                       f"with the construction")
    return out
