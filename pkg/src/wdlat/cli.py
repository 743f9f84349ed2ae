"""Command line interface.

Exit codes: 0 on success, 1 on domain errors (diagnostics on stderr) or
failed checks, 2 on usage errors.  Every subcommand accepts --json for a
machine-readable report; emitting subcommands write .lat.json to stdout or
to the path given with -o.
"""

from __future__ import annotations

import argparse
import json
import sys

from . import congruence as cg
from . import construct
from . import fca as fcamod
from . import latjson
from . import nfilters as nf
from . import verify as vermod
from .catalog import catalog, catalog_names, catalog_warnings
from . import wdl as wdlmod
from .errors import FormatError, InvalidInput, WdlatError
from .wdl import Wdl


def _load(path: str) -> latjson.LatFile:
    return latjson.load(path)


def _load_wdl(path: str) -> tuple[str, Wdl]:
    lf = _load(path)
    return lf.name or path, lf.wdl()


def _emit(doc_text: str, out: str | None) -> None:
    if out:
        with open(out, "w", encoding="utf-8") as fh:
            fh.write(doc_text)
    else:
        sys.stdout.write(doc_text)


def _labels(w: Wdl, s) -> list[str]:
    return [w.label(x) for x in sorted(s)]


# -- subcommands -----------------------------------------------------------


def cmd_check(args) -> int:
    lf = _load(args.file)
    if lf.delta is None or lf.nabla is None:
        raise FormatError(f"{args.file} carries no delta/nabla tables to check")
    report = wdlmod.check_axioms(lf.lattice, lf.delta, lf.nabla)
    if args.json:
        doc = {
            "name": lf.name,
            "all_hold": report.ok(),
            "axioms": {a: (list(wit) if wit is not None else None)
                       for a, wit in report.witnesses},
        }
        print(json.dumps(doc, indent=2))
    elif report.ok():
        print("WDL: all 6 axioms hold")
    else:
        for a, wit in report.witnesses:
            if wit is not None:
                named = ",".join(lf.lattice.labels[x] for x in wit)
                print(f"axiom ({a}) fails at ({named})")
    return 0 if report.ok() else 1


def _classification_doc(name: str, w: Wdl) -> dict:
    c = wdlmod.classify(w)
    return {
        "name": name,
        "distributive": c.distributive,
        "boolean": c.boolean_wdl,
        "s_boolean": c.s_boolean,
        "weak_s_boolean": c.weak_s_boolean,
        "pure": c.pure,
        "skeleton": _labels(w, c.skeleton),
        "dual_skeleton": _labels(w, c.dual_skeleton),
        "center": _labels(w, c.center),
        "skeleton_is_boolean": c.skeleton_is_boolean,
        "dual_skeleton_is_boolean": c.dual_skeleton_is_boolean,
        "skeleton_is_ortholattice": c.skeleton_is_ortholattice,
        "dual_skeleton_is_ortholattice": c.dual_skeleton_is_ortholattice,
    }


def _structure_word(boolean: bool, ortho: bool) -> str:
    if boolean:
        return "Boolean"
    if ortho:
        return "ortholattice"
    return "not an ortholattice"


def classification_line(w: Wdl) -> str:
    c = wdlmod.classify(w)
    if c.s_boolean:
        sb = "S-Boolean"
    elif c.weak_s_boolean:
        sb = "weak S-Boolean"
    else:
        sb = "not S-Boolean"
    parts = [sb,
             "Boolean" if c.boolean_wdl else "not Boolean",
             "pure" if c.pure else "not pure"]
    s_word = _structure_word(c.skeleton_is_boolean, c.skeleton_is_ortholattice)
    sd_word = _structure_word(c.dual_skeleton_is_boolean, c.dual_skeleton_is_ortholattice)
    return (f"{', '.join(parts)}; S={w.format_set(c.skeleton)} ({s_word}), "
            f"S̄={w.format_set(c.dual_skeleton)} ({sd_word})")


def cmd_classify(args) -> int:
    name, w = _load_wdl(args.file)
    if args.json:
        print(json.dumps(_classification_doc(name, w), indent=2))
    else:
        print(classification_line(w))
        c = wdlmod.classify(w)
        print(f"B={w.format_set(c.center)}; "
              f"distributive: {'yes' if c.distributive else 'no'}")
    return 0


def cmd_skeleton(args) -> int:
    name, w = _load_wdl(args.file)
    c = wdlmod.classify(w)
    doc = {
        "name": name,
        "skeleton": _labels(w, c.skeleton),
        "dual_skeleton": _labels(w, c.dual_skeleton),
        "center": _labels(w, c.center),
        "dense": _labels(w, wdlmod.dense(w)),
        "dual_dense": _labels(w, wdlmod.dual_dense(w)),
        "skeleton_is_boolean": c.skeleton_is_boolean,
        "dual_skeleton_is_boolean": c.dual_skeleton_is_boolean,
        "skeleton_is_ortholattice": c.skeleton_is_ortholattice,
        "dual_skeleton_is_ortholattice": c.dual_skeleton_is_ortholattice,
    }
    if args.json:
        print(json.dumps(doc, indent=2))
    else:
        s_word = _structure_word(c.skeleton_is_boolean, c.skeleton_is_ortholattice)
        sd_word = _structure_word(c.dual_skeleton_is_boolean,
                                  c.dual_skeleton_is_ortholattice)
        print(f"S  = {w.format_set(c.skeleton)} ({s_word})")
        print(f"S̄  = {w.format_set(c.dual_skeleton)} ({sd_word})")
        print(f"B  = {w.format_set(c.center)} (Boolean)")
        print(f"D  = {w.format_set(wdlmod.dense(w))}")
        print(f"D̄  = {w.format_set(wdlmod.dual_dense(w))}")
    return 0


def cmd_nf(args) -> int:
    name, w = _load_wdl(args.file)
    nfs = nf.all_normal_filters(w)
    nis = nf.all_normal_ideals(w)
    iso, _ = nf.check_nf_ni_isomorphism(w)
    maxes = cg.maximal_normal_filters(w)
    semi = cg.is_semisimple(w)
    if args.json:
        doc = {
            "name": name,
            "normal_filters": [_labels(w, f) for f in nfs],
            "normal_ideals": [_labels(w, i) for i in nis],
            "nf_ni_isomorphic": iso,
            "maximal_normal_filters": [_labels(w, f) for f in maxes],
            "semisimple": semi,
        }
        print(json.dumps(doc, indent=2))
    else:
        print(f"NF(L): {len(nfs)} normal filters")
        for f in nfs:
            print(f"  {w.format_set(f)}")
        print(f"NI(L): {len(nis)} normal ideals")
        for i in nis:
            print(f"  {w.format_set(i)}")
        print(f"NF and NI isomorphic: {'yes' if iso else 'no'}")
        print("maximal proper normal filters: "
              + (", ".join(w.format_set(f) for f in maxes) or "none"))
        print(f"semisimple: {'yes' if semi else 'no'}")
    if args.out:
        _emit(latjson.dumps(nf.nf_lattice(w), name=f"NF({name})"), args.out)
    return 0


def cmd_con(args) -> int:
    name, w = _load_wdl(args.file)
    con = cg.all_congruences(w)
    si, monolith = cg.is_subdirectly_irreducible(w)
    phi = cg.detcon(w)
    doc = {
        "name": name,
        "count": len(con),
        "congruences": [[_labels(w, blk) for blk in p.blocks()]
                        for p in con.congruences],
        "regular": cg.is_regular(w),
        "simple": cg.is_simple(w),
        "subdirectly_irreducible": si,
        "monolith": ([_labels(w, blk) for blk in monolith.blocks()]
                     if monolith is not None else None),
        "semisimple": cg.is_semisimple(w),
        "detcon": [_labels(w, blk) for blk in phi.blocks()],
        "detcon_is_congruence": cg.is_congruence(w, phi)[0],
    }
    if args.json:
        print(json.dumps(doc, indent=2))
    else:
        print(f"Con(L): {doc['count']} congruences")
        for p in con.congruences:
            print("  " + " ".join(w.format_set(blk) for blk in p.blocks()))
        print(f"regular: {'yes' if doc['regular'] else 'no'}   "
              f"simple: {'yes' if doc['simple'] else 'no'}   "
              f"subdirectly irreducible: {'yes' if si else 'no'}   "
              f"semisimple: {'yes' if doc['semisimple'] else 'no'}")
        if monolith is not None:
            print("monolith: " + " ".join(w.format_set(b) for b in monolith.blocks()))
    return 0


def _resolve_elements(w: Wdl, spec: str) -> frozenset[int]:
    """Comma-separated labels, falling back to plain indices."""
    out = set()
    for tok in spec.split(","):
        tok = tok.strip()
        if tok in w.lattice.labels:
            out.add(w.lattice.index_of_label(tok))
        elif tok.isdigit() and int(tok) < w.n:
            out.add(int(tok))
        else:
            raise InvalidInput(f"unknown element {tok!r}")
    return frozenset(out)


def cmd_quotient(args) -> int:
    name, w = _load_wdl(args.file)
    if args.by_detcon:
        theta = cg.detcon(w)
        suffix = "detcon"
    else:
        theta = cg.theta_f(w, _resolve_elements(w, args.filter))
        suffix = "quotient"
    q, _ = construct.quotient(w, theta)
    _emit(latjson.dumps(q, name=f"{name}/{suffix}"), args.out)
    return 0


def cmd_product(args) -> int:
    n1, w1 = _load_wdl(args.file1)
    n2, w2 = _load_wdl(args.file2)
    _emit(latjson.dumps(construct.product(w1, w2), name=f"({n1}x{n2})"), args.out)
    return 0


def cmd_power(args) -> int:
    name, w = _load_wdl(args.file)
    _emit(latjson.dumps(construct.power(w, args.k), name=f"{name}^{args.k}"), args.out)
    return 0


def cmd_chain(args) -> int:
    _emit(latjson.dumps(construct.chain(args.n), name=f"C{args.n}"), args.out)
    return 0


def cmd_catalog(args) -> int:
    if args.validate:
        warnings = catalog_warnings()
        for msg in warnings:
            print(f"warning: {msg}")
        if not warnings:
            print(f"catalog OK ({len(catalog_names())} entries)")
        return 0
    if args.list:
        print("\n".join(catalog_names()))
        return 0
    if not args.name:
        print("usage: wdl catalog NAME (or --list / --validate)", file=sys.stderr)
        return 2
    _emit(latjson.dumps(catalog(args.name), name=args.name.upper()), args.out)
    return 0


def cmd_fca(args) -> int:
    with open(args.file, encoding="utf-8") as fh:
        k = fcamod.parse_cxt(fh.read())
    w = fcamod.concept_algebra(k)
    if args.json:
        print(json.dumps({
            "concepts": w.n,
            "algebra": latjson.as_document(w.lattice, args.file, w.delta, w.nabla),
        }, indent=2))
        return 0
    print(f"concepts: {w.n}", file=sys.stderr)
    _emit(latjson.dumps(w, name=args.file), args.out)
    return 0


def _print_results(title: str, results: list[vermod.CheckResult], as_json: bool) -> bool:
    ok = all(r.status != "fail" for r in results)
    if as_json:
        print(json.dumps({
            "algebra": title,
            "ok": ok,
            "results": [{"name": r.name, "status": r.status, "detail": r.detail}
                        for r in results],
        }, indent=2))
        return ok
    print(f"== {title}")
    for r in results:
        mark = {"ok": "ok  ", "fail": "FAIL", "skip": "skip"}[r.status]
        tail = f"  ({r.detail})" if r.detail and r.status != "ok" else ""
        print(f"  {mark} {r.name}{tail}")
    bad = sum(r.status == "fail" for r in results)
    print(f"  -> {len(results) - bad} passed/skipped, {bad} failed")
    return ok


def cmd_verify(args) -> int:
    ok = True
    if args.all_catalog:
        for name in catalog_names():
            ok &= _print_results(name, vermod.run_suite(catalog(name)), args.json)
    elif args.random:
        for title, results in vermod.run_random_suite(args.seed, args.random, args.size):
            ok &= _print_results(title, results, args.json)
    elif args.file:
        name, w = _load_wdl(args.file)
        ok = _print_results(name, vermod.run_suite(w), args.json)
    else:
        print("usage: wdl verify FILE | --all-catalog | --random N", file=sys.stderr)
        return 2
    return 0 if ok else 1


# -- parser ----------------------------------------------------------------


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(
        prog="wdl",
        description="Finite weakly dicomplemented lattices: checks and reports.")
    sub = p.add_subparsers(dest="command", required=True)

    def add(name, fn, **kwargs):
        sp = sub.add_parser(name, **kwargs)
        sp.set_defaults(fn=fn)
        sp.add_argument("--json", action="store_true", help="machine-readable output")
        return sp

    sp = add("check", cmd_check, help="verify the six axioms")
    sp.add_argument("file")

    sp = add("classify", cmd_classify, help="subclass flags and skeletons")
    sp.add_argument("file")

    sp = add("skeleton", cmd_skeleton, help="skeletons, center, dense sets")
    sp.add_argument("file")

    sp = add("nf", cmd_nf, help="normal filters and ideals")
    sp.add_argument("file")
    sp.add_argument("-o", "--out", help="also write NF(L) as .lat.json")

    sp = add("con", cmd_con, help="congruence lattice and decision flags")
    sp.add_argument("file")

    sp = add("quotient", cmd_quotient, help="factor algebra as .lat.json")
    sp.add_argument("file")
    g = sp.add_mutually_exclusive_group(required=True)
    g.add_argument("--filter", help="comma-separated labels of a normal filter")
    g.add_argument("--by-detcon", action="store_true",
                   help="factor by the determination congruence")
    sp.add_argument("-o", "--out")

    sp = add("product", cmd_product, help="direct product as .lat.json")
    sp.add_argument("file1")
    sp.add_argument("file2")
    sp.add_argument("-o", "--out")

    sp = add("power", cmd_power, help="pointwise power as .lat.json")
    sp.add_argument("file")
    sp.add_argument("k", type=int)
    sp.add_argument("-o", "--out")

    sp = add("chain", cmd_chain, help="chain with its unique structure")
    sp.add_argument("n", type=int)
    sp.add_argument("-o", "--out")

    sp = add("catalog", cmd_catalog, help="built-in example algebras")
    sp.add_argument("name", nargs="?")
    sp.add_argument("--list", action="store_true")
    sp.add_argument("--validate", action="store_true",
                    help="cross-check entries against their constructions")
    sp.add_argument("-o", "--out")

    sp = add("fca", cmd_fca, help="concept algebra of a .cxt context")
    sp.add_argument("file")
    sp.add_argument("-o", "--out")

    sp = add("verify", cmd_verify, help="run the structure-theorem suite")
    sp.add_argument("file", nargs="?")
    sp.add_argument("--all-catalog", action="store_true")
    sp.add_argument("--random", type=int, metavar="N",
                    help="run against N seeded random distributive algebras")
    sp.add_argument("--size", type=int, default=8)
    sp.add_argument("--seed", type=int, default=0)
    return p


def main(argv: list[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.fn(args)
    except WdlatError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1
    except OSError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1


if __name__ == "__main__":
    sys.exit(main())
