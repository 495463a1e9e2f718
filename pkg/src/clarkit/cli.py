"""Command-line front end.

Subcommands: validate | clar | fries | enumerate | census | classify.
Inputs are spiral files (comma-separated face sizes), adjacency-list
files, or inline spiral literals.  Exit codes: 0 success, 1 validation
failure, 2 parse failure, 3 internal assertion.
"""

from __future__ import annotations

import argparse
import json
import os
import sys

from . import enumeration as enum_mod
from .clar import clar_number
from .errors import ClarkitError, OutOfSupportedRange, ParseError, ValidationError
from .errors import SpiralDoesNotClose, WrongOrder
from .fullerene import Fullerene, SpiralSequence, from_spiral, validate
from .matching import fries_number
from .rotation import cyclic_edge_connectivity_at_least, from_adjacency_text


def _load_fullerene(args) -> Fullerene:
    text = args.input
    if os.path.exists(text):
        with open(text) as fh:
            text = fh.read()
    fmt = args.format
    if fmt == "auto":
        head = text.strip().splitlines()[0] if text.strip() else ""
        fmt = "spiral" if ("," in head or ":" not in text) else "adjacency"
    if fmt == "spiral":
        line = text.strip().splitlines()[0]
        if "\t" in line:
            # catalog/analysis line: the spiral is the comma-bearing field
            line = next(tok for tok in line.split("\t") if "," in tok)
        return from_spiral(SpiralSequence.parse(line))
    return validate(from_adjacency_text(text))


def cmd_validate(args) -> int:
    f = _load_fullerene(args)
    at5 = cyclic_edge_connectivity_at_least(f.rot, 5)
    at6 = cyclic_edge_connectivity_at_least(f.rot, 6)
    clam = "5" if at5 and not at6 else ("unexpected" if at6 else "<5")
    print(
        f"fullerene: n={f.n}, pentagons={len(f.pentagon_ids)}, "
        f"hexagons={len(f.hexagon_ids)}, cλ={clam}"
    )
    return 0


def cmd_clar(args) -> int:
    f = _load_fullerene(args)
    res = clar_number(f, with_formulas=True)
    print(
        f"clar={res.clar_number} bound={res.bound} "
        f"extremal={'yes' if res.extremal else 'no'} formulas={res.formula_count}"
    )
    if args.formulas:
        for pat in res.formulas:
            print("formula: " + ",".join(str(h) for h in sorted(pat.hexagons)))
    if args.svg:
        from .drawing import clar_figure, save_figure

        save_figure(clar_figure(f, res.formulas[0]), args.svg)
        print(f"wrote {args.svg}")
    return 0


def cmd_fries(args) -> int:
    f = _load_fullerene(args)
    count, witness = fries_number(f)
    print(
        f"fries={count} pentagon_free={'yes' if witness.pentagon_free else 'no'}"
    )
    if args.svg:
        from .drawing import draw_fullerene, save_figure
        import matplotlib.pyplot as plt

        fig, ax = plt.subplots(figsize=(5, 5))
        draw_fullerene(
            f, ax=ax, matching=witness.matching,
            clar_hexagons=sorted(witness.alternating_hexagons),
        )
        save_figure(fig, args.svg)
        print(f"wrote {args.svg}")
    return 0


def cmd_enumerate(args) -> int:
    catalog = enum_mod.enumerate_isomers(
        args.n, workers=args.workers, with_fries=not args.no_fries
    )
    out = args.out or f"catalog-{args.n}.tsv"
    enum_mod.write_catalog(catalog, out)
    print(f"isomers={len(catalog)}")
    print(f"wrote {out}")
    return 0


def cmd_census(args) -> int:
    catalog = enum_mod.enumerate_isomers(
        args.n, workers=args.workers, with_fries=not args.no_fries
    )
    catalog, extremal = enum_mod.extremal_census(args.n, catalog=catalog)
    outdir = args.out or "."
    os.makedirs(outdir, exist_ok=True)
    cat_path = os.path.join(outdir, f"catalog-{args.n}.tsv")
    enum_mod.write_catalog(catalog, cat_path)
    enum_mod.write_analysis(
        catalog, os.path.join(outdir, f"catalog-{args.n}.analysis.tsv")
    )
    with open(os.path.join(outdir, f"extremal-{args.n}.tsv"), "w", newline="\n") as fh:
        for e in extremal:
            fh.write(f"{e.canonical}\t{e.clar}\t{','.join(e.component_tags)}\n")
    if args.n >= 60 and extremal:
        counts = enum_mod.census_breakdown(extremal)
        with open(os.path.join(outdir, f"breakdown-{args.n}.tsv"), "w", newline="\n") as fh:
            for key in (
                enum_mod.CLASS_B3,
                enum_mod.CLASS_B1K,
                enum_mod.CLASS_B2B1,
                enum_mod.CLASS_MAXIMAL,
            ):
                fh.write(f"{key}\t{counts[key]}\n")
    if args.figure and extremal:
        from .drawing import gallery_figure, save_figure

        graphs = []
        titles = []
        for e in extremal:
            f = from_spiral(SpiralSequence(e.canonical.spiral))
            pat = clar_number(f, with_formulas=True).formulas[0]
            graphs.append((f, pat))
            titles.append(",".join(e.component_tags))
        fig = gallery_figure(graphs, titles)
        fig_path = os.path.join(outdir, f"extremal-{args.n}.{args.figure}")
        save_figure(fig, fig_path)
        print(f"wrote {fig_path}")
    print(f"isomers={len(catalog)} extremal={len(extremal)}")
    return 0


def cmd_classify(args) -> int:
    from . import fragments as frag_mod

    f = _load_fullerene(args)
    comps = frag_mod.pentagon_components(f)
    records = []
    for g in comps:
        try:
            cls = frag_mod.classify_fragment(f, g)
            tag = cls.tag
        except ClarkitError:
            tag = "Other"
        try:
            lab = str(frag_mod.boundary_labeling(f, g))
        except ClarkitError:
            lab = "-"
        records.append(
            {
                "pentagons": len(g.faces),
                "tag": tag,
                "gamma": frag_mod.gamma(f, g),
                "boundary": lab,
            }
        )
    verdict = None
    if f.n >= 60:
        verdict = frag_mod.theorem2_classify(f)
    direct = clar_number(f).extremal
    print(f"components={len(comps)}")
    for r in records:
        print(
            f"component: pentagons={r['pentagons']} tag={r['tag']} "
            f"gamma={r['gamma']} boundary={r['boundary']}"
        )
    t2 = "n/a" if verdict is None else ("extremal" if verdict else "not-extremal")
    print(
        f"theorem2={t2} direct={'extremal' if direct else 'not-extremal'}"
    )
    print(
        json.dumps(
            {
                "n": f.n,
                "components": records,
                "theorem2": verdict,
                "direct_extremal": direct,
            },
            sort_keys=True,
        )
    )
    return 0


def build_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(
        prog="clarkit",
        description="Exact Clar, Fries and census analysis of fullerene graphs",
    )
    sub = ap.add_subparsers(dest="command", required=True)

    def add_input(p):
        p.add_argument("input", help="spiral/adjacency file or inline spiral")
        p.add_argument(
            "--format",
            choices=("auto", "spiral", "adjacency"),
            default="auto",
        )

    p = sub.add_parser("validate", help="validate a fullerene input")
    add_input(p)
    p.set_defaults(func=cmd_validate)

    p = sub.add_parser("clar", help="Clar number, formulas, drawing")
    add_input(p)
    p.add_argument("--formulas", action="store_true", help="list all Clar formulas")
    p.add_argument("--svg", help="write a Clar-formula figure to this path")
    p.set_defaults(func=cmd_clar)

    p = sub.add_parser("fries", help="Fries number and witness")
    add_input(p)
    p.add_argument("--svg", help="write a Fries-structure figure to this path")
    p.set_defaults(func=cmd_fries)

    p = sub.add_parser("enumerate", help="enumerate all isomers for n")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--out", help="catalog output path")
    p.add_argument("--workers", type=int, default=None)
    p.add_argument("--no-fries", action="store_true")
    p.set_defaults(func=cmd_enumerate)

    p = sub.add_parser("census", help="catalog, analysis, extremal census")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--out", help="output directory")
    p.add_argument("--workers", type=int, default=None)
    p.add_argument("--no-fries", action="store_true")
    p.add_argument(
        "--figure",
        nargs="?",
        const="svg",
        choices=("svg", "png"),
        help="also render the extremal gallery",
    )
    p.set_defaults(func=cmd_census)

    p = sub.add_parser("classify", help="fragment classification report")
    add_input(p)
    p.set_defaults(func=cmd_classify)
    return ap


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except ParseError as exc:
        print(f"parse error: {exc}", file=sys.stderr)
        return 2
    except (ValidationError, SpiralDoesNotClose, OutOfSupportedRange, WrongOrder) as exc:
        print(f"validation error: {exc}", file=sys.stderr)
        return 1
    except (AssertionError, ClarkitError) as exc:
        print(f"internal error: {exc}", file=sys.stderr)
        return 3


if __name__ == "__main__":
    sys.exit(main())
