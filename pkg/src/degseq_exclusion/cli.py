"""Command-line front end.

Exit status: 0 on success, 1 when ``verify`` finds a counterexample, 2 on a
usage or input error.
"""

from __future__ import annotations

import argparse
import json
import os
import sys
from typing import Optional, Sequence

from .classify import classify
from .enumeration import Universe
from .graph import construct
from .io import format_sequence, from_graph6, parse_sequence, to_graph6
from .sequences import (
    DEFAULT_BOUND,
    enumerate_realizations,
    find_precedes_witness,
    is_graphical,
    realize_one,
)
from .split import CompositionSpec, compose
from .verify import MUTANTS, build_exclusion_poset, run_claim


class UsageError(Exception):
    pass


def _seq(text: str) -> tuple:
    try:
        return parse_sequence(text)
    except ValueError as exc:
        raise argparse.ArgumentTypeError(str(exc)) from None


def _graphical(d: tuple) -> tuple:
    if not is_graphical(d):
        raise UsageError(f"{format_sequence(d) or '()'} is not graphical")
    return d


def _emit(args, record: dict, text: str):
    if args.json:
        print(json.dumps(record, sort_keys=True))
    else:
        print(text)


def cmd_check(args) -> int:
    ok = is_graphical(args.sequence)
    _emit(args, {"sequence": list(args.sequence), "graphical": ok}, "graphical" if ok else "not graphical")
    return 0


def cmd_realize(args) -> int:
    g = realize_one(_graphical(args.sequence))
    _emit(args, {"sequence": list(args.sequence), "graph6": to_graph6(g)}, to_graph6(g))
    return 0


def cmd_realizations(args) -> int:
    d = _graphical(args.sequence)
    if len(d) > args.bound:
        raise UsageError(f"sequence length {len(d)} exceeds --bound {args.bound}")
    reals = enumerate_realizations(d, args.bound)
    if args.json:
        print(json.dumps({"sequence": list(d), "count": len(reals), "graph6": [to_graph6(g) for g in reals]},
                         sort_keys=True))
    else:
        for g in reals:
            print(to_graph6(g))
        print(f"{len(reals)} realizations")
    return 0


def cmd_precedes(args) -> int:
    d1, d2 = _graphical(args.smaller), _graphical(args.larger)
    if len(d2) > args.bound:
        raise UsageError(f"sequence length {len(d2)} exceeds --bound {args.bound}")
    w = find_precedes_witness(d1, d2, args.bound)
    rec = {"smaller": list(d1), "larger": list(d2), "precedes": w is not None}
    text = "true" if w else "false"
    if w is not None:
        rec["witness"] = {"g1": to_graph6(w.g1), "g2": to_graph6(w.g2), "embedding": list(w.embedding)}
        text += f"\nwitness g1={to_graph6(w.g1)} g2={to_graph6(w.g2)} embedding={list(w.embedding)}"
    _emit(args, rec, text)
    return 0


def cmd_classify(args) -> int:
    d = _graphical(args.sequence)
    if len(d) > args.bound:
        raise UsageError(f"sequence length {len(d)} exceeds --bound {args.bound}")
    try:
        res = classify(d, args.exclude, args.bound)
    except ValueError as exc:
        raise UsageError(str(exc)) from None
    _emit(args, res.to_record(), res.to_text())
    return 0


def _graph_arg(text: str):
    try:
        return construct(text)
    except ValueError:
        return from_graph6(text)


def cmd_compose(args) -> int:
    try:
        s = from_graph6(args.split)
        a = [int(t) for t in args.a.split(",") if t.strip()] if args.a else []
        if args.cycle is not None:
            h = construct(f"C{args.cycle}")
        elif args.h is not None:
            h = _graph_arg(args.h)
        else:
            raise UsageError("give --cycle or --h")
        spec = CompositionSpec(s, tuple(a), h)
    except ValueError as exc:
        raise UsageError(str(exc)) from None
    g = compose(spec)
    rec = {"graph6": to_graph6(g), "sequence": list(g.degree_sequence()), "spec": spec.serialize()}
    _emit(args, rec, f"{to_graph6(g)}\n{format_sequence(g.degree_sequence())}")
    return 0


def cmd_verify(args) -> int:
    universe = None
    if args.graphs:
        universe = Universe.from_graph6_files(args.max_vertices, args.graphs)
    try:
        reports = run_claim(args.claim, args.max_vertices, universe, args.mutant, args.threads,
                            args.samples, args.seed, args.long)
    except ValueError as exc:
        raise UsageError(str(exc)) from None
    failed = sum(len(r.counterexamples) for r in reports)
    for r in reports:
        print(json.dumps(r.to_record(), sort_keys=True) if args.json else r.to_text())
    if not args.json:
        print(f"{failed} counterexamples")
    return 1 if failed else 0


def cmd_poset(args) -> int:
    try:
        poset = build_exclusion_poset(args.max_vertices)
    except ValueError as exc:
        raise UsageError(str(exc)) from None
    if args.dot:
        with open(args.dot, "w") as fh:
            fh.write(poset.to_dot())
    if args.csv:
        with open(args.csv, "w") as fh:
            fh.write(poset.to_csv())
    rec = {"nodes": len(poset.nodes), "covers": len(poset.covers)}
    _emit(args, rec, f"{len(poset.nodes)} sequences, {len(poset.covers)} cover relations")
    return 0


def cmd_universe(args) -> int:
    try:
        uni = Universe(args.max_vertices, workers=args.threads)
    except ValueError as exc:
        raise UsageError(str(exc)) from None
    count = uni.export_graph6(args.out)
    _emit(args, {"graphs": count, "path": args.out}, f"wrote {count} graphs to {args.out}")
    return 0


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--json", action="store_true", help="emit one JSON record per result")
    common.add_argument("--threads", type=int, default=os.cpu_count() or 1,
                        help="worker processes for exhaustive scans (output does not depend on it)")

    p = argparse.ArgumentParser(prog="degseq-exclusion", description=__doc__.splitlines()[0])
    sub = p.add_subparsers(dest="command", required=True)

    c = sub.add_parser("check", parents=[common], help="Erdős–Gallai graphicality test")
    c.add_argument("sequence", type=_seq)
    c.set_defaults(func=cmd_check)

    c = sub.add_parser("realize", parents=[common], help="one realization (graph6)")
    c.add_argument("sequence", type=_seq)
    c.set_defaults(func=cmd_realize)

    c = sub.add_parser("realizations", parents=[common], help="all realizations up to isomorphism")
    c.add_argument("sequence", type=_seq)
    c.add_argument("--bound", type=int, default=DEFAULT_BOUND)
    c.set_defaults(func=cmd_realizations)

    c = sub.add_parser("precedes", parents=[common], help="decide whether SMALLER precedes LARGER")
    c.add_argument("smaller", type=_seq)
    c.add_argument("larger", type=_seq)
    c.add_argument("--bound", type=int, default=DEFAULT_BOUND)
    c.set_defaults(func=cmd_precedes)

    c = sub.add_parser("classify", parents=[common], help="structural classification of a sequence")
    c.add_argument("--exclude", required=True, help="C4, M2, Cn:<n>, C4C5 or M2C4")
    c.add_argument("sequence", type=_seq)
    c.add_argument("--bound", type=int, default=DEFAULT_BOUND)
    c.set_defaults(func=cmd_classify)

    c = sub.add_parser("compose", parents=[common], help="build (S, A, B) o H")
    c.add_argument("--split", required=True, help="graph6 of the split graph S")
    c.add_argument("--a", default="", help="comma-separated indices of the clique side A")
    c.add_argument("--cycle", type=int, help="H is the cycle on this many vertices")
    c.add_argument("--h", help="H as graph6 or a family name such as K3,3")
    c.set_defaults(func=cmd_compose)

    c = sub.add_parser("verify", parents=[common], help="exhaustive certification")
    c.add_argument("--claim", required=True,
                   help="prop1, lemma3, lemma4, gadgets, thm-n:<n>, thm6, cor7, cor8, prop9, universe or all")
    c.add_argument("--max-vertices", type=int, required=True)
    c.add_argument("--mutant", choices=sorted(MUTANTS), help="run against a deliberately broken variant")
    c.add_argument("--graphs", action="append", metavar="FILE", help="graph6 file to use as the universe")
    c.add_argument("--samples", type=int, default=1000, help="random configurations per gadget")
    c.add_argument("--seed", type=int, default=0)
    c.add_argument("--long", action="store_true", help="allow 9-vertex cycle-exclusion runs (slow)")
    c.set_defaults(func=cmd_verify)

    c = sub.add_parser("poset", parents=[common], help="Hasse diagram of the exclusion order")
    c.add_argument("--max-vertices", type=int, required=True)
    c.add_argument("--dot", help="write DOT here")
    c.add_argument("--csv", help="write cover relations as CSV here")
    c.set_defaults(func=cmd_poset)

    c = sub.add_parser("universe", parents=[common], help="export all graphs up to a size as graph6")
    c.add_argument("--max-vertices", type=int, required=True)
    c.add_argument("--out", required=True)
    c.set_defaults(func=cmd_universe)
    return p


def main(argv: Optional[Sequence[str]] = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except UsageError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
