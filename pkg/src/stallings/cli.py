"""Command line front end.

Words use the package's text syntax ("xyXY"); generator lists are
comma-separated; families of subgroups are semicolon-separated generator
lists.  Exit codes: 0 success, 2 usage error, 3 guard violation; the
local-global subcommand maps its outcome to 0 (global solution),
10 (local failure), 20 (exhausted).
"""

from __future__ import annotations

import argparse
import json
import sys
from typing import Optional, Sequence

from . import report as report_mod
from .equations import parse_equation
from .factors import directed_family_factor, free_factor_certificate, spanning_tree_basis
from .graphs import (StallingsGraph, fold, graph_from_generators, intersect,
                     load_graph_file)
from .localglobal import (EXIT_CODES, WitnessMode, default_max_degree,
                          local_global_mpower_check, reduction_pipeline,
                          sweep_mpowers)
from .quotients import (FiniteQuotientHom, GuardExceededError, format_perm,
                        parse_perm, solve_in_quotient)
from .words import Alphabet, MalformedWordError, Word, cyclic_reduce, mth_root


def _alphabet(args) -> Alphabet:
    return Alphabet(args.rank)

def _words(alphabet: Alphabet, text: str) -> list[Word]:
    return [alphabet.word(part) for part in text.split(",") if part.strip()]


def _graph_from_args(args, attr: str = "gens") -> StallingsGraph:
    gens = getattr(args, attr, None)
    if getattr(args, "graph", None):
        return fold(load_graph_file(args.graph))
    if not gens:
        raise MalformedWordError("either --gens or --graph is required")
    return graph_from_generators(_words(_alphabet(args), gens), args.rank)


def _emit_graph(g: StallingsGraph, args, payload: dict) -> None:
    if getattr(args, "dot", False):
        text = g.to_dot()
        if args.out:
            with open(args.out, "w") as fh:
                fh.write(text)
        else:
            sys.stdout.write(text)
    elif args.json:
        print(json.dumps(payload, indent=2))
    else:
        print("vertices=%d edges=%d rank=%d" % (
            g.num_vertices, len(g.edges), g.cycle_rank))
    if getattr(args, "png", None):
        path = report_mod.render_graph_png(g, args.png)
        print("wrote %s" % path, file=sys.stderr)


def _add_rank(p, default=2):
    p.add_argument("--rank", type=int, default=default,
                   help="alphabet rank (default %d)" % default)


def _add_graph_inputs(p):
    p.add_argument("--gens", help="comma-separated generator words")
    p.add_argument("--graph", help="labeled graph fixture file")
    p.add_argument("--dot", action="store_true", help="emit DOT")
    p.add_argument("--png", help="also render the graph to a PNG file")
    p.add_argument("--out", help="write DOT here instead of stdout")


def build_parser() -> argparse.ArgumentParser:
    top = argparse.ArgumentParser(prog="stallings", description=__doc__)
    top.add_argument("--json", action="store_true", help="JSON output")
    sub = top.add_subparsers(dest="command", required=True)

    p = sub.add_parser("reduce", help="freely reduce a word")
    p.add_argument("--word", required=True)
    _add_rank(p)

    p = sub.add_parser("root", help="m-th root of a word, if any")
    p.add_argument("--g", required=True)
    p.add_argument("--m", type=int, required=True)
    _add_rank(p)

    p = sub.add_parser("fold", help="fold a graph or generator list")
    _add_graph_inputs(p)
    _add_rank(p)

    p = sub.add_parser("basis", help="spanning tree basis of a subgroup")
    _add_graph_inputs(p)
    _add_rank(p)

    p = sub.add_parser("member", help="membership of a word in a subgroup")
    p.add_argument("--gens", required=True)
    p.add_argument("--word", required=True)
    _add_rank(p)

    p = sub.add_parser("factor", help="free-factor certificate between subgroups")
    p.add_argument("--h-gens", required=True)
    p.add_argument("--n-gens", required=True)
    _add_rank(p)

    p = sub.add_parser("intersect", help="intersection of two subgroups")
    p.add_argument("--a-gens", required=True)
    p.add_argument("--b-gens", required=True)
    p.add_argument("--dot", action="store_true")
    p.add_argument("--png")
    p.add_argument("--out")
    _add_rank(p)

    p = sub.add_parser("solve-quotient", help="brute-force an equation in a quotient")
    p.add_argument("--equation", required=True,
                   help="equation text, variables v1..vn (V inverts)")
    p.add_argument("--num-vars", type=int, required=True)
    p.add_argument("--degree", type=int, required=True)
    p.add_argument("--images", required=True,
                   help="semicolon-separated cycle notation, one per generator")
    _add_rank(p)

    p = sub.add_parser("sweep", help="dichotomy sweep over short words")
    p.add_argument("--max-len", type=int, default=4)
    p.add_argument("--m", default="2,3", help="comma-separated exponents")
    p.add_argument("--max-degree", type=int, default=None)
    p.add_argument("--jobs", type=int, default=1)
    p.add_argument("--no-audit", action="store_true",
                   help="skip auditing global solutions in small quotients")
    p.add_argument("--report-dir",
                   help="write sweep.csv and figures to this directory")
    _add_rank(p)

    p = sub.add_parser("local-global", help="witness search for x^m = g")
    p.add_argument("--g", required=True)
    p.add_argument("--m", type=int, required=True)
    p.add_argument("--max-degree", type=int, default=None)
    p.add_argument("--audit", action="store_true")
    _add_rank(p)

    p = sub.add_parser("reduce-pipeline",
                       help="rank reduction report through a subgroup family")
    p.add_argument("--g", required=True)
    p.add_argument("--solution-gens", required=True)
    p.add_argument("--family", required=True,
                   help="semicolon-separated comma-separated generator lists")
    _add_rank(p)

    return top


def _run(args) -> int:
    alphabet = Alphabet(args.rank) if hasattr(args, "rank") else Alphabet(2)
    cmd = args.command

    if cmd == "reduce":
        w = alphabet.word(args.word)
        print(json.dumps({"word": str(w), "length": len(w)}) if args.json else str(w))
        return 0

    if cmd == "root":
        g = alphabet.word(args.g)
        r = mth_root(g, args.m)
        if args.json:
            print(json.dumps({"g": str(g), "m": args.m,
                              "root": None if r is None else str(r)}))
        else:
            print("none" if r is None else str(r))
        return 0

    if cmd == "fold":
        g = _graph_from_args(args)
        _emit_graph(g, args, {"vertices": g.num_vertices, "edges": len(g.edges),
                              "rank": g.cycle_rank})
        return 0

    if cmd == "basis":
        g = _graph_from_args(args)
        words = [str(w) for w in spanning_tree_basis(g).words]
        if args.dot:
            _emit_graph(g, args, {})
        elif args.json:
            print(json.dumps({"basis": words, "rank": g.cycle_rank}))
        else:
            for w in words:
                print(w)
        return 0

    if cmd == "member":
        g = graph_from_generators(_words(alphabet, args.gens), args.rank)
        verdict = g.contains(alphabet.word(args.word))
        print(json.dumps({"member": verdict}) if args.json else
              ("true" if verdict else "false"))
        return 0

    if cmd == "factor":
        h = graph_from_generators(_words(alphabet, args.h_gens), args.rank)
        n = graph_from_generators(_words(alphabet, args.n_gens), args.rank)
        cert = free_factor_certificate(h, n)
        if cert is None:
            print(json.dumps({"certificate": None}) if args.json
                  else "no certificate (morphism missing or not injective)")
        elif args.json:
            print(json.dumps({"basis_h": [str(w) for w in cert.basis_h],
                              "basis_n": [str(w) for w in cert.basis_n]}))
        else:
            print("basis_h: " + " ".join(str(w) for w in cert.basis_h))
            print("basis_n: " + " ".join(str(w) for w in cert.basis_n))
        return 0

    if cmd == "intersect":
        a = graph_from_generators(_words(alphabet, args.a_gens), args.rank)
        b = graph_from_generators(_words(alphabet, args.b_gens), args.rank)
        g = intersect(a, b)
        basis = [str(w) for w in spanning_tree_basis(g).words]
        _emit_graph(g, args, {"vertices": g.num_vertices, "edges": len(g.edges),
                              "rank": g.cycle_rank, "basis": basis})
        return 0

    if cmd == "solve-quotient":
        eq = parse_equation(args.equation, args.num_vars, alphabet)
        images = tuple(parse_perm(part, args.degree)
                       for part in args.images.split(";") if part.strip())
        hom = FiniteQuotientHom(args.rank, args.degree, images)
        sol = solve_in_quotient(eq, hom)
        payload = hom.to_json_dict(solvable=sol is not None,
                                   witness=None if sol is None else sol.assignment)
        payload["equation"] = str(eq)
        if args.json:
            print(json.dumps(payload, indent=2))
        elif sol is None:
            print("unsolvable")
        else:
            print("solvable: " + " ".join(format_perm(p) for p in sol.assignment))
        return 0

    if cmd == "sweep":
        exponents = [int(t) for t in args.m.split(",") if t.strip()]
        rows = sweep_mpowers(args.rank, args.max_len, exponents,
                             args.max_degree, audit=not args.no_audit,
                             jobs=args.jobs)
        if args.report_dir:
            from pathlib import Path
            outdir = Path(args.report_dir)
            outdir.mkdir(parents=True, exist_ok=True)
            csv_path = report_mod.write_sweep_csv(rows, outdir / "sweep.csv")
            figures = report_mod.render_sweep_figures(rows, outdir)
            print("wrote %s" % csv_path, file=sys.stderr)
            for fig in figures:
                print("wrote %s" % fig, file=sys.stderr)
        if args.json:
            print(json.dumps([row.to_json_dict() for row in rows], indent=2))
        else:
            for row in rows:
                r = row.report
                extra = ""
                if r.mode is WitnessMode.LOCAL_FAILURE:
                    extra = " degree=%d" % r.degree
                elif r.mode is WitnessMode.GLOBAL_SOLUTION:
                    extra = " root=%s" % r.root
                print("%s m=%d %s%s" % (row.g, row.m, r.mode.value, extra))
        return 0

    if cmd == "local-global":
        g = alphabet.word(args.g)
        rep = local_global_mpower_check(g, args.m, args.max_degree,
                                        audit=args.audit)
        if args.json:
            print(json.dumps(rep.to_json_dict(), indent=2))
        else:
            extra = ""
            if rep.mode is WitnessMode.GLOBAL_SOLUTION:
                extra = " root=%s" % rep.root
            elif rep.mode is WitnessMode.LOCAL_FAILURE:
                extra = " degree=%d hom=%s" % (
                    rep.degree, ";".join(format_perm(p) for p in rep.hom.gens))
            else:
                extra = " max_degree=%d" % rep.max_degree
            print(rep.mode.value + extra)
        return EXIT_CODES[rep.mode]

    if cmd == "reduce-pipeline":
        g = alphabet.word(args.g)
        solution_gens = _words(alphabet, args.solution_gens)
        family = [graph_from_generators(_words(alphabet, part), args.rank)
                  for part in args.family.split(";") if part.strip()]
        rep = reduction_pipeline(g, solution_gens, family)
        if args.json:
            print(json.dumps(rep.to_json_dict(), indent=2))
        else:
            print("h_basis: " + " ".join(str(w) for w in rep.basis))
            print("rank %d %s bound %d" % (
                rep.rank, "<=" if rep.rank_within_bound else ">", rep.num_vars))
            for step in rep.steps:
                print("  [%s] %s" % (step.status, step.description))
        return 0

    raise AssertionError("unhandled command %r" % cmd)


def main(argv: Optional[Sequence[str]] = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return _run(args)
    except GuardExceededError as exc:
        print("guard violation: %s" % exc, file=sys.stderr)
        return 3
    except (MalformedWordError, ValueError) as exc:
        print("error: %s" % exc, file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
