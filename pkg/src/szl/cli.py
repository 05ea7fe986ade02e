"""Command-line interface.

Exit status: 0 on success, 1 when the answer is negative (``decide`` on a
non-member, ``orient`` without an orientation, ``verify`` with mismatches),
2 on bad input.
"""
from __future__ import annotations

import argparse
import sys
from pathlib import Path
from typing import Optional, Sequence

from szl.boundary import validate_boundary
from szl.decide import decide_brute, decide_fast, szl_simplify
from szl.docio import GraphDocument, format_document, parse_graph_file
from szl.graph import canonical_code, tree_packing_number
from szl.orient import SolveOutcome, brute_force_beta_orientation, find_beta_orientation
from szl.verify import (
    CacheEntry,
    cache_store,
    enumerate_graphs,
    format_report,
    parse_family,
    verify_characterization,
)

EPILOG = "exit status: 0 success, 1 negative answer (nonmember / no orientation / mismatches), 2 input error"


class InputError(Exception):
    pass


def _nums(values) -> str:
    return " ".join(str(x) for x in values)


def _load(path: str) -> GraphDocument:
    text = sys.stdin.read() if path == "-" else Path(path).read_text(encoding="utf-8")
    return parse_graph_file(text)


def _ell(args, doc: Optional[GraphDocument] = None) -> int:
    ell = args.ell if args.ell is not None else (doc.ell if doc else None)
    if ell is None:
        raise InputError("no modulus: pass --ell or put 'ell N' in the file")
    return ell


def _witness_lines(outcome: SolveOutcome) -> list[str]:
    lines = []
    for w in outcome.witnesses:
        lines.append(f"gamma {_nums(w.gamma)}")
        lines.append(f"bad-set {_nums(w.subset)}")
    return lines


def cmd_decide(args, out) -> int:
    doc = _load(args.file)
    ell = _ell(args, doc)
    verdict = decide_fast(doc.graph, ell) if args.fast else decide_brute(doc.graph, ell)
    out.write(f"verdict {'member' if verdict.member else 'nonmember'}\n")
    out.write(f"method {verdict.method}\n")
    out.write(f"trace {verdict.trace}\n")
    if not verdict.characterized:
        out.write("range outside-characterized\n")
    for beta, outcome in verdict.failing:
        out.write(f"failing-boundary {_nums(beta.values)}\n")
        for line in _witness_lines(outcome):
            out.write(line + "\n")
    return 0 if verdict.member else 1


def cmd_orient(args, out) -> int:
    doc = _load(args.file)
    ell = _ell(args, doc)
    if doc.boundary is None:
        raise InputError("orient needs a 'boundary' line")
    beta = doc.boundary_spec(ell)
    problems = validate_boundary(doc.graph, beta)
    if problems:
        raise InputError("; ".join(p.detail for p in problems))
    solve = brute_force_beta_orientation if args.brute else find_beta_orientation
    outcome = solve(doc.graph, beta)
    if outcome.feasible:
        for (u, v), f, m in zip(doc.graph.pairs(), outcome.orientation.forward, doc.graph.upper):
            if m:
                out.write(f"orientation {u} {v} {f}\n")
        return 0
    out.write("infeasible\n")
    for line in _witness_lines(outcome):
        out.write(line + "\n")
    return 1


def cmd_simplify(args, out) -> int:
    doc = _load(args.file)
    ell = _ell(args, doc)
    out.write(format_document(GraphDocument(szl_simplify(doc.graph, ell), ell)))
    return 0


def cmd_trees(args, out) -> int:
    doc = _load(args.file)
    tp = tree_packing_number(doc.graph)
    if tp.unbounded:
        out.write("tree-packing unbounded\n")
        return 0
    out.write(f"tree-packing {tp.count}\n")
    out.write("witness-partition " + " | ".join(_nums(b) for b in tp.witness) + "\n")
    return 0


def cmd_enumerate(args, out) -> int:
    spec = parse_family(args.family, up_to_iso=args.up_to_iso)
    entries = []
    count = 0
    for G in enumerate_graphs(spec):
        code = canonical_code(G).hex() if spec.up_to_iso else _nums(G.upper)
        if args.ell is not None:
            verdict = decide_brute(G, args.ell)
            word = "member" if verdict.member else "nonmember"
            out.write(f"graph {code} {word}\n")
            entries.append(CacheEntry(canonical_code(G), args.ell, verdict.member, verdict.trace))
        else:
            out.write(f"graph {code}\n")
        count += 1
    out.write(f"count {count}\n")
    if args.cache:
        if args.ell is None:
            raise InputError("--cache needs --ell")
        cache_store(args.cache, sorted(set(entries), key=lambda c: c.code))
    return 0


def cmd_verify(args, out) -> int:
    if args.ell is None:
        raise InputError("verify needs --ell")
    spec = parse_family(args.family, up_to_iso=args.up_to_iso)
    report = verify_characterization(args.ell, spec)
    text = format_report(report)
    out.write(text)
    if args.report:
        Path(args.report).write_bytes(text.encode("utf-8"))
    if args.cache:
        cache_store(args.cache, report.entries)
    return 0 if report.ok else 1


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="szl", description="Strong Z_l-connectivity of small multigraphs", epilog=EPILOG)
    sub = parser.add_subparsers(dest="command", required=True)

    def common(p, file=True):
        if file:
            p.add_argument("file", help="graph document ('-' for stdin)")
        p.add_argument("--ell", type=int, help="modulus l (overrides the file)")

    p = sub.add_parser("decide", help="membership with failing boundaries and bad sets", epilog=EPILOG)
    common(p)
    mode = p.add_mutually_exclusive_group()
    mode.add_argument("--brute", action="store_true", help="check every boundary (default)")
    mode.add_argument("--fast", action="store_true", help="closed-form test, n <= 4 and l >= 3")
    p.set_defaults(func=cmd_decide)

    p = sub.add_parser("orient", help="beta-orientation for the document's boundary", epilog=EPILOG)
    common(p)
    p.add_argument("--brute", action="store_true", help="use exhaustive orientation search")
    p.set_defaults(func=cmd_orient)

    p = sub.add_parser("simplify", help="cap multiplicities at l - 1", epilog=EPILOG)
    common(p)
    p.set_defaults(func=cmd_simplify)

    p = sub.add_parser("trees", help="edge-disjoint spanning tree count", epilog=EPILOG)
    p.add_argument("file", help="graph document ('-' for stdin)")
    p.set_defaults(func=cmd_trees)

    for name, func, text in (
        ("enumerate", cmd_enumerate, "list a graph family"),
        ("verify", cmd_verify, "compare closed form with brute force over a family"),
    ):
        p = sub.add_parser(name, help=text, epilog=EPILOG)
        common(p, file=False)
        p.add_argument("--family", required=True, help='e.g. "n=4,e=12,mu<=3,delta>=4"')
        p.add_argument("--up-to-iso", action="store_true", help="one graph per isomorphism class")
        p.add_argument("--cache", help="write verdicts to this cache file")
        if name == "verify":
            p.add_argument("--report", help="also write the report to this file")
        p.set_defaults(func=func)
    return parser


def run(argv: Optional[Sequence[str]] = None, out=None) -> int:
    out = out if out is not None else sys.stdout
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    try:
        return args.func(args, out)
    except (InputError, ValueError, OSError) as exc:
        sys.stderr.write(f"szl: error: {exc}\n")
        return 2


def main() -> None:
    sys.exit(run())


if __name__ == "__main__":
    main()
