"""Command-line surface: construct, spectral, enumerate, ascend, verify,
lemma, campaign. Graph I/O is graph6 lines; reports are JSON."""

from __future__ import annotations

import argparse
import csv
import json
import sys
from dataclasses import asdict
from pathlib import Path

from . import harness
from .constructions import cycle_extremal, path_extremal, path_join
from .enumeration import EnumerationClass, enumerate_class
from .graph6 import graph6_decode, graph6_encode
from .recognition import ForbiddenPattern
from .spectral import q_index
from .transforms import greedy_ascent


def _read_graphs(source: str):
    if source == "-":
        lines = sys.stdin.read().splitlines()
    else:
        lines = Path(source).read_text().splitlines()
    return [graph6_decode(line) for line in lines if line.strip()]


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="qouter",
        description="Q-index extremal constructions, enumeration, and verification "
        "for connected outerplanar graphs",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("construct", help="emit an extremal candidate as graph6")
    p.add_argument("kind", choices=["cycle", "path", "join"])
    p.add_argument("--n", type=int)
    p.add_argument("--pattern", help="C<ell> or <t>P<ell>")
    p.add_argument("--parts", help="comma-separated path orders for kind=join")

    p = sub.add_parser("spectral", help="Q-index of graph6 input")
    p.add_argument("--graph6", default="-", help="file of graph6 lines, or - for stdin")
    p.add_argument("--tol", type=float, default=1e-12)

    p = sub.add_parser("enumerate", help="stream a graph class as graph6 lines")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--pattern")
    p.add_argument("--count-only", action="store_true", help="emit CSV counts instead")

    p = sub.add_parser("ascend", help="greedy Q-increasing ascent; JSON trace")
    p.add_argument("--graph6", default="-")
    p.add_argument("--pattern")
    p.add_argument("--max-steps", type=int, default=1000)

    p = sub.add_parser("verify", help="theorem-level verification report")
    p.add_argument("kind", choices=["cycle", "path", "structural"])
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--pattern", required=True)
    p.add_argument("--sep", type=float, default=1e-9)
    p.add_argument("--out", help="write the JSON report here instead of stdout")

    p = sub.add_parser("lemma", help="run one lemma invariant suite")
    p.add_argument("name", choices=list(harness.LEMMA_NAMES))
    p.add_argument("--n-min", type=int)
    p.add_argument("--n-max", type=int)
    p.add_argument("--sep", type=float, default=1e-9)
    p.add_argument("--out")

    p = sub.add_parser("campaign", help="run a configured check campaign")
    p.add_argument("config")

    return parser


def _cmd_construct(args) -> int:
    if args.kind == "join":
        if not args.parts:
            raise SystemExit("construct join requires --parts")
        parts = [int(tok) for tok in args.parts.split(",")]
        print(graph6_encode(path_join(parts)))
        return 0
    if args.n is None or args.pattern is None:
        raise SystemExit("construct cycle/path requires --n and --pattern")
    pattern = ForbiddenPattern.parse(args.pattern)
    if args.kind == "cycle":
        if pattern.kind != "cycle":
            raise SystemExit("construct cycle needs a C<ell> pattern")
        g, alpha, r = cycle_extremal(args.n, pattern.ell)
        print(graph6_encode(g))
        print(f"alpha={alpha} r={r}", file=sys.stderr)
    else:
        if pattern.kind != "paths":
            raise SystemExit("construct path needs a <t>P<ell> pattern")
        g, alpha, r, flag = path_extremal(args.n, pattern.t, pattern.ell)
        print(graph6_encode(g))
        print(f"alpha={alpha} r={r} discrepancy={flag}", file=sys.stderr)
    return 0


def _cmd_spectral(args) -> int:
    for g in _read_graphs(args.graph6):
        res = q_index(g, args.tol)
        print(f"{graph6_encode(g)},{res.q:.12f},{res.residual:.3e},{res.iterations}")
    return 0


def _cmd_enumerate(args) -> int:
    pattern = ForbiddenPattern.parse(args.pattern) if args.pattern else None
    if args.count_only:
        print("n,pattern,count")
        count = sum(1 for _ in enumerate_class(EnumerationClass(args.n, pattern)))
        print(f"{args.n},{pattern or ''},{count}")
        return 0
    for g in enumerate_class(EnumerationClass(args.n, pattern)):
        print(graph6_encode(g))
    return 0


def _cmd_ascend(args) -> int:
    graphs = _read_graphs(args.graph6)
    pattern = ForbiddenPattern.parse(args.pattern) if args.pattern else None
    out = []
    for g in graphs:
        final, trace = greedy_ascent(g, pattern, args.max_steps)
        out.append(
            {
                "seed": graph6_encode(g),
                "final": graph6_encode(final),
                "q_final": q_index(final).q,
                "trace": [
                    {"kind": step.move.kind, "vertices": list(step.move.vertices), "q": step.q}
                    for step in trace
                ],
            }
        )
    print(json.dumps(out, indent=2))
    return 0


def _emit_report(report, out) -> int:
    text = report.to_json()
    if out:
        Path(out).write_text(text)
    else:
        print(text)
    return 1 if report.status == harness.REFUTED else 0


def _cmd_verify(args) -> int:
    pattern = ForbiddenPattern.parse(args.pattern)
    if args.kind == "cycle":
        report = harness.verify_cycle_theorem(args.n, pattern.ell, args.sep)
    elif args.kind == "path":
        report = harness.verify_path_theorem(args.n, pattern.t, pattern.ell, args.sep)
    else:
        report = harness.structural_check(args.n, pattern, args.sep)
    return _emit_report(report, args.out)


def _cmd_lemma(args) -> int:
    n_range = None
    if args.n_min is not None and args.n_max is not None:
        n_range = range(args.n_min, args.n_max + 1)
    report = harness.check_lemma(args.name, n_range, args.sep)
    return _emit_report(report, args.out)


def _cmd_campaign(args) -> int:
    code, files = harness.run_campaign(args.config)
    for f in files:
        print(f)
    return code


def main(argv=None) -> int:
    args = _build_parser().parse_args(argv)
    handlers = {
        "construct": _cmd_construct,
        "spectral": _cmd_spectral,
        "enumerate": _cmd_enumerate,
        "ascend": _cmd_ascend,
        "verify": _cmd_verify,
        "lemma": _cmd_lemma,
        "campaign": _cmd_campaign,
    }
    return handlers[args.command](args)


if __name__ == "__main__":
    sys.exit(main())
