"""Command line interface: verify claim scripts, run the random property
suite, render diagrams.

Exit codes: 0 everything passed, 1 some claim or property failed (or the
diagram could not be produced), 2 usage or parse error.
"""

from __future__ import annotations

import argparse
import sys
from pathlib import Path

from .diagram import render
from .errors import ArguesianError, ScriptError
from .fields import field_from_text
from .runner import random_suite, run_script
from .script import parse_script


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="arguesian",
        description="Exact checks of involution configurations on the projective line.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p_verify = sub.add_parser("verify", help="evaluate every claim of a script")
    p_verify.add_argument("file", help="claim script")
    p_verify.add_argument("--json", action="store_true", help="machine-readable report")

    p_random = sub.add_parser("random", help="run the randomized property suite")
    p_random.add_argument("--field", default="q", help="q or fp:<p>")
    p_random.add_argument("--cases", type=int, default=100)
    p_random.add_argument("--seed", type=int, default=0)
    p_random.add_argument("--json", action="store_true")

    p_render = sub.add_parser("render", help="draw a script as an SVG diagram")
    p_render.add_argument("file", help="claim script")
    p_render.add_argument("-o", "--output", required=True, help="output SVG path")
    return parser


def main(argv=None) -> int:
    parser = _build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return 2 if exc.code not in (0, None) else 0

    if args.command == "verify":
        try:
            script = parse_script(Path(args.file).read_bytes())
        except OSError as exc:
            print(f"error: {exc}", file=sys.stderr)
            return 2
        except ScriptError as exc:
            print(f"parse error: {exc}", file=sys.stderr)
            return 2
        report = run_script(script)
        print(report.to_json() if args.json else report.human())
        return 0 if report.passed else 1

    if args.command == "random":
        try:
            field = field_from_text(args.field)
            report = random_suite(field, args.cases, args.seed)
        except (ArguesianError, ValueError) as exc:
            print(f"error: {exc}", file=sys.stderr)
            return 2
        print(report.to_json() if args.json else report.human())
        return 0 if report.passed else 1

    if args.command == "render":
        try:
            script = parse_script(Path(args.file).read_bytes())
        except OSError as exc:
            print(f"error: {exc}", file=sys.stderr)
            return 2
        except ScriptError as exc:
            print(f"parse error: {exc}", file=sys.stderr)
            return 2
        try:
            payload = render(script)
        except ArguesianError as exc:
            print(f"render error ({exc.kind}): {exc}", file=sys.stderr)
            return 1
        Path(args.output).write_bytes(payload)
        print(f"wrote {args.output} ({len(payload)} bytes)")
        return 0

    parser.error(f"unknown command {args.command!r}")
    return 2


def entry() -> None:
    raise SystemExit(main())
