"""``holoconn analyze FILE``: exit 0 on success, 1 on usage or parse
errors, 2 when an analysis fails."""

from __future__ import annotations

import argparse
import sys

from ..errors import InputSyntaxError, ParseError
from .fileformat import parse_analyses, parse_batch, parse_point, with_overrides
from .report import dumps_machine, machine_document, render_text, run_batch

EXIT_OK, EXIT_PARSE, EXIT_ANALYSIS = 0, 1, 2


class _UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise _UsageError(message)


def build_parser() -> argparse.ArgumentParser:
    p = _Parser(prog="holoconn", description="Exact analysis of holomorphic affine connections.")
    sub = p.add_subparsers(dest="command", required=True)
    a = sub.add_parser("analyze", help="analyze the connections in a connection file")
    a.add_argument("file", help="connection file, or - for stdin")
    a.add_argument("--report", help="comma-separated subset of torsion,curvature,flat,projective,killing")
    a.add_argument("--point", help="Killing base point, e.g. 0,0 or 1/2,i")
    a.add_argument("--order", type=int, help="maximum jet order for killing (default 6)")
    a.add_argument("--window", type=int, help="stabilization window (default 3)")
    a.add_argument("--format", choices=("text", "machine"), help="report format (default text)")
    a.add_argument("--timing", action="store_true", help="include per-analysis timings")
    a.add_argument("--jobs", type=int, default=1, help="run independent connections in parallel")
    return p


def _read(path: str) -> str:
    if path == "-":
        return sys.stdin.read()
    with open(path, encoding="utf-8") as fh:
        return fh.read()


def main(argv=None, stdout=None, stderr=None) -> int:
    stdout = stdout or sys.stdout
    stderr = stderr or sys.stderr
    try:
        args = build_parser().parse_args(argv)
    except _UsageError as err:
        print(f"holoconn: usage error: {err}", file=stderr)
        return EXIT_PARSE
    except SystemExit as exc:  # --help
        return EXIT_OK if not exc.code else EXIT_PARSE

    try:
        text = _read(args.file)
    except OSError as err:
        print(f"holoconn: cannot read {args.file}: {err.strerror}", file=stderr)
        return EXIT_PARSE

    try:
        requests = parse_batch(text)
        overrides = {"order": args.order, "window": args.window, "output_format": args.format}
        if args.report is not None:
            overrides["analyses"] = parse_analyses([w.strip() for w in args.report.split(",")])
        out = []
        for req in requests:
            local = dict(overrides)
            if args.point is not None:
                try:
                    local["point"] = parse_point(args.point, req.variables)
                except ParseError as err:
                    raise InputSyntaxError(f"--point: {err.message}") from None
            out.append(with_overrides(req, **local))
        requests = out
    except ParseError as err:
        print(f"holoconn: {args.file}: {err}", file=stderr)
        return EXIT_PARSE

    fmt = args.format or requests[0].output_format
    results = run_batch(requests, timing=args.timing, jobs=max(1, args.jobs))
    failures = [f for _, f in results if f is not None]
    if failures:
        for name, analysis, message in failures:
            print(f"holoconn: [{name}] analysis {analysis} failed: {message}", file=stderr)
        return EXIT_ANALYSIS
    doc = machine_document([r for r, _ in results])
    stdout.write(dumps_machine(doc) if fmt == "machine" else render_text(doc))
    return EXIT_OK


if __name__ == "__main__":
    sys.exit(main())
