"""Command-line interface.

Exit codes: 0 all verdicts pass, 1 a checked property failed, 2 usage or
I/O error.
"""

import argparse
import csv
import io as _io
import os
import sys

from . import io, suites
from .composite import counterexample_report
from .exceptions import BlockStructureViolation, ValidationError
from .realify import complexify, realify_ket, realify_operator, realify_state
from .report import aggregate, dumps, write_atomic
from .scenarios import entanglement_swapping_demo, nonlocal_operation_demo, two_source_born_check

EXIT_OK, EXIT_FAIL, EXIT_USAGE = 0, 1, 2
DEMOS = ("swap", "nonlocal", "born2", "counterexample")


class UsageError(Exception):
    pass


def _dims(text):
    try:
        dims = tuple(int(x) for x in text.split(",") if x.strip())
    except ValueError:
        raise argparse.ArgumentTypeError(f"--dims expects a comma list of integers, got {text!r}")
    if not dims or any(d < 1 for d in dims):
        raise argparse.ArgumentTypeError("--dims entries must be positive")
    return dims


def _positive_int(text):
    value = int(text)
    if value < 1:
        raise argparse.ArgumentTypeError("must be >= 1")
    return value


def _positive_float(text):
    value = float(text)
    if not value > 0:
        raise argparse.ArgumentTypeError("must be > 0")
    return value


def build_parser():
    parser = argparse.ArgumentParser(prog="realqm", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True)

    check = sub.add_parser("check", help="run the invariant suites")
    check.add_argument("--seed", type=int, default=0)
    check.add_argument("--dims", type=_dims, default=(2, 3, 4))
    check.add_argument("--trials", type=_positive_int, default=100)
    check.add_argument("--tol", type=_positive_float, default=None,
                       help="override every suite's tolerance")
    check.add_argument("--suite", default=None, help=f"one of: {', '.join(suites.SUITES)}")
    check.add_argument("--out", default=None, help="report path (default: stdout)")
    check.add_argument("--csv", default=None, help="also write a per-suite CSV summary")

    mapper = sub.add_parser("map", help="convert between complex and realified matrix files")
    mapper.add_argument("direction", choices=("realify", "complexify"))
    mapper.add_argument("input")
    mapper.add_argument("output")
    mapper.add_argument("--kind", choices=io.REALIFIED_KINDS, default=None,
                        help="object kind (realify default: operator; complexify default: from file)")

    demo = sub.add_parser("demo", help="run a scenario")
    demo.add_argument("name")
    demo.add_argument("--seed", type=int, default=0)
    demo.add_argument("--dims", type=_dims, default=(2, 2))
    demo.add_argument("--trials", type=_positive_int, default=100)
    demo.add_argument("--shots", type=int, default=0)
    demo.add_argument("--out", default=None)
    return parser


def _check_writable(path):
    if path is None:
        return
    directory = os.path.dirname(os.path.abspath(path))
    if not os.path.isdir(directory) or not os.access(directory, os.W_OK):
        raise UsageError(f"cannot write to {path}")
    if os.path.isdir(path):
        raise UsageError(f"{path} is a directory")


def _emit(text, path):
    if path is None:
        sys.stdout.write(text)
        return
    try:
        write_atomic(path, text)
    except OSError as exc:
        raise UsageError(f"cannot write {path}: {exc}") from exc


def _csv_summary(reports):
    buf = _io.StringIO()
    writer = csv.writer(buf, lineterminator="\n")
    writer.writerow(["name", "passed", "max_abs_error"])
    for r in reports:
        writer.writerow([r.name, r.passed, repr(r.metrics.get("max_abs_error", ""))])
    return buf.getvalue()


def cmd_check(args):
    _check_writable(args.out)
    _check_writable(args.csv)
    try:
        cfg = suites.RunConfig(seed=args.seed, dims=args.dims, trials=args.trials,
                               tolerance=args.tol, suite=args.suite, output_path=args.out)
    except ValidationError as exc:
        raise UsageError(str(exc)) from exc
    reports = suites.run(cfg)
    params = {"dims": list(cfg.dims), "trials": cfg.trials, "tol": cfg.tolerance,
              "suite": cfg.suite}
    _emit(dumps(aggregate(reports, cfg.seed, params)), args.out)
    if args.csv:
        _emit(_csv_summary(reports), args.csv)
    for r in reports:
        print(f"{'PASS' if r.passed else 'FAIL'} {r.name}", file=sys.stderr)
    return EXIT_OK if all(r.passed for r in reports) else EXIT_FAIL


def cmd_map(args):
    _check_writable(args.output)
    try:
        if args.direction == "realify":
            A = io.read_complex(args.input)
            kind = args.kind or "operator"
            if kind == "operator":
                result = realify_operator(A)
            elif kind == "state":
                result = realify_state(A)
            else:
                result = realify_ket(A)
            payload = io.realified_to_payload(result)
        else:
            M = io.read_realified(args.input, args.kind)
            payload = io.complex_to_payload(complexify(M))
    except BlockStructureViolation as exc:
        print(f"block structure violation: max asymmetry {exc.max_asymmetry!r}", file=sys.stderr)
        return EXIT_FAIL
    except ValidationError as exc:
        raise UsageError(str(exc)) from exc
    _emit(dumps(payload), args.output)
    return EXIT_OK


def cmd_demo(args):
    if args.name not in DEMOS:
        raise UsageError(f"unknown demo {args.name!r}; choose from {', '.join(DEMOS)}")
    _check_writable(args.out)
    d1, d2 = args.dims[0], args.dims[-1]
    try:
        if args.name == "swap":
            report = entanglement_swapping_demo(args.seed, shots=args.shots)
        elif args.name == "nonlocal":
            report = nonlocal_operation_demo(args.seed)
        elif args.name == "born2":
            report = two_source_born_check(d1, d2, args.trials, args.seed)
        else:
            report = counterexample_report(d1, d2, args.seed)
    except ValidationError as exc:
        raise UsageError(str(exc)) from exc
    _emit(report.to_json(), args.out)
    return EXIT_OK if report.passed else EXIT_FAIL


COMMANDS = {"check": cmd_check, "map": cmd_map, "demo": cmd_demo}


def main(argv=None):
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_USAGE if exc.code else EXIT_OK
    try:
        return COMMANDS[args.command](args)
    except UsageError as exc:
        print(f"realqm: error: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
