"""Command-line interface.

Exit codes: 0 success, 1 usage error, 2 invalid input data, 3 undefined
result (all mass on the empty set, total conflict).
"""

from __future__ import annotations

import argparse
import sys
from collections.abc import Sequence

from .core import DEFAULT_TOLERANCE, MassFunction
from .errors import DegenerateEvidenceError, EvidenceError
from .fusion import combine_all
from .io import FORMATS, emit_bpa, emit_distribution, emit_sweep, parse_bpa
from .transforms import find_crossover, multiscale, pignistic, rank, sweep

EXIT_OK = 0
EXIT_USAGE = 1
EXIT_DATA = 2
EXIT_MATH = 3


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise UsageError(f"{self.prog}: error: {message}")


def _read(path: str) -> str:
    if path == "-":
        return sys.stdin.read()
    with open(path, encoding="utf-8") as fh:
        return fh.read()


def _load(args, path: str) -> MassFunction:
    return parse_bpa(_read(path), strict=args.strict, tolerance=args.tolerance)


def _distribution(args, m: MassFunction):
    if args.method == "betp":
        return pignistic(m)
    if args.q is None:
        raise UsageError("--q is required with --method mulp")
    return multiscale(m, args.q)


def cmd_validate(args, out) -> None:
    m = _load(args, args.file)
    out.write(f"frame size: {len(m.frame)}\n")
    out.write(f"focal elements: {sum(1 for mask, _ in m.focal if mask)}\n")
    out.write(f"m(empty): {m.empty_mass!r}\n")


def cmd_transform(args, out) -> None:
    p = _distribution(args, _load(args, args.file))
    out.write(emit_distribution(p, args.format, full_precision=args.full_precision))


def _linear_grid(start: float, end: float, steps: int) -> list[float]:
    if steps < 1:
        raise UsageError("--steps must be at least 1")
    if end < start:
        raise UsageError("--q-end must not be below --q-start")
    if steps == 1:
        return [start]
    width = (end - start) / (steps - 1)
    return [start + k * width for k in range(steps - 1)] + [end]


def cmd_sweep(args, out) -> None:
    qs = _linear_grid(args.q_start, args.q_end, args.steps)
    table = sweep(_load(args, args.file), qs)
    out.write(emit_sweep(table, args.format, full_precision=args.full_precision))


def cmd_rank(args, out) -> None:
    p = _distribution(args, _load(args, args.file))
    for label, value in rank(p):
        text = repr(value) if args.full_precision else f"{value:.4f}"
        out.write(f"{label} {text}\n")


def cmd_crossover(args, out) -> None:
    m = _load(args, args.file)
    q = find_crossover(m, args.x, args.y, args.q_lo, args.q_hi, args.tol, args.grid)
    out.write("none\n" if q is None else f"{q:.10g}\n")


def cmd_combine(args, out) -> None:
    sources = [_load(args, path) for path in args.files]
    fused, reports = combine_all(sources, tolerance=args.tolerance)
    for step, report in enumerate(reports, 1):
        print(f"step {step}: conflict k = {report.k!r}", file=sys.stderr)
    out.write(emit_bpa(fused))


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--strict", action="store_true",
                        help="reject any mass on the empty set")
    common.add_argument("--tolerance", type=float, default=DEFAULT_TOLERANCE,
                        help="allowed deviation of the mass sum from 1 (default: %(default)g)")

    output = argparse.ArgumentParser(add_help=False)
    output.add_argument("--format", choices=FORMATS, default="csv")
    output.add_argument("--full-precision", action="store_true",
                        help="print probabilities with all digits instead of 4 decimals")

    method = argparse.ArgumentParser(add_help=False)
    method.add_argument("--method", choices=("betp", "mulp"), default="mulp")
    method.add_argument("--q", type=float, help="exponent for the multiscale transformation")

    parser = _Parser(prog="mulp", description="Dempster-Shafer evidence toolkit.")
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)

    p = sub.add_parser("validate", parents=[common], help="check a BPA file")
    p.add_argument("file")
    p.set_defaults(func=cmd_validate)

    p = sub.add_parser("transform", parents=[common, output, method],
                       help="pignistic or multiscale probabilities")
    p.add_argument("file")
    p.set_defaults(func=cmd_transform)

    p = sub.add_parser("sweep", parents=[common, output], help="multiscale probabilities over a q grid")
    p.add_argument("--q-start", type=float, required=True)
    p.add_argument("--q-end", type=float, required=True)
    p.add_argument("--steps", type=int, required=True, help="number of q values, endpoints included")
    p.add_argument("file")
    p.set_defaults(func=cmd_sweep)

    p = sub.add_parser("rank", parents=[common, method], help="order elements by probability")
    p.add_argument("--full-precision", action="store_true")
    p.add_argument("file")
    p.set_defaults(func=cmd_rank)

    p = sub.add_parser("crossover", parents=[common], help="find q where two elements swap rank")
    p.add_argument("--x", required=True)
    p.add_argument("--y", required=True)
    p.add_argument("--q-lo", type=float, required=True)
    p.add_argument("--q-hi", type=float, required=True)
    p.add_argument("--tol", type=float, default=1e-6)
    p.add_argument("--grid", type=int, default=64, help="scan points (default: %(default)s)")
    p.add_argument("file")
    p.set_defaults(func=cmd_crossover)

    p = sub.add_parser("combine", parents=[common], help="fuse BPA files with Dempster's rule")
    p.add_argument("files", nargs="+")
    p.set_defaults(func=cmd_combine)
    return parser


def run(argv: Sequence[str] | None = None, out=None) -> int:
    out = sys.stdout if out is None else out
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
        args.func(args, out)
    except UsageError as exc:
        print(exc, file=sys.stderr)
        return EXIT_USAGE
    except DegenerateEvidenceError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_MATH
    except (EvidenceError, OSError, UnicodeDecodeError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_DATA
    return EXIT_OK


def main() -> None:
    sys.exit(run())


if __name__ == "__main__":
    main()
