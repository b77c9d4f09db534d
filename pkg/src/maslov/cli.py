"""Command-line interface.

::

    maslov newton -n 1 "x1^3 + 2*x1 + 1"
    maslov dequantize -n 1 "x1^2 + x1 + 1" --point 1 --format csv
    maslov check -n 1 "x1" "-x1 + 1"
    maslov check --random 50 --seed 7
    maslov plot -n 2 "x1*x2" "x1^2" -o fig.svg

Exit codes: 0 success, 1 a law check failed, 2 usage or parse error,
3 zero polynomial, 4 plot requested outside dimension 2.
"""

import argparse
import csv
import io
import json
import math
import sys
from dataclasses import dataclass, field
from typing import List, Optional

import numpy as np

from . import polytope as poly
from .checks import FAIL, check_pair, check_random, describe_pair, format_results
from .dequant import HSchedule, dequantize_probe
from .errors import DimensionError, ParseError, ZeroPolynomialError
from .genpoly import parse, parse_asymptotic
from .plot import polytopes_svg

PROBE_SCHEMA = "probe/1"
EXIT_OK, EXIT_FAILED, EXIT_USAGE, EXIT_ZERO, EXIT_DIM = 0, 1, 2, 3, 4


@dataclass
class RunConfig:
    subcommand: str
    polynomials: List[str] = field(default_factory=list)
    dim: Optional[int] = None
    h0: float = 1.0
    ratio: float = 0.5
    steps: int = 20
    seed: int = 42
    samples: int = 1000
    random: Optional[int] = None
    nonneg: bool = False
    points: List[str] = field(default_factory=list)
    out: Optional[str] = None
    format: Optional[str] = None

    @property
    def schedule(self):
        return HSchedule(self.h0, self.ratio, self.steps)


class UsageError(Exception):
    pass


def build_parser():
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("-n", "--dim", type=int, help="number of variables x1..xn")
    common.add_argument("--h0", type=float, default=1.0, help="largest h of the schedule")
    common.add_argument("--ratio", type=float, default=0.5, help="geometric ratio of the schedule")
    common.add_argument("--steps", type=int, default=20, help="number of h values")
    common.add_argument("--seed", type=int, default=42, help="seed for numpy's PCG64 generator")
    common.add_argument("--samples", type=int, default=1000, help="random sample points")
    common.add_argument("--random", type=int, metavar="N", help="check N seeded random pairs")
    common.add_argument("--nonneg", action="store_true", help="random polynomials with positive coefficients")
    common.add_argument("-o", "--out", help="write output here instead of stdout")
    common.add_argument("--format", choices=["json", "csv", "svg"])
    common.add_argument("polynomials", nargs="*", metavar="POLY")

    parser = argparse.ArgumentParser(
        prog="maslov", description="Dequantize generalized polynomials and compute their Newton polytopes."
    )
    sub = parser.add_subparsers(dest="subcommand", required=True)
    sub.add_parser("newton", parents=[common], help="Newton polytope as polytope/1 JSON")
    dq = sub.add_parser("dequantize", parents=[common], help="probe h*log|f(exp(x/h))| as h -> 0")
    dq.add_argument("--point", action="append", default=[], dest="points", help="comma-separated sample point")
    sub.add_parser("check", parents=[common], help="check the product/sum/duality laws")
    sub.add_parser("plot", parents=[common], help="SVG of planar Newton polytopes")
    return parser


def config_from_args(args):
    fields = {k: v for k, v in vars(args).items() if k in RunConfig.__dataclass_fields__}
    return RunConfig(**fields)


def _emit(config, text):
    if config.out:
        with open(config.out, "w", encoding="utf-8", newline="\n") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)


def _need_dim(config):
    if config.dim is None or config.dim < 1:
        raise UsageError("a positive dimension -n/--dim is required")
    return config.dim


def _jnum(v):
    if v is None:
        return None
    v = float(v)
    return v if math.isfinite(v) else str(v)


def _parse(text, dim, asymptotic=False):
    try:
        return (parse_asymptotic if asymptotic else parse)(text, dim)
    except ParseError as exc:
        exc.source = text
        raise


def cmd_newton(config):
    if len(config.polynomials) != 1:
        raise UsageError("newton takes exactly one polynomial")
    dim = _need_dim(config)
    P = poly.newton_polytope(_parse(config.polynomials[0], dim))
    fmt = config.format or "json"
    if fmt == "json":
        return poly.to_json(P) + "\n"
    if fmt == "csv":
        buf = io.StringIO()
        w = csv.writer(buf, lineterminator="\n")
        w.writerow([f"d{i}" for i in range(1, dim + 1)])
        w.writerows([[str(c) for c in v] for v in P.vertices])
        return buf.getvalue()
    raise UsageError("newton writes json or csv")


def _points(config, dim):
    if config.points:
        pts = []
        for text in config.points:
            try:
                x = tuple(float(c) for c in text.split(","))
            except ValueError:
                raise UsageError(f"bad point {text!r}") from None
            if len(x) != dim:
                raise UsageError(f"point {text!r} does not have dimension {dim}")
            pts.append(x)
        return pts
    if config.samples < 1:
        raise UsageError("--samples must be positive")
    rng = np.random.default_rng(config.seed)
    return [tuple(float(c) for c in row) for row in rng.standard_normal((config.samples, dim))]


def cmd_dequantize(config):
    if len(config.polynomials) != 1:
        raise UsageError("dequantize takes exactly one polynomial")
    dim = _need_dim(config)
    text = config.polynomials[0]
    f = _parse(text, dim, asymptotic=True)
    try:
        schedule = config.schedule
    except ValueError as exc:
        raise UsageError(str(exc)) from None
    report = dequantize_probe(f, _points(config, dim), schedule)
    fmt = config.format or "json"
    if fmt == "csv":
        buf = io.StringIO()
        w = csv.writer(buf, lineterminator="\n")
        w.writerow(["point_index", "h", "value", "reference", "abs_error"])
        for i, (row, ref) in enumerate(zip(report.values, report.references)):
            for h, v in zip(report.hs, row):
                err = "" if ref is None else repr(abs(v - ref) if math.isfinite(v) else math.inf)
                w.writerow([i, repr(h), repr(v), "" if ref is None else repr(ref), err])
        return buf.getvalue()
    if fmt != "json":
        raise UsageError("dequantize writes json or csv")
    doc = {
        "schema": PROBE_SCHEMA,
        "polynomial": text,
        "dim": dim,
        "schedule": {"h0": schedule.h0, "ratio": schedule.ratio, "steps": schedule.steps},
        "h": report.hs,
        "points": [
            {
                "index": i,
                "x": list(x),
                "values": [_jnum(v) for v in row],
                "limit": _jnum(lim),
                "reference": _jnum(ref),
                "slope": _jnum(s),
            }
            for i, (x, row, lim, ref, s) in enumerate(
                zip(report.points, report.values, report.limits, report.references, report.slopes)
            )
        ],
        "slope": _jnum(report.slope),
    }
    return json.dumps(doc, indent=2) + "\n"


def cmd_check(config):
    lines = []
    failed = False
    if config.random is not None:
        if config.polynomials:
            raise UsageError("give either two polynomials or --random N, not both")
        rng = np.random.default_rng(config.seed)
        tally = {}
        for i, f, g, results in check_random(rng, config.random, config.dim, config.nonneg, config.samples, config.seed):
            for r in results:
                tally.setdefault(r.name, {"PASS": 0, "FAIL": 0, "SKIPPED": 0})[r.status] += 1
            bad = [r for r in results if r.status == FAIL]
            if bad:
                failed = True
                lines.append(f"pair {i}:")
                lines += ["  " + s for s in describe_pair(f, g)]
                lines += format_results(bad, indent="  ")
        for name, counts in tally.items():
            status = "FAIL" if counts["FAIL"] else "PASS"
            lines.append(
                f"{status:<7} {name}: {counts['PASS']} passed, {counts['FAIL']} failed, {counts['SKIPPED']} skipped"
            )
    else:
        if len(config.polynomials) != 2:
            raise UsageError("check takes two polynomials or --random N")
        dim = _need_dim(config)
        f, g = (_parse(t, dim) for t in config.polynomials)
        results = check_pair(f, g, samples=config.samples, seed=config.seed)
        failed = any(r.status == FAIL for r in results)
        lines += describe_pair(f, g)
        lines += format_results(results)
    return "\n".join(lines) + "\n", failed


def cmd_plot(config):
    if config.dim != 2:
        raise DimensionError("plot needs -n 2")
    if not 1 <= len(config.polynomials) <= 2:
        raise UsageError("plot takes one or two polynomials")
    if config.format not in (None, "svg"):
        raise UsageError("plot writes svg")
    polys = [poly.newton_polytope(_parse(t, 2)) for t in config.polynomials]
    layers = list(zip(["f", "g"], polys))
    if len(polys) == 2:
        A, B = polys
        layers += [("oplus", poly.hullunion_oplus(A, B)), ("odot", poly.minkowski_odot(A, B))]
    return polytopes_svg(layers)


def _report_parse_error(exc):
    print(f"error: {exc}", file=sys.stderr)
    text = getattr(exc, "source", None)
    if text is not None:
        print(f"  {text}\n  {' ' * exc.position}^", file=sys.stderr)


def main(argv=None):
    args = build_parser().parse_args(argv)
    config = config_from_args(args)
    try:
        if config.subcommand == "newton":
            _emit(config, cmd_newton(config))
        elif config.subcommand == "dequantize":
            _emit(config, cmd_dequantize(config))
        elif config.subcommand == "check":
            text, failed = cmd_check(config)
            _emit(config, text)
            return EXIT_FAILED if failed else EXIT_OK
        elif config.subcommand == "plot":
            try:
                _emit(config, cmd_plot(config))
            except DimensionError as exc:
                print(f"error: {exc}", file=sys.stderr)
                return EXIT_DIM
    except ParseError as exc:
        _report_parse_error(exc)
        return EXIT_USAGE
    except ZeroPolynomialError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_ZERO
    except (UsageError, DimensionError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    return EXIT_OK


if __name__ == "__main__":
    sys.exit(main())
