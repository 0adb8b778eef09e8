"""Command-line interface: fit CSV point sets, generate datasets, move them.

Subcommands:

* ``fit``       read points (file or stdin), run the requested fits, print a
                table, optionally write a JSON report and an SVG figure.
* ``generate``  emit a benchmark dataset (circle | parallel | noisy-line) as
                CSV on stdout, ready to pipe into ``fit``.
* ``transform`` apply a rigid motion to a CSV point set and print the moved
                CSV, for shell-level invariance experiments.

Exit codes: 0 success (at least one requested fit produced a result),
2 input error, 3 every requested fit failed its precondition.
"""

from __future__ import annotations

import argparse
import json
import math
import random
import sys
from dataclasses import dataclass, field
from pathlib import Path
from typing import Union

from . import diagnostics, oracle
from .errors import (
    CsvParseError,
    GenerationError,
    InsufficientDataError,
    LineFitError,
)
from .fitters import (
    AllLinesThroughCentroid,
    FitReport,
    UniqueLine,
    fit_d_report,
    fit_x,
    fit_y,
)
from .generators import (
    CircleSpec,
    NoisyLineSpec,
    SlantedLadder,
    VerticalLadder,
    gen_circle,
    gen_noisy_line,
    gen_parallel,
)
from .geometry import (
    NormalLine,
    Point,
    inverse_slope_to_normal,
    normal_to_slope,
    slope_to_normal,
)
from .stats import PairedSample, Sample, summarize
from .svg import render_svg
from .transforms import Rotation, Translation, apply_motion_points

__all__ = ["RunConfig", "parse_csv", "run", "main"]

GeneratorSpec = Union[CircleSpec, VerticalLadder, SlantedLadder, NoisyLineSpec]

EXIT_OK = 0
EXIT_INPUT_ERROR = 2
EXIT_NO_METHOD_SUCCEEDED = 3


@dataclass(frozen=True)
class RunConfig:
    """One fitting run: exactly one input source, at least one method."""

    input: Union[str, Path, GeneratorSpec]
    methods: tuple[str, ...] = ("Y", "X", "D")
    output_json: Path | None = None
    output_svg: Path | None = None
    oracle_check: bool = False
    tolerance_overrides: dict[str, float] = field(default_factory=dict)

    def __post_init__(self):
        if not self.methods:
            raise ValueError("at least one method must be selected")
        for m in self.methods:
            if m not in ("Y", "X", "D"):
                raise ValueError(f"unknown method {m!r}")


# ---------------------------------------------------------------------------
# CSV

def parse_csv(data: bytes) -> PairedSample:
    """Parse `x,y` lines; a single leading header line `x,y` is allowed.

    Blank lines are ignored; both LF and CRLF line endings work.  Errors name
    the offending 1-based line number.
    """
    try:
        text = data.decode("utf-8")
    except UnicodeDecodeError as exc:
        raise CsvParseError(f"input is not UTF-8 text: {exc}") from exc
    points: list[tuple[float, float]] = []
    seen_content = False
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line:
            continue
        fields = [f.strip() for f in line.split(",")]
        if not seen_content and fields == ["x", "y"]:
            seen_content = True
            continue
        seen_content = True
        if len(fields) != 2:
            raise CsvParseError(
                f"line {lineno}: expected 'x,y', got {raw!r}", line=lineno
            )
        try:
            x, y = float(fields[0]), float(fields[1])
        except ValueError as exc:
            raise CsvParseError(
                f"line {lineno}: could not parse numbers from {raw!r}", line=lineno
            ) from exc
        if not (math.isfinite(x) and math.isfinite(y)):
            raise CsvParseError(
                f"line {lineno}: non-finite value in {raw!r}", line=lineno
            )
        points.append((x, y))
    if len(points) < 2:
        raise InsufficientDataError(
            f"need at least 2 data points, got {len(points)}"
        )
    return PairedSample.from_points(points)


def _format_float(v: float) -> str:
    # 17 significant digits round-trip any double exactly
    return format(v, ".17g")


def render_csv(p: PairedSample) -> str:
    lines = ["x,y"]
    for x, y in p.points():
        lines.append(f"{_format_float(x)},{_format_float(y)}")
    return "\n".join(lines) + "\n"


# ---------------------------------------------------------------------------
# JSON (hand-rolled so floats get 17 significant digits)

def _json_encode(value, indent: int = 0) -> str:
    pad = "  " * indent
    if value is None:
        return "null"
    if isinstance(value, bool):
        return "true" if value else "false"
    if isinstance(value, int):
        return str(value)
    if isinstance(value, float):
        if not math.isfinite(value):
            raise ValueError(f"cannot serialize non-finite float {value!r}")
        return _format_float(value)
    if isinstance(value, str):
        return json.dumps(value)
    if isinstance(value, (list, tuple)):
        if not value:
            return "[]"
        inner = ", ".join(_json_encode(v, indent) for v in value)
        return f"[{inner}]"
    if isinstance(value, dict):
        if not value:
            return "{}"
        rows = [
            f'{pad}  {_json_encode(str(k))}: {_json_encode(v, indent + 1)}'
            for k, v in value.items()
        ]
        return "{\n" + ",\n".join(rows) + f"\n{pad}}}"
    raise TypeError(f"cannot serialize {type(value)!r}")


def render_json(report: dict) -> str:
    return _json_encode(report) + "\n"


# ---------------------------------------------------------------------------
# fitting orchestration

def _fit_all(p: PairedSample, methods, iso_tol: float | None):
    results: dict[str, dict] = {}
    for m in methods:
        try:
            if m == "Y":
                report = fit_y(p)
            elif m == "X":
                report = fit_x(p)
            else:
                report = fit_d_report(p, iso_tol)
            results[m] = {"status": "ok", "report": report}
        except LineFitError as exc:
            results[m] = {"status": "precondition-failed", "error": str(exc)}
    return results


def _normal_form(report: FitReport) -> NormalLine | None:
    line = report.line
    if isinstance(line, UniqueLine):
        return line.line
    if isinstance(line, AllLinesThroughCentroid):
        return None
    if report.method == "Y":
        return slope_to_normal(line)
    return inverse_slope_to_normal(line)


def _fit_json(method: str, outcome: dict) -> dict:
    if outcome["status"] != "ok":
        return {"status": "precondition-failed", "error": outcome["error"]}
    report: FitReport = outcome["report"]
    line = report.line
    if isinstance(line, AllLinesThroughCentroid):
        return {
            "status": "all_lines_through_centroid",
            "centroid": [line.centroid.x, line.centroid.y],
            "objective": line.objective,
        }
    body: dict = {"status": "ok"}
    if method == "Y":
        body["m"] = line.m
        body["b"] = line.b
    elif method == "X":
        body["mu"] = line.mu
        body["beta"] = line.beta
    else:
        body["theta"] = line.line.theta
        body["c"] = line.line.c
        body["case"] = line.case.tag
        if line.case.e_ratio is not None:
            body["e_ratio"] = line.case.e_ratio
    nf = _normal_form(report)
    body["normal_form"] = {"theta": nf.theta, "c": nf.c}
    body["objective_min"] = report.objective_min
    return body


def _comparison_json(cmp: diagnostics.ComparisonReport) -> dict:
    return {
        "m": cmp.m,
        "m_x": cmp.m_x,
        "tan_theta": cmp.tan_theta,
        "ratio_bound": cmp.ratio_bound,
        "ordering_e": cmp.ordering_e,
        "ordering_f": cmp.ordering_f,
        "ordering_f_observed": cmp.ordering_f_observed,
        "cs_gap": cmp.cs_gap,
        "collinear": cmp.collinear,
        "case": cmp.case_tag,
    }


def _oracle_deltas(p: PairedSample, results: dict) -> dict:
    deltas: dict[str, dict] = {}
    for method, outcome in results.items():
        if outcome["status"] != "ok":
            continue
        report: FitReport = outcome["report"]
        line = report.line
        if method == "Y":
            m, b, obj = oracle.grid_min_y(p)
            deltas["y"] = {
                "slope_delta": abs(line.m - m),
                "intercept_delta": abs(line.b - b),
                "objective_delta": abs(report.objective_min - obj),
            }
        elif method == "X":
            mu, beta, obj = oracle.grid_min_x(p)
            deltas["x"] = {
                "slope_delta": abs(line.mu - mu),
                "intercept_delta": abs(line.beta - beta),
                "objective_delta": abs(report.objective_min - obj),
            }
        elif isinstance(line, UniqueLine):
            theta, c, obj = oracle.grid_min_d(p)
            aligned_c = c if math.cos(line.line.theta - theta) >= 0.0 else -c
            deltas["d"] = {
                "theta_delta": abs(math.remainder(line.line.theta - theta, math.pi)),
                "c_delta": abs(line.line.c - aligned_c),
                "objective_delta": abs(report.objective_min - obj),
            }
    return deltas


def _g6(v: float | None) -> str:
    return "-" if v is None else format(v, ".6g")


def _table_lines(results: dict, cmp: diagnostics.ComparisonReport,
                 oracle_deltas: dict | None) -> list[str]:
    stats = None
    lines: list[str] = []
    header = f"{'method':<8}{'slope':>14}{'intercept':>14}{'theta':>14}{'c':>14}{'objective':>14}"
    lines.append(header)
    lines.append("-" * len(header))
    for method in ("Y", "X", "D"):
        if method not in results:
            continue
        outcome = results[method]
        if outcome["status"] != "ok":
            lines.append(f"{method:<8}({outcome['error']})")
            continue
        report: FitReport = outcome["report"]
        stats = report.stats
        line = report.line
        if isinstance(line, AllLinesThroughCentroid):
            lines.append(
                f"{method:<8}degenerate: every line through centroid "
                f"({_g6(line.centroid.x)}, {_g6(line.centroid.y)}), "
                f"objective {_g6(line.objective)}"
            )
            continue
        nf = _normal_form(report)
        if method == "Y":
            slope, intercept = line.m, line.b
        elif method == "X":
            slope, intercept = line.mu, line.beta
        else:
            try:
                si_line = normal_to_slope(nf)
                slope, intercept = si_line.m, si_line.b
            except LineFitError:
                slope, intercept = None, None
        lines.append(
            f"{method:<8}{_g6(slope):>14}{_g6(intercept):>14}"
            f"{_g6(nf.theta):>14}{_g6(nf.c):>14}{_g6(report.objective_min):>14}"
        )
    if stats is not None:
        lines.append("")
        lines.append(
            f"n={stats.n}  centroid=({_g6(stats.mean_x)}, {_g6(stats.mean_y)})  "
            f"var(x)={_g6(stats.var_x)}  var(y)={_g6(stats.var_y)}  "
            f"cov(x,y)={_g6(stats.cov_xy)}"
        )
    tan = cmp.tan_theta if isinstance(cmp.tan_theta, str) else _g6(cmp.tan_theta)
    lines.append(
        f"slopes: m={_g6(cmp.m)}  bound={_g6(cmp.ratio_bound)}  "
        f"m_x={_g6(cmp.m_x)}  tan(theta)={tan}"
    )
    lines.append(
        f"orderings: |m|<=bound<=|m_x| {cmp.ordering_e}; "
        f"|m|<=|tan|<=|m_x| {cmp.ordering_f}  "
        f"(case {cmp.case_tag}, collinear={str(cmp.collinear).lower()}, "
        f"cs_gap={_g6(cmp.cs_gap)})"
    )
    if oracle_deltas is not None:
        for method, d in oracle_deltas.items():
            pairs = "  ".join(f"{k}={_g6(v)}" for k, v in d.items())
            lines.append(f"oracle[{method}]: {pairs}")
    if "X" in results and results["X"]["status"] == "ok":
        lines.append("note: X slope/intercept are mu and beta in x = mu*y + beta")
    return lines


def _load_points(config: RunConfig) -> PairedSample:
    src = config.input
    if isinstance(src, CircleSpec):
        return gen_circle(src)
    if isinstance(src, (VerticalLadder, SlantedLadder)):
        return gen_parallel(src)
    if isinstance(src, NoisyLineSpec):
        return gen_noisy_line(src)
    if isinstance(src, (str, Path)):
        if str(src) == "-":
            return parse_csv(sys.stdin.buffer.read())
        return parse_csv(Path(src).read_bytes())
    raise TypeError(f"unsupported input source {src!r}")


def run(config: RunConfig, out=None) -> int:
    """Execute one fitting run; returns the process exit status."""
    out = out if out is not None else sys.stdout
    try:
        points = _load_points(config)
    except (LineFitError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INPUT_ERROR

    iso_tol = config.tolerance_overrides.get("isotropic")
    col_tol = config.tolerance_overrides.get("collinearity")
    results = _fit_all(points, config.methods, iso_tol)
    cmp = diagnostics.compare(points, col_tol)
    deltas = _oracle_deltas(points, results) if config.oracle_check else None

    for line in _table_lines(results, cmp, deltas):
        print(line, file=out)

    if config.output_json is not None:
        s = summarize(points)
        report = {
            "points": [[x, y] for x, y in points.points()],
            "stats": {
                "n": s.n,
                "mean_x": s.mean_x,
                "mean_y": s.mean_y,
                "var_x": s.var_x,
                "var_y": s.var_y,
                "cov_xy": s.cov_xy,
                "mean_xx": s.mean_xx,
                "mean_yy": s.mean_yy,
                "mean_xy": s.mean_xy,
            },
            "fits": {m.lower(): _fit_json(m, results[m]) for m in config.methods},
            "comparison": _comparison_json(cmp),
        }
        if deltas is not None:
            report["oracle"] = deltas
        Path(config.output_json).write_text(render_json(report), encoding="utf-8")

    if config.output_svg is not None:
        fit_rows = []
        for m in config.methods:
            outcome = results[m]
            if outcome["status"] != "ok":
                fit_rows.append((m, None))
                continue
            report = outcome["report"]
            if isinstance(report.line, AllLinesThroughCentroid):
                fit_rows.append((m, report.line))
            else:
                fit_rows.append((m, _normal_form(report)))
        Path(config.output_svg).write_text(
            render_svg(points.points(), fit_rows), encoding="utf-8"
        )

    if any(r["status"] == "ok" for r in results.values()):
        return EXIT_OK
    return EXIT_NO_METHOD_SUCCEEDED


# ---------------------------------------------------------------------------
# argument parsing

def _parse_pair(text: str, flag: str) -> tuple[float, float]:
    parts = text.split(",")
    if len(parts) != 2:
        raise argparse.ArgumentTypeError(f"{flag} expects 'A,B', got {text!r}")
    try:
        return float(parts[0]), float(parts[1])
    except ValueError as exc:
        raise argparse.ArgumentTypeError(f"{flag}: {exc}") from exc


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="linefit",
        description="Fit lines to 2D points by vertical, horizontal or "
        "perpendicular least squares.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    fit = sub.add_parser("fit", help="fit CSV points and report the lines")
    fit.add_argument("--input", default="-", help="CSV file path ('-' = stdin)")
    fit.add_argument(
        "--method",
        choices=["y", "x", "d", "all"],
        default="all",
        help="which fit(s) to run",
    )
    fit.add_argument("--json", metavar="PATH", help="write a JSON report here")
    fit.add_argument("--svg", metavar="PATH", help="write an SVG figure here")
    fit.add_argument(
        "--oracle",
        action="store_true",
        help="also run the brute-force grid oracle and report deltas",
    )

    gen = sub.add_parser("generate", help="emit a benchmark dataset as CSV")
    gsub = gen.add_subparsers(dest="shape", required=True)

    circle = gsub.add_parser("circle", help="evenly spaced points on a circle")
    circle.add_argument("--n", type=int, required=True)
    circle.add_argument("--alpha", type=float, default=0.0, help="phase angle")
    circle.add_argument("--radius", type=float, default=1.0)
    circle.add_argument("--center", type=str, default="0,0", metavar="X,Y")

    ladder = gsub.add_parser(
        "parallel", help="symmetric rungs between two parallel lines"
    )
    ladder.add_argument("--A", type=float, help="half gap of a vertical ladder")
    ladder.add_argument("--M", type=float, help="slope of a slanted ladder")
    ladder.add_argument("--B", type=float, help="intercept offset of a slanted ladder")
    ladder.add_argument("--n", type=int, default=25, help="rungs per line")
    ladder.add_argument("--seed", type=int, default=0)
    ladder.add_argument(
        "--spread", type=float, default=30.0, help="rung positions span [-spread, spread]"
    )

    noisy = gsub.add_parser("noisy-line", help="seeded noisy points along a line")
    noisy.add_argument("--slope", type=float, required=True)
    noisy.add_argument("--intercept", type=float, default=0.0)
    noisy.add_argument("--n", type=int, default=30)
    noisy.add_argument("--seed", type=int, default=0)
    noisy.add_argument("--noise", type=float, default=0.1)
    noisy.add_argument("--span", type=float, default=10.0, help="x in [-span, span]")

    tr = sub.add_parser("transform", help="rigidly move a CSV point set")
    tr.add_argument("--input", default="-", help="CSV file path ('-' = stdin)")
    tr.add_argument("--rotate", type=float, metavar="PHI", help="rotation angle (radians)")
    tr.add_argument(
        "--center",
        type=str,
        metavar="X,Y",
        help="rotation center (default: sample centroid)",
    )
    tr.add_argument("--translate", type=str, metavar="U,V", help="translation vector")
    return parser


def _cmd_fit(args) -> int:
    methods = ("Y", "X", "D") if args.method == "all" else (args.method.upper(),)
    config = RunConfig(
        input=args.input,
        methods=methods,
        output_json=Path(args.json) if args.json else None,
        output_svg=Path(args.svg) if args.svg else None,
        oracle_check=args.oracle,
    )
    return run(config)


def _cmd_generate(args) -> int:
    try:
        if args.shape == "circle":
            cx, cy = _parse_pair(args.center, "--center")
            points = gen_circle(
                CircleSpec(n=args.n, phase=args.alpha, radius=args.radius,
                           center=Point(cx, cy))
            )
        elif args.shape == "parallel":
            rng = random.Random(args.seed)
            rungs = Sample(tuple(rng.uniform(-args.spread, args.spread)
                                 for _ in range(args.n)))
            if args.A is not None:
                if args.M is not None or args.B is not None:
                    raise GenerationError("--A excludes --M/--B")
                points = gen_parallel(VerticalLadder(args.A, rungs))
            else:
                if args.M is None or args.B is None:
                    raise GenerationError(
                        "a ladder needs either --A (vertical) or both --M and --B"
                    )
                points = gen_parallel(SlantedLadder(args.M, args.B, rungs))
        else:
            points = gen_noisy_line(
                NoisyLineSpec(
                    slope=args.slope,
                    intercept=args.intercept,
                    n=args.n,
                    seed=args.seed,
                    x_span=(-args.span, args.span),
                    noise=args.noise,
                )
            )
    except LineFitError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INPUT_ERROR
    sys.stdout.write(render_csv(points))
    return EXIT_OK


def _cmd_transform(args) -> int:
    try:
        if str(args.input) == "-":
            points = parse_csv(sys.stdin.buffer.read())
        else:
            points = parse_csv(Path(args.input).read_bytes())
        if args.rotate is not None:
            center = None
            if args.center:
                cx, cy = _parse_pair(args.center, "--center")
                center = Point(cx, cy)
            points = apply_motion_points(points, Rotation(args.rotate, center))
        if args.translate is not None:
            u, v = _parse_pair(args.translate, "--translate")
            points = apply_motion_points(points, Translation(u, v))
    except (LineFitError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INPUT_ERROR
    sys.stdout.write(render_csv(points))
    return EXIT_OK


def main(argv=None) -> int:
    args = _build_parser().parse_args(argv)
    if args.command == "fit":
        return _cmd_fit(args)
    if args.command == "generate":
        return _cmd_generate(args)
    return _cmd_transform(args)


if __name__ == "__main__":
    sys.exit(main())
