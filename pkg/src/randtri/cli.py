"""Command-line interface: ``randtri <command> [options]``.

Exit status is 0 on success, 2 for bad input (domain or region-spec errors,
bad flags) and 3 when a numerical routine fails.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import logging
import sys
from dataclasses import asdict, dataclass, field
from typing import Optional

import numpy as np

from . import analysis, closed_forms, kernel, montecarlo
from . import region as rg
from .errors import DomainError, NumericalFailure
from .regionspec import resolve_region

COMMANDS = ("compute", "closed-form", "simulate", "sylvester", "bounds", "maximize", "sweep")
OUTPUTS = ("text", "json", "csv")
SWEEP_FAMILIES = ("limacon", "regular-polygon", "offset-disk", "square-diagonal", "slice-disk")
SWEEP_COLUMNS = ("family", "parameter", "p_closed_form", "p_quadrature", "p_mc",
                 "mc_std_err", "n", "seed")
MIN_SAMPLES = 1000


@dataclass
class RunConfig:
    command: str
    region_spec: Optional[str] = None
    anchor: Optional[list] = None
    tolerance: float = kernel.DEFAULT_TOL
    samples: Optional[int] = None
    seed: int = 0
    output: str = "text"
    params: dict = field(default_factory=dict)
    argv: list = field(default_factory=list)

    def validate(self):
        if self.command not in COMMANDS:
            raise DomainError(f"unknown command {self.command!r}")
        if self.output not in OUTPUTS:
            raise DomainError(f"unknown output format {self.output!r}")
        if not self.tolerance > 0:
            raise DomainError("tolerance must be positive")
        stochastic = self.command in ("simulate", "sylvester") or (
            self.command == "sweep" and self.samples)
        if stochastic and (self.samples is None or self.samples < MIN_SAMPLES):
            raise DomainError(f"stochastic commands need at least {MIN_SAMPLES} samples")


# -- argument parsing --------------------------------------------------------

def _parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--output", choices=OUTPUTS, default=None,
                        help="report format (default: text; csv for sweep)")
    common.add_argument("--tol", type=float, default=kernel.DEFAULT_TOL,
                        help="quadrature tolerance")
    common.add_argument("-v", "--verbose", action="store_true")

    def with_region(p, anchor=True):
        p.add_argument("--region", required=True,
                       help="inline shorthand (e.g. limacon:a=2, square) or a JSON region file")
        if anchor:
            p.add_argument("--anchor", nargs="+", metavar="A",
                           help="'origin', 'X Y', or 'bary:ALPHA,BETA,GAMMA' for triangles; "
                                "omitted means the region's default anchor")

    parser = argparse.ArgumentParser(
        prog="randtri",
        description="Probability that a random triangle in a planar region contains a point.")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("compute", parents=[common], help="probability by angular quadrature")
    with_region(p)
    p.add_argument("--method", default="quadrature",
                   choices=("quadrature", "anchored", "median", "double-integral", "all"))
    p.add_argument("--u", type=float, default=0.0, help="base direction for --method anchored")
    p.add_argument("--panels", type=int, default=256, help="grid for --method double-integral")

    p = sub.add_parser("closed-form", parents=[common], help="closed-form family values")
    p.add_argument("family", choices=("limacon", "regular-polygon", "triangle", "square",
                                      "square-diagonal", "slice-disk", "offset-disk",
                                      "disk-average"))
    for name in ("a", "r", "u", "v", "alpha", "beta", "gamma"):
        p.add_argument(f"--{name}", type=float)
    p.add_argument("--m", type=int)

    p = sub.add_parser("simulate", parents=[common], help="Monte Carlo containment estimate")
    with_region(p)
    p.add_argument("--n", type=int, default=1_000_000)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--workers", type=int, default=None)

    p = sub.add_parser("sylvester", parents=[common],
                       help="Monte Carlo probability that one of four points lies in the others' triangle")
    with_region(p, anchor=False)
    p.add_argument("--n", type=int, default=1_000_000)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--workers", type=int, default=None)

    p = sub.add_parser("bounds", parents=[common], help="min half-mass and the resulting bounds")
    with_region(p)

    p = sub.add_parser("maximize", parents=[common], help="search for the best anchor")
    with_region(p, anchor=False)
    p.add_argument("--grid", type=int, default=16)
    p.add_argument("--refine-iters", type=int, default=200)

    p = sub.add_parser("sweep", parents=[common], help="tabulate a parameter family")
    p.add_argument("family", choices=SWEEP_FAMILIES)
    p.add_argument("--grid", type=float, nargs="+", required=True)
    p.add_argument("--n", type=int, default=0, help="Monte Carlo samples per row (0 = none)")
    p.add_argument("--seed", type=int, default=0)
    return parser


def config_from_args(argv: list) -> RunConfig:
    ns = _parser().parse_args(argv)
    output = ns.output or ("csv" if ns.command == "sweep" else "text")
    skip = {"command", "output", "tol", "verbose", "region", "anchor", "n", "seed"}
    params = {k: v for k, v in vars(ns).items() if k not in skip and v is not None}
    return RunConfig(command=ns.command, region_spec=getattr(ns, "region", None),
                     anchor=getattr(ns, "anchor", None), tolerance=ns.tol,
                     samples=getattr(ns, "n", None), seed=getattr(ns, "seed", 0),
                     output=output, params=params, argv=list(argv))


# -- execution ---------------------------------------------------------------

def _resolve_anchor(tokens, region, file_anchor):
    if not tokens:
        return file_anchor if file_anchor is not None else np.asarray(region.default_anchor)
    if len(tokens) == 1:
        tok = tokens[0].strip().lower()
        if tok == "origin":
            return np.zeros(2)
        if tok == "default":
            return np.asarray(region.default_anchor)
        if tok.startswith("bary:"):
            if not isinstance(region, rg.Polygon) or len(region.vertices) != 3:
                raise DomainError("barycentric anchors need a triangle region")
            coords = closed_forms.BarycentricPoint(*_floats(tok[5:].split(","), 3))
            return rg.point_from_barycentric(region.vertices, tuple(coords))
    return np.array(_floats(tokens, 2))


def _floats(items, count):
    try:
        values = [float(x) for x in items]
    except ValueError:
        raise DomainError(f"expected {count} numbers, got {' '.join(items)!r}") from None
    if len(values) != count:
        raise DomainError(f"expected {count} numbers, got {len(values)}")
    return values


def _row(quantity, value, method=None, error=None):
    return {"quantity": quantity, "value": float(value), "method": method,
            "error_estimate": None if error is None else float(error)}


def _need(params, *names):
    missing = [n for n in names if params.get(n) is None]
    if missing:
        raise DomainError("missing parameter(s): " + ", ".join("--" + n for n in missing))
    return [params[n] for n in names]


def _closed_form(params) -> list:
    fam = params["family"]
    cf = kernel.CLOSED_FORM
    if fam == "limacon":
        (a,) = _need(params, "a")
        return [_row("probability", closed_forms.limacon_probability(a), cf),
                _row("min_half_mass", closed_forms.limacon_min_half_mass(a), cf)]
    if fam == "regular-polygon":
        (m,) = _need(params, "m")
        return [_row("probability", closed_forms.regular_polygon_probability(m), cf)]
    if fam == "triangle":
        coords = _need(params, "alpha", "beta", "gamma")
        return [_row("probability", closed_forms.triangle_probability(coords), cf)]
    if fam == "square":
        u, v = _need(params, "u", "v")
        return [_row("probability", closed_forms.square_probability(u, v), cf)]
    if fam == "square-diagonal":
        (u,) = _need(params, "u")
        return [_row("probability", closed_forms.square_diagonal_probability(u), cf)]
    if fam == "slice-disk":
        (a,) = _need(params, "a")
        return [_row("probability", closed_forms.slice_disk_probability(a), cf)]
    if fam == "offset-disk":
        (r,) = _need(params, "r")
        return [_row("probability", closed_forms.offset_disk_probability(r), cf)]
    avg = closed_forms.offset_disk_average()
    return [_row("disk_average", avg.value, cf), _row("reference", avg.reference, cf)]


def _sweep_case(family, x):
    """``(closed form, region, anchor)`` for one sweep parameter."""
    if family == "limacon":
        return closed_forms.limacon_probability(x), rg.limacon(x), None
    if family == "regular-polygon":
        if x != int(x):
            raise DomainError("m must be an integer")
        m = int(x)
        return closed_forms.regular_polygon_probability(m), rg.regular_polygon(2 * m + 1), None
    if family == "offset-disk":
        return closed_forms.offset_disk_probability(x), rg.OffsetDisk(r=x), None
    if family == "square-diagonal":
        return closed_forms.square_diagonal_probability(x), rg.unit_square(), (x, x)
    return closed_forms.slice_disk_probability(x), rg.DiskSlice(x), None


def _sweep(config: RunConfig) -> tuple[list, list]:
    family = config.params["family"]
    n = config.samples or 0
    rows, skipped = [], []
    for x in config.params["grid"]:
        try:
            p_closed, region, anchor = _sweep_case(family, x)
            p_quad = kernel.containment_probability(region, anchor, config.tolerance).value
            mc = (montecarlo.estimate_probability(region, anchor, n=n, seed=config.seed)
                  if n else None)
        except DomainError as exc:
            skipped.append(f"skipping {family} parameter {x!r}: {exc}")
            continue
        rows.append({"family": family, "parameter": x, "p_closed_form": p_closed,
                     "p_quadrature": p_quad,
                     "p_mc": mc.p_hat if mc else None,
                     "mc_std_err": mc.std_err if mc else None,
                     "n": n if mc else None, "seed": config.seed if mc else None})
    return rows, skipped


def execute(config: RunConfig) -> dict:
    """Carry out ``config`` and return the report document (without printing)."""
    config.validate()
    report = {"command": config.command, "argv": config.argv, "config": asdict(config)}
    cmd, params = config.command, config.params

    if cmd == "closed-form":
        report["results"] = _closed_form(params)
        return report
    if cmd == "sweep":
        report["rows"], report["skipped"] = _sweep(config)
        return report

    region, file_anchor = resolve_region(config.region_spec)
    report["region"] = getattr(region, "label", None) or region.kind
    results = []

    if cmd == "sylvester":
        est = montecarlo.sylvester_nonconvex(region, n=config.samples, seed=config.seed,
                                             workers=params.get("workers"))
        results += [_row("one_in_triangle", est.p_hat, kernel.MONTE_CARLO, est.std_err),
                    _row("non_convex", 4 * est.p_hat, kernel.MONTE_CARLO, 4 * est.std_err)]
        report.update(n=est.n, seed=est.seed, results=results)
        return report

    if cmd == "maximize":
        rep = analysis.maximize(region, grid=params["grid"], refine_iters=params["refine_iters"])
        results += [_row("argmax_x", rep.argmax[0]), _row("argmax_y", rep.argmax[1]),
                    _row("p_max", rep.p_max, kernel.QUADRATURE)]
        report.update(results=results, evaluations=len(rep.trace),
                      trace=[[x, y, p] for (x, y), p in rep.trace])
        return report

    anchor = _resolve_anchor(config.anchor, region, file_anchor)
    report["anchor"] = [float(anchor[0]), float(anchor[1])]

    if cmd == "simulate":
        est = montecarlo.estimate_probability(region, anchor, n=config.samples, seed=config.seed,
                                              workers=params.get("workers"))
        results.append(_row("probability", est.p_hat, kernel.MONTE_CARLO, est.std_err))
        report.update(n=est.n, seed=est.seed)
    elif cmd == "bounds":
        rep = analysis.bounds(region, anchor)
        results += [_row("min_half_mass", rep.h), _row("lower_bound", rep.lower),
                    _row("probability", rep.p, kernel.QUADRATURE), _row("upper_bound", rep.upper)]
    else:
        method = params["method"]
        tol = config.tolerance
        f = rg.angular_density(region, anchor)
        if method in ("quadrature", "all"):
            res = kernel.probability(f, tol)
            results.append(_row("probability", res.value, res.method, res.error_estimate))
        if method in ("anchored", "all"):
            res = kernel.probability_via_u(f, params["u"], tol)
            results.append(_row("probability", res.value, res.method, res.error_estimate))
        if method in ("median", "all"):
            res = kernel.probability_median(f, tol)
            results.append(_row("probability", res.value, res.method, res.error_estimate))
        if method in ("double-integral", "all"):
            res = kernel.probability_double_integral(region, anchor, n_panels=params["panels"])
            results.append(_row("probability", res.value, res.method, res.error_estimate))
    report["results"] = results
    return report


# -- rendering ---------------------------------------------------------------

def _fmt(value) -> str:
    if value is None:
        return ""
    if isinstance(value, float):
        return f"{value:.12g}"
    return str(value)


def render(report: dict, output: str) -> str:
    if output == "json":
        return json.dumps(report, indent=2) + "\n"
    buf = io.StringIO()
    if "rows" in report:
        writer = csv.writer(buf, lineterminator="\n")
        writer.writerow(SWEEP_COLUMNS)
        for row in report["rows"]:
            cells = [row[c] for c in SWEEP_COLUMNS]
            if output == "csv":
                writer.writerow(["" if v is None else repr(v) if isinstance(v, float) else v
                                 for v in cells])
            else:
                writer.writerow([_fmt(v) for v in cells])
        return buf.getvalue()
    if output == "csv":
        writer = csv.writer(buf, lineterminator="\n")
        writer.writerow(("quantity", "value", "method", "error_estimate"))
        for r in report["results"]:
            err = r["error_estimate"]
            writer.writerow((r["quantity"], repr(r["value"]), r["method"] or "",
                             "" if err is None else repr(err)))
        return buf.getvalue()
    if "region" in report:
        buf.write(f"region: {report['region']}\n")
    if "anchor" in report:
        buf.write(f"anchor: {_fmt(report['anchor'][0])} {_fmt(report['anchor'][1])}\n")
    if "n" in report:
        buf.write(f"samples: {report['n']}  seed: {report['seed']}\n")
    for r in report["results"]:
        line = f"{r['quantity']}: {_fmt(r['value'])}"
        if r["method"]:
            line += f"  method={r['method']}"
        if r["error_estimate"] is not None:
            line += f"  error_estimate={r['error_estimate']:.3g}"
        buf.write(line + "\n")
    if "evaluations" in report:
        buf.write(f"evaluations: {report['evaluations']}\n")
    return buf.getvalue()


def run(config: RunConfig, out=None, err=None) -> int:
    """Execute, print the report, and return the exit status."""
    out = out or sys.stdout
    err = err or sys.stderr
    try:
        report = execute(config)
    except (DomainError, ValueError) as exc:
        print(f"error: {exc}", file=err)
        return 2
    except NumericalFailure as exc:
        print(f"numerical failure: {exc}", file=err)
        return 3
    for msg in report.get("skipped", ()):
        print(f"warning: {msg}", file=err)
    out.write(render(report, config.output))
    return 0


def main(argv=None) -> int:
    argv = list(sys.argv[1:] if argv is None else argv)
    try:
        config = config_from_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    logging.basicConfig(level=logging.DEBUG if "-v" in argv or "--verbose" in argv
                        else logging.WARNING, format="%(levelname)s: %(message)s")
    return run(config)


if __name__ == "__main__":
    sys.exit(main())
