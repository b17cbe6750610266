"""Command-line front end.

Every command prints a machine-readable table (CSV by default, JSON with
``--output-format json``) to stdout or ``--output``.  Floats are serialized
with their shortest round-trip representation, so identical invocations
produce byte-identical output.  Exit codes: 0 success, 1 domain or
evaluation error, 2 usage error.
"""

import argparse
import json
import math
import os
import sys

import numpy as np

from mlsemigroup import __version__
from mlsemigroup.calculus import caputo_l1_residual
from mlsemigroup.core import MLParams, SeriesConfig, ml_e2
from mlsemigroup.errors import MLSemigroupError
from mlsemigroup.matrixfn import eig_symmetric, matrix_defect
from mlsemigroup.semigroup import (
    classify_semigroup,
    defect,
    defect_grid,
    exponential_fit,
)
from mlsemigroup.core import ml_at_time

MAX_TERMS_ENV = "ML_MAX_TERMS"


def _default_max_terms() -> int:
    raw = os.environ.get(MAX_TERMS_ENV)
    if raw is None:
        return 10000
    try:
        return int(raw)
    except ValueError as exc:
        raise MLSemigroupError(
            f"environment variable {MAX_TERMS_ENV}={raw!r} is not an integer"
        ) from exc


def _series_config(args) -> SeriesConfig:
    max_terms = args.max_terms if args.max_terms is not None else _default_max_terms()
    return SeriesConfig(tol=args.series_tol, max_terms=max_terms, z_cap=args.z_cap)


def _fmt(value) -> str:
    if isinstance(value, bool):
        return "true" if value else "false"
    if value is None:
        return ""
    if isinstance(value, float):
        return repr(float(value))  # plain-float repr even for numpy scalars
    return str(value)


def _json_safe(value):
    if isinstance(value, float) and not math.isfinite(value):
        return None
    return value


def _render(header: dict, fields: list[str], rows: list[dict], fmt: str) -> str:
    if fmt == "json":
        doc = {k: _json_safe(v) for k, v in header.items()}
        doc["rows"] = [
            {k: _json_safe(row[k]) for k in fields} for row in rows
        ]
        return json.dumps(doc, indent=2) + "\n"
    lines = [",".join(fields)]
    lines.extend(",".join(_fmt(row[k]) for k in fields) for row in rows)
    return "\n".join(lines) + "\n"


def _emit(args, header, fields, rows) -> None:
    text = _render(header, fields, rows, args.output_format)
    if args.output:
        with open(args.output, "w", encoding="utf-8") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)


def _grid_from_args(args) -> np.ndarray:
    if args.n < 2:
        raise MLSemigroupError(f"--n must be >= 2, got {args.n}")
    if not (args.tmax > args.tmin):
        raise MLSemigroupError(
            f"--tmax ({args.tmax}) must exceed --tmin ({args.tmin})"
        )
    return np.linspace(args.tmin, args.tmax, args.n)


def _cmd_eval(args) -> None:
    cfg = _series_config(args)
    res = ml_e2(args.alpha, args.beta, args.z, cfg)
    fields = ["alpha", "beta", "z", "value", "error_estimate", "terms_used", "converged"]
    row = {
        "alpha": args.alpha,
        "beta": args.beta,
        "z": args.z,
        "value": res.value,
        "error_estimate": res.error_estimate,
        "terms_used": res.terms_used,
        "converged": res.converged,
    }
    _emit(args, {"command": "eval", "version": __version__}, fields, [row])


def _cmd_defect(args) -> None:
    cfg = _series_config(args)
    p = MLParams(alpha=args.alpha, lam=args.lam)
    d = defect(p, args.t, args.s, cfg)
    fields = ["alpha", "lambda", "t", "s", "defect"]
    row = {"alpha": args.alpha, "lambda": args.lam, "t": args.t, "s": args.s, "defect": d}
    _emit(args, {"command": "defect", "version": __version__}, fields, [row])


def _cmd_grid(args) -> None:
    cfg = _series_config(args)
    p = MLParams(alpha=args.alpha, lam=args.lam)
    ts = _grid_from_args(args)
    grid = defect_grid(p, ts, ts, cfg)
    fields = ["t", "s", "defect"]
    rows = [
        {"t": float(t), "s": float(s), "defect": float(grid.defect[i, j])}
        for i, t in enumerate(grid.t_values)
        for j, s in enumerate(grid.s_values)
    ]
    header = {
        "command": "grid",
        "version": __version__,
        "alpha": args.alpha,
        "lambda": args.lam,
        "sup_abs": grid.sup_abs,
    }
    _emit(args, header, fields, rows)


def _cmd_classify(args) -> None:
    cfg = _series_config(args)
    p = MLParams(alpha=args.alpha, lam=args.lam)
    ts = _grid_from_args(args)
    verdict = classify_semigroup(
        p, ts, ts, tol=args.tol, threshold=args.threshold, cfg=cfg
    )
    grid = defect_grid(p, ts, ts, cfg)
    fields = ["alpha", "lambda", "sup_abs", "tol", "threshold", "verdict"]
    row = {
        "alpha": args.alpha,
        "lambda": args.lam,
        "sup_abs": grid.sup_abs,
        "tol": args.tol,
        "threshold": args.threshold,
        "verdict": verdict.value,
    }
    _emit(args, {"command": "classify", "version": __version__}, fields, [row])


def _cmd_matrix(args) -> None:
    cfg = _series_config(args)
    try:
        a = np.loadtxt(args.matrix, delimiter=",", ndmin=2)
    except OSError as exc:
        raise MLSemigroupError(f"--matrix: cannot read {args.matrix}: {exc}") from exc
    except ValueError as exc:
        raise MLSemigroupError(f"--matrix: {args.matrix} is not numeric CSV: {exc}") from exc
    spec = eig_symmetric(a)
    single = args.t is not None or args.s is not None
    if single and (args.t is None or args.s is None):
        raise MLSemigroupError("--t and --s must be given together")
    fields = ["alpha", "t", "s", "defect"]
    if single:
        rows = [
            {
                "alpha": args.alpha,
                "t": args.t,
                "s": args.s,
                "defect": matrix_defect(args.alpha, spec, args.t, args.s, cfg),
            }
        ]
        sup = abs(rows[0]["defect"])
    else:
        ts = _grid_from_args(args)
        rows = []
        sup = 0.0
        for t in ts:
            for s in ts:
                d = matrix_defect(args.alpha, spec, float(t), float(s), cfg)
                rows.append({"alpha": args.alpha, "t": float(t), "s": float(s), "defect": d})
                sup = max(sup, abs(d))
    header = {
        "command": "matrix",
        "version": __version__,
        "alpha": args.alpha,
        "order": spec.order,
        "sup_abs": sup,
    }
    _emit(args, header, fields, rows)


def _cmd_caputo(args) -> None:
    cfg = _series_config(args)
    p = MLParams(alpha=args.alpha, lam=args.lam)
    report = caputo_l1_residual(p, args.u0, args.tmax, args.steps, cfg)
    fields = [
        "alpha",
        "lambda",
        "u0",
        "t_final",
        "grid_steps",
        "max_residual",
        "empirical_order",
    ]
    row = {
        "alpha": args.alpha,
        "lambda": args.lam,
        "u0": args.u0,
        "t_final": args.tmax,
        "grid_steps": report.grid_steps,
        "max_residual": report.max_residual,
        "empirical_order": report.empirical_order
        if math.isfinite(report.empirical_order)
        else None,
    }
    _emit(args, {"command": "caputo-check", "version": __version__}, fields, [row])


def _cmd_fit(args) -> None:
    cfg = _series_config(args)
    p = MLParams(alpha=args.alpha, lam=args.lam)

    def trajectory(t: float) -> float:
        return ml_at_time(p, t, cfg).value

    fit = exponential_fit(trajectory, args.tmax, args.samples)
    fields = ["alpha", "lambda", "omega", "residual", "samples"]
    row = {
        "alpha": args.alpha,
        "lambda": args.lam,
        "omega": fit.omega,
        "residual": fit.residual,
        "samples": args.samples,
    }
    _emit(args, {"command": "fit", "version": __version__}, fields, [row])


def _add_common(sub: argparse.ArgumentParser, series_tol: float = 1e-14) -> None:
    sub.add_argument("--series-tol", type=float, default=series_tol,
                     help=f"series truncation tolerance (default {series_tol:g})")
    sub.add_argument("--max-terms", type=int, default=None,
                     help=f"series term cap (default 10000, or ${MAX_TERMS_ENV})")
    sub.add_argument("--z-cap", type=float, default=50.0,
                     help="largest accepted |z| (default 50)")
    sub.add_argument("--output-format", choices=("csv", "json"), default="csv")
    sub.add_argument("--output", default=None, help="write to this path instead of stdout")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="mlsemigroup",
        description="Evaluate Mittag-Leffler functions and quantify the "
        "failure of the semigroup law away from alpha = 1 / lambda = 0.",
    )
    parser.add_argument("--version", action="version", version=__version__)
    subs = parser.add_subparsers(dest="command", required=True)

    p = subs.add_parser("eval", help="evaluate E_{alpha,beta}(z)")
    p.add_argument("--alpha", type=float, required=True)
    p.add_argument("--beta", type=float, default=1.0)
    p.add_argument("--z", type=float, required=True)
    _add_common(p)
    p.set_defaults(handler=_cmd_eval)

    p = subs.add_parser("defect", help="semigroup defect at one (t, s)")
    p.add_argument("--alpha", type=float, required=True)
    p.add_argument("--lambda", dest="lam", type=float, required=True)
    p.add_argument("--t", type=float, required=True)
    p.add_argument("--s", type=float, required=True)
    _add_common(p)
    p.set_defaults(handler=_cmd_defect)

    p = subs.add_parser("grid", help="defect sweep over a square (t, s) grid")
    p.add_argument("--alpha", type=float, required=True)
    p.add_argument("--lambda", dest="lam", type=float, required=True)
    p.add_argument("--tmin", type=float, default=0.0)
    p.add_argument("--tmax", type=float, required=True)
    p.add_argument("--n", type=int, required=True, help="grid points per axis")
    _add_common(p)
    p.set_defaults(handler=_cmd_grid)

    p = subs.add_parser("classify", help="HOLDS/FAILS verdict for the product law")
    p.add_argument("--alpha", type=float, required=True)
    p.add_argument("--lambda", dest="lam", type=float, required=True)
    p.add_argument("--tol", type=float, default=1e-9)
    p.add_argument("--threshold", type=float, default=1e-3)
    p.add_argument("--tmin", type=float, default=0.25)
    p.add_argument("--tmax", type=float, default=2.0)
    p.add_argument("--n", type=int, default=8)
    _add_common(p, series_tol=1e-16)  # verdict banding needs the headroom
    p.set_defaults(handler=_cmd_classify)

    p = subs.add_parser("matrix", help="matrix defect from a CSV symmetric matrix")
    p.add_argument("--alpha", type=float, required=True)
    p.add_argument("--matrix", required=True, help="row-major comma-separated matrix")
    p.add_argument("--t", type=float, default=None)
    p.add_argument("--s", type=float, default=None)
    p.add_argument("--tmin", type=float, default=0.25)
    p.add_argument("--tmax", type=float, default=2.0)
    p.add_argument("--n", type=int, default=8)
    _add_common(p)
    p.set_defaults(handler=_cmd_matrix)

    p = subs.add_parser("caputo-check", help="L1 residual of the fractional IVP")
    p.add_argument("--alpha", type=float, required=True)
    p.add_argument("--lambda", dest="lam", type=float, required=True)
    p.add_argument("--u0", type=float, default=1.0)
    p.add_argument("--tmax", type=float, default=1.0)
    p.add_argument("--steps", type=int, required=True)
    _add_common(p)
    p.set_defaults(handler=_cmd_caputo)

    p = subs.add_parser("fit", help="exponential fit of the trajectory")
    p.add_argument("--alpha", type=float, required=True)
    p.add_argument("--lambda", dest="lam", type=float, required=True)
    p.add_argument("--tmax", type=float, required=True)
    p.add_argument("--samples", type=int, default=101)
    _add_common(p)
    p.set_defaults(handler=_cmd_fit)

    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        args.handler(args)
    except MLSemigroupError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1
    return 0


if __name__ == "__main__":
    sys.exit(main())
