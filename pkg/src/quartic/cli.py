"""Command-line front end.

Usage:
    quartic spectrum --n-basis 10 --omega 2.16 --lambda 1 --format json
    quartic wkb --levels 10
    quartic scan-omega --n-basis 10 --lo 1 --hi 4
    quartic converge --omega 2.16 --sizes 10,20,40,80
    quartic oracle --half-width 8 --points 4000 --levels 10 --richardson
    quartic plot --levels 10 --wkb --output figure.svg

Exit status is 0 on success, 2 on a usage error and 1 when a computation
fails (bad parameter values, solver not converging).
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import sys

from . import __version__
from .analysis import compute_spectrum, convergence_study, optimize_omega
from .errors import QuarticError
from .operators import BasisSpec, OscillatorParams
from .oracle import GridSpec, default_half_width, fd_spectrum, richardson_pair
from .svg import LevelSet, PlotSpec, render_levels_svg
from .wkb import wkb_constants, wkb_table


def _size_list(text: str) -> list[int]:
    try:
        return [int(tok) for tok in text.split(",") if tok.strip()]
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected comma-separated integers, got {text!r}")


def _dumps(obj) -> str:
    # float repr is the shortest string that round-trips
    return json.dumps(obj, indent=2) + "\n"


def _csv(header, rows) -> str:
    buf = io.StringIO()
    writer = csv.writer(buf, lineterminator="\n")
    writer.writerow(header)
    writer.writerows(rows)
    return buf.getvalue()


def _g6(v: float) -> str:
    return f"{v:.6g}"


def _level_table(title: str, levels) -> str:
    lines = [title, f"{'n':>3}  {'energy':>12}"]
    lines += [f"{n:>3}  {_g6(e):>12}" for n, e in enumerate(levels)]
    return "\n".join(lines) + "\n"


def _level_output(fmt, payload, title, levels) -> str:
    if fmt == "json":
        return _dumps(payload)
    if fmt == "csv":
        return _csv(["n", "energy"], [(n, repr(e)) for n, e in enumerate(levels)])
    return _level_table(title, levels)


def _params(args) -> OscillatorParams:
    return OscillatorParams(k=args.k, lam=args.lam)


def _params_dict(p: OscillatorParams) -> dict:
    return {"k": p.k, "lambda": p.lam}


def cmd_spectrum(args) -> str:
    spec = compute_spectrum(_params(args), BasisSpec(args.n_basis, args.omega), args.levels, args.tol)
    payload = {
        "params": _params_dict(spec.params),
        "basis": {"n_basis": spec.basis.n_basis, "omega": spec.basis.omega},
        "levels": [{"n": n, "energy": e} for n, e in enumerate(spec.levels)],
        "solver": {"tol": spec.solver_tol, "sweeps": spec.sweeps},
    }
    title = (
        f"k={_g6(args.k)} lambda={_g6(args.lam)} N={args.n_basis} omega={_g6(args.omega)}"
    )
    return _level_output(args.format, payload, title, spec.levels)


def cmd_wkb(args) -> str:
    levels = [lv.energy for lv in wkb_table(args.levels, args.lam)]
    payload = {
        "params": {"lambda": args.lam},
        "coefficient": wkb_constants().coefficient,
        "levels": [{"n": n, "energy": e} for n, e in enumerate(levels)],
    }
    return _level_output(args.format, payload, f"WKB lambda={_g6(args.lam)}", levels)


def cmd_scan_omega(args) -> str:
    params = _params(args)
    omega, e0 = optimize_omega(params, args.n_basis, args.lo, args.hi, args.tol)
    if args.format == "json":
        return _dumps({
            "params": _params_dict(params),
            "n_basis": args.n_basis,
            "search": {"lo": args.lo, "hi": args.hi, "tol": args.tol},
            "omega_star": omega,
            "e0": e0,
        })
    if args.format == "csv":
        return _csv(["omega_star", "e0"], [(repr(omega), repr(e0))])
    return f"N={args.n_basis}  omega*={_g6(omega)}  E0={_g6(e0)}\n"


def cmd_converge(args) -> str:
    report = convergence_study(_params(args), args.omega, args.sizes)
    deltas = (None,) + report.deltas
    if args.format == "json":
        return _dumps({
            "params": {"k": args.k, "lambda": args.lam},
            "omega": report.omega,
            "sizes": list(report.sizes),
            "ground_energies": list(report.ground_energies),
            "deltas": list(report.deltas),
            "threshold": report.threshold,
            "converged": report.converged,
        })
    if args.format == "csv":
        rows = [
            (n, repr(e), "" if d is None else repr(d))
            for n, e, d in zip(report.sizes, report.ground_energies, deltas)
        ]
        return _csv(["n_basis", "e0", "delta"], rows)
    lines = [f"omega={_g6(report.omega)}", f"{'N':>5}  {'E0':>14}  {'delta':>10}"]
    for n, e, d in zip(report.sizes, report.ground_energies, deltas):
        step = "" if d is None else f"{d:.3e}"
        lines.append(f"{n:>5}  {e:>14.10f}  {step:>10}")
    lines.append(f"converged: {'yes' if report.converged else 'no'} (threshold {report.threshold:g})")
    return "\n".join(lines) + "\n"


def cmd_oracle(args) -> str:
    params = _params(args)
    half_width = args.half_width if args.half_width is not None else default_half_width(params, args.levels)
    grid = GridSpec(half_width, args.points)
    method = richardson_pair if args.richardson else fd_spectrum
    levels = method(params, grid, args.levels)
    payload = {
        "params": _params_dict(params),
        "grid": {"half_width": grid.half_width, "points": grid.points},
        "method": "richardson" if args.richardson else "finite-difference",
        "levels": [{"n": n, "energy": e} for n, e in enumerate(levels)],
    }
    title = f"finite differences L={_g6(grid.half_width)} M={grid.points}"
    return _level_output(args.format, payload, title, levels)


def cmd_plot(args) -> str:
    params = _params(args)
    spectrum = compute_spectrum(params, BasisSpec(args.n_basis, args.omega), args.levels)
    sets = [LevelSet("computed", "computed", spectrum.levels, args.computed_color)]
    if args.wkb:
        if params.k != 0:
            raise QuarticError("WKB levels are only available for the pure quartic (k = 0)")
        wkb = tuple(lv.energy for lv in wkb_table(args.levels, params.lam))
        sets.append(LevelSet("WKB", "wkb", wkb, args.wkb_color))
    return render_levels_svg(
        PlotSpec(tuple(sets), params, width=args.width, height=args.height, full_width=args.full_width)
    )


def _add_physics(p, omega=True):
    p.add_argument("--k", type=float, default=0.0, help="quadratic stiffness [0]")
    p.add_argument("--lambda", dest="lam", type=float, default=1.0, help="quartic coupling [1]")
    if omega:
        p.add_argument("--omega", type=float, default=2.16, help="ladder frequency [2.16]")


def _add_output(p):
    p.add_argument("--format", choices=("json", "csv", "table"), default="table")
    p.add_argument("--output", help="write to this file instead of standard output")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="quartic", description="Quartic oscillator spectra.")
    parser.add_argument("--version", action="version", version=f"%(prog)s {__version__}")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("spectrum", help="truncated ladder-basis eigenvalues")
    p.add_argument("--n-basis", type=int, default=10)
    _add_physics(p)
    p.add_argument("--levels", type=int, default=10)
    p.add_argument("--tol", type=float, default=1e-12, help="Jacobi relative tolerance")
    _add_output(p)
    p.set_defaults(func=cmd_spectrum)

    p = sub.add_parser("wkb", help="semiclassical energies of the pure quartic")
    p.add_argument("--levels", type=int, default=10)
    p.add_argument("--lambda", dest="lam", type=float, default=1.0)
    _add_output(p)
    p.set_defaults(func=cmd_wkb)

    p = sub.add_parser("scan-omega", help="ladder frequency minimizing the ground state")
    p.add_argument("--n-basis", type=int, default=10)
    _add_physics(p, omega=False)
    p.add_argument("--lo", type=float, default=0.5)
    p.add_argument("--hi", type=float, default=6.0)
    p.add_argument("--tol", type=float, default=1e-4)
    _add_output(p)
    p.set_defaults(func=cmd_scan_omega)

    p = sub.add_parser("converge", help="ground state against basis size")
    _add_physics(p)
    p.add_argument("--sizes", type=_size_list, default=[10, 20, 40, 80])
    _add_output(p)
    p.set_defaults(func=cmd_converge)

    p = sub.add_parser("oracle", help="finite-difference reference spectrum")
    _add_physics(p, omega=False)
    p.add_argument("--half-width", type=float, default=None, help="box half-width [from highest level]")
    p.add_argument("--points", type=int, default=2000)
    p.add_argument("--levels", type=int, default=10)
    p.add_argument("--richardson", action="store_true", help="extrapolate from spacings h and h/2")
    _add_output(p)
    p.set_defaults(func=cmd_oracle)

    p = sub.add_parser("plot", help="SVG of V(x) with the computed levels")
    p.add_argument("--levels", type=int, default=10)
    p.add_argument("--n-basis", type=int, default=10)
    _add_physics(p)
    p.add_argument("--wkb", action="store_true", help="overlay WKB levels")
    p.add_argument("--full-width", action="store_true", help="draw levels across the whole x range")
    p.add_argument("--output", default="figure.svg")
    p.add_argument("--width", type=int, default=800)
    p.add_argument("--height", type=int, default=1000)
    p.add_argument("--computed-color", default=None)
    p.add_argument("--wkb-color", default=None)
    p.set_defaults(func=cmd_plot, format=None)
    return parser


def run(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return exc.code if isinstance(exc.code, int) else 2
    try:
        text = args.func(args)
    except QuarticError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1
    if args.output and args.output != "-":
        try:
            with open(args.output, "w", encoding="utf-8", newline="\n") as fh:
                fh.write(text)
        except OSError as exc:
            print(f"error: cannot write {args.output}: {exc}", file=sys.stderr)
            return 1
    else:
        sys.stdout.write(text)
    return 0


def main() -> None:
    sys.exit(run())
