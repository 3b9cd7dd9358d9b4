"""Command-line front end: gkpw <coeffs|cell|wigner-grid|sweep|table1|gate> [flags].

Outputs are deterministic: a fixed invocation always produces byte-identical
CSV/JSON/PGM files.  Exit codes: 0 success, 2 argument error, 3 numeric-domain
error.  The env var GKPW_THREADS caps grid-evaluation parallelism (default:
hardware parallelism).
"""

import argparse
import math
import os
import sys

from . import analysis, bloch, io, lattice, squeezed


def _threads() -> int:
    raw = os.environ.get("GKPW_THREADS", "")
    if raw.strip():
        try:
            return max(1, int(raw))
        except ValueError:
            pass
    return os.cpu_count() or 1


def _add_state_args(parser: argparse.ArgumentParser) -> None:
    parser.add_argument("--state", help="catalog state label (e.g. ZERO, PLUS, H_MAGIC, T)")
    parser.add_argument("--theta", type=float, help="polar Bloch angle in radians")
    parser.add_argument("--phi", type=float, default=0.0, help="azimuthal Bloch angle in radians")


def _state_from_args(parser, args) -> bloch.BlochAngles:
    if args.state is not None and args.theta is not None:
        parser.error("--state and --theta/--phi are mutually exclusive")
    if args.state is not None:
        try:
            return bloch.named_state(args.state).angles
        except ValueError as exc:
            parser.error(str(exc))
    if args.theta is None:
        parser.error("one of --state or --theta is required")
    return bloch.BlochAngles(args.theta, args.phi)


def _parse_grid(parser, text: str) -> tuple[int, int]:
    try:
        a, b = text.lower().split("x")
        n1, n2 = int(a), int(b)
    except ValueError:
        parser.error(f"--grid expects NxM, got {text!r}")
    if n1 < 2 or n2 < 2:
        parser.error("--grid counts must be at least 2")
    return n1, n2


def _parse_range(parser, text: str) -> tuple[float, float]:
    try:
        a, b = text.split(":")
        lo, hi = float(a), float(b)
    except ValueError:
        parser.error(f"--range expects A:B, got {text!r}")
    if not hi > lo:
        parser.error("--range must satisfy A < B")
    return lo, hi


def _report_json(state: bloch.BlochAngles) -> dict:
    report = lattice.cell_report(state)
    return {
        "theta": state.theta,
        "phi": state.phi,
        "signed_integral": report.signed_integral,
        "abs_integral": report.abs_integral,
        "wln": report.wln,
        "sqrtpi_abs_integral": report.sqrtpi_abs_integral,
    }


def _coeff_rows(state: bloch.BlochAngles):
    values = lattice.cell_coefficients(state).values
    return [(l, m, float(values[l, m])) for l in range(4) for m in range(4)]


def _emit(args, payload: bytes) -> None:
    sys.stdout.write(payload.decode("utf-8"))


def cmd_coeffs(parser, args) -> int:
    state = _state_from_args(parser, args)
    csv = io.render_csv(("l", "m", "w"), _coeff_rows(state))
    summary = io.render_json(_report_json(state))
    if args.out:
        with open(args.out + ".csv", "wb") as f:
            f.write(csv)
        with open(args.out + ".json", "wb") as f:
            f.write(summary)
    else:
        _emit(args, csv if args.format == "csv" else summary)
    return 0


def cmd_cell(parser, args) -> int:
    state = _state_from_args(parser, args)
    summary = io.render_json(_report_json(state))
    if args.out:
        with open(args.out + ".json", "wb") as f:
            f.write(summary)
    else:
        _emit(args, summary)
    return 0


def cmd_wigner_grid(parser, args) -> int:
    state = _state_from_args(parser, args)
    try:
        params = squeezed.SqueezedGkpParams(args.sigma, args.kappa)
    except ValueError as exc:
        parser.error(str(exc))
    n_q, n_p = _parse_grid(parser, args.grid)
    if args.range:
        lo, hi = _parse_range(parser, args.range)
    else:
        lo = -(lattice.CELL_SIDE + 3.0 * params.sigma)
        hi = -lo
    spec = squeezed.GridSpec(lo, hi, n_q, lo, hi, n_p)
    st = squeezed.squeezed_state(state, params)
    grid = squeezed.wigner_grid(st, spec, threads=_threads())

    sidecar = {
        "theta": state.theta,
        "phi": state.phi,
        "sigma": params.sigma,
        "kappa": params.kappa,
        "s_max": params.s_max,
        "q_min": grid.q_min,
        "p_min": grid.p_min,
        "dq": grid.dq,
        "dp": grid.dp,
        "n_q": n_q,
        "n_p": n_p,
        "integral": grid.integral(),
        "abs_integral": grid.abs_integral(),
        "max_abs": grid.max_abs(),
    }
    if args.out:
        q = grid.q_axis()
        p = grid.p_axis()
        rows = (
            (float(q[i]), float(p[j]), float(grid.values[i, j]))
            for i in range(n_q)
            for j in range(n_p)
        )
        io.write_csv(args.out + ".csv", ("q", "p", "W"), rows)
        io.write_pgm(args.out + ".pgm", grid.values)
        io.write_json(args.out + ".json", sidecar)
    else:
        _emit(args, io.render_json(sidecar))
    return 0


def _extrema_json(report: analysis.ExtremaReport) -> dict:
    return {
        "minima": [list(row) for row in report.minima],
        "maxima": [list(row) for row in report.maxima],
        "equatorial_maxima": [list(row) for row in report.equatorial_maxima],
    }


def cmd_sweep(parser, args) -> int:
    n_theta, n_phi = _parse_grid(parser, args.grid)
    spec = analysis.SweepSpec(n_theta, n_phi, args.measure)
    surface = analysis.sweep(spec)
    report = analysis.find_extrema(surface)
    extrema = io.render_json(_extrema_json(report))
    if args.out:
        thetas = spec.thetas()
        phis = spec.phis()
        rows = (
            (float(thetas[i]), float(phis[j]), float(surface.values[i, j]))
            for i in range(n_theta)
            for j in range(n_phi)
        )
        io.write_csv(args.out + ".csv", ("theta", "phi", "value"), rows)
        with open(args.out + ".extrema.json", "wb") as f:
            f.write(extrema)
        if args.format == "pgm":
            io.write_pgm(args.out + ".pgm", surface.values)
    if args.equator:
        _emit(args, io.render_json([list(row) for row in report.equatorial_maxima]))
    elif not args.out:
        _emit(args, extrema)
    return 0


def cmd_table1(parser, args) -> int:
    rows = analysis.table1_report()
    if args.out:
        io.write_csv(args.out + ".csv", ("label", "theta", "phi", "sqrtpi_abs_integral"), rows)
        io.write_json(
            args.out + ".json",
            [
                {"label": label, "theta": th, "phi": ph, "sqrtpi_abs_integral": v}
                for label, th, ph, v in rows
            ],
        )
    else:
        for label, th, ph, v in rows:
            sys.stdout.write(f"{label:8s} theta={th:.6f} phi={ph:.6f} sqrtpi_abs={v:.6f}\n")
    return 0


def cmd_gate(parser, args) -> int:
    state = _state_from_args(parser, args)
    word = args.word.upper()
    gates = {"F": (bloch.HADAMARD, lattice.FOURIER), "P": (bloch.PHASE_PI_2, lattice.SHEAR)}
    if not word or any(ch not in gates for ch in word):
        parser.error(f"--word must be a non-empty string over F and P, got {args.word!r}")

    angles = state
    field = lattice.cell_coefficients(state)
    square_ok = True
    for ch in word:
        gate, sym = gates[ch]
        angles = bloch.apply_gate_bloch(angles, gate)
        field = lattice.apply_symplectic_lattice(field, sym)
        delta = abs(lattice.cell_coefficients(angles).values - field.values).max()
        if delta > lattice.FIELD_TOLERANCE:
            square_ok = False

    result = {
        "word": word,
        "theta": angles.theta,
        "phi": angles.phi,
        "square_ok": bool(square_ok),
        "coefficients": [[l, m, float(field.values[l, m])] for l in range(4) for m in range(4)],
    }
    payload = io.render_json(result)
    if args.out:
        with open(args.out + ".json", "wb") as f:
            f.write(payload)
    else:
        _emit(args, payload)
    return 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="gkpw", description=__doc__)
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("coeffs", help="4x4 cell coefficient table plus cell report")
    _add_state_args(p)
    p.add_argument("--out", help="output base path (writes BASE.csv and BASE.json)")
    p.add_argument("--format", choices=("csv", "json"), default="json")
    p.set_defaults(run=cmd_coeffs)

    p = sub.add_parser("cell", help="cell negativity report as JSON")
    _add_state_args(p)
    p.add_argument("--out", help="output base path (writes BASE.json)")
    p.set_defaults(run=cmd_cell)

    p = sub.add_parser("wigner-grid", help="sampled Wigner function of a squeezed state")
    _add_state_args(p)
    p.add_argument("--sigma", type=float, default=0.2, help="peak width")
    p.add_argument("--kappa", type=float, default=0.2, help="inverse envelope width")
    p.add_argument("--grid", default="241x241", help="samples as NQxNP")
    p.add_argument("--range", help="axis range A:B for both q and p")
    p.add_argument("--out", help="output base path (writes BASE.csv, BASE.pgm, BASE.json)")
    p.set_defaults(run=cmd_wigner_grid)

    p = sub.add_parser("sweep", help="Bloch-sphere sweep of the cell negativity measure")
    p.add_argument("--grid", default="181x360", help="samples as NTHETAxNPHI")
    p.add_argument(
        "--measure",
        choices=(analysis.SQRTPI_ABS_CELL, analysis.WLN_CELL),
        default=analysis.SQRTPI_ABS_CELL,
    )
    p.add_argument("--out", help="output base path (writes BASE.csv, BASE.extrema.json)")
    p.add_argument("--format", choices=("csv", "pgm"), default="csv", help="pgm adds a heatmap")
    p.add_argument("--equator", action="store_true", help="print only the equatorial maxima")
    p.set_defaults(run=cmd_sweep)

    p = sub.add_parser("table1", help="reference per-cell negativity table")
    p.add_argument("--out", help="output base path (writes BASE.csv and BASE.json)")
    p.set_defaults(run=cmd_table1)

    p = sub.add_parser("gate", help="apply a Clifford word at Bloch and lattice level")
    _add_state_args(p)
    p.add_argument("--word", required=True, help="gate word over F (Fourier) and P (shear)")
    p.add_argument("--out", help="output base path (writes BASE.json)")
    p.set_defaults(run=cmd_gate)

    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.run(parser, args)
    except (squeezed.UndefinedCellRatioError, ArithmeticError) as exc:
        print(f"gkpw: numeric error: {exc}", file=sys.stderr)
        return 3
    except ValueError as exc:
        print(f"gkpw: invalid parameters: {exc}", file=sys.stderr)
        return 3
    except OSError as exc:
        print(f"gkpw: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
