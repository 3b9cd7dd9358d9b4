"""Acceptance suite: each test prints one PASS line when its criterion holds.

Run with ``pytest tests/test_acceptance.py -v -s`` to see the per-criterion
lines and timings.
"""

import itertools
import math
import time

import numpy as np
import pytest

from gkpw import cli
from gkpw.analysis import SweepSpec, find_extrema, sweep
from gkpw.bloch import (
    BlochAngles,
    CATALOG,
    HADAMARD,
    PHASE_PI_2,
    STABILIZER_LABELS,
    apply_gate_bloch,
)
from gkpw.lattice import (
    FOURIER,
    PEAK_WEIGHT,
    SHEAR,
    SITE_STEP,
    apply_symplectic_lattice,
    cell_abs_integral,
    cell_coefficients,
    sqrtpi_abs_integral,
)
from gkpw.squeezed import (
    GridSpec,
    SqueezedGkpParams,
    envelope_grid_spec,
    negativity_ratio_cell,
    squeezed_state,
    wavefunction_eval,
    wigner_grid,
    wigner_point,
)

SQRT_PI = math.sqrt(math.pi)
T_THETA = math.acos(1.0 / math.sqrt(3.0))


def _report(name, detail=""):
    print(f"PASS {name}" + (f" ({detail})" if detail else ""))


def test_table1_analytic():
    t0 = time.perf_counter()
    expected = {
        "ZERO": 2.0,
        "PLUS": 2.0,
        "PLUS_I": 2.0,
        "H_MAGIC": 1.0 + math.sqrt(2.0),
        "T_MAGIC": 1.0 + math.sqrt(3.0),
    }
    worst = 0.0
    for label, value in expected.items():
        got = sqrtpi_abs_integral(CATALOG[label])
        worst = max(worst, abs(got - value))
        assert abs(got - value) < 1e-12, (label, got, value)
    elapsed = time.perf_counter() - t0
    assert elapsed < 1.0
    _report("table1-analytic", f"max err {worst:.2e}, {elapsed:.3f}s")


def test_closed_form_matches_site_sum():
    t0 = time.perf_counter()
    rng = np.random.default_rng(101)
    thetas = rng.uniform(0.0, math.pi, 10_000)
    phis = rng.uniform(0.0, 2.0 * math.pi, 10_000)
    worst = 0.0
    for theta, phi in zip(thetas, phis):
        state = BlochAngles(theta, phi)
        site_sum = float(np.abs(cell_coefficients(state).values).sum())
        worst = max(worst, abs(site_sum - cell_abs_integral(state)))
    assert worst < 1e-12
    elapsed = time.perf_counter() - t0
    assert elapsed < 1.0
    _report("closed-form-equivalence", f"max err {worst:.2e}, {elapsed:.3f}s")


def _near_any(points, theta, phi, step_t, step_p):
    for t0, p0 in points:
        dphi = min(abs(phi - p0), 2 * math.pi - abs(phi - p0))
        polar = min(theta, math.pi - theta) <= step_t + 1e-12 and min(
            t0, math.pi - t0
        ) <= step_t + 1e-12
        if abs(theta - t0) <= step_t + 1e-12 and (dphi <= step_p + 1e-12 or polar):
            return True
    return False


def test_bound_and_saturation_sweep():
    t0 = time.perf_counter()
    spec = SweepSpec(181, 360)
    surface = sweep(spec)
    values = surface.values
    thetas = spec.thetas()
    phis = spec.phis()
    step_t = math.pi / 180
    step_p = 2 * math.pi / 360

    assert values.min() >= 2.0 - 1e-12
    assert values.max() <= 1.0 + math.sqrt(3.0) + 1e-12

    stabilizer = [(0.0, 0.0), (math.pi, 0.0)] + [
        (math.pi / 2, k * math.pi / 2) for k in range(4)
    ]
    for i, j in np.argwhere(values <= 2.0 + 1e-9):
        assert _near_any(stabilizer, thetas[i], phis[j], step_t, step_p)

    t_points = [
        (t, math.pi / 4 + k * math.pi / 2)
        for t in (T_THETA, math.pi - T_THETA)
        for k in range(4)
    ]
    vmax = values.max()
    assert abs(vmax - (1.0 + math.sqrt(3.0))) < 1e-4  # grid discretization
    for i, j in np.argwhere(values >= vmax - 1e-9):
        assert _near_any(t_points, thetas[i], phis[j], step_t, step_p)

    i_eq = int(np.argmin(np.abs(thetas - math.pi / 2)))
    eq = values[i_eq]
    assert abs(eq.max() - (1.0 + math.sqrt(2.0))) < 1e-12
    h_cols = {j for j in range(360) if eq[j] >= eq.max() - 1e-9}
    assert h_cols == {45, 135, 225, 315}

    report = find_extrema(surface)
    assert len(report.minima) == 6
    assert len(report.maxima) == 8
    assert len(report.equatorial_maxima) == 4

    elapsed = time.perf_counter() - t0
    assert elapsed < 5.0
    _report(
        "bound-and-saturation",
        f"min {values.min():.12f}, max {vmax:.12f}, {elapsed:.3f}s",
    )


def test_commuting_square():
    rng = np.random.default_rng(102)
    states = [CATALOG[label] for label in CATALOG] + [
        BlochAngles(rng.uniform(0, math.pi), rng.uniform(0, 2 * math.pi))
        for _ in range(100)
    ]
    worst = 0.0
    for state in states:
        for gate, sym in ((HADAMARD, FOURIER), (PHASE_PI_2, SHEAR)):
            bloch_route = cell_coefficients(apply_gate_bloch(state, gate)).values
            lattice_route = apply_symplectic_lattice(cell_coefficients(state), sym).values
            worst = max(worst, float(np.abs(bloch_route - lattice_route).max()))
    assert worst < 1e-12
    _report("commuting-square", f"max entry err {worst:.2e}")


def _field_key(field):
    return tuple(np.round(field.values / PEAK_WEIGHT, 12).ravel())


def test_clifford_closure():
    start = cell_coefficients(CATALOG["ZERO"])
    orbit = {_field_key(start)}
    for length in range(1, 7):
        for word in itertools.product((FOURIER, SHEAR), repeat=length):
            field = start
            for sym in word:
                field = apply_symplectic_lattice(field, sym)
            orbit.add(_field_key(field))
    stabilizer = {_field_key(cell_coefficients(CATALOG[l])) for l in STABILIZER_LABELS}
    assert orbit == stabilizer
    for label in ("H_MAGIC", "T_MAGIC"):
        assert _field_key(cell_coefficients(CATALOG[label])) not in orbit
    _report("clifford-closure", f"orbit size {len(orbit)}")


def _oracle_wigner(state, q, p, n=60001):
    sigma = state.params.sigma
    half = 2.0 * (np.abs(state.peak_centers).max() + 8 * sigma)
    x = np.linspace(-half, half, n)
    integrand = (
        np.conj(wavefunction_eval(state, q + x / 2))
        * wavefunction_eval(state, q - x / 2)
        * np.exp(-1j * p * x)
    )
    return float(np.trapezoid(integrand, x).real) / (2 * math.pi)


def test_oracle_equivalence():
    t0 = time.perf_counter()
    rng = np.random.default_rng(103)
    worst = 0.0
    for _ in range(5):
        sigma = float(rng.uniform(0.2, 0.3))
        angles = BlochAngles(rng.uniform(0, math.pi), rng.uniform(0, 2 * math.pi))
        state = squeezed_state(angles, SqueezedGkpParams(sigma, sigma))
        for _ in range(50):
            q, p = rng.uniform(-2 * SQRT_PI, 2 * SQRT_PI, size=2)
            err = abs(wigner_point(state, q, p) - _oracle_wigner(state, q, p))
            worst = max(worst, err)
    assert worst < 1e-8
    elapsed = time.perf_counter() - t0
    assert elapsed < 30.0
    _report("oracle-equivalence", f"max err {worst:.2e}, {elapsed:.1f}s")


def test_finite_squeezing_convergence():
    t0 = time.perf_counter()
    ideal = {
        "ZERO": 2.0,
        "H_MAGIC": 1.0 + math.sqrt(2.0),
        "T_MAGIC": 1.0 + math.sqrt(3.0),
    }
    sigmas = (0.3, 0.2, 0.1)
    details = []
    for label, target in ideal.items():
        errors = []
        for sigma in sigmas:
            state = squeezed_state(CATALOG[label], SqueezedGkpParams(sigma, sigma))
            ratio = negativity_ratio_cell(state)
            errors.append(abs(ratio - target))
        assert errors[0] > errors[1] > errors[2], (label, errors)
        assert errors[2] < 0.05 * target, (label, errors[2], target)
        details.append(f"{label} {errors[2] / target:.3%}")
    elapsed = time.perf_counter() - t0
    assert elapsed < 120.0
    _report("squeezing-convergence", ", ".join(details) + f", {elapsed:.1f}s")


def test_sign_pattern_at_sigma_02():
    params = SqueezedGkpParams(0.2, 0.2)
    labels = list(STABILIZER_LABELS) + ["H_MAGIC", "T_MAGIC"]
    checked = 0
    for label in labels:
        state = squeezed_state(CATALOG[label], params)
        weights = cell_coefficients(CATALOG[label]).values
        for l in range(4):
            for m in range(4):
                if abs(weights[l, m]) > 1e-3:
                    value = wigner_point(state, l * SITE_STEP, m * SITE_STEP)
                    assert np.sign(value) == np.sign(weights[l, m]), (label, l, m)
                    checked += 1
    _report("sign-pattern", f"{checked} peaks across {len(labels)} states")


def test_normalization_and_bound():
    worst_norm = 0.0
    worst_max = 0.0
    for label, sigma in (("ZERO", 0.2), ("H_MAGIC", 0.25), ("T_MAGIC", 0.3)):
        params = SqueezedGkpParams(sigma, sigma)
        state = squeezed_state(CATALOG[label], params)
        grid = wigner_grid(state, envelope_grid_spec(params))
        worst_norm = max(worst_norm, abs(grid.integral() - 1.0))
        worst_max = max(worst_max, grid.max_abs())
        assert abs(grid.integral() - 1.0) < 1e-4, (label, grid.integral())
        assert grid.max_abs() <= 1.0 / math.pi + 1e-9, (label, grid.max_abs())
    _report(
        "normalization-and-bound",
        f"max |int-1| {worst_norm:.2e}, max|W| <= 1/pi + {worst_max - 1 / math.pi:.1e}",
    )


def test_cli_determinism(tmp_path):
    def render(tag):
        base = tmp_path / tag
        assert cli.main([
            "wigner-grid", "--state", "T_MAGIC", "--sigma", "0.25", "--kappa", "0.25",
            "--grid", "121x121", "--range=-12:12", "--out", str(base / "wg"),
        ]) == 0 if (base.mkdir() or True) else False
        assert cli.main(["sweep", "--grid", "61x120", "--out", str(base / "sw")]) == 0
        assert cli.main(["coeffs", "--state", "T", "--out", str(base / "c")]) == 0
        return {
            name: (base / name).read_bytes()
            for name in (
                "wg.csv", "wg.pgm", "wg.json",
                "sw.csv", "sw.extrema.json",
                "c.csv", "c.json",
            )
        }

    first = render("run1")
    second = render("run2")
    assert first == second
    total = sum(len(v) for v in first.values())
    _report("cli-determinism", f"{len(first)} artifacts, {total} bytes byte-identical")
