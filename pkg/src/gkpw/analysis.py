"""Bloch-sphere sweeps of cell negativity, extremum detection, and reports."""

import math
from dataclasses import dataclass

import numpy as np

from .bloch import BlochAngles, CATALOG
from .lattice import SQRT_PI, sqrtpi_abs_integral
from .squeezed import SqueezedGkpParams, negativity_ratio_cell, squeezed_state

SQRTPI_ABS_CELL = "SQRTPI_ABS_CELL"
WLN_CELL = "WLN_CELL"
_MEASURES = (SQRTPI_ABS_CELL, WLN_CELL)

VALUE_TOLERANCE = 1e-9  # degeneracy tolerance for extremum clustering


@dataclass(frozen=True)
class SweepSpec:
    """Grid over theta in [0, pi] (inclusive) and phi in [0, 2pi) (periodic)."""

    n_theta: int
    n_phi: int
    measure: str = SQRTPI_ABS_CELL

    def __post_init__(self):
        if self.n_theta < 2 or self.n_phi < 4:
            raise ValueError("sweep needs n_theta >= 2 and n_phi >= 4")
        if self.measure not in _MEASURES:
            raise ValueError(f"unknown measure {self.measure!r}")

    def thetas(self) -> np.ndarray:
        return np.linspace(0.0, math.pi, self.n_theta)

    def phis(self) -> np.ndarray:
        return 2.0 * math.pi * np.arange(self.n_phi) / self.n_phi


@dataclass(frozen=True, eq=False)
class SweepSurface:
    spec: SweepSpec
    values: np.ndarray  # indexed [theta_index, phi_index]


def sweep(spec: SweepSpec) -> SweepSurface:
    """Evaluate the chosen closed-form cell measure on the angle grid."""
    th = spec.thetas()[:, None]
    ph = spec.phis()[None, :]
    sqrtpi_abs = (
        1.0 + np.abs(np.cos(th)) + np.sin(th) * (np.abs(np.cos(ph)) + np.abs(np.sin(ph)))
    )
    if spec.measure == SQRTPI_ABS_CELL:
        values = sqrtpi_abs
    else:
        values = np.log2(sqrtpi_abs / SQRT_PI)
    return SweepSurface(spec, values)


@dataclass(frozen=True)
class ExtremaReport:
    minima: list[tuple[float, float, float]]
    maxima: list[tuple[float, float, float]]
    equatorial_maxima: list[tuple[float, float]]


def _clusters(mask: np.ndarray) -> list[list[tuple[int, int]]]:
    """Connected components of a boolean grid, with wraparound along axis 1."""
    n_i, n_j = mask.shape
    seen = np.zeros_like(mask, dtype=bool)
    clusters = []
    for i0 in range(n_i):
        for j0 in range(n_j):
            if not mask[i0, j0] or seen[i0, j0]:
                continue
            stack = [(i0, j0)]
            seen[i0, j0] = True
            members = []
            while stack:
                i, j = stack.pop()
                members.append((i, j))
                for di, dj in ((1, 0), (-1, 0), (0, 1), (0, -1)):
                    ni, nj = i + di, (j + dj) % n_j
                    if 0 <= ni < n_i and mask[ni, nj] and not seen[ni, nj]:
                        seen[ni, nj] = True
                        stack.append((ni, nj))
            clusters.append(members)
    return clusters


def _representative(values, members, pick):
    # Extremal member; ties broken by grid order so pole rows report phi = 0.
    best = min(members, key=lambda ij: (pick * values[ij], ij))
    return best


def find_extrema(surface: SweepSurface) -> ExtremaReport:
    """Degenerate global extrema as clusters within VALUE_TOLERANCE of the optimum."""
    values = surface.values
    thetas = surface.spec.thetas()
    phis = surface.spec.phis()

    def collect(target_mask, pick):
        out = []
        for members in _clusters(target_mask):
            i, j = _representative(values, members, pick)
            out.append((float(thetas[i]), float(phis[j]), float(values[i, j])))
        return sorted(out)

    vmin, vmax = float(values.min()), float(values.max())
    minima = collect(np.abs(values - vmin) <= VALUE_TOLERANCE, pick=+1)
    maxima = collect(np.abs(values - vmax) <= VALUE_TOLERANCE, pick=-1)

    i_eq = int(np.argmin(np.abs(thetas - math.pi / 2.0)))
    row = values[i_eq]
    row_mask = (np.abs(row - row.max()) <= VALUE_TOLERANCE)[None, :]
    equatorial = []
    for members in _clusters(row_mask):
        _, j = _representative(row[None, :], members, pick=-1)
        equatorial.append((float(phis[j]), float(row[j])))
    return ExtremaReport(minima, maxima, sorted(equatorial))


TABLE1_LABELS = ("ZERO", "PLUS", "PLUS_I", "H_MAGIC", "T_MAGIC")


def table1_report() -> list[tuple[str, float, float, float]]:
    """Rows (label, theta, phi, sqrt(pi) * integral |W_cell|) for the five reference states."""
    rows = []
    for label in TABLE1_LABELS:
        angles = CATALOG[label]
        rows.append((label, angles.theta, angles.phi, sqrtpi_abs_integral(angles)))
    return rows


def convergence_study(
    state: BlochAngles, sigmas: list[float]
) -> list[tuple[float, float, float]]:
    """Cell negativity ratio vs the ideal value, for kappa = sigma over the given widths."""
    if any(b >= a for a, b in zip(sigmas, sigmas[1:])):
        raise ValueError("sigmas must be strictly decreasing")
    ideal = sqrtpi_abs_integral(state)
    rows = []
    for sigma in sigmas:
        squeezed = squeezed_state(state, SqueezedGkpParams(sigma, sigma))
        ratio = negativity_ratio_cell(squeezed)
        rows.append((sigma, ratio, abs(ratio - ideal)))
    return rows
