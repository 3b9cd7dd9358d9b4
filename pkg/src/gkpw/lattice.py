"""Exact Wigner representation of ideal GKP qubit states.

For an infinitely squeezed GKP qubit the Wigner function is a lattice of
delta peaks at (q, p) = (l, m) * sqrt(pi)/2 whose weights depend only on
the residues (l mod 4, m mod 4) and on the Bloch angles of the encoded
state.  This module evaluates those weights in closed form, the per-cell
negativity measures derived from them, and the action of the symplectic
Clifford maps on the weight field.
"""

import math
from dataclasses import dataclass

import numpy as np

from .bloch import BlochAngles

SQRT_PI = math.sqrt(math.pi)
SITE_STEP = SQRT_PI / 2.0  # lattice spacing in q and p
CELL_SIDE = 2.0 * SQRT_PI  # unit cell holds a 4x4 block of sites
PEAK_WEIGHT = 1.0 / (4.0 * SQRT_PI)  # the state-independent even-even weight

FOURIER = "FOURIER"
SHEAR = "SHEAR"

# Symplectic matrices of the two maps, acting on column vectors (q, p):
# FOURIER sends (q, p) -> (p, -q), SHEAR sends (q, p) -> (q, p - q).
FOURIER_MATRIX = ((0, 1), (-1, 0))
SHEAR_MATRIX = ((1, 0), (-1, 1))

FIELD_TOLERANCE = 1e-12


def _residue_weight(lr: int, mr: int, cos_t: float, st_cos_p: float, st_sin_p: float) -> float:
    """Weight for residues (lr, mr) in {0..3}^2, without the 1/(4 sqrt(pi)) factor."""
    if lr % 2 == 0 and mr % 2 == 0:
        return 1.0
    if mr % 2 == 1 and lr == 0:
        return cos_t
    if mr % 2 == 1 and lr == 2:
        return -cos_t
    # below: lr odd
    if mr == 0:
        return st_cos_p
    if mr == 2:
        return -st_cos_p
    if lr == mr:  # (1,1) and (3,3)
        return -st_sin_p
    return st_sin_p  # (1,3) and (3,1)


def coeff_at(l: int, m: int, state: BlochAngles) -> float:
    """Delta-peak weight at lattice site (q, p) = (l, m) * sqrt(pi)/2."""
    cos_t = math.cos(state.theta)
    sin_t = math.sin(state.theta)
    return PEAK_WEIGHT * _residue_weight(
        l % 4, m % 4, cos_t, sin_t * math.cos(state.phi), sin_t * math.sin(state.phi)
    )


@dataclass(frozen=True, eq=False)
class LatticeCoefficients:
    """Periodic 4x4 weight field; entry [l, m] is the weight at residues (l, m)."""

    values: np.ndarray
    source: BlochAngles | None = None

    def __post_init__(self):
        values = np.asarray(self.values, dtype=float)
        if values.shape != (4, 4):
            raise ValueError("coefficient field must be 4x4")
        values = values.copy()
        values.setflags(write=False)
        object.__setattr__(self, "values", values)

    def at(self, l: int, m: int) -> float:
        return float(self.values[l % 4, m % 4])


def cell_coefficients(state: BlochAngles) -> LatticeCoefficients:
    """All 16 weights of the unit cell q, p in [0, 2*sqrt(pi))."""
    cos_t = math.cos(state.theta)
    sin_t = math.sin(state.theta)
    st_cos_p = sin_t * math.cos(state.phi)
    st_sin_p = sin_t * math.sin(state.phi)
    values = np.empty((4, 4))
    for l in range(4):
        for m in range(4):
            values[l, m] = _residue_weight(l, m, cos_t, st_cos_p, st_sin_p)
    return LatticeCoefficients(PEAK_WEIGHT * values, source=state)


def cell_signed_integral(state: BlochAngles) -> float:
    """Integral of the cell Wigner function = plain sum of the 16 weights.

    The angle-dependent weight categories cancel pairwise, so this is the
    state-independent constant 1/sqrt(pi).
    """
    return float(cell_coefficients(state).values.sum())


def sqrtpi_abs_integral(state: BlochAngles) -> float:
    """sqrt(pi) * integral of |W_cell|, in closed form.

    Equals 1 + |cos(theta)| + |sin(theta) cos(phi)| + |sin(theta) sin(phi)|,
    which ranges over [2, 1 + sqrt(3)].
    """
    cos_t = math.cos(state.theta)
    sin_t = math.sin(state.theta)
    return (
        1.0
        + abs(cos_t)
        + abs(sin_t * math.cos(state.phi))
        + abs(sin_t * math.sin(state.phi))
    )


def cell_abs_integral(state: BlochAngles) -> float:
    """Integral of |W_cell| over the unit cell (closed form)."""
    return sqrtpi_abs_integral(state) / SQRT_PI


def wln_cell(state: BlochAngles) -> float:
    """Wigner logarithmic negativity per unit cell, in bits."""
    return math.log2(cell_abs_integral(state))


@dataclass(frozen=True)
class CellNegativityReport:
    signed_integral: float
    abs_integral: float
    wln: float
    sqrtpi_abs_integral: float


def cell_report(state: BlochAngles) -> CellNegativityReport:
    """Bundle the per-cell negativity measures for one state."""
    abs_integral = cell_abs_integral(state)
    return CellNegativityReport(
        signed_integral=cell_signed_integral(state),
        abs_integral=abs_integral,
        wln=math.log2(abs_integral),
        sqrtpi_abs_integral=sqrtpi_abs_integral(state),
    )


def apply_symplectic_lattice(coeffs: LatticeCoefficients, map_name: str) -> LatticeCoefficients:
    """Coefficient field of the Wigner function transformed by FOURIER or SHEAR.

    The new field is the pullback W o S^{-1}, so that FOURIER on the lattice
    matches HADAMARD on the Bloch angles and SHEAR matches PHASE_PI_2
    (verified entrywise by the commuting-square tests).  Both maps permute
    lattice sites, hence act as index remappings of the 4x4 residue table:

        FOURIER: new[l, m] = old[-m mod 4, l]
        SHEAR:   new[l, m] = old[l, (m + l) mod 4]
    """
    old = coeffs.values
    for l, m in ((0, 0), (0, 2), (2, 0), (2, 2)):
        if abs(old[l, m] - PEAK_WEIGHT) > FIELD_TOLERANCE:
            raise ValueError("corrupted field: even-even weights must equal 1/(4 sqrt(pi))")
    new = np.empty((4, 4))
    if map_name == FOURIER:
        for l in range(4):
            for m in range(4):
                new[l, m] = old[(-m) % 4, l]
    elif map_name == SHEAR:
        for l in range(4):
            for m in range(4):
                new[l, m] = old[l, (m + l) % 4]
    else:
        raise ValueError(f"unknown symplectic map {map_name!r}")
    return LatticeCoefficients(new)
