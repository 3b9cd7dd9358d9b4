"""Finitely squeezed GKP states: wavefunctions, Wigner grids, negativity numerics.

A finitely squeezed logical wavefunction is a comb of Gaussian peaks of
width sigma centred on the ideal comb positions, with amplitudes damped by
the Gaussian envelope exp(-2*pi*kappa^2*s^2).  Because every peak is a
Gaussian of the same width, the Wigner function of any superposition is an
exact double sum of pairwise Gaussian cross terms, which is what
`wigner_point` and `wigner_grid` evaluate.

Convention: the Wigner transform is taken with kernel exp(-i*p*x),

    W(q, p) = (1/2pi) Integral dx exp(-i p x) Psi*(q + x/2) Psi(q - x/2),

so that the sign pattern of the sampled peaks matches the ideal
coefficient lattice in `gkpw.lattice` (the two kernel orientations differ
by a reflection p -> -p).
"""

import math
from dataclasses import dataclass

import numpy as np

from .bloch import BlochAngles
from .lattice import CELL_SIDE, SQRT_PI

TAIL_WEIGHT_BOUND = 1e-12  # envelope weight allowed to be dropped by truncation
_PAIR_PRUNE = 1e-18  # relative cutoff on pairwise amplitude products

_trapz = np.trapezoid


class UndefinedCellRatioError(ArithmeticError):
    """Raised when the signed cell integral is too close to zero to divide by."""


@dataclass(frozen=True)
class SqueezedGkpParams:
    """Peak width sigma, inverse envelope width kappa, comb truncation s_max.

    If s_max is omitted it is chosen so that every dropped envelope weight
    exp(-2*pi*kappa^2*s^2), |s| > s_max, is below 1e-12.
    """

    sigma: float
    kappa: float
    s_max: int | None = None

    def __post_init__(self):
        if not self.sigma > 0.0 or not self.kappa > 0.0:
            raise ValueError("sigma and kappa must be positive")
        if self.sigma >= SQRT_PI / 2.0:
            raise ValueError("sigma must be below sqrt(pi)/2 or the comb peaks merge")
        if self.s_max is None:
            s = 0
            while math.exp(-2.0 * math.pi * self.kappa**2 * (s + 1) ** 2) >= TAIL_WEIGHT_BOUND:
                s += 1
            object.__setattr__(self, "s_max", s)
        elif self.s_max < 0:
            raise ValueError("s_max must be non-negative")


def _comb(params: SqueezedGkpParams, logical: int) -> tuple[np.ndarray, np.ndarray]:
    """Peak centres and (unnormalized) envelope weights of logical |0bar> or |1bar>."""
    s = np.arange(-params.s_max, params.s_max + 1)
    centers = SQRT_PI * (2 * s + logical)
    weights = np.exp(-2.0 * math.pi * params.kappa**2 * s.astype(float) ** 2)
    return centers, weights


def _eval_gaussians(q, centers: np.ndarray, amps: np.ndarray, sigma: float):
    """Sum of amps[k] * exp(-(q - centers[k])^2 / (2 sigma^2)), chunked over q."""
    q = np.asarray(q, dtype=float)
    flat = q.reshape(-1)
    out = np.zeros(flat.shape, dtype=complex if np.iscomplexobj(amps) else float)
    block = max(1, 4_000_000 // max(len(centers), 1))
    for i in range(0, len(flat), block):
        d = flat[i : i + block, None] - centers[None, :]
        out[i : i + block] = np.exp(-(d * d) / (2.0 * sigma**2)) @ amps
    return out.reshape(q.shape) if q.shape else out[0]


def _quadrature_axis(params: SqueezedGkpParams, samples_per_sigma: int = 20) -> np.ndarray:
    """Grid covering the truncated comb support, fine enough for trapezoid quadrature."""
    half = SQRT_PI * (2 * params.s_max + 1) + 10.0 * params.sigma
    n = max(int(math.ceil(2.0 * half / (params.sigma / samples_per_sigma))) + 1, 20001)
    return np.linspace(-half, half, n)


def _logical_norm(params: SqueezedGkpParams, logical: int) -> float:
    """Trapezoidal L2 norm of the unnormalized logical comb."""
    centers, weights = _comb(params, logical)
    q = _quadrature_axis(params)
    psi = _eval_gaussians(q, centers, weights, params.sigma)
    return math.sqrt(float(_trapz(psi * psi, q)))


@dataclass(frozen=True, eq=False)
class SqueezedGkpState:
    """Normalized superposition c0 |0bar> + c1 |1bar>.

    peak_centers / peak_amps describe the state as a flat list of Gaussian
    peaks, with the overall normalization (including the small |0bar>-|1bar>
    overlap of the superposition) already folded into the amplitudes.
    """

    params: SqueezedGkpParams
    c0: complex
    c1: complex
    norm_0: float
    norm_1: float
    peak_centers: np.ndarray
    peak_amps: np.ndarray


def squeezed_state(angles: BlochAngles, params: SqueezedGkpParams) -> SqueezedGkpState:
    c0, c1 = angles.amplitudes()
    centers0, w0 = _comb(params, 0)
    centers1, w1 = _comb(params, 1)
    n0 = _logical_norm(params, 0)
    n1 = _logical_norm(params, 1)
    centers = np.concatenate([centers0, centers1])
    amps = np.concatenate([(c0 / n0) * w0, (c1 / n1) * w1]).astype(complex)

    # Renormalize the superposition: |0bar> and |1bar> are only quasi-orthogonal.
    q = _quadrature_axis(params)
    psi = _eval_gaussians(q, centers, amps, params.sigma)
    amps = amps / math.sqrt(float(_trapz(np.abs(psi) ** 2, q).real))

    keep = np.abs(amps) > _PAIR_PRUNE * np.abs(amps).max()
    centers, amps = centers[keep], amps[keep]
    order = np.argsort(centers, kind="stable")
    centers = centers[order].copy()
    amps = amps[order].copy()
    centers.setflags(write=False)
    amps.setflags(write=False)
    return SqueezedGkpState(params, c0, c1, n0, n1, centers, amps)


def wavefunction_eval(state: SqueezedGkpState, q):
    """Psi(q) of the normalized superposition (complex)."""
    return _eval_gaussians(q, state.peak_centers, state.peak_amps, state.params.sigma)


def _pair_terms(state: SqueezedGkpState) -> tuple[np.ndarray, np.ndarray, np.ndarray]:
    """Flattened pairwise cross-term data (midpoints, separations, amplitudes).

    Each ordered pair of peaks (mu1, mu2) contributes the term
        c * exp(-(q - (mu1+mu2)/2)^2 / sigma^2) * exp(-sigma^2 p^2) * exp(i p (mu2 - mu1))
    with c = conj(a1) a2 sigma / sqrt(pi).  The exp(+i p d) phase realizes
    the exp(-i p x) kernel documented in the module docstring.
    """
    mu = state.peak_centers
    a = state.peak_amps
    c = (np.conj(a)[:, None] * a[None, :]) * (state.params.sigma / SQRT_PI)
    mid = 0.5 * (mu[:, None] + mu[None, :])
    d = mu[None, :] - mu[:, None]
    c, mid, d = c.ravel(), mid.ravel(), d.ravel()
    keep = np.abs(c) > _PAIR_PRUNE * np.abs(c).max()
    return mid[keep], d[keep], c[keep]


def wigner_point(state: SqueezedGkpState, q: float, p: float) -> float:
    """W(q, p) from the closed-form pairwise Gaussian cross-term sum."""
    return _wigner_point_complex(state, q, p).real


def _wigner_point_complex(state: SqueezedGkpState, q: float, p: float) -> complex:
    # Kept separate so tests can bound the (cancelling) imaginary part.
    mid, d, c = _pair_terms(state)
    sigma = state.params.sigma
    g = np.exp(-((q - mid) ** 2) / sigma**2)
    phases = np.exp(1j * p * d)
    return complex(np.sum(c * g * phases) * math.exp(-(sigma**2) * p**2))


@dataclass(frozen=True)
class GridSpec:
    q_min: float
    q_max: float
    n_q: int
    p_min: float
    p_max: float
    n_p: int

    def __post_init__(self):
        if self.n_q < 2 or self.n_p < 2:
            raise ValueError("grid needs at least 2 samples per axis")
        if not (self.q_max > self.q_min and self.p_max > self.p_min):
            raise ValueError("grid ranges must have positive extent")

    @classmethod
    def square(cls, half_extent: float, n: int) -> "GridSpec":
        return cls(-half_extent, half_extent, n, -half_extent, half_extent, n)

    def q_axis(self) -> np.ndarray:
        return np.linspace(self.q_min, self.q_max, self.n_q)

    def p_axis(self) -> np.ndarray:
        return np.linspace(self.p_min, self.p_max, self.n_p)


@dataclass(frozen=True, eq=False)
class WignerGrid:
    """W sampled on a rectangular grid; values[i, j] = W(q_i, p_j)."""

    q_min: float
    p_min: float
    dq: float
    dp: float
    values: np.ndarray

    def q_axis(self) -> np.ndarray:
        return self.q_min + self.dq * np.arange(self.values.shape[0])

    def p_axis(self) -> np.ndarray:
        return self.p_min + self.dp * np.arange(self.values.shape[1])

    def integral(self) -> float:
        return float(_trapz(_trapz(self.values, dx=self.dp, axis=1), dx=self.dq))

    def abs_integral(self) -> float:
        return float(_trapz(_trapz(np.abs(self.values), dx=self.dp, axis=1), dx=self.dq))

    def max_abs(self) -> float:
        return float(np.abs(self.values).max())


def wigner_grid(state: SqueezedGkpState, spec: GridSpec, threads: int | None = None) -> WignerGrid:
    """Sample W on the grid via the separable pair sum (deterministic).

    threads > 1 splits the q rows across a thread pool; results are written
    by row index, so the output is bit-identical regardless of thread count.
    """
    q = spec.q_axis()
    p = spec.p_axis()
    sigma = state.params.sigma
    mid, d, c = _pair_terms(state)

    # Pairs whose q-Gaussian never reaches the grid cannot contribute.
    dist = np.maximum(0.0, np.maximum(spec.q_min - mid, mid - spec.q_max))
    keep = np.exp(-(dist**2) / sigma**2) * np.abs(c) > _PAIR_PRUNE * np.abs(c).max()
    mid, d, c = mid[keep], d[keep], c[keep]

    phases = np.exp(1j * np.outer(d, p))
    p_env = np.exp(-(sigma**2) * p**2)
    values = np.empty((spec.n_q, spec.n_p))

    def fill_rows(i0: int, i1: int) -> None:
        g = np.exp(-((q[i0:i1, None] - mid[None, :]) ** 2) / sigma**2) * c[None, :]
        values[i0:i1] = (g @ phases).real * p_env[None, :]

    n_workers = threads if threads and threads > 0 else 1
    block = max(1, -(-spec.n_q // max(n_workers, 1)))
    bounds = [(i, min(i + block, spec.n_q)) for i in range(0, spec.n_q, block)]
    if n_workers > 1 and len(bounds) > 1:
        from concurrent.futures import ThreadPoolExecutor

        with ThreadPoolExecutor(max_workers=n_workers) as pool:
            list(pool.map(lambda b: fill_rows(*b), bounds))
    else:
        for b in bounds:
            fill_rows(*b)

    return WignerGrid(
        q_min=spec.q_min,
        p_min=spec.p_min,
        dq=(spec.q_max - spec.q_min) / (spec.n_q - 1),
        dp=(spec.p_max - spec.p_min) / (spec.n_p - 1),
        values=values,
    )


def default_grid_spec(params: SqueezedGkpParams, n: int = 241) -> GridSpec:
    """Figure-style grid covering the central cells plus a 3 sigma margin."""
    return GridSpec.square(CELL_SIDE + 3.0 * params.sigma, n)


def envelope_grid_spec(params: SqueezedGkpParams, samples_per_sigma: int = 5) -> GridSpec:
    """Grid wide enough that the envelope leakage is below ~1e-4 of the norm."""
    half = max(3.0 / params.kappa, 3.0 / params.sigma) + 6.0 * params.sigma
    n = int(math.ceil(2.0 * half / (params.sigma / samples_per_sigma))) + 1
    return GridSpec.square(half, n)


def overlap_01(params: SqueezedGkpParams) -> float:
    """|<0bar|1bar>| of the normalized logical wavefunctions (quadrature)."""
    centers0, w0 = _comb(params, 0)
    centers1, w1 = _comb(params, 1)
    q = _quadrature_axis(params)
    psi0 = _eval_gaussians(q, centers0, w0, params.sigma) / _logical_norm(params, 0)
    psi1 = _eval_gaussians(q, centers1, w1, params.sigma) / _logical_norm(params, 1)
    return abs(float(_trapz(psi0 * psi1, q)))


DEFAULT_CELL_ORIGIN = (-SQRT_PI / 4.0, -SQRT_PI / 4.0)


def negativity_ratio_cell(
    state: SqueezedGkpState,
    origin: tuple[float, float] = DEFAULT_CELL_ORIGIN,
    samples_per_sigma: int = 20,
) -> float:
    """Ratio (cell integral of |W|) / (cell integral of W) over one unit cell.

    As sigma, kappa -> 0 this converges to the ideal-lattice value
    sqrt(pi) * integral |W_cell|, since the signed cell integral of the
    ideal lattice is the constant 1/sqrt(pi).
    """
    if samples_per_sigma < 20:
        raise ValueError("cell integrals need at least 20 samples per sigma")
    o_q, o_p = origin
    n = int(math.ceil(CELL_SIDE / (state.params.sigma / samples_per_sigma))) + 1
    grid = wigner_grid(
        state, GridSpec(o_q, o_q + CELL_SIDE, n, o_p, o_p + CELL_SIDE, n)
    )
    signed = grid.integral()
    if abs(signed) < 1e-9:
        raise UndefinedCellRatioError("signed cell integral is numerically zero")
    return grid.abs_integral() / signed


def wln_numeric(state: SqueezedGkpState, spec: GridSpec, threads: int | None = None) -> float:
    """log2 of the full-plane integral of |W|, from a covering grid.

    Raises ValueError if the grid leaks more than 1e-6 of the state's norm
    in either quadrature direction.
    """
    params = state.params
    q_extent = spec.q_max - spec.q_min
    p_extent = spec.p_max - spec.p_min
    if min(q_extent, p_extent) < 6.0 / params.kappa:
        raise ValueError("grid extent below 6/kappa: envelope not covered")
    _check_leakage(state, spec)
    grid = wigner_grid(state, spec, threads=threads)
    return math.log2(grid.abs_integral())


def _check_leakage(state: SqueezedGkpState, spec: GridSpec) -> None:
    sigma = state.params.sigma
    # q direction: probability mass of |Psi|^2 outside the grid.
    q = _quadrature_axis(state.params)
    inside = (q >= spec.q_min) & (q <= spec.q_max)
    psi2 = np.abs(wavefunction_eval(state, q[inside])) ** 2
    q_leak = 1.0 - float(_trapz(psi2, q[inside]))
    # p direction: the p-marginal of W is available in closed form per pair.
    mid, d, c = _pair_terms(state)
    q_weights = c * sigma * SQRT_PI  # integral over q of each pair Gaussian
    p = np.linspace(spec.p_min, spec.p_max, max(spec.n_p, 2001))
    marginal = (np.exp(1j * np.outer(p, d)) @ q_weights).real * np.exp(-(sigma**2) * p**2)
    p_leak = 1.0 - float(_trapz(marginal, p))
    if q_leak > 1e-6 or p_leak > 1e-6:
        raise ValueError(
            f"grid too small: envelope leakage q={q_leak:.2e}, p={p_leak:.2e}"
        )
