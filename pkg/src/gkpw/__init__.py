"""Wigner phase-space representations and negativity measures for GKP-encoded qubits."""

from .bloch import (
    BlochAngles,
    CATALOG,
    HADAMARD,
    NamedState,
    PHASE_PI_2,
    apply_gate_bloch,
    named_state,
)
from .lattice import (
    CellNegativityReport,
    FOURIER,
    LatticeCoefficients,
    SHEAR,
    apply_symplectic_lattice,
    cell_abs_integral,
    cell_coefficients,
    cell_report,
    cell_signed_integral,
    coeff_at,
    sqrtpi_abs_integral,
    wln_cell,
)
from .squeezed import (
    GridSpec,
    SqueezedGkpParams,
    SqueezedGkpState,
    UndefinedCellRatioError,
    WignerGrid,
    negativity_ratio_cell,
    overlap_01,
    squeezed_state,
    wavefunction_eval,
    wigner_grid,
    wigner_point,
    wln_numeric,
)
from .analysis import (
    ExtremaReport,
    SweepSpec,
    SweepSurface,
    convergence_study,
    find_extrema,
    sweep,
    table1_report,
)

__all__ = [name for name in dir() if not name.startswith("_")]
