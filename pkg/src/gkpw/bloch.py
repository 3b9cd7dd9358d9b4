"""Bloch-sphere description of pure qubit states and single-qubit Clifford gates."""

import cmath
import math
from dataclasses import dataclass

TWO_PI = 2.0 * math.pi

HADAMARD = "HADAMARD"
PHASE_PI_2 = "PHASE_PI_2"

_SQRT_HALF = 1.0 / math.sqrt(2.0)
_GATE_MATRICES = {
    # H = (1/sqrt2) [[1, 1], [1, -1]]
    HADAMARD: ((_SQRT_HALF, _SQRT_HALF), (_SQRT_HALF, -_SQRT_HALF)),
    # R_{pi/2} = diag(1, i)
    PHASE_PI_2: ((1.0, 0.0), (0.0, 1j)),
}


@dataclass(frozen=True)
class BlochAngles:
    """Pure qubit state cos(theta/2)|0> + e^{i phi} sin(theta/2)|1>.

    theta is clamped to [0, pi] and phi reduced mod 2*pi on construction.
    At the poles (sin(theta) == 0) phi is canonicalized to 0 so that
    physically identical states compare equal.
    """

    theta: float
    phi: float = 0.0

    def __post_init__(self):
        theta = min(max(float(self.theta), 0.0), math.pi)
        phi = float(self.phi) % TWO_PI
        if theta == 0.0 or theta == math.pi:
            phi = 0.0
        object.__setattr__(self, "theta", theta)
        object.__setattr__(self, "phi", phi)

    def amplitudes(self) -> tuple[complex, complex]:
        """Spinor (c0, c1) with c0 real non-negative (global phase fixed)."""
        c0 = math.cos(self.theta / 2.0)
        c1 = cmath.exp(1j * self.phi) * math.sin(self.theta / 2.0)
        return complex(c0), c1


def angles_from_amplitudes(c0: complex, c1: complex) -> BlochAngles:
    """Canonical Bloch angles of c0|0> + c1|1>, discarding the global phase."""
    r0, r1 = abs(c0), abs(c1)
    theta = 2.0 * math.atan2(r1, r0)
    if r0 == 0.0 or r1 == 0.0:
        return BlochAngles(theta, 0.0)
    phi = cmath.phase(c1) - cmath.phase(c0)
    return BlochAngles(theta, phi)


def apply_gate_bloch(state: BlochAngles, gate: str) -> BlochAngles:
    """Apply a single-qubit Clifford gate (HADAMARD or PHASE_PI_2)."""
    try:
        (a, b), (c, d) = _GATE_MATRICES[gate]
    except KeyError:
        raise ValueError(f"unknown gate {gate!r}") from None
    c0, c1 = state.amplitudes()
    return angles_from_amplitudes(a * c0 + b * c1, c * c0 + d * c1)


# Pauli eigenstates plus the two maximal non-stabilizer states.
CATALOG: dict[str, BlochAngles] = {
    "ZERO": BlochAngles(0.0, 0.0),
    "ONE": BlochAngles(math.pi, 0.0),
    "PLUS": BlochAngles(math.pi / 2.0, 0.0),
    "MINUS": BlochAngles(math.pi / 2.0, math.pi),
    "PLUS_I": BlochAngles(math.pi / 2.0, math.pi / 2.0),
    "MINUS_I": BlochAngles(math.pi / 2.0, 3.0 * math.pi / 2.0),
    "H_MAGIC": BlochAngles(math.pi / 2.0, math.pi / 4.0),
    "T_MAGIC": BlochAngles(math.acos(1.0 / math.sqrt(3.0)), math.pi / 4.0),
}

STABILIZER_LABELS = ("ZERO", "ONE", "PLUS", "MINUS", "PLUS_I", "MINUS_I")

# Short aliases accepted on the command line.
LABEL_ALIASES = {"0": "ZERO", "1": "ONE", "H": "H_MAGIC", "T": "T_MAGIC", "I": "PLUS_I"}


@dataclass(frozen=True)
class NamedState:
    label: str
    angles: BlochAngles


def named_state(label: str) -> NamedState:
    """Look up a catalog state by label (raises ValueError if unknown)."""
    key = LABEL_ALIASES.get(label, label)
    if key not in CATALOG:
        raise ValueError(f"unknown state label {label!r}")
    return NamedState(key, CATALOG[key])
