"""Complex 2x2 linear algebra and SU(2) identities.

Matrices are plain ``numpy`` arrays of shape ``(2, 2)`` with dtype
``complex128``; states are arrays of shape ``(2,)``. There is no propagator
or Hamiltonian subtype -- validity checks (unitarity, normalization) are
explicit functions that callers apply where the contract demands it.
"""

from __future__ import annotations

import enum
import math

import numpy as np

# Tolerances for double-precision arithmetic with headroom; every closed form
# in this package is exact, so only rounding accumulates.
TOL_UNITARY = 1e-10
TOL_NORM = 1e-10

ID2 = np.eye(2, dtype=complex)
SIGMA_X = np.array([[0.0, 1.0], [1.0, 0.0]], dtype=complex)
SIGMA_Y = np.array([[0.0, -1.0j], [1.0j, 0.0]], dtype=complex)
SIGMA_Z = np.array([[1.0, 0.0], [0.0, -1.0]], dtype=complex)


class PauliAxis(enum.Enum):
    """Coupling axis of a pulse: one of the three Pauli directions."""

    X = "x"
    Y = "y"
    Z = "z"

    @classmethod
    def from_str(cls, label: str) -> "PauliAxis":
        try:
            return cls(label.strip().lower())
        except ValueError:
            raise ValueError(f"unknown Pauli axis {label!r}; expected x, y or z") from None


_PAULI = {PauliAxis.X: SIGMA_X, PauliAxis.Y: SIGMA_Y, PauliAxis.Z: SIGMA_Z}


def pauli(axis: PauliAxis) -> np.ndarray:
    """Return a copy of the standard Pauli matrix for ``axis``."""
    return _PAULI[axis].copy()


def sigma_dot_u(u) -> np.ndarray:
    """sigma . u for a real 3-vector u (no normalization requirement here)."""
    ux, uy, uz = float(u[0]), float(u[1]), float(u[2])
    return np.array([[uz, ux - 1j * uy], [ux + 1j * uy, -uz]], dtype=complex)


def exp_i_phi_sigma_u(phi: float, u) -> np.ndarray:
    """Evaluate exp(i*phi * sigma.u) = cos(phi) I + i sin(phi) sigma.u.

    ``u`` must be a real unit 3-vector; the identity requires (sigma.u)^2 = I.
    Raises ValueError if ``u`` deviates from unit norm by more than TOL_NORM
    or if any input is not finite.
    """
    phi = float(phi)
    ux, uy, uz = (float(c) for c in u)
    if not all(math.isfinite(v) for v in (phi, ux, uy, uz)):
        raise ValueError("exp_i_phi_sigma_u requires finite phi and u")
    norm = math.sqrt(ux * ux + uy * uy + uz * uz)
    if abs(norm - 1.0) > TOL_NORM:
        raise ValueError(f"u must be a unit vector; got |u| = {norm!r}")
    return math.cos(phi) * ID2 + 1j * math.sin(phi) * sigma_dot_u((ux, uy, uz))


def compose(later: np.ndarray, earlier: np.ndarray) -> np.ndarray:
    """Product later @ earlier; argument order matches time ordering."""
    return later @ earlier


def dagger(u: np.ndarray) -> np.ndarray:
    """Conjugate transpose."""
    return u.conj().T


def apply(u: np.ndarray, state: np.ndarray) -> np.ndarray:
    """Act with a propagator on a state vector."""
    return u @ state


def probabilities(state: np.ndarray) -> tuple[float, float]:
    """Occupation probabilities (|a1|^2, |a2|^2) of the two levels."""
    a1, a2 = complex(state[0]), complex(state[1])
    return (a1.real**2 + a1.imag**2, a2.real**2 + a2.imag**2)


def unitarity_defect(u: np.ndarray) -> float:
    """Max-entry deviation of U†U from the identity."""
    return float(np.max(np.abs(dagger(u) @ u - ID2)))


def is_unitary(u: np.ndarray, tol: float = TOL_UNITARY) -> bool:
    return unitarity_defect(u) <= tol


def norm_defect(state: np.ndarray) -> float:
    """|1 - (|a1|^2 + |a2|^2)| for a state vector."""
    p1, p2 = probabilities(state)
    return abs(1.0 - (p1 + p2))


def bloch_components(g: np.ndarray) -> tuple[float, float, float]:
    """Decompose a traceless Hermitian matrix as gx*sx + gy*sy + gz*sz.

    The anti-Hermitian and trace parts (rounding noise from quadrature) are
    discarded by symmetrizing first.
    """
    h = 0.5 * (g + dagger(g))
    gx = h[1, 0].real
    gy = h[1, 0].imag
    gz = 0.5 * (h[0, 0].real - h[1, 1].real)
    return gx, gy, gz


def exp_minus_i_generator(g: np.ndarray, duration: float = 1.0) -> np.ndarray:
    """exp(-i * g * duration) for traceless Hermitian g, exactly in SU(2).

    Writes g = c * sigma.u and applies the half-angle-free identity with
    phi = -c*duration; the degenerate c = 0 case returns the identity.
    """
    gx, gy, gz = bloch_components(g)
    c = math.sqrt(gx * gx + gy * gy + gz * gz)
    if c == 0.0:
        return ID2.copy()
    return exp_i_phi_sigma_u(-c * duration, (gx / c, gy / c, gz / c))
