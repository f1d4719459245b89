"""Pulse shapes, schedules, and time averages of the coupling.

A two-level system with level splitting ``delta_e`` is driven through a
Pauli axis by one or more pulses. Three shapes are supported:

* ``DeltaKick`` -- an idealized instantaneous pulse of integrated strength
  ``alpha`` (radians) at time ``t_k``; it has no pointwise value and is
  always handled analytically.
* ``Gaussian`` -- value ``(alpha / (sqrt(pi) * tau)) * exp(-((t - t_k)/tau)^2)``,
  normalized so its full-time integral is exactly ``alpha``.
* ``Rectangular`` -- value ``alpha / tau`` on ``[t_start, t_start + tau]``.

All quantities are dimensionless with hbar = 1; products ``delta_e * t`` are
the only physical combinations (see :mod:`kickedqubit.units` for eV/ps
conversion). The free Hamiltonian is ``-(delta_e/2) * sigma_z``, so the
rotating-frame coupling along x picks up the phase ``exp(-i delta_e t)`` in
its (1, 2) entry.
"""

from __future__ import annotations

import enum
import math
import warnings
from dataclasses import dataclass, field

import numpy as np

from .quadrature import adaptive_simpson
from .su2 import SIGMA_Z, PauliAxis, pauli

# Quadrature tolerance, absolute per matrix entry.
TOL_QUAD = 1e-10

# Gaussian tails beyond this many widths carry < 1e-15 of alpha and are
# outside the pulse's nominal support.
GAUSSIAN_SUPPORT_WIDTHS = 6.0


class Representation(enum.Enum):
    """Picture an evolution is computed in."""

    SCHRODINGER = "schrodinger"
    INTERACTION = "interaction"


def _require_finite(**values: float) -> None:
    for name, v in values.items():
        if not math.isfinite(v):
            raise ValueError(f"{name} must be finite, got {v!r}")


@dataclass(frozen=True)
class DeltaKick:
    """Instantaneous pulse: integrated strength ``alpha`` applied at ``t_k``."""

    alpha: float
    t_k: float
    axis: PauliAxis = PauliAxis.X

    def __post_init__(self):
        _require_finite(alpha=self.alpha, t_k=self.t_k)


@dataclass(frozen=True)
class Gaussian:
    """Gaussian pulse centered at ``t_k`` with width ``tau`` and area ``alpha``."""

    alpha: float
    t_k: float
    tau: float
    axis: PauliAxis = PauliAxis.X

    def __post_init__(self):
        _require_finite(alpha=self.alpha, t_k=self.t_k, tau=self.tau)
        if self.tau <= 0.0:
            raise ValueError(f"Gaussian width tau must be > 0, got {self.tau!r}")


@dataclass(frozen=True)
class Rectangular:
    """Flat pulse of area ``alpha`` on ``[t_start, t_start + tau]``."""

    alpha: float
    t_start: float
    tau: float
    axis: PauliAxis = PauliAxis.X

    def __post_init__(self):
        _require_finite(alpha=self.alpha, t_start=self.t_start, tau=self.tau)
        if self.tau <= 0.0:
            raise ValueError(f"Rectangular duration tau must be > 0, got {self.tau!r}")


Pulse = DeltaKick | Gaussian | Rectangular


def pulse_center(p: Pulse) -> float:
    return p.t_start if isinstance(p, Rectangular) else p.t_k


def pulse_support(p: Pulse) -> tuple[float, float]:
    """Nominal support interval of the pulse (a point for kicks)."""
    if isinstance(p, DeltaKick):
        return (p.t_k, p.t_k)
    if isinstance(p, Gaussian):
        half = GAUSSIAN_SUPPORT_WIDTHS * p.tau
        return (p.t_k - half, p.t_k + half)
    return (p.t_start, p.t_start + p.tau)


def value_at(p: Pulse, t: float) -> float:
    """Field amplitude V(t). Undefined for delta kicks, which raise."""
    if isinstance(p, DeltaKick):
        raise ValueError("pointwise value undefined for delta kicks")
    if isinstance(p, Gaussian):
        x = (t - p.t_k) / p.tau
        return p.alpha / (math.sqrt(math.pi) * p.tau) * math.exp(-x * x)
    if p.t_start <= t <= p.t_start + p.tau:
        return p.alpha / p.tau
    return 0.0


def integrated_strength(p: Pulse, t0: float, t: float) -> float:
    """Integral of V over [t0, t], in closed form for every shape.

    A kick exactly at an endpoint counts as inside the interval.
    """
    if t < t0:
        raise ValueError(f"integration endpoint t = {t!r} precedes t0 = {t0!r}")
    if isinstance(p, DeltaKick):
        return p.alpha if t0 <= p.t_k <= t else 0.0
    if isinstance(p, Gaussian):
        return 0.5 * p.alpha * (math.erf((t - p.t_k) / p.tau) - math.erf((t0 - p.t_k) / p.tau))
    lo = max(t0, p.t_start)
    hi = min(t, p.t_start + p.tau)
    return p.alpha / p.tau * max(0.0, hi - lo)


@dataclass(frozen=True)
class Schedule:
    """Full problem specification: splitting, pulse list, and time window.

    Pulses are stably sorted by center/start time on construction, so
    simultaneous kicks keep their given order. Pulse support extending
    outside [t0, tf] is flagged with a warning, not rejected: the evolution
    then simply truncates the pulse.
    """

    delta_e: float
    pulses: tuple[Pulse, ...] = field(default_factory=tuple)
    t0: float = 0.0
    tf: float = 1.0

    def __post_init__(self):
        _require_finite(delta_e=self.delta_e, t0=self.t0, tf=self.tf)
        if self.tf <= self.t0:
            raise ValueError(f"need tf > t0, got [{self.t0!r}, {self.tf!r}]")
        object.__setattr__(self, "pulses", tuple(sorted(self.pulses, key=pulse_center)))
        for p in self.pulses:
            lo, hi = pulse_support(p)
            if lo < self.t0 or hi > self.tf:
                warnings.warn(
                    f"pulse support [{lo:g}, {hi:g}] extends outside the "
                    f"schedule window [{self.t0:g}, {self.tf:g}]",
                    stacklevel=2,
                )

    def kicks(self) -> tuple[DeltaKick, ...]:
        return tuple(p for p in self.pulses if isinstance(p, DeltaKick))

    def smooth_pulses(self) -> tuple[Pulse, ...]:
        return tuple(p for p in self.pulses if not isinstance(p, DeltaKick))

    def has_kicks(self) -> bool:
        return any(isinstance(p, DeltaKick) for p in self.pulses)

    def duration(self) -> float:
        return self.tf - self.t0


def rotated_axis_matrix(delta_e: float, t: float, axis: PauliAxis) -> np.ndarray:
    """Coupling matrix in the rotating frame: exp(i H0 t) sigma_axis exp(-i H0 t).

    With H0 = -(delta_e/2) sigma_z this is a rotation of sigma_x, sigma_y in
    the xy-plane by angle delta_e * t; sigma_z is unchanged. The sign
    convention puts exp(-i delta_e t) in the (1, 2) entry for axis x.
    """
    theta = delta_e * t
    if axis is PauliAxis.X:
        return np.array(
            [[0.0, np.exp(-1j * theta)], [np.exp(1j * theta), 0.0]], dtype=complex
        )
    if axis is PauliAxis.Y:
        return np.array(
            [[0.0, -1j * np.exp(-1j * theta)], [1j * np.exp(1j * theta), 0.0]],
            dtype=complex,
        )
    return pauli(PauliAxis.Z)


def _no_kicks(s: Schedule, what: str) -> None:
    if s.has_kicks():
        raise ValueError(f"{what} is undefined at a delta kick; use the analytic kick propagators")


def schrodinger_hamiltonian(s: Schedule, t: float) -> np.ndarray:
    """H(t) = -(delta_e/2) sigma_z + sum_p V_p(t) sigma_axis."""
    _no_kicks(s, "the pointwise Hamiltonian")
    h = -0.5 * s.delta_e * SIGMA_Z.copy()
    for p in s.pulses:
        v = value_at(p, t)
        if v != 0.0:
            h = h + v * pauli(p.axis)
    return h


def interaction_potential(s: Schedule, t: float) -> np.ndarray:
    """Rotating-frame coupling: sum_p V_p(t) * rotated sigma_axis at time t."""
    _no_kicks(s, "the pointwise interaction potential")
    v = np.zeros((2, 2), dtype=complex)
    for p in s.pulses:
        amp = value_at(p, t)
        if amp != 0.0:
            v = v + amp * rotated_axis_matrix(s.delta_e, t, p.axis)
    return v


def pulse_coupling_integral(
    p: Pulse,
    delta_e: float,
    lo: float,
    hi: float,
    rep: Representation,
    tol: float = TOL_QUAD,
) -> np.ndarray:
    """Integral of this pulse's coupling matrix over [lo, hi].

    Kicks contribute ``alpha`` times the (rotated) axis matrix when ``t_k``
    lies in the closed interval; smooth pulses in the Schrodinger picture use
    the closed-form integrated strength, and in the interaction picture the
    rotated integrand is integrated by adaptive Simpson over the part of the
    pulse support inside the window.
    """
    if isinstance(p, DeltaKick):
        if lo <= p.t_k <= hi:
            if rep is Representation.INTERACTION:
                return p.alpha * rotated_axis_matrix(delta_e, p.t_k, p.axis)
            return p.alpha * pauli(p.axis)
        return np.zeros((2, 2), dtype=complex)

    a, b = pulse_support(p)
    a, b = max(a, lo), min(b, hi)
    if b <= a:
        return np.zeros((2, 2), dtype=complex)
    if rep is Representation.SCHRODINGER:
        return integrated_strength(p, a, b) * pauli(p.axis)
    return adaptive_simpson(
        lambda t: value_at(p, t) * rotated_axis_matrix(delta_e, t, p.axis), a, b, tol
    )


def coupling_integral(s: Schedule, lo: float, hi: float, rep: Representation) -> np.ndarray:
    """Integral of the full coupling over [lo, hi] (H0 excluded)."""
    total = np.zeros((2, 2), dtype=complex)
    for p in s.pulses:
        total = total + pulse_coupling_integral(p, s.delta_e, lo, hi, rep)
    return total


def time_average(s: Schedule, rep: Representation) -> np.ndarray:
    """Mean coupling over the schedule window, in the requested picture.

    In the Schrodinger picture this averages only the driving term
    ``V(t) sigma_axis``; the constant ``-(delta_e/2) sigma_z`` part of the
    Hamiltonian is added by the caller where needed.
    """
    return coupling_integral(s, s.t0, s.tf, rep) / s.duration()
