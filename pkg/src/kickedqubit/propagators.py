"""Closed-form propagators for kicked qubits and the no-time-ordering limit.

In the rotating frame, a single kick of strength ``alpha`` at time ``t_k``
on the x axis evolves the system by

    [[cos(a), -i e^{-i dE t_k} sin(a)], [-i e^{i dE t_k} sin(a), cos(a)]],

independent of the observation time. Sequences compose right-to-left, later
kicks on the left. For the equal-and-opposite pair (+a at t1, -a at t2) both
the exact ordered product and the closed no-time-ordering (NTO) exponential
of the mean coupling are available in closed form; their off-diagonal phase
is exp(-i dE (t1 + t2) / 2), the value obtained by composing single-kick
factors (and by direct integration of the mean coupling).
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .pulses import DeltaKick, Representation, Schedule, rotated_axis_matrix, time_average
from .su2 import ID2, SIGMA_Z, PauliAxis, exp_minus_i_generator


@dataclass(frozen=True)
class KickSpec:
    """One delta kick: strength ``alpha`` (radians), time ``t_k``, axis x or y."""

    alpha: float
    t_k: float
    axis: PauliAxis = PauliAxis.X

    def __post_init__(self):
        if self.axis is PauliAxis.Z:
            raise ValueError("kicks couple through sigma_x or sigma_y only")
        if not (math.isfinite(self.alpha) and math.isfinite(self.t_k)):
            raise ValueError("kick strength and time must be finite")


def single_kick(delta_e: float, kick: KickSpec) -> np.ndarray:
    """Propagator of one kick: cos(a) I - i sin(a) * (rotated axis matrix).

    Exact because the rotated axis matrix squares to the identity.
    """
    if kick.axis is PauliAxis.Z:
        raise ValueError("kicks couple through sigma_x or sigma_y only")
    r = rotated_axis_matrix(delta_e, kick.t_k, kick.axis)
    return math.cos(kick.alpha) * ID2 - 1j * math.sin(kick.alpha) * r


def kick_sequence(delta_e: float, kicks: list[KickSpec] | tuple[KickSpec, ...]) -> np.ndarray:
    """Ordered product of single-kick propagators, later kicks applied last.

    ``kicks`` must be sorted by time ascending (ties allowed); the sequence
    of applications is enforced explicitly rather than inferred. Simultaneous
    kicks are merged by summing their generators before a single
    exponentiation, the limit of coincident narrow pulses.
    """
    kicks = list(kicks)
    for a, b in zip(kicks, kicks[1:]):
        if b.t_k < a.t_k:
            raise ValueError("kicks must be sorted by time ascending")
    u = ID2.copy()
    i = 0
    while i < len(kicks):
        j = i
        generator = np.zeros((2, 2), dtype=complex)
        while j < len(kicks) and kicks[j].t_k == kicks[i].t_k:
            k = kicks[j]
            generator = generator + k.alpha * rotated_axis_matrix(delta_e, k.t_k, k.axis)
            j += 1
        u = exp_minus_i_generator(generator) @ u
        i = j
    return u


def ordered_pair_matrix(delta_e: float, alpha: float, t_minus: float, t_plus: float) -> np.ndarray:
    """Exact propagator of the pair (+alpha, then -alpha) in relative times.

    ``t_minus`` is the separation t2 - t1, ``t_plus`` the sum t1 + t2. Equals
    the product of the two single-kick factors entrywise.
    """
    half = 0.5 * delta_e * t_minus
    phase_sum = 0.5 * delta_e * t_plus
    a = np.exp(-1j * half) * (math.cos(half) + 1j * math.cos(2.0 * alpha) * math.sin(half))
    b = np.exp(-1j * phase_sum) * math.sin(2.0 * alpha) * math.sin(half)
    return np.array([[a, b], [-np.conj(b), np.conj(a)]], dtype=complex)


def nto_pair_matrix(delta_e: float, alpha: float, t_minus: float, t_plus: float) -> np.ndarray:
    """NTO propagator of the same pair: exponential of the mean coupling.

    The rotation angle is chi = 2 alpha sin(dE t_minus / 2); the off-diagonal
    carries the same sum-time phase as the ordered closed form.
    """
    chi = 2.0 * alpha * math.sin(0.5 * delta_e * t_minus)
    phase_sum = 0.5 * delta_e * t_plus
    b = np.exp(-1j * phase_sum) * math.sin(chi)
    return np.array([[math.cos(chi), b], [-np.conj(b), math.cos(chi)]], dtype=complex)


def opposite_kick_pair(delta_e: float, alpha: float, t1: float, t2: float) -> np.ndarray:
    """Exact ordered propagator for kicks +alpha at t1 and -alpha at t2 >= t1."""
    if t2 < t1:
        raise ValueError(f"need t2 >= t1, got t1 = {t1!r}, t2 = {t2!r}")
    return ordered_pair_matrix(delta_e, alpha, t2 - t1, t1 + t2)


def nto_opposite_pair(
    delta_e: float,
    alpha: float,
    t1: float,
    t2: float,
    t_plus_phase: float | None = None,
) -> np.ndarray:
    """Closed-form NTO propagator for the same +/- kick pair (no quadrature).

    ``t_plus_phase`` overrides the sum-time phase angle (radians) of the
    off-diagonal entries; by default it is dE (t1 + t2) / 2, matching both
    the ordered pair and the quadrature path of :func:`nto_propagator`.
    """
    if t2 < t1:
        raise ValueError(f"need t2 >= t1, got t1 = {t1!r}, t2 = {t2!r}")
    if t_plus_phase is None:
        return nto_pair_matrix(delta_e, alpha, t2 - t1, t1 + t2)
    chi = 2.0 * alpha * math.sin(0.5 * delta_e * (t2 - t1))
    b = np.exp(-1j * t_plus_phase) * math.sin(chi)
    return np.array([[math.cos(chi), b], [-np.conj(b), math.cos(chi)]], dtype=complex)


def nto_propagator(s: Schedule, rep: Representation) -> np.ndarray:
    """Evolution with time ordering removed: exp(-i Gbar (tf - t0)).

    ``Gbar`` is the time-averaged coupling in the requested picture; in the
    Schrodinger picture the constant -(dE/2) sigma_z term joins the exponent,
    so the generator is the time average of the full Hamiltonian.
    """
    g = time_average(s, rep)
    if rep is Representation.SCHRODINGER:
        g = g - 0.5 * s.delta_e * SIGMA_Z
    return exp_minus_i_generator(g, s.duration())


def free_propagator(delta_e: float, t: float) -> np.ndarray:
    """exp(-i H0 t) with H0 = -(delta_e/2) sigma_z."""
    return np.array(
        [[np.exp(0.5j * delta_e * t), 0.0], [0.0, np.exp(-0.5j * delta_e * t)]],
        dtype=complex,
    )


def change_representation(
    u: np.ndarray, delta_e: float, t: float, t0: float, to: Representation
) -> np.ndarray:
    """Convert a propagator over [t0, t] between pictures.

    The caller states the target picture; ``u`` is assumed to be in the
    complementary one. Converting back recovers the input.
    """
    if to is Representation.SCHRODINGER:
        return free_propagator(delta_e, t) @ u @ free_propagator(delta_e, -t0)
    return free_propagator(delta_e, -t) @ u @ free_propagator(delta_e, t0)


def schedule_kick_propagator(s: Schedule) -> np.ndarray:
    """Ordered rotating-frame propagator of an all-kick schedule."""
    specs = []
    for p in s.pulses:
        if not isinstance(p, DeltaKick):
            raise ValueError("schedule_kick_propagator requires an all-kick schedule")
        specs.append(KickSpec(p.alpha, p.t_k, p.axis))
    return kick_sequence(s.delta_e, specs)
