"""Second-order expansion of the evolution and the ordering correction.

Through second order in the rotating-frame coupling V, the evolution is

    U = 1 - i I1 - I2_ordered,      I1 = integral of V,
    I2_ordered = double integral of V(t1) V(t2) over t0 <= t2 <= t1 <= tf.

Splitting the product into its anticommutator and commutator halves shows
that the ordered double integral equals the unordered square -(1/2) I1^2
plus the ordered commutator integral: the commutator half carries every
effect of time ordering at this order. This module computes all the pieces
independently (exact finite sums for kick schedules, nested adaptive Simpson
for smooth ones) so the identity can be checked rather than assumed.

Equivalently, the step function ordering weight decomposes as
Theta(t1 - t2) = 1/2 + sgn(t1 - t2)/2; the constant half reproduces the
unordered square and the sign half the commutator term.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .pulses import (
    Representation,
    Schedule,
    coupling_integral,
    interaction_potential,
    pulse_coupling_integral,
    pulse_support,
    rotated_axis_matrix,
)
from .su2 import ID2

# Identity tolerance for the quadrature path; kick sums are exact to rounding.
TOL_QUAD2 = 1e-8

_INNER_TOL = 1e-11
_OUTER_TOL = 1e-9


@dataclass(frozen=True)
class SecondOrderBreakdown:
    """The five second-order pieces of the rotating-frame evolution.

    ``second_ordered`` equals ``second_nto + commutator_correction`` up to
    quadrature tolerance; that identity is the content of the module.
    """

    zeroth: np.ndarray
    first: np.ndarray
    second_ordered: np.ndarray
    second_nto: np.ndarray
    commutator_correction: np.ndarray

    def identity_residual(self) -> float:
        """Max-entry residual of ordered - nto - correction."""
        r = self.second_ordered - self.second_nto - self.commutator_correction
        return float(np.max(np.abs(r)))

    def through_second_order(self) -> np.ndarray:
        """1 + first + second_ordered (the truncated evolution operator)."""
        return self.zeroth + self.first + self.second_ordered


def theta_split_weights(t1: float, t2: float) -> tuple[float, float]:
    """Decompose the ordering step Theta(t1 - t2) as 1/2 + sgn/2.

    Returns (average, ordering) with average always 1/2 and ordering +/-1/2.
    Coincident times are excluded: they are measure zero for quadrature and
    carry the 1/2 convention implicitly.
    """
    if t1 == t2:
        raise ValueError("theta split undefined at t1 == t2")
    return 0.5, math.copysign(0.5, t1 - t2)


def _kick_breakdown(s: Schedule) -> SecondOrderBreakdown:
    moments = [
        (p.alpha, p.t_k, rotated_axis_matrix(s.delta_e, p.t_k, p.axis)) for p in s.pulses
    ]
    i1 = np.zeros((2, 2), dtype=complex)
    for a, _, r in moments:
        i1 = i1 + a * r

    ordered = np.zeros((2, 2), dtype=complex)
    correction = np.zeros((2, 2), dtype=complex)
    for a_i, t_i, r_i in moments:
        for a_j, t_j, r_j in moments:
            if t_i > t_j:
                ordered = ordered + a_i * a_j * (r_i @ r_j)
                correction = correction + a_i * a_j * (r_i @ r_j - r_j @ r_i)
            elif t_i == t_j:
                # Equal-time pairs (including self pairs) enter the ordered
                # simplex with weight 1/2, the Theta(0) = 1/2 convention.
                ordered = ordered + 0.5 * a_i * a_j * (r_i @ r_j)
    return SecondOrderBreakdown(
        zeroth=ID2.copy(),
        first=-1j * i1,
        second_ordered=-ordered,
        second_nto=-0.5 * (i1 @ i1),
        commutator_correction=-0.5 * correction,
    )


def _support_segments(s: Schedule) -> list[tuple[float, float]]:
    """Union of pulse supports clipped to the window, merged and sorted."""
    raw = []
    for p in s.pulses:
        lo, hi = pulse_support(p)
        lo, hi = max(lo, s.t0), min(hi, s.tf)
        if hi > lo:
            raw.append((lo, hi))
    raw.sort()
    merged: list[tuple[float, float]] = []
    for lo, hi in raw:
        if merged and lo <= merged[-1][1]:
            merged[-1] = (merged[-1][0], max(hi, merged[-1][1]))
        else:
            merged.append((lo, hi))
    return merged


def _smooth_breakdown(s: Schedule) -> SecondOrderBreakdown:
    # Outer adaptive Simpson in t1 over the pulse support; the inner integral
    # K(t1) = int_{t0}^{t1} V is itself evaluated by adaptive Simpson, built
    # up incrementally along the outer nodes (each new node extends K from an
    # already-known node, so the inner work shrinks with the outer interval).
    # The ordered and commutator integrands share the same V and K values.
    def potential(t: float) -> np.ndarray:
        return interaction_potential(s, t)

    def inner(a: float, b: float) -> np.ndarray:
        total = np.zeros((2, 2), dtype=complex)
        for p in s.pulses:
            total = total + pulse_coupling_integral(
                p, s.delta_e, a, b, Representation.INTERACTION, _INNER_TOL
            )
        return total

    def pair(v: np.ndarray, k: np.ndarray) -> tuple[np.ndarray, np.ndarray]:
        vk = v @ k
        return vk, vk - k @ v

    def refine(a, b, fa, fm, fb, whole_ord, whole_comm, k_a, k_m, tol, depth):
        m = 0.5 * (a + b)
        lm, rm = 0.5 * (a + m), 0.5 * (m + b)
        k_lm = k_a + inner(a, lm)
        k_rm = k_m + inner(m, rm)
        flm = pair(potential(lm), k_lm)
        frm = pair(potential(rm), k_rm)
        left_ord = (m - a) / 6.0 * (fa[0] + 4.0 * flm[0] + fm[0])
        left_comm = (m - a) / 6.0 * (fa[1] + 4.0 * flm[1] + fm[1])
        right_ord = (b - m) / 6.0 * (fm[0] + 4.0 * frm[0] + fb[0])
        right_comm = (b - m) / 6.0 * (fm[1] + 4.0 * frm[1] + fb[1])
        d_ord = left_ord + right_ord - whole_ord
        d_comm = left_comm + right_comm - whole_comm
        err = max(np.max(np.abs(d_ord)), np.max(np.abs(d_comm)))
        if depth <= 0 or err <= 15.0 * tol:
            return left_ord + right_ord + d_ord / 15.0, left_comm + right_comm + d_comm / 15.0
        lo = refine(a, m, fa, flm, fm, left_ord, left_comm, k_a, k_lm, 0.5 * tol, depth - 1)
        hi = refine(m, b, fm, frm, fb, right_ord, right_comm, k_m, k_rm, 0.5 * tol, depth - 1)
        return lo[0] + hi[0], lo[1] + hi[1]

    ordered = np.zeros((2, 2), dtype=complex)
    commutator = np.zeros((2, 2), dtype=complex)
    k_running = np.zeros((2, 2), dtype=complex)  # coupling vanishes between supports
    for lo_t, hi_t in _support_segments(s):
        m = 0.5 * (lo_t + hi_t)
        k_m = k_running + inner(lo_t, m)
        k_hi = k_m + inner(m, hi_t)
        fa = pair(potential(lo_t), k_running)
        fm = pair(potential(m), k_m)
        fb = pair(potential(hi_t), k_hi)
        whole_ord = (hi_t - lo_t) / 6.0 * (fa[0] + 4.0 * fm[0] + fb[0])
        whole_comm = (hi_t - lo_t) / 6.0 * (fa[1] + 4.0 * fm[1] + fb[1])
        seg = refine(lo_t, hi_t, fa, fm, fb, whole_ord, whole_comm, k_running, k_m, _OUTER_TOL, 40)
        ordered = ordered + seg[0]
        commutator = commutator + seg[1]
        k_running = k_hi

    i1 = coupling_integral(s, s.t0, s.tf, Representation.INTERACTION)
    return SecondOrderBreakdown(
        zeroth=ID2.copy(),
        first=-1j * i1,
        second_ordered=-ordered,
        second_nto=-0.5 * (i1 @ i1),
        commutator_correction=-0.5 * commutator,
    )


def dyson_second_order(s: Schedule) -> SecondOrderBreakdown:
    """All five second-order pieces for the schedule, rotating frame fixed.

    Kick schedules use exact finite sums over ordered kick pairs; smooth
    schedules use nested adaptive Simpson over the ordered time simplex.
    Mixing kicks with finite-width pulses is rejected: the simplex handling
    at a kick inside a smooth pulse is ambiguous.
    """
    has_kicks = s.has_kicks()
    if has_kicks and len(s.smooth_pulses()) > 0:
        raise ValueError("mixed kick and smooth schedules are not supported at second order")
    if has_kicks or not s.pulses:
        return _kick_breakdown(s)
    return _smooth_breakdown(s)


def phase_orthogonality_check(s: Schedule) -> tuple[float, float]:
    """Structure of the ordering correction for x-coupled schedules.

    For couplings along x only, the commutator of rotated couplings is
    proportional to sigma_z with an imaginary coefficient, so the correction
    must be diagonal with purely imaginary entries. Returns the largest
    magnitude found in the forbidden components: (max off-diagonal entry,
    max real part on the diagonal). Both should sit at quadrature tolerance
    for x-coupled schedules; for mixed axes the values are reported without
    any expectation attached.
    """
    c = dyson_second_order(s).commutator_correction
    max_offdiag = float(max(abs(c[0, 1]), abs(c[1, 0])))
    max_real_diag = float(max(abs(c[0, 0].real), abs(c[1, 1].real)))
    return max_offdiag, max_real_diag


__all__ = [
    "TOL_QUAD2",
    "SecondOrderBreakdown",
    "dyson_second_order",
    "theta_split_weights",
    "phase_orthogonality_check",
]
