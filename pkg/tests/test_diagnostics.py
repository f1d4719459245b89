import math

import numpy as np
import pytest

from kickedqubit.diagnostics import (
    MapRegime,
    classify_regime,
    default_surface_grids,
    kick_limit_scan,
    observation_time_scan,
    ordering_difference_surface,
    p2_nto,
    p2_ordered,
)
from kickedqubit.propagators import nto_opposite_pair, opposite_kick_pair
from kickedqubit.units import delta_e_from_ev, preset_2s2p, rabi_period


def test_closed_forms_trivial_points():
    assert p2_ordered(0.0, 1.7) == 0.0
    assert p2_nto(0.0, 1.7) == 0.0
    assert p2_ordered(1.0, math.pi / 2) == pytest.approx(1.0, abs=1e-15)
    assert p2_nto(1.0, math.pi / 2) == pytest.approx(1.0, abs=1e-15)
    assert p2_ordered(0.5, math.pi / 2) == pytest.approx(0.25, abs=1e-15)
    assert p2_nto(0.5, math.pi) == pytest.approx(1.0, abs=1e-15)


def test_epsilon_domain_enforced():
    with pytest.raises(ValueError):
        p2_ordered(1.2, 0.1)
    with pytest.raises(ValueError):
        p2_nto(-1.2, 0.1)


def test_closed_forms_match_pair_propagators():
    # eps = sin(dE t_minus / 2), phi = 2 alpha: the scalar forms must agree
    # with |U21|^2 of the matrix propagators.
    rng = np.random.default_rng(99)
    for _ in range(30):
        delta_e = rng.uniform(0.2, 2.0)
        alpha = rng.uniform(-1.5, 1.5)
        t1 = rng.uniform(-1.0, 1.0)
        t2 = t1 + rng.uniform(0.0, 3.0)
        eps = math.sin(0.5 * delta_e * (t2 - t1))
        phi = 2.0 * alpha
        assert p2_ordered(eps, phi) == pytest.approx(
            abs(opposite_kick_pair(delta_e, alpha, t1, t2)[1, 0]) ** 2, abs=1e-12
        )
        assert p2_nto(eps, phi) == pytest.approx(
            abs(nto_opposite_pair(delta_e, alpha, t1, t2)[1, 0]) ** 2, abs=1e-12
        )


def test_ordering_never_helps_on_concave_domain():
    # For 0 < eps < 1 and 0 < phi <= pi/2 the chord inequality
    # eps sin(phi) <= sin(eps phi) gives p2_ordered <= p2_nto.
    for eps in np.linspace(0.05, 0.95, 10):
        for phi in np.linspace(0.05, math.pi / 2, 10):
            assert p2_ordered(eps, phi) <= p2_nto(eps, phi) + 1e-15


def test_surface_point_single_origin():
    pts = ordering_difference_surface([0.0], [0.0])
    assert len(pts) == 1
    assert pts[0].difference == 0.0


def test_surface_axes_vanish_exactly():
    eps_grid, phi_grid = default_surface_grids()
    pts = ordering_difference_surface(eps_grid, phi_grid)
    for p in pts:
        if p.epsilon == 0.0 or p.phi == 0.0:
            assert p.difference == 0.0


def test_surface_has_both_signs():
    eps_grid, phi_grid = default_surface_grids()
    diffs = [p.difference for p in ordering_difference_surface(eps_grid, phi_grid)]
    assert min(diffs) < 0.0
    assert max(diffs) > 0.0


def test_surface_sign_oscillates_along_phi():
    # Near eps = 1 the difference changes sign repeatedly as phi grows.
    _, phi_grid = default_surface_grids()
    diffs = [p.difference for p in ordering_difference_surface([0.96], phi_grid)]
    signs = [d > 0 for d in diffs if abs(d) > 1e-6]
    flips = sum(1 for a, b in zip(signs, signs[1:]) if a != b)
    assert flips >= 2


def test_surface_row_major_order():
    pts = ordering_difference_surface([0.1, 0.2], [0.0, 1.0, 2.0])
    assert [(p.epsilon, p.phi) for p in pts] == [
        (0.1, 0.0),
        (0.1, 1.0),
        (0.1, 2.0),
        (0.2, 0.0),
        (0.2, 1.0),
        (0.2, 2.0),
    ]


def test_classify_regime_table():
    assert classify_regime(0.01, 0.01) is MapRegime.KICKED_PERTURBATIVE
    assert classify_regime(100.0, 100.0) is MapRegime.ADIABATIC
    assert classify_regime(0.01, 100.0) is MapRegime.KICKED_ADIABATIC
    assert classify_regime(100.0, 0.01) is MapRegime.PERTURBATIVE
    assert classify_regime(2.0 * math.pi, 2.0 * math.pi) is MapRegime.INTERMEDIATE
    assert classify_regime(0.01, 2.0 * math.pi) is MapRegime.INTERMEDIATE


def test_classify_regime_rejects_negative():
    with pytest.raises(ValueError):
        classify_regime(-0.1, 1.0)


def test_classify_regime_deterministic_and_total():
    rng = np.random.default_rng(5)
    for _ in range(200):
        x, y = rng.uniform(0, 50, size=2)
        assert classify_regime(x, y) is classify_regime(x, y)


def test_kick_limit_scan_validates_ladder():
    with pytest.raises(ValueError, match="descending"):
        kick_limit_scan(1.0, 0.5, 10.0, [1.0, 2.0])
    with pytest.raises(ValueError, match="positive"):
        kick_limit_scan(1.0, 0.5, 10.0, [1.0, -0.5])


def test_kick_limit_scan_rows():
    delta_e = delta_e_from_ev(4.37e-6)
    period = rabi_period(delta_e)
    taus = [period / 32, period / 64, period / 128]
    rows = kick_limit_scan(delta_e, math.pi / 2, 150.0, taus)
    assert [r.tau for r in rows] == taus
    errors = [abs(r.p2_rk4_ordered - 1.0) for r in rows]
    assert all(b < a for a, b in zip(errors, errors[1:]))
    # interaction-picture NTO depends only on dE tau / 2
    for r in rows:
        expected = math.sin(math.pi * math.exp(-((0.5 * delta_e * r.tau) ** 2)) / 2) ** 2
        assert r.p2_nto_interaction == pytest.approx(expected, abs=1e-9)


def test_interaction_nto_independent_of_window():
    # Doubling the observation window must leave the interaction-picture NTO
    # value untouched once the pulse is inside.
    from kickedqubit.propagators import nto_propagator
    from kickedqubit.pulses import Gaussian, Representation, Schedule

    delta_e = 0.7
    s1 = Schedule(delta_e, (Gaussian(0.9, 5.0, 0.4),), 0.0, 10.0)
    s2 = Schedule(delta_e, (Gaussian(0.9, 5.0, 0.4),), 0.0, 20.0)
    p1 = abs(nto_propagator(s1, Representation.INTERACTION)[1, 0]) ** 2
    p2 = abs(nto_propagator(s2, Representation.INTERACTION)[1, 0]) ** 2
    assert p1 == pytest.approx(p2, abs=1e-12)


def test_observation_scan_grid_validation():
    with pytest.raises(ValueError, match="ascending"):
        observation_time_scan(1.0, 0.5, 10.0, 1.0, [30.0, 20.0])
    with pytest.raises(ValueError, match="beyond"):
        observation_time_scan(1.0, 0.5, 10.0, 1.0, [5.0, 20.0])


def test_observation_scan_columns():
    delta_e = delta_e_from_ev(4.37e-6)
    period = rabi_period(delta_e)
    tau, t_k = 9.46, 150.0
    grid = np.linspace(t_k + 10 * tau, t_k + 2.0 * period, 40)
    rows = observation_time_scan(delta_e, math.pi / 2, t_k, tau, grid)
    ordered = [r.p2_ordered for r in rows]
    interaction = [r.p2_nto_interaction for r in rows]
    schrod = [r.p2_nto_schrodinger for r in rows]
    # ordered column is already at its plateau just past the pulse
    assert max(ordered) - min(ordered) == 0.0
    # interaction-picture NTO constant after the support
    assert max(interaction) - min(interaction) < 1e-10
    # Schrodinger NTO damps: the tail is well below the early values
    assert schrod[-1] < 0.5 * max(schrod)


def test_preset_round_trip():
    s = preset_2s2p(9.46)
    assert s.delta_e == pytest.approx(4.37e-6 / 6.58211957e-4)
    assert rabi_period(s.delta_e) == pytest.approx(946.4, abs=0.1)
    assert s.pulses[0].t_k == 150.0
