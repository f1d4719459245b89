import math

import numpy as np
import pytest
from hypothesis import given, strategies as st

from kickedqubit.propagators import KickSpec, single_kick
from kickedqubit.su2 import (
    ID2,
    SIGMA_X,
    SIGMA_Y,
    SIGMA_Z,
    PauliAxis,
    apply,
    bloch_components,
    compose,
    dagger,
    exp_i_phi_sigma_u,
    exp_minus_i_generator,
    pauli,
    probabilities,
    sigma_dot_u,
    unitarity_defect,
)


def taylor_exponential(phi, u, terms=16):
    """Independent oracle: truncated series of exp(i phi sigma.u)."""
    a = 1j * phi * sigma_dot_u(u)
    total = np.eye(2, dtype=complex)
    power = np.eye(2, dtype=complex)
    for n in range(1, terms):
        power = power @ a / n
        total = total + power
    return total


def random_unitary(rng):
    phi = rng.uniform(-math.pi, math.pi)
    v = rng.normal(size=3)
    return exp_i_phi_sigma_u(phi, v / np.linalg.norm(v))


def test_pauli_matrices_standard():
    np.testing.assert_array_equal(pauli(PauliAxis.X), [[0, 1], [1, 0]])
    np.testing.assert_array_equal(pauli(PauliAxis.Z), [[1, 0], [0, -1]])
    np.testing.assert_array_equal(pauli(PauliAxis.Y), [[0, -1j], [1j, 0]])


@pytest.mark.parametrize("axis", list(PauliAxis))
def test_pauli_hermitian_traceless_involutive(axis):
    s = pauli(axis)
    np.testing.assert_array_equal(s, dagger(s))
    assert np.trace(s) == 0
    np.testing.assert_array_equal(s @ s, ID2)


def test_exp_zero_angle_is_identity():
    np.testing.assert_array_equal(exp_i_phi_sigma_u(0.0, (0, 0, 1)), ID2)


def test_exp_half_pi_about_z():
    np.testing.assert_allclose(
        exp_i_phi_sigma_u(math.pi / 2, (0, 0, 1)), np.diag([1j, -1j]), atol=1e-15
    )


def test_exp_quarter_pi_about_x_matches_taylor_oracle():
    got = exp_i_phi_sigma_u(math.pi / 4, (1, 0, 0))
    np.testing.assert_allclose(got, taylor_exponential(math.pi / 4, (1, 0, 0)), atol=1e-12)


def test_exp_rejects_unnormalized_axis():
    with pytest.raises(ValueError):
        exp_i_phi_sigma_u(0.3, (1.0, 1.0, 0.0))
    with pytest.raises(ValueError):
        exp_i_phi_sigma_u(math.nan, (1.0, 0.0, 0.0))


def test_compose_identity_and_inverse():
    rng = np.random.default_rng(7)
    u = random_unitary(rng)
    np.testing.assert_allclose(compose(ID2, u), u, atol=1e-15)
    np.testing.assert_allclose(compose(u, dagger(u)), ID2, atol=1e-14)


def test_compose_order_matters_for_paulis():
    np.testing.assert_allclose(compose(SIGMA_X, SIGMA_Y), 1j * SIGMA_Z, atol=1e-15)
    np.testing.assert_allclose(compose(SIGMA_Y, SIGMA_X), -1j * SIGMA_Z, atol=1e-15)


def test_dagger_examples():
    np.testing.assert_array_equal(dagger(ID2), ID2)
    theta = 0.8
    d = np.diag([np.exp(1j * theta), np.exp(-1j * theta)])
    np.testing.assert_allclose(dagger(d), np.diag([np.exp(-1j * theta), np.exp(1j * theta)]))


def test_dagger_of_kick_propagator_inverts_it():
    u = single_kick(1.0, KickSpec(0.3, 2.0))
    np.testing.assert_allclose(dagger(u) @ u, ID2, atol=1e-14)


def test_apply_examples():
    e1 = np.array([1.0, 0.0], dtype=complex)
    np.testing.assert_array_equal(apply(ID2, e1), e1)
    np.testing.assert_array_equal(apply(SIGMA_X, e1), [0, 1])


def test_full_transfer_kick():
    # An area pi/2 kick moves all population to the second level.
    s = apply(single_kick(0.7, KickSpec(math.pi / 2, 1.3)), np.array([1.0, 0.0]))
    assert probabilities(s)[1] == pytest.approx(1.0, abs=1e-14)


def test_probabilities_examples():
    assert probabilities(np.array([1.0, 0.0])) == (1.0, 0.0)
    s = np.array([(1 + 1j) / 2, (1 - 1j) / 2])
    assert probabilities(s) == pytest.approx((0.5, 0.5), abs=1e-15)


def test_probabilities_of_kicked_state():
    s = apply(single_kick(1.0, KickSpec(math.pi / 3, 0.5)), np.array([1.0, 0.0]))
    p1, p2 = probabilities(s)
    assert p1 == pytest.approx(0.25, abs=1e-14)
    assert p2 == pytest.approx(0.75, abs=1e-14)


@given(
    phi=st.floats(-10, 10),
    vx=st.floats(-1, 1),
    vy=st.floats(-1, 1),
    vz=st.floats(0.1, 1),
)
def test_exp_inverse_property(phi, vx, vy, vz):
    v = np.array([vx, vy, vz])
    u = v / np.linalg.norm(v)
    prod = exp_i_phi_sigma_u(phi, u) @ exp_i_phi_sigma_u(-phi, u)
    np.testing.assert_allclose(prod, ID2, atol=1e-12)


def test_compose_associative_over_random_triples():
    rng = np.random.default_rng(42)
    for _ in range(25):
        a, b, c = (random_unitary(rng) for _ in range(3))
        left = compose(compose(a, b), c)
        right = compose(a, compose(b, c))
        np.testing.assert_allclose(left, right, atol=1e-12)


def test_probabilities_preserved_by_propagators():
    rng = np.random.default_rng(3)
    for _ in range(25):
        u = random_unitary(rng)
        raw = rng.normal(size=2) + 1j * rng.normal(size=2)
        state = raw / np.linalg.norm(raw)
        p1, p2 = probabilities(apply(u, state))
        assert p1 + p2 == pytest.approx(1.0, abs=1e-12)


def test_dagger_antidistributes_over_compose():
    rng = np.random.default_rng(11)
    for _ in range(25):
        a, b = random_unitary(rng), random_unitary(rng)
        np.testing.assert_allclose(
            dagger(compose(a, b)), compose(dagger(b), dagger(a)), atol=1e-12
        )


def test_unitarity_defect_detects_nonunitary():
    assert unitarity_defect(ID2) == 0.0
    assert unitarity_defect(2.0 * ID2) == pytest.approx(3.0)


def test_generator_roundtrip():
    g = 0.3 * SIGMA_X - 1.1 * SIGMA_Y + 0.25 * SIGMA_Z
    assert bloch_components(g) == pytest.approx((0.3, -1.1, 0.25))
    np.testing.assert_allclose(exp_minus_i_generator(g, 2.0), _expm(-2j * g), atol=1e-12)


def _expm(a: np.ndarray) -> np.ndarray:
    """Series matrix exponential, independent of the SU(2) identity."""
    total = np.eye(2, dtype=complex)
    power = np.eye(2, dtype=complex)
    for n in range(1, 30):
        power = power @ a / n
        total = total + power
    return total


def test_zero_generator_gives_identity():
    np.testing.assert_array_equal(exp_minus_i_generator(np.zeros((2, 2)), 5.0), ID2)
