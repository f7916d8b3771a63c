import numpy as np
import pytest

from vqe_kernel.ansatz import (
    AnsatzParams,
    LayeredAnsatz,
    Statevector,
    UniversalTwoQubit,
    circuit_for,
    expectation,
    prepare_state,
    state_overlap,
)
from vqe_kernel.errors import DomainError, ShapeError
from vqe_kernel.oracle import hermitian_eig_reference


def test_zero_angles_prepare_ground_state():
    psi = prepare_state(AnsatzParams.zeros())
    assert np.array_equal(psi.amplitudes, np.array([1, 0, 0, 0], dtype=complex))


def test_universal_circuit_is_identity_at_zero():
    assert np.array_equal(UniversalTwoQubit().unitary(np.zeros(15)), np.eye(4, dtype=complex))


def test_ry_pi_on_most_significant_qubit_flips_it():
    angles = np.zeros(15)
    angles[7] = np.pi  # A3 = Rz(0)·Ry(π)·Rz(0)
    psi = prepare_state(angles)
    assert np.allclose(np.abs(psi.amplitudes), [0, 0, 1, 0], atol=1e-15)


def test_prepare_state_rejects_wrong_length():
    with pytest.raises(ShapeError):
        prepare_state(np.zeros(14))


def test_unitarity_and_norm(rng):
    circuit = UniversalTwoQubit()
    for _ in range(200):
        theta = rng.uniform(0, 2 * np.pi, 15)
        u = circuit.unitary(theta)
        assert np.linalg.norm(np.conj(u).T @ u - np.eye(4)) < 1e-12
        assert abs(np.linalg.norm(prepare_state(theta).amplitudes) - 1) < 1e-12


def test_batch_states_match_full_unitary(rng):
    circuit = UniversalTwoQubit()
    thetas = rng.uniform(0, 2 * np.pi, (5, 15))
    states = circuit.batch_states(thetas)
    for theta, state in zip(thetas, states):
        assert np.allclose(state, circuit.unitary(theta)[:, 0], atol=1e-13)


def test_expectation_examples(random_hermitian, rng):
    h = random_hermitian(4)
    assert expectation(Statevector(np.array([1, 0, 0, 0])), h) == pytest.approx(h[0, 0].real)
    assert expectation(Statevector(np.array([1, 0, 0, 0])), np.diag([1, 2, 3, 100])) == 1.0
    psi = prepare_state(rng.uniform(0, 2 * np.pi, 15))
    assert expectation(psi, np.eye(4)) == pytest.approx(1.0, abs=1e-12)


def test_expectation_errors(random_complex):
    psi = Statevector(np.array([1, 0, 0, 0]))
    with pytest.raises(ShapeError):
        expectation(psi, np.eye(2))
    with pytest.raises(DomainError):
        expectation(psi, random_complex(4))


def test_expectation_respects_variational_bounds(rng, random_hermitian):
    for _ in range(200):
        h = random_hermitian(4)
        psi = prepare_state(rng.uniform(0, 2 * np.pi, 15))
        low, *_, high = hermitian_eig_reference(h)
        value = expectation(psi, h)
        assert low - 1e-10 <= value <= high + 1e-10
        phased = Statevector(np.exp(0.7j) * psi.amplitudes)
        assert expectation(phased, h) == pytest.approx(value, abs=1e-12)


def test_state_overlap_examples():
    a = Statevector(np.array([1, 0, 0, 0]))
    b = Statevector(np.array([0, 1, 0, 0]))
    c = Statevector(np.array([1, 1, 0, 0]) / np.sqrt(2))
    assert state_overlap(a, a) == pytest.approx(1.0)
    assert state_overlap(a, b) == 0.0
    assert state_overlap(a, c) == pytest.approx(0.5)
    with pytest.raises(ShapeError):
        state_overlap(a, Statevector(np.array([1, 0])))


def test_statevector_requires_unit_norm():
    with pytest.raises(DomainError):
        Statevector(np.array([1, 1, 0, 0]))
    assert Statevector.normalized([1, 1, 0, 0]).amplitudes[0] == pytest.approx(1 / np.sqrt(2))


def test_circuit_for_picks_family():
    assert isinstance(circuit_for(2), UniversalTwoQubit)
    layered = circuit_for(3, layers=2)
    assert isinstance(layered, LayeredAnsatz)
    assert layered.n_params == 2 * (3 * 3 + 2)
    assert circuit_for(1).n_params == 3 * 3


def test_layered_ansatz_states_are_normalised(rng):
    circuit = LayeredAnsatz(3, layers=3)
    states = circuit.batch_states(rng.uniform(0, 2 * np.pi, (4, circuit.n_params)))
    assert states.shape == (4, 8)
    assert np.allclose(np.linalg.norm(states, axis=1), 1.0, atol=1e-12)
    zero = circuit.batch_states(np.zeros(circuit.n_params))[0]
    assert np.allclose(zero, np.eye(8)[0])
