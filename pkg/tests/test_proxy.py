import math

import numpy as np
import pytest

from vqe_kernel.errors import DomainError, ShapeError
from vqe_kernel.linalg import is_hermitian
from vqe_kernel.lorenz import LorenzParams, equilibrium, jacobian
from vqe_kernel.oracle import eig_reference, hermitian_eig_reference, svd_reference
from vqe_kernel.proxy import (
    augment,
    build_proxy,
    default_pad,
    hermitianize,
    pauli_decompose,
    pauli_matrix,
    qubits_for,
    svd_proxy,
)


def test_hermitianize_examples():
    assert np.allclose(hermitianize(np.diag([2, 5]), 2), np.diag([0, 9]))
    assert np.allclose(hermitianize([[0, 1], [0, 0]], 0), np.diag([0, 1]))
    j = jacobian(LorenzParams(rho=0.5), equilibrium(LorenzParams(rho=0.5), "trivial"))
    assert abs(hermitian_eig_reference(hermitianize(j, -8 / 3))[0]) < 1e-10


def test_hermitianize_rejects_rectangular():
    with pytest.raises(ShapeError):
        hermitianize(np.ones((2, 3)), 0)


def test_proxy_is_hermitian_psd_and_vanishes_at_eigenvalues(rng):
    for _ in range(200):
        n = int(rng.integers(2, 5))
        m = rng.standard_normal((n, n)) + 1j * rng.standard_normal((n, n))
        eps = complex(*rng.standard_normal(2))
        h = hermitianize(m, eps)
        assert is_hermitian(h, 1e-10)
        assert hermitian_eig_reference(h)[0] >= -1e-10
        scale = max(1.0, np.linalg.norm(m))
        for lam in eig_reference(m).eigenvalues:
            # min-eig of H(λ) is σ_min(M − λI)², read off the shifted matrix itself
            sigma_min = np.linalg.svd(m - lam * np.eye(n), compute_uv=False)[-1]
            assert sigma_min ** 2 < 1e-18 * scale ** 2
            assert hermitian_eig_reference(hermitianize(m, lam))[0] < 1e-12 * scale ** 2


def test_proxy_is_positive_away_from_eigenvalues(random_complex):
    m = random_complex(3)
    values = eig_reference(m).eigenvalues
    for lam in values:
        gap = min(abs(lam - other) for other in values if other != lam)
        assert hermitian_eig_reference(hermitianize(m, lam + 0.5 * gap))[0] > 0


def test_augment_examples():
    h = np.diag([0.0, 4.0, 9.0])
    out = augment(h, 100.0)
    assert out.shape == (4, 4)
    assert hermitian_eig_reference(out) == pytest.approx([0, 4, 9, 100])

    four = np.diag([1.0, 2.0, 3.0, 4.0])
    assert np.array_equal(augment(four, 5.0), four)

    five = augment(np.eye(5), 50.0)
    assert five.shape == (8, 8)
    assert np.array_equal(np.diag(five)[5:], [50, 50, 50])


def test_augment_preserves_lower_spectrum(random_complex):
    h = hermitianize(random_complex(3), 0.4j)
    d = default_pad(h, 0.0) * 10
    lower = [v for v in hermitian_eig_reference(augment(h, d)) if v < d - 1e-9]
    assert lower == pytest.approx(hermitian_eig_reference(h), abs=1e-10)


def test_augment_rejects_bad_input():
    with pytest.raises(DomainError):
        augment(np.eye(3), 0.0)
    with pytest.raises(DomainError):
        augment([[0, 1], [0, 0]], 1.0)


def test_default_pad_examples():
    assert default_pad(np.zeros((3, 3)), 0.0) == 1.0
    assert default_pad(np.eye(2), 1.0) == pytest.approx((math.sqrt(2) + 1) ** 2 + 1)


def test_default_pad_exceeds_proxy_minimum(lorenz_classic):
    j = jacobian(lorenz_classic, equilibrium(lorenz_classic, "trivial"))
    r = 25.0
    d = default_pad(j, r)
    for eps in (-r, r, r * 1j, 0.7 * r * (1 + 1j)):
        assert hermitian_eig_reference(hermitianize(j, eps))[0] < d


def test_qubits_for():
    assert [qubits_for(n) for n in (1, 2, 3, 4, 5, 8, 9)] == [1, 1, 2, 2, 3, 3, 4]


def test_build_proxy_record():
    proxy = build_proxy(np.diag([1.0, 2.0, 3.0]), 2.0, 7.0)
    assert proxy.qubits == 2 and proxy.original_dim == 3
    assert proxy.matrix.shape == (4, 4)
    assert proxy.matrix[3, 3] == 7.0
    assert proxy.epsilon == 2.0


def test_svd_proxy_examples(random_complex):
    assert np.allclose(svd_proxy(np.diag([3, 4])), np.diag([9, 16]))
    assert np.allclose(svd_proxy([[0, 1], [0, 0]]), np.diag([0, 1]))
    m = random_complex(3, 2)
    squares = sorted(s ** 2 for s in svd_reference(m))
    assert hermitian_eig_reference(svd_proxy(m)) == pytest.approx(squares, abs=1e-9)


def test_pauli_decompose_examples():
    ident = pauli_decompose(np.eye(4)).nonzero()
    assert ident == pytest.approx({"II": 1.0})

    d = 8.0
    coeffs = pauli_decompose(np.diag([0, 0, 0, d])).nonzero()
    assert coeffs == pytest.approx({"II": d / 4, "ZZ": d / 4, "IZ": -d / 4, "ZI": -d / 4})

    assert pauli_decompose(pauli_matrix("XX")).nonzero() == pytest.approx({"XX": 1.0})


def test_pauli_label_order_is_most_significant_first():
    assert np.allclose(pauli_matrix("IZ"), np.diag([1, -1, 1, -1]))


def test_pauli_reconstruction(random_hermitian):
    for _ in range(100):
        h = random_hermitian(4)
        decomposition = pauli_decompose(h)
        assert all(isinstance(c, float) for c in decomposition.coefficients.values())
        assert np.max(np.abs(decomposition.reconstruct() - h)) < 1e-10


def test_pauli_decompose_non_hermitian_keeps_complex_coefficients():
    decomposition = pauli_decompose(np.array([[0, 1], [0, 0]], dtype=complex))
    assert decomposition.nonzero() == pytest.approx({"X": 0.5, "Y": 0.5j})


def test_pauli_decompose_rejects_non_power_of_two():
    with pytest.raises(ShapeError):
        pauli_decompose(np.eye(3))
