# vqe_kernel/ansatz/circuits.py
"""
Parameterised circuits, simulated exactly
──────────────────────────────────────────────
    • UniversalTwoQubit → U(θ) = (A₃⊗A₄)·N(α,β,γ)·(A₁⊗A₂), 15 angles
    • LayeredAnsatz     → L × [Euler triple on every qubit, then a
                          nearest-neighbour chain of exp(iγ_k Z_k Z_{k+1})]

Amplitude index convention: qubit 0 is the most significant bit.
Every circuit maps a (B, n_params) batch of angles to a (B, 2^q) batch of
states in one vectorised pass.
──────────────────────────────────────────────
"""
from __future__ import annotations

from typing import Protocol

import numpy as np

from vqe_kernel.ansatz.gates import euler, interaction
from vqe_kernel.errors import ShapeError
from vqe_kernel.registry import register, resolve


class Circuit(Protocol):
    qubits: int
    n_params: int

    def batch_states(self, thetas: np.ndarray) -> np.ndarray: ...


def _check_batch(thetas: np.ndarray, n_params: int) -> np.ndarray:
    thetas = np.atleast_2d(np.asarray(thetas, dtype=np.float64))
    if thetas.shape[-1] != n_params:
        raise ShapeError(f"circuit takes {n_params} angles, got {thetas.shape[-1]}", expected=n_params)
    return thetas


class UniversalTwoQubit:
    """
    Angle layout: [A₁(a,b,c), A₂(a,b,c), A₃(a,b,c), A₄(a,b,c), α, β, γ].
    A₁, A₃ act on qubit 0; A₂, A₄ on qubit 1.
    """

    qubits = 2
    n_params = 15

    def blocks(self, thetas: np.ndarray):
        t = _check_batch(thetas, self.n_params)
        singles = euler(t[:, 0:12:3], t[:, 1:12:3], t[:, 2:12:3])  # (B, 4, 2, 2)
        return singles, interaction(t[:, 12], t[:, 13], t[:, 14])

    def unitary(self, theta) -> np.ndarray:
        singles, n = self.blocks(theta)
        a1, a2, a3, a4 = (singles[0, k] for k in range(4))
        return np.kron(a3, a4) @ n[0] @ np.kron(a1, a2)

    def batch_states(self, thetas: np.ndarray) -> np.ndarray:
        singles, n = self.blocks(thetas)
        batch = singles.shape[0]
        # (A₁⊗A₂)|00⟩ only needs the first columns
        v = np.einsum("bi,bj->bij", singles[:, 0, :, 0], singles[:, 1, :, 0]).reshape(batch, 4)
        w = np.einsum("bij,bj->bi", n, v).reshape(batch, 2, 2)
        psi = np.einsum("bik,bkl,bjl->bij", singles[:, 2], w, singles[:, 3])
        return psi.reshape(batch, 4)


class LayeredAnsatz:
    """Angles per layer: 3 per qubit (qubit 0 first) then q−1 entangling γ_k."""

    def __init__(self, qubits: int, layers: int = 3):
        if qubits < 1 or layers < 1:
            raise ShapeError("layered ansatz needs at least one qubit and one layer", qubits=qubits, layers=layers)
        self.qubits = qubits
        self.layers = layers
        self.per_layer = 3 * qubits + (qubits - 1)
        self.n_params = layers * self.per_layer

        index = np.arange(2 ** qubits)
        bits = (index[None, :] >> (qubits - 1 - np.arange(qubits))[:, None]) & 1
        # Z_k Z_{k+1} eigenvalue per basis state
        self._zz = np.array([1 - 2 * (bits[k] ^ bits[k + 1]) for k in range(qubits - 1)], dtype=np.float64)

    def batch_states(self, thetas: np.ndarray) -> np.ndarray:
        t = _check_batch(thetas, self.n_params)
        batch, q = t.shape[0], self.qubits
        psi = np.zeros((batch,) + (2,) * q, dtype=np.complex128)
        psi[(slice(None),) + (0,) * q] = 1.0

        for layer in range(self.layers):
            chunk = t[:, layer * self.per_layer:(layer + 1) * self.per_layer]
            rotations = euler(chunk[:, 0:3 * q:3], chunk[:, 1:3 * q:3], chunk[:, 2:3 * q:3])  # (B, q, 2, 2)
            for k in range(q):
                moved = np.moveaxis(psi, k + 1, 1)
                shape = moved.shape
                moved = np.einsum("bij,bjr->bir", rotations[:, k], moved.reshape(batch, 2, -1)).reshape(shape)
                psi = np.moveaxis(moved, 1, k + 1)
            if q > 1:
                gammas = chunk[:, 3 * q:]
                phase = np.exp(1j * (gammas @ self._zz))  # (B, 2^q)
                psi = (psi.reshape(batch, -1) * phase).reshape(psi.shape)

        return psi.reshape(batch, 2 ** q)


register("ansatz", "universal2q", lambda qubits, layers: UniversalTwoQubit())
register("ansatz", "layered", lambda qubits, layers: LayeredAnsatz(qubits, layers))


def circuit_for(qubits: int, layers: int = 3) -> Circuit:
    """The universal circuit for two qubits, the layered one otherwise."""
    name = "universal2q" if qubits == 2 else "layered"
    return resolve("ansatz", name)(qubits, layers)
