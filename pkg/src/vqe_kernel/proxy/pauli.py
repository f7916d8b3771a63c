from __future__ import annotations

from dataclasses import dataclass
from functools import reduce
from itertools import product
from typing import Dict

import numpy as np

from vqe_kernel.errors import ShapeError
from vqe_kernel.linalg import ComplexMatrix, as_matrix, is_hermitian

PAULIS = {
    "I": np.eye(2, dtype=np.complex128),
    "X": np.array([[0, 1], [1, 0]], dtype=np.complex128),
    "Y": np.array([[0, -1j], [1j, 0]], dtype=np.complex128),
    "Z": np.array([[1, 0], [0, -1]], dtype=np.complex128),
}

RESIDUE_TOL = 1e-10


@dataclass(frozen=True)
class PauliDecomposition:
    """
    H = Σ c_P · P over all q-fold Pauli strings.

    Character 0 of every label acts on the most significant qubit, so
    "IZ" is I ⊗ Z = diag(1, -1, 1, -1).
    """

    qubits: int
    coefficients: Dict[str, complex | float]

    def reconstruct(self) -> ComplexMatrix:
        size = 2 ** self.qubits
        out = np.zeros((size, size), dtype=np.complex128)
        for label, c in self.coefficients.items():
            if c != 0:
                out += c * pauli_matrix(label)
        return out

    def nonzero(self, tol: float = RESIDUE_TOL) -> Dict[str, complex | float]:
        return {k: v for k, v in self.coefficients.items() if abs(v) > tol}


def pauli_matrix(label: str) -> ComplexMatrix:
    try:
        return reduce(np.kron, (PAULIS[ch] for ch in label))
    except KeyError as exc:
        raise ShapeError(f"invalid Pauli label '{label}'", label=label) from exc


def pauli_decompose(h: ComplexMatrix) -> PauliDecomposition:
    """c_P = tr(P·H) / 2^q; real coefficients when H is Hermitian."""
    h = as_matrix(h)
    size = h.shape[0]
    q = size.bit_length() - 1
    if h.shape != (size, size) or size < 2 or 2 ** q != size:
        raise ShapeError(f"pauli_decompose needs a 2^q x 2^q matrix, got {h.shape}", shape=h.shape)

    hermitian = is_hermitian(h, RESIDUE_TOL)
    h_t = h.T
    coefficients: Dict[str, complex | float] = {}
    for letters in product(PAULIS, repeat=q):
        label = "".join(letters)
        c = complex(np.sum(pauli_matrix(label) * h_t)) / size
        if hermitian:
            # imaginary residue of a Hermitian input is rounding only
            coefficients[label] = c.real
        else:
            coefficients[label] = c
    return PauliDecomposition(qubits=q, coefficients=coefficients)
