"""Hermitian proxies of non-Hermitian matrices and their Pauli decomposition."""
from .hermitian import (
    HermitianProxy,
    augment,
    build_proxy,
    default_pad,
    hermitianize,
    qubits_for,
    svd_proxy,
)
from .pauli import PauliDecomposition, pauli_decompose, pauli_matrix

__all__ = [
    "HermitianProxy",
    "PauliDecomposition",
    "augment",
    "build_proxy",
    "default_pad",
    "hermitianize",
    "pauli_decompose",
    "pauli_matrix",
    "qubits_for",
    "svd_proxy",
]
