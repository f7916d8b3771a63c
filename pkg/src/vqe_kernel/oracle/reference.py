# vqe_kernel/oracle/reference.py
"""
Reference spectra
──────────────────────────────────────────────
    • eig_reference           → roots of the characteristic polynomial
    • svd_reference           → √ of the Jacobi spectrum of M†M
──────────────────────────────────────────────
"""
from __future__ import annotations

import math
from dataclasses import dataclass
from enum import Enum
from typing import List, Tuple

import numpy as np

from vqe_kernel.errors import DomainError
from vqe_kernel.linalg import ComplexMatrix, adjoint, as_matrix, is_real
from vqe_kernel.oracle.charpoly import char_poly, poly_roots
from vqe_kernel.oracle.jacobi import hermitian_eig_reference

CONJUGATE_TOL = 1e-10
NEGATIVE_CLAMP = 1e-12


class OracleMethod(str, Enum):
    CHAR_POLY = "char-poly"
    JACOBI = "jacobi"


@dataclass(frozen=True)
class ReferenceSpectrum:
    eigenvalues: Tuple[complex, ...]
    method: OracleMethod

    def __len__(self) -> int:
        return len(self.eigenvalues)


def eig_reference(m: ComplexMatrix) -> ReferenceSpectrum:
    """Eigenvalues of a square matrix (with multiplicity); conjugation-closed for real input."""
    m = as_matrix(m)
    roots = poly_roots(char_poly(m))
    if is_real(m):
        scale = max(1.0, float(np.linalg.norm(m)))
        roots = _close_under_conjugation(roots, CONJUGATE_TOL * scale * 1e2)
    roots = sorted(roots, key=lambda r: (r.real, r.imag))
    return ReferenceSpectrum(eigenvalues=tuple(roots), method=OracleMethod.CHAR_POLY)


def _close_under_conjugation(roots: List[complex], real_tol: float) -> List[complex]:
    """Pair every non-real root with its nearest conjugate partner and symmetrise."""
    pending = list(roots)
    out: List[complex] = []
    while pending:
        z = pending.pop(0)
        if abs(z.imag) <= real_tol or not pending:
            out.append(complex(z.real, 0.0))
            continue
        j = min(range(len(pending)), key=lambda k: abs(pending[k] - z.conjugate()))
        w = pending.pop(j)
        mean = 0.5 * (z + w.conjugate())
        out.extend([mean, mean.conjugate()])
    return out


def svd_reference(m: ComplexMatrix) -> List[float]:
    """Singular values of any rectangular M, descending (one per column)."""
    m = as_matrix(m)
    gram = adjoint(m) @ m
    gram = 0.5 * (gram + np.conj(gram).T)
    floor = -NEGATIVE_CLAMP * max(1.0, float(np.linalg.norm(m)) ** 2)
    values: List[float] = []
    for lam in hermitian_eig_reference(gram):
        if lam < floor:
            raise DomainError("Gram matrix has a negative eigenvalue", eigenvalue=lam)
        values.append(math.sqrt(max(lam, 0.0)))
    return sorted(values, reverse=True)
