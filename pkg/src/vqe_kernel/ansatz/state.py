from __future__ import annotations

from dataclasses import dataclass, field
from typing import Sequence, Tuple

import numpy as np

from vqe_kernel.ansatz.circuits import UniversalTwoQubit
from vqe_kernel.errors import DomainError, ShapeError
from vqe_kernel.linalg import ComplexMatrix, as_matrix, as_vector, inner_product, is_hermitian

NORM_TOL = 1e-10
HERMITIAN_TOL = 1e-10

_UNIVERSAL = UniversalTwoQubit()


@dataclass(frozen=True)
class AnsatzParams:
    """Circuit angles θ in radians (unconstrained)."""

    angles: Tuple[float, ...]

    @classmethod
    def of(cls, values: Sequence[float]) -> "AnsatzParams":
        return cls(tuple(float(v) for v in np.asarray(values, dtype=np.float64).ravel()))

    @classmethod
    def zeros(cls, n: int = UniversalTwoQubit.n_params) -> "AnsatzParams":
        return cls((0.0,) * n)

    def array(self) -> np.ndarray:
        return np.asarray(self.angles, dtype=np.float64)

    def __len__(self) -> int:
        return len(self.angles)


@dataclass(frozen=True, eq=False)
class Statevector:
    """Unit-norm amplitudes of a q-qubit register, qubit 0 most significant."""

    amplitudes: np.ndarray
    qubits: int = field(init=False)

    def __post_init__(self):
        amps = as_vector(self.amplitudes)
        size = amps.shape[0]
        q = size.bit_length() - 1
        if 2 ** q != size or q < 1:
            raise ShapeError(f"statevector length must be 2^q, got {size}", size=size)
        if abs(np.linalg.norm(amps) - 1.0) > NORM_TOL:
            raise DomainError("statevector must have unit norm", norm=float(np.linalg.norm(amps)))
        amps.setflags(write=False)
        object.__setattr__(self, "amplitudes", amps)
        object.__setattr__(self, "qubits", q)

    @classmethod
    def normalized(cls, amplitudes) -> "Statevector":
        amps = as_vector(amplitudes)
        norm = np.linalg.norm(amps)
        if norm == 0:
            raise DomainError("cannot normalise the zero vector")
        return cls(amps / norm)

    @property
    def dim(self) -> int:
        return self.amplitudes.shape[0]


def prepare_state(theta: AnsatzParams | Sequence[float]) -> Statevector:
    """U(θ)|00⟩ for the 15-angle universal two-qubit circuit."""
    angles = theta.array() if isinstance(theta, AnsatzParams) else np.asarray(theta, dtype=np.float64)
    if angles.ndim != 1 or angles.shape[0] != _UNIVERSAL.n_params:
        raise ShapeError(f"prepare_state takes {_UNIVERSAL.n_params} angles, got {angles.size}", got=int(angles.size))
    return Statevector(_UNIVERSAL.batch_states(angles)[0])


def batch_expectation(states: np.ndarray, h: np.ndarray) -> np.ndarray:
    """Re⟨ψ_b|H|ψ_b⟩ for a (B, dim) batch; no validation (hot path)."""
    return np.einsum("bi,ij,bj->b", np.conj(states), h, states).real


def expectation(psi: Statevector, h: ComplexMatrix) -> float:
    h = as_matrix(h)
    if h.shape != (psi.dim, psi.dim):
        raise ShapeError(f"Hamiltonian {h.shape} does not act on a {psi.dim}-dim state", shape=h.shape)
    scale = max(1.0, float(np.linalg.norm(h)))
    if not is_hermitian(h, HERMITIAN_TOL * scale):
        raise DomainError("expectation needs a Hermitian matrix")
    value = inner_product(psi.amplitudes, h @ psi.amplitudes)
    if abs(value.imag) > HERMITIAN_TOL * scale:
        raise DomainError("expectation value has an imaginary residue", imag=value.imag)
    return value.real


def state_overlap(a: Statevector, b: Statevector) -> float:
    if a.dim != b.dim:
        raise ShapeError(f"dimension mismatch {a.dim} vs {b.dim}", left=a.dim, right=b.dim)
    return min(1.0, abs(inner_product(a.amplitudes, b.amplitudes)) ** 2)
