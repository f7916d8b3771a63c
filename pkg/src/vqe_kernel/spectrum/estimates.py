# vqe_kernel/spectrum/estimates.py
from __future__ import annotations

from dataclasses import dataclass, field, replace
from enum import Enum
from typing import List, Optional, Tuple

from vqe_kernel.errors import DomainError
from vqe_kernel.lorenz import StabilityClass


@dataclass(frozen=True)
class EigenvalueEstimate:
    value: complex
    residual: float
    start_point: complex
    conjugate_completed: bool = False

    def conjugate(self) -> "EigenvalueEstimate":
        return replace(self, value=self.value.conjugate(), conjugate_completed=True)


class DedupDecision(str, Enum):
    APPENDED = "appended"
    ABSORBED = "absorbed"   # an existing representative had the lower residual
    REPLACED = "replaced"   # the candidate took over an existing slot


def dedup(
    existing: List[EigenvalueEstimate],
    candidate: EigenvalueEstimate,
    delta: float,
) -> Tuple[List[EigenvalueEstimate], DedupDecision]:
    """Merge one candidate into a list of distinct estimates (returns a new list)."""
    if not delta > 0:
        raise DomainError("dedup radius must be positive", delta=delta)
    out = list(existing)
    near = [i for i, e in enumerate(out) if abs(e.value - candidate.value) <= delta]
    if not near:
        out.append(candidate)
        return out, DedupDecision.APPENDED

    index = min(near, key=lambda i: abs(out[i].value - candidate.value))
    if candidate.residual < out[index].residual:
        out[index] = candidate
        return out, DedupDecision.REPLACED
    return out, DedupDecision.ABSORBED


@dataclass(frozen=True)
class SpectrumReport:
    """
    Outcome of one grid search.

    Attributes
    ----------
    matrix_dim : int
        n.
    estimates : list of EigenvalueEstimate
        Accepted, distinct values sorted by (Re, Im); conjugates included.
    complete : bool
        True when exactly n values were collected; more than n means one is
        spurious and a note says so.
    starts_used : int
        Grid points actually descended from.
    stability : StabilityClass, optional
        Filled in by callers that know the matrix is a 3x3 Jacobian.
    suspect : list of EigenvalueEstimate
        Candidates under the acceptance threshold that failed the polishing
        check (likely pseudospectral minima); never counted.
    notes : list of str
    """

    matrix_dim: int
    estimates: List[EigenvalueEstimate]
    complete: bool
    starts_used: int
    stability: Optional[StabilityClass] = None
    suspect: List[EigenvalueEstimate] = field(default_factory=list)
    notes: List[str] = field(default_factory=list)

    def values(self) -> List[complex]:
        return [e.value for e in self.estimates]

    def with_stability(self, stability: StabilityClass) -> "SpectrumReport":
        return replace(self, stability=stability)
