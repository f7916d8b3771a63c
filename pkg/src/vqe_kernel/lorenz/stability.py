from __future__ import annotations

from enum import Enum
from typing import Optional, Sequence

from vqe_kernel.errors import DomainError

TOLERANCE_FACTOR = 1e-6


class StabilityClass(str, Enum):
    STABLE_NODE = "StableNode"
    UNSTABLE_NODE = "UnstableNode"
    UNSTABLE_SADDLE = "UnstableSaddle"
    STABLE_SPIRAL = "StableSpiral"
    UNSTABLE_SPIRAL = "UnstableSpiral"
    MARGINAL = "Marginal"


def classify_stability(
    eigenvalues: Sequence[complex],
    im_tol: Optional[float] = None,
    re_tol: Optional[float] = None,
) -> StabilityClass:
    """
    Classify an equilibrium from the three eigenvalues of its Jacobian.

    Values with |Im| ≤ im_tol count as real. Any |Re| ≤ re_tol makes the
    point Marginal. Real spectra are nodes (one sign) or saddles (mixed);
    spectra with a conjugate pair are spirals, stable when every real part
    is negative and unstable when the pair's real part is positive. A
    negative pair next to a positive real value is a saddle-focus and is
    reported as UnstableSaddle.
    """
    values = [complex(v) for v in eigenvalues]
    if len(values) != 3:
        raise DomainError(f"classify_stability expects 3 eigenvalues, got {len(values)}", count=len(values))

    scale = 1.0 + max(abs(v) for v in values)
    im_tol = TOLERANCE_FACTOR * scale if im_tol is None else im_tol
    re_tol = TOLERANCE_FACTOR * scale if re_tol is None else re_tol
    if im_tol <= 0 or re_tol <= 0:
        raise DomainError("tolerances must be positive", im_tol=im_tol, re_tol=re_tol)

    if any(abs(v.real) <= re_tol for v in values):
        return StabilityClass.MARGINAL

    complex_part = [v for v in values if abs(v.imag) > im_tol]
    if not complex_part:
        if all(v.real < 0 for v in values):
            return StabilityClass.STABLE_NODE
        if all(v.real > 0 for v in values):
            return StabilityClass.UNSTABLE_NODE
        return StabilityClass.UNSTABLE_SADDLE

    pair_re = sum(v.real for v in complex_part) / len(complex_part)
    if max(v.real for v in values) < 0:
        return StabilityClass.STABLE_SPIRAL
    if pair_re > 0:
        return StabilityClass.UNSTABLE_SPIRAL
    return StabilityClass.UNSTABLE_SADDLE
