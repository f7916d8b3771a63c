"""
The two nested gradient descents.
──────────────────────────────────────────────
inner → θ minimising ⟨Ψ(θ)|H(ε)|Ψ(θ)⟩
outer → ε driving that minimum to zero
──────────────────────────────────────────────
"""
from .inner import InnerResult, fd_gradient, fd_gradients, minimize_expectation
from .linesearch import Step, backtrack, backtrack_batch, backtrack_runs
from .outer import (
    OuterResult,
    accept_threshold,
    envelope_gradient,
    find_eigenvalue,
    outer_finite_difference_gradient,
)

__all__ = [
    "InnerResult",
    "OuterResult",
    "Step",
    "accept_threshold",
    "backtrack",
    "backtrack_batch",
    "backtrack_runs",
    "envelope_gradient",
    "fd_gradient",
    "fd_gradients",
    "find_eigenvalue",
    "minimize_expectation",
    "outer_finite_difference_gradient",
]
