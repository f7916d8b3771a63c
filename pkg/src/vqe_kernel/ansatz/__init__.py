"""
Exact statevector simulation of the trial-state circuits.
──────────────────────────────────────────────
The "quantum routine": prepare |Ψ(θ)⟩ and measure ⟨Ψ(θ)|H|Ψ(θ)⟩.
──────────────────────────────────────────────
"""
from .circuits import Circuit, LayeredAnsatz, UniversalTwoQubit, circuit_for
from .state import (
    AnsatzParams,
    Statevector,
    batch_expectation,
    expectation,
    prepare_state,
    state_overlap,
)

__all__ = [
    "AnsatzParams",
    "Circuit",
    "LayeredAnsatz",
    "Statevector",
    "UniversalTwoQubit",
    "batch_expectation",
    "circuit_for",
    "expectation",
    "prepare_state",
    "state_overlap",
]
