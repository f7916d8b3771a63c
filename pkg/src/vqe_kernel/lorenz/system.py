from __future__ import annotations

import math
from dataclasses import dataclass
from enum import Enum
from typing import List, Sequence, Tuple

import numpy as np

from vqe_kernel.errors import DomainError
from vqe_kernel.linalg import ComplexMatrix


class Branch(str, Enum):
    TRIVIAL = "trivial"
    PLUS = "plus"
    MINUS = "minus"


@dataclass(frozen=True)
class LorenzParams:
    """
    Lorenz system parameters.

    Attributes
    ----------
    sigma : float
        Prandtl number.
    rho : float
        Rayleigh number.
    beta : float
        Proportionality factor.
    """

    sigma: float = 10.0
    rho: float = 28.0
    beta: float = 8.0 / 3.0

    def __post_init__(self):
        for name in ("sigma", "rho", "beta"):
            value = getattr(self, name)
            if not (math.isfinite(value) and value > 0):
                raise DomainError(f"{name} must be a positive finite number", **{name: value})


@dataclass(frozen=True)
class EquilibriumPoint:
    branch: Branch
    x0: float
    y0: float
    z0: float

    @property
    def coordinates(self) -> Tuple[float, float, float]:
        return (self.x0, self.y0, self.z0)


def vector_field(p: LorenzParams, state: Sequence[float]) -> np.ndarray:
    """(dx/dt, dy/dt, dz/dt) at `state`; zero exactly at the equilibria."""
    x, y, z = state
    return np.array([p.sigma * (y - x), x * (p.rho - z) - y, x * y - p.beta * z])


def equilibria(p: LorenzParams) -> List[EquilibriumPoint]:
    points = [EquilibriumPoint(Branch.TRIVIAL, 0.0, 0.0, 0.0)]
    if p.rho > 1.0:
        r = math.sqrt(p.beta * (p.rho - 1.0))
        z0 = p.rho - 1.0
        points.append(EquilibriumPoint(Branch.PLUS, r, r, z0))
        points.append(EquilibriumPoint(Branch.MINUS, -r, -r, z0))
    return points


def equilibrium(p: LorenzParams, branch: Branch | str) -> EquilibriumPoint:
    branch = Branch(branch)
    for point in equilibria(p):
        if point.branch is branch:
            return point
    raise DomainError(
        f"no {branch.value} equilibrium for rho={p.rho} (non-trivial branches need rho > 1)",
        branch=branch.value,
        rho=p.rho,
    )


def jacobian(p: LorenzParams, e: EquilibriumPoint) -> ComplexMatrix:
    x0, y0, z0 = e.coordinates
    return np.array(
        [
            [-p.sigma, p.sigma, 0.0],
            [p.rho - z0, -1.0, -x0],
            [y0, x0, -p.beta],
        ],
        dtype=np.complex128,
    )
