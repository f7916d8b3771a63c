"""
Armijo backtracking
──────────────────────────────────────────────
Accept the first trial step t = t0·f^k (f = armijo_factor) satisfying

    φ(x − t·g) ≤ φ(x) − c₁·t·‖g‖²

    • backtrack        → sequential, for expensive objectives (outer loop)
    • backtrack_runs   → several independent searches at once; trials are
                         evaluated in chunks of LINE_SEARCH_CHUNK per call
                         and each run takes the step the sequential search
                         would
    • backtrack_batch  → backtrack_runs for a single run
──────────────────────────────────────────────
"""
from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Callable, Generic, Optional, Tuple, TypeVar

import numpy as np

from vqe_kernel.config import GDConfig

T = TypeVar("T")

LINE_SEARCH_CHUNK = 8


@dataclass(frozen=True)
class Step(Generic[T]):
    size: float
    point: np.ndarray
    value: float
    payload: Optional[T] = None


def trial_steps(t0: float, cfg: GDConfig) -> np.ndarray:
    count = 1 + int(math.floor(math.log(cfg.min_step / t0) / math.log(cfg.armijo_factor)))
    count = max(1, min(count, cfg.max_backtracks + 1))
    return t0 * cfg.armijo_factor ** np.arange(count)


def sufficient(new_value: float, value: float, t: float, grad_sq: float, cfg: GDConfig) -> bool:
    return new_value <= value - cfg.sufficient_decrease * t * grad_sq


def backtrack_runs(
    objective: Callable[[np.ndarray], np.ndarray],
    xs: np.ndarray,
    values: np.ndarray,
    grads: np.ndarray,
    t0s: np.ndarray,
    cfg: GDConfig,
) -> Tuple[np.ndarray, np.ndarray, np.ndarray]:
    """
    Armijo search for each row of xs along −grads.
    Returns (sizes, points, new_values); sizes is NaN where no trial passed
    and the point and value of that row are left unchanged.
    """
    values = np.asarray(values, dtype=np.float64)
    runs = xs.shape[0]
    grids = [trial_steps(float(t0), cfg) for t0 in t0s]
    depth = max(len(g) for g in grids)
    steps = np.full((runs, depth), np.nan)
    for r, grid in enumerate(grids):
        steps[r, : len(grid)] = grid
    grad_sq = np.einsum("rp,rp->r", grads, grads)

    sizes = np.full(runs, np.nan)
    points = xs.copy()
    new_values = values.copy()
    pending = np.arange(runs)

    for start in range(0, depth, LINE_SEARCH_CHUNK):
        if pending.size == 0:
            break
        block = steps[pending, start:start + LINE_SEARCH_CHUNK]
        rows, cols = np.nonzero(~np.isnan(block))
        if rows.size == 0:
            break
        owner = pending[rows]
        t = block[rows, cols]
        trial_points = xs[owner] - t[:, None] * grads[owner]
        trial_values = objective(trial_points)
        ok = trial_values <= values[owner] - cfg.sufficient_decrease * t * grad_sq[owner]

        width = block.shape[1]
        flat = rows * width + cols
        passed = np.zeros(block.size, dtype=bool)
        passed[flat[ok]] = True
        passed = passed.reshape(block.shape)
        slot = np.full(block.size, -1)
        slot[flat] = np.arange(flat.size)
        slot = slot.reshape(block.shape)

        hit = passed.any(axis=1)
        first = passed.argmax(axis=1)
        for local in np.flatnonzero(hit):
            k = slot[local, first[local]]
            run = pending[local]
            sizes[run] = t[k]
            points[run] = trial_points[k]
            new_values[run] = trial_values[k]
        pending = pending[~hit]

    return sizes, points, new_values


def backtrack_batch(
    objective: Callable[[np.ndarray], np.ndarray],
    x: np.ndarray,
    value: float,
    grad: np.ndarray,
    t0: float,
    cfg: GDConfig,
) -> Optional[Step]:
    sizes, points, values = backtrack_runs(
        objective, x[None, :], np.array([value]), grad[None, :], np.array([t0]), cfg,
    )
    if np.isnan(sizes[0]):
        return None
    return Step(size=float(sizes[0]), point=points[0], value=float(values[0]))


def backtrack(
    objective: Callable[[np.ndarray], tuple[float, T]],
    x: np.ndarray,
    value: float,
    grad: np.ndarray,
    t0: float,
    cfg: GDConfig,
) -> Optional[Step[T]]:
    grad_sq = float(grad @ grad)
    for t in trial_steps(t0, cfg):
        point = x - t * grad
        new_value, payload = objective(point)
        if sufficient(new_value, value, float(t), grad_sq, cfg):
            return Step(size=float(t), point=point, value=new_value, payload=payload)
    return None


def next_trial(accepted: float, cfg: GDConfig) -> float:
    """First trial of the next search: learning_rate again, or the grown last step."""
    if cfg.step_growth == 1.0:
        return cfg.learning_rate
    return min(cfg.max_step, accepted * cfg.step_growth)
