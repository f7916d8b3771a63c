# vqe_kernel/spectrum/grid.py
from __future__ import annotations

from dataclasses import dataclass
from typing import Iterator

import numpy as np

from vqe_kernel.errors import DomainError, ShapeError
from vqe_kernel.linalg import ComplexMatrix, as_matrix, frobenius_norm, is_real

REAL_COUNTS = (9, 5)
COMPLEX_COUNTS = (9, 9)


@dataclass(frozen=True)
class SearchGrid:
    """
    Starting points for the outer loop.

    A count of 1 on an axis collapses it to the midpoint of its bounds, so
    equal bounds are only allowed there.
    """

    re_min: float
    re_max: float
    im_min: float
    im_max: float
    re_count: int
    im_count: int

    def __post_init__(self):
        if self.re_count < 1 or self.im_count < 1:
            raise DomainError("grid counts must be positive", re_count=self.re_count, im_count=self.im_count)
        if not np.all(np.isfinite([self.re_min, self.re_max, self.im_min, self.im_max])):
            raise DomainError("grid bounds must be finite")
        if self.re_min > self.re_max or (self.re_min == self.re_max and self.re_count > 1):
            raise DomainError("need re_min < re_max", re_min=self.re_min, re_max=self.re_max)
        if self.im_min > self.im_max:
            raise DomainError("need im_min <= im_max", im_min=self.im_min, im_max=self.im_max)

    @staticmethod
    def _axis(lo: float, hi: float, count: int) -> np.ndarray:
        if count == 1:
            return np.array([0.5 * (lo + hi)])
        return np.linspace(lo, hi, count)

    @property
    def re_axis(self) -> np.ndarray:
        return self._axis(self.re_min, self.re_max, self.re_count)

    @property
    def im_axis(self) -> np.ndarray:
        return self._axis(self.im_min, self.im_max, self.im_count)

    @property
    def radius(self) -> float:
        """Largest |ε| on the grid."""
        return float(np.hypot(max(abs(self.re_min), abs(self.re_max)), max(abs(self.im_min), abs(self.im_max))))

    def points(self) -> Iterator[complex]:
        """Row-major: Im ascending in the outer loop, Re ascending inside."""
        re_axis = self.re_axis
        for im in self.im_axis:
            for re in re_axis:
                yield complex(float(re), float(im))

    def __len__(self) -> int:
        return self.re_count * self.im_count


def search_bounds(m: ComplexMatrix) -> SearchGrid:
    """R = min(‖M‖_F, max Gershgorin radius + max |m_ii|); upper half-plane only for real M."""
    m = as_matrix(m)
    if m.shape[0] != m.shape[1]:
        raise ShapeError(f"search_bounds needs a square matrix, got {m.shape}", shape=m.shape)
    magnitudes = np.abs(m)
    diagonal = np.diag(magnitudes)
    gershgorin = float(np.max(magnitudes.sum(axis=1) - diagonal)) + float(np.max(diagonal))
    r = min(frobenius_norm(m), gershgorin)

    if r == 0.0:
        return SearchGrid(0.0, 0.0, 0.0, 0.0, 1, 1)
    if is_real(m):
        re_count, im_count = REAL_COUNTS
        return SearchGrid(-r, r, 0.0, r, re_count, im_count)
    re_count, im_count = COMPLEX_COUNTS
    return SearchGrid(-r, r, -r, r, re_count, im_count)
