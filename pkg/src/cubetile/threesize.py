"""Cube tilings using only the sides 1, 1/2 and 1/(2**d - 1).

An ``(a-1)``-cube is cut into unit cells; ``x1`` cells are halved along every
axis (``2**d - 1`` extra pieces each) and ``x2`` cells are cut into
``(2**d - 1)**d`` pieces (``(2**d - 1)**d - 1`` extra each).
"""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Optional

import numpy as np

from .core import Box, Tiling, ifloor_root
from .highdim import BelowThresholdError, MaterializationRefused, max_pieces
from .numtheory import sylvester_representation

__all__ = ["ThreeSizePlan", "theorem5_threshold", "theorem5_params", "theorem5_tiling"]


@dataclass(frozen=True)
class ThreeSizePlan:
    d: int
    n: int
    a: int
    k: int
    x1: int
    x2: int

    @property
    def fine(self) -> int:
        """Pieces per axis in the finest split, ``2**d - 1``."""
        return 2 ** self.d - 1

    @property
    def steps(self) -> tuple[int, int]:
        """Pieces gained by one halving and by one fine split."""
        return self.fine, self.fine ** self.d - 1

    @property
    def cells(self) -> int:
        return (self.a - 1) ** self.d

    def count(self) -> int:
        s1, s2 = self.steps
        return self.cells + self.x1 * s1 + self.x2 * s2


def theorem5_threshold(d: int) -> int:
    """Every ``n`` strictly above this value has a plan."""
    return 2 ** ((d + 3) * d)


def theorem5_params(d: int, n: int) -> ThreeSizePlan:
    if d < 3:
        raise ValueError("d must be >= 3")
    if n <= theorem5_threshold(d):
        raise BelowThresholdError(
            f"n={n} is not above the three-size threshold 2**{(d + 3) * d}")
    a = ifloor_root(n, d)
    assert a >= 2 ** (d + 3) and a ** d <= n < (a + 1) ** d
    k = n - (a - 1) ** d
    assert k >= 2 ** ((d + 1) * d), (d, n, k)
    fine = 2 ** d - 1
    x1, x2 = sylvester_representation(fine, fine ** d - 1, k)
    plan = ThreeSizePlan(d, n, a, k, x1, x2)
    assert plan.count() == n and x1 + x2 <= plan.cells
    return plan


def theorem5_tiling(plan: ThreeSizePlan, limit: Optional[int] = None) -> Tiling:
    """Emit the tiling: first ``x1`` cells (lexicographic) halved, next ``x2`` finely split."""
    limit = max_pieces() if limit is None else limit
    if plan.n > limit:
        raise MaterializationRefused(
            f"materialization refused: {plan.n} pieces exceeds limit {limit}; use the certificate")
    d, fine = plan.d, plan.fine
    scale = 2 * fine                       # halves and fine pieces share this denominator
    cells = np.indices((plan.a - 1,) * d).reshape(d, -1).T * scale

    lo, side = [], []
    start = 0
    for parts, ncells in ((2, plan.x1), (fine, plan.x2)):
        step = scale // parts
        offsets = np.indices((parts,) * d).reshape(d, -1).T * step
        block = cells[start:start + ncells]
        lo.append((block[:, None, :] + offsets[None, :, :]).reshape(-1, d))
        side.append(np.full(ncells * parts ** d, step, dtype=np.int64))
        start += ncells
    lo.append(cells[start:])
    side.append(np.full(len(cells) - start, scale, dtype=np.int64))
    outer = Box((Fraction(0),) * d, Fraction(plan.a - 1))
    return Tiling.from_scaled(d, outer, np.concatenate(lo), np.concatenate(side), scale)
