"""Squares tiled by squares of at most two sizes.

Small counts use a framed unit square (:func:`lemma0_tiling`).  Larger counts
write ``n`` as ``p**2 - q**2 + r**2`` (one block) or ``p**2 - 2q**2 + 2r**2``
(two blocks) and replace ``q x q`` blocks of a ``p x p`` unit grid by ``r x r``
grids of squares of side ``q/r``.
"""
from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction

import numpy as np

from .core import Box, Tiling, grid_tiling, ifloor_root

__all__ = [
    "OutOfRangeError",
    "PlanarPlan",
    "claim1_decompose",
    "claim2_decompose",
    "theorem1_params",
    "theorem1_tiling",
    "lemma0_tiling",
    "plane_tiling",
    "rho_upper",
]

MIN_THEOREM1_N = 36


class OutOfRangeError(ValueError):
    """The requested count is outside what a construction covers."""


def _is_square(n: int) -> bool:
    return n >= 0 and math.isqrt(n) ** 2 == n


def claim1_decompose(n: int) -> tuple[int, int, str]:
    """Return ``(a, b, case)`` with ``a**2 < n < (a+1)**2`` and ``a < b <= 2a``.

    Case ``"i"`` means ``n = a**2 + b``; case ``"ii"`` means ``n = (a+1)**2 - b``.
    """
    if n < MIN_THEOREM1_N or _is_square(n):
        raise OutOfRangeError(f"n={n}: need a non-square n >= {MIN_THEOREM1_N}")
    a = ifloor_root(n, 2)
    if n > a * a + a:
        return a, n - a * a, "i"
    return a, (a + 1) ** 2 - n, "ii"


def claim2_decompose(b: int) -> tuple[int, str]:
    """Return ``(m, form)`` writing ``b`` as a difference of squares.

    form i: ``b = 2m+1 = (m+1)**2 - m**2``;
    form ii: ``b = 4m = (m+1)**2 - (m-1)**2``;
    form iii: ``b = 4m+2 = 2(m+1)**2 - 2m**2``.
    """
    if b < 7:
        raise OutOfRangeError(f"b={b}: need b >= 7")
    if b % 2:
        return (b - 1) // 2, "i"
    if b % 4 == 0:
        return b // 4, "ii"
    return (b - 2) // 4, "iii"


@dataclass(frozen=True)
class PlanarPlan:
    n: int
    a: int
    b: int
    m: int
    p: int
    q: int
    r: int
    blocks: int
    claim1_case: str
    claim2_form: str

    def count(self) -> int:
        return self.p ** 2 - self.blocks * self.q ** 2 + self.blocks * self.r ** 2

    @property
    def small_side(self) -> Fraction:
        """Side of the squares that replace each block."""
        return Fraction(self.q, self.r)


def theorem1_params(n: int) -> PlanarPlan:
    a, b, case = claim1_decompose(n)
    m, form = claim2_decompose(b)
    # (plus, minus): b = plus**2 - minus**2 (times 2 for form iii)
    plus, minus = {"i": (m + 1, m), "ii": (m + 1, m - 1), "iii": (m + 1, m)}[form]
    if case == "i":
        # n = a**2 + b: subtract the smaller square, add the larger
        p, q, r = a, minus, plus
    else:
        # n = (a+1)**2 - b: subtract the larger square, add the smaller
        p, q, r = a + 1, plus, minus
    blocks = 2 if form == "iii" else 1
    plan = PlanarPlan(n, a, b, m, p, q, r, blocks, case, form)
    assert plan.count() == n, plan
    assert (p >= 2 * q) if blocks == 2 else (p > q), plan
    return plan


def theorem1_tiling(n: int) -> Tiling:
    """A ``p x p`` square cut into exactly ``n`` squares of sides 1 and ``q/r``."""
    plan = theorem1_params(n)
    p, q, r = plan.p, plan.q, plan.r
    corners = [(0, 0)] if plan.blocks == 1 else [(0, 0), (p - q, p - q)]

    # everything in units of 1/r
    cells = np.indices((p, p)).reshape(2, -1).T
    keep = np.ones(len(cells), dtype=bool)
    for cx, cy in corners:
        keep &= ~((cells[:, 0] >= cx) & (cells[:, 0] < cx + q)
                  & (cells[:, 1] >= cy) & (cells[:, 1] < cy + q))
    lo = [cells[keep] * r]
    side = [np.full(int(keep.sum()), r, dtype=np.int64)]
    sub = np.indices((r, r)).reshape(2, -1).T * q
    for cx, cy in corners:
        lo.append(sub + np.array([cx * r, cy * r]))
        side.append(np.full(r * r, q, dtype=np.int64))
    outer = Box((Fraction(0), Fraction(0)), Fraction(p))
    return Tiling.from_scaled(2, outer, np.concatenate(lo), np.concatenate(side), r)


def lemma0_tiling(n: int) -> Tiling:
    """Two-size tiling for ``n == 4`` or ``n >= 6``.

    A unit square framed along its top and right by ``2k+1`` squares of side
    ``1/k`` gives ``2k+2`` pieces; quartering the unit square gives ``2k+5``.
    """
    if n == 5:
        raise OutOfRangeError("a square cannot be cut into 5 squares")
    if n < 4:
        raise OutOfRangeError(f"n={n}: need n == 4 or n >= 6")
    if n % 2 == 0:
        k, split = (n - 2) // 2, False
    else:
        k, split = (n - 5) // 2, True

    # units of 1/(2k)
    unit = 2 * k
    lo, side = [], []
    if split:
        for x in (0, k):
            for y in (0, k):
                lo.append((x, y))
                side.append(k)
    else:
        lo.append((0, 0))
        side.append(unit)
    for i in range(k + 1):
        lo.append((2 * i, unit))
        side.append(2)
    for j in range(k):
        lo.append((unit, 2 * j))
        side.append(2)
    outer = Box((Fraction(0), Fraction(0)), 1 + Fraction(1, k))
    return Tiling.from_scaled(2, outer, np.array(lo, dtype=np.int64),
                              np.array(side, dtype=np.int64), unit)


def plane_tiling(n: int) -> Tiling:
    """Pick the construction for ``n``: uniform grid, small-count frame, or block swap."""
    if n >= 1 and _is_square(n):
        return grid_tiling(2, math.isqrt(n))
    if n < MIN_THEOREM1_N:
        return lemma0_tiling(n)
    return theorem1_tiling(n)


def rho_upper(n: int) -> Fraction:
    """Max/min side ratio of the block-swap tiling for ``n`` (1 for squares).

    This is an upper bound for the best ratio achievable with ``n`` squares.
    """
    if n < MIN_THEOREM1_N:
        raise OutOfRangeError(f"n={n}: need n >= {MIN_THEOREM1_N}")
    if _is_square(n):
        return Fraction(1)
    plan = theorem1_params(n)
    return Fraction(max(plan.q, plan.r), min(plan.q, plan.r))
