"""Cutting the d-cube into exactly n cubes of nearly equal size.

The unit cube is first cut into ``a**(2d)`` small cells of side ``1/a**2``.
Each cell is then cut into ``m**d`` equal cubes, except that ``x_i`` cells are
cut into ``(m+i)**d`` (``i = 1..d``) and ``y1`` cells into ``(m-1)**d``.  A
:class:`CubePlan` records the integers; :func:`materialize` emits the geometry.
"""
from __future__ import annotations

import math
import os
from dataclasses import dataclass
from fractions import Fraction
from typing import Optional

import numpy as np

from .core import Box, Tiling, ifloor_root
from .numtheory import (gcd_family_check, power_differences, reduce_representation,
                        signed_representation)

__all__ = [
    "BelowThresholdError",
    "MaterializationRefused",
    "CubePlan",
    "DEFAULT_MAX_PIECES",
    "max_pieces",
    "minimum_base",
    "theorem2_threshold",
    "theorem2_params",
    "plan_sizes",
    "plan_ratio",
    "materialize",
]

DEFAULT_MAX_PIECES = 5_000_000


class BelowThresholdError(ValueError):
    """n is too small for the construction's preconditions."""


class MaterializationRefused(ValueError):
    """The tiling is too large to emit; use the certificate instead."""


def max_pieces() -> int:
    """Materialization limit, overridable through ``CUBETILE_MAX_PIECES``."""
    env = os.environ.get("CUBETILE_MAX_PIECES")
    return int(env) if env else DEFAULT_MAX_PIECES


@dataclass(frozen=True)
class CubePlan:
    d: int
    n: int
    a: int
    c: int
    m: int
    k: int
    x: tuple[int, ...]
    y1: int

    @property
    def cells(self) -> int:
        return self.a ** (2 * self.d)

    @property
    def up_steps(self) -> list[int]:
        """Extra pieces per cell cut into ``(m+i)**d`` instead of ``m**d``."""
        return power_differences(self.d, self.m)

    @property
    def down_step(self) -> int:
        """Pieces lost per cell cut into ``(m-1)**d`` instead of ``m**d``."""
        return self.m ** self.d - (self.m - 1) ** self.d

    def count(self) -> int:
        return (self.cells * self.m ** self.d
                + sum(xi * ai for xi, ai in zip(self.x, self.up_steps))
                - self.y1 * self.down_step)

    def cell_parts(self) -> list[tuple[int, int]]:
        """``(parts per axis, number of cells)`` in cell-assignment order."""
        out = [(self.m + i + 1, xi) for i, xi in enumerate(self.x)]
        out.append((self.m - 1, self.y1))
        out.append((self.m, self.cells - sum(self.x) - self.y1))
        return out


def minimum_base(d: int, epsilon: Fraction) -> int:
    """Smallest base ``a`` with ``a > d(d+1)`` and ``(a-1)(1+epsilon) > a+d``."""
    epsilon = Fraction(epsilon)
    if d < 2:
        raise ValueError("d must be >= 2")
    if epsilon <= 0:
        raise ValueError("epsilon must be positive")
    # (a-1)(1+eps) > a+d  <=>  eps*(a-1) > d+1
    a_eps = int((d + 1) / epsilon) + 2
    return max(d * (d + 1) + 1, a_eps)


def theorem2_threshold(d: int, epsilon: Fraction) -> int:
    """``n0`` such that every ``n >= n0`` gets a plan with ratio below ``1 + epsilon``."""
    return minimum_base(d, epsilon) ** (3 * d)


def theorem2_params(d: int, n: int) -> CubePlan:
    if d < 2:
        raise ValueError("d must be >= 2")
    if n < 1:
        raise ValueError("n must be positive")
    a = ifloor_root(n, 3 * d)
    if a ** (3 * d) == n:
        return CubePlan(d, n, a, 0, a, 0, (0,) * d, 0)
    if a <= d * (d + 1):
        raise BelowThresholdError(
            f"n={n} gives base a={a} <= d(d+1)={d * (d + 1)}; "
            f"smallest usable n is {(d * (d + 1) + 1) ** (3 * d)}")
    cells = a ** (2 * d)
    assert cells * (a + 4) ** d > (a + 1) ** (3 * d)
    for c in range(4):
        if cells * (a + c) ** d <= n < cells * (a + c + 1) ** d:
            break
    else:
        raise AssertionError(f"no offset c in 0..3 brackets n={n} for a={a}")
    m = a + c
    k = n - cells * m ** d
    up = power_differences(d, m)
    down = m ** d - (m - 1) ** d
    assert gcd_family_check(d, m)
    rep = reduce_representation(signed_representation(up, [down], k), d)
    plan = CubePlan(d, n, a, c, m, k, rep.x, rep.y[0])
    assert plan.count() == n
    assert sum(plan.x) + plan.y1 <= cells, plan
    return plan


def plan_sizes(plan: CubePlan) -> list[tuple[Fraction, int]]:
    """Distinct piece sides with multiplicities, largest side first."""
    a2 = plan.a ** 2
    out = []
    for parts, ncells in sorted(plan.cell_parts()):
        if ncells:
            out.append((Fraction(1, a2 * parts), ncells * parts ** plan.d))
    return out


def plan_ratio(plan: CubePlan) -> Fraction:
    sides = [s for s, _ in plan_sizes(plan)]
    return max(sides) / min(sides)


def materialize(plan: CubePlan, limit: Optional[int] = None) -> Tiling:
    """Emit the unit-cube tiling described by ``plan``.

    Cells are taken in lexicographic order: the first ``x_1`` are cut into
    ``(m+1)**d`` pieces, then ``x_2`` into ``(m+2)**d``, ..., then ``y1`` into
    ``(m-1)**d``, and the rest into ``m**d``.
    """
    limit = max_pieces() if limit is None else limit
    if plan.n > limit:
        raise MaterializationRefused(
            f"materialization refused: {plan.n} pieces exceeds limit {limit}; use the certificate")
    d, a = plan.d, plan.a
    a2 = a ** 2
    parts_list = [p for p, cnt in plan.cell_parts() if cnt]
    lcm = math.lcm(*parts_list)
    scale = a2 * lcm                       # common denominator of all coordinates
    cells = np.indices((a2,) * d).reshape(d, -1).T * lcm

    lo, side = [], []
    start = 0
    for parts, ncells in plan.cell_parts():
        if not ncells:
            continue
        step = lcm // parts
        offsets = np.indices((parts,) * d).reshape(d, -1).T * step
        block = cells[start:start + ncells]
        lo.append((block[:, None, :] + offsets[None, :, :]).reshape(-1, d))
        side.append(np.full(ncells * parts ** d, step, dtype=np.int64))
        start += ncells
    outer = Box((Fraction(0),) * d, Fraction(1))
    return Tiling.from_scaled(d, outer, np.concatenate(lo), np.concatenate(side), scale)
