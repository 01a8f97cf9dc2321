"""Exact certification of tilings and tiling certificates.

A tiling is valid when every piece lies inside the outer cube, pieces have
pairwise disjoint interiors, and the piece volumes add up to the outer volume.
The first two conditions plus the volume identity rule out gaps, so no point
probing is needed.

All geometry is done on integers: coordinates are multiplied by the least
common denominator of every rational in the tiling.
"""
from __future__ import annotations

import math
from collections import Counter
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Optional

import numpy as np

from .core import Tiling
from .highdim import CubePlan, plan_sizes
from .threesize import ThreeSizePlan

__all__ = [
    "VerifyReport",
    "verify_tiling",
    "verify_cube_plan",
    "verify_threesize_plan",
    "sweep_overlaps",
    "brute_force_overlaps",
]

# cap on reported overlap pairs; validity is unaffected
MAX_REPORTED_OVERLAPS = 10_000


@dataclass
class VerifyReport:
    valid: bool
    piece_count: int
    distinct_sides: list[Fraction]
    ratio: Optional[Fraction]
    violations: list[tuple[str, tuple[int, ...]]] = field(default_factory=list)

    def kinds(self) -> set[str]:
        return {kind for kind, _ in self.violations}

    def summary(self) -> str:
        sides = ", ".join(str(s) for s in self.distinct_sides)
        status = "valid" if self.valid else "INVALID"
        line = f"{status}: {self.piece_count} pieces, sides {{{sides}}}, ratio {self.ratio}"
        if self.violations:
            counts = Counter(kind for kind, _ in self.violations)
            line += "; violations: " + ", ".join(f"{k} x{v}" for k, v in sorted(counts.items()))
        return line


def _make_report(count: int, sides, violations) -> VerifyReport:
    sides = sorted(set(sides))
    ratio = max(sides) / min(sides) if sides else None
    violations = sorted(violations)
    return VerifyReport(not violations, count, sides, ratio, violations)


def _leaf_pairs(lo: np.ndarray, hi: np.ndarray, idx: np.ndarray, out: set) -> None:
    order = np.argsort(lo, kind="stable")
    ls, hs, ids = lo[order], hi[order], idx[order]
    runmax = np.maximum.accumulate(hs)
    for j in np.nonzero(ls[1:] < runmax[:-1])[0] + 1:
        for i in np.nonzero(hs[:j] > ls[j])[0]:
            a, b = int(ids[i]), int(ids[j])
            out.add((min(a, b), max(a, b)))
            if len(out) >= MAX_REPORTED_OVERLAPS:
                return


def _sweep(lo: np.ndarray, hi: np.ndarray, idx: np.ndarray, axis: int, out: set) -> None:
    if len(idx) < 2 or len(out) >= MAX_REPORTED_OVERLAPS:
        return
    l, h = lo[idx, axis], hi[idx, axis]
    if axis == lo.shape[1] - 1:
        _leaf_pairs(l, h, idx, out)
        return
    order = np.argsort(l, kind="stable")
    ls, hs, ids = l[order], h[order], idx[order]
    # Two pieces overlap iff their cross-sections overlap just past the later
    # of their two start coordinates, where both are active.
    for s in np.unique(ls):
        end = np.searchsorted(ls, s, side="right")
        live = hs[:end] > s
        if np.count_nonzero(live) >= 2:
            _sweep(lo, hi, ids[:end][live], axis + 1, out)


def sweep_overlaps(t: Tiling) -> list[tuple[int, int]]:
    """Index pairs of pieces with intersecting interiors, via nested sweeps."""
    sc = t.scaled()
    n = len(sc.side)
    out: set = set()
    _sweep(sc.lo, sc.hi, np.arange(n), 0, out)
    return sorted(out)


def brute_force_overlaps(t: Tiling) -> list[tuple[int, int]]:
    """Reference O(n^2) pairwise check, independent of the sweep and of core's scaling."""
    pieces = [b for b in t.pieces if b.dim == t.dim]
    if len(pieces) < 2:
        return []
    scale = math.lcm(*{v.denominator for b in pieces for v in b.origin + (b.side,)})
    lo = [[int(v * scale) for v in b.origin] for b in pieces]
    side = [int(b.side * scale) for b in pieces]
    big = max(max(map(abs, row)) for row in lo) + max(side) >= 1 << 62
    lo = np.array(lo, dtype=object if big else np.int64)
    side = np.array(side, dtype=lo.dtype)
    hi = lo + side[:, None]
    hit = np.ones((len(pieces), len(pieces)), dtype=bool)
    for j in range(t.dim):
        hit &= (lo[:, None, j] < hi[None, :, j]) & (lo[None, :, j] < hi[:, None, j])
    i, k = np.nonzero(np.triu(hit, 1))
    return sorted(zip(i.tolist(), k.tolist()))


def verify_tiling(t: Tiling) -> VerifyReport:
    violations: list[tuple[str, tuple[int, ...]]] = []
    sides = [b.side for b in t.pieces]
    if t.outer.dim != t.dim:
        violations.append(("dimension", ()))
        return _make_report(len(t.pieces), sides, violations)
    for i, b in enumerate(t.pieces):
        if b.dim != t.dim:
            violations.append(("dimension", (i,)))

    sc = t.scaled()
    n, d = sc.lo.shape
    if n:
        outer_lo = np.array(sc.outer_lo, dtype=sc.lo.dtype)
        outer_hi = outer_lo + sc.outer_side
        outside = np.any((sc.lo < outer_lo) | (sc.hi > outer_hi), axis=1)
        violations.extend(("outside", (int(i),)) for i in np.nonzero(outside)[0])
        violations.extend(("overlap", pair) for pair in sweep_overlaps(t))

    total = sum(cnt * s ** d for s, cnt in Counter(sc.side.tolist()).items())
    target = sc.outer_side ** d
    if total < target:
        violations.append(("volume-deficit", ()))
    elif total > target:
        violations.append(("volume-excess", ()))
    return _make_report(len(t.pieces), sides, violations)


def verify_cube_plan(plan: CubePlan) -> VerifyReport:
    """Arithmetic check of a high-dimensional certificate; no geometry is built."""
    d, n, a, c, m = plan.d, plan.n, plan.a, plan.c, plan.m
    violations = []
    cells = a ** (2 * d)
    if len(plan.x) != d:
        violations.append(("shape", ()))
    if any(v < 0 for v in plan.x) or plan.y1 < 0:
        violations.append(("negative", ()))
    if not (0 <= c <= 3 and m == a + c and cells * m ** d <= n < cells * (m + 1) ** d):
        violations.append(("interval", ()))
    if plan.k != n - cells * m ** d:
        violations.append(("identity", ()))
    ups = [(m + i) ** d - m ** d for i in range(1, d + 1)]
    down = m ** d - (m - 1) ** d
    if sum(xi * ai for xi, ai in zip(plan.x, ups)) - plan.y1 * down != plan.k:
        violations.append(("identity", (1,)))
    if sum(plan.x) + plan.y1 > cells:
        violations.append(("bound", ()))

    sizes = [(s, cnt) for s, cnt in plan_sizes(plan)]
    count = sum(cnt for _, cnt in sizes)
    if count != n:
        violations.append(("count", ()))
    volume = sum(cnt * s ** d for s, cnt in sizes)
    if volume < 1:
        violations.append(("volume-deficit", ()))
    elif volume > 1:
        violations.append(("volume-excess", ()))
    if len(sizes) > d + 2:
        violations.append(("sizes", ()))
    return _make_report(count, [s for s, cnt in sizes if cnt > 0], violations)


def verify_threesize_plan(plan: ThreeSizePlan) -> VerifyReport:
    """Arithmetic check of a three-size certificate."""
    d, fine = plan.d, plan.fine
    violations = []
    s1, s2 = fine, fine ** d - 1
    cells = (plan.a - 1) ** d
    if plan.x1 < 0 or plan.x2 < 0:
        violations.append(("negative", ()))
    if plan.k != plan.n - cells:
        violations.append(("identity", ()))
    if plan.k != plan.x1 * s1 + plan.x2 * s2:
        violations.append(("identity", (1,)))
    if plan.x1 + plan.x2 > cells:
        violations.append(("bound", ()))

    whole = cells - plan.x1 - plan.x2
    sizes = [(Fraction(1), whole), (Fraction(1, 2), plan.x1 * 2 ** d),
             (Fraction(1, fine), plan.x2 * fine ** d)]
    count = sum(cnt for _, cnt in sizes)
    if count != plan.n:
        violations.append(("count", ()))
    volume = sum(cnt * s ** d for s, cnt in sizes)
    if volume < cells:
        violations.append(("volume-deficit", ()))
    elif volume > cells:
        violations.append(("volume-excess", ()))
    return _make_report(count, [s for s, cnt in sizes if cnt > 0], violations)
