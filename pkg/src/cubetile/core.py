"""Exact scalars, axis-aligned cubes and the tiling container.

Every coordinate and side length is a :class:`fractions.Fraction`; nothing in
this package ever passes through floating point.
"""
from __future__ import annotations

import math
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Iterable, Sequence

import numpy as np

Rational = Fraction

__all__ = [
    "Rational",
    "Box",
    "Tiling",
    "ifloor_root",
    "box_volume",
    "subdivide",
    "grid_tiling",
]


def ifloor_root(n: int, e: int) -> int:
    """Return the unique ``r`` with ``r**e <= n < (r+1)**e``.

    Integer Newton iteration from an upper starting point, followed by an
    exact correction step.
    """
    if n < 1 or e < 1:
        raise ValueError(f"ifloor_root needs n >= 1 and e >= 1, got n={n}, e={e}")
    if e == 1 or n == 1:
        return n
    if e == 2:
        return math.isqrt(n)
    # 2**ceil(bits/e) is always >= the true root
    r = 1 << -(-n.bit_length() // e)
    while True:
        nxt = ((e - 1) * r + n // r ** (e - 1)) // e
        if nxt >= r:
            break
        r = nxt
    while r ** e > n:
        r -= 1
    while (r + 1) ** e <= n:
        r += 1
    return r


def _as_rational(value) -> Fraction:
    if isinstance(value, Fraction):
        return value
    if isinstance(value, float):
        raise TypeError("floats are not accepted as exact coordinates")
    return Fraction(value)


@dataclass(frozen=True, slots=True, order=True)
class Box:
    """An axis-aligned cube given by its lower corner and side length."""

    origin: tuple[Fraction, ...]
    side: Fraction

    def __post_init__(self):
        origin = tuple(_as_rational(v) for v in self.origin)
        side = _as_rational(self.side)
        if side <= 0:
            raise ValueError(f"box side must be positive, got {side}")
        object.__setattr__(self, "origin", origin)
        object.__setattr__(self, "side", side)

    @property
    def dim(self) -> int:
        return len(self.origin)

    @property
    def corner(self) -> tuple[Fraction, ...]:
        """Upper corner."""
        return tuple(o + self.side for o in self.origin)

    def translated(self, offset: Sequence) -> "Box":
        return Box(tuple(o + _as_rational(t) for o, t in zip(self.origin, offset)), self.side)


def box_volume(b: Box, d: int) -> Fraction:
    if b.dim != d:
        raise ValueError(f"box has dimension {b.dim}, expected {d}")
    return b.side ** d


def subdivide(b: Box, d: int, parts: int) -> list[Box]:
    """Split ``b`` into ``parts**d`` equal sub-cubes, in lexicographic order."""
    if parts < 1:
        raise ValueError("parts must be >= 1")
    if b.dim != d:
        raise ValueError(f"box has dimension {b.dim}, expected {d}")
    side = b.side / parts
    offsets = [i * side for i in range(parts)]
    out = []
    for idx in np.ndindex(*([parts] * d)):
        out.append(Box(tuple(o + offsets[i] for o, i in zip(b.origin, idx)), side))
    return out


class _FractionCache(dict):
    """Interns Fractions built from (numerator, denominator) pairs."""

    def __init__(self, denominator: int):
        super().__init__()
        self.denominator = denominator

    def __missing__(self, num: int) -> Fraction:
        f = Fraction(num, self.denominator)
        self[num] = f
        return f


def boxes_from_scaled(lo: np.ndarray, side: np.ndarray, scale: int) -> list[Box]:
    """Build boxes from integer lower corners and sides measured in units of 1/scale."""
    cache = _FractionCache(scale)
    make = Box.__new__
    setter = object.__setattr__
    out = []
    # rows are trusted (integers, positive sides) so skip per-box validation
    for row, s in zip(lo.tolist(), side.tolist()):
        b = make(Box)
        setter(b, "origin", tuple(cache[v] for v in row))
        setter(b, "side", cache[s])
        out.append(b)
    return out


@dataclass(frozen=True)
class ScaledTiling:
    """Integer image of a tiling: every coordinate multiplied by ``scale``.

    ``lo`` has shape (n, d); ``side`` has shape (n,).  Arrays are int64 when the
    values fit, otherwise object arrays of Python ints.
    """

    scale: int
    lo: np.ndarray
    side: np.ndarray
    outer_lo: tuple[int, ...]
    outer_side: int

    @property
    def hi(self) -> np.ndarray:
        return self.lo + self.side[:, None]


_INT64_SAFE = 1 << 61


def _scale_boxes(dim: int, outer: Box, pieces: Sequence[Box]) -> ScaledTiling:
    # keyed by id(): Fraction.__hash__ is slow and constructions share objects
    objs: dict[int, Fraction] = {}
    for b in pieces:
        for v in b.origin:
            objs[id(v)] = v
        objs[id(b.side)] = b.side
    for v in outer.origin + (outer.side,):
        objs[id(v)] = v
    scale = math.lcm(*{v.denominator for v in objs.values()})
    values = {key: v.numerator * (scale // v.denominator) for key, v in objs.items()}
    n = len(pieces)
    lo = [values[id(v)] for b in pieces for v in b.origin]
    side = [values[id(b.side)] for b in pieces]
    outer_lo = tuple(values[id(v)] for v in outer.origin)
    outer_side = values[id(outer.side)]
    bound = max([abs(x) for x in outer_lo] + [outer_side] + [abs(x) for x in values.values()])
    dtype = np.int64 if 2 * bound < _INT64_SAFE else object
    lo_arr = np.array(lo, dtype=dtype).reshape(n, dim) if n else np.zeros((0, dim), dtype=dtype)
    side_arr = np.array(side, dtype=dtype)
    return ScaledTiling(scale, lo_arr, side_arr, outer_lo, outer_side)


@dataclass(frozen=True, eq=False)
class Tiling:
    """A claimed decomposition of ``outer`` into ``pieces``.

    Pieces are kept in canonical lexicographic order of ``(origin, side)``
    regardless of the order they were supplied in.  Pieces whose dimension
    differs from ``dim`` are kept as given (at the end) so the verifier can
    report them.
    """

    dim: int
    outer: Box
    pieces: tuple[Box, ...]
    _scaled: ScaledTiling | None = field(default=None, repr=False, compare=False)

    def __post_init__(self):
        if self.dim < 1:
            raise ValueError("dimension must be positive")
        pieces = tuple(self.pieces)
        good = [b for b in pieces if b.dim == self.dim]
        bad = [b for b in pieces if b.dim != self.dim]
        if self.outer.dim != self.dim:
            object.__setattr__(self, "pieces", pieces)
            return
        scaled = _scale_boxes(self.dim, self.outer, good)
        if len(good) > 1:
            keys = [scaled.side] + [scaled.lo[:, j] for j in reversed(range(self.dim))]
            order = np.lexsort(keys) if scaled.lo.dtype != object else _object_lexsort(scaled)
            if np.any(order != np.arange(len(good))):
                good = [good[i] for i in order]
                scaled = ScaledTiling(scaled.scale, scaled.lo[order], scaled.side[order],
                                      scaled.outer_lo, scaled.outer_side)
        object.__setattr__(self, "pieces", tuple(good) + tuple(bad))
        object.__setattr__(self, "_scaled", scaled)

    def __len__(self) -> int:
        return len(self.pieces)

    def __eq__(self, other) -> bool:
        if not isinstance(other, Tiling):
            return NotImplemented
        return self.dim == other.dim and self.outer == other.outer and self.pieces == other.pieces

    def scaled(self) -> ScaledTiling:
        if self._scaled is None:
            raise ValueError("outer box dimension does not match the tiling dimension")
        return self._scaled

    def sides(self) -> list[Fraction]:
        """Distinct piece sides, ascending."""
        return sorted({b.side for b in self.pieces})

    @classmethod
    def from_scaled(cls, dim: int, outer: Box, lo: np.ndarray, side: np.ndarray,
                    scale: int) -> "Tiling":
        return cls(dim, outer, tuple(boxes_from_scaled(lo, side, scale)))


def _object_lexsort(scaled: ScaledTiling) -> np.ndarray:
    rows = [tuple(r) + (s,) for r, s in zip(scaled.lo.tolist(), scaled.side.tolist())]
    return np.array(sorted(range(len(rows)), key=rows.__getitem__), dtype=np.intp)


def grid_tiling(dim: int, cells: int, side: Fraction | int = 1) -> Tiling:
    """The uniform ``cells**dim`` grid filling a cube of side ``cells*side``."""
    side = _as_rational(side)
    outer = Box((Fraction(0),) * dim, side * cells)
    idx = np.indices((cells,) * dim).reshape(dim, -1).T
    scale = side.denominator
    lo = idx.astype(object if side.numerator * cells > _INT64_SAFE else np.int64) * side.numerator
    sides = np.full(len(idx), side.numerator, dtype=lo.dtype)
    return Tiling.from_scaled(dim, outer, lo, sides, scale)


def iter_cells(dim: int, cells: int) -> Iterable[tuple[int, ...]]:
    """Integer cell indices of a ``cells**dim`` grid in lexicographic order."""
    return np.ndindex(*([cells] * dim))
