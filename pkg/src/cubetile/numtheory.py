"""Linear Diophantine representations with nonnegative coefficients.

Three tools are provided:

* :func:`signed_representation` writes ``k = sum(x_i a_i) - sum(y_j b_j)`` with
  all ``x_i, y_j >= 0`` whenever the coefficients are jointly coprime;
* :func:`reduce_representation` shrinks such a solution (single ``b``) with the
  two exchange moves used by the high-dimensional construction;
* :func:`sylvester_representation` writes ``k = x1 a1 + x2 a2`` with
  ``x1, x2 >= 0`` at or above the Frobenius bound ``(a1-1)(a2-1)``.
"""
from __future__ import annotations

import math
from dataclasses import dataclass, replace
from typing import Iterator, Sequence

__all__ = [
    "NotRepresentableError",
    "SignedRepresentation",
    "gcd_list",
    "signed_representation",
    "reduce_representation",
    "reduction_steps",
    "sylvester_representation",
    "gcd_family_check",
    "power_differences",
]


class NotRepresentableError(ValueError):
    """Raised when no nonnegative representation exists."""


@dataclass(frozen=True)
class SignedRepresentation:
    x: tuple[int, ...]
    y: tuple[int, ...]
    k: int
    a: tuple[int, ...]
    b: tuple[int, ...]

    def value(self) -> int:
        return sum(xi * ai for xi, ai in zip(self.x, self.a)) - sum(
            yj * bj for yj, bj in zip(self.y, self.b))

    def is_valid(self) -> bool:
        return (len(self.x) == len(self.a) and len(self.y) == len(self.b)
                and all(v >= 0 for v in self.x + self.y) and self.value() == self.k)


def gcd_list(values: Sequence[int]) -> int:
    if len(values) == 0:
        raise ValueError("gcd_list needs at least one value")
    return math.gcd(*values)


def _egcd(a: int, b: int) -> tuple[int, int, int]:
    """Return (g, s, t) with s*a + t*b = g = gcd(a, b)."""
    old_r, r = a, b
    old_s, s = 1, 0
    old_t, t = 0, 1
    while r:
        q = old_r // r
        old_r, r = r, old_r - q * r
        old_s, s = s, old_s - q * s
        old_t, t = t, old_t - q * t
    return old_r, old_s, old_t


def _bezout(modulus: int, coeffs: Sequence[int]) -> list[int]:
    """Integers u with sum(u_i c_i) == gcd(modulus, *coeffs) (mod modulus).

    Coefficients are folded in left to right; once the running gcd is 1 the
    remaining ones get a zero multiplier.
    """
    g = modulus
    u = [0] * len(coeffs)
    for i, c in enumerate(coeffs):
        if g == 1:
            break
        g2, s, t = _egcd(g, c)
        if g2 == g:
            continue
        for j in range(i):
            u[j] *= s
        u[i] = t
        g = g2
    return u


def signed_representation(a: Sequence[int], b: Sequence[int], k: int) -> SignedRepresentation:
    """Nonnegative ``x, y`` with ``sum(x_i a_i) - sum(y_j b_j) == k``.

    For a single ``b`` coefficient the result is deterministic: each ``x_i`` is
    ``k * u_i mod b_1`` for the extended-Euclid multipliers ``u_i`` (so
    ``0 <= x_i < b_1``), then the last ``x`` is raised by multiples of ``b_1``
    until the positive part reaches ``k``, and ``y_1`` absorbs the remainder.
    """
    a = tuple(int(v) for v in a)
    b = tuple(int(v) for v in b)
    if not a or not b:
        raise ValueError("both coefficient lists must be nonempty")
    if any(v < 1 for v in a + b):
        raise ValueError("coefficients must be positive")
    if math.gcd(*a, *b) != 1:
        raise NotRepresentableError(f"gcd of {a} and {b} is not 1")

    if len(b) == 1:
        b1 = b[0]
        u = _bezout(b1, a)
        x = [(k * ui) % b1 for ui in u]
        total = sum(xi * ai for xi, ai in zip(x, a))
        if total < k:
            step = b1 * a[-1]
            x[-1] += b1 * (-(-(k - total) // step))
            total = sum(xi * ai for xi, ai in zip(x, a))
        y = [(total - k) // b1]
        return SignedRepresentation(tuple(x), tuple(y), k, a, b)

    # several b's: any integer solution, then push negatives up along the
    # kernel vectors b_j e_i + a_i f_j
    coeffs = a + b
    g = coeffs[0]
    u = [1] + [0] * (len(coeffs) - 1)
    for i in range(1, len(coeffs)):
        g2, s, t = _egcd(g, coeffs[i])
        u = [v * s for v in u[:i]] + [t] + u[i + 1:]
        g = g2
    x = [v * k for v in u[:len(a)]]
    y = [-v * k for v in u[len(a):]]
    for i in range(len(x)):
        if x[i] < 0:
            t = -(-(-x[i]) // b[0])
            x[i] += t * b[0]
            y[0] += t * a[i]
    for j in range(len(y)):
        if y[j] < 0:
            t = -(-(-y[j]) // a[0])
            y[j] += t * a[0]
            x[0] += t * b[j]
    return SignedRepresentation(tuple(x), tuple(y), k, a, b)


def _check_single_b(rep: SignedRepresentation, d: int) -> None:
    if len(rep.b) != 1 or len(rep.y) != 1:
        raise ValueError("reduction needs exactly one b coefficient")
    if len(rep.a) != d or len(rep.x) != d:
        raise ValueError(f"reduction needs d={d} a coefficients")
    if any(rep.a[i] >= rep.a[i + 1] for i in range(d - 1)):
        raise ValueError("a coefficients must be strictly increasing")


def reduction_steps(rep: SignedRepresentation, d: int) -> Iterator[SignedRepresentation]:
    """Yield every intermediate representation of the exchange procedure, one move at a time.

    Move 1: some ``x_i >= b_1`` and ``y_1 >= a_d``; lower ``x_i`` by ``b_1`` and
    ``y_1`` by ``a_i``.  Move 2: some ``x_i >= a_d`` with ``i < d``; lower ``x_i``
    by ``a_d`` and raise ``x_d`` by ``a_i``.  Move 1 has priority and the
    smallest qualifying index is used.  The starting representation is not
    yielded.
    """
    _check_single_b(rep, d)
    a, (b1,) = rep.a, rep.b
    ad = a[-1]
    x = list(rep.x)
    y1 = rep.y[0]
    while True:
        i = next((i for i in range(d) if x[i] >= b1), None) if y1 >= ad else None
        if i is not None:
            x[i] -= b1
            y1 -= a[i]
        else:
            i = next((i for i in range(d - 1) if x[i] >= ad), None)
            if i is None:
                return
            x[i] -= ad
            x[-1] += a[i]
        yield replace(rep, x=tuple(x), y=(y1,))


def reduce_representation(rep: SignedRepresentation, d: int) -> SignedRepresentation:
    """Run the exchange procedure of :func:`reduction_steps` to its fixpoint.

    Runs of move 1 on the same index are applied in bulk; this gives the same
    fixpoint as single stepping because smaller indices never start to qualify.
    """
    _check_single_b(rep, d)
    a, (b1,) = rep.a, rep.b
    ad = a[-1]
    x = list(rep.x)
    y1 = rep.y[0]
    while True:
        i = next((i for i in range(d) if x[i] >= b1), None) if y1 >= ad else None
        if i is not None:
            t = min(x[i] // b1, (y1 - ad) // a[i] + 1)
            x[i] -= t * b1
            y1 -= t * a[i]
            continue
        i = next((i for i in range(d - 1) if x[i] >= ad), None)
        if i is None:
            break
        x[i] -= ad
        x[-1] += a[i]
    return replace(rep, x=tuple(x), y=(y1,))


def sylvester_representation(a1: int, a2: int, k: int) -> tuple[int, int]:
    """Nonnegative ``(x1, x2)`` with ``x1*a1 + x2*a2 == k``.

    ``x2`` is taken as the least nonnegative residue of ``k / a2`` modulo
    ``a1``, which is the smallest ``x2`` of any solution; so a solution exists
    iff this one has ``x1 >= 0``.
    """
    if a1 < 1 or a2 < 1:
        raise ValueError("coefficients must be positive")
    if k < 0:
        raise ValueError("k must be nonnegative")
    if math.gcd(a1, a2) != 1:
        raise NotRepresentableError(f"gcd({a1}, {a2}) != 1")
    x2 = (k * pow(a2, -1, a1)) % a1 if a1 > 1 else 0
    rest = k - x2 * a2
    if rest < 0:
        raise NotRepresentableError(
            f"{k} is below the Frobenius bound {(a1 - 1) * (a2 - 1)} "
            f"and has no representation by {a1} and {a2}")
    return rest // a1, x2


def power_differences(d: int, m: int) -> list[int]:
    """``[(m+i)**d - m**d for i in 1..d]``."""
    return [(m + i) ** d - m ** d for i in range(1, d + 1)]


def gcd_family_check(d: int, m: int) -> bool:
    if d < 2 or m < 1:
        raise ValueError("need d >= 2 and m >= 1")
    return math.gcd(*power_differences(d, m)) == 1
