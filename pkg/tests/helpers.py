import random
from fractions import Fraction

from cubetile.core import Box, Tiling, subdivide


def random_refinement(rng: random.Random, dim: int, max_pieces: int, base: int = 2) -> Tiling:
    """A valid tiling of the cube [0, base]^dim built by repeatedly subdividing random pieces."""
    pieces = subdivide(Box((0,) * dim, base), dim, base)
    while True:
        parts = rng.choice([2, 3])
        if len(pieces) + parts ** dim - 1 > max_pieces or rng.random() < 0.08:
            break
        i = rng.randrange(len(pieces))
        pieces[i:i + 1] = subdivide(pieces[i], dim, parts)
    return Tiling(dim, Box((0,) * dim, base), tuple(pieces))


def mutate(rng: random.Random, t: Tiling, kind: str) -> Tiling:
    pieces = list(t.pieces)
    i = rng.randrange(len(pieces))
    b = pieces[i]
    if kind == "delete":
        del pieces[i]
    elif kind == "duplicate":
        pieces.append(b)
    elif kind == "translate":
        step = b.side * Fraction(rng.randint(1, 5), 7)
        axis = rng.randrange(t.dim)
        sign = rng.choice([-1, 1])
        pieces[i] = b.translated([sign * step if j == axis else 0 for j in range(t.dim)])
    elif kind == "grow":
        pieces[i] = Box(b.origin, b.side * Fraction(rng.randint(8, 12), 7))
    else:
        raise ValueError(kind)
    return Tiling(t.dim, t.outer, tuple(pieces))
