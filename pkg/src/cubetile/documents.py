"""JSON documents for tilings and certificates, and SVG rendering of planar tilings.

Rationals are written as ``"p/q"`` strings in lowest terms and integers as
decimal strings, so documents survive any JSON reader without losing precision.
"""
from __future__ import annotations

import json
import re
from fractions import Fraction
from pathlib import Path
from typing import Union

from .core import Box, Tiling
from .highdim import CubePlan
from .threesize import ThreeSizePlan

__all__ = [
    "FORMAT_VERSION",
    "DocumentError",
    "rational_to_str",
    "parse_rational",
    "tiling_to_dict",
    "tiling_from_dict",
    "plan_to_dict",
    "plan_from_dict",
    "dumps",
    "loads",
    "load_document",
    "save_document",
    "render_svg",
]

FORMAT_VERSION = 1
VIEWPORT = 1000
PALETTE = ["#4e79a7", "#f28e2b", "#59a14f", "#e15759", "#76b7b2",
           "#edc948", "#b07aa1", "#ff9da7", "#9c755f", "#bab0ac"]

_RATIONAL = re.compile(r"^-?\d+(/\d+)?$")
_INTEGER = re.compile(r"^-?\d+$")

Document = Union[Tiling, CubePlan, ThreeSizePlan]


class DocumentError(ValueError):
    pass


def rational_to_str(v: Fraction) -> str:
    return f"{v.numerator}/{v.denominator}"


def parse_rational(s: str) -> Fraction:
    if not isinstance(s, str) or not _RATIONAL.match(s):
        raise DocumentError(f"not an exact rational string: {s!r}")
    v = Fraction(s)
    if v.denominator == 0:
        raise DocumentError(f"zero denominator: {s!r}")
    return v


def _parse_int(s: str) -> int:
    if not isinstance(s, str) or not _INTEGER.match(s):
        raise DocumentError(f"not a decimal integer string: {s!r}")
    return int(s)


def _box_to_dict(b: Box) -> dict:
    return {"origin": [rational_to_str(v) for v in b.origin], "side": rational_to_str(b.side)}


def _box_from_dict(obj: dict) -> Box:
    try:
        return Box(tuple(parse_rational(v) for v in obj["origin"]), parse_rational(obj["side"]))
    except (KeyError, TypeError) as exc:
        raise DocumentError(f"malformed box: {obj!r}") from exc


def tiling_to_dict(t: Tiling) -> dict:
    return {
        "version": FORMAT_VERSION,
        "dim": t.dim,
        "outer": _box_to_dict(t.outer),
        "pieces": [_box_to_dict(b) for b in t.pieces],
    }


def tiling_from_dict(obj: dict) -> Tiling:
    _check_version(obj)
    try:
        dim = int(obj["dim"])
        outer = _box_from_dict(obj["outer"])
        # share equal rationals between pieces; keeps memory and scaling cheap
        cache: dict[str, Fraction] = {}

        def rat(s):
            v = cache.get(s)
            if v is None:
                v = cache[s] = parse_rational(s)
            return v

        pieces = tuple(Box(tuple(rat(v) for v in p["origin"]), rat(p["side"]))
                       for p in obj["pieces"])
    except (KeyError, TypeError) as exc:
        raise DocumentError(f"malformed tiling document: {exc}") from exc
    return Tiling(dim, outer, pieces)


def plan_to_dict(plan: Union[CubePlan, ThreeSizePlan]) -> dict:
    if isinstance(plan, CubePlan):
        return {
            "version": FORMAT_VERSION,
            "kind": "theorem2",
            "d": str(plan.d), "n": str(plan.n), "a": str(plan.a), "c": str(plan.c),
            "m": str(plan.m), "k": str(plan.k),
            "x": [str(v) for v in plan.x], "y1": str(plan.y1),
        }
    if isinstance(plan, ThreeSizePlan):
        return {
            "version": FORMAT_VERSION,
            "kind": "theorem5",
            "d": str(plan.d), "n": str(plan.n), "a": str(plan.a), "k": str(plan.k),
            "x1": str(plan.x1), "x2": str(plan.x2),
        }
    raise TypeError(f"not a plan: {type(plan).__name__}")


def plan_from_dict(obj: dict) -> Union[CubePlan, ThreeSizePlan]:
    _check_version(obj)
    try:
        kind = obj["kind"]
        if kind == "theorem2":
            return CubePlan(*(_parse_int(obj[f]) for f in ("d", "n", "a", "c", "m", "k")),
                            tuple(_parse_int(v) for v in obj["x"]), _parse_int(obj["y1"]))
        if kind == "theorem5":
            return ThreeSizePlan(*(_parse_int(obj[f]) for f in ("d", "n", "a", "k", "x1", "x2")))
    except (KeyError, TypeError) as exc:
        raise DocumentError(f"malformed certificate: {exc}") from exc
    raise DocumentError(f"unknown certificate kind {kind!r}")


def _check_version(obj) -> None:
    if not isinstance(obj, dict):
        raise DocumentError("document must be a JSON object")
    if obj.get("version") != FORMAT_VERSION:
        raise DocumentError(f"unsupported document version {obj.get('version')!r}")


def dumps(doc: Document) -> str:
    obj = tiling_to_dict(doc) if isinstance(doc, Tiling) else plan_to_dict(doc)
    return json.dumps(obj, separators=(",", ":")) + "\n"


def loads(text: str) -> Document:
    try:
        obj = json.loads(text)
    except json.JSONDecodeError as exc:
        raise DocumentError(f"invalid JSON: {exc}") from exc
    if isinstance(obj, dict) and "kind" in obj:
        return plan_from_dict(obj)
    return tiling_from_dict(obj)


def save_document(doc: Document, path: Union[str, Path]) -> None:
    Path(path).write_text(dumps(doc))


def load_document(path: Union[str, Path]) -> Document:
    return loads(Path(path).read_text())


def _num(v: Fraction) -> str:
    out = f"{float(v):.6f}".rstrip("0").rstrip(".")
    return out if out not in ("", "-0") else "0"


def render_svg(t: Tiling) -> str:
    """SVG 1.1 drawing of a planar tiling, y axis pointing up, one fill per side length."""
    if t.dim != 2:
        raise ValueError(f"only planar tilings can be rendered, got dim={t.dim}")
    scale = Fraction(VIEWPORT) / t.outer.side
    ox, oy = t.outer.origin
    colors = {s: PALETTE[i % len(PALETTE)] for i, s in enumerate(sorted(t.sides(), reverse=True))}
    lines = [
        '<?xml version="1.0" encoding="UTF-8"?>',
        f'<svg xmlns="http://www.w3.org/2000/svg" version="1.1" '
        f'width="{VIEWPORT}" height="{VIEWPORT}" viewBox="0 0 {VIEWPORT} {VIEWPORT}">',
        f'<rect x="0" y="0" width="{VIEWPORT}" height="{VIEWPORT}" fill="white" stroke="black"/>',
    ]
    for b in t.pieces:
        x = (b.origin[0] - ox) * scale
        y = VIEWPORT - (b.origin[1] - oy + b.side) * scale
        w = b.side * scale
        lines.append(f'<rect x="{_num(x)}" y="{_num(y)}" width="{_num(w)}" height="{_num(w)}" '
                     f'fill="{colors[b.side]}" stroke="black" stroke-width="0.5"/>')
    lines.append("</svg>")
    return "\n".join(lines) + "\n"
