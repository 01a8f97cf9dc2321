"""Catching broken tilings, and moving tilings and plans through JSON files."""
import tempfile
from fractions import Fraction
from pathlib import Path

from cubetile import documents
from cubetile.core import Tiling, grid_tiling
from cubetile.highdim import theorem2_params
from cubetile.verify import verify_tiling

good = grid_tiling(2, 3)
print(verify_tiling(good).summary())

# %% Slide one square half a unit: it now overlaps a neighbour
moved = list(good.pieces)
moved[0] = moved[0].translated((Fraction(1, 2), 0))
print(verify_tiling(Tiling(2, good.outer, moved)).summary())

# %% The same slide on the last square pushes it out of the outer square instead
moved = list(good.pieces)
moved[-1] = moved[-1].translated((Fraction(1, 2), 0))
print(verify_tiling(Tiling(2, good.outer, moved)).summary())

# %% Drop a piece: the volume no longer adds up
print(verify_tiling(Tiling(2, good.outer, good.pieces[1:])).summary())

# %% Round trips are exact
with tempfile.TemporaryDirectory() as tmp:
    path = Path(tmp) / "grid.json"
    documents.save_document(good, path)
    print(path.read_text()[:120], "...")
    assert documents.load_document(path) == good

    cert = Path(tmp) / "plan.json"
    documents.save_document(theorem2_params(4, 10 ** 40), cert)
    print(cert.read_text())
