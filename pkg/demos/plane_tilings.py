"""Cutting a square into n squares with only two side lengths.

Run with ``python3 demos/plane_tilings.py``.  Writes plane55.svg next to
the current directory.
"""
from cubetile import documents
from cubetile.planar import claim1_decompose, claim2_decompose, plane_tiling, rho_upper, theorem1_params
from cubetile.verify import verify_tiling

# %% Every n splits as a square plus (or minus) a remainder b
n = 55
a, b, case = claim1_decompose(n)
print(f"{n}: a={a}, b={b}, case {case}")

# %% The remainder itself splits into two nearby squares
m, form = claim2_decompose(b)
print(f"b={b}: m={m}, form {form}")

# %% Those numbers fix the layout: a p x p grid with q x q blocks re-cut into r x r
plan = theorem1_params(n)
print(plan)

# %% Build it and check it exactly
t = plane_tiling(n)
print(verify_tiling(t).summary())

# %% The side ratio drifts toward 1 as n grows
for n in (40, 400, 4000, 40000, 400000):
    print(f"n={n:>6}  ratio={rho_upper(n)}  ~ {float(rho_upper(n)):.4f}")

# %% Draw the 55-piece tiling
with open("plane55.svg", "w") as fh:
    fh.write(documents.render_svg(plane_tiling(55)))
print("wrote plane55.svg")
