"""Three side lengths suffice once n is large: halves, a fine grid, and whole cells."""
from collections import Counter

from cubetile.threesize import theorem5_params, theorem5_threshold, theorem5_tiling
from cubetile.verify import verify_threesize_plan, verify_tiling

d = 3
n = theorem5_threshold(d) + 1
plan = theorem5_params(d, n)
print(plan)
print(verify_threesize_plan(plan).summary())

t = theorem5_tiling(plan)
counts = Counter(b.side for b in t.pieces)
for side in sorted(counts, reverse=True):
    print(f"side {side}: {counts[side]} cubes")
print(verify_tiling(t).summary())
