"""Nearly equal cubes in higher dimensions, kept as integer certificates."""
from fractions import Fraction

from cubetile.highdim import materialize, plan_ratio, plan_sizes, theorem2_params, theorem2_threshold
from cubetile.verify import verify_cube_plan, verify_tiling

# %% Where the construction starts to work for a chosen tolerance
for d in (2, 3, 4):
    print(f"d={d}: every n >= {theorem2_threshold(d, Fraction(1, 2))} gets ratio <= 3/2")

# %% A plan is a handful of integers, even for astronomically large n
plan = theorem2_params(3, 10 ** 30 + 12345)
print(plan)
for side, count in plan_sizes(plan):
    print(f"  {count} cubes of side {side}")
print("ratio", plan_ratio(plan), "-", verify_cube_plan(plan).summary())

# %% Small enough plans can be turned into actual cubes
small = theorem2_params(2, 117650)
tiling = materialize(small)
print(verify_tiling(tiling).summary())
