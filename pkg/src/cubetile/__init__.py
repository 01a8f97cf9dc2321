"""Exact constructions and certificates for cutting a cube into n smaller cubes."""
from .core import Box, Rational, Tiling, box_volume, grid_tiling, ifloor_root, subdivide
from .highdim import (BelowThresholdError, CubePlan, MaterializationRefused, materialize,
                      plan_ratio, plan_sizes, theorem2_params, theorem2_threshold)
from .numtheory import (NotRepresentableError, SignedRepresentation, gcd_family_check, gcd_list,
                        reduce_representation, signed_representation, sylvester_representation)
from .planar import (OutOfRangeError, PlanarPlan, claim1_decompose, claim2_decompose,
                     lemma0_tiling, plane_tiling, rho_upper, theorem1_params, theorem1_tiling)
from .threesize import ThreeSizePlan, theorem5_params, theorem5_tiling
from .verify import VerifyReport, verify_cube_plan, verify_threesize_plan, verify_tiling

__version__ = "0.1.0"
