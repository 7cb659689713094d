"""Scale-ratio fractal dimension estimators for finite point sets.

The package estimates upper box dimension, the Assouad spectrum and its
upper envelope, quasi-Assouad and Assouad dimensions, and generalized
upper box brackets on finite point sets, together with consistency
checks tying the estimators to each other on calibration families.
"""

from .covering import (CoverCurve, GridIndex, ball_points, build_index,
                       cover_curve, default_box_curve, grid_count,
                       local_count, resolution_floor, restrict_to_ball)
from .pointset import PointSet, make_pointset, read_points, write_points
from .setgen import (affine_image, delta_ek, delta_example_e,
                     gen_cantor_midpoints, gen_egb_union, gen_ek,
                     gen_example_e, gen_poly_sequence, gen_uniform_grid,
                     set_product, set_union)
from .spectra import (DimEstimate, EstimateBundle, GBBracket, GBStarEntry,
                      InfeasibleWindowError, ScalePairQuery, SpectrumCurve,
                      assouad_dim_estimate, assouad_spectrum_point,
                      box_dim_estimate, decomposition_dim_upper,
                      estimate_bundle, example_e_family, gb_star_estimate,
                      generalized_upper_box, prenormalize,
                      quasi_assouad_estimate, spectrum_sweep, theta_grid,
                      theta_tolerance, upper_spectrum)
from .verify import (CheckReport, WitnessRecord, check_chain,
                     check_count_laws, check_count_laws_random,
                     check_zero_equivalences, egb_identity_error,
                     run_egb_suite, run_gubr_suite, witness_egb,
                     witness_gubr, write_check_reports)

__version__ = "0.1.0"

__all__ = [
    "CheckReport", "CoverCurve", "DimEstimate", "EstimateBundle",
    "GBBracket", "GBStarEntry", "GridIndex", "InfeasibleWindowError",
    "PointSet", "ScalePairQuery", "SpectrumCurve", "WitnessRecord",
    "affine_image", "assouad_dim_estimate", "assouad_spectrum_point",
    "ball_points", "box_dim_estimate", "build_index", "check_chain",
    "check_count_laws", "check_count_laws_random",
    "check_zero_equivalences", "cover_curve", "decomposition_dim_upper",
    "default_box_curve", "delta_ek", "delta_example_e", "egb_identity_error",
    "estimate_bundle", "example_e_family", "gb_star_estimate",
    "gen_cantor_midpoints", "gen_egb_union", "gen_ek", "gen_example_e",
    "gen_poly_sequence", "gen_uniform_grid", "generalized_upper_box",
    "grid_count", "local_count", "make_pointset", "prenormalize",
    "quasi_assouad_estimate", "read_points", "resolution_floor",
    "restrict_to_ball", "run_egb_suite", "run_gubr_suite", "set_product",
    "set_union", "spectrum_sweep", "theta_grid", "theta_tolerance",
    "upper_spectrum", "witness_egb", "witness_gubr", "write_check_reports",
    "write_points",
]
