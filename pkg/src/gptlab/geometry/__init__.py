"""Exact rational geometry: scalars, LP, and polytope representation conversion."""
from .field import QSqrt2, SQRT2, format_scalar, parse_scalar
from .lp import find_feasible_point, lp_optimize
from .polyhedra import (
    HalfSpace,
    HRep,
    RVector,
    VRep,
    affine_dimension,
    affine_hull,
    extreme_rays,
    format_vector,
    hrep_to_vrep,
    make_hrep,
    rvec,
    vrep_to_hrep,
)

__all__ = [
    "QSqrt2", "SQRT2", "format_scalar", "parse_scalar", "find_feasible_point", "lp_optimize",
    "HalfSpace", "HRep", "RVector", "VRep", "affine_dimension", "affine_hull", "extreme_rays",
    "format_vector", "hrep_to_vrep", "make_hrep", "rvec", "vrep_to_hrep",
]
