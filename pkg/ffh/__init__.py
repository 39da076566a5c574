"""Fueter-Funk-Hecke transforms in the Clifford algebra R_{0,p+q}."""

__version__ = "1.0.0"

from ffh.clifford import Blade, Multivector, blade_product, geometric_product, grade_project, is_even
from ffh.errors import FFHError
from ffh.gegenbauer import funk_hecke_oracle, gauss_jacobi_rule, gegenbauer, moment, surface_area
from ffh.parsing import parse_holomorphic, parse_monogenic, parse_poly
from ffh.polyalg import CartesianPoly, SphericalMonogenic, builtin_monogenic, validate_spherical_monogenic
from ffh.radial import LaurentBi, RadialElement, ScalarExt, radial_laplacian, to_cartesian
from ffh.transform import (
    HolomorphicInput,
    biaxial_transform,
    biaxial_transform_numeric,
    classify_power,
    fuesom_profiles,
    fueter_axial,
    normalize,
    verify_monogenic,
)

__all__ = [
    "Blade",
    "CartesianPoly",
    "FFHError",
    "HolomorphicInput",
    "LaurentBi",
    "Multivector",
    "RadialElement",
    "ScalarExt",
    "SphericalMonogenic",
    "biaxial_transform",
    "biaxial_transform_numeric",
    "blade_product",
    "builtin_monogenic",
    "classify_power",
    "fuesom_profiles",
    "fueter_axial",
    "funk_hecke_oracle",
    "gauss_jacobi_rule",
    "gegenbauer",
    "geometric_product",
    "grade_project",
    "is_even",
    "moment",
    "normalize",
    "parse_holomorphic",
    "parse_monogenic",
    "parse_poly",
    "radial_laplacian",
    "surface_area",
    "to_cartesian",
    "validate_spherical_monogenic",
    "verify_monogenic",
]
