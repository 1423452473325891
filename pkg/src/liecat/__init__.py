"""Exact free Lie algebras, their endomorphism semigroups and point-set duality."""

from .category import Morphism, Point, find_separating_point, poly_map, tilde_map
from .endo import (
    Endo,
    SemiMorphism,
    check_automorphism,
    compose,
    constant,
    diagonal_twist,
    inner_conjugate,
    make_sigma_F,
    semi_conjugate,
    to_matrix,
)
from .errors import LiecatError
from .hall import BasisTable, generate_basis, witt_dimension
from .liepoly import FreeLieAlgebra, LiePoly, bar_transform, bracket, to_associative
from .matrix import MatrixN
from .parser import parse_expr, parse_scalar
from .scalar import Field, FieldAut, Scalar
from .verify import SuiteConfig, run_all, run_suite

__version__ = "0.1.0"

__all__ = [
    "BasisTable",
    "Endo",
    "Field",
    "FieldAut",
    "FreeLieAlgebra",
    "LiePoly",
    "LiecatError",
    "MatrixN",
    "Morphism",
    "Point",
    "Scalar",
    "SemiMorphism",
    "SuiteConfig",
    "bar_transform",
    "bracket",
    "check_automorphism",
    "compose",
    "constant",
    "diagonal_twist",
    "find_separating_point",
    "generate_basis",
    "inner_conjugate",
    "make_sigma_F",
    "parse_expr",
    "parse_scalar",
    "poly_map",
    "run_all",
    "run_suite",
    "semi_conjugate",
    "tilde_map",
    "to_associative",
    "to_matrix",
    "witt_dimension",
]
