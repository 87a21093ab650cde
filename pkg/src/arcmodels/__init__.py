"""Finite formal models of arcs on complete intersections, with exact arithmetic.

The package builds the scheme of formal models Z for an arc on a complete
intersection, realises the bijection between arc deformations and model
deformations over Artinian test rings at finite t-precision, and computes
embedding codimensions at rational points by Groebner bases.
"""

from .deformation import (
    ArcDeformation,
    ModelDeformation,
    phi_forward,
    phi_inverse,
    tangent_space_dim,
    verify_bijection,
)
from .ecodim import IdealPresentation, analyze_arc, ecodim_at_point, ecodim_profile
from .field import GF, QQ, FieldSpec, parse_field
from .groebner import (
    EMPTY,
    GroebnerBasis,
    buchberger,
    ideal_dimension,
    ideal_intersect,
    ideal_quotient,
    is_groebner,
)
from .jets import Arc, SplitPresentation, jacobian_order, jet_equations, select_split, stratum_membership
from .model import ModelPoint, ModelPresentation, build_model, mu, mu_Z, verify_membership
from .parser import parse_poly
from .poly import MultiPoly, PolyRing
from .series import TruncSeries
from .testring import TestElem, TestRing, dual_numbers, test_ring_make
from .weierstrass import WeierstrassPoly, weierstrass_divide, weierstrass_prepare

__version__ = "0.1.0"

__all__ = [
    "Arc", "ArcDeformation", "EMPTY", "FieldSpec", "GF", "GroebnerBasis", "IdealPresentation",
    "ModelDeformation", "ModelPoint", "ModelPresentation", "MultiPoly", "PolyRing", "QQ",
    "SplitPresentation", "TestElem", "TestRing", "TruncSeries", "WeierstrassPoly", "analyze_arc",
    "build_model", "buchberger", "dual_numbers", "ecodim_at_point", "ecodim_profile",
    "ideal_dimension", "ideal_intersect", "ideal_quotient", "is_groebner", "jacobian_order",
    "jet_equations", "mu", "mu_Z", "parse_field", "parse_poly", "phi_forward", "phi_inverse",
    "select_split", "stratum_membership", "tangent_space_dim", "test_ring_make",
    "verify_bijection", "verify_membership", "weierstrass_divide", "weierstrass_prepare",
]
