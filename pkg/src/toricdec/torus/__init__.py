"""Exact torus kernel: certified angles, relation lattices, orbit
closures, box regions, coverage bounds and diophantine utilities."""

from .angles import (
    AngleExpr,
    GOLDEN,
    GOLDEN_SQ,
    FIB_XI,
    SQRT2M1,
    SALOMAA_THETA,
    ATAN34,
    NAMED_ANGLES,
    rational_angle,
    sqrt_expr,
    unit_angle,
)
from .relations import RelationBasis, relation_lattice
from .closure import OrbitClosure, orbit_closure
from .spec import TorusSpec, factor_region, coverage_bound, ap_oracle_from_spec
from .diophantine import (
    continued_fraction,
    convergents,
    kronecker_hit,
    small_remainder_witnesses,
)

__all__ = [
    "AngleExpr",
    "GOLDEN",
    "GOLDEN_SQ",
    "FIB_XI",
    "SQRT2M1",
    "SALOMAA_THETA",
    "ATAN34",
    "NAMED_ANGLES",
    "rational_angle",
    "sqrt_expr",
    "unit_angle",
    "RelationBasis",
    "relation_lattice",
    "OrbitClosure",
    "orbit_closure",
    "TorusSpec",
    "factor_region",
    "coverage_bound",
    "ap_oracle_from_spec",
    "continued_fraction",
    "convergents",
    "kronecker_hit",
    "small_remainder_witnesses",
]
