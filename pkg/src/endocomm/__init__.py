"""Two-dimensional nonassociative algebras over F2.

Structure matrices, endo-commutativity and classical property predicates,
isomorphism with witnesses, and the classification of endo-commutative
curled and straight algebras.
"""

from .algebra import (
    Algebra,
    CurledParams,
    StraightParams,
    StructureMatrix,
    Vec2,
    curled_form,
    straight_form,
)
from .catalog import catalog_lookup, parse_literal
from .classify import classify, purely_ec_classes
from .errors import ParseError, SingularMatrix, UnknownFilter, UnknownName
from .iso import are_isomorphic, canonical_form, orbit_of, transform

__all__ = [
    "Algebra",
    "CurledParams",
    "StraightParams",
    "StructureMatrix",
    "Vec2",
    "curled_form",
    "straight_form",
    "catalog_lookup",
    "parse_literal",
    "classify",
    "purely_ec_classes",
    "ParseError",
    "SingularMatrix",
    "UnknownFilter",
    "UnknownName",
    "are_isomorphic",
    "canonical_form",
    "orbit_of",
    "transform",
]
