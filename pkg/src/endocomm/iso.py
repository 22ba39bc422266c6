"""Isomorphism of two-dimensional algebras via the GL2(F2) action on structure matrices.

B is isomorphic to A exactly when B = tilde(X^-1) A X for some invertible X;
X is then called a transformation matrix (witness).
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from typing import Optional

from .algebra import StructureMatrix
from .errors import SingularMatrix
from .gf2 import (
    IDENTITY2,
    Mat2,
    apply_4x2_to_2x2,
    apply_4x4_to_4x2,
    gl2_elements,
    mat2_det,
    mat2_inverse,
    tilde,
)

GL2 = tuple(gl2_elements())
# witness search order: identity first so A ~ A reports I, then ascending code
SEARCH_ORDER = (IDENTITY2,) + tuple(x for x in GL2 if x != IDENTITY2)


@dataclass(frozen=True)
class IsoWitness:
    """transform(source, X) == target."""

    X: Mat2
    source: StructureMatrix
    target: StructureMatrix


@dataclass(frozen=True)
class Orbit:
    members: frozenset[int]

    @property
    def canonical(self) -> int:
        return min(self.members)

    @property
    def size(self) -> int:
        return len(self.members)

    def __contains__(self, item) -> bool:
        code = item.code if isinstance(item, StructureMatrix) else item
        return code in self.members


@lru_cache(maxsize=None)
def _transform_code(code: int, x_code: int) -> int:
    x = Mat2.from_code(x_code)
    rows = StructureMatrix(code).row_bits
    out = apply_4x4_to_4x2(tilde(mat2_inverse(x)), apply_4x2_to_2x2(rows, x))
    return out[0] << 6 | out[1] << 4 | out[2] << 2 | out[3]


def transform(a: StructureMatrix, x: Mat2) -> StructureMatrix:
    """tilde(X^-1) . A . X."""
    if not mat2_det(x):
        raise SingularMatrix(f"{x} is not invertible")
    return StructureMatrix(_transform_code(a.code, x.code))


def witnesses(a: StructureMatrix, b: StructureMatrix) -> list[Mat2]:
    """Every X in GL2 with transform(a, X) == b, in search order."""
    return [x for x in SEARCH_ORDER if _transform_code(a.code, x.code) == b.code]


def are_isomorphic(a: StructureMatrix, b: StructureMatrix) -> Optional[IsoWitness]:
    for x in SEARCH_ORDER:
        if _transform_code(a.code, x.code) == b.code:
            return IsoWitness(x, a, b)
    return None


def orbit_of(a: StructureMatrix) -> Orbit:
    return Orbit(frozenset(_transform_code(a.code, x.code) for x in GL2))


def canonical_form(a: StructureMatrix) -> StructureMatrix:
    return StructureMatrix(orbit_of(a).canonical)


def automorphisms(a: StructureMatrix) -> list[Mat2]:
    return witnesses(a, a)
