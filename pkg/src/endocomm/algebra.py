"""Two-dimensional algebras over F2 given by structure constants.

The structure matrix has rows (a1, b1), (a2, b2), (a3, b3), (a4, b4) with

    e^2 = a1 e + b1 f,  f^2 = a2 e + b2 f,  ef = a3 e + b3 f,  fe = a4 e + b4 f

and packs into the 8-bit code a1 b1 a2 b2 a3 b3 a4 b4 (a1 most significant).

Every property is decided two ways where possible: definitionally, by
brute force over the four elements, and by a closed-form equation system in
the structure constants. The brute-force predicates are the reference.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from itertools import product
from typing import NamedTuple, Optional, Union

from . import gf2


class Vec2(NamedTuple):
    """The element x1 e + x2 f."""

    x1: int
    x2: int

    def __add__(self, other):
        return Vec2(self.x1 ^ other[0], self.x2 ^ other[1])

    def __str__(self):
        return {(0, 0): "0", (1, 0): "e", (0, 1): "f", (1, 1): "e+f"}[tuple(self)]


ZERO = Vec2(0, 0)
E = Vec2(1, 0)
F = Vec2(0, 1)
# fixed iteration order: 0, e, f, e+f
ELEMENTS = (ZERO, E, F, Vec2(1, 1))


@dataclass(frozen=True, order=True)
class StructureMatrix:
    code: int

    def __post_init__(self):
        if not isinstance(self.code, int) or not 0 <= self.code <= 255:
            raise ValueError(f"structure code must be an int in [0, 255], got {self.code!r}")

    @classmethod
    def from_rows(cls, rows) -> "StructureMatrix":
        rows = [tuple(int(v) for v in r) for r in rows]
        if len(rows) != 4 or any(len(r) != 2 or not set(r) <= {0, 1} for r in rows):
            raise ValueError(f"expected four rows of two bits, got {rows!r}")
        code = 0
        for a, b in rows:
            code = code << 2 | a << 1 | b
        return cls(code)

    @property
    def row_bits(self) -> tuple[int, int, int, int]:
        c = self.code
        return (c >> 6 & 3, c >> 4 & 3, c >> 2 & 3, c & 3)

    @property
    def rows(self) -> tuple[tuple[int, int], ...]:
        return tuple((r >> 1, r & 1) for r in self.row_bits)

    @property
    def scalars(self) -> tuple[int, ...]:
        """(a1, b1, a2, b2, a3, b3, a4, b4)."""
        return tuple((self.code >> (7 - i)) & 1 for i in range(8))

    def __str__(self):
        return "M[" + ",".join(f"[{a},{b}]" for a, b in self.rows) + "]"


def curled_form(a, b, c, d, eps, delta) -> StructureMatrix:
    """C(a,b,c,d;eps,delta): e^2 = eps e, f^2 = delta f, ef = ae+bf, fe = ce+df."""
    return StructureMatrix.from_rows([(eps, 0), (0, delta), (a, b), (c, d)])


def straight_form(p, q, a, b, c, d) -> StructureMatrix:
    """S(p,q,a,b,c,d): e^2 = f, f^2 = pe+qf, ef = ae+bf, fe = ce+df."""
    return StructureMatrix.from_rows([(0, 1), (p, q), (a, b), (c, d)])


@dataclass(frozen=True)
class CurledParams:
    a: int
    b: int
    c: int
    d: int
    eps: int
    delta: int

    @property
    def matrix(self) -> StructureMatrix:
        return curled_form(self.a, self.b, self.c, self.d, self.eps, self.delta)

    @classmethod
    def all(cls) -> list["CurledParams"]:
        return [cls(*t) for t in product((0, 1), repeat=6)]


@dataclass(frozen=True)
class StraightParams:
    p: int
    q: int
    a: int
    b: int
    c: int
    d: int

    @property
    def matrix(self) -> StructureMatrix:
        return straight_form(self.p, self.q, self.a, self.b, self.c, self.d)

    @classmethod
    def all(cls) -> list["StraightParams"]:
        return [cls(*t) for t in product((0, 1), repeat=6)]


@lru_cache(maxsize=256)
def _product_table(code: int) -> tuple[tuple[Vec2, ...], ...]:
    a1, b1, a2, b2, a3, b3, a4, b4 = StructureMatrix(code).scalars
    table = []
    for x1, x2 in ELEMENTS:
        row = []
        for y1, y2 in ELEMENTS:
            e_coef = (x1 & y1 & a1) ^ (x2 & y2 & a2) ^ (x1 & y2 & a3) ^ (x2 & y1 & a4)
            f_coef = (x1 & y1 & b1) ^ (x2 & y2 & b2) ^ (x1 & y2 & b3) ^ (x2 & y1 & b4)
            row.append(Vec2(e_coef, f_coef))
        table.append(tuple(row))
    return tuple(table)


def _index(x) -> int:
    return x[0] | x[1] << 1


@dataclass(frozen=True)
class Algebra:
    sm: StructureMatrix

    @property
    def code(self) -> int:
        return self.sm.code

    def mul(self, x, y) -> Vec2:
        return _product_table(self.sm.code)[_index(x)][_index(y)]

    def square(self, x) -> Vec2:
        return self.mul(x, x)

    def table(self) -> tuple[tuple[Vec2, Vec2], tuple[Vec2, Vec2]]:
        """The multiplication table [[e^2, ef], [fe, f^2]]."""
        return ((self.mul(E, E), self.mul(E, F)), (self.mul(F, E), self.mul(F, F)))


AlgebraLike = Union[Algebra, StructureMatrix, int]


def as_algebra(x: AlgebraLike) -> Algebra:
    if isinstance(x, Algebra):
        return x
    if isinstance(x, StructureMatrix):
        return Algebra(x)
    if isinstance(x, int):
        return Algebra(StructureMatrix(x))
    raise TypeError(f"cannot interpret {type(x).__name__} as an algebra")


def multiply(alg: AlgebraLike, x, y) -> Vec2:
    return as_algebra(alg).mul(x, y)


def square_map(alg: AlgebraLike, x) -> Vec2:
    return as_algebra(alg).square(x)


# -- definitional predicates -------------------------------------------------

def is_endo_commutative_oracle(alg: AlgebraLike) -> bool:
    """x^2 y^2 == (xy)^2 for all 16 ordered pairs."""
    A = as_algebra(alg)
    return all(
        A.mul(A.square(x), A.square(y)) == A.square(A.mul(x, y))
        for x in ELEMENTS for y in ELEMENTS
    )


def is_commutative(alg: AlgebraLike) -> bool:
    A = as_algebra(alg)
    return all(A.mul(x, y) == A.mul(y, x) for x in ELEMENTS for y in ELEMENTS)


def is_associative(alg: AlgebraLike) -> bool:
    A = as_algebra(alg)
    return all(
        A.mul(A.mul(x, y), z) == A.mul(x, A.mul(y, z))
        for x in ELEMENTS for y in ELEMENTS for z in ELEMENTS
    )


def unit_element(alg: AlgebraLike) -> Optional[Vec2]:
    """First u in element order with ux = xu = x for every x, else None."""
    A = as_algebra(alg)
    for u in ELEMENTS:
        if all(A.mul(u, x) == x and A.mul(x, u) == x for x in ELEMENTS):
            return u
    return None


def is_unital(alg: AlgebraLike) -> bool:
    return unit_element(alg) is not None


def is_zeropotent(alg: AlgebraLike) -> bool:
    A = as_algebra(alg)
    return all(A.square(x) == ZERO for x in ELEMENTS)


def is_anticommutative(alg: AlgebraLike) -> bool:
    """The square map is additive."""
    A = as_algebra(alg)
    return all(
        A.square(x + y) == A.square(x) + A.square(y)
        for x in ELEMENTS for y in ELEMENTS
    )


def is_square_rootable(alg: AlgebraLike) -> bool:
    """The square map is surjective."""
    A = as_algebra(alg)
    return len({A.square(x) for x in ELEMENTS}) == len(ELEMENTS)


def is_curled(alg: AlgebraLike) -> bool:
    A = as_algebra(alg)
    return all(A.square(x) in (ZERO, x) for x in ELEMENTS)


def is_straight(alg: AlgebraLike) -> bool:
    return not is_curled(alg)


# -- closed-form systems -----------------------------------------------------

def is_endo_commutative_system(alg: AlgebraLike) -> bool:
    """Endo-commutativity as eight polynomial equations in the structure constants."""
    a1, b1, a2, b2, a3, b3, a4, b4 = as_algebra(alg).sm.scalars
    eqs = (
        a1*a2 + a2*b1*b2 + a1*a3*b2 + a2*a4*b1 + a1*a3 + a2*b3 + a3*b3 + a3*a4*b3,
        a1*a2 + a2*b1*b2 + a2*a3*b1 + a1*a4*b2 + a1*a4 + a2*b4 + a3*a4*b4 + a4*b4,
        a1*a3 + a1*a4 + a4*b1 + a2*b1*b3 + a2*b1*b4 + a1*a3*b4 + a3*b1 + a1*a4*b3,
        a1*a2*a4 + a2*a4*b4 + a2*b2*b4 + a1*a2*a3 + a2*b2*b3 + a2*a3*b3,
        a1*a2*b1 + b1*b2 + a1*b2*b3 + a2*b1*b4 + a3*b1 + b2*b3 + a3*b3 + a3*b3*b4,
        a1*a2*b1 + b1*b2 + a2*b1*b3 + a1*b2*b4 + a4*b1 + b2*b4 + a4*b3*b4 + a4*b4,
        a1*a3*b1 + a1*a4*b1 + a4*b1*b4 + b1*b2*b3 + b1*b2*b4 + a3*b1*b3,
        a2*a3*b1 + a2*a4*b1 + a4*b2*b3 + b2*b3 + b2*b4 + a2*b4 + a2*b3 + a3*b2*b4,
    )
    return all(v % 2 == 0 for v in eqs)


def curled_condition(params: CurledParams) -> bool:
    """C(a,b,c,d;eps,delta) is curled iff eps + a + c == delta + b + d."""
    P = params
    return (P.eps + P.a + P.c) % 2 == (P.delta + P.b + P.d) % 2


def curled_ec_system(params: CurledParams) -> bool:
    """C(a,b,c,d;eps,delta) is both curled and endo-commutative."""
    a, b, c, d, e, t = params.a, params.b, params.c, params.d, params.eps, params.delta
    eqs = (
        e + t + a + b + c + d,
        a * (e*t + e + b + b*c),
        c * (e*t + e + a*d + d),
        e * (a + c + a*d + b*c),
        b * (e*t + t + a + a*d),
        d * (e*t + t + b*c + c),
        t * (b*c + b + d + a*d),
    )
    return all(v % 2 == 0 for v in eqs)


def straight_ec_system(params: StraightParams) -> bool:
    p, q, a, b, c, d = params.p, params.q, params.a, params.b, params.c, params.d
    eqs = (
        p*q + p*c + p*b + a*b + a*b*c,
        p*q + p*a + p*d + a*c*d + c*d,
        c + p*b + p*d + a,
        p*c*d + p*q*d + p*q*b + p*a*b,
        q + p*d + a + q*b + a*b + a*b*d,
        q + p*b + c + q*d + b*c*d + c*d,
        c*d + q*b + q*d + a*b,
        p*a + p*c + q*b*c + q*b + q*d + p*d + p*b + q*a*d,
    )
    return all(v % 2 == 0 for v in eqs)


def straight_assoc_system(params: StraightParams) -> bool:
    p, q, a, b, c, d = params.p, params.q, params.a, params.b, params.c, params.d
    return c == a and d == b and p == a & b and q == a ^ b


def straight_unital_system(params: StraightParams) -> bool:
    p, q, a, b, c, d = params.p, params.q, params.a, params.b, params.c, params.d
    return a == c == 1 and p == b == d and q == 1 ^ p


def commutative_shortcut(alg: AlgebraLike) -> bool:
    """ef == fe, i.e. (a3, b3) == (a4, b4)."""
    rows = as_algebra(alg).sm.row_bits
    return rows[2] == rows[3]


def properties(alg: AlgebraLike) -> dict:
    """All boolean property flags plus rank, keyed by stable names."""
    A = as_algebra(alg)
    return {
        "ec": is_endo_commutative_oracle(A),
        "curled": is_curled(A),
        "commutative": is_commutative(A),
        "associative": is_associative(A),
        "unital": is_unital(A),
        "zeropotent": is_zeropotent(A),
        "anticommutative": is_anticommutative(A),
        "square_rootable": is_square_rootable(A),
        "rank": gf2.rank_4x2(A.sm),
    }
