"""Linear algebra over F2 for 2x2 and 4x4 matrices, packed into ints.

A 2x2 matrix [[a, b], [c, d]] packs into the 4-bit code a*8 + b*4 + c*2 + d.
A 4x4 matrix is a tuple of four 4-bit row masks, column 0 in the high bit.
Rows of a 4x2 matrix are 2-bit masks, column 0 in the high bit.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable

from .errors import SingularMatrix


@dataclass(frozen=True, order=True)
class Mat2:
    a: int
    b: int
    c: int
    d: int

    def __post_init__(self):
        for v in (self.a, self.b, self.c, self.d):
            if v not in (0, 1):
                raise ValueError(f"entries must be 0 or 1, got {v!r}")

    @classmethod
    def from_code(cls, code: int) -> "Mat2":
        if not 0 <= code < 16:
            raise ValueError(f"2x2 code out of range: {code}")
        return cls((code >> 3) & 1, (code >> 2) & 1, (code >> 1) & 1, code & 1)

    @classmethod
    def from_rows(cls, rows) -> "Mat2":
        (a, b), (c, d) = rows
        return cls(int(a), int(b), int(c), int(d))

    @property
    def code(self) -> int:
        return self.a << 3 | self.b << 2 | self.c << 1 | self.d

    @property
    def row_bits(self) -> tuple[int, int]:
        return (self.a << 1 | self.b, self.c << 1 | self.d)

    def rows(self) -> list[list[int]]:
        return [[self.a, self.b], [self.c, self.d]]

    def __str__(self):
        return f"[[{self.a},{self.b}],[{self.c},{self.d}]]"

    def __matmul__(self, other: "Mat2") -> "Mat2":
        return mat2_mul(self, other)


IDENTITY2 = Mat2(1, 0, 0, 1)


def mat2_det(x: Mat2) -> int:
    return (x.a & x.d) ^ (x.b & x.c)


def mat2_mul(x: Mat2, y: Mat2) -> Mat2:
    r0, r1 = x.row_bits
    y0, y1 = y.row_bits
    # row i of XY is the XOR of the rows of Y selected by row i of X
    p0 = (y0 if r0 & 2 else 0) ^ (y1 if r0 & 1 else 0)
    p1 = (y0 if r1 & 2 else 0) ^ (y1 if r1 & 1 else 0)
    return Mat2.from_code(p0 << 2 | p1)


def mat2_inverse(x: Mat2) -> Mat2:
    if not mat2_det(x):
        raise SingularMatrix(f"{x} has determinant 0")
    # adjugate; -1 == 1 and det == 1 in F2
    return Mat2(x.d, x.b, x.c, x.a)


def gl2_elements() -> list[Mat2]:
    """The six invertible 2x2 matrices over F2, by ascending 4-bit code."""
    return [m for m in map(Mat2.from_code, range(16)) if mat2_det(m)]


@dataclass(frozen=True)
class Mat4:
    rows: tuple[int, int, int, int]

    @classmethod
    def from_lists(cls, entries: Iterable[Iterable[int]]) -> "Mat4":
        rows = []
        for row in entries:
            bits = 0
            for v in row:
                bits = bits << 1 | (int(v) & 1)
            rows.append(bits)
        if len(rows) != 4:
            raise ValueError("a 4x4 matrix needs exactly four rows")
        return cls(tuple(rows))

    def to_lists(self) -> list[list[int]]:
        return [[(r >> (3 - j)) & 1 for j in range(4)] for r in self.rows]

    def __matmul__(self, other: "Mat4") -> "Mat4":
        return mat4_mul(self, other)


IDENTITY4 = Mat4((0b1000, 0b0100, 0b0010, 0b0001))


def _combine(selector: int, rows: tuple[int, ...]) -> int:
    """XOR of rows[j] over the set bits j of selector (bit for j=0 is highest)."""
    n = len(rows)
    acc = 0
    for j, row in enumerate(rows):
        if selector >> (n - 1 - j) & 1:
            acc ^= row
    return acc


def mat4_mul(p: Mat4, q: Mat4) -> Mat4:
    return Mat4(tuple(_combine(r, q.rows) for r in p.rows))


def tilde(x: Mat2) -> Mat4:
    """Image of a 2x2 basis change on the (e^2, f^2, ef, fe) coordinates."""
    a, b, c, d = x.a, x.b, x.c, x.d
    return Mat4.from_lists([
        [a, b, a & b, a & b],
        [c, d, c & d, c & d],
        [a & c, b & d, a & d, b & c],
        [a & c, b & d, b & c, a & d],
    ])


def rank_4x2(m) -> int:
    """Rank over F2 of a 4x2 matrix given as a StructureMatrix or four 2-bit rows."""
    work = list(getattr(m, "row_bits", m))
    rank = 0
    for bit in (2, 1):
        pivot = next((r for r in work if r & bit), None)
        if pivot is None:
            continue
        work.remove(pivot)
        work = [r ^ pivot if r & bit else r for r in work]
        rank += 1
    return rank


def apply_4x4_to_4x2(t: Mat4, rows: tuple[int, ...]) -> tuple[int, ...]:
    """Left-multiply a 4x2 matrix (2-bit rows) by a 4x4 matrix."""
    return tuple(_combine(r, rows) for r in t.rows)


def apply_4x2_to_2x2(rows: tuple[int, ...], x: Mat2) -> tuple[int, ...]:
    """Right-multiply a 4x2 matrix (2-bit rows) by a 2x2 matrix."""
    xr = x.row_bits
    return tuple(_combine(r, xr) for r in rows)
