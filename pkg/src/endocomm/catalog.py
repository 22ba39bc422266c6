"""Named algebras and the algebra literal grammar.

Literals accepted by ``parse_literal``::

    C(a,b,c,d;eps,delta)     curled form
    S(p,q,a,b,c,d)           straight form (e^2 = f)
    M[[a1,b1],[a2,b2],[a3,b3],[a4,b4]]
    #NN                      decimal structure code 0..255
    <name>                   catalog entry, e.g. C_12'', S'_3, ECC2_5, ECS2_11
"""

from __future__ import annotations

import re

from .algebra import Algebra, StructureMatrix, curled_form, straight_form
from .errors import ParseError, UnknownName

_CURLED = {
    "C_0": (0, 0, 0, 0, 0, 0),
    "C_1": (0, 1, 0, 1, 0, 0),
    "C_1'": (1, 0, 1, 0, 0, 0),
    "C_1''": (1, 1, 1, 1, 0, 0),
    "C_2": (0, 1, 1, 0, 0, 0),
    "C_3": (1, 0, 0, 1, 0, 0),
    "C_4": (0, 1, 0, 0, 1, 0),
    "C_5": (1, 1, 0, 1, 1, 0),
    "C_6": (0, 1, 1, 1, 1, 0),
    "C_7": (0, 0, 0, 1, 1, 0),
    "C_8": (1, 1, 1, 0, 0, 1),
    "C_9": (1, 0, 1, 1, 0, 1),
    "C_10": (0, 0, 1, 0, 0, 1),
    "C_11": (1, 0, 0, 0, 0, 1),
    "C_12": (0, 0, 0, 0, 1, 1),
    "C_12'": (0, 1, 0, 1, 1, 1),
    "C_12''": (1, 0, 1, 0, 1, 1),
    "C_13": (1, 1, 1, 1, 1, 1),
    "C_14": (0, 1, 1, 0, 1, 1),
    "C_15": (1, 0, 0, 1, 1, 1),
}

_STRAIGHT = {
    "S_1": (0, 0, 0, 0, 0, 1),
    "S_2": (0, 0, 0, 1, 0, 0),
    "S_3": (0, 1, 1, 1, 1, 0),
    "S_4": (0, 1, 1, 0, 1, 1),
    "S_5": (1, 1, 1, 0, 1, 0),
    "S_6": (1, 0, 0, 0, 0, 0),
    "S_7": (1, 0, 1, 1, 1, 1),
    "S_8": (0, 0, 0, 0, 0, 0),
    "S_9": (0, 0, 0, 1, 0, 1),
    "S_10": (0, 1, 0, 1, 0, 1),
    "S_11": (0, 1, 1, 0, 1, 0),
    "S_12": (1, 0, 0, 1, 1, 0),
    "S_13": (1, 0, 1, 0, 0, 1),
    "S'_1": (0, 0, 1, 0, 1, 0),
    "S'_2": (0, 0, 1, 1, 1, 1),
    "S'_3": (0, 1, 0, 0, 0, 0),
    "S'_4": (0, 1, 1, 1, 1, 1),
    "S'_5": (1, 0, 0, 1, 0, 1),
    "S'_6": (1, 0, 1, 0, 1, 0),
    "S'_7": (1, 1, 0, 0, 0, 0),
    "S'_8": (1, 1, 0, 1, 0, 1),
    "S'_9": (1, 1, 1, 1, 1, 1),
    # same tuple as S_11
    "S'_10": (0, 1, 1, 0, 1, 0),
}

# class representatives of the two classification theorems
ECC2 = {
    "ECC2_0": "C_0",
    "ECC2_1": "C_1",
    "ECC2_2": "C_2",
    "ECC2_3": "C_3",
    "ECC2_4": "C_4",
    "ECC2_5": "C_7",
    "ECC2_6": "C_12",
    "ECC2_7": "C_13",
}
ECS2 = {f"ECS2_{i}": f"S_{i}" for i in range(1, 14)}

CURLED_PARAMS = dict(_CURLED)
STRAIGHT_PARAMS = dict(_STRAIGHT)


def _build() -> dict[str, StructureMatrix]:
    out = {name: curled_form(*t) for name, t in _CURLED.items()}
    out.update({name: straight_form(*t) for name, t in _STRAIGHT.items()})
    for alias, target in {**ECC2, **ECS2}.items():
        out[alias] = out[target]
    return out


CATALOG: dict[str, StructureMatrix] = _build()


def names() -> list[str]:
    return list(CATALOG)


def catalog_lookup(name: str) -> Algebra:
    try:
        return Algebra(CATALOG[name])
    except KeyError:
        raise UnknownName(f"unknown algebra name: {name!r}") from None


def class_names() -> list[str]:
    """The 21 class representative names, curled first."""
    return list(ECC2) + list(ECS2)


def literal_of(sm: StructureMatrix) -> str:
    return str(sm)


_BIT = r"\s*([01])\s*"
_C_RE = re.compile(r"C\(" + ",".join([_BIT] * 4) + ";" + ",".join([_BIT] * 2) + r"\)")
_S_RE = re.compile(r"S\(" + ",".join([_BIT] * 6) + r"\)")
_PAIR = r"\[" + _BIT + "," + _BIT + r"\]"
_M_RE = re.compile(r"M\[\s*" + r"\s*,\s*".join([_PAIR] * 4) + r"\s*\]")
_CODE_RE = re.compile(r"#\s*(\d{1,3})")


def parse_literal(text: str) -> StructureMatrix:
    s = text.strip()
    if s in CATALOG:
        return CATALOG[s]
    if m := _C_RE.fullmatch(s):
        return curled_form(*map(int, m.groups()))
    if m := _S_RE.fullmatch(s):
        return straight_form(*map(int, m.groups()))
    if m := _M_RE.fullmatch(s):
        bits = list(map(int, m.groups()))
        return StructureMatrix.from_rows(zip(bits[::2], bits[1::2]))
    if m := _CODE_RE.fullmatch(s):
        code = int(m.group(1))
        if code > 255:
            raise ParseError(f"structure code out of range 0..255: {code}")
        return StructureMatrix(code)
    raise ParseError(f"cannot parse algebra literal: {text!r}")
