"""Partition families of structure matrices into isomorphism classes."""

from __future__ import annotations

from dataclasses import asdict, dataclass
from functools import lru_cache
from typing import Optional

from . import algebra as alg
from .algebra import StraightParams, StructureMatrix
from .catalog import CATALOG, class_names
from .errors import UnknownFilter
from .iso import orbit_of

FLAG_NAMES = (
    "ec",
    "curled",
    "commutative",
    "associative",
    "unital",
    "zeropotent",
    "anticommutative",
    "square_rootable",
)

FAMILIES = ("ec-curled", "ec-straight-normalized", "ec-straight", "ec-all", "all")


def enumerate_all() -> list[StructureMatrix]:
    return [StructureMatrix(c) for c in range(256)]


def family_codes(family: str) -> list[int]:
    """Ascending structure codes belonging to a named family."""
    ec = alg.is_endo_commutative_oracle
    if family == "all":
        return list(range(256))
    if family == "ec-all":
        return [c for c in range(256) if ec(c)]
    if family == "ec-curled":
        return [c for c in range(256) if alg.is_curled(c) and ec(c)]
    if family == "ec-straight":
        return [c for c in range(256) if alg.is_straight(c) and ec(c)]
    if family == "ec-straight-normalized":
        return sorted({P.matrix.code for P in StraightParams.all() if ec(P.matrix)})
    raise UnknownFilter(f"unknown family {family!r}; expected one of {', '.join(FAMILIES)}")


@lru_cache(maxsize=1)
def _names_by_canonical() -> dict[int, str]:
    return {orbit_of(CATALOG[name]).canonical: name for name in class_names()}


def paper_name(sm: StructureMatrix) -> Optional[str]:
    """ECC2_i / ECS2_i name of the class containing sm, if it is one of the 21."""
    return _names_by_canonical().get(orbit_of(sm).canonical)


@dataclass
class IsoClass:
    canonical_code: int
    representative: int
    paper_name: Optional[str]
    members: list[int]
    size: int
    rank: int
    properties: dict[str, bool]

    def to_dict(self) -> dict:
        return asdict(self)

    @classmethod
    def from_dict(cls, d: dict) -> "IsoClass":
        return cls(**d)


@dataclass
class ClassificationReport:
    family: str
    family_size: int
    classes: list[IsoClass]

    def to_dict(self) -> dict:
        return {
            "family": self.family,
            "family_size": self.family_size,
            "classes": [c.to_dict() for c in self.classes],
        }

    @classmethod
    def from_dict(cls, d: dict) -> "ClassificationReport":
        return cls(d["family"], d["family_size"], [IsoClass.from_dict(c) for c in d["classes"]])

    def by_name(self) -> dict[str, IsoClass]:
        return {c.paper_name: c for c in self.classes if c.paper_name}

    def names(self) -> list[str]:
        return [c.paper_name or f"#{c.canonical_code}" for c in self.classes]


def classify(family: str) -> ClassificationReport:
    codes = family_codes(family)
    in_family = set(codes)
    names = _names_by_canonical()
    seen: set[int] = set()
    classes = []
    for code in codes:
        if code in seen:
            continue
        orbit = orbit_of(StructureMatrix(code))
        members = sorted(orbit.members & in_family)
        seen.update(members)
        name = names.get(orbit.canonical)
        rep = CATALOG[name].code if name else orbit.canonical
        props = alg.properties(StructureMatrix(members[0]))
        rank = props.pop("rank")
        classes.append(IsoClass(
            canonical_code=orbit.canonical,
            representative=rep,
            paper_name=name,
            members=members,
            size=len(members),
            rank=rank,
            properties={k: props[k] for k in FLAG_NAMES},
        ))
    classes.sort(key=lambda c: c.canonical_code)
    return ClassificationReport(family, len(codes), classes)


def property_breakdown(family: str) -> dict[str, dict]:
    """Class label -> property flags (plus rank) for every class of the family."""
    report = classify(family)
    return {
        label: {**c.properties, "rank": c.rank}
        for label, c in zip(report.names(), report.classes)
    }


def classes_with(family: str, flag: str) -> set[str]:
    return {name for name, flags in property_breakdown(family).items() if flags[flag]}


def purely_ec_classes() -> list[str]:
    """EC classes that are neither zeropotent, unital, commutative nor associative."""
    special = ("zeropotent", "unital", "commutative", "associative")
    return [
        name for name, flags in property_breakdown("ec-all").items()
        if flags["ec"] and not any(flags[k] for k in special)
    ]


def ec_matrix_count() -> int:
    """Number of endo-commutative structure matrices among all 256."""
    return len(family_codes("ec-all"))
