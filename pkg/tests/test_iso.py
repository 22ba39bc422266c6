import random
from itertools import product

import pytest

from endocomm import algebra as alg
from endocomm.algebra import StructureMatrix
from endocomm.catalog import CATALOG
from endocomm.errors import SingularMatrix
from endocomm.gf2 import IDENTITY2, Mat2, gl2_elements, mat2_inverse, rank_4x2
from endocomm.iso import (
    are_isomorphic,
    automorphisms,
    canonical_form,
    orbit_of,
    transform,
    witnesses,
)

SWAP = Mat2(0, 1, 1, 0)
ALL = [StructureMatrix(c) for c in range(256)]
GL = gl2_elements()


def change_of_basis_product(sm, x):
    """Structure matrix after moving to the base (e', f') with (e, f)^T = X (e', f')^T.

    Computed from scratch: express each product of new basis vectors through the
    old table, then read off coordinates in the new basis.
    """
    A = alg.Algebra(sm)
    inv = mat2_inverse(x)
    # new basis vectors in old coordinates: rows of X^-1
    e_new = alg.Vec2(inv.a, inv.b)
    f_new = alg.Vec2(inv.c, inv.d)

    def coords(v):
        # v = s e_new + t f_new
        for s, t in product((0, 1), repeat=2):
            w = alg.Vec2(s & e_new.x1 ^ t & f_new.x1, s & e_new.x2 ^ t & f_new.x2)
            if w == v:
                return (s, t)
        raise AssertionError

    prods = [A.mul(e_new, e_new), A.mul(f_new, f_new), A.mul(e_new, f_new), A.mul(f_new, e_new)]
    return StructureMatrix.from_rows([coords(p) for p in prods])


def test_transform_is_change_of_basis():
    for sm in ALL:
        for x in GL:
            assert transform(sm, x) == change_of_basis_product(sm, x)


def test_transform_examples():
    for sm in ALL:
        assert transform(sm, IDENTITY2) == sm
    assert transform(CATALOG["C_1'"], SWAP) == CATALOG["C_1"]
    for sm in ALL:
        for x in GL:
            assert transform(transform(sm, x), mat2_inverse(x)) == sm


def test_transform_is_group_action():
    for sm in ALL:
        for x, y in product(GL, repeat=2):
            assert transform(transform(sm, x), y) == transform(sm, x @ y)


def test_transform_singular():
    with pytest.raises(SingularMatrix):
        transform(StructureMatrix(0), Mat2(1, 1, 1, 1))


def test_are_isomorphic_examples():
    w = are_isomorphic(CATALOG["C_1"], CATALOG["C_1'"])
    assert w is not None and w.X == SWAP
    assert are_isomorphic(CATALOG["C_2"], CATALOG["C_3"]) is None
    for sm in ALL:
        assert are_isomorphic(sm, sm).X == IDENTITY2


def test_witness_applies():
    rng = random.Random(7)
    for _ in range(300):
        a, b = rng.choice(ALL), rng.choice(ALL)
        w = are_isomorphic(a, b)
        if w:
            assert transform(a, w.X) == b
            assert w.X == witnesses(a, b)[0]


def test_equivalence_relation():
    rng = random.Random(11)
    orbit_pick = [sorted(orbit_of(s).members) for s in ALL]
    for _ in range(500):
        a = rng.choice(ALL)
        b = StructureMatrix(rng.choice(orbit_pick[a.code]))
        c = StructureMatrix(rng.choice(orbit_pick[b.code]))
        wab, wbc = are_isomorphic(a, b), are_isomorphic(b, c)
        assert wab and wbc
        assert transform(b, mat2_inverse(wab.X)) == a
        assert transform(a, wab.X @ wbc.X) == c


def test_orbit_examples():
    zero = orbit_of(StructureMatrix(0))
    assert zero.members == {0} and zero.size == 1
    c1 = orbit_of(CATALOG["C_1"])
    assert {CATALOG[n].code for n in ("C_1", "C_1'", "C_1''")} <= c1.members
    s7 = orbit_of(CATALOG["S_7"])
    images = {transform(CATALOG["S_7"], x).code for x in GL}
    assert s7.members == images and s7.size == 3


def test_orbit_sizes_divide_group_order():
    for sm in ALL:
        o = orbit_of(sm)
        assert 6 % o.size == 0
        assert sm in o
        assert o.size * len(automorphisms(sm)) == 6


def test_canonical_form():
    assert canonical_form(StructureMatrix(0)) == StructureMatrix(0)
    c1 = {canonical_form(CATALOG[n]) for n in ("C_1", "C_1'", "C_1''")}
    assert len(c1) == 1
    assert canonical_form(CATALOG["S'_1"]) != canonical_form(CATALOG["S_7"])
    for sm in ALL:
        c = canonical_form(sm)
        assert canonical_form(c) == c
        assert all(canonical_form(StructureMatrix(m)) == c for m in orbit_of(sm).members)


def test_iso_iff_same_canonical():
    for a in ALL[::7]:
        for b in ALL:
            assert (are_isomorphic(a, b) is not None) == (canonical_form(a) == canonical_form(b))


def test_invariants_constant_on_orbits():
    preds = [alg.is_endo_commutative_oracle, alg.is_commutative, alg.is_associative,
             alg.is_unital, alg.is_zeropotent, alg.is_curled, alg.is_anticommutative,
             alg.is_square_rootable, rank_4x2]
    for sm in ALL:
        base = [p(sm) for p in preds]
        for x in GL:
            t = transform(sm, x)
            assert [p(t) for p in preds] == base
