from collections import Counter

import pytest
from hypothesis import given
from hypothesis import strategies as st

from gl2hopf.adjoint import (
    adjoint_blocks,
    adjoint_gl2_coords,
    adjoint_gl2_points,
    adjoint_restrictions,
    adjoint_sl2,
    adjoint_sl2_from_gl2,
    adjoint_weights,
    sl2_adjoint_blocks,
    sl2_adjoint_weights,
)
from gl2hopf.algebra import CoeffRing
from gl2hopf.comodule import is_closed, verify_comodule
from gl2hopf.hopf import gl2_hopf, sl2_hopf
from gl2hopf.weights import character

from strategies import RINGS

Z = CoeffRing.integers()


def test_e12_coefficient_of_ad_e12():
    W = adjoint_gl2_points()
    c = W.carrier
    assert W.entry(1, 1) == c.gen("x11") ** 2 * c.det().inverse()


def test_identity_is_central():
    W = adjoint_gl2_points()
    c = W.carrier
    col = [W.entry(i, 0) + W.entry(i, 3) for i in range(4)]
    assert col == [c.one(), c.zero(), c.zero(), c.one()]


def test_counit_gives_identity():
    W = adjoint_gl2_points()
    h = W.hopf
    assert [[h.apply_counit(W.entry(i, j)) for j in range(4)] for i in range(4)] == \
        [[int(i == j) for j in range(4)] for i in range(4)]


def test_coordinate_construction_matches_points():
    A = adjoint_gl2_coords()
    assert A.report.ok
    assert A.dual.same_matrix(adjoint_gl2_points())
    assert all(v == A.comodule.carrier.one() * w for v, w in zip(A.values, (1, 0, 0, 1)))


def test_ad_t1_ex_coefficient():
    M = adjoint_gl2_coords().comodule
    c = M.carrier
    assert M.entry(1, 0) == c.gen("x21") * c.gen("x22") * c.det().inverse()


def test_restrictions():
    AdN, AdT = adjoint_restrictions()
    assert AdT.to_strings() == [
        ["1", "0", "0", "0"],
        ["0", "t1^1*t2^-1", "0", "0"],
        ["0", "0", "t1^-1*t2^1", "0"],
        ["0", "0", "0", "1"],
    ]
    # displayed k[N] matrix, column by column
    assert AdN.to_strings()[1] == ["(0, 0)", "(t1^1*t2^-1, 0)", "(0, u1^1*u2^-1)", "(0, 0)"]
    assert AdN.to_strings()[0] == ["(1, 0)", "(0, 0)", "(0, 0)", "(0, 1)"]


def test_weights_multiset():
    assert Counter(adjoint_weights()) == Counter([(0, 0), (-1, 1), (1, -1), (0, 0)])


def test_refined_blocks():
    AdN, _ = adjoint_restrictions()
    blocks = adjoint_blocks()
    assert [b.indices for b in blocks] == [(0, 3), (1, 2)]
    assert all(is_closed(AdN, b.indices) for b in blocks)


def test_sl2_examples():
    S = adjoint_sl2()
    c = S.carrier
    x11, x12, x21, x22 = (c.gen(v) for v in ("x11", "x12", "x21", "x22"))
    assert S.entry(1, 1) == x11 * x22 + x12 * x21
    assert S.entry(0, 2) == -(x12**2)
    assert sl2_adjoint_weights() == [2, 0, -2]
    assert [b.indices for b in sl2_adjoint_blocks()] == [(0, 2), (1,)]


def test_sl2_two_routes_agree():
    assert adjoint_sl2_from_gl2().same_matrix(adjoint_sl2())


def test_adjoint_comodule_axioms():
    assert verify_comodule(adjoint_gl2_points()).ok
    assert verify_comodule(adjoint_sl2()).ok


def test_adjoint_character_is_weyl_symmetric():
    ch = character(adjoint_weights())
    assert ch.coefficient((0, 0)) == 2
    assert ch == character([(b, a) for a, b in adjoint_weights()])


@pytest.mark.parametrize("ring", RINGS, ids=str)
def test_adjoint_over_rings(ring):
    assert adjoint_gl2_coords(ring).dual.same_matrix(adjoint_gl2_points(ring))
    assert verify_comodule(adjoint_sl2(ring)).ok


@given(st.sampled_from(RINGS), st.integers(0, 3))
def test_coaction_inverts_through_antipode(ring, j):
    # Ad(g^-1) = Ad(g)^-1: applying S entrywise gives the inverse matrix
    W = adjoint_gl2_points(ring)
    h = gl2_hopf(ring)
    c = h.carrier
    for i in range(4):
        acc = c.zero()
        for k in range(4):
            acc = acc + W.entry(i, k) * h.apply_antipode(W.entry(k, j))
        assert acc == c.scalar(int(i == j))


def test_sl2_adjoint_lives_over_sl2():
    assert adjoint_sl2().hopf is sl2_hopf(Z)
