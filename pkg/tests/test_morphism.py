from fractions import Fraction

import pytest
from hypothesis import assume, given
from hypothesis import strategies as st

from gl2hopf.algebra import CoeffRing
from gl2hopf.comodule import Comodule, dual, restrict, standard, sym_power
from gl2hopf.errors import UsageError
from gl2hopf.hopf import gl2_hopf, quotient_map, sl2_hopf
from gl2hopf.morphism import (
    dual_iso_check,
    hom_space,
    inverse_scalar,
    is_morphism,
    iso_exists,
    scalar_det,
    sym_pair,
)
from gl2hopf.weights import extract_weights

Z = CoeffRing.integers()
Q = CoeffRing.rationals()
F3 = CoeffRing.prime_field(3)


def eye(n):
    return [[int(i == j) for j in range(n)] for i in range(n)]


def test_hom_sym2_to_sym_tensor2_over_q():
    W1, W2 = sym_pair(Q)
    H = hom_space(W1, W2)
    assert H.dim == 1
    (U,) = H.basis
    a = U[0][0]
    # U = diag(a, a/2, a): the middle basis vector e1 e2 goes to (e1(x)e2 + e2(x)e1) / 2
    assert U == [[a, 0, 0], [0, a / 2, 0], [0, 0, a]]


def test_hom_sym_tensor2_to_sym2_over_q():
    W1, W2 = sym_pair(Q)
    (U,) = hom_space(W2, W1).basis
    a = U[0][0]
    assert U == [[a, 0, 0], [0, 2 * a, 0], [0, 0, a]]


def test_hom_over_z_is_exact_lattice():
    W1, W2 = sym_pair(Z)
    H = hom_space(W1, W2)
    assert H.lattice_exact and H.dim == 1
    assert H.basis[0] in ([[2, 0, 0], [0, 1, 0], [0, 0, 2]], [[-2, 0, 0], [0, -1, 0], [0, 0, -2]])


def test_not_isomorphic_over_z():
    W1, W2 = sym_pair(Z)
    r = iso_exists(W1, W2)
    assert r.verdict == "none"
    assert "2 is not a unit" in r.obstruction


def test_isomorphic_over_q_with_diag_121():
    W1, W2 = sym_pair(Q)
    r = iso_exists(W2, W1)
    assert r.isomorphic
    assert r.witness == [[1, 0, 0], [0, 2, 0], [0, 0, 1]]
    assert r.report.ok


@pytest.mark.parametrize("ring", [Z, Q, F3, CoeffRing.prime_field(2)], ids=str)
def test_identity_over_n(ring):
    W1, W2 = sym_pair(ring, "N")
    assert W1.same_matrix(W2)
    r = iso_exists(W1, W2)
    assert r.isomorphic and r.witness == eye(3)


def test_iso_over_f3():
    W1, W2 = sym_pair(F3)
    assert iso_exists(W1, W2).isomorphic


def test_iso_over_f2_fails():
    # in characteristic 2 the symmetriser has no inverse
    W1, W2 = sym_pair(CoeffRing.prime_field(2))
    assert iso_exists(W1, W2).verdict == "none"


def test_dual_pair():
    assert dual_iso_check().ok


def test_mixed_sides_or_algebras_rejected():
    h = gl2_hopf(Z)
    with pytest.raises(UsageError):
        hom_space(standard(h, "left"), standard(h, "right"))
    with pytest.raises(UsageError):
        hom_space(standard(h), standard(sl2_hopf(Z)))


def test_scalar_helpers():
    U = [[2, 0], [0, 3]]
    assert scalar_det(U) == 6
    assert inverse_scalar(U, Q) == [[Fraction(1, 2), 0], [0, Fraction(1, 3)]]
    assert inverse_scalar([[2, 0], [0, 1]], F3) == [[2, 0], [0, 1]]
    with pytest.raises(ArithmeticError):
        inverse_scalar([[1, 2], [2, 4]], Q)


# --- properties -------------------------------------------------------------


specs = st.tuples(st.sampled_from([Q, F3, CoeffRing.prime_field(5)]), st.integers(0, 3),
                  st.sampled_from(["G", "N", "T"]), st.booleans())


def _build(ring, d, kind, dualise):
    W = sym_power(standard(gl2_hopf(ring)), d)
    if dualise:
        W = dual(W)
    if kind != "G":
        W = restrict(W, quotient_map("GL2", "G", kind, ring))
    return W


@given(specs)
def test_identity_is_always_a_morphism(case):
    W = _build(*case)
    assert is_morphism(eye(W.rank), W, W)
    r = iso_exists(W, W)
    assert r.isomorphic and r.report.ok


@given(st.integers(0, 4))
def test_torus_endomorphisms_are_diagonal(d):
    W = _build(Q, d, "T", False)
    H = hom_space(W, W)
    assert H.dim == d + 1
    w = extract_weights(W)
    for U in H.basis:
        for i in range(W.rank):
            for j in range(W.rank):
                if U[i][j]:
                    assert w[i] == w[j]


@st.composite
def invertible(draw, n):
    U = [[Fraction(draw(st.integers(-2, 2))) for _ in range(n)] for _ in range(n)]
    assume(scalar_det(U) != 0)
    return U


@given(st.integers(1, 3), st.data())
def test_conjugated_comodule_is_found_isomorphic(d, data):
    W = _build(Q, d, "G", False)
    P = data.draw(invertible(W.rank))
    Pi = inverse_scalar(P, Q)
    car = W.carrier
    n = W.rank
    # W' has matrix P M P^-1, so P is an intertwiner W -> W'
    M = [[sum((W.matrix[k][l] * (P[i][k] * Pi[l][j]) for k in range(n) for l in range(n)), car.zero())
          for j in range(n)] for i in range(n)]
    W2 = Comodule(W.hopf, M, W.side, W.basis)
    assert is_morphism(P, W, W2)
    r = iso_exists(W, W2)
    assert r.isomorphic
    assert is_morphism(r.witness, W, W2)
    assert is_morphism(inverse_scalar(r.witness, Q), W2, W)
