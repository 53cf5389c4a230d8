import itertools

from hypothesis import given
from hypothesis import strategies as st

from gl2hopf.algebra import CoeffRing
from gl2hopf.distributions import (
    Dist,
    Jet,
    bracket,
    bracket_table,
    dist_basis,
    dist_to_matrix,
    gl2_matrix_bracket,
    jacobi_defects,
    jet1,
    rho_prime,
    sl2_to_gl2,
)
from gl2hopf.hopf import gl2_hopf

from strategies import localized

Z = CoeffRing.integers()
H = gl2_hopf(Z)
C = H.carrier
z0, z1, z2, z3, z4 = dist_basis()

# Lie bracket on Dist_1(GL2), written out by hand from the matrix units
# z1..z4 = e11, e12, e21, e22 with z0 central.
FROZEN = {
    (1, 2): z2, (1, 3): -z3, (2, 3): z1 - z4, (2, 4): z2, (3, 4): -z3,
}


def pure(a, b):
    t = [[0] * 5 for _ in range(5)]
    t[a][b] = 1
    return t


def add(*tables):
    return tuple(tuple(sum(t[a][b] for t in tables) for b in range(5)) for a in range(5))


def test_jet_examples():
    assert jet1(C.gen("x11")) == Jet(1, (1, 0, 0, 0))
    assert jet1(C.det().inverse()) == Jet(1, (-1, 0, 0, -1))
    assert jet1(C.gen("x11") * C.gen("x22")) == Jet(1, (1, 0, 0, 1))


def test_rho_prime_examples():
    r = rho_prime()
    assert r[0] == add(pure(0, 0))
    assert r[1] == add(pure(1, 1), pure(2, 3), pure(0, 1), pure(1, 0))
    assert r[4] == add(pure(4, 4), pure(3, 2), pure(0, 4), pure(4, 0))


def test_bracket_examples():
    assert bracket(z2, z3) == z1 - z4
    assert bracket(z1, z2) == z2


def test_bracket_table_frozen():
    table = bracket_table()
    for key, value in table.items():
        assert value == FROZEN.get(key, Dist((0,) * 5)), key


def test_table_matches_matrix_commutators():
    for (i, j), v in bracket_table().items():
        assert dist_to_matrix(v) == gl2_matrix_bracket(i, j)


def test_jacobi_on_all_triples():
    assert jacobi_defects("GL2") == []
    assert jacobi_defects("SL2") == []


def test_sl2_bracket_and_embedding():
    w0, x, h, y = dist_basis("SL2")
    assert bracket(x, y, "SL2") == h
    assert bracket(h, x, "SL2") == x * 2
    assert bracket(w0, x, "SL2").is_zero()
    assert sl2_to_gl2(bracket(x, y, "SL2")) == bracket(z2, z3)


def test_sl2_embedding_is_a_lie_map():
    B = dist_basis("SL2")
    for a, b in itertools.product(B, B):
        assert sl2_to_gl2(bracket(a, b, "SL2")) == bracket(sl2_to_gl2(a), sl2_to_gl2(b))


# --- properties -------------------------------------------------------------


dists = st.lists(st.integers(-5, 5), min_size=5, max_size=5).map(lambda c: Dist(tuple(c)))
plus = st.lists(st.integers(-5, 5), min_size=4, max_size=4).map(lambda c: Dist((0, *c)))


@given(dists, dists)
def test_antisymmetry(u, w):
    assert bracket(u, w) == -bracket(w, u)
    assert bracket(u, u).is_zero()


@given(dists, dists, dists)
def test_jacobi_random(a, b, c):
    s = bracket(a, bracket(b, c)) + bracket(b, bracket(c, a)) + bracket(c, bracket(a, b))
    assert s.is_zero()


@given(plus, plus)
def test_bracket_preserves_dist_plus(u, w):
    assert bracket(u, w).coeffs[0] == 0


@given(st.data())
def test_jet_is_multiplicative(data):
    a = data.draw(localized(C))
    b = data.draw(localized(C))
    assert jet1(a * b) == jet1(a) * jet1(b)
    assert jet1(a + b) == jet1(a) + jet1(b)
