import numpy as np
import pytest
from hypothesis import given
from hypothesis import strategies as st

from gl2hopf import _kernels, points
from gl2hopf.algebra import CoeffRing
from gl2hopf.errors import UsageError
from gl2hopf.hopf import gl2_hopf
from gl2hopf.points import (
    conjugate_torus,
    coroot,
    enumerate_points,
    evaluate,
    hopf_points_consistency,
    idempotents,
    inverse_mod,
    matmul_mod,
    normalizer_check,
    order_check,
    order_formula,
    pi_point,
    root_coroot_check,
    sigma_point,
    splitting_check,
    term_arrays,
    x_root,
)

from strategies import localized

Z = CoeffRing.integers()
PRIMES = (2, 3, 5, 7)
MODULI = range(2, 8)


def as_set(P):
    return {tuple(int(v) for v in g.reshape(-1)) for g in P.elements}


def test_gl2_f2_order():
    assert enumerate_points("GL2", 2).order == 6 == order_formula("GL2", 2)


def test_n_f3_order():
    P = enumerate_points("N", 3)
    assert P.order == 8
    diag = sum(1 for g in P.elements if g[0, 1] == 0)
    assert diag == 4


def test_n_f2_points():
    assert as_set(enumerate_points("N", 2)) == {(1, 0, 0, 1), (0, 1, 1, 0)}


@pytest.mark.parametrize("group", ["GL2", "SL2", "T", "N"])
def test_identity_in_every_group(group):
    for n in MODULI:
        assert enumerate_points(group, n).contains(np.eye(2, dtype=np.int64))


@pytest.mark.parametrize("n", [0, 1, 8, 100])
def test_modulus_guard(n):
    with pytest.raises(UsageError):
        enumerate_points("GL2", n)


def test_unknown_group():
    with pytest.raises(UsageError):
        enumerate_points("B", 3)


def test_order_formulas():
    assert order_check((2, 3, 5, 7)).ok


@pytest.mark.parametrize("n", MODULI)
@pytest.mark.parametrize("group", ["GL2", "SL2", "T", "N", "NmodT"])
def test_groups_are_closed(group, n):
    assert enumerate_points(group, n).closed


@pytest.mark.parametrize("n", MODULI)
@pytest.mark.parametrize("ambient,kind", [("GL2", "G"), ("SL2", "G"), ("GL2", "N"), ("GL2", "T"),
                                          ("GL2", "NmodT"), ("SL2", "N"), ("SL2", "T")])
def test_hopf_structure_matches_group_law(ambient, kind, n):
    rep = hopf_points_consistency(ambient, n, kind)
    assert rep.ok, rep.failures()


def test_identity_point_is_neutral():
    h = gl2_hopf(Z)
    ident = np.eye(2, dtype=np.int64)[None]
    for g in h.gens:
        d = h.delta[g]
        assert evaluate(d, [ident, ident], 5)[0] == evaluate(h.carrier.gen(g), [ident], 5)[0]


def test_antipode_is_inverse_on_f5():
    h = gl2_hopf(Z)
    P = enumerate_points("GL2", 5).elements
    rng = np.random.default_rng(1)
    g = P[rng.integers(0, len(P), 20)]
    inv = inverse_mod(g, 5)
    assert np.array_equal(matmul_mod(g, inv, 5), np.broadcast_to(np.eye(2, dtype=np.int64), g.shape))
    for name in ("x11", "x12", "x21", "x22"):
        assert np.array_equal(evaluate(h.antipode[name], [g], 5), evaluate(h.carrier.gen(name), [inv], 5))


@pytest.mark.parametrize("p", PRIMES)
@pytest.mark.parametrize("ambient", ["GL2", "SL2"])
def test_normalizer(p, ambient):
    assert normalizer_check(p, ambient).ok


def test_conjugation_constraint_sl2_f3():
    # g normalises T exactly when a11 a12 = a21 a22 = 0
    for g in enumerate_points("SL2", 3).elements:
        c = conjugate_torus(g, 3, "SL2")
        normalises = c[0][1].is_zero() and c[1][0].is_zero()
        assert normalises == (g[0, 0] * g[0, 1] % 3 == 0 and g[1, 0] * g[1, 1] % 3 == 0)


@pytest.mark.parametrize("n", MODULI)
def test_splitting(n):
    rep = splitting_check(n)
    assert rep.ok, rep.failures()


def test_splitting_examples():
    assert np.array_equal(sigma_point(1, 3), np.eye(2, dtype=np.int64))
    assert pi_point(np.array([[0, 1], [2, 0]]), 3) == 0
    assert enumerate_points("N", 3).order == enumerate_points("T", 3).order * 2
    # over Z/6 there are four idempotents
    assert idempotents(6) == [0, 1, 3, 4]
    assert enumerate_points("NmodT", 6).order == 4


def test_roots_examples():
    assert np.array_equal(coroot("alpha", 2, 5), np.diag([2, 3]))
    assert np.array_equal(x_root("alpha", 0, 5), np.eye(2, dtype=np.int64))


@pytest.mark.parametrize("p", PRIMES)
def test_roots(p):
    assert root_coroot_check(p).ok


# --- properties -------------------------------------------------------------


@given(st.data())
def test_evaluation_is_a_ring_map(data):
    h = gl2_hopf(Z)
    n = data.draw(st.sampled_from(PRIMES))
    a = data.draw(localized(h.carrier))
    b = data.draw(localized(h.carrier))
    P = enumerate_points("GL2", n).elements
    ab = evaluate(a * b, [P], n)
    assert np.array_equal(ab, evaluate(a, [P], n) * evaluate(b, [P], n) % n)
    assert np.array_equal(evaluate(a + b, [P], n), (evaluate(a, [P], n) + evaluate(b, [P], n)) % n)


@given(st.sampled_from(list(MODULI)), st.data())
def test_products_stay_in_group(n, data):
    group = data.draw(st.sampled_from(["GL2", "SL2", "T", "N"]))
    P = enumerate_points(group, n)
    i = data.draw(st.integers(0, P.order - 1))
    j = data.draw(st.integers(0, P.order - 1))
    assert P.contains(matmul_mod(P.elements[i:i + 1], P.elements[j:j + 1], n)[0])
    assert P.contains(inverse_mod(P.elements[i:i + 1], n)[0])


# --- kernels: numba against numpy ------------------------------------------


needs_numba = pytest.mark.skipif(_kernels.numba_impl is None, reason="numba not installed")


@needs_numba
@given(st.data())
def test_eval_terms_backends_agree(data):
    h = gl2_hopf(Z)
    n = data.draw(st.sampled_from(list(MODULI)))
    e = data.draw(localized(h.carrier))
    exps, coeffs, width = term_arrays(e)
    vals = points.point_values(enumerate_points("GL2", n).elements, n, width)
    a = _kernels.numpy_impl.eval_terms(exps, coeffs, vals, n)
    b = _kernels.numba_impl.eval_terms(exps, coeffs, vals, n)
    assert np.array_equal(a, b)


@needs_numba
@given(st.sampled_from(list(MODULI)), st.sampled_from(["GL2", "SL2", "T", "N"]), st.integers(0, 2**32 - 1))
def test_closure_backends_agree(n, group, seed):
    mats = enumerate_points(group, n).elements
    rng = np.random.default_rng(seed)
    # drop a random subset so that some products fall outside
    sub = mats[rng.random(len(mats)) < 0.7]
    member = np.zeros(n**4, dtype=np.bool_)
    member[_kernels.numpy_impl.mat_codes(sub, n)] = True
    assert np.array_equal(_kernels.numpy_impl.mat_codes(sub, n), _kernels.numba_impl.mat_codes(sub, n))
    assert _kernels.numpy_impl.closure_misses(sub, member, n) == _kernels.numba_impl.closure_misses(sub, member, n)


def test_backend_flag(monkeypatch):
    monkeypatch.setattr(_kernels, "_FLAG", True)
    assert _kernels.active() is _kernels.numpy_impl
    monkeypatch.setattr(_kernels, "_FLAG", False)
    expected = _kernels.numba_impl or _kernels.numpy_impl
    assert _kernels.active() is expected
