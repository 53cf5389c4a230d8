from dataclasses import replace

import pytest
from hypothesis import given
from hypothesis import strategies as st

from gl2hopf.algebra import CoeffRing, LocalizedCarrier, SL2Carrier
from gl2hopf.errors import UsageError
from gl2hopf.hopf import (
    build_hopf,
    constant_scheme_hopf,
    constant_scheme_to_weyl,
    gl2_hopf,
    lift_images,
    normalizer_hopf,
    quotient_map,
    sl2_hopf,
    sl2_quotient,
    verify_hopf_axioms,
    weyl_hopf,
    weyl_inclusion,
)
from gl2hopf.points import hopf_points_consistency
from gl2hopf.quotient import (
    decompose,
    free_basis_check,
    invariant_subalgebra_check,
    recompose,
    sigma,
    t_eigen_elem,
    w_elem,
    weyl_constant_scheme_check,
)

from strategies import localized, rings, split_elems, term_dicts

Z = CoeffRing.integers()
KINDS = ("G", "N", "T", "NmodT")


def _perturbed(h, **changes):
    # a fresh cache, so nothing computed for h leaks into the copy
    return replace(h, _maps={}, **changes)


# --- generator formulas ----------------------------------------------------


def test_gl2_delta_x11():
    h = gl2_hopf(Z)
    c2 = h.carrier.power(2)
    g = h.carrier.gen
    assert h.delta["x11"] == c2.tensor(g("x11"), g("x11")) + c2.tensor(g("x12"), g("x21"))


def test_gl2_delta_of_D_is_grouplike():
    h = gl2_hopf(Z)
    D = h.carrier.det()
    assert h.comultiply(D) == h.carrier.power(2).tensor(D, D)


def test_gl2_antipode_and_counit_values():
    h = gl2_hopf(Z)
    c = h.carrier
    assert h.antipode["x12"] == -c.gen("x12") * c.det().inverse()
    assert h.antipode["x11"] == c.gen("x22") * c.det().inverse()
    assert h.counit["x21"] == 0 and h.counit["x11"] == 1


def test_weyl_antipode_is_identity():
    h = weyl_hopf(Z)
    for g in h.gens:
        assert h.antipode[g] == h.carrier.gen(g)


def test_quotient_images_of_inverse_D():
    q = quotient_map("GL2", "G", "N", Z)
    N = q.target.carrier
    assert q.images["D^-1"] == N.mono(0, (-1, -1)) - N.mono(1, (-1, -1))
    assert q.images["x12"] == N.gen("u1")


def test_n_to_t_drops_u_part():
    q = quotient_map("GL2", "N", "T", Z)
    N = q.source.carrier
    T = q.target.carrier
    assert q(N.gen("t1") + N.gen("u2")) == T.gen("t1")


def test_unknown_group_or_kind():
    with pytest.raises(UsageError):
        build_hopf("GL3", "G", Z)
    with pytest.raises(UsageError):
        build_hopf("GL2", "B", Z)


# --- axioms over several rings ---------------------------------------------


@pytest.mark.parametrize("ring", ["Z", "Q", "F2", "F3", "F5"])
@pytest.mark.parametrize("group", ["GL2", "SL2"])
@pytest.mark.parametrize("kind", KINDS)
def test_hopf_axioms(ring, group, kind):
    rep = verify_hopf_axioms(build_hopf(group, kind, CoeffRing.parse(ring)))
    assert rep.ok, rep.failures()


@pytest.mark.parametrize("group", ["GL2", "SL2"])
@pytest.mark.parametrize("source,target", [("G", "N"), ("N", "T"), ("G", "T"), ("NmodT", "N")])
def test_quotient_maps_are_hopf_maps(group, source, target):
    if source == "NmodT":
        m = weyl_inclusion(group, Z)
    else:
        m = quotient_map(group, source, target, Z)
    rep = m.verify()
    assert rep.ok, rep.failures()


def test_sl2_quotient_and_constant_scheme_maps():
    assert sl2_quotient(Z).verify().ok
    assert constant_scheme_to_weyl(Z, "z").verify().ok


def test_lift_images_split_the_quotient():
    for kind in ("N", "T"):
        lifts = lift_images("GL2", kind, Z)
        q = quotient_map("GL2", "G", kind, Z)
        for g, y in lifts.items():
            assert q(y) == q.target.carrier.gen(g)


# --- negative controls ------------------------------------------------------


def test_perturbed_delta_fails():
    h = gl2_hopf(Z)
    c2 = h.carrier.power(2)
    g = h.carrier.gen
    delta = dict(h.delta)
    delta["x11"] = c2.tensor(g("x11"), g("x11")) + c2.tensor(g("x21"), g("x12"))
    rep = verify_hopf_axioms(_perturbed(h, delta=delta))
    assert not rep.ok
    assert "coassociativity" in {c.name for c in rep.failures()}


def test_perturbed_antipode_fails():
    h = gl2_hopf(Z)
    antipode = dict(h.antipode)
    antipode["x12"] = -antipode["x12"]
    rep = verify_hopf_axioms(_perturbed(h, antipode=antipode))
    assert "antipode" in {c.name for c in rep.failures()}


def test_perturbed_counit_fails():
    h = normalizer_hopf("GL2", Z)
    counit = dict(h.counit)
    counit["u1"] = 1
    assert not verify_hopf_axioms(_perturbed(h, counit=counit)).ok


def test_constant_scheme_antipode_candidates():
    assert verify_hopf_axioms(constant_scheme_hopf(Z, "z")).ok
    bad = verify_hopf_axioms(constant_scheme_hopf(Z, "1"))
    assert [c.name for c in bad.failures()] == ["antipode"]
    assert weyl_constant_scheme_check().ok


def test_perturbed_structure_fails_against_points():
    h = gl2_hopf(Z)
    antipode = dict(h.antipode)
    antipode["x11"], antipode["x22"] = antipode["x22"], antipode["x11"]
    rep = hopf_points_consistency("GL2", 3, "G", hopf=_perturbed(h, antipode=antipode))
    assert [c.name for c in rep.failures()] == ["antipode is matrix inversion"]


# --- quotient k[N] -> k[N/T] -------------------------------------------------


def test_sigma_on_w10():
    N = normalizer_hopf("GL2", Z).carrier
    w = w_elem("GL2", (1, 0))
    assert w == N.gen("t1") + N.gen("u2")
    assert sigma("GL2", w) == N.power(2).tensor(w, N.gen("t1"))


def test_sigma_on_sl2_eigenvector():
    N = normalizer_hopf("SL2", Z).carrier
    x = t_eigen_elem("SL2", (2,))
    assert sigma("SL2", x) == N.power(2).tensor(x, N.mono(0, (2,)))
    # (t^2, u^2) is not a T-eigenvector: its u-part transforms by t^-2
    w2 = w_elem("SL2", (2,))
    assert sigma("SL2", w2) != N.power(2).tensor(w2, N.mono(0, (2,)))


def test_decompose_examples():
    N = normalizer_hopf("GL2", Z).carrier
    assert decompose("GL2", N.gen("t1")) == {(1, 0): (1, 0)}
    assert decompose("GL2", N.gen("u1")) == {(0, 1): (0, 1)}


@pytest.mark.parametrize("group", ["GL2", "SL2"])
def test_quotient_checks(group):
    assert invariant_subalgebra_check(group, 3).ok
    assert free_basis_check(group, 3).ok


@given(st.data())
def test_decompose_round_trip(data):
    group = data.draw(st.sampled_from(["GL2", "SL2"]))
    N = normalizer_hopf(group, Z).carrier
    x = data.draw(split_elems(N))
    assert recompose(group, decompose(group, x)) == x


# --- properties on random elements -----------------------------------------


def _axioms_on(h, e):
    d = h.comultiply(e)
    assert h.apply_on_pair("delta_left", d) == h.apply_on_pair("delta_right", d)
    assert h.apply_on_pair("counit_left", d) == e == h.apply_on_pair("counit_right", d)
    eps = h.carrier.scalar(h.apply_counit(e))
    assert h.apply_on_pair("antipode_left", d) == eps == h.apply_on_pair("antipode_right", d)


@given(st.data())
def test_axioms_on_random_gl2_elements(data):
    h = gl2_hopf(data.draw(rings))
    _axioms_on(h, data.draw(localized(h.carrier)))


@given(st.data())
def test_axioms_on_random_sl2_elements(data):
    h = sl2_hopf(data.draw(rings))
    _axioms_on(h, h.carrier.make(data.draw(term_dicts(4, max_terms=3))))


@given(st.data())
def test_axioms_on_random_normalizer_elements(data):
    h = normalizer_hopf(data.draw(st.sampled_from(["GL2", "SL2"])), data.draw(rings))
    _axioms_on(h, data.draw(split_elems(h.carrier)))


@given(st.data())
def test_delta_is_multiplicative(data):
    h = gl2_hopf(Z)
    a, b = data.draw(localized(h.carrier)), data.draw(localized(h.carrier))
    assert h.comultiply(a * b) == h.comultiply(a) * h.comultiply(b)


@given(st.data())
def test_quotient_commutes_with_delta(data):
    q = quotient_map("GL2", "G", "N", Z)
    e = data.draw(localized(LocalizedCarrier(Z)))
    assert q.target.comultiply(q(e)) == q.on_legs(q.source.comultiply(e))


def test_sl2_carrier_is_the_determinant_quotient():
    S = SL2Carrier(Z)
    q = sl2_quotient(Z)
    assert q(gl2_hopf(Z).carrier.det()) == S.one()
