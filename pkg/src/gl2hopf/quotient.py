"""The quotient k[N] -> k[N/T]: invariants of the T-coaction and a free basis.

sigma = (id (x) q) o Delta_N with q: k[N] -> k[T]. Since k[T] is the first
factor R1 of k[N] = R1 (+) R2, the second leg of sigma(x) is stored in k[N]
as Delta_N(x) * (1 (x) e1); a pure tensor x (x) (m, 0) stands for x (x) m.
"""

from __future__ import annotations

import itertools

from .algebra import CoeffRing, nullspace
from .hopf import constant_scheme_hopf, constant_scheme_to_weyl, normalizer_hopf, verify_hopf_axioms, weyl_hopf
from .errors import UsageError
from .report import Report


def _window(group: str, bound: int):
    if bound < 0:
        raise UsageError("window bound must be >= 0")
    r = range(-bound, bound + 1)
    return list(itertools.product(r, r)) if group == "GL2" else [(i,) for i in r]


def sigma(group: str, x, ring: CoeffRing | None = None):
    h = normalizer_hopf(group, ring or CoeffRing.integers())
    c2 = h.carrier.power(2)
    return h.comultiply(x) * c2.place(h.carrier.idempotent(0), (1,))


def w_elem(group: str, exps, ring: CoeffRing | None = None):
    """w(i, j) = (t1^i t2^j, u1^j u2^i) for GL2, w_i = (t^i, u^i) for SL2."""
    car = normalizer_hopf(group, ring or CoeffRing.integers()).carrier
    u = (exps[1], exps[0]) if group == "GL2" else tuple(exps)
    return car.mono(0, exps) + car.mono(1, u)


def t_eigen_elem(group: str, exps, ring: CoeffRing | None = None):
    """Element with sigma(x) = x (x) t^exps: w(i, j) for GL2, (t^i, u^-i) for SL2."""
    if group == "GL2":
        return w_elem(group, exps, ring)
    car = normalizer_hopf(group, ring or CoeffRing.integers()).carrier
    return car.mono(0, exps) + car.mono(1, (-exps[0],))


def invariant_subalgebra_check(group: str = "GL2", bound: int = 4, ring: CoeffRing | None = None) -> Report:
    ring = ring or CoeffRing.integers()
    h = normalizer_hopf(group, ring)
    car = h.carrier
    c2 = car.power(2)
    rep = Report(f"T-invariants of k[N] ({group}), window {bound}")
    win = _window(group, bound)
    bad = []
    for e in win:
        x = t_eigen_elem(group, e, ring)
        if sigma(group, x, ring) != c2.tensor(x, car.mono(0, e)):
            bad.append(e)
    label = "sigma(w(i,j)) = w(i,j) (x) t1^i t2^j" if group == "GL2" else "sigma((t^i, u^-i)) = (t^i, u^-i) (x) t^i"
    rep.add(label, not bad, f"{len(win)} exponents" if not bad else f"fails at {bad[:5]}")

    # fixed points of sigma - q* on the monomial window
    basis = [car.mono(c, e) for c in (0, 1) for e in win]
    one_t = c2.place(car.idempotent(0), (1,))
    diffs = [sigma(group, b, ring) - c2.place(b, (0,)) * one_t for b in basis]
    coords = c2.linear_coords(diffs)
    keys = sorted(set().union(*coords), key=repr)
    rows = [[c.get(k, 0) for c in coords] for k in keys]
    q = CoeffRing.rationals()
    kernel = nullspace(rows, len(basis), q) if rows else [[int(i == j) for j in range(len(basis))] for i in range(len(basis))]
    fixed = set()
    for v in kernel:
        support = [i for i, c in enumerate(v) if c]
        fixed.update(support)
    zero = (0,) * len(win[0])
    expect = {basis.index(car.mono(0, zero)), basis.index(car.mono(1, zero))}
    rep.add("invariants in the window are A{e1, e2}", len(kernel) == 2 and fixed == expect,
            f"kernel dimension {len(kernel)}")
    return rep


def decompose(group: str, x, ring: CoeffRing | None = None) -> dict:
    """Coefficients (alpha, beta) in A{e1, e2} with x = sum (alpha, beta) * w."""
    out: dict = {}
    for comp, terms in x.data.items():
        for e, c in terms.items():
            key = e if comp == (0,) else ((e[1], e[0]) if group == "GL2" else e)
            a, b = out.get(key, (0, 0))
            out[key] = (a + c, b) if comp == (0,) else (a, b + c)
    return {k: v for k, v in sorted(out.items()) if v != (0, 0)}


def recompose(group: str, coeffs: dict, ring: CoeffRing | None = None):
    car = normalizer_hopf(group, ring or CoeffRing.integers()).carrier
    acc = car.zero()
    for e, (a, b) in coeffs.items():
        acc = acc + (car.idempotent(0) * a + car.idempotent(1) * b) * w_elem(group, e, ring)
    return acc


def free_basis_check(group: str = "GL2", bound: int = 4, ring: CoeffRing | None = None) -> Report:
    """Every window monomial is a unique A{e1, e2}-combination of the w's.

    Uniqueness: the 2|window| products e1 * w, e2 * w are distinct monomials,
    so their coordinate matrix against the window monomials is a permutation.
    """
    ring = ring or CoeffRing.integers()
    car = normalizer_hopf(group, ring).carrier
    rep = Report(f"free basis of k[N] over k[N/T] ({group}), window {bound}")
    win = _window(group, bound)
    bad = []
    for c in (0, 1):
        for e in win:
            x = car.mono(c, e)
            if recompose(group, decompose(group, x, ring), ring) != x:
                bad.append((c, e))
    rep.add("window monomials decompose", not bad, f"{2 * len(win)} monomials" if not bad else str(bad[:5]))
    gens = [car.idempotent(c) * w_elem(group, e, ring) for c in (0, 1) for e in win]
    coords = car.linear_coords(gens)
    targets = {k for co in coords for k in co}
    perm = all(len(co) == 1 and next(iter(co.values())) == 1 for co in coords) and len(targets) == len(gens)
    monos = {(c, e) for c in ((0,), (1,)) for e in win}
    rep.add("e_k * w are distinct window monomials (unique decomposition)", perm and targets == monos)
    return rep


def weyl_constant_scheme_check(ring: CoeffRing | None = None) -> Report:
    """A[z]/(z^2 - z) with either antipode candidate, and the map z -> e1 into k[N/T]."""
    ring = ring or CoeffRing.integers()
    rep = Report("constant scheme of the Weyl group")
    good = verify_hopf_axioms(constant_scheme_hopf(ring, "z"))
    rep.merge(good, "S(z)=z")
    bad = verify_hopf_axioms(constant_scheme_hopf(ring, "1"))
    rep.add("S(z)=1 violates the antipode axiom", not bad.ok,
            "; ".join(c.name for c in bad.failures()))
    rep.merge(constant_scheme_to_weyl(ring, "z").verify(), "z -> e1")
    rep.merge(verify_hopf_axioms(weyl_hopf(ring)), "k[N/T]")
    return rep
