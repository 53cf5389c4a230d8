"""The adjoint comodule of GL2, built two ways, and its sl2 piece.

Points: Ad(e_ij) = X e_ij X^-1 for the generic point X of GL2, written in the
basis e11, e12, e21, e22.

Coordinates: A[z] = A[z11, z12, z21, z22] carries the coactions
Delta(Z) = Z X and Delta'(Z) = X^-1 Z; their composite Ad(Z) = X^-1 Z X
preserves I = (z11 - 1, z12, z21, z22 - 1), and on I/I^2 with basis
t1 = z11 - 1, e_x = z12, e_y = z21, t2 = z22 - 1 it has a matrix M. The dual
comodule has matrix (M^-1)^tr, which agrees with the points construction.
"""

from __future__ import annotations

from dataclasses import dataclass

from .algebra import CoeffRing
from .comodule import Comodule, dual, restrict
from .distributions import Jet, jet_images_gl2
from .errors import NotClosedError
from .hopf import gl2_hopf, quotient_map, sl2_hopf, sl2_quotient
from .report import Report
from .weights import extract_weights, refined_decompose

GL_BASIS = ("e11", "e12", "e21", "e22")
SL_BASIS = ("x", "H", "y")
COORD_BASIS = ("t1", "e_x", "e_y", "t2")


def _mat(car, inv: bool):
    x11, x12, x21, x22 = (car.gen(g) for g in ("x11", "x12", "x21", "x22"))
    if not inv:
        return [[x11, x12], [x21, x22]]
    if "D^-1" in car.leg_gens:
        d = car.gen("D^-1")
        return [[x22 * d, -x12 * d], [-x21 * d, x11 * d]]
    return [[x22, -x12], [-x21, x11]]


def _mul2(A, B):
    return [[A[i][0] * B[0][j] + A[i][1] * B[1][j] for j in range(2)] for i in range(2)]


def _conjugate(car, v):
    """X v X^-1 for a 2x2 scalar matrix v."""
    X, Xi = _mat(car, False), _mat(car, True)
    V = [[car.scalar(v[i][j]) for j in range(2)] for i in range(2)]
    return _mul2(_mul2(X, V), Xi)


def _elementary(k: int):
    m = [[0, 0], [0, 0]]
    m[k // 2][k % 2] = 1
    return m


def adjoint_gl2_points(ring: CoeffRing | None = None) -> Comodule:
    """Columns are Ad(e11), Ad(e12), Ad(e21), Ad(e22) in the basis e11, e12, e21, e22."""
    h = gl2_hopf(ring or CoeffRing.integers())
    cols = []
    for k in range(4):
        c = _conjugate(h.carrier, _elementary(k))
        cols.append([c[0][0], c[0][1], c[1][0], c[1][1]])
    m = [[cols[j][i] for j in range(4)] for i in range(4)]
    return Comodule(h, m, "left", GL_BASIS, "Ad (points)")


@dataclass
class CoordinateAdjoint:
    """Output of the coordinate construction."""

    matrix: list  # M on I/I^2, Ad(b_j) = sum_i b_i (x) M[i][j]
    values: list  # Ad(z_ij) at z = Id; 1, 0, 0, 1 means Ad(I) lies in I (x) k[G]
    comodule: Comodule  # the I/I^2 comodule
    dual: Comodule  # its dual, matrix (M^-1)^tr
    report: Report


def _z_coactions(h):
    """Delta, Delta' and Ad as generator images from A[z] into A[z] (x) k[G]."""
    c2 = h.carrier.power(2)
    names = ("x11", "x12", "x21", "x22")
    Z = [[c2.gen(names[2 * i + j], 0) for j in range(2)] for i in range(2)]
    X = [[c2.gen(names[2 * i + j], 1) for j in range(2)] for i in range(2)]
    d = c2.gen("D^-1", 1)
    Xi = [[X[1][1] * d, -X[0][1] * d], [-X[1][0] * d, X[0][0] * d]]
    ZX = _mul2(Z, X)
    XiZ = _mul2(Xi, Z)
    delta = {names[2 * i + j]: ZX[i][j] for i in range(2) for j in range(2)}
    delta_inv = {names[2 * i + j]: XiZ[i][j] for i in range(2) for j in range(2)}
    # (id (x) m)(Delta' (x) id) Delta: leg 0 through Delta', leg 1 kept, legs multiplied
    leg1 = c2.identity_images(1)
    ad = {g: c2.extend(delta[g], [delta_inv, leg1], c2.one()) for g in names}
    return delta, delta_inv, ad


def _check_coaction(h, images: dict) -> tuple[bool, bool]:
    """Coassociativity and counit of a coaction A[z] -> A[z] (x) k[G] on generators."""
    c2, c3 = h.carrier.power(2), h.carrier.power(3)
    lhs_maps = [{g: c3.place(v, (0, 1)) for g, v in images.items()}, c3.identity_images(2)]
    coassoc = counit = True
    for g, v in images.items():
        coassoc &= c2.extend(v, lhs_maps, c3.one()) == h.apply_on_pair("delta_right", v)
        counit &= h.apply_on_pair("counit_right", v) == h.carrier.gen(g)
    return coassoc, counit


def adjoint_gl2_coords(ring: CoeffRing | None = None) -> CoordinateAdjoint:
    h = gl2_hopf(ring or CoeffRing.integers())
    car = h.carrier
    rep = Report("adjoint via coordinates")
    delta, delta_inv, ad = _z_coactions(h)
    for label, imgs in (("Z -> Z X", delta), ("Z -> X^-1 Z", delta_inv), ("Ad", ad)):
        co, cu = _check_coaction(h, imgs)
        rep.add(f"{label} is coassociative", co)
        rep.add(f"{label} is counital", cu)
    # reduce leg 0 modulo I^2 with coefficients in k[G]
    unit = car.one()
    leg0 = jet_images_gl2(unit)
    leg1 = {g: Jet(car.gen(g), (unit * 0,) * 4) for g in car.leg_gens}
    one = Jet(unit, (unit * 0,) * 4)
    c2 = car.power(2)
    values, cols = [], []
    for g in ("x11", "x12", "x21", "x22"):
        j = c2.extend(ad[g], [leg0, leg1], one)
        values.append(j.value)
        cols.append(list(j.grad))
    expected = [1, 0, 0, 1]
    rep.add("Ad(I) lies in I (x) k[G]", all(v == e for v, e in zip(values, expected)),
            ", ".join(map(str, values)))
    M = [[cols[j][i] for j in range(4)] for i in range(4)]
    W = Comodule(h, M, "left", COORD_BASIS, "I/I^2")
    return CoordinateAdjoint(M, values, W, dual(W), rep)


def adjoint_restrictions(ring: CoeffRing | None = None) -> tuple[Comodule, Comodule]:
    """The points adjoint restricted to k[N] and k[T]."""
    ring = ring or CoeffRing.integers()
    Ad = adjoint_gl2_points(ring)
    AdN = restrict(Ad, quotient_map("GL2", "G", "N", ring))
    AdT = restrict(AdN, quotient_map("GL2", "N", "T", ring))
    return AdN, AdT


def adjoint_weights(ring: CoeffRing | None = None) -> list:
    return extract_weights(adjoint_restrictions(ring)[1])


def adjoint_sl2(ring: CoeffRing | None = None) -> Comodule:
    """Ad on sl2 with basis x = e12, H = e11 - e22, y = e21, over k[SL2].

    Columns are Ad(x), Ad(H), Ad(y); a conjugate a11 e11 + a12 e12 + a21 e21 + a22 e22
    has coordinates (a12, a11, a21) and must satisfy a22 = -a11.
    """
    h = sl2_hopf(ring or CoeffRing.integers())
    car = h.carrier
    vecs = [[[0, 1], [0, 0]], [[1, 0], [0, -1]], [[0, 0], [1, 0]]]
    cols = []
    for v in vecs:
        c = _conjugate(car, v)
        if c[1][1] != -c[0][0]:
            raise ArithmeticError("conjugate left sl2")
        cols.append([c[0][1], c[0][0], c[1][0]])
    m = [[cols[j][i] for j in range(3)] for i in range(3)]
    return Comodule(h, m, "left", SL_BASIS, "Ad (sl2)")


def sl2_adjoint_weights(ring: CoeffRing | None = None) -> list[int]:
    ring = ring or CoeffRing.integers()
    W = adjoint_sl2(ring)
    WT = restrict(W, quotient_map("SL2", "G", "T", ring))
    return extract_weights(WT)


# x = e12, H = e11 - e22, y = e21 as columns over (e11, e12, e21, e22)
_SL_IN_GL = [[0, 1, 0], [1, 0, 0], [0, 0, 1], [0, -1, 0]]
_SL_ROWS = (1, 0, 2)  # a left inverse of _SL_IN_GL reads these coordinates


def adjoint_sl2_from_gl2(ring: CoeffRing | None = None) -> Comodule:
    """Ad of GL2 pushed to k[SL2] (D -> 1), restricted to sl2 in the basis x, H, y.

    Raises NotClosedError if sl2 is not a subcomodule.
    """
    ring = ring or CoeffRing.integers()
    W = restrict(adjoint_gl2_points(ring), sl2_quotient(ring))
    car = W.carrier
    P = _SL_IN_GL
    MP = [[sum((W.matrix[r][k] * P[k][c] for k in range(4) if P[k][c]), car.zero()) for c in range(3)]
          for r in range(4)]
    N = [[MP[r][c] for c in range(3)] for r in _SL_ROWS]
    for r in range(4):
        for c in range(3):
            if MP[r][c] != sum((N[k][c] * P[r][k] for k in range(3) if P[r][k]), car.zero()):
                raise NotClosedError("sl2 is not stable under Ad")
    return Comodule(W.hopf, N, "left", SL_BASIS, "Ad (sl2 inside gl2)")


def adjoint_blocks(ring: CoeffRing | None = None):
    """Lie(GL2) = Lie(T) + Lie(GL2)_R as blocks of Ad over k[N]."""
    AdN, _ = adjoint_restrictions(ring)
    return refined_decompose(AdN, adjoint_weights(ring))


def sl2_adjoint_blocks(ring: CoeffRing | None = None):
    ring = ring or CoeffRing.integers()
    W = restrict(adjoint_sl2(ring), quotient_map("SL2", "G", "N", ring))
    return refined_decompose(W, sl2_adjoint_weights(ring))
