"""First-order distributions at the identity and their Lie bracket.

k[G]/I^2, with I the augmentation ideal, is handled through dual numbers:
an element is its value at the identity plus a gradient in the coordinates
v1 = x11 - 1, v2 = x12, v3 = x21, v4 = x22 - 1 (v0 = 1). Reducing both legs
of Delta(v_i) modulo I^2 gives rho'(v_i) in k[G]/I^2 (x) k[G]/I^2, and the
bracket of u, w in Dist_1 is [u, w](v_i) = (u (x) w - w (x) u)(rho'(v_i)).
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache

from .algebra import CoeffRing
from .hopf import gl2_hopf, sl2_hopf


class Jet:
    """value + sum grad[k] * eps_k with eps_k eps_l = 0.

    Coefficients may be numbers or ring elements (including other jets).
    """

    __slots__ = ("value", "grad")

    def __init__(self, value, grad):
        self.value = value
        self.grad = tuple(grad)

    def _lift(self, other):
        if isinstance(other, Jet):
            return other
        return Jet(self.value * 0 + other, tuple(g * 0 for g in self.grad))

    def __add__(self, other):
        o = self._lift(other)
        return Jet(self.value + o.value, tuple(a + b for a, b in zip(self.grad, o.grad)))

    __radd__ = __add__

    def __neg__(self):
        return Jet(-self.value, tuple(-g for g in self.grad))

    def __sub__(self, other):
        return self + (-self._lift(other))

    def __mul__(self, other):
        if isinstance(other, Jet):
            a, b = self.value, other.value
            return Jet(a * b, tuple(a * h + b * g for g, h in zip(self.grad, other.grad)))
        return Jet(self.value * other, tuple(g * other for g in self.grad))

    __rmul__ = __mul__

    def one(self):
        one = self.value.one() if hasattr(self.value, "one") else 1
        return Jet(one, tuple(g * 0 for g in self.grad))

    def __eq__(self, other):
        o = self._lift(other)
        return self.value == o.value and all(a == b for a, b in zip(self.grad, o.grad))

    def __repr__(self):
        return f"Jet({self.value}, {self.grad})"


def jet_images_gl2(unit=1) -> dict:
    """x11 -> 1 + eps1, x12 -> eps2, x21 -> eps3, x22 -> 1 + eps4, 1/D -> 1 - eps1 - eps4."""
    z = unit * 0
    return {
        "x11": Jet(unit, (unit, z, z, z)),
        "x12": Jet(z, (z, unit, z, z)),
        "x21": Jet(z, (z, z, unit, z)),
        "x22": Jet(unit, (z, z, z, unit)),
        "D^-1": Jet(unit, (-unit, z, z, -unit)),
    }


def jet_images_sl2(unit=1) -> dict:
    """Coordinates eps_x = x12, eps_H = x11 - 1, eps_y = x21; x22 - 1 = -eps_H to first order."""
    z = unit * 0
    return {
        "x12": Jet(z, (unit, z, z)),
        "x11": Jet(unit, (z, unit, z)),
        "x21": Jet(z, (z, z, unit)),
        "x22": Jet(unit, (z, -unit, z)),
    }


def jet1(e, group: str = "GL2") -> Jet:
    """Value and gradient at the identity of an element of k[G] or k[SL2]."""
    images = jet_images_gl2() if group == "GL2" else jet_images_sl2()
    n = 4 if group == "GL2" else 3
    return e.carrier.extend(e, [images], Jet(1, (0,) * n))


def _coeff_table(j: Jet, n: int) -> list:
    """5x5 (or 4x4) table C[a][b] of a jet of jets: a indexes leg 0, b leg 1."""
    outer = [j.value] + list(j.grad)
    table = [[0] * (n + 1) for _ in range(n + 1)]
    for b, inner in enumerate(outer):
        inner = inner if isinstance(inner, Jet) else Jet(inner, (0,) * n)
        for a, c in enumerate([inner.value] + list(inner.grad)):
            table[a][b] = c
    return table


@lru_cache(maxsize=None)
def rho_prime(group: str = "GL2", ring: CoeffRing = CoeffRing.integers()) -> tuple:
    """Tables C_i with rho'(v_i) = sum C_i[a][b] v_a (x) v_b, for i = 0..n.

    GL2 coordinates: v0 = 1, v1 = x11 - 1, v2 = x12, v3 = x21, v4 = x22 - 1.
    SL2 coordinates: v0 = 1, x = x12, H = x11 - 1, y = x21.
    """
    h = gl2_hopf(ring) if group == "GL2" else sl2_hopf(ring)
    n = 4 if group == "GL2" else 3
    inner_unit = Jet(1, (0,) * n)
    base = jet_images_gl2 if group == "GL2" else jet_images_sl2
    inner = base()
    outer_leg0 = {g: Jet(v, (inner_unit * 0,) * n) for g, v in inner.items()}
    outer_leg1 = base(inner_unit)
    one = Jet(inner_unit, (inner_unit * 0,) * n)
    car = h.carrier
    if group == "GL2":
        coords = [car.one(), car.gen("x11") - 1, car.gen("x12"), car.gen("x21"), car.gen("x22") - 1]
    else:
        coords = [car.one(), car.gen("x12"), car.gen("x11") - 1, car.gen("x21")]
    tables = []
    for v in coords:
        d = h.comultiply(v)
        j = d.carrier.extend(d, [outer_leg0, outer_leg1], one)
        tables.append(tuple(tuple(r) for r in _coeff_table(j, n)))
    return tuple(tables)


@dataclass(frozen=True)
class Dist:
    """Element of Dist_1 as its values on v_0..v_n."""

    coeffs: tuple

    def __add__(self, o):
        return Dist(tuple(a + b for a, b in zip(self.coeffs, o.coeffs)))

    def __sub__(self, o):
        return Dist(tuple(a - b for a, b in zip(self.coeffs, o.coeffs)))

    def __neg__(self):
        return Dist(tuple(-a for a in self.coeffs))

    def __mul__(self, c):
        return Dist(tuple(a * c for a in self.coeffs))

    __rmul__ = __mul__

    def is_zero(self):
        return not any(self.coeffs)

    def __str__(self):
        names = ["z0", "z1", "z2", "z3", "z4"] if len(self.coeffs) == 5 else ["w0", "x", "H", "y"]
        parts = [n if c == 1 else "-" + n if c == -1 else f"{c}*{n}" for n, c in zip(names, self.coeffs) if c]
        return " + ".join(parts).replace("+ -", "- ") or "0"


def dist_basis(group: str = "GL2") -> list[Dist]:
    """z0..z4 (GL2) or w0, x, H, y (SL2): the dual basis of the v_i."""
    n = 5 if group == "GL2" else 4
    return [Dist(tuple(1 if i == k else 0 for i in range(n))) for k in range(n)]


def bracket(u: Dist, w: Dist, group: str = "GL2") -> Dist:
    """[u, w](v_i) = (u (x) w - w (x) u)(rho'(v_i))."""
    tables = rho_prime(group)
    a, b = u.coeffs, w.coeffs
    out = []
    for C in tables:
        s = 0
        for i, row in enumerate(C):
            for j, c in enumerate(row):
                if c:
                    s += c * (a[i] * b[j] - b[i] * a[j])
        out.append(s)
    return Dist(tuple(out))


def bracket_table(group: str = "GL2") -> dict:
    """{(i, j): [z_i, z_j]} for i < j."""
    B = dist_basis(group)
    return {(i, j): bracket(B[i], B[j], group) for i in range(len(B)) for j in range(i + 1, len(B))}


def sl2_to_gl2_matrix() -> list[list[int]]:
    """Columns: images g(w0), g(x), g(H), g(y) in the z basis.

    g is dual to k[G]/I^2 -> k[SL2]/I^2; a functional phi on k[SL2]/I^2 goes
    to phi composed with the reduction of v0..v4.
    """
    h = gl2_hopf(CoeffRing.integers())
    car = h.carrier
    coords = [car.one(), car.gen("x11") - 1, car.gen("x12"), car.gen("x21"), car.gen("x22") - 1]
    images = {**jet_images_sl2(), "D^-1": Jet(1, (0, 0, 0))}
    cols = [[0] * 4 for _ in range(5)]  # cols[i] = jet of v_i in SL2 coordinates (v0, x, H, y)
    for i, v in enumerate(coords):
        j = car.extend(v, [images], Jet(1, (0, 0, 0)))
        cols[i] = [j.value] + list(j.grad)
    # g(phi)(v_i) = phi(p(v_i)) = sum_k phi_k * cols[i][k]
    return [[cols[i][k] for k in range(4)] for i in range(5)]


def sl2_to_gl2(phi: Dist) -> Dist:
    M = sl2_to_gl2_matrix()
    return Dist(tuple(sum(M[i][k] * phi.coeffs[k] for k in range(4)) for i in range(5)))


def jacobi_defects(group: str = "GL2") -> list:
    """Triples of basis elements where the Jacobi identity fails (empty if none)."""
    B = dist_basis(group)
    bad = []
    for i in range(len(B)):
        for j in range(len(B)):
            for k in range(len(B)):
                a, b, c = B[i], B[j], B[k]
                s = bracket(a, bracket(b, c, group), group) + bracket(b, bracket(c, a, group), group) \
                    + bracket(c, bracket(a, b, group), group)
                if not s.is_zero():
                    bad.append((i, j, k))
    return bad


def gl2_matrix_bracket(i: int, j: int) -> list[list[int]]:
    """Commutator of elementary matrices under f: z1..z4 -> e11, e12, e21, e22 (z0 -> 0)."""
    def E(k):
        m = [[0, 0], [0, 0]]
        if k:
            r, c = divmod(k - 1, 2)
            m[r][c] = 1
        return m

    a, b = E(i), E(j)
    ab = [[sum(a[r][t] * b[t][c] for t in range(2)) for c in range(2)] for r in range(2)]
    ba = [[sum(b[r][t] * a[t][c] for t in range(2)) for c in range(2)] for r in range(2)]
    return [[ab[r][c] - ba[r][c] for c in range(2)] for r in range(2)]


def dist_to_matrix(u: Dist) -> list[list[int]]:
    """f(u): drop z0, read z1..z4 as e11, e12, e21, e22."""
    c = u.coeffs
    return [[c[1], c[2]], [c[3], c[4]]]
