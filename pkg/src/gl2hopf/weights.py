"""Torus weights, Weyl orbits, refined characters and block irreducibility.

A weight (a, b) stands for the character t1^a t2^b of the diagonal torus.
The Weyl group acts by swapping the two entries.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from math import isqrt
from typing import Sequence

from .algebra import CoeffRing, SparsePoly
from .comodule import Comodule, is_closed, sub_comodule
from .errors import NotClosedError, NotDiagonalError, UsageError

Weight = tuple
ALPHA = (1, -1)
ALPHA_CHECK = (1, -1)
CHAR_VARS = ("x1", "x2")


def pairing(w: Weight, cw: Weight) -> int:
    """<(m, n), (u, v)> = m u + n v."""
    return w[0] * cw[0] + w[1] * cw[1]


def reflect(w: Weight) -> Weight:
    """s_alpha(w) = w - <w, alpha*> alpha."""
    k = pairing(w, ALPHA_CHECK)
    return (w[0] - k * ALPHA[0], w[1] - k * ALPHA[1])


def weyl_orbit(w: Weight) -> frozenset:
    return frozenset({tuple(w), reflect(w)})


def extract_weights(W: Comodule) -> list:
    """Weights of a comodule over k[T], read off the diagonal.

    Each diagonal entry must be a monomial with coefficient 1 and every
    off-diagonal entry must vanish. GL2 weights are pairs, SL2 weights ints.
    """
    h = W.hopf
    if h.kind != "T":
        raise UsageError("weights are read from a comodule over k[T]")
    out = []
    for i in range(W.rank):
        for j in range(W.rank):
            if i != j and not W.matrix[i][j].is_zero():
                raise NotDiagonalError(f"entry ({i},{j}) = {W.matrix[i][j]} is nonzero")
        d = W.matrix[i][i].data.get((0,), {})
        if len(d) != 1 or next(iter(d.values())) != 1:
            raise NotDiagonalError(f"diagonal entry {W.matrix[i][i]} is not a character")
        e = next(iter(d))
        out.append(e if len(e) == 2 else e[0])
    return out


def character(weights: Sequence[Weight], ring: CoeffRing | None = None) -> SparsePoly:
    """sum of x1^a x2^b over the weights (a Laurent polynomial)."""
    ring = ring or CoeffRing.integers()
    terms: dict = {}
    for w in weights:
        terms[tuple(w)] = terms.get(tuple(w), 0) + 1
    return SparsePoly(CHAR_VARS, terms, ring, laurent=True)


def sym_character(d: int) -> SparsePoly:
    return character([(d - i, i) for i in range(d + 1)])


def refined_character(d: int, i: int) -> SparsePoly:
    """Character of the i-th block of Sym^d(V), 0 <= i <= d // 2.

    x1^(d-i) x2^i + x1^i x2^(d-i), except the middle block x1^k x2^k when d = 2k.
    """
    if not 0 <= i <= d // 2:
        raise UsageError(f"block index {i} out of range for d = {d}")
    if 2 * i == d:
        return character([(i, i)])
    return character([(d - i, i), (i, d - i)])


@dataclass
class Block:
    index: int
    indices: tuple
    weights: tuple
    comodule: Comodule = field(repr=False)

    @property
    def rank(self) -> int:
        return len(self.indices)

    @property
    def orbit(self) -> frozenset:
        return weyl_orbit(self.weights[0])

    def character(self) -> SparsePoly:
        return character(self.weights)


def refined_decompose(W_N: Comodule, weights: Sequence[Weight]) -> list[Block]:
    """Split a k[N]-comodule along Weyl orbits of the given basis weights.

    Blocks are ordered by the first basis vector they contain; each block
    is checked to be a subcomodule (NotClosedError otherwise).
    """
    if len(weights) != W_N.rank:
        raise UsageError("one weight per basis vector is required")
    groups: dict = {}
    order = []
    for idx, w in enumerate(weights):
        key = weyl_orbit(w) if isinstance(w, tuple) else frozenset({w, -w})
        if key not in groups:
            groups[key] = []
            order.append(key)
        groups[key].append(idx)
    blocks = []
    for n, key in enumerate(order):
        idx = tuple(groups[key])
        if not is_closed(W_N, idx):
            raise NotClosedError(f"orbit block {idx} is not closed")
        blocks.append(Block(n, idx, tuple(weights[i] for i in idx), sub_comodule(W_N, idx)))
    return blocks


def sym_block_formula(N_hopf, d: int, i: int) -> list:
    """Expected 2x2 (or 1x1) block of Sym^d of the right standard comodule over k[N].

    Delta(v_i) = (t1^(d-i) t2^i, 0) (x) v_i + (0, u1^(d-i) u2^i) (x) v_(d-i).
    """
    car = N_hopf.carrier
    if N_hopf.group != "GL2":
        raise UsageError("formula stated for GL2")

    def col(j):
        return car.mono(0, (d - j, j)), car.mono(1, (d - j, j))

    if 2 * i == d:
        a, b = col(i)
        return [[a + b]]
    a_i, b_i = col(i)
    a_j, b_j = col(d - i)
    return [[a_i, b_j], [b_i, a_j]]


# ---------------------------------------------------------------------------
# irreducibility of rank-2 blocks over a field
# ---------------------------------------------------------------------------


@dataclass
class Irreducibility:
    irreducible: bool
    method: str
    stable_lines: list  # lines (a1, a2) spanning subcomodules, normalised
    details: str = ""


def _check_block(W: Comodule):
    if W.rank > 2:
        raise UsageError("irreducibility is decided for blocks of rank <= 2")
    if not W.hopf.ring.is_field:
        raise UsageError(f"irreducibility needs a field, got {W.hopf.ring}")


def is_irreducible_block(W: Comodule, method: str = "constraints") -> Irreducibility:
    """Decide whether a rank-1 or rank-2 comodule over a field is irreducible.

    ``constraints``: a line A(1, s) is stable iff
    B12 s^2 + (B11 - B22) s - B21 = 0 in H; comparing coefficients gives
    scalar quadratics in s whose common roots are found through their gcd.
    The line A(0, 1) is stable iff B12 = 0.
    ``lines``: over F_p, test all p + 1 lines directly.
    """
    _check_block(W)
    if W.rank == 1:
        return Irreducibility(True, method, [], "rank 1")
    if method == "constraints":
        lines = _lines_by_constraints(W)
    elif method == "lines":
        lines = _lines_by_enumeration(W)
    else:
        raise UsageError(f"unknown method {method!r}")
    scalar = W.matrix[0][1].is_zero() and W.matrix[1][0].is_zero() and W.matrix[0][0] == W.matrix[1][1]
    return Irreducibility(not lines, method, lines, "scalar block: every line is stable" if scalar else "")


def _lines_by_enumeration(W: Comodule) -> list:
    ring = W.hopf.ring
    if ring.kind != "F":
        raise UsageError("line enumeration needs a finite prime field")
    B = W.matrix
    out = []
    if B[0][1].is_zero():
        out.append((0, 1))
    for s in range(ring.modulus):
        f = B[0][0] + B[0][1] * s
        if B[1][0] + B[1][1] * s == f * s:
            out.append((1, s))
    return out


def _lines_by_constraints(W: Comodule) -> list:
    ring = W.hopf.ring
    B = W.matrix
    car = W.carrier
    c2, c1, c0 = B[0][1], B[0][0] - B[1][1], -B[1][0]
    coords = car.linear_coords([c0, c1, c2])
    keys = set().union(*coords)
    polys = []
    for k in keys:
        p = [ring.coerce(c.get(k, 0)) for c in coords]
        polys.append(p)
    g = None
    for p in polys:
        g = p if g is None else _poly_gcd(g, p, ring)
    out = []
    if B[0][1].is_zero():
        out.append((0, 1))
    if g is None or all(c == 0 for c in g):
        # no constraint at all: the block acts by scalars and every line is stable
        if ring.kind == "F":
            return out + [(1, s) for s in range(ring.modulus)]
        return out + [(1, 0), (1, 1)]
    for s in sorted(_roots(g, ring), key=lambda v: (Fraction(v).numerator, Fraction(v).denominator)):
        out.append((1, s))
    return out


def _trim(p):
    p = list(p)
    while p and p[-1] == 0:
        p.pop()
    return p


def _poly_gcd(a, b, ring):
    a, b = _trim(a), _trim(b)
    while b:
        a, b = b, _poly_rem(a, b, ring)
    if not a:
        return [0]
    lead = ring.inverse(a[-1])
    return [ring.coerce(c * lead) for c in a]


def _poly_rem(a, b, ring):
    a = list(a)
    inv = ring.inverse(b[-1])
    while len(a) >= len(b) and a:
        f = ring.coerce(a[-1] * inv)
        shift = len(a) - len(b)
        for i, c in enumerate(b):
            a[shift + i] = ring.coerce(a[shift + i] - f * c)
        a = _trim(a)
    return a


def _roots(p, ring) -> set:
    """Roots in the coefficient field of a polynomial of degree <= 2."""
    p = _trim(p)
    if len(p) <= 1:
        return set()
    if len(p) == 2:
        return {ring.coerce(-p[0] * ring.inverse(p[1]))}
    if len(p) != 3:
        raise UsageError("degree above 2")
    c, b, a = p
    if ring.kind == "F" and ring.modulus == 2:
        inv = ring.inverse(a)
        b, c = ring.coerce(b * inv), ring.coerce(c * inv)
        if b == 0:
            return {c}  # s^2 = c and squaring is the identity on F2
        return {0, 1} if c == 0 else set()
    disc = ring.coerce(b * b - 4 * a * c)
    r = _sqrt(disc, ring)
    if r is None:
        return set()
    inv = ring.inverse(ring.coerce(2 * a))
    return {ring.coerce((-b + r) * inv), ring.coerce((-b - r) * inv)}


def _sqrt(x, ring):
    if ring.kind == "Q":
        x = Fraction(x)
        if x < 0:
            return None
        n, d = isqrt(x.numerator), isqrt(x.denominator)
        if n * n == x.numerator and d * d == x.denominator:
            return Fraction(n, d)
        return None
    p = ring.modulus
    x %= p
    if x == 0:
        return 0
    if pow(x, (p - 1) // 2, p) != 1:
        return None
    # Tonelli-Shanks
    q, s = p - 1, 0
    while q % 2 == 0:
        q //= 2
        s += 1
    z = 2
    while pow(z, (p - 1) // 2, p) != p - 1:
        z += 1
    m, c, t, r = s, pow(z, q, p), pow(x, q, p), pow(x, (q + 1) // 2, p)
    while t != 1:
        i, t2 = 0, t
        while t2 != 1:
            t2 = t2 * t2 % p
            i += 1
        b = pow(c, 1 << (m - i - 1), p)
        m, c, t, r = i, b * b % p, t * b * b % p, r * b % p
    return r


def sl2_weights(W: Comodule) -> list[int]:
    if W.hopf.group != "SL2":
        raise UsageError("expected a comodule over k[T] of SL2")
    return extract_weights(W)


def roots_from_weights(weights: Sequence) -> set:
    """Nonzero weights of the adjoint comodule."""
    zero = (0, 0) if weights and isinstance(weights[0], tuple) else 0
    return {w for w in weights if w != zero}
