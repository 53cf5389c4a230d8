"""Comodule morphisms with scalar entries and the isomorphism question.

A scalar matrix U: W1 -> W2 is a morphism iff U M1 = M2 U, where M1, M2 are
the structure matrices. Expanding every entry in a common monomial basis of
the Hopf algebra turns this into a linear system over the coefficient ring.
"""

from __future__ import annotations

import itertools
import random
from dataclasses import dataclass, field
from fractions import Fraction

from .algebra import CoeffRing, nullspace, primitive_integer_vector
from .comodule import Comodule
from .errors import UsageError
from .report import Report

GRID_LIMIT = 4096


@dataclass
class HomSpace:
    ring: CoeffRing
    shape: tuple  # (rows, cols) = (rank W2, rank W1)
    basis: list  # list of scalar matrices
    lattice_exact: bool = True  # over Z: the basis spans all integer solutions

    @property
    def dim(self) -> int:
        return len(self.basis)


@dataclass
class IsoResult:
    verdict: str  # "isomorphic", "none" or "undecided"
    witness: list | None = None
    obstruction: str = ""
    report: Report = field(default_factory=lambda: Report("isomorphism"))

    @property
    def isomorphic(self) -> bool:
        return self.verdict == "isomorphic"


def _check_pair(W1: Comodule, W2: Comodule):
    if W1.hopf is not W2.hopf:
        raise UsageError(f"comodules live over different Hopf algebras: {W1.hopf.name}, {W2.hopf.name}")
    if W1.side != W2.side:
        raise UsageError("comodules use different sides")


def equations(W1: Comodule, W2: Comodule) -> list[list]:
    """Rows of the linear system for the unknowns U[l][i], numbered l * n1 + i."""
    _check_pair(W1, W2)
    n1, n2 = W1.rank, W2.rank
    M1, M2 = W1.matrix, W2.matrix
    rows = []
    for l in range(n2):
        for j in range(n1):
            coeffs = {}
            for i in range(n1):
                if not M1[i][j].is_zero():
                    coeffs[l * n1 + i] = M1[i][j]
            for k in range(n2):
                if not M2[l][k].is_zero():
                    u = k * n1 + j
                    coeffs[u] = coeffs[u] - M2[l][k] if u in coeffs else -M2[l][k]
            if not coeffs:
                continue
            unknowns = list(coeffs)
            coords = W1.carrier.linear_coords([coeffs[u] for u in unknowns])
            for key in set().union(*coords):
                row = [0] * (n1 * n2)
                for u, c in zip(unknowns, coords):
                    row[u] = c.get(key, 0)
                if any(row):
                    rows.append(row)
    return rows


def _as_matrix(v, n2, n1):
    return [list(v[l * n1:(l + 1) * n1]) for l in range(n2)]


def hom_space(W1: Comodule, W2: Comodule) -> HomSpace:
    ring = W1.hopf.ring
    n1, n2 = W1.rank, W2.rank
    rows = equations(W1, W2)
    if ring.is_field:
        sol = nullspace(rows, n1 * n2, ring)
        basis = [_as_matrix(v, n2, n1) for v in sol]
        exact = True
    elif ring.kind == "Z":
        sol = [primitive_integer_vector(v) for v in nullspace(rows, n1 * n2, CoeffRing.rationals())]
        supports = [{i for i, c in enumerate(v) if c} for v in sol]
        exact = all(not (a & b) for a, b in itertools.combinations(supports, 2))
        basis = [_as_matrix(v, n2, n1) for v in sol]
    else:
        raise UsageError(f"hom spaces are computed over a field or Z, not {ring}")
    out = HomSpace(ring, (n2, n1), basis, exact)
    for U in basis:
        if not is_morphism(U, W1, W2):
            raise ArithmeticError("solver returned a non-morphism")
    return out


def is_morphism(U, W1: Comodule, W2: Comodule) -> bool:
    """U M1 == M2 U, evaluated in the Hopf algebra."""
    _check_pair(W1, W2)
    car = W1.carrier
    n1, n2 = W1.rank, W2.rank
    for l in range(n2):
        for j in range(n1):
            lhs = car.zero()
            for i in range(n1):
                if U[l][i]:
                    lhs = lhs + W1.matrix[i][j] * U[l][i]
            rhs = car.zero()
            for k in range(n2):
                if U[k][j]:
                    rhs = rhs + W2.matrix[l][k] * U[k][j]
            if lhs != rhs:
                return False
    return True


def scalar_det(U) -> Fraction:
    """Determinant over Q by Gaussian elimination."""
    m = [[Fraction(v) for v in r] for r in U]
    n = len(m)
    d = Fraction(1)
    for c in range(n):
        p = next((r for r in range(c, n) if m[r][c] != 0), None)
        if p is None:
            return Fraction(0)
        if p != c:
            m[c], m[p] = m[p], m[c]
            d = -d
        d *= m[c][c]
        for r in range(c + 1, n):
            f = m[r][c] / m[c][c]
            if f:
                m[r] = [a - f * b for a, b in zip(m[r], m[c])]
    return d


def _mod_det(U, p: int) -> int:
    m = [[int(v) % p for v in r] for r in U]
    n = len(m)
    d = 1
    for c in range(n):
        r0 = next((r for r in range(c, n) if m[r][c]), None)
        if r0 is None:
            return 0
        if r0 != c:
            m[c], m[r0] = m[r0], m[c]
            d = -d
        d = d * m[c][c] % p
        inv = pow(m[c][c], -1, p)
        for r in range(c + 1, n):
            f = m[r][c] * inv % p
            if f:
                m[r] = [(a - f * b) % p for a, b in zip(m[r], m[c])]
    return d % p


def det_in(U, ring: CoeffRing):
    if ring.kind == "F":
        return _mod_det(U, ring.modulus)
    return scalar_det(U)


def inverse_scalar(U, ring: CoeffRing):
    """Inverse over Q (also used for Z) or F_p by Gauss-Jordan."""
    n = len(U)
    mod = ring.modulus if ring.kind == "F" else None
    conv = (lambda v: int(v) % mod) if mod else Fraction
    m = [[conv(v) for v in r] + [int(i == j) for j in range(n)] for i, r in enumerate(U)]
    for c in range(n):
        p = next((r for r in range(c, n) if m[r][c] != 0), None)
        if p is None:
            raise ArithmeticError("matrix is singular")
        m[c], m[p] = m[p], m[c]
        inv = pow(m[c][c], -1, mod) if mod else 1 / m[c][c]
        m[c] = [(v * inv) % mod if mod else v * inv for v in m[c]]
        for r in range(n):
            if r != c and m[r][c] != 0:
                f = m[r][c]
                m[r] = [((a - f * b) % mod) if mod else a - f * b for a, b in zip(m[r], m[c])]
    return [[m[i][n + j] for j in range(n)] for i in range(n)]


def _combine(basis, coeffs):
    n2, n1 = len(basis[0]), len(basis[0][0])
    return [[sum(c * B[l][i] for c, B in zip(coeffs, basis)) for i in range(n1)] for l in range(n2)]


def _finish(W1, W2, U, ring, how: str) -> IsoResult:
    rep = Report("isomorphism witness")
    rep.add("U M1 = M2 U", is_morphism(U, W1, W2))
    Ui = inverse_scalar(U, ring)
    if ring.kind == "Z":
        ok = all(Fraction(v).denominator == 1 for r in Ui for v in r)
        rep.add("U^-1 has integer entries", ok)
        Ui = [[int(v) for v in r] for r in Ui]
    else:
        Ui = [[ring.coerce(v) for v in r] for r in Ui]
    rep.add("U^-1 is a morphism W2 -> W1", is_morphism(Ui, W2, W1))
    return IsoResult("isomorphic" if rep.ok else "undecided", [[ring.coerce(v) for v in r] for r in U],
                     how, rep)


def iso_exists(W1: Comodule, W2: Comodule, seed: int = 0, trials: int = 64) -> IsoResult:
    """Search the hom space for an invertible intertwiner.

    Over F_p the whole space is scanned when it has at most GRID_LIMIT points.
    Over Q, det(sum c_k B_k) has degree <= n in each c_k, so it vanishes
    identically iff it vanishes on the grid {0..n}^dim, which is scanned when
    small enough. Larger spaces fall back to seeded random combinations.
    Over Z exact answers are given for diagonal hom spaces with disjoint
    supports; anything else is reported as undecided.
    """
    _check_pair(W1, W2)
    ring = W1.hopf.ring
    if W1.rank != W2.rank:
        return IsoResult("none", None, f"ranks differ: {W1.rank} != {W2.rank}")
    n = W1.rank
    H = hom_space(W1, W2)
    if H.dim == 0:
        return IsoResult("none", None, "the only morphism is 0")
    if ring.kind == "Z":
        return _iso_over_z(W1, W2, H)
    # field
    if ring.kind == "F":
        values = range(ring.modulus)
    else:
        values = range(n + 1)
    if len(values) ** H.dim <= GRID_LIMIT:
        cands = (c for c in itertools.product(values, repeat=H.dim) if any(c))
        exhaustive = True
    else:
        rng = random.Random(seed)
        span = list(values) if ring.kind == "F" else list(range(-5, 6))
        unit_vecs = [tuple(int(i == k) for i in range(H.dim)) for k in range(H.dim)]
        cands = itertools.chain(unit_vecs, (tuple(rng.choice(span) for _ in range(H.dim)) for _ in range(trials)))
        exhaustive = False
    for c in cands:
        U = _combine(H.basis, c)
        if det_in(U, ring) != 0:
            return _finish(W1, W2, U, ring, f"combination {list(c)} of the hom-space basis")
    if exhaustive:
        return IsoResult("none", None, f"det vanishes on the whole {H.dim}-dimensional hom space")
    return IsoResult("undecided", None, "no invertible combination among the sampled ones")


def _iso_over_z(W1, W2, H: HomSpace) -> IsoResult:
    n = W1.rank
    diagonal = all(B[l][i] == 0 for B in H.basis for l in range(n) for i in range(n) if l != i)
    if not (diagonal and H.lattice_exact):
        return IsoResult("undecided", None, "hom space over Z is not diagonal with disjoint supports")
    covered = set()
    bad = []
    for B in H.basis:
        covered.update(i for i in range(n) if B[i][i])
        d = [B[i][i] for i in range(n) if B[i][i]]
        if any(abs(v) != 1 for v in d):
            bad.append(d)
    if len(covered) < n:
        return IsoResult("none", None, "every intertwiner kills a basis vector")
    if bad:
        d = bad[0]
        entries = ", ".join("a" if v == 1 else f"{v}*a" for v in d)
        k = next(abs(v) for v in d if abs(v) != 1)
        return IsoResult("none", None,
                         f"intertwiners are diag({entries}) with a in Z; invertibility requires a and {k}*a "
                         f"to be units, impossible since {k} is not a unit in Z")
    U = [[sum(B[l][i] for B in H.basis) for i in range(n)] for l in range(n)]
    return _finish(W1, W2, U, CoeffRing.integers(), "sum of the lattice basis")


# ---------------------------------------------------------------------------
# Sym^2 against sym_2, and their duals
# ---------------------------------------------------------------------------


def sym_pair(ring: CoeffRing, carrier: str = "G", duals: bool = False, group: str = "GL2"):
    """(Sym^2(V), sym_2(V)) over k[G], k[N] or k[T]; optionally their duals."""
    from .comodule import dual, restrict, standard, sym_power, sym_tensor2
    from .hopf import build_hopf, quotient_map

    h = build_hopf(group, "G", ring)
    V = standard(h, "right")
    W1, W2 = sym_power(V, 2), sym_tensor2(V)
    if duals:
        W1, W2 = dual(W1), dual(W2)
    if carrier != "G":
        q = quotient_map(group, "G", carrier, ring)
        W1, W2 = restrict(W1, q), restrict(W2, q)
    return W1, W2


def dual_iso_check() -> Report:
    """Duals of Sym^2 and sym_2: equal over k[N], not isomorphic over Z, isomorphic over F3."""
    rep = Report("duals of Sym^2(V) and sym_2(V)")
    Z = CoeffRing.integers()
    a, b = sym_pair(Z, "N", duals=True)
    rep.add("structure matrices over k[N] agree", a.same_matrix(b))
    corner = a.matrix[0][0]
    rep.add("(1,1) entry over k[N] is (t1^-2, 0)", corner == a.carrier.mono(0, (-2, 0)), str(corner))
    a, b = sym_pair(Z, "G", duals=True)
    r = iso_exists(a, b)
    rep.add("no isomorphism over Z, carrier k[GL2]", r.verdict == "none", r.obstruction)
    a, b = sym_pair(CoeffRing.prime_field(3), "G", duals=True)
    r = iso_exists(a, b)
    rep.add("isomorphic over F3, carrier k[GL2]", r.isomorphic, str(r.witness))
    return rep
