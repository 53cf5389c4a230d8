"""Finite free comodules given by structure matrices.

A comodule W with basis e_1..e_n is stored as a matrix M over the Hopf
algebra H with Delta(e_j) = sum_i M[i][j] (x) e_i, where the tensor factor
order is recorded by ``side``:

* ``"left"``:  W -> W (x) H, so Delta(M[i][j]) = sum_k M[i][k] (x) M[k][j];
* ``"right"``: W -> H (x) W, so Delta(M[i][j]) = sum_k M[k][j] (x) M[i][k].

With these conventions the standard comodule V = A e1 + A e2 has matrix X
(left) or its transpose (right), where X = [[x11, x12], [x21, x22]].
"""

from __future__ import annotations

from dataclasses import dataclass
from math import comb
from typing import Sequence

from .algebra.carriers import CarrierElem
from .errors import NotClosedError, NotDualizableError, UsageError
from .hopf import HopfAlgebra, HopfMap
from .report import Report

SIDES = ("left", "right")
Matrix = list  # list of rows of carrier elements


@dataclass(eq=False)
class Comodule:
    hopf: HopfAlgebra
    matrix: Matrix
    side: str = "left"
    basis: tuple = ()
    name: str = "W"

    def __post_init__(self):
        if self.side not in SIDES:
            raise UsageError(f"side must be 'left' or 'right', got {self.side!r}")
        n = len(self.matrix)
        if any(len(r) != n for r in self.matrix):
            raise UsageError("structure matrix must be square")
        if not self.basis:
            self.basis = tuple(f"b{i}" for i in range(n))
        car = self.hopf.carrier
        for r in self.matrix:
            for v in r:
                if v.carrier != car:
                    raise UsageError("matrix entries must lie in the Hopf algebra")

    @property
    def rank(self) -> int:
        return len(self.matrix)

    @property
    def carrier(self):
        return self.hopf.carrier

    def entry(self, i: int, j: int) -> CarrierElem:
        return self.matrix[i][j]

    def coaction(self, j: int) -> list:
        """Nonzero terms (i, M[i][j]) of Delta(e_j)."""
        return [(i, self.matrix[i][j]) for i in range(self.rank) if not self.matrix[i][j].is_zero()]

    def same_matrix(self, other: "Comodule") -> bool:
        return self.rank == other.rank and all(
            a == b for ra, rb in zip(self.matrix, other.matrix) for a, b in zip(ra, rb))

    def to_strings(self) -> list[list[str]]:
        return [[str(v) for v in r] for r in self.matrix]

    def __str__(self):
        w = self.to_strings()
        return f"{self.name} over {self.hopf.name} ({self.side}):\n" + "\n".join("  [" + ", ".join(r) + "]" for r in w)


def standard(hopf: HopfAlgebra, side: str = "right") -> Comodule:
    """The standard comodule V of GL2 or SL2.

    right: Delta(e1) = x11 (x) e1 + x12 (x) e2, Delta(e2) = x21 (x) e1 + x22 (x) e2.
    left:  Delta(e1) = e1 (x) x11 + e2 (x) x21, Delta(e2) = e1 (x) x12 + e2 (x) x22.
    """
    if hopf.kind != "G":
        raise UsageError("the standard comodule is defined over k[GL2] or k[SL2]; restrict it afterwards")
    x = [[hopf.gen("x11"), hopf.gen("x12")], [hopf.gen("x21"), hopf.gen("x22")]]
    m = x if side == "left" else [[x[0][0], x[1][0]], [x[0][1], x[1][1]]]
    return Comodule(hopf, m, side, ("e1", "e2"), f"V ({side})")


def convolve(W: Comodule, i: int, j: int, placed=None) -> CarrierElem:
    """sum_k M[i][k] (x) M[k][j] (left) or sum_k M[k][j] (x) M[i][k] (right)."""
    c2 = W.carrier.power(2)
    L, R = placed if placed is not None else _placed(W)
    total = c2.zero()
    for k in range(W.rank):
        if W.side == "left":
            a, b = L[i][k], R[k][j]
        else:
            a, b = L[k][j], R[i][k]
        if a is not None and b is not None:
            total = total + a * b
    return total


def _placed(W: Comodule):
    c2 = W.carrier.power(2)
    L = [[None if v.is_zero() else c2.place(v, (0,)) for v in r] for r in W.matrix]
    R = [[None if v.is_zero() else c2.place(v, (1,)) for v in r] for r in W.matrix]
    return L, R


def verify_comodule(W: Comodule) -> Report:
    """Counit and coassociativity of the structure matrix, entry by entry."""
    rep = Report(f"comodule axioms for {W.name}")
    h = W.hopf
    bad = [(i, j) for i in range(W.rank) for j in range(W.rank)
           if h.apply_counit(W.matrix[i][j]) != (1 if i == j else 0)]
    rep.add("counit: eps(M) = Id", not bad, f"bad entries {bad}" if bad else f"rank {W.rank}")
    placed = _placed(W)
    bad = []
    for i in range(W.rank):
        for j in range(W.rank):
            if h.comultiply(W.matrix[i][j]) != convolve(W, i, j, placed):
                bad.append((i, j))
    rep.add("coassociativity: Delta(M) = M * M", not bad, f"bad entries {bad}" if bad else "")
    return rep


def tensor(W1: Comodule, W2: Comodule) -> Comodule:
    """W1 (x) W2 with basis (i, k) in row-major order."""
    if W1.hopf is not W2.hopf or W1.side != W2.side:
        raise UsageError("tensor needs comodules over the same Hopf algebra and side")
    n1, n2 = W1.rank, W2.rank
    m = [[W1.matrix[i][j] * W2.matrix[k][l] for j in range(n1) for l in range(n2)]
         for i in range(n1) for k in range(n2)]
    basis = tuple(f"{a}{b}" for a in W1.basis for b in W2.basis)
    return Comodule(W1.hopf, m, W1.side, basis, f"{W1.name} (x) {W2.name}")


def sym_power(W: Comodule, d: int) -> Comodule:
    """Sym^d of a rank-2 comodule on the basis e1^d, e1^(d-1) e2, ..., e2^d.

    Delta(e1^k e2^l) = (sum_i M[i][0] e_i)^k (sum_i M[i][1] e_i)^l expanded
    in the monomial basis; column a is the image of e1^(d-a) e2^a.
    """
    if W.rank != 2:
        raise UsageError("sym_power is implemented for rank-2 comodules")
    if d < 0:
        raise UsageError("degree must be non-negative")
    zero = W.carrier.zero()
    one = W.carrier.one()

    def powers(x, k):
        out = [one]
        for _ in range(k):
            out.append(out[-1] * x)
        return out

    cols = []
    pw = [(powers(W.matrix[0][j], d), powers(W.matrix[1][j], d)) for j in range(2)]
    for a in range(d + 1):
        k, l = d - a, a
        (p1, q1), (p2, q2) = pw
        f = [p1[k - r] * q1[r] * comb(k, r) for r in range(k + 1)]  # coeff of e2^r
        g = [p2[l - s] * q2[s] * comb(l, s) for s in range(l + 1)]
        col = [zero] * (d + 1)
        for r, fr in enumerate(f):
            if fr.is_zero():
                continue
            for s, gs in enumerate(g):
                if not gs.is_zero():
                    col[r + s] = col[r + s] + fr * gs
        cols.append(col)
    m = [[cols[a][b] for a in range(d + 1)] for b in range(d + 1)]
    basis = tuple(_sym_label(d, a) for a in range(d + 1))
    return Comodule(W.hopf, m, W.side, basis, f"Sym^{d}({W.name})")


def _sym_label(d: int, a: int) -> str:
    parts = []
    if d - a:
        parts.append("e1" if d - a == 1 else f"e1^{d - a}")
    if a:
        parts.append("e2" if a == 1 else f"e2^{a}")
    return "*".join(parts) or "1"


def sym_tensor2(W: Comodule) -> Comodule:
    """Symmetric tensors u11 = e1e1, u12 = e1e2 + e2e1, u22 = e2e2 inside W (x) W."""
    if W.rank != 2:
        raise UsageError("sym_tensor2 is implemented for rank-2 comodules")
    T = tensor(W, W)
    P = [[1, 0, 0], [0, 1, 0], [0, 1, 0], [0, 0, 1]]  # columns: u11, u12, u22
    left_inv_rows = (0, 1, 3)
    MP = [[_dot_scalar(T.matrix[r], [P[k][c] for k in range(4)]) for c in range(3)] for r in range(4)]
    Nm = [[MP[r][c] for c in range(3)] for r in left_inv_rows]
    # closure: M P == P N
    for r in range(4):
        for c in range(3):
            pn = sum((Nm[k][c] * P[r][k] for k in range(3)), W.carrier.zero())
            if MP[r][c] != pn:
                raise NotClosedError("symmetric tensors are not a subcomodule")
    return Comodule(W.hopf, Nm, W.side, ("u11", "u12", "u22"), f"sym_2({W.name})")


def _dot_scalar(row, vec):
    total = None
    for v, c in zip(row, vec):
        if c:
            t = v * c
            total = t if total is None else total + t
    return total if total is not None else row[0] * 0


# ---------------------------------------------------------------------------
# determinants and inverses without division
# ---------------------------------------------------------------------------


def charpoly(M: Matrix, zero, one) -> list:
    """Coefficients [1, c1, ..., cn] of det(lambda I - M) (Berkowitz)."""
    n = len(M)
    if n == 0:
        return [one]
    vec = [one, -M[0][0]]
    for r in range(1, n):
        # M_{r+1} = [[A, S], [R, a]] with A the leading r x r block
        A = [row[:r] for row in M[:r]]
        S = [M[i][r] for i in range(r)]
        R = M[r][:r]
        a = M[r][r]
        col = [one, -a]
        cur = S
        for _ in range(r):
            col.append(-_dot(R, cur, zero))
            cur = [_dot(A[i], cur, zero) for i in range(r)]
        # Toeplitz (r+2) x (r+1) lower triangular times vec
        new = []
        for i in range(r + 2):
            acc = zero
            for j in range(min(i, r) + 1):
                acc = acc + col[i - j] * vec[j]
            new.append(acc)
        vec = new
    return vec


def _dot(u, v, zero):
    acc = zero
    for a, b in zip(u, v):
        if not (a.is_zero() or b.is_zero()):
            acc = acc + a * b
    return acc


def matmul(A: Matrix, B: Matrix, zero) -> Matrix:
    return [[_dot(A[i], [B[k][j] for k in range(len(B))], zero) for j in range(len(B[0]))] for i in range(len(A))]


def det(M: Matrix, zero, one):
    n = len(M)
    c = charpoly(M, zero, one)
    return c[n] if n % 2 == 0 else -c[n]


def adjugate(M: Matrix, zero, one) -> tuple[Matrix, CarrierElem]:
    """(adj M, det M) via Cayley-Hamilton: adj M = (-1)^(n-1) sum c_k M^(n-1-k)."""
    n = len(M)
    c = charpoly(M, zero, one)
    acc = [[c[n - 1] if i == j else zero for j in range(n)] for i in range(n)]
    power = [[one if i == j else zero for j in range(n)] for i in range(n)]
    for k in range(n - 2, -1, -1):
        power = matmul(power, M, zero)
        acc = [[acc[i][j] + power[i][j] * c[k] for j in range(n)] for i in range(n)]
    sign = 1 if (n - 1) % 2 == 0 else -1
    adj = [[acc[i][j] * sign for j in range(n)] for i in range(n)]
    d = c[n] if n % 2 == 0 else -c[n]
    return adj, d


def inverse_matrix(M: Matrix, zero, one) -> Matrix:
    adj, d = adjugate(M, zero, one)
    try:
        dinv = d.inverse()
    except ZeroDivisionError:
        raise NotDualizableError(f"determinant {d} is not a unit") from None
    return [[v * dinv for v in row] for row in adj]


def dual(W: Comodule) -> Comodule:
    """W* with structure matrix (M^-1)^tr."""
    car = W.carrier
    inv = inverse_matrix(W.matrix, car.zero(), car.one())
    m = [[inv[j][i] for j in range(W.rank)] for i in range(W.rank)]
    return Comodule(W.hopf, m, W.side, tuple(f"{b}*" for b in W.basis), f"{W.name}*")


def antipode_inverse(W: Comodule) -> Matrix:
    """S applied entrywise, which is M^-1 for any comodule matrix."""
    return [[W.hopf.apply_antipode(v) for v in r] for r in W.matrix]


def restrict(W: Comodule, q: HopfMap) -> Comodule:
    """Push the coefficients through a Hopf map (restriction to a subgroup scheme)."""
    if q.source is not W.hopf:
        raise UsageError(f"map starts at {q.source.name}, comodule lives over {W.hopf.name}")
    m = [[q(v) for v in r] for r in W.matrix]
    return Comodule(q.target, m, W.side, W.basis, f"{W.name}|{q.target.name}")


def sub_comodule(W: Comodule, indices: Sequence[int]) -> Comodule:
    """The comodule spanned by the basis vectors ``indices``; must be closed."""
    idx = list(indices)
    if not is_closed(W, idx):
        raise NotClosedError(f"span of {[W.basis[i] for i in idx]} is not a subcomodule")
    m = [[W.matrix[i][j] for j in idx] for i in idx]
    return Comodule(W.hopf, m, W.side, tuple(W.basis[i] for i in idx), f"{W.name}[{','.join(map(str, idx))}]")


def is_closed(W: Comodule, indices: Sequence[int]) -> bool:
    """Is span{e_j : j in indices} stable under the coaction?"""
    s = set(indices)
    return all(W.matrix[i][j].is_zero() for j in s for i in range(W.rank) if i not in s)
