"""Points over Z/n: the group structures seen through matrices.

A point of G with values in B = Z/n is an algebra map k[G] -> B, i.e. a 2x2
matrix over B (det a unit, or det = 1 for SL2). Elements of k[G], k[N], k[T]
and k[N/T] are evaluated at points through their preimages in k[G]; the
Hopf structure must then reproduce matrix multiplication, inversion and the
identity.
"""

from __future__ import annotations

from dataclasses import dataclass
from math import gcd

import numpy as np

from . import _kernels
from .algebra import CoeffRing, SparsePoly
from .algebra.rings import is_prime
from .errors import UsageError
from .hopf import build_hopf, lift_images
from .report import Report

MAX_MODULUS = 7
POINT_GROUPS = ("GL2", "SL2", "T", "N", "NmodT")


def _check_modulus(n: int):
    if not 2 <= n <= MAX_MODULUS:
        raise UsageError(f"modulus must satisfy 2 <= n <= {MAX_MODULUS}, got {n}")


def unit_inverses(n: int) -> np.ndarray:
    """inv[a] = a^-1 mod n for units a, 0 otherwise."""
    inv = np.zeros(n, dtype=np.int64)
    for a in range(n):
        if gcd(a, n) == 1:
            inv[a] = pow(a, -1, n)
    return inv


def idempotents(n: int) -> list[int]:
    return [b for b in range(n) if b * b % n == b]


def dets(mats: np.ndarray, n: int) -> np.ndarray:
    return (mats[:, 0, 0] * mats[:, 1, 1] - mats[:, 0, 1] * mats[:, 1, 0]) % n


@dataclass
class PointGroup:
    group: str
    n: int
    ambient: str
    elements: np.ndarray  # (m, 2, 2) matrices, or (m,) idempotents for NmodT
    closed: bool

    @property
    def order(self) -> int:
        return len(self.elements)

    def contains(self, g) -> bool:
        if self.group == "NmodT":
            return int(g) % self.n in set(self.elements.tolist())
        g = np.asarray(g) % self.n
        return bool(np.any(np.all(self.elements == g, axis=(1, 2))))


def _all_matrices(n: int) -> np.ndarray:
    grid = np.indices((n, n, n, n)).reshape(4, -1).T
    return grid.reshape(-1, 2, 2).astype(np.int64)


def _select(group: str, n: int, ambient: str) -> np.ndarray:
    m = _all_matrices(n)
    d = dets(m, n)
    if ambient == "GL2":
        keep = np.array([gcd(int(v), n) == 1 for v in d]) if len(d) else np.zeros(0, bool)
    elif ambient == "SL2":
        keep = d == 1 % n
    else:
        raise UsageError(f"ambient group must be GL2 or SL2, got {ambient!r}")
    if group == "T":
        keep &= (m[:, 0, 1] == 0) & (m[:, 1, 0] == 0)
    elif group == "N":
        # points of V(x11 x12, x21 x22); monomial matrices when n is prime
        keep &= (m[:, 0, 0] * m[:, 0, 1] % n == 0) & (m[:, 1, 0] * m[:, 1, 1] % n == 0)
    return m[keep]


def enumerate_points(group: str, n: int, ambient: str = "GL2") -> PointGroup:
    """All B-points of GL2, SL2, T, N or N/T for B = Z/n, with a closure check."""
    _check_modulus(n)
    if group not in POINT_GROUPS:
        raise UsageError(f"group must be one of {POINT_GROUPS}, got {group!r}")
    if group in ("GL2", "SL2"):
        ambient = group
    if group == "NmodT":
        es = np.array(idempotents(n), dtype=np.int64)
        law = {(a, b) for a in es.tolist() for b in es.tolist()}
        closed = all(xnor(a, b, n) in set(es.tolist()) for a, b in law)
        return PointGroup(group, n, ambient, es, closed)
    mats = _select(group, n, ambient)
    k = _kernels.active()
    member = np.zeros(n ** 4, dtype=np.bool_)
    member[k.mat_codes(mats, n)] = True
    closed = k.closure_misses(mats, member, n) == 0
    return PointGroup(group, n, ambient, mats, closed)


def order_formula(group: str, q: int, ambient: str = "GL2") -> int:
    """Orders over F_q."""
    if group == "GL2":
        return (q * q - 1) * (q * q - q)
    if group == "SL2":
        return q * (q * q - 1)
    t = (q - 1) ** 2 if ambient == "GL2" else q - 1
    if group == "T":
        return t
    if group == "N":
        return 2 * t
    if group == "NmodT":
        return 2
    raise UsageError(group)


def order_check(qs=(2, 3, 5)) -> Report:
    rep = Report("point counts over F_q")
    for q in qs:
        for ambient in ("GL2", "SL2"):
            for g in (ambient, "T", "N"):
                P = enumerate_points(g, q, ambient)
                want = order_formula(g, q, ambient)
                label = g if g == ambient else f"{g} in {ambient}"
                rep.add(f"|{label}(F{q})| = {want}", P.order == want and P.closed,
                        f"enumerated {P.order}, closed under products: {P.closed}")
        T = enumerate_points("T", q).order
        N = enumerate_points("N", q).order
        rep.add(f"|N(F{q})| = 2 |T(F{q})|", N == 2 * T, f"{N} = 2 * {T}")
    return rep


# ---------------------------------------------------------------------------
# evaluating Hopf algebra elements at points
# ---------------------------------------------------------------------------


def term_arrays(e) -> tuple[np.ndarray, np.ndarray, int]:
    """(exps, coeffs, vars per leg) of an element of k[GL2]^(x)L or k[SL2]^(x)L.

    GL2 columns per leg are x11, x12, x21, x22, D^-1; SL2 columns drop D^-1.
    """
    car = e.carrier
    legs = car.legs
    if hasattr(e, "dexp"):
        rows, coeffs = [], []
        for x, c in e.num.items():
            row = []
            for j in range(legs):
                row.extend(x[4 * j:4 * j + 4])
                row.append(e.dexp[j])
            rows.append(row)
            coeffs.append(int(c))
        width = 5
    else:
        rows = [list(x) for x in e.terms]
        coeffs = [int(c) for c in e.terms.values()]
        width = 4
    exps = np.array(rows, dtype=np.int64).reshape(len(rows), width * legs)
    return exps, np.array(coeffs, dtype=np.int64), width


def point_values(mats: np.ndarray, n: int, width: int) -> np.ndarray:
    """Columns x11, x12, x21, x22 (and det^-1 when width is 5)."""
    flat = mats.reshape(-1, 4) % n
    if width == 4:
        return flat
    dinv = unit_inverses(n)[dets(mats, n)]
    return np.concatenate([flat, dinv[:, None]], axis=1)


def evaluate(e, mats_per_leg: list, n: int) -> np.ndarray:
    exps, coeffs, width = term_arrays(e)
    vals = np.concatenate([point_values(m, n, width) for m in mats_per_leg], axis=1)
    return _kernels.active().eval_terms(exps, coeffs, np.ascontiguousarray(vals), n)


def matmul_mod(a: np.ndarray, b: np.ndarray, n: int) -> np.ndarray:
    return np.einsum("pij,pjk->pik", a, b) % n


def inverse_mod(mats: np.ndarray, n: int) -> np.ndarray:
    dinv = unit_inverses(n)[dets(mats, n)]
    adj = np.stack([np.stack([mats[:, 1, 1], -mats[:, 0, 1]], axis=1),
                    np.stack([-mats[:, 1, 0], mats[:, 0, 0]], axis=1)], axis=1)
    return adj * dinv[:, None, None] % n


def _pairs(m: int, max_pairs: int | None, seed: int):
    if max_pairs is None or m * m <= max_pairs:
        i, j = np.divmod(np.arange(m * m), m)
        return i, j, True
    rng = np.random.default_rng(seed)
    return rng.integers(0, m, max_pairs), rng.integers(0, m, max_pairs), False


def hopf_points_consistency(ambient: str = "GL2", n: int = 3, kind: str = "G",
                            max_pairs: int | None = 250_000, seed: int = 0, hopf=None) -> Report:
    """Delta, S and eps of k[K] against the group law on K(Z/n).

    For every generator y of k[K] with preimage Y in k[G]:
    (g (x) h)(Delta y) = Y(g h), S(y)(g) = Y(g^-1) and eps(y) = Y(Id).
    Points of N/T are read through points of N. ``hopf`` replaces the
    built-in k[K] over Z, e.g. to confirm that a perturbed structure fails.
    """
    _check_modulus(n)
    Z = CoeffRing.integers()
    hK = hopf if hopf is not None else build_hopf(ambient, kind, Z)
    G = build_hopf(ambient, "G", Z).carrier
    G2 = G.power(2)
    if kind == "G":
        lifts = G.identity_images(0)
    else:
        lifts = lift_images(ambient, kind, Z)
    point_kind = {"G": ambient, "N": "N", "T": "T", "NmodT": "N"}[kind]
    P = enumerate_points(point_kind, n, ambient).elements
    i, j, full = _pairs(len(P), max_pairs, seed)
    g, h = P[i], P[j]
    gh = matmul_mod(g, h, n)
    ginv = inverse_mod(P, n)
    ident = np.eye(2, dtype=np.int64)[None]
    lift2 = [{y: G2.place(v, (leg,)) for y, v in lifts.items()} for leg in (0, 1)]
    rep = Report(f"k[{kind}] of {ambient} against points over Z/{n}")
    fd, fs, fe = [], [], []
    for y in hK.gens:
        Y = lifts[y]
        d = hK.delta[y] if kind == "G" else hK.carrier.power(2).extend(hK.delta[y], lift2, G2.one())
        if not np.array_equal(evaluate(d, [g, h], n), evaluate(Y, [gh], n)):
            fd.append(y)
        s = hK.antipode[y] if kind == "G" else hK.carrier.extend(hK.antipode[y], [lifts], G.one())
        if not np.array_equal(evaluate(s, [P], n), evaluate(Y, [ginv], n)):
            fs.append(y)
        if int(evaluate(Y, [ident], n)[0]) != int(hK.counit[y]) % n:
            fe.append(y)
    scope = f"all {len(i)} pairs" if full else f"{len(i)} sampled pairs"
    rep.add("comultiplication is matrix multiplication", not fd, ", ".join(fd) or scope)
    rep.add("antipode is matrix inversion", not fs, ", ".join(fs) or f"{len(P)} points")
    rep.add("counit is evaluation at the identity", not fe, ", ".join(fe))
    return rep


# ---------------------------------------------------------------------------
# the normalizer of the torus
# ---------------------------------------------------------------------------


def conjugate_torus(g, p: int, ambient: str = "GL2") -> list:
    """g diag(z, w) g^-1 (GL2) or g diag(z, 1/z) g^-1 (SL2) over F_p[z^+-1, w^+-1]."""
    ring = CoeffRing.prime_field(p)
    names = ("z", "w") if ambient == "GL2" else ("z",)
    k = len(names)

    def const(c):
        return SparsePoly(names, {(0,) * k: int(c) % p}, ring, laurent=True)

    z = SparsePoly(names, {(1,) + (0,) * (k - 1): 1}, ring, laurent=True)
    w = SparsePoly(names, {(0, 1): 1}, ring, laurent=True) if k == 2 else SparsePoly(names, {(-1,): 1}, ring, laurent=True)
    a = [[int(g[r][c]) % p for c in range(2)] for r in range(2)]
    d = (a[0][0] * a[1][1] - a[0][1] * a[1][0]) % p
    di = pow(d, -1, p)
    ginv = [[a[1][1] * di, -a[0][1] * di], [-a[1][0] * di, a[0][0] * di]]
    zero = const(0)
    t = [[z, zero], [zero, w]]
    gt = [[const(a[r][0]) * t[0][c] + const(a[r][1]) * t[1][c] for c in range(2)] for r in range(2)]
    return [[gt[r][0] * const(ginv[0][c]) + gt[r][1] * const(ginv[1][c]) for c in range(2)] for r in range(2)]


def normalizer_check(p: int, ambient: str = "GL2") -> Report:
    """{g : g T g^-1 in T} equals the monomial matrices and the points of V(I)."""
    _check_modulus(p)
    if not is_prime(p):
        raise UsageError("normalizer_check needs a prime modulus")
    G = enumerate_points(ambient, p).elements
    rep = Report(f"normalizer of T in {ambient}(F{p})")
    ring = CoeffRing.prime_field(p)
    normal, formula_ok = set(), True
    for g in G:
        c = conjugate_torus(g, p, ambient)
        key = tuple(int(v) for v in g.reshape(-1))
        if c[0][1].is_zero() and c[1][0].is_zero():
            normal.add(key)
        # off-diagonal entries are a11 a12 (w - z)/D and a21 a22 (z - w)/D
        d = int(g[0, 0] * g[1, 1] - g[0, 1] * g[1, 0]) % p
        di = pow(d, -1, p)
        names = c[0][1].names
        if ambient == "GL2":
            wz = {(0, 1): 1, (1, 0): -1}
        else:
            wz = {(-1,): 1, (1,): -1}
        f12 = SparsePoly(names, {e: v * int(g[0, 0] * g[0, 1]) * di for e, v in wz.items()}, ring, laurent=True)
        f21 = SparsePoly(names, {e: -v * int(g[1, 0] * g[1, 1]) * di for e, v in wz.items()}, ring, laurent=True)
        formula_ok &= (c[0][1] == f12) and (c[1][0] == f21)
    monomial = {tuple(int(v) for v in g.reshape(-1)) for g in G
                if (g[0, 1] == 0 and g[1, 0] == 0) or (g[0, 0] == 0 and g[1, 1] == 0)}
    vi = {tuple(int(v) for v in g.reshape(-1)) for g in enumerate_points("N", p, ambient).elements}
    diag = {tuple(int(v) for v in g.reshape(-1)) for g in enumerate_points("T", p, ambient).elements}
    rep.add("off-diagonal entries are a11 a12 (w - z)/D and -a21 a22 (w - z)/D", formula_ok)
    rep.add("normalizing points are the monomial matrices", normal == monomial, f"{len(normal)} points")
    rep.add("normalizing points are the points of V(x11 x12, x21 x22)", normal == vi)
    rep.add("diagonal points normalize T", diag <= normal)
    return rep


# ---------------------------------------------------------------------------
# N -> N/T and its section
# ---------------------------------------------------------------------------


def xnor(a: int, b: int, n: int) -> int:
    """Group law on idempotent points of N/T, read off Delta(e1) = e1 (x) e1 + e2 (x) e2."""
    return (a * b + (1 - a) * (1 - b)) % n


def pi_point(g, n: int) -> int:
    """pi_B(g) = a11 a22 / D."""
    d = int(g[0][0] * g[1][1] - g[0][1] * g[1][0]) % n
    return int(g[0][0] * g[1][1]) * pow(d, -1, n) % n


def sigma_point(b: int, n: int) -> np.ndarray:
    """sigma_B(b) = [[b, 1 - b], [1 - b, b]]."""
    return np.array([[b % n, (1 - b) % n], [(1 - b) % n, b % n]], dtype=np.int64)


def splitting_check(n: int) -> Report:
    """1 -> T -> N -> N/T -> 1 over Z/n, split by sigma_B (GL2)."""
    _check_modulus(n)
    rep = Report(f"split sequence for N over Z/{n}")
    N = enumerate_points("N", n).elements
    T = enumerate_points("T", n).elements
    E = idempotents(n)
    keyset = lambda arr: {tuple(int(v) for v in g.reshape(-1)) for g in arr}  # noqa: E731
    Nset, Tset = keyset(N), keyset(T)
    pis = [pi_point(g, n) for g in N]
    rep.add("pi_B lands in idempotents", all(b in E for b in pis))
    hom = all(pi_point(matmul_mod(N[a:a + 1], N[b:b + 1], n)[0], n) == xnor(pis[a], pis[b], n)
              for a in range(len(N)) for b in range(len(N)))
    rep.add("pi_B is a group homomorphism", hom)
    ker = keyset(N[[i for i, b in enumerate(pis) if b == 1]])
    rep.add("ker pi_B = T", ker == Tset, f"|T| = {len(Tset)}")
    rep.add("sigma_B(1) = Id", np.array_equal(sigma_point(1, n), np.eye(2, dtype=np.int64)))
    sig = {b: sigma_point(b, n) for b in E}
    rep.add("sigma_B(b) lies in N", all(tuple(int(v) for v in s.reshape(-1)) in Nset for s in sig.values()))
    rep.add("pi_B o sigma_B = id", all(pi_point(sig[b], n) == b for b in E))
    mult = all(np.array_equal(sig[a] @ sig[b] % n, sig[xnor(a, b, n)]) for a in E for b in E)
    rep.add("sigma_B is multiplicative", mult)
    prods = {tuple(int(v) for v in (t @ sig[b] % n).reshape(-1)) for t in T for b in E}
    rep.add("(t, b) -> t sigma_B(b) is a bijection T x N/T -> N",
            prods == Nset and len(Nset) == len(T) * len(E),
            f"|N| = {len(Nset)} = {len(T)} * {len(E)}")
    rep.add("antidiagonal points map to 0", all(pis[i] == 0 for i, g in enumerate(N)
                                                 if g[0, 0] == 0 and g[1, 1] == 0))
    return rep


# ---------------------------------------------------------------------------
# roots and coroots of GL2
# ---------------------------------------------------------------------------


def x_root(root: str, b: int, n: int) -> np.ndarray:
    if root == "alpha":
        return np.array([[1, b % n], [0, 1]], dtype=np.int64)
    if root == "beta":
        return np.array([[1, 0], [b % n, 1]], dtype=np.int64)
    raise UsageError(root)


def root_value(root: str, t, n: int) -> int:
    """alpha(t) = t1 / t2, beta(t) = t2 / t1."""
    t1, t2 = int(t[0][0]), int(t[1][1])
    return t1 * pow(t2, -1, n) % n if root == "alpha" else t2 * pow(t1, -1, n) % n


def n_root(root: str, u: int, n: int) -> np.ndarray:
    other = "beta" if root == "alpha" else "alpha"
    ui = pow(u, -1, n)
    return x_root(root, u, n) @ x_root(other, -ui, n) @ x_root(root, u, n) % n


def coroot(root: str, u: int, n: int) -> np.ndarray:
    return n_root(root, u, n) @ inverse_mod(n_root(root, 1, n)[None], n)[0] % n


def root_coroot_check(p: int) -> Report:
    _check_modulus(p)
    rep = Report(f"roots and coroots of GL2 over F{p}")
    T = enumerate_points("T", p).elements
    units = [u for u in range(1, p) if gcd(u, p) == 1]
    for root in ("alpha", "beta"):
        ok = all(np.array_equal(t @ x_root(root, b, p) @ inverse_mod(t[None], p)[0] % p,
                                x_root(root, root_value(root, t, p) * b, p))
                 for t in T for b in range(p))
        rep.add(f"t x_{root}(b) t^-1 = x_{root}({root}(t) b)", ok, f"{len(T)} x {p} pairs")
        rep.add(f"x_{root}(0) = Id", np.array_equal(x_root(root, 0, p), np.eye(2, dtype=np.int64)))
        want = (lambda u: np.diag([u, pow(u, -1, p)])) if root == "alpha" else (lambda u: np.diag([pow(u, -1, p), u]))
        ok = all(np.array_equal(coroot(root, u, p), want(u) % p) for u in units)
        rep.add(f"{root}*(u) = n_{root}(u) n_{root}(1)^-1 is " + ("diag(u, 1/u)" if root == "alpha" else "diag(1/u, u)"),
                ok, f"{len(units)} units")
    return rep
