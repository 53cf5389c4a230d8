"""Hopf algebra structures on k[GL2], k[SL2], k[N], k[T] and k[N/T].

Each structure is stored as generator images of the comultiplication,
antipode and counit; everything else is obtained by extending these to
algebra maps. ``verify_hopf_axioms`` checks well-definedness on the
defining relations and the Hopf axioms on every generator.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from functools import lru_cache
from typing import Mapping

from .algebra import (
    CoeffRing,
    IdempotentCarrier,
    LocalizedCarrier,
    SL2Carrier,
    SplitCarrier,
)
from .algebra.carriers import Carrier, CarrierElem
from .errors import UsageError
from .report import Report

GROUPS = ("GL2", "SL2")
KINDS = ("G", "N", "T", "NmodT")


@dataclass(eq=False)
class HopfAlgebra:
    """A commutative Hopf algebra presented by generator images.

    ``delta`` maps each generator to an element of the 2-leg carrier,
    ``antipode`` to an element of the carrier, ``counit`` to a coefficient.
    """

    name: str
    group: str
    kind: str
    carrier: Carrier
    delta: dict
    antipode: dict
    counit: dict
    _maps: dict = field(default_factory=dict, repr=False)

    @property
    def ring(self) -> CoeffRing:
        return self.carrier.ring

    @property
    def gens(self) -> tuple:
        return self.carrier.leg_gens

    def __repr__(self):
        return f"HopfAlgebra({self.name}, {self.ring})"

    def gen(self, name: str) -> CarrierElem:
        return self.carrier.gen(name)

    def comultiply(self, e: CarrierElem) -> CarrierElem:
        return self.carrier.extend(e, [self.delta], self.carrier.power(2).one())

    def apply_antipode(self, e: CarrierElem) -> CarrierElem:
        return self.carrier.extend(e, [self.antipode], self.carrier.one())

    def apply_counit(self, e: CarrierElem):
        return self.ring.coerce(self.carrier.extend(e, [self.counit], 1))

    def counit_elem(self, e: CarrierElem) -> CarrierElem:
        return self.carrier.scalar(self.apply_counit(e))

    def comultiply_on_legs(self, e: CarrierElem, leg: int) -> CarrierElem:
        """Apply the comultiplication to one leg of an n-leg element."""
        n = e.carrier.legs
        target = self.carrier.power(n + 1)
        images = []
        for j in range(n):
            if j < leg:
                images.append(target.identity_images(j))
            elif j == leg:
                images.append({g: target.place(d, (j, j + 1)) for g, d in self.delta.items()})
            else:
                images.append(target.identity_images(j + 1))
        return e.carrier.extend(e, images, target.one())

    def _images(self, key):
        m = self._maps.get(key)
        if m is not None:
            return m
        c1, c2, c3 = (self.carrier.power(k) for k in (1, 2, 3))
        if key == "delta_left":
            m = [{g: c3.place(d, (0, 1)) for g, d in self.delta.items()}, c3.identity_images(2)]
        elif key == "delta_right":
            m = [c3.identity_images(0), {g: c3.place(d, (1, 2)) for g, d in self.delta.items()}]
        elif key == "counit_left":
            m = [{g: c1.scalar(v) for g, v in self.counit.items()}, c1.identity_images(0)]
        elif key == "counit_right":
            m = [c1.identity_images(0), {g: c1.scalar(v) for g, v in self.counit.items()}]
        elif key == "antipode_left":
            m = [self.antipode, c1.identity_images(0)]
        elif key == "antipode_right":
            m = [c1.identity_images(0), self.antipode]
        else:
            raise KeyError(key)
        self._maps[key] = m
        return m

    def apply_on_pair(self, key: str, t: CarrierElem) -> CarrierElem:
        target = self.carrier.power(3 if key.startswith("delta") else 1)
        return t.carrier.extend(t, self._images(key), target.one())


def verify_hopf_axioms(h: HopfAlgebra) -> Report:
    """Relations, coassociativity, counit and antipode on every generator."""
    rep = Report(f"Hopf axioms for {h.name} over {h.ring}")
    c1, c2 = h.carrier, h.carrier.power(2)

    bad = [lbl for lbl, v in c1.relation_values(h.delta, c2.one()) if v != 0]
    rep.add("comultiplication respects relations", not bad, ", ".join(bad))
    bad = [lbl for lbl, v in c1.relation_values(h.antipode, c1.one()) if v != 0]
    rep.add("antipode respects relations", not bad, ", ".join(bad))
    bad = [lbl for lbl, v in c1.relation_values(h.counit, 1) if h.ring.coerce(v) != 0]
    rep.add("counit respects relations", not bad, ", ".join(bad))

    fails = {"coassociativity": [], "counit": [], "antipode": []}
    for g in h.gens:
        x = c1.gen(g)
        d = h.delta[g]
        if h.apply_on_pair("delta_left", d) != h.apply_on_pair("delta_right", d):
            fails["coassociativity"].append(g)
        if h.apply_on_pair("counit_left", d) != x or h.apply_on_pair("counit_right", d) != x:
            fails["counit"].append(g)
        eps = c1.scalar(h.counit[g])
        if h.apply_on_pair("antipode_left", d) != eps or h.apply_on_pair("antipode_right", d) != eps:
            fails["antipode"].append(g)
    for name, gens in fails.items():
        rep.add(name, not gens, f"fails on {', '.join(gens)}" if gens else f"{len(h.gens)} generators")
    return rep


# ---------------------------------------------------------------------------
# k[GL2] and k[SL2]
# ---------------------------------------------------------------------------


def _matrix_gens(car):
    x = {g: car.gen(g) for g in ("x11", "x12", "x21", "x22")}
    return [[x["x11"], x["x12"]], [x["x21"], x["x22"]]]


def _delta_matrix(car):
    c2 = car.power(2)
    L = _matrix_gens_leg(c2, 0)
    R = _matrix_gens_leg(c2, 1)
    return {f"x{i + 1}{j + 1}": L[i][0] * R[0][j] + L[i][1] * R[1][j] for i in range(2) for j in range(2)}


def _matrix_gens_leg(car, leg):
    return [[car.gen("x11", leg), car.gen("x12", leg)], [car.gen("x21", leg), car.gen("x22", leg)]]


@lru_cache(maxsize=None)
def gl2_hopf(ring: CoeffRing) -> HopfAlgebra:
    car = LocalizedCarrier(ring)
    c2 = car.power(2)
    (a, b), (c, d) = _matrix_gens(car)
    dinv = car.gen("D^-1")
    det = a * d - b * c
    delta = _delta_matrix(car)
    delta["D^-1"] = c2.gen("D^-1", 0) * c2.gen("D^-1", 1)
    antipode = {"x11": d * dinv, "x12": -b * dinv, "x21": -c * dinv, "x22": a * dinv, "D^-1": det}
    counit = {"x11": 1, "x12": 0, "x21": 0, "x22": 1, "D^-1": 1}
    return HopfAlgebra("k[GL2]", "GL2", "G", car, delta, antipode, counit)


@lru_cache(maxsize=None)
def sl2_hopf(ring: CoeffRing) -> HopfAlgebra:
    car = SL2Carrier(ring)
    (a, b), (c, d) = _matrix_gens(car)
    antipode = {"x11": d, "x12": -b, "x21": -c, "x22": a}
    counit = {"x11": 1, "x12": 0, "x21": 0, "x22": 1}
    return HopfAlgebra("k[SL2]", "SL2", "G", car, _delta_matrix(car), antipode, counit)


# ---------------------------------------------------------------------------
# k[N] = R1 (+) R2
# ---------------------------------------------------------------------------


def normalizer_carrier(group: str, ring: CoeffRing) -> SplitCarrier:
    if group == "GL2":
        return SplitCarrier(ring, [("t1", "t2"), ("u1", "u2")], ("e1", "e2"), label="N(GL2)")
    if group == "SL2":
        return SplitCarrier(ring, [("t",), ("u",)], ("e1", "e2"), label="N(SL2)")
    raise UsageError(f"unknown group {group!r}")


def _split_gen_exps(car: SplitCarrier, g: str):
    """(component, exponent vector) of a variable-type generator."""
    inv = g.endswith("^-1")
    base = g[:-3] if inv else g
    for ci, names in enumerate(car.comps):
        if base in names:
            e = [0] * car.width
            e[names.index(base)] = -1 if inv else 1
            return ci, tuple(e)
    raise UsageError(g)


@lru_cache(maxsize=None)
def normalizer_hopf(group: str, ring: CoeffRing) -> HopfAlgebra:
    """k[N] with the structure induced from the group.

    GL2, with m = t1^k t2^l and its u-twin:
      (m, 0)         -> (m,0)(x)(m,0) + (0,u1^k u2^l)(x)(0,u1^l u2^k)
      (0, u1^k u2^l) -> (m,0)(x)(0,u1^k u2^l) + (0,u1^k u2^l)(x)(t1^l t2^k,0)
    SL2, with v = -1/u:
      (t^k, 0) -> (t^k,0)(x)(t^k,0) + (0,u^k)(x)(0,v^k)
      (0, u^k) -> (t^k,0)(x)(0,u^k) + (0,u^k)(x)(t^-k,0)
    """
    car = normalizer_carrier(group, ring)
    c2 = car.power(2)
    mono = car.mono
    e1, e2 = car.idempotent(0), car.idempotent(1)
    delta = {"e1": c2.tensor(e1, e1) + c2.tensor(e2, e2), "e2": c2.tensor(e1, e2) + c2.tensor(e2, e1)}
    antipode = {"e1": e1, "e2": e2}
    counit = {"e1": 1, "e2": 0}
    for g in car.leg_gens[2:]:
        comp, e = _split_gen_exps(car, g)
        if group == "GL2":
            k, l = e
            sw = (l, k)
            neg = (-k, -l)
            if comp == 0:
                delta[g] = c2.tensor(mono(0, e), mono(0, e)) + c2.tensor(mono(1, e), mono(1, sw))
                antipode[g] = mono(0, neg)
                counit[g] = 1
            else:
                delta[g] = c2.tensor(mono(0, e), mono(1, e)) + c2.tensor(mono(1, e), mono(0, sw))
                antipode[g] = mono(1, (-l, -k))
                counit[g] = 0
        else:
            (k,) = e
            if comp == 0:
                v_k = mono(1, (-k,), (-1) ** (k % 2))
                delta[g] = c2.tensor(mono(0, e), mono(0, e)) + c2.tensor(mono(1, e), v_k)
                antipode[g] = mono(0, (-k,))
                counit[g] = 1
            else:
                delta[g] = c2.tensor(mono(0, e), mono(1, e)) + c2.tensor(mono(1, e), mono(0, (-k,)))
                antipode[g] = mono(1, e, (-1) ** (k % 2))
                counit[g] = 0
    return HopfAlgebra(f"k[N] ({group})", group, "N", car, delta, antipode, counit)


# ---------------------------------------------------------------------------
# k[T] and k[N/T]
# ---------------------------------------------------------------------------


def torus_carrier(group: str, ring: CoeffRing) -> SplitCarrier:
    if group == "GL2":
        return SplitCarrier(ring, [("t1", "t2")], label="T(GL2)")
    if group == "SL2":
        return SplitCarrier(ring, [("t",)], label="T(SL2)")
    raise UsageError(f"unknown group {group!r}")


@lru_cache(maxsize=None)
def torus_hopf(group: str, ring: CoeffRing) -> HopfAlgebra:
    car = torus_carrier(group, ring)
    c2 = car.power(2)
    delta, antipode, counit = {}, {}, {}
    for g in car.leg_gens:
        x = car.gen(g)
        delta[g] = c2.tensor(x, x)
        antipode[g] = x.inverse()
        counit[g] = 1
    return HopfAlgebra(f"k[T] ({group})", group, "T", car, delta, antipode, counit)


def weyl_carrier(ring: CoeffRing) -> SplitCarrier:
    return SplitCarrier(ring, [(), ()], ("e1", "e2"), label="N/T")


@lru_cache(maxsize=None)
def weyl_hopf(ring: CoeffRing, group: str = "GL2") -> HopfAlgebra:
    """k[N/T] = A{e1, e2}: e1 group-like pieces, S = id, eps(e1) = 1."""
    car = weyl_carrier(ring)
    c2 = car.power(2)
    e1, e2 = car.idempotent(0), car.idempotent(1)
    delta = {"e1": c2.tensor(e1, e1) + c2.tensor(e2, e2), "e2": c2.tensor(e1, e2) + c2.tensor(e2, e1)}
    return HopfAlgebra(f"k[N/T] ({group})", group, "NmodT", car, delta, {"e1": e1, "e2": e2}, {"e1": 1, "e2": 0})


def constant_scheme_hopf(ring: CoeffRing, antipode: str = "z") -> HopfAlgebra:
    """A[z]/(z^2 - z) with Delta(z) = 1 + 2 z(x)z - 1(x)z - z(x)1.

    ``antipode`` selects S(z): ``"z"`` or ``"1"``; only the first satisfies
    the antipode axiom, which ``verify_hopf_axioms`` reports.
    """
    car = IdempotentCarrier(ring, 1)
    c2 = car.power(2)
    z = car.gen("z")
    one = car.one()
    delta = {"z": c2.one() + 2 * c2.tensor(z, z) - c2.tensor(one, z) - c2.tensor(z, one)}
    if antipode not in ("z", "1"):
        raise UsageError("antipode candidate must be 'z' or '1'")
    s = {"z": z if antipode == "z" else one}
    return HopfAlgebra(f"A[z]/(z^2-z), S(z)={antipode}", "GL2", "constant", car, delta, s, {"z": 1})


def build_hopf(group: str, kind: str, ring: CoeffRing) -> HopfAlgebra:
    if group not in GROUPS:
        raise UsageError(f"group must be one of {GROUPS}, got {group!r}")
    if kind == "G":
        return gl2_hopf(ring) if group == "GL2" else sl2_hopf(ring)
    if kind == "N":
        return normalizer_hopf(group, ring)
    if kind == "T":
        return torus_hopf(group, ring)
    if kind == "NmodT":
        return weyl_hopf(ring, group)
    raise UsageError(f"kind must be one of {KINDS}, got {kind!r}")


# ---------------------------------------------------------------------------
# maps between them
# ---------------------------------------------------------------------------


@dataclass(eq=False)
class HopfMap:
    """Algebra map between Hopf algebras given by generator images."""

    source: HopfAlgebra
    target: HopfAlgebra
    images: dict
    name: str = ""

    def __call__(self, e: CarrierElem) -> CarrierElem:
        return self.source.carrier.extend(e, [self.images], self.target.carrier.one())

    def on_legs(self, e: CarrierElem) -> CarrierElem:
        """Apply the map to every leg of a tensor element."""
        n = e.carrier.legs
        t = self.target.carrier.power(n)
        imgs = [{g: t.place(v, (j,)) for g, v in self.images.items()} for j in range(n)]
        return e.carrier.extend(e, imgs, t.one())

    def verify(self) -> Report:
        """Well defined, and compatible with Delta, S and eps on generators."""
        rep = Report(f"Hopf map {self.name or ''} {self.source.name} -> {self.target.name}".replace("  ", " "))
        src, tgt = self.source, self.target
        bad = [lbl for lbl, v in src.carrier.relation_values(self.images, tgt.carrier.one()) if v != 0]
        rep.add("well defined on relations", not bad, ", ".join(bad))
        fd, fs, fe = [], [], []
        for g in src.gens:
            img = self.images[g]
            if tgt.comultiply(img) != self.on_legs(src.delta[g]):
                fd.append(g)
            if tgt.apply_antipode(img) != self(src.antipode[g]):
                fs.append(g)
            if tgt.apply_counit(img) != src.ring.coerce(src.counit[g]):
                fe.append(g)
        rep.add("intertwines comultiplication", not fd, ", ".join(fd))
        rep.add("intertwines antipode", not fs, ", ".join(fs))
        rep.add("intertwines counit", not fe, ", ".join(fe))
        return rep


def _n_images(group: str, ring: CoeffRing) -> dict:
    """Generator images of k[G] -> k[N]."""
    N = normalizer_carrier(group, ring)
    if group == "GL2":
        t1, t2 = N.mono(0, (1, 0)), N.mono(0, (0, 1))
        u1, u2 = N.mono(1, (1, 0)), N.mono(1, (0, 1))
        return {"x11": t1, "x22": t2, "x12": u1, "x21": u2,
                "D^-1": N.mono(0, (-1, -1)) - N.mono(1, (-1, -1))}
    t, tinv = N.mono(0, (1,)), N.mono(0, (-1,))
    u, v = N.mono(1, (1,)), N.mono(1, (-1,), -1)
    return {"x11": t, "x22": tinv, "x12": u, "x21": v}


def _t_images(group: str, ring: CoeffRing) -> dict:
    T = torus_carrier(group, ring)
    if group == "GL2":
        return {"x11": T.gen("t1"), "x22": T.gen("t2"), "x12": T.zero(), "x21": T.zero(),
                "D^-1": T.mono(0, (-1, -1))}
    return {"x11": T.gen("t"), "x22": T.gen("t^-1"), "x12": T.zero(), "x21": T.zero()}


def quotient_map(group: str, source: str, target: str, ring: CoeffRing) -> HopfMap:
    """The quotient G -> N, N -> T or G -> T (``source``/``target`` are kinds)."""
    src, tgt = build_hopf(group, source, ring), build_hopf(group, target, ring)
    if (source, target) == ("G", "N"):
        images = _n_images(group, ring)
    elif (source, target) == ("G", "T"):
        images = _t_images(group, ring)
    elif (source, target) == ("N", "T"):
        T = tgt.carrier
        images = {"e1": T.one(), "e2": T.zero()}
        for g in src.gens[2:]:
            comp, e = _split_gen_exps(src.carrier, g)
            images[g] = T.mono(0, e) if comp == 0 else T.zero()
    else:
        raise UsageError(f"no quotient map {source} -> {target}")
    return HopfMap(src, tgt, images, f"{group} {source}->{target}")


def weyl_inclusion(group: str, ring: CoeffRing) -> HopfMap:
    """k[N/T] -> k[N], e1 -> (1, 0), e2 -> (0, 1)."""
    src, tgt = weyl_hopf(ring, group), normalizer_hopf(group, ring)
    N = tgt.carrier
    return HopfMap(src, tgt, {"e1": N.idempotent(0), "e2": N.idempotent(1)}, f"{group} N/T->N")


def sl2_quotient(ring: CoeffRing) -> HopfMap:
    """k[GL2] -> k[SL2], D -> 1."""
    src, tgt = gl2_hopf(ring), sl2_hopf(ring)
    S = tgt.carrier
    images = {g: S.gen(g) for g in ("x11", "x12", "x21", "x22")}
    images["D^-1"] = S.one()
    return HopfMap(src, tgt, images, "GL2->SL2")


def constant_scheme_to_weyl(ring: CoeffRing, antipode: str = "z") -> HopfMap:
    """z -> e1 from A[z]/(z^2 - z) to k[N/T]."""
    src = constant_scheme_hopf(ring, antipode)
    tgt = weyl_hopf(ring)
    return HopfMap(src, tgt, {"z": tgt.carrier.idempotent(0)}, "z->e1")


# preimages in k[G] of the generators of the quotients, used to evaluate
# points of N, T and N/T through a point of G
def lift_images(group: str, kind: str, ring: CoeffRing) -> dict:
    G = build_hopf(group, "G", ring).carrier
    x11, x12, x21, x22 = (G.gen(g) for g in ("x11", "x12", "x21", "x22"))
    if group == "GL2":
        dinv = G.gen("D^-1")
        e1, e2 = x11 * x22 * dinv, -x12 * x21 * dinv
        if kind == "N":
            return {"e1": e1, "e2": e2, "t1": x11, "t2": x22, "u1": x12, "u2": x21,
                    "t1^-1": x22 * dinv, "t2^-1": x11 * dinv, "u1^-1": -x21 * dinv, "u2^-1": -x12 * dinv}
        if kind == "T":
            return {"t1": x11, "t2": x22, "t1^-1": x22 * dinv, "t2^-1": x11 * dinv}
    else:
        e1, e2 = x11 * x22, -x12 * x21
        if kind == "N":
            return {"e1": e1, "e2": e2, "t": x11, "t^-1": x22, "u": x12, "u^-1": -x21}
        if kind == "T":
            return {"t": x11, "t^-1": x22}
    if kind == "NmodT":
        return {"e1": e1, "e2": e2}
    raise UsageError(f"no lift for {kind!r}")


def as_mapping(h: HopfAlgebra) -> Mapping:
    """Summary of the generator images as strings (for display and JSON)."""
    return {g: {"delta": str(h.delta[g]), "antipode": str(h.antipode[g]), "counit": h.ring.format(h.counit[g])}
            for g in h.gens}
