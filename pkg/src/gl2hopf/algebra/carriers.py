"""Commutative rings that carry the Hopf algebras, plus their tensor powers.

Every carrier has a number of *legs*: a 1-leg carrier is the algebra H, an
n-leg carrier is H^{(x)n} realised by giving each leg its own copy of the
variables. Four families are implemented:

* ``LocalizedCarrier``: A[x11,x12,x21,x22][1/D], elements num / D^k with one
  denominator exponent per leg.
* ``SL2Carrier``: A[x11,x12,x21,x22]/(D - 1), normal form free of x11*x22.
* ``SplitCarrier``: a finite product of Laurent rings, e.g. k[N] = R1 (+) R2,
  k[T] (one factor) and k[N/T] = A{e1, e2} (two factors, no variables).
* ``IdempotentCarrier``: A[z]/(z^2 - z).

Algebra maps out of a carrier are given by generator images, one dict per
leg, and evaluated by ``Carrier.extend``.
"""

from __future__ import annotations

import heapq
import itertools
from math import comb
from typing import Mapping, Sequence

from ..errors import UnsupportedRingError, UsageError
from .poly import SparsePoly, add_into, clean, extend_atoms, format_terms, mul_terms
from .rings import CoeffRing

GL_VARS = ("x11", "x12", "x21", "x22")


class CarrierElem:
    """Operator plumbing shared by all carrier elements."""

    __slots__ = ("carrier",)

    def _lift(self, other):
        if isinstance(other, CarrierElem):
            if other.carrier != self.carrier:
                raise UsageError(f"cannot combine elements of {self.carrier} and {other.carrier}")
            return other
        return self.carrier.scalar(other)

    def __radd__(self, other):
        return self + other

    def __sub__(self, other):
        return self + (-self._lift(other))

    def __rsub__(self, other):
        return self._lift(other) - self

    def __rmul__(self, other):
        return self * other

    def __pow__(self, k: int):
        if k < 0:
            return self.inverse() ** (-k)
        result, base = self.carrier.one(), self
        while k:
            if k & 1:
                result = result * base
            base = base * base
            k >>= 1
        return result

    def one(self):
        return self.carrier.one()

    def __eq__(self, other):
        if isinstance(other, CarrierElem):
            return self.carrier == other.carrier and self._key() == other._key()
        if isinstance(other, int):
            return self._key() == self.carrier.scalar(other)._key()
        return NotImplemented

    def __hash__(self):
        return hash(str(self))

    def __repr__(self):
        return f"<{type(self).__name__} {self}>"


class Carrier:
    """Base class; subclasses set ``leg_gens`` and implement the hooks."""

    leg_gens: tuple = ()

    def __init__(self, ring: CoeffRing, legs: int):
        if legs < 1:
            raise UsageError("a carrier needs at least one leg")
        self.ring = ring
        self.legs = legs
        self._powers: dict[int, Carrier] = {legs: self}

    def _params(self) -> tuple:
        return ()

    def key(self) -> tuple:
        return (type(self).__name__, self.ring, self.legs) + self._params()

    def __eq__(self, other):
        return isinstance(other, Carrier) and self.key() == other.key()

    def __hash__(self):
        return hash(self.key())

    def __repr__(self):
        return f"{type(self).__name__}({self.ring}, legs={self.legs})"

    def power(self, n: int) -> "Carrier":
        """The n-leg carrier of the same family; cached so objects are shared."""
        c = self._powers.get(n)
        if c is None:
            c = self._make(n)
            c._powers = self._powers
            self._powers[n] = c
        return c

    def _make(self, legs: int) -> "Carrier":
        raise NotImplementedError

    def scalar(self, c) -> CarrierElem:
        return self.one() * c

    def zero(self) -> CarrierElem:
        return self.one() * 0

    def one(self) -> CarrierElem:
        raise NotImplementedError

    def gen(self, name: str, leg: int = 0) -> CarrierElem:
        base = self.power(1)._gen1(name)
        return base if self.legs == 1 else self.place(base, (leg,))

    def _gen1(self, name: str) -> CarrierElem:
        raise NotImplementedError

    def identity_images(self, leg: int = 0) -> dict:
        """Generator images of the inclusion of H as leg ``leg`` of self."""
        return {g: self.gen(g, leg) for g in self.leg_gens}

    def place(self, e: CarrierElem, positions: Sequence[int]) -> CarrierElem:
        """Put the legs of ``e`` at ``positions`` of self; other legs get 1."""
        raise NotImplementedError

    def tensor(self, *elems: CarrierElem) -> CarrierElem:
        if len(elems) != self.legs:
            raise UsageError(f"need {self.legs} factors, got {len(elems)}")
        out = None
        for i, e in enumerate(elems):
            p = self.place(e, (i,))
            out = p if out is None else out * p
        return out

    def extend(self, e: CarrierElem, images_per_leg: Sequence[Mapping], one):
        """Image of ``e`` under the algebra map with the given generator images."""
        if e.carrier != self:
            raise UsageError("element does not belong to this carrier")
        if len(images_per_leg) != self.legs:
            raise UsageError(f"need images for {self.legs} legs")
        return extend_atoms(self._atoms(e), images_per_leg, one)

    def _atoms(self, e):
        raise NotImplementedError

    def linear_coords(self, elems: Sequence[CarrierElem]) -> list[dict]:
        """Coordinate dicts on a common basis: a combination of ``elems`` with
        scalar coefficients vanishes iff the same combination of the dicts does."""
        raise NotImplementedError

    def var_names(self) -> tuple:
        return ()

    def relation_values(self, images: Mapping, one) -> list:
        """``(label, value)`` pairs; a map out of the 1-leg carrier given by
        ``images`` is well defined iff every value is zero."""
        return []


def _det_of(images):
    return images["x11"] * images["x22"] - images["x12"] * images["x21"]


def _leg_names(base: Sequence[str], legs: int) -> tuple:
    if legs == 1:
        return tuple(base)
    return tuple(f"{v}@{j}" for j in range(legs) for v in base)


def _place_exps(e: tuple, width: int, positions: Sequence[int], total_legs: int) -> tuple:
    out = [0] * (width * total_legs)
    for i, p in enumerate(positions):
        out[p * width:(p + 1) * width] = e[i * width:(i + 1) * width]
    return tuple(out)


# ---------------------------------------------------------------------------
# k[GL2] = A[x][1/D]
# ---------------------------------------------------------------------------


def _divide_by_det(terms: Mapping, leg: int, mod: int | None):
    """Exact quotient of ``terms`` by D on ``leg``, or None if D does not divide.

    Division by the single polynomial D, whose lex leading term x11*x22 has
    coefficient 1; the remainder vanishes exactly when D divides.
    """
    i11, i12, i21, i22 = 4 * leg, 4 * leg + 1, 4 * leg + 2, 4 * leg + 3

    def key(e):
        return tuple(-x for x in (e[i11], e[i12], e[i21], e[i22]) + e)

    p = dict(terms)
    heap = [(key(e), e) for e in p]
    heapq.heapify(heap)
    q: dict = {}
    while heap:
        _, m = heapq.heappop(heap)
        c = p.pop(m, 0)
        if mod is not None:
            c %= mod
        if c == 0:
            continue
        if m[i11] == 0 or m[i22] == 0:
            return None
        mq = list(m)
        mq[i11] -= 1
        mq[i22] -= 1
        mq = tuple(mq)
        q[mq] = q.get(mq, 0) + c
        mn = list(mq)
        mn[i12] += 1
        mn[i21] += 1
        mn = tuple(mn)
        if mn in p:
            p[mn] += c
        else:
            p[mn] = c
            heapq.heappush(heap, (key(mn), mn))
    return clean(q, mod)


def exact_divide_by_D(f: SparsePoly):
    """Quotient of a polynomial in x11, x12, x21, x22 by D, or None."""
    if f.names != GL_VARS:
        raise UsageError("expected a polynomial in x11, x12, x21, x22")
    if not f.ring.is_ufd:
        raise UnsupportedRingError(f"division by D is not canonical over {f.ring}")
    q = _divide_by_det(f.terms, 0, f.ring.modulus)
    return None if q is None else SparsePoly(GL_VARS, q, f.ring, _clean=True)


class LocalizedPoly(CarrierElem):
    """num / (D_0^k_0 ... D_{n-1}^k_{n-1}) in canonical form.

    Canonical means: for each leg j with k_j > 0, D_j does not divide num.
    Zero has all exponents 0. Two canonical forms are equal iff their data
    agree, which is the same as equality after cross-multiplication.
    """

    __slots__ = ("num", "dexp")

    def __init__(self, carrier: "LocalizedCarrier", num: dict, dexp: tuple, canonical: bool = False):
        self.carrier = carrier
        if not num:
            dexp = (0,) * carrier.legs
        elif not canonical:
            num, dexp = carrier._canon(num, dexp)
        self.num = num
        self.dexp = dexp

    def _key(self):
        return (self.num, self.dexp)

    def __add__(self, other):
        other = self._lift(other)
        return LocalizedPoly.sum_many([self, other])

    @staticmethod
    def sum_many(parts):
        car = parts[0].carrier
        if len(parts) == 1:
            return parts[0]
        top = tuple(max(p.dexp[j] for p in parts) for j in range(car.legs))
        acc: dict = {}
        for p in parts:
            if p.carrier != car:
                raise UsageError("cannot add elements of different carriers")
            if p.dexp == top:
                add_into(acc, p.num)
            else:
                add_into(acc, car._scale_up(p.num, tuple(t - k for t, k in zip(top, p.dexp))))
        acc = clean(acc, car.ring.modulus)
        return LocalizedPoly(car, acc, top)

    def __neg__(self):
        return LocalizedPoly(self.carrier, {e: -c for e, c in self.num.items()} if self.carrier.ring.modulus is None
                             else clean({e: -c for e, c in self.num.items()}, self.carrier.ring.modulus),
                             self.dexp, canonical=True)

    def __mul__(self, other):
        car = self.carrier
        if isinstance(other, LocalizedPoly):
            if other.carrier != car:
                raise UsageError("cannot multiply elements of different carriers")
            num = mul_terms(self.num, other.num, car.ring.modulus)
            dexp = tuple(a + b for a, b in zip(self.dexp, other.dexp))
            # D_j is prime, so only a leg with one zero exponent can cancel
            recheck = any((a == 0) != (b == 0) for a, b in zip(self.dexp, other.dexp))
            return LocalizedPoly(car, num, dexp, canonical=not recheck)
        c = car.ring.coerce(other)
        num = clean({e: c * v for e, v in self.num.items()}, car.ring.modulus)
        # D is primitive, so a nonzero scalar multiple keeps the form canonical
        return LocalizedPoly(car, num, self.dexp, canonical=True)

    def inverse(self) -> "LocalizedPoly":
        car = self.carrier
        num, extra = dict(self.num), [0] * car.legs
        for j in range(car.legs):
            while True:
                q = _divide_by_det(num, j, car.ring.modulus)
                if q is None:
                    break
                num, extra[j] = q, extra[j] + 1
        zero = (0,) * (4 * car.legs)
        if len(num) != 1 or zero not in num or not car.ring.is_unit(num[zero]):
            raise ZeroDivisionError(f"{self} is not a unit")
        inv = car.ring.inverse(num[zero])
        return LocalizedPoly(car, car._scale_up({zero: inv}, self.dexp), tuple(extra))

    def numerator(self) -> SparsePoly:
        return SparsePoly(self.carrier.names, self.num, self.carrier.ring, _clean=True)

    def is_zero(self) -> bool:
        return not self.num

    def __str__(self):
        car = self.carrier
        s = format_terms(self.num, car.names, car.ring)
        if not any(self.dexp):
            return s
        if car.legs == 1:
            den = "D" if self.dexp[0] == 1 else f"D^{self.dexp[0]}"
        else:
            den = "*".join(f"D@{j}^{k}" for j, k in enumerate(self.dexp) if k)
        return f"({s})/{den}" if len(self.num) > 1 else f"{s}/{den}"


class LocalizedCarrier(Carrier):
    """The coordinate ring of GL2 and its tensor powers."""

    leg_gens = GL_VARS + ("D^-1",)

    def __init__(self, ring: CoeffRing, legs: int = 1):
        if not ring.is_ufd:
            raise UnsupportedRingError(f"k[GL2] over {ring}: canonical forms need Z, Q or F_p")
        super().__init__(ring, legs)
        self.names = _leg_names(GL_VARS, legs)
        self._dpow: dict = {}

    def _make(self, legs):
        return LocalizedCarrier(self.ring, legs)

    def var_names(self):
        return self.names

    def _det_power(self, leg: int, k: int) -> dict:
        key = (leg, k)
        t = self._dpow.get(key)
        if t is None:
            if k == 0:
                t = {(0,) * (4 * self.legs): 1}
            else:
                z = [0] * (4 * self.legs)
                a, b = list(z), list(z)
                a[4 * leg], a[4 * leg + 3] = 1, 1
                b[4 * leg + 1], b[4 * leg + 2] = 1, 1
                d = clean({tuple(a): 1, tuple(b): -1}, self.ring.modulus)
                t = mul_terms(self._det_power(leg, k - 1), d, self.ring.modulus)
            self._dpow[key] = t
        return t

    def _scale_up(self, num: dict, extra: tuple) -> dict:
        for j, k in enumerate(extra):
            if k:
                num = mul_terms(num, self._det_power(j, k), self.ring.modulus)
        return num

    def _canon(self, num, dexp):
        dexp = list(dexp)
        for j in range(self.legs):
            while dexp[j] > 0:
                q = _divide_by_det(num, j, self.ring.modulus)
                if q is None:
                    break
                num = q
                dexp[j] -= 1
        return num, tuple(dexp)

    def make(self, num: Mapping, dexp=None) -> LocalizedPoly:
        dexp = tuple(dexp) if dexp is not None else (0,) * self.legs
        return LocalizedPoly(self, clean(dict(num), self.ring.modulus), dexp)

    def from_poly(self, f: SparsePoly, dexp=None) -> LocalizedPoly:
        if len(f.names) != len(self.names) or f.ring != self.ring:
            raise UsageError("polynomial does not match this carrier")
        return self.make(f.terms, dexp)

    def one(self):
        return LocalizedPoly(self, {(0,) * (4 * self.legs): 1}, (0,) * self.legs, True)

    def scalar(self, c):
        c = self.ring.coerce(c)
        num = clean({(0,) * (4 * self.legs): c}, self.ring.modulus)
        return LocalizedPoly(self, num, (0,) * self.legs, True)

    def _gen1(self, name):
        if name == "D^-1":
            return LocalizedPoly(self, {(0, 0, 0, 0): 1}, (1,), True)
        if name == "D":
            return self.det()
        if name not in GL_VARS:
            raise UsageError(f"unknown generator {name!r}")
        e = [0, 0, 0, 0]
        e[GL_VARS.index(name)] = 1
        return LocalizedPoly(self, {tuple(e): 1}, (0,), True)

    def det(self, leg: int = 0) -> LocalizedPoly:
        return LocalizedPoly(self, dict(self._det_power(leg, 1)), (0,) * self.legs, True)

    def place(self, e, positions):
        src = e.carrier
        if not isinstance(src, LocalizedCarrier) or src.ring != self.ring or src.legs != len(positions):
            raise UsageError("cannot place this element here")
        num = {_place_exps(x, 4, positions, self.legs): c for x, c in e.num.items()}
        dexp = [0] * self.legs
        for i, p in enumerate(positions):
            dexp[p] = e.dexp[i]
        return LocalizedPoly(self, num, tuple(dexp), canonical=True)

    def _atoms(self, e):
        names = GL_VARS
        atoms = []
        dfac = [(j, "D^-1", k) for j, k in enumerate(e.dexp) if k]
        for x, c in e.num.items():
            f = [(i // 4, names[i % 4], k) for i, k in enumerate(x) if k]
            atoms.append((c, f + dfac))
        return atoms

    def relation_values(self, images, one):
        return [("D * D^-1 = 1", _det_of(images) * images["D^-1"] - one)]

    def linear_coords(self, elems):
        top = tuple(max((p.dexp[j] for p in elems), default=0) for j in range(self.legs))
        return [self._scale_up(p.num, tuple(t - k for t, k in zip(top, p.dexp))) for p in elems]


# ---------------------------------------------------------------------------
# k[SL2] = A[x]/(D - 1)
# ---------------------------------------------------------------------------


def _reduce_sl2(terms: Mapping, legs: int, mod: int | None) -> dict:
    out: dict = {}
    for e, c in terms.items():
        cur = [(list(e), c)]
        for j in range(legs):
            i11, i12, i21, i22 = 4 * j, 4 * j + 1, 4 * j + 2, 4 * j + 3
            m = min(e[i11], e[i22])
            if m == 0:
                continue
            nxt = []
            for x, cc in cur:
                for r in range(m + 1):
                    y = list(x)
                    y[i11] -= m
                    y[i22] -= m
                    y[i12] += r
                    y[i21] += r
                    nxt.append((y, cc * comb(m, r)))
            cur = nxt
        for x, cc in cur:
            x = tuple(x)
            out[x] = out.get(x, 0) + cc
    return clean(out, mod)


class SL2Poly(CarrierElem):
    """Element of A[x]/(D - 1) stored in the normal form without x11*x22."""

    __slots__ = ("terms",)

    def __init__(self, carrier: "SL2Carrier", terms: dict, reduced: bool = False):
        self.carrier = carrier
        self.terms = terms if reduced else _reduce_sl2(terms, carrier.legs, carrier.ring.modulus)

    def _key(self):
        return self.terms

    def __add__(self, other):
        other = self._lift(other)
        acc = dict(self.terms)
        add_into(acc, other.terms)
        return SL2Poly(self.carrier, clean(acc, self.carrier.ring.modulus), True)

    @staticmethod
    def sum_many(parts):
        acc: dict = {}
        for p in parts:
            add_into(acc, p.terms)
        car = parts[0].carrier
        return SL2Poly(car, clean(acc, car.ring.modulus), True)

    def __neg__(self):
        return SL2Poly(self.carrier, clean({e: -c for e, c in self.terms.items()}, self.carrier.ring.modulus), True)

    def __mul__(self, other):
        car = self.carrier
        if isinstance(other, SL2Poly):
            if other.carrier != car:
                raise UsageError("cannot multiply elements of different carriers")
            return SL2Poly(car, mul_terms(self.terms, other.terms, car.ring.modulus))
        c = car.ring.coerce(other)
        return SL2Poly(car, clean({e: c * v for e, v in self.terms.items()}, car.ring.modulus), True)

    def inverse(self):
        z = (0,) * (4 * self.carrier.legs)
        if len(self.terms) == 1 and z in self.terms and self.carrier.ring.is_unit(self.terms[z]):
            return self.carrier.scalar(self.carrier.ring.inverse(self.terms[z]))
        raise ZeroDivisionError(f"{self} is not known to be a unit")

    def is_zero(self):
        return not self.terms

    def __str__(self):
        return format_terms(self.terms, self.carrier.names, self.carrier.ring)


class SL2Carrier(Carrier):
    """The coordinate ring of SL2 and its tensor powers."""

    leg_gens = GL_VARS

    def __init__(self, ring: CoeffRing, legs: int = 1):
        super().__init__(ring, legs)
        self.names = _leg_names(GL_VARS, legs)

    def _make(self, legs):
        return SL2Carrier(self.ring, legs)

    def var_names(self):
        return self.names

    def make(self, terms: Mapping) -> SL2Poly:
        return SL2Poly(self, dict(terms))

    def one(self):
        return SL2Poly(self, clean({(0,) * (4 * self.legs): 1}, self.ring.modulus), True)

    def scalar(self, c):
        return SL2Poly(self, clean({(0,) * (4 * self.legs): self.ring.coerce(c)}, self.ring.modulus), True)

    def _gen1(self, name):
        if name not in GL_VARS:
            raise UsageError(f"unknown generator {name!r}")
        e = [0, 0, 0, 0]
        e[GL_VARS.index(name)] = 1
        return SL2Poly(self, {tuple(e): 1}, True)

    def place(self, e, positions):
        src = e.carrier
        if not isinstance(src, SL2Carrier) or src.ring != self.ring or src.legs != len(positions):
            raise UsageError("cannot place this element here")
        return SL2Poly(self, {_place_exps(x, 4, positions, self.legs): c for x, c in e.terms.items()}, True)

    def _atoms(self, e):
        return [(c, [(i // 4, GL_VARS[i % 4], k) for i, k in enumerate(x) if k]) for x, c in e.terms.items()]

    def relation_values(self, images, one):
        return [("D = 1", _det_of(images) - one)]

    def linear_coords(self, elems):
        return [p.terms for p in elems]


# ---------------------------------------------------------------------------
# finite products of Laurent rings: k[N], k[T], k[N/T]
# ---------------------------------------------------------------------------


class SplitElem(CarrierElem):
    """Element of a product of Laurent rings, stored per component.

    ``data`` maps a component tuple (one index per leg) to a Laurent term
    dict; k[N] = R1 (+) R2 has components 0 and 1 per leg, so a 1-leg
    element is the pair (data[(0,)], data[(1,)]).
    """

    __slots__ = ("data",)

    def __init__(self, carrier: "SplitCarrier", data: dict):
        self.carrier = carrier
        self.data = {k: v for k, v in data.items() if v}

    def _key(self):
        return self.data

    def __add__(self, other):
        other = self._lift(other)
        return SplitElem.sum_many([self, other])

    @staticmethod
    def sum_many(parts):
        car = parts[0].carrier
        mod = car.ring.modulus
        acc: dict = {}
        for p in parts:
            if p.carrier != car:
                raise UsageError("cannot add elements of different carriers")
            for comp, terms in p.data.items():
                d = acc.get(comp)
                if d is None:
                    acc[comp] = dict(terms)
                else:
                    add_into(d, terms)
        return SplitElem(car, {k: clean(v, mod) for k, v in acc.items()})

    def __neg__(self):
        mod = self.carrier.ring.modulus
        return SplitElem(self.carrier, {k: clean({e: -c for e, c in v.items()}, mod) for k, v in self.data.items()})

    def __mul__(self, other):
        car = self.carrier
        mod = car.ring.modulus
        if isinstance(other, SplitElem):
            if other.carrier != car:
                raise UsageError("cannot multiply elements of different carriers")
            out = {}
            for comp, a in self.data.items():
                b = other.data.get(comp)
                if b:
                    out[comp] = mul_terms(a, b, mod)
            return SplitElem(car, out)
        c = car.ring.coerce(other)
        return SplitElem(car, {k: clean({e: c * v for e, v in t.items()}, mod) for k, t in self.data.items()})

    def inverse(self):
        car = self.carrier
        ring = car.ring
        out = {}
        for comp in car.components():
            t = self.data.get(comp)
            if not t or len(t) != 1:
                raise ZeroDivisionError(f"{self} is not a unit")
            (e, c), = t.items()
            if not ring.is_unit(c):
                raise ZeroDivisionError(f"{self} is not a unit")
            out[comp] = {tuple(-x for x in e): ring.inverse(c)}
        return SplitElem(car, out)

    def component(self, *comp) -> SparsePoly:
        """The Laurent polynomial in component ``comp`` (one index per leg)."""
        car = self.carrier
        return SparsePoly(car.comp_names(comp), self.data.get(tuple(comp), {}), car.ring, laurent=True, _clean=True)

    def is_zero(self):
        return not self.data

    def __str__(self):
        car = self.carrier
        if car.legs == 1 and car.ncomp == 2:
            return f"({self.component(0)}, {self.component(1)})"
        if car.legs == 1 and car.ncomp == 1:
            return str(self.component(0))
        if not self.data:
            return "0"
        return " + ".join(f"[{','.join(map(str, k))}]({format_terms(v, car.comp_names(k), car.ring)})"
                          for k, v in sorted(self.data.items()))


class SplitCarrier(Carrier):
    """Product of ``len(comps)`` Laurent rings, each in the same number of variables.

    ``comps`` lists the variable names of each factor, ``idems`` the names of
    the factor idempotents (only used when there are several factors).
    """

    def __init__(self, ring: CoeffRing, comps: Sequence[Sequence[str]], idems: Sequence[str] = (), legs: int = 1, label: str = ""):
        super().__init__(ring, legs)
        self.comps = tuple(tuple(c) for c in comps)
        self.ncomp = len(self.comps)
        self.width = len(self.comps[0])
        if any(len(c) != self.width for c in self.comps):
            raise UsageError("all factors need the same number of variables")
        self.idems = tuple(idems) if self.ncomp > 1 else ()
        if self.ncomp > 1 and len(self.idems) != self.ncomp:
            raise UsageError("one idempotent name per factor is required")
        self.label = label
        gens = list(self.idems)
        for c in self.comps:
            for v in c:
                gens += [v, v + "^-1"]
        self.leg_gens = tuple(gens)

    def _params(self):
        return (self.comps, self.idems, self.label)

    def __repr__(self):
        return f"SplitCarrier({self.label or self.comps}, {self.ring}, legs={self.legs})"

    def _make(self, legs):
        return SplitCarrier(self.ring, self.comps, self.idems, legs, self.label)

    def components(self):
        return list(itertools.product(range(self.ncomp), repeat=self.legs))

    def comp_names(self, comp) -> tuple:
        if self.legs == 1:
            return self.comps[comp[0]]
        return tuple(f"{v}@{j}" for j, c in enumerate(comp) for v in self.comps[c])

    def one(self):
        z = (0,) * (self.width * self.legs)
        return SplitElem(self, {k: {z: 1} for k in self.components()})

    def scalar(self, c):
        c = self.ring.coerce(c)
        z = (0,) * (self.width * self.legs)
        return SplitElem(self, {k: clean({z: c}, self.ring.modulus) for k in self.components()})

    def make(self, data: Mapping) -> SplitElem:
        """Build from ``{component: terms or SparsePoly}``; 1-leg keys may be ints."""
        out = {}
        for k, v in data.items():
            k = (k,) if isinstance(k, int) else tuple(k)
            terms = v.terms if isinstance(v, SparsePoly) else v
            for e in terms:
                if len(e) != self.width * self.legs:
                    raise UsageError("exponent length mismatch")
            out[k] = clean(dict(terms), self.ring.modulus)
        return SplitElem(self, out)

    def mono(self, comp: int, exps: Sequence[int], coeff=1) -> SplitElem:
        """Monomial living in factor ``comp`` of a 1-leg carrier."""
        if self.legs != 1:
            raise UsageError("mono() builds 1-leg elements")
        return self.make({comp: {tuple(exps): self.ring.coerce(coeff)}})

    def idempotent(self, comp: int) -> SplitElem:
        return self.mono(comp, (0,) * self.width) if self.legs == 1 else self.gen(self.idems[comp])

    def _gen1(self, name):
        if name in self.idems:
            return self.mono(self.idems.index(name), (0,) * self.width)
        inv = name.endswith("^-1")
        base = name[:-3] if inv else name
        for ci, c in enumerate(self.comps):
            if base in c:
                e = [0] * self.width
                e[c.index(base)] = -1 if inv else 1
                return self.mono(ci, e)
        raise UsageError(f"unknown generator {name!r}")

    def place(self, e, positions):
        src = e.carrier
        if not isinstance(src, SplitCarrier) or src.comps != self.comps or src.ring != self.ring \
                or src.legs != len(positions):
            raise UsageError("cannot place this element here")
        free = [j for j in range(self.legs) if j not in positions]
        out = {}
        for comp, terms in e.data.items():
            placed = {_place_exps(x, self.width, positions, self.legs): c for x, c in terms.items()}
            for fill in itertools.product(range(self.ncomp), repeat=len(free)):
                k = [0] * self.legs
                for i, p in enumerate(positions):
                    k[p] = comp[i]
                for j, c in zip(free, fill):
                    k[j] = c
                out[tuple(k)] = placed
        return SplitElem(self, out)

    def _atoms(self, e):
        atoms = []
        w = self.width
        for comp, terms in e.data.items():
            idf = [(j, self.idems[c], 1) for j, c in enumerate(comp)] if self.ncomp > 1 else []
            for x, coeff in terms.items():
                f = list(idf)
                for i, k in enumerate(x):
                    if k:
                        v = self.comps[comp[i // w]][i % w]
                        f.append((i // w, v, k) if k > 0 else (i // w, v + "^-1", -k))
                atoms.append((coeff, f))
        return atoms

    def relation_values(self, images, one):
        out = []
        if self.ncomp > 1:
            es = [images[i] for i in self.idems]
            for a, ea in enumerate(es):
                for b, eb in enumerate(es):
                    want = ea if a == b else one * 0
                    out.append((f"{self.idems[a]}*{self.idems[b]}", ea * eb - want))
            total = es[0]
            for e in es[1:]:
                total = total + e
            out.append(("sum of idempotents = 1", total - one))
        for ci, c in enumerate(self.comps):
            unit = images[self.idems[ci]] if self.ncomp > 1 else one
            for v in c:
                out.append((f"{v} * {v}^-1", images[v] * images[v + "^-1"] - unit))
                if self.ncomp > 1:
                    out.append((f"{v} in its factor", images[v] * unit - images[v]))
        return out

    def linear_coords(self, elems):
        return [{(comp, x): c for comp, t in p.data.items() for x, c in t.items()} for p in elems]


# ---------------------------------------------------------------------------
# A[z]/(z^2 - z)
# ---------------------------------------------------------------------------


class ZElem(CarrierElem):
    """Element of (A[z]/(z^2 - z))^{(x)n}: bit tuple -> coefficient of the
    corresponding product of z's."""

    __slots__ = ("terms",)

    def __init__(self, carrier, terms):
        self.carrier = carrier
        self.terms = clean(terms, carrier.ring.modulus)

    def _key(self):
        return self.terms

    def __add__(self, other):
        other = self._lift(other)
        acc = dict(self.terms)
        add_into(acc, other.terms)
        return ZElem(self.carrier, acc)

    def __neg__(self):
        return ZElem(self.carrier, {k: -c for k, c in self.terms.items()})

    def __mul__(self, other):
        if isinstance(other, ZElem):
            out: dict = {}
            for a, ca in self.terms.items():
                for b, cb in other.terms.items():
                    k = tuple(x | y for x, y in zip(a, b))
                    out[k] = out.get(k, 0) + ca * cb
            return ZElem(self.carrier, out)
        c = self.carrier.ring.coerce(other)
        return ZElem(self.carrier, {k: c * v for k, v in self.terms.items()})

    def inverse(self):
        if self == self.carrier.one():
            return self
        raise ZeroDivisionError("only 1 is treated as invertible here")

    def __str__(self):
        if not self.terms:
            return "0"
        names = _leg_names(("z",), self.carrier.legs)
        parts = []
        for k, c in sorted(self.terms.items()):
            mono = "*".join(n for n, b in zip(names, k) if b) or "1"
            parts.append(f"{self.carrier.ring.format(c)}*{mono}")
        return " + ".join(parts)


class IdempotentCarrier(Carrier):
    """A[z]/(z^2 - z) and its tensor powers."""

    leg_gens = ("z",)

    def _make(self, legs):
        return IdempotentCarrier(self.ring, legs)

    def one(self):
        return ZElem(self, {(0,) * self.legs: 1})

    def _gen1(self, name):
        if name != "z":
            raise UsageError(f"unknown generator {name!r}")
        return ZElem(self, {(1,): 1})

    def place(self, e, positions):
        out = {}
        for k, c in e.terms.items():
            b = [0] * self.legs
            for i, p in enumerate(positions):
                b[p] = k[i]
            out[tuple(b)] = c
        return ZElem(self, out)

    def _atoms(self, e):
        return [(c, [(j, "z", 1) for j, b in enumerate(k) if b]) for k, c in e.terms.items()]

    def relation_values(self, images, one):
        z = images["z"]
        return [("z^2 = z", z * z - z)]

    def linear_coords(self, elems):
        return [p.terms for p in elems]


def algebra_map_extend(images, e, one=None):
    """Image of ``e`` under the algebra map determined by generator images.

    ``images`` is a dict for a 1-leg source or a list of dicts, one per leg.
    ``one`` is the unit of the target; it is inferred from the images when
    omitted. A missing image raises ``UsageError``.
    """
    if isinstance(e, SparsePoly):
        return e.extend(images, one)
    per_leg = [images] if isinstance(images, Mapping) else list(images)
    if one is None:
        for d in per_leg:
            for v in d.values():
                one = v.one() if hasattr(v, "one") else type(v)(1)
                break
            if one is not None:
                break
    return e.carrier.extend(e, per_leg, one)
