"""Sparse (Laurent) polynomials over a coefficient ring.

A polynomial is a dict from exponent tuples to nonzero coefficients. The raw
dict helpers at the top are shared with the carrier classes, which store
their data as plain term dicts to keep object churn low.
"""

from __future__ import annotations

from operator import add
from typing import Callable, Iterable, Mapping

from ..errors import UsageError
from .rings import CoeffRing

Terms = dict  # exponent tuple -> coefficient


def clean(terms: Mapping, mod: int | None) -> Terms:
    if mod is None:
        return {e: c for e, c in terms.items() if c != 0}
    out = {}
    for e, c in terms.items():
        c %= mod
        if c:
            out[e] = c
    return out


def add_into(acc: Terms, terms: Mapping, scale=1) -> None:
    """acc += scale * terms, without reduction (call ``clean`` afterwards)."""
    get = acc.get
    if scale == 1:
        for e, c in terms.items():
            acc[e] = get(e, 0) + c
    else:
        for e, c in terms.items():
            acc[e] = get(e, 0) + scale * c


def mul_terms(a: Mapping, b: Mapping, mod: int | None) -> Terms:
    if len(a) > len(b):
        a, b = b, a
    out: Terms = {}
    get = out.get
    bi = list(b.items())
    for ea, ca in a.items():
        for eb, cb in bi:
            e = tuple(map(add, ea, eb))
            out[e] = get(e, 0) + ca * cb
    return clean(out, mod)


def grevlex_key(e: tuple) -> tuple:
    """Sort key; larger key means larger monomial in graded reverse lex."""
    return (sum(e), tuple(-x for x in reversed(e)))


def format_terms(terms: Mapping, names: tuple, ring: CoeffRing) -> str:
    if not terms:
        return "0"
    parts = []
    for e in sorted(terms, key=grevlex_key, reverse=True):
        c = terms[e]
        mono = "*".join(f"{n}^{k}" for n, k in zip(names, e) if k != 0)
        cs = ring.format(c)
        if not mono:
            parts.append(cs)
        elif cs == "1":
            parts.append(mono)
        elif cs == "-1":
            parts.append("-" + mono)
        else:
            parts.append(f"{cs}*{mono}")
    return " + ".join(parts).replace("+ -", "- ")


class SparsePoly:
    """Polynomial (or Laurent polynomial) in named variables.

    Immutable; arithmetic returns new objects. Coefficients are reduced
    modulo the ring's modulus, so the term dict is canonical and ``==`` is
    structural.
    """

    __slots__ = ("names", "terms", "ring", "laurent")

    def __init__(self, names, terms: Mapping, ring: CoeffRing, laurent: bool = False, _clean: bool = False):
        self.names = tuple(names)
        self.ring = ring
        self.laurent = laurent
        self.terms = dict(terms) if _clean else clean(terms, ring.modulus)
        if not _clean:
            n = len(self.names)
            for e in self.terms:
                if len(e) != n:
                    raise UsageError(f"exponent {e} does not match {n} variables")
                if not laurent and min(e, default=0) < 0:
                    raise UsageError("negative exponent in a non-Laurent polynomial")

    # -- constructors -------------------------------------------------------
    @classmethod
    def const(cls, names, c, ring: CoeffRing, laurent: bool = False) -> "SparsePoly":
        names = tuple(names)
        return cls(names, {(0,) * len(names): ring.coerce(c)}, ring, laurent)

    @classmethod
    def var(cls, names, name: str, ring: CoeffRing, laurent: bool = False, power: int = 1) -> "SparsePoly":
        names = tuple(names)
        e = [0] * len(names)
        e[names.index(name)] = power
        return cls(names, {tuple(e): 1}, ring, laurent)

    def _new(self, terms, cleaned=True) -> "SparsePoly":
        return SparsePoly(self.names, terms, self.ring, self.laurent, _clean=cleaned)

    def zero(self) -> "SparsePoly":
        return self._new({})

    def one(self) -> "SparsePoly":
        return self._new({(0,) * len(self.names): 1})

    # -- arithmetic ---------------------------------------------------------
    def _check(self, other: "SparsePoly"):
        if other.names != self.names or other.ring != self.ring:
            raise UsageError("polynomials live in different rings")

    def _lift(self, other):
        if isinstance(other, SparsePoly):
            self._check(other)
            return other
        return SparsePoly.const(self.names, other, self.ring, self.laurent)

    def __add__(self, other):
        other = self._lift(other)
        acc = dict(self.terms)
        add_into(acc, other.terms)
        return self._new(clean(acc, self.ring.modulus))

    __radd__ = __add__

    def __neg__(self):
        return self._new(clean({e: -c for e, c in self.terms.items()}, self.ring.modulus))

    def __sub__(self, other):
        return self + (-self._lift(other))

    def __rsub__(self, other):
        return self._lift(other) - self

    def __mul__(self, other):
        if isinstance(other, SparsePoly):
            self._check(other)
            return self._new(mul_terms(self.terms, other.terms, self.ring.modulus))
        c = self.ring.coerce(other)
        return self._new(clean({e: c * v for e, v in self.terms.items()}, self.ring.modulus))

    __rmul__ = __mul__

    def __pow__(self, k: int):
        if k < 0:
            return self.inverse() ** (-k)
        result, base = self.one(), self
        while k:
            if k & 1:
                result = result * base
            base = base * base
            k >>= 1
        return result

    def inverse(self) -> "SparsePoly":
        """Inverse of a unit monomial (the only units in a Laurent ring over a domain)."""
        if len(self.terms) != 1:
            raise ZeroDivisionError(f"{self} is not a unit")
        (e, c), = self.terms.items()
        if any(e) and not self.laurent:
            raise ZeroDivisionError(f"{self} is not a unit")
        return self._new({tuple(-x for x in e): self.ring.inverse(c)})

    def __eq__(self, other):
        if isinstance(other, SparsePoly):
            return self.names == other.names and self.ring == other.ring and self.terms == other.terms
        if isinstance(other, (int,)):
            return self.terms == self._lift(other).terms
        return NotImplemented

    def __hash__(self):
        return hash((self.names, frozenset(self.terms.items())))

    # -- inspection ---------------------------------------------------------
    def is_zero(self) -> bool:
        return not self.terms

    def is_constant(self) -> bool:
        return all(not any(e) for e in self.terms)

    def constant_term(self):
        return self.terms.get((0,) * len(self.names), 0)

    def coefficient(self, exps) -> int:
        return self.terms.get(tuple(exps), 0)

    def total_degree(self) -> int:
        return max((sum(e) for e in self.terms), default=-1)

    def sorted_terms(self) -> list:
        """Terms in descending grevlex order."""
        return sorted(self.terms.items(), key=lambda t: grevlex_key(t[0]), reverse=True)

    def __str__(self):
        return format_terms(self.terms, self.names, self.ring)

    def __repr__(self):
        return f"SparsePoly({self})"

    def to_json(self) -> list:
        return [[self.ring.format(c), list(e)] for e, c in self.sorted_terms()]

    # -- homomorphisms ------------------------------------------------------
    def extend(self, images: Mapping, one=None):
        """Image under the ring map sending each variable to ``images[name]``.

        Negative exponents use ``images[name + '^-1']`` when present and
        otherwise invert the image.
        """
        atoms = []
        for e, c in self.terms.items():
            factors = []
            for name, k in zip(self.names, e):
                if k > 0:
                    factors.append((0, name, k))
                elif k < 0:
                    factors.append((0, name + "^-1", -k))
            atoms.append((c, factors))
        imgs = dict(images)
        for name in self.names:
            inv = name + "^-1"
            if inv not in imgs and name in imgs and self.laurent:
                try:
                    imgs[inv] = imgs[name].inverse()
                except AttributeError:
                    pass
        if one is None:
            one = _guess_one(imgs.values())
        return extend_atoms(atoms, [imgs], one)

    def rename(self, names) -> "SparsePoly":
        return SparsePoly(names, self.terms, self.ring, self.laurent, _clean=True)


def _guess_one(values: Iterable):
    for v in values:
        if hasattr(v, "one"):
            return v.one()
        return type(v)(1)
    raise UsageError("cannot infer the target ring of an empty map")


def extend_atoms(atoms, images_per_leg, one, scale: Callable | None = None):
    """Shared engine for algebra maps out of any carrier.

    ``atoms`` is a list of ``(coeff, [(leg, generator, power), ...])``; the
    image of each atom is ``coeff * prod(images[leg][generator] ** power)``.
    """
    cache: dict = {}
    parts = []
    for c, factors in atoms:
        acc = None
        for leg, name, k in factors:
            key = (leg, name, k)
            p = cache.get(key)
            if p is None:
                try:
                    img = images_per_leg[leg][name]
                except (KeyError, IndexError):
                    raise UsageError(f"no image given for generator {name!r} of leg {leg}") from None
                p = _power(img, k, one, cache, (leg, name))
            acc = p if acc is None else acc * p
        if acc is None:
            acc = one
        parts.append(acc if c == 1 else acc * c)
    return sum_elements(parts, one)


def _power(img, k, one, cache, key):
    if k == 1:
        cache[key + (1,)] = img
        return img
    half = cache.get(key + (k // 2,))
    if half is None:
        half = _power(img, k // 2, one, cache, key)
    p = half * half
    if k % 2:
        p = p * img
    cache[key + (k,)] = p
    return p


def sum_elements(parts: list, one):
    if not parts:
        return one * 0
    summer = getattr(type(parts[0]), "sum_many", None)
    if summer is not None:
        return summer(parts)
    total = parts[0]
    for p in parts[1:]:
        total = total + p
    return total
