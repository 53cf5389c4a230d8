"""Coefficient rings and exact linear algebra over them.

Coefficients are plain Python numbers: ``int`` for Z and the residue rings
(kept reduced into ``range(modulus)``), ``int`` or ``Fraction`` for Q.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import gcd
from typing import Iterable, Sequence

from ..errors import UsageError


def is_prime(n: int) -> bool:
    if n < 2:
        return False
    i = 2
    while i * i <= n:
        if n % i == 0:
            return False
        i += 1
    return True


@dataclass(frozen=True)
class CoeffRing:
    """One of Z, Q, F_p or Z/n.

    ``kind`` is ``"Z"``, ``"Q"``, ``"F"`` or ``"Zmod"``; ``modulus`` is set
    for the last two.
    """

    kind: str
    modulus: int | None = None

    def __post_init__(self):
        if self.kind in ("Z", "Q"):
            if self.modulus is not None:
                raise UsageError(f"{self.kind} takes no modulus")
        elif self.kind == "F":
            if self.modulus is None or not is_prime(self.modulus):
                raise UsageError(f"F{self.modulus}: modulus must be prime")
        elif self.kind == "Zmod":
            if self.modulus is None or self.modulus < 2:
                raise UsageError("Zmod needs a modulus >= 2")
        else:
            raise UsageError(f"unknown coefficient ring kind {self.kind!r}")

    @classmethod
    def integers(cls) -> "CoeffRing":
        return cls("Z")

    @classmethod
    def rationals(cls) -> "CoeffRing":
        return cls("Q")

    @classmethod
    def prime_field(cls, p: int) -> "CoeffRing":
        return cls("F", p)

    @classmethod
    def residues(cls, n: int) -> "CoeffRing":
        """Z/n; a prime n gives the same ring as ``prime_field``."""
        if is_prime(n):
            return cls("F", n)
        return cls("Zmod", n)

    @classmethod
    def parse(cls, text: str) -> "CoeffRing":
        """Parse ``Z``, ``Q``, ``F<p>`` or ``Zmod<n>``."""
        t = text.strip()
        if t in ("Z", "ZZ"):
            return cls.integers()
        if t in ("Q", "QQ"):
            return cls.rationals()
        for prefix, build in (("Zmod", cls.residues), ("F", cls.prime_field)):
            if t.startswith(prefix) and t[len(prefix):].isdigit():
                return build(int(t[len(prefix):]))
        raise UsageError(f"cannot parse coefficient ring {text!r}")

    def __str__(self) -> str:
        if self.modulus is None:
            return self.kind
        return f"{self.kind}{self.modulus}"

    @property
    def is_field(self) -> bool:
        return self.kind in ("Q", "F")

    @property
    def is_ufd(self) -> bool:
        """Polynomials over this ring factor uniquely (Z, Q, F_p)."""
        return self.kind != "Zmod"

    @property
    def characteristic(self) -> int:
        return self.modulus or 0

    def coerce(self, c) -> int | Fraction:
        if isinstance(c, bool):
            c = int(c)
        if self.kind == "Z":
            if isinstance(c, Fraction):
                if c.denominator != 1:
                    raise UsageError(f"{c} is not an integer")
                return c.numerator
            return int(c)
        if self.kind == "Q":
            if isinstance(c, Fraction):
                return c.numerator if c.denominator == 1 else c
            return int(c)
        m = self.modulus
        if isinstance(c, Fraction):
            den = c.denominator % m
            if gcd(den, m) != 1:
                raise UsageError(f"{c} has no image in {self}")
            return c.numerator * pow(den, -1, m) % m
        return int(c) % m

    def is_unit(self, c) -> bool:
        if self.kind == "Z":
            return c in (1, -1)
        if self.kind == "Q":
            return c != 0
        return gcd(int(c) % self.modulus, self.modulus) == 1

    def inverse(self, c):
        if not self.is_unit(c):
            raise ZeroDivisionError(f"{c} is not a unit in {self}")
        if self.kind == "Z":
            return c
        if self.kind == "Q":
            return Fraction(1) / c if not isinstance(c, Fraction) else 1 / c
        return pow(int(c), -1, self.modulus)

    def format(self, c) -> str:
        if isinstance(c, Fraction) and c.denominator == 1:
            return str(c.numerator)
        return str(c)


def nullspace(rows: Sequence[Sequence], ncols: int, ring: CoeffRing) -> list[list]:
    """Basis of ``{x : A x = 0}`` over a field (Q or F_p).

    ``rows`` are the rows of A. Returns the RREF kernel basis, one vector per
    free column, with a 1 in that column.
    """
    if not ring.is_field:
        raise UsageError(f"nullspace needs a field, got {ring}")
    mod = ring.modulus
    if mod is None:
        mat = [[Fraction(v) for v in r] for r in rows]
    else:
        mat = [[int(v) % mod for v in r] for r in rows]
    pivots: list[int] = []
    r = 0
    for c in range(ncols):
        piv = next((i for i in range(r, len(mat)) if mat[i][c] != 0), None)
        if piv is None:
            continue
        mat[r], mat[piv] = mat[piv], mat[r]
        inv = ring.inverse(mat[r][c])
        mat[r] = [_reduce(v * inv, mod) for v in mat[r]]
        for i in range(len(mat)):
            if i != r and mat[i][c] != 0:
                f = mat[i][c]
                mat[i] = [_reduce(a - f * b, mod) for a, b in zip(mat[i], mat[r])]
        pivots.append(c)
        r += 1
        if r == len(mat):
            break
    free = [c for c in range(ncols) if c not in pivots]
    basis = []
    for fc in free:
        v = [0] * ncols
        v[fc] = 1
        for i, pc in enumerate(pivots):
            v[pc] = _reduce(-mat[i][fc], mod)
        basis.append([ring.coerce(x) for x in v])
    return basis


def _reduce(v, mod):
    return v % mod if mod is not None else v


def primitive_integer_vector(v: Iterable) -> list[int]:
    """Scale a rational vector to a primitive integer vector (first nonzero > 0)."""
    v = [Fraction(x) for x in v]
    den = 1
    for x in v:
        den = den * x.denominator // gcd(den, x.denominator)
    ints = [int(x * den) for x in v]
    g = 0
    for x in ints:
        g = gcd(g, x)
    if g == 0:
        return ints
    ints = [x // g for x in ints]
    lead = next(x for x in ints if x != 0)
    return [-x for x in ints] if lead < 0 else ints
