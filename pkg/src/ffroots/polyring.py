"""Dense univariate polynomials over Z/NZ.

Coefficients are canonical residues stored constant term first, with no
trailing zeros.  Division-type operations raise
:class:`~ffroots.errors.ZeroDivisorWitness` when a leading coefficient is
not a unit, which only happens for composite moduli.
"""
from __future__ import annotations

from typing import Iterable, Union

from . import kernels as K
from .modring import Modulus, RingElement, parse_natural

__all__ = ["Poly", "mul", "rem", "powmod", "gcd", "evaluate", "derivative"]

Scalar = Union[int, RingElement]


def _modint(modulus) -> int:
    if isinstance(modulus, Modulus):
        return modulus.n
    n = int(modulus)
    if n < 2:
        raise ValueError(f"modulus must be at least 2, got {n}")
    return n


class Poly:
    """Immutable polynomial with coefficients in Z/nZ."""

    __slots__ = ("coeffs", "n")

    def __init__(self, coeffs: Iterable[Scalar], modulus: Union[Modulus, int]):
        n = _modint(modulus)
        cs = [int(c) % n for c in coeffs]
        while cs and not cs[-1]:
            cs.pop()
        object.__setattr__(self, "coeffs", tuple(cs))
        object.__setattr__(self, "n", n)

    @classmethod
    def _raw(cls, coeffs: list, n: int) -> "Poly":
        # trusted constructor: coeffs already canonical and trimmed
        p = object.__new__(cls)
        object.__setattr__(p, "coeffs", tuple(coeffs))
        object.__setattr__(p, "n", n)
        return p

    def __setattr__(self, name, value):
        raise AttributeError("Poly is immutable")

    # construction helpers

    @classmethod
    def zero(cls, modulus) -> "Poly":
        return cls((), modulus)

    @classmethod
    def one(cls, modulus) -> "Poly":
        return cls((1,), modulus)

    @classmethod
    def x(cls, modulus) -> "Poly":
        return cls((0, 1), modulus)

    @classmethod
    def monomial(cls, degree: int, modulus, coeff: Scalar = 1) -> "Poly":
        return cls([0] * degree + [int(coeff)], modulus)

    @classmethod
    def from_roots(cls, roots: Iterable[Scalar], modulus) -> "Poly":
        n = _modint(modulus)
        acc = [1]
        for r in roots:
            acc = K.poly_mul(acc, [(-int(r)) % n, 1], n)
        return cls._raw(acc, n)

    @classmethod
    def parse(cls, text: str, modulus) -> "Poly":
        """Parse comma-separated coefficients, constant term first.

        Negative integers are accepted and reduced.
        """
        parts = [p.strip() for p in text.split(",") if p.strip()]
        coeffs = []
        for p in parts:
            sign = -1 if p.startswith("-") else 1
            coeffs.append(sign * parse_natural(p.lstrip("+-")))
        return cls(coeffs, modulus)

    def to_text(self) -> str:
        return ",".join(str(c) for c in self.coeffs) if self.coeffs else "0"

    # basic properties

    @property
    def modulus(self) -> Modulus:
        return Modulus(self.n)

    @property
    def degree(self) -> int:
        """Degree; -1 for the zero polynomial."""
        return len(self.coeffs) - 1

    @property
    def lc(self) -> int:
        return self.coeffs[-1] if self.coeffs else 0

    def is_zero(self) -> bool:
        return not self.coeffs

    def is_one(self) -> bool:
        return self.coeffs == (1,)

    def is_monic(self) -> bool:
        return self.lc == 1

    def __len__(self):
        return len(self.coeffs)

    def __getitem__(self, i: int) -> int:
        return self.coeffs[i] if 0 <= i < len(self.coeffs) else 0

    def __iter__(self):
        return iter(self.coeffs)

    def __eq__(self, other):
        if isinstance(other, Poly):
            return self.n == other.n and self.coeffs == other.coeffs
        if isinstance(other, int):
            return self.coeffs == Poly((other,), self.n).coeffs
        return NotImplemented

    def __hash__(self):
        return hash((self.coeffs, self.n))

    def __repr__(self):
        return f"Poly({list(self.coeffs)}, {self.n})"

    def __str__(self):
        if not self.coeffs:
            return "0"
        terms = []
        for i in range(len(self.coeffs) - 1, -1, -1):
            c = self.coeffs[i]
            if not c:
                continue
            if i == 0:
                terms.append(str(c))
            else:
                mono = "x" if i == 1 else f"x^{i}"
                terms.append(mono if c == 1 else f"{c}*{mono}")
        return " + ".join(terms)

    # arithmetic

    def _other(self, other) -> "Poly":
        if isinstance(other, Poly):
            if other.n != self.n:
                raise ValueError(f"modulus mismatch: {self.n} vs {other.n}")
            return other
        if isinstance(other, RingElement):
            if other.modulus.n != self.n:
                raise ValueError(f"modulus mismatch: {self.n} vs {other.modulus.n}")
            return Poly((other.value,), self.n)
        if isinstance(other, int):
            return Poly((other,), self.n)
        return NotImplemented

    def __add__(self, other):
        o = self._other(other)
        if o is NotImplemented:
            return o
        a, b = self.coeffs, o.coeffs
        if len(a) < len(b):
            a, b = b, a
        return Poly([x + (b[i] if i < len(b) else 0) for i, x in enumerate(a)], self.n)

    __radd__ = __add__

    def __neg__(self):
        return Poly._raw([(-c) % self.n for c in self.coeffs], self.n)

    def __sub__(self, other):
        o = self._other(other)
        if o is NotImplemented:
            return o
        return self + (-o)

    def __rsub__(self, other):
        o = self._other(other)
        if o is NotImplemented:
            return o
        return o + (-self)

    def __mul__(self, other):
        o = self._other(other)
        if o is NotImplemented:
            return o
        return Poly._raw(K.poly_mul(list(self.coeffs), list(o.coeffs), self.n), self.n)

    __rmul__ = __mul__

    def scale(self, c: Scalar) -> "Poly":
        c = int(c) % self.n
        return Poly([c * x for x in self.coeffs], self.n)

    def __divmod__(self, other):
        o = self._other(other)
        if o is NotImplemented:
            return o
        q, r = K.poly_divmod(list(self.coeffs), list(o.coeffs), self.n)
        return Poly(q, self.n), Poly._raw(r, self.n)

    def __floordiv__(self, other):
        return divmod(self, other)[0]

    def __mod__(self, other):
        o = self._other(other)
        if o is NotImplemented:
            return o
        return Poly._raw(K.poly_rem(list(self.coeffs), list(o.coeffs), self.n), self.n)

    def __pow__(self, k: int):
        if k < 0:
            raise ValueError("negative polynomial power")
        result = Poly.one(self.n)
        base = self
        while k:
            if k & 1:
                result = result * base
            base = base * base
            k >>= 1
        return result

    def monic(self) -> "Poly":
        return Poly._raw(K.poly_monic(list(self.coeffs), self.n), self.n)

    def powmod(self, k: int, m: "Poly") -> "Poly":
        return powmod(self, k, m)

    def __call__(self, x0: Scalar) -> RingElement:
        return evaluate(self, x0)

    def derivative(self) -> "Poly":
        return derivative(self)

    def divides(self, other: "Poly") -> bool:
        """True when ``self`` divides ``other`` exactly."""
        return (other % self).is_zero()


def _check_same(f: Poly, g: Poly):
    if f.n != g.n:
        raise ValueError(f"modulus mismatch: {f.n} vs {g.n}")


def mul(f: Poly, g: Poly) -> Poly:
    return f * g


def rem(f: Poly, m: Poly) -> Poly:
    """``f mod m``.  ZeroDivisionError for ``m = 0``."""
    _check_same(f, m)
    return f % m


def powmod(base: Poly, k: int, m: Poly) -> Poly:
    """``base**k mod m`` by square-and-multiply."""
    _check_same(base, m)
    if k < 0:
        raise ValueError("negative exponent")
    return Poly._raw(K.poly_powmod(list(base.coeffs), k, list(m.coeffs), base.n), base.n)


def gcd(f: Poly, g: Poly) -> Poly:
    """Monic gcd.  Over a composite modulus a non-unit leading coefficient
    raises ZeroDivisorWitness."""
    _check_same(f, g)
    return Poly._raw(K.poly_gcd(list(f.coeffs), list(g.coeffs), f.n), f.n)


def evaluate(f: Poly, x0: Scalar) -> RingElement:
    if isinstance(x0, RingElement) and x0.modulus.n != f.n:
        raise ValueError(f"modulus mismatch: {f.n} vs {x0.modulus.n}")
    n = f.n
    x = int(x0) % n
    acc = 0
    for c in reversed(f.coeffs):
        acc = (acc * x + c) % n
    return RingElement(acc, n)


def derivative(f: Poly) -> Poly:
    return Poly([i * c for i, c in enumerate(f.coeffs)][1:], f.n)

