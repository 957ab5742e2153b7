"""Residue arithmetic in Z/NZ.

Values are always kept as least non-negative residues.  A failed inversion
never degrades silently: it raises :class:`ZeroDivisorWitness` carrying a
proper divisor of the modulus.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from math import gcd, prod
from typing import Union

from .errors import OrderAnomaly, ZeroDivisorWitness

__all__ = [
    "Modulus",
    "RingElement",
    "FactoredInteger",
    "inverse_mod",
    "inverse",
    "order",
    "parse_natural",
]


def parse_natural(text: str) -> int:
    """Parse a decimal or ``0x``-prefixed natural number."""
    s = text.strip().replace("_", "")
    value = int(s, 16) if s.lower().startswith("0x") else int(s, 10)
    if value < 0:
        raise ValueError(f"expected a natural number, got {text!r}")
    return value


def inverse_mod(x: int, n: int) -> int:
    """Inverse of ``x`` modulo ``n``.

    Raises ZeroDivisionError when ``x ≡ 0`` and ZeroDivisorWitness when
    ``gcd(x, n)`` is a proper divisor.
    """
    x %= n
    if x == 0:
        raise ZeroDivisionError(f"0 has no inverse modulo {n}")
    try:
        return pow(x, -1, n)
    except ValueError:
        raise ZeroDivisorWitness(n, gcd(x, n)) from None


@dataclass(frozen=True)
class Modulus:
    n: int

    def __post_init__(self):
        if self.n < 2:
            raise ValueError(f"modulus must be at least 2, got {self.n}")

    def __call__(self, value: int) -> "RingElement":
        return RingElement(value, self)

    def __int__(self) -> int:
        return self.n

    def __str__(self) -> str:
        return str(self.n)


class RingElement:
    """An element of Z/NZ.  Immutable."""

    __slots__ = ("value", "modulus")

    def __init__(self, value: int, modulus: Union[Modulus, int]):
        if not isinstance(modulus, Modulus):
            modulus = Modulus(modulus)
        object.__setattr__(self, "modulus", modulus)
        object.__setattr__(self, "value", int(value) % modulus.n)

    def __setattr__(self, name, value):
        raise AttributeError("RingElement is immutable")

    def _coerce(self, other) -> int:
        if isinstance(other, RingElement):
            if other.modulus != self.modulus:
                raise ValueError(
                    f"modulus mismatch: {self.modulus.n} vs {other.modulus.n}"
                )
            return other.value
        if isinstance(other, int):
            return other
        return NotImplemented

    def _new(self, value: int) -> "RingElement":
        return RingElement(value, self.modulus)

    def __add__(self, other):
        o = self._coerce(other)
        return NotImplemented if o is NotImplemented else self._new(self.value + o)

    __radd__ = __add__

    def __sub__(self, other):
        o = self._coerce(other)
        return NotImplemented if o is NotImplemented else self._new(self.value - o)

    def __rsub__(self, other):
        o = self._coerce(other)
        return NotImplemented if o is NotImplemented else self._new(o - self.value)

    def __mul__(self, other):
        o = self._coerce(other)
        return NotImplemented if o is NotImplemented else self._new(self.value * o)

    __rmul__ = __mul__

    def __neg__(self):
        return self._new(-self.value)

    def __pow__(self, k: int):
        if k < 0:
            return self.inverse() ** (-k)
        return self._new(pow(self.value, k, self.modulus.n))

    def __truediv__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return o
        return self * inverse_mod(o, self.modulus.n)

    def inverse(self) -> "RingElement":
        return self._new(inverse_mod(self.value, self.modulus.n))

    def __eq__(self, other):
        if isinstance(other, RingElement):
            return self.modulus == other.modulus and self.value == other.value
        if isinstance(other, int):
            return self.value == other % self.modulus.n
        return NotImplemented

    def __hash__(self):
        return hash((self.value, self.modulus.n))

    def __int__(self) -> int:
        return self.value

    __index__ = __int__

    def __bool__(self) -> bool:
        return self.value != 0

    def __repr__(self) -> str:
        return f"RingElement({self.value}, {self.modulus.n})"

    def __str__(self) -> str:
        return str(self.value)


def inverse(x: RingElement) -> RingElement:
    return x.inverse()


@dataclass(frozen=True)
class FactoredInteger:
    """``prod(p**e for p, e in factors) * cofactor``.

    The primes are distinct; the cofactor is coprime to all of them but is
    not itself factored.
    """

    factors: tuple[tuple[int, int], ...]
    cofactor: int = 1
    value: int = field(init=False)

    def __post_init__(self):
        object.__setattr__(self, "factors", tuple((int(p), int(e)) for p, e in self.factors))
        object.__setattr__(
            self, "value", prod(p**e for p, e in self.factors) * self.cofactor
        )

    @property
    def primes(self) -> tuple[int, ...]:
        return tuple(p for p, _ in self.factors)

    def __int__(self) -> int:
        return self.value


def order(x: RingElement, group_order: FactoredInteger) -> int:
    """Multiplicative order of ``x`` given a factored multiple of it.

    The cofactor is treated as a single indivisible block, so the result is
    exact when the cofactor is 1 or prime.
    """
    n = x.modulus.n
    v = x.value
    if v == 0:
        raise ZeroDivisionError("0 has no multiplicative order")
    total = group_order.value
    if pow(v, total, n) != 1:
        raise OrderAnomaly(n, v, total)
    o = total
    blocks = list(group_order.factors)
    if group_order.cofactor > 1:
        blocks.append((group_order.cofactor, 1))
    for p, e in blocks:
        for _ in range(e):
            if pow(v, o // p, n) == 1:
                o //= p
            else:
                break
    return o
