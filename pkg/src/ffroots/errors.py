"""Exception hierarchy shared by every module.

Anything that proves the working modulus is not prime derives from
:class:`CompositeWitness`; when the modulus is a known prime these can only
signal misuse.
"""
from __future__ import annotations

from math import gcd


class CompositeWitness(ArithmeticError):
    """Evidence that the modulus ``n`` is composite."""

    kind = "composite"

    def __init__(self, n: int, value: int, message: str = ""):
        self.n = n
        self.value = value
        super().__init__(message or f"{self.kind} witness {value} for modulus {n}")

    def verify(self) -> bool:
        """Re-check the witness from scratch."""
        return False


class ZeroDivisorWitness(CompositeWitness):
    """A divisor ``g`` of ``n`` with ``1 < g < n`` met during an inversion."""

    kind = "zero_divisor"

    def __init__(self, n: int, g: int):
        super().__init__(n, g, f"{g} divides modulus {n}")

    @property
    def g(self) -> int:
        return self.value

    def verify(self) -> bool:
        return 1 < self.value < self.n and self.n % self.value == 0


class FermatFailure(CompositeWitness):
    """A base ``a`` with ``a^(n-1) != 1 (mod n)``."""

    kind = "fermat"

    def verify(self) -> bool:
        a, n = self.value, self.n
        return gcd(a, n) == 1 and pow(a, n - 1, n) != 1


class OrderAnomaly(CompositeWitness):
    """An element ``x`` whose power to the claimed group order is not 1."""

    kind = "order_anomaly"

    def __init__(self, n: int, x: int, group_order: int):
        self.group_order = group_order
        super().__init__(n, x, f"{x}^{group_order} != 1 mod {n}")

    def verify(self) -> bool:
        return pow(self.value, self.group_order, self.n) != 1


class AlgebraicContradiction(CompositeWitness):
    """A step that provably succeeds over a field failed.

    Carries no independently checkable number, so callers that promise
    verifiable witnesses must not report it as one.
    """

    kind = "contradiction"

    def __init__(self, n: int, reason: str):
        self.reason = reason
        super().__init__(n, 0, f"modulus {n}: {reason}")


class NoRoot(ArithmeticError):
    """``beta`` is not an r-th residue."""


class NotDivisor(ValueError):
    """The requested prime does not divide the group order."""


class ProfileError(ValueError):
    """A field profile does not satisfy an operation's precondition."""


class NotProth(ValueError):
    """The integer has no generalized Proth representation."""


class InputNotLinearProduct(ValueError):
    """A polynomial handed to the linear splitter is not a product of
    distinct linear factors."""


class Inconclusive(RuntimeError):
    """A deterministic scan ran past its bound."""

    def __init__(self, scan_bound: int, message: str = ""):
        self.scan_bound = scan_bound
        super().__init__(message or f"scan exhausted bound {scan_bound}")
