"""Brute-force ground truth for small inputs.

Nothing here uses the root-finding machinery; every answer comes from plain
enumeration, and every entry point refuses inputs above a size guard.
"""
from __future__ import annotations

from typing import Optional

from .ecroot import Curve, Point
from .polyring import Poly

__all__ = [
    "DEFAULT_BOUND",
    "all_rth_roots",
    "all_nonresidues",
    "element_orders",
    "poly_roots_bruteforce",
    "curve_points",
    "multiple",
    "ec_preimages",
    "trial_division",
    "is_prime_bruteforce",
]

DEFAULT_BOUND = 5000


def _guard(q: int, bound: int) -> None:
    if q > bound:
        raise ValueError(f"oracle refuses modulus {q} above bound {bound}")


def is_prime_bruteforce(n: int) -> bool:
    return n >= 2 and trial_division(n, bound=None) == n


def _prime_field(q: int, bound: int) -> None:
    _guard(q, bound)
    if not is_prime_bruteforce(q):
        raise ValueError(f"{q} is not prime")


def all_rth_roots(q: int, r: int, beta: int, bound: int = DEFAULT_BOUND) -> set[int]:
    _prime_field(q, bound)
    beta %= q
    return {x for x in range(q) if pow(x, r, q) == beta}


def all_nonresidues(q: int, r: int, bound: int = DEFAULT_BOUND) -> set[int]:
    _prime_field(q, bound)
    residues = {pow(x, r, q) for x in range(1, q)}
    return set(range(1, q)) - residues


def element_orders(q: int, bound: int = DEFAULT_BOUND) -> dict[int, int]:
    """Multiplicative order of every unit, by walking its powers."""
    _prime_field(q, bound)
    out = {}
    for x in range(1, q):
        k, y = 1, x
        while y != 1:
            y = y * x % q
            k += 1
        out[x] = k
    return out


def poly_roots_bruteforce(f: Poly, bound: int = DEFAULT_BOUND) -> set[int]:
    _guard(f.n, bound)
    return {x for x in range(f.n) if f(x) == 0}


def curve_points(curve: Curve, bound: int = DEFAULT_BOUND) -> list[Point]:
    """All affine points, sorted."""
    p = curve.p
    _guard(p, bound)
    squares: dict[int, list[int]] = {}
    for y in range(p):
        squares.setdefault(y * y % p, []).append(y)
    return [(x, y) for x in range(p) for y in squares.get(curve.rhs(x), [])]


def _add(curve: Curve, P: Point, Q: Point) -> Point:
    # textbook affine formulas, kept separate from ecroot on purpose
    if P is None:
        return Q
    if Q is None:
        return P
    p = curve.p
    (x1, y1), (x2, y2) = P, Q
    if x1 == x2 and (y1 + y2) % p == 0:
        return None
    if P == Q:
        num, den = 3 * x1 * x1 + curve.a4, 2 * y1
    else:
        num, den = y2 - y1, x2 - x1
    lam = num * pow(den % p, p - 2, p) % p
    x3 = (lam * lam - x1 - x2) % p
    return (x3, (lam * (x1 - x3) - y1) % p)


def multiple(curve: Curve, n: int, P: Point) -> Point:
    """nP by repeated addition."""
    acc = None
    for _ in range(n):
        acc = _add(curve, acc, P)
    return acc


def ec_preimages(curve: Curve, Q: Point, n: int, bound: int = DEFAULT_BOUND) -> set:
    """``{P affine : nP = Q}`` by enumeration."""
    return {P for P in curve_points(curve, bound) if multiple(curve, n, P) == Q}


def trial_division(n: int, bound: Optional[int] = 10**12) -> int:
    """Smallest prime factor of ``n``; ``n`` itself when prime."""
    if n < 2:
        raise ValueError("trial division needs n >= 2")
    if bound is not None:
        _guard(n, bound)
    if n % 2 == 0:
        return 2
    d = 3
    while d * d <= n:
        if n % d == 0:
            return d
        d += 2
    return n
