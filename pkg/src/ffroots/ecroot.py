"""Division by n on an elliptic curve ``y^2 = x^3 + a4*x + a6`` over F_p.

Multiplication by n is the rational map
``(x, y) -> (u1(x)/v1(x), y * u2(x)/v2(x))``.  Its x-part turns ``nP = Q``
into a univariate equation whose roots are the candidate x-coordinates of
P; the y-part then singles out the matching square root.
"""
from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from typing import Optional

from .errors import NoRoot
from .modring import Modulus
from .polyring import Poly, gcd
from .polysolve import roots
from .rthroot import FieldProfile, factor_group_order, is_small_prime, rth_root

__all__ = [
    "Curve",
    "Point",
    "INFINITY",
    "point_add",
    "point_neg",
    "scalar_mul",
    "MultiplicationMaps",
    "multiplication_maps",
    "ec_nth_root",
]

# affine points are (x, y) pairs of residues; None is the point at infinity
Point = Optional[tuple[int, int]]
INFINITY: Point = None


@dataclass(frozen=True)
class Curve:
    p: int
    a4: int
    a6: int

    def __post_init__(self):
        p = int(self.p.n if isinstance(self.p, Modulus) else self.p)
        object.__setattr__(self, "p", p)
        object.__setattr__(self, "a4", int(self.a4) % p)
        object.__setattr__(self, "a6", int(self.a6) % p)
        if p <= 3 or not is_small_prime(p):
            raise ValueError(f"curves need a prime field of characteristic > 3, got {p}")
        if (4 * self.a4**3 + 27 * self.a6**2) % p == 0:
            raise ValueError("singular curve")

    def rhs(self, x: int) -> int:
        return (x * x * x + self.a4 * x + self.a6) % self.p

    def contains(self, P: Point) -> bool:
        if P is None:
            return True
        x, y = P
        return 0 <= x < self.p and 0 <= y < self.p and y * y % self.p == self.rhs(x)

    def cubic(self) -> Poly:
        return Poly([self.a6, self.a4, 0, 1], self.p)

    def __str__(self):
        return f"y^2 = x^3 + {self.a4}x + {self.a6} over F_{self.p}"


def point_neg(curve: Curve, P: Point) -> Point:
    if P is None:
        return None
    return (P[0], (-P[1]) % curve.p)


def point_add(curve: Curve, P: Point, Q: Point) -> Point:
    """Chord-and-tangent addition."""
    if P is None:
        return Q
    if Q is None:
        return P
    p = curve.p
    x1, y1 = P
    x2, y2 = Q
    if x1 == x2:
        if (y1 + y2) % p == 0:
            return None
        lam = (3 * x1 * x1 + curve.a4) * pow(2 * y1, -1, p) % p
    else:
        lam = (y2 - y1) * pow(x2 - x1, -1, p) % p
    x3 = (lam * lam - x1 - x2) % p
    return (x3, (lam * (x1 - x3) - y1) % p)


def scalar_mul(curve: Curve, k: int, P: Point) -> Point:
    """kP by double-and-add; negative k multiplies -P."""
    if k < 0:
        return scalar_mul(curve, -k, point_neg(curve, P))
    acc: Point = None
    while k:
        if k & 1:
            acc = point_add(curve, acc, P)
        P = point_add(curve, P, P)
        k >>= 1
    return acc


# ---------------------------------------------------------------------------
# division polynomials
#
# psi_n is stored as (poly, odd) meaning poly(x) * y^odd, with y^2 replaced by
# the cubic; odd == 1 exactly for even n.


def _pmul(curve: Curve, A: tuple, B: tuple) -> tuple:
    pa, oa = A
    pb, ob = B
    prod = pa * pb
    if oa and ob:
        prod = prod * curve.cubic()
    return prod, oa ^ ob


def _psub(A: tuple, B: tuple) -> tuple:
    assert A[1] == B[1]
    return A[0] - B[0], A[1]


def _division_polynomials(curve: Curve, top: int) -> list:
    p, a, b = curve.p, curve.a4, curve.a6
    psi = [
        (Poly.zero(p), 0),
        (Poly.one(p), 0),
        (Poly([2], p), 1),
        (Poly([-a * a, 12 * b, 6 * a, 0, 3], p), 0),
        (Poly([-4 * (8 * b * b + a**3), -16 * a * b, -20 * a * a, 80 * b, 20 * a, 0, 4], p), 1),
    ]
    two_cubic = curve.cubic().scale(2)
    for n in range(5, top + 1):
        m = n // 2
        if n % 2:
            t1 = _pmul(curve, psi[m + 2], _pmul(curve, psi[m], _pmul(curve, psi[m], psi[m])))
            t2 = _pmul(curve, psi[m - 1], _pmul(curve, psi[m + 1], _pmul(curve, psi[m + 1], psi[m + 1])))
            psi.append(_psub(t1, t2))
        else:
            t1 = _pmul(curve, psi[m + 2], _pmul(curve, psi[m - 1], psi[m - 1]))
            t2 = _pmul(curve, psi[m - 2], _pmul(curve, psi[m + 1], psi[m + 1]))
            body, odd = _pmul(curve, psi[m], _psub(t1, t2))
            # body = 2y * psi_n = 2 * cubic * poly(psi_n)
            assert odd == 0
            quo, rem = divmod(body, two_cubic)
            assert rem.is_zero()
            psi.append((quo, 1))
    return psi


@lru_cache(maxsize=256)
def _psi_table(curve: Curve, top: int) -> tuple:
    return tuple(_division_polynomials(curve, max(top, 4)))


@dataclass(frozen=True)
class MultiplicationMaps:
    """``n(x, y) = (u1(x)/v1(x), y*u2(x)/v2(x))`` away from the n-torsion."""

    n: int
    u1: Poly
    v1: Poly
    u2: Poly
    v2: Poly

    def x_map(self, x: int) -> Optional[int]:
        d = int(self.v1(x))
        if d == 0:
            return None
        return int(self.u1(x)) * pow(d, -1, self.u1.n) % self.u1.n

    def apply(self, P: Point) -> Point:
        """nP from the maps; only valid when nP is affine."""
        if P is None:
            return None
        x, y = P
        p = self.u1.n
        nx = self.x_map(x)
        if nx is None:
            return None
        ny = y * int(self.u2(x)) * pow(int(self.v2(x)), -1, p) % p
        return (nx, ny)


def _coprime(u: Poly, v: Poly) -> tuple[Poly, Poly]:
    g = gcd(u, v)
    if g.degree > 0:
        u, v = u // g, v // g
    return u, v


def multiplication_maps(curve: Curve, n: int) -> MultiplicationMaps:
    if n < 1 or n % curve.p == 0:
        raise ValueError(f"need n >= 1 with {curve.p} not dividing n")
    return _maps(curve, n)


@lru_cache(maxsize=1024)
def _maps(curve: Curve, n: int) -> MultiplicationMaps:
    p = curve.p
    psi = _psi_table(curve, 2 * n)
    sq = _pmul(curve, psi[n], psi[n])
    v1 = sq[0]
    cross = _pmul(curve, psi[n - 1], psi[n + 1])
    u1 = Poly.x(p) * v1 - cross[0]
    u2 = psi[2 * n][0]
    v2 = (v1 * v1).scale(2)
    u1, v1 = _coprime(u1, v1)
    u2, v2 = _coprime(u2, v2)
    c = pow(v2.lc, -1, p)
    u2, v2 = u2.scale(c), v2.scale(c)
    if u1.degree != n * n or v1.degree >= n * n:
        raise AssertionError(f"unexpected degrees {u1.degree}, {v1.degree} for n={n}")
    if gcd(u1, v1).degree or gcd(u2, v2).degree:
        raise AssertionError("multiplication maps are not in lowest terms")
    return MultiplicationMaps(n, u1, v1, u2, v2)


def _square_roots(curve: Curve, profile: FieldProfile, c: int) -> list[int]:
    if c == 0:
        return [0]
    try:
        y = rth_root(profile, 2, c).value
    except NoRoot:
        return []
    return sorted({y, (-y) % curve.p})


def ec_nth_root(
    curve: Curve, Q: Point, n: int, profile: Optional[FieldProfile] = None
) -> set:
    """All affine P with nP = Q (P = infinity is never reported)."""
    p = curve.p
    if not curve.contains(Q):
        raise ValueError(f"{Q} is not on {curve}")
    if profile is None:
        profile = factor_group_order(p)
    maps = multiplication_maps(curve, n)
    out = set()
    if Q is None:
        if maps.v1.degree < 1:
            return out
        for alpha in sorted(int(a) for a in roots(maps.v1, profile)):
            for y in _square_roots(curve, profile, curve.rhs(alpha)):
                assert scalar_mul(curve, n, (alpha, y)) is None, f"{(alpha, y)} is not {n}-torsion"
                out.add((alpha, y))
        return out
    xq, yq = Q
    f = maps.u1 - maps.v1.scale(xq)
    for alpha in sorted(int(a) for a in roots(f, profile)):
        ys = _square_roots(curve, profile, curve.rhs(alpha))
        u2a, v2a = int(maps.u2(alpha)), int(maps.v2(alpha))
        if u2a:
            y = yq * v2a * pow(u2a, -1, p) % p
            ys = [y] if y in ys else []
        for y in ys:
            P = (alpha, y)
            if u2a:
                assert scalar_mul(curve, n, P) == Q, f"{P} does not map to {Q}"
                out.add(P)
            elif scalar_mul(curve, n, P) == Q:
                out.add(P)
    return out
