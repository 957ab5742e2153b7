"""Deterministic r-th roots over Z/qZ without an r-th nonresidue.

Taking an r-th root of ``beta`` is reduced to finding a proper factor of
``x^r - beta``.  Arithmetic happens in the quotient ring Z/qZ[x]/(x^r - beta):
for a scan element ``a`` the two powers ``(a - x)^k`` and ``(a - rho*x)^k``
are formed there, and gcds of their combinations with ``x^r - beta`` split
the binomial once the right exponent is located.

Every routine also runs over a composite modulus.  There, a failed
inversion or a step that cannot fail over a field raises a
:class:`~ffroots.errors.CompositeWitness`, which is what the Proth-style
primality test relies on.
"""
from __future__ import annotations

import logging
from dataclasses import dataclass, field
from math import gcd, prod
from typing import Optional, Union

from . import kernels as K
from .errors import (
    AlgebraicContradiction,
    FermatFailure,
    Inconclusive,
    NoRoot,
    NotDivisor,
    ProfileError,
    ZeroDivisorWitness,
)
from .modring import FactoredInteger, Modulus, RingElement, inverse_mod
from .polyring import Poly

__all__ = [
    "DEFAULT_SCAN_BOUND",
    "FieldProfile",
    "PsiPair",
    "SplitState",
    "factor_group_order",
    "find_zeta",
    "rth_root",
    "root_from_factor",
    "find_factor",
    "find_a",
    "find_ell",
    "find_k0",
    "split",
    "nonresidue",
    "primitive_element",
    "is_small_prime",
]

log = logging.getLogger(__name__)

DEFAULT_SCAN_BOUND = 1 << 20

Scalar = Union[int, RingElement]


def is_small_prime(n: int) -> bool:
    """Trial-division primality, for the small primes r used as root degrees."""
    if n < 2:
        return False
    if n < 4:
        return True
    if n % 2 == 0:
        return False
    p = 3
    while p * p <= n:
        if n % p == 0:
            return False
        p += 2
    return True


@dataclass
class FieldProfile:
    """Partial factorization ``q - 1 = prod(r**e) * t`` plus a cache of
    primitive roots of unity keyed by their order."""

    q: Modulus
    factors: tuple[tuple[int, int], ...]
    t: int = 1
    scan_bound: int = DEFAULT_SCAN_BOUND
    zetas: dict = field(default_factory=dict, compare=False, repr=False)

    def __post_init__(self):
        if not isinstance(self.q, Modulus):
            self.q = Modulus(int(self.q))
        self.factors = tuple(sorted((int(p), int(e)) for p, e in self.factors))
        if self.q.n < 3:
            raise ProfileError("field profiles need q >= 3")
        if prod(p**e for p, e in self.factors) * self.t != self.q.n - 1:
            raise ProfileError(f"factorization does not multiply to {self.q.n - 1}")
        for p, e in self.factors:
            if e < 1 or gcd(p, self.t) != 1:
                raise ProfileError(f"prime {p} is not split off the cofactor {self.t}")

    @property
    def n(self) -> int:
        return self.q.n

    @property
    def primes(self) -> tuple[int, ...]:
        return tuple(p for p, _ in self.factors)

    def exponent(self, r: int) -> int:
        for p, e in self.factors:
            if p == r:
                return e
        return 0

    def group_order(self) -> FactoredInteger:
        return FactoredInteger(self.factors, self.t)

    def including(self, r: int) -> "FieldProfile":
        """The same profile with the prime ``r`` split off the cofactor."""
        if r in self.primes:
            return self
        if self.t % r:
            raise NotDivisor(f"{r} does not divide {self.n - 1}")
        t, e = self.t, 0
        while t % r == 0:
            t //= r
            e += 1
        return FieldProfile(self.q, self.factors + ((r, e),), t, self.scan_bound, self.zetas)

    def seed_zeta(self, order: int, z: int) -> None:
        """Install a primitive root of unity obtained elsewhere.

        ``order`` must be a prime or 4; the value is checked first.
        """
        n = self.n
        z %= n
        bad = pow(z, order, n) != 1 or any(
            pow(z, order // p, n) == 1 for p in _prime_divisors(order)
        )
        if bad:
            raise ValueError(f"{z} is not a primitive {order}-th root of unity mod {n}")
        self.zetas.setdefault(order, z)


def _prime_divisors(n: int) -> list[int]:
    out, p = [], 2
    while p * p <= n:
        if n % p == 0:
            out.append(p)
            while n % p == 0:
                n //= p
        p += 1
    if n > 1:
        out.append(n)
    return out


def factor_group_order(
    q: Union[Modulus, int], bound: Optional[int] = None, scan_bound: int = DEFAULT_SCAN_BOUND
) -> FieldProfile:
    """Trial-divide ``q - 1`` by every prime up to ``bound``.

    With ``bound=None`` the factorization is complete (cofactor 1).
    """
    if not isinstance(q, Modulus):
        q = Modulus(int(q))
    if q.n < 3:
        raise ValueError("q must be at least 3")
    m = q.n - 1
    factors = []
    p = 2
    while p * p <= m and (bound is None or p <= bound):
        if m % p == 0:
            e = 0
            while m % p == 0:
                m //= p
                e += 1
            factors.append((p, e))
        p += 1 if p == 2 else 2
    if m > 1 and p * p > m and (bound is None or m <= bound):
        factors.append((m, 1))
        m = 1
    return FieldProfile(q, tuple(factors), m, scan_bound)


def find_zeta(profile: FieldProfile, n: int) -> RingElement:
    """Primitive ``n``-th root of unity for ``n`` prime or 4.

    Scans a = 2, 3, ... for ``c = a^((q-1)/n)`` of exact order ``n``; the
    result is memoized on the profile.
    """
    return RingElement(_zeta(profile, n), profile.q)


def _zeta(profile: FieldProfile, n: int) -> int:
    cached = profile.zetas.get(n)
    if cached is not None:
        return cached
    q = profile.n
    if (q - 1) % n:
        raise NotDivisor(f"{n} does not divide {q - 1}")
    if n == 1:
        return 1
    if n != 4 and not is_small_prime(n):
        raise ValueError(f"roots of unity are only built for prime orders and 4, not {n}")
    if n == 2:
        return profile.zetas.setdefault(2, q - 1)
    e = (q - 1) // n
    limit = min(q - 1, profile.scan_bound)
    for a in range(2, limit + 1):
        g = gcd(a, q)
        if g > 1:
            raise ZeroDivisorWitness(q, g)
        c = pow(a, e, q)
        if n == 4:
            s = c * c % q
            if s == q - 1:
                return profile.zetas.setdefault(4, c)
            if s != 1:
                if s * s % q != 1:
                    raise FermatFailure(q, a)
                raise ZeroDivisorWitness(q, gcd(s - 1, q))
        elif c != 1:
            if pow(c, n, q) != 1:
                raise FermatFailure(q, a)
            return profile.zetas.setdefault(n, c)
    if limit < q - 1:
        raise Inconclusive(profile.scan_bound, f"no element of order {n} below {limit + 1}")
    raise AlgebraicContradiction(q, f"no element of order {n} although {n} divides q-1")


# ---------------------------------------------------------------------------
# quotient-ring helpers

@dataclass(frozen=True)
class PsiPair:
    """``f1 = (a - x)^k`` and ``f2 = (a - rho*x)^k`` reduced mod ``x^r - beta``.

    ``g_k(x, a, z) = f1 - z*f2``; the trivariate polynomial is never built.
    """

    f1: Poly
    f2: Poly
    a: int
    k: int

    @classmethod
    def build(cls, q: int, r: int, beta: Scalar, rho: Scalar, a: int, k: int) -> "PsiPair":
        f1, f2 = _Binomial(q, r, int(beta) % q, int(rho) % q).powers(a, k)
        return cls(Poly._raw(f1, q), Poly._raw(f2, q), a, k)

    def g(self, z: int) -> Poly:
        n = self.f1.n
        return Poly(_lin_comb(list(self.f1.coeffs), list(self.f2.coeffs), z, n), n)


def _lin_comb(f1: list, f2: list, z: int, n: int) -> list:
    """f1 - z*f2, canonical."""
    size = max(len(f1), len(f2))
    out = [
        ((f1[i] if i < len(f1) else 0) - z * (f2[i] if i < len(f2) else 0)) % n
        for i in range(size)
    ]
    while out and not out[-1]:
        out.pop()
    return out


def _lin_sub(f1: list, f2: list, n: int) -> list:
    size = max(len(f1), len(f2))
    out = [
        ((f1[i] if i < len(f1) else 0) - (f2[i] if i < len(f2) else 0)) % n
        for i in range(size)
    ]
    while out and not out[-1]:
        out.pop()
    return out


class _Binomial:
    """Arithmetic context for Z/qZ[x]/(x^r - beta)."""

    __slots__ = ("q", "r", "beta", "rho", "modpoly")

    def __init__(self, q: int, r: int, beta: int, rho: int):
        self.q, self.r, self.beta, self.rho = q, r, beta, rho
        self.modpoly = [(-beta) % q] + [0] * (r - 1) + [1]

    def powers(self, a: int, k: int) -> tuple[list, list]:
        q = self.q
        f1 = K.binom_pow([a % q, q - 1], k, self.r, self.beta, q)
        f2 = K.binom_pow([a % q, (-self.rho) % q], k, self.r, self.beta, q)
        return f1, f2

    def raise_to(self, f: list, k: int) -> list:
        return K.binom_pow(f, k, self.r, self.beta, self.q)

    def gcd(self, g: list) -> list:
        return K.poly_gcd(g, self.modpoly, self.q)

    def is_proper(self, h: list) -> bool:
        return 1 < len(h) < self.r + 1

    def x_power(self, n: int) -> list:
        """x^n reduced mod x^r - beta."""
        out = [0] * self.r
        out[n % self.r] = pow(self.beta, n // self.r, self.q)
        while out and not out[-1]:
            out.pop()
        return out


@dataclass
class SplitState:
    """Working state threaded through the a -> ell -> k0 -> split pipeline."""

    profile: FieldProfile
    r: int
    beta: int
    rho: int
    a: Optional[int] = None
    ell: Optional[int] = None
    e_prime: Optional[int] = None
    k0: Optional[int] = None
    d: Optional[int] = None
    D: list = field(default_factory=list)
    case: Optional[str] = None
    depth: int = 0

    @property
    def q(self) -> int:
        return self.profile.n

    def ring(self) -> _Binomial:
        return _Binomial(self.q, self.r, self.beta, self.rho)

    def summary(self) -> dict:
        return {
            "r": self.r,
            "beta": self.beta,
            "rho": self.rho,
            "a": self.a,
            "ell": self.ell,
            "e_prime": self.e_prime,
            "k0": self.k0,
            "d": self.d,
            "D_degrees": [p.degree for p in self.D],
            "case": self.case,
            "depth": self.depth,
        }


def _emit(trace: Optional[list], event: str, **info) -> None:
    if trace is not None:
        trace.append({"event": event, **info})


# ---------------------------------------------------------------------------
# root extraction from a factor


def _ext_gcd(a: int, b: int) -> tuple[int, int, int]:
    x0, x1, y0, y1 = 1, 0, 0, 1
    while b:
        qt, a, b = a // b, b, a % b
        x0, x1 = x1, x0 - qt * x1
        y0, y1 = y1, y0 - qt * y1
    return a, x0, y0


def _signed_pow(x: int, e: int, q: int) -> int:
    if e < 0:
        return pow(inverse_mod(x, q), -e, q)
    return pow(x, e, q)


def root_from_factor(r: int, beta: Scalar, f: Poly) -> RingElement:
    """r-th root of ``beta`` from a monic proper factor ``f`` of ``x^r - beta``.

    With ``n = deg f``, ``c0 = f(0)`` and ``u*n + v*r = 1`` the root is
    ``(-1)^(n*u) * c0^u * beta^v``.
    """
    q = f.n
    b = int(beta) % q
    n = f.degree
    if not f.is_monic() or not 0 < n < r:
        raise ValueError("need a monic factor of degree strictly between 0 and r")
    _, u, v = _ext_gcd(n, r)
    root = _signed_pow(f[0], u, q) * _signed_pow(b, v, q) % q
    if (n * u) % 2:
        root = (-root) % q
    if pow(root, r, q) != b:
        raise AlgebraicContradiction(q, f"{f} does not yield an {r}-th root of {b}")
    return RingElement(root, q)


# ---------------------------------------------------------------------------
# the splitting pipeline


def find_a(
    profile: FieldProfile, r: int, beta: Scalar, rho: Scalar, k: int
) -> Union[int, Poly]:
    """Scan a = 1, 2, ..., k+1.

    Returns ``x - a`` if ``a^r = beta``, a proper factor if
    ``gcd(g_{a,k}, x^r - beta)`` is one, or the first ``a`` for which that
    gcd is 1.  At most k scan elements can make ``g_{a,k}`` vanish.
    """
    if k <= 1:
        raise ValueError("k must exceed 1")
    q = profile.n
    ring = _Binomial(q, r, int(beta) % q, int(rho) % q)
    for a in range(1, k + 2):
        if a >= q:
            break
        if pow(a, r, q) == ring.beta:
            return Poly._raw([q - a, 1], q)
        f1, f2 = ring.powers(a, k)
        h = ring.gcd(_lin_sub(f1, f2, q))
        if ring.is_proper(h):
            return Poly._raw(h, q)
        if len(h) == 1:
            return a
    raise AlgebraicContradiction(q, f"more than {k} scan elements make g_(a,{k}) vanish")


def _ordered_factors(profile: FieldProfile, r: int) -> list[tuple[int, int]]:
    first = [(p, e) for p, e in profile.factors if p == r]
    return first + [(p, e) for p, e in profile.factors if p != r]


def find_ell(state: SplitState) -> Union[int, Poly]:
    """Find a prime ``ell`` of the profile with ``gcd(g_{a,h}, x^r - beta) = 1``
    where ``h = (q-1)/r^(e-1)`` for ``ell = r`` and ``(q-1)/ell^e`` otherwise.
    A proper gcd met on the way is returned instead."""
    q, r = state.q, state.r
    ring = state.ring()
    for p, e in _ordered_factors(state.profile, r):
        h = (q - 1) // (p ** (e - 1) if p == r else p**e)
        f1, f2 = ring.powers(state.a, h)
        g = ring.gcd(_lin_sub(f1, f2, q))
        if ring.is_proper(g):
            return Poly._raw(g, q)
        if len(g) == 1:
            return p
    raise AlgebraicContradiction(q, "no prime of q-1 separates the scan element")


def find_k0(state: SplitState) -> Union[int, Poly]:
    """Compute the ladder ``D_i = gcd(g_{a,(q-1)/ell^i}, x^r - beta)`` for
    ``0 <= i <= e'`` top-down, reusing each power for the next rung.

    Fills ``state.D``/``state.e_prime``; returns a proper rung if one
    appears, otherwise the last index where the ladder is ``x^r - beta``.
    """
    q, r, ell = state.q, state.r, state.ell
    e_ell = state.profile.exponent(ell)
    e_prime = e_ell - 1 if ell == r else e_ell
    state.e_prime = e_prime
    ring = state.ring()
    f1, f2 = ring.powers(state.a, (q - 1) // ell**e_prime)
    ladder = [None] * (e_prime + 1)
    for i in range(e_prime, -1, -1):
        ladder[i] = ring.gcd(_lin_sub(f1, f2, q))
        if i:
            f1 = ring.raise_to(f1, ell)
            f2 = ring.raise_to(f2, ell)
    state.D = [Poly._raw(h, q) for h in ladder]
    for h in ladder:
        if ring.is_proper(h):
            return Poly._raw(h, q)
    full = [len(h) == r + 1 for h in ladder]
    k0 = max((i for i, v in enumerate(full) if v), default=-1)
    if k0 < 0 or k0 >= e_prime or not all(full[: k0 + 1]) or any(full[k0 + 1 :]):
        raise AlgebraicContradiction(q, f"gcd ladder is not monotone: {[len(h) - 1 for h in ladder]}")
    return k0


def _zeta_r_squared(state: SplitState, trace: Optional[list]) -> int:
    """A primitive r^2-th root of unity as an r-th root of rho."""
    profile, r = state.profile, state.r
    key = r * r
    if r != 2 and key in profile.zetas:
        return profile.zetas[key]
    if state.depth >= 1:
        raise RuntimeError("recursive zeta_(r^2) construction nested more than once")
    q = profile.n
    f = find_factor(profile, r, state.rho, trace=trace, _depth=state.depth + 1)
    z = root_from_factor(r, state.rho, f).value
    if pow(z, r * r, q) != 1 or pow(z, r, q) == 1:
        raise AlgebraicContradiction(q, f"{z} is not a primitive {key}-th root of unity")
    if r != 2:
        # for r = 2 the key 4 holds the scanned zeta_4 used by the beta = -1 shortcut
        z = profile.zetas.setdefault(key, z)
    return z


def split(state: SplitState, trace: Optional[list] = None) -> Poly:
    """Split ``x^r - beta`` once a, ell and k0 are known."""
    q, r, beta, ell, k0 = state.q, state.r, state.beta, state.ell, state.k0
    ring = state.ring()
    d = (q - 1) // ell ** (k0 + 2) if ell == r else (q - 1) // ell ** (k0 + 1)
    state.d = d
    f1, f2 = ring.powers(state.a, d)

    if ell != r:
        state.case = "V.1"
        z = _zeta(state.profile, ell)
        _emit(trace, "split", case="V.1", d=d, zeta=z, depth=state.depth)
        zn = 1
        for n in range(1, ell):
            zn = zn * z % q
            h = ring.gcd(_lin_comb(f1, f2, zn, q))
            if ring.is_proper(h):
                return Poly._raw(h, q)
    elif pow(beta, r, q) != 1:
        state.case = "V.2"
        z = _zeta_r_squared(state, trace)
        _emit(trace, "split", case="V.2", d=d, zeta=z, depth=state.depth)
        for n in range(1, r * r):
            if n % r == 0:
                continue
            h = ring.gcd(_lin_comb(f1, f2, pow(z, n, q), q))
            if ring.is_proper(h):
                return Poly._raw(h, q)
    else:
        if r == 2 or beta == 1:
            raise ValueError("x^r - 1 and r = 2 with beta^2 = 1 are handled before splitting")
        state.case = "V.3"
        _emit(trace, "split", case="V.3", d=d, depth=state.depth)
        for n in range(1, r * r):
            if n % r == 0:
                continue
            zf2 = K.binom_mul(ring.x_power(n), f2, r, beta, q)
            h = ring.gcd(_lin_sub(f1, zf2, q))
            if ring.is_proper(h):
                return Poly._raw(h, q)
    raise AlgebraicContradiction(q, f"split case {state.case} found no proper factor")


def find_factor(
    profile: FieldProfile,
    r: int,
    beta: Scalar,
    *,
    trace: Optional[list] = None,
    _depth: int = 0,
) -> Poly:
    """A monic proper factor of ``x^r - beta``, for ``r^2 | q - 1`` and
    ``beta`` a nonzero r-th residue."""
    q = profile.n
    b = int(beta) % q
    if (q - 1) % (r * r):
        raise ValueError(f"need {r}^2 | q-1")
    if b == 0:
        raise ValueError("beta must be nonzero")
    profile = profile.including(r)
    if r == 2 and b == 1:
        _emit(trace, "shortcut", beta=b, factor="x + 1", depth=_depth)
        return Poly._raw([1, 1], q)
    if r == 2 and b == q - 1:
        z4 = _zeta(profile, 4)
        _emit(trace, "shortcut", beta=b, factor=f"x + {z4}", depth=_depth)
        return Poly._raw([z4, 1], q)
    rho = _zeta(profile, r)
    state = SplitState(profile, r, b, rho, depth=_depth)

    k = r * profile.t
    res = find_a(profile, r, b, rho, k)
    if isinstance(res, Poly):
        _emit(trace, "find_a", k=k, factor=str(res), depth=_depth)
        return res
    state.a = res
    _emit(trace, "find_a", k=k, a=res, depth=_depth)

    res = find_ell(state)
    if isinstance(res, Poly):
        _emit(trace, "find_ell", factor=str(res), depth=_depth)
        return res
    state.ell = res
    _emit(trace, "find_ell", ell=res, depth=_depth)

    res = find_k0(state)
    _emit(trace, "find_k0", e_prime=state.e_prime,
          D_degrees=[p.degree for p in state.D], depth=_depth,
          **({"factor": str(res)} if isinstance(res, Poly) else {"k0": res}))
    if isinstance(res, Poly):
        return res
    state.k0 = res

    f = split(state, trace)
    _emit(trace, "factor", factor=str(f), state=state.summary(), depth=_depth)
    log.debug("split x^%d - %d mod %d: %s", r, b, q, state.summary())
    return f


# ---------------------------------------------------------------------------
# top-level operations


def rth_root(
    profile: FieldProfile, r: int, beta: Scalar, *, trace: Optional[list] = None
) -> RingElement:
    """An r-th root of ``beta`` in Z/qZ.

    Raises NoRoot when ``beta`` is not an r-th residue.  The returned root
    is always checked by powering.
    """
    q = profile.n
    if not is_small_prime(r):
        raise ValueError(f"r must be prime, got {r}")
    b = int(beta) % q
    if b == 0:
        return RingElement(0, q)
    if gcd(r, q - 1) == 1:
        x = pow(b, pow(r, -1, q - 1), q)
        _emit(trace, "easy", case="gcd(r, q-1) = 1")
    else:
        s = (q - 1) // r
        if pow(b, s, q) != 1:
            raise NoRoot(f"x^{r} = {b} has no solution mod {q}")
        if s % r:
            x = pow(b, pow(r, -1, s), q) if s > 1 else 1
            _emit(trace, "easy", case="r || q-1")
            if pow(x, r, q) != b:
                raise NoRoot(f"x^{r} = {b} has no solution mod {q}")
        else:
            f = find_factor(profile, r, b, trace=trace)
            x = root_from_factor(r, b, f).value
    if pow(x, r, q) != b:
        raise AlgebraicContradiction(q, f"{x}^{r} != {b}")
    return RingElement(x, q)


def nonresidue(profile: FieldProfile, r: int) -> RingElement:
    """An element of order ``r^e`` (``r^e`` exactly dividing q-1), built by
    repeated r-th roots starting from a primitive r-th root of unity."""
    q = profile.n
    if not is_small_prime(r):
        raise ValueError(f"r must be prime, got {r}")
    if (q - 1) % r:
        raise NotDivisor(f"{r} does not divide {q - 1}")
    profile = profile.including(r)
    e = profile.exponent(r)
    z = _zeta(profile, r)
    for _ in range(e - 1):
        z = rth_root(profile, r, z).value
    if pow(z, r**e, q) != 1 or pow(z, r ** (e - 1), q) == 1:
        raise AlgebraicContradiction(q, f"{z} does not have order {r}^{e}")
    if pow(z, (q - 1) // r, q) == 1:
        raise AlgebraicContradiction(q, f"{z} is an {r}-th residue")
    return RingElement(z, q)


def primitive_element(profile: FieldProfile) -> RingElement:
    """A generator of (Z/qZ)^*, as the product of one nonresidue per prime."""
    if profile.t != 1:
        raise ProfileError("a primitive element needs the complete factorization of q-1")
    q = profile.n
    g = 1
    for p, _ in profile.factors:
        g = g * nonresidue(profile, p).value % q
    for p, _ in profile.factors:
        if pow(g, (q - 1) // p, q) == 1:
            raise AlgebraicContradiction(q, f"{g} is a {p}-th residue")
    return RingElement(g, q)
