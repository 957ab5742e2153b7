"""Deterministic primality for generalized Proth numbers N = r^e * t + 1.

If some base ``a`` satisfies ``a^(N-1) = 1`` and ``a^((N-1)/r) != 1`` while
``r^e > t``, then N is prime.  Small bases are scanned first; when they are
all r-th residues, a base of order ``r^e`` is manufactured by repeated r-th
roots over Z/NZ, and any algebraic failure along the way is a compositeness
witness.
"""
from __future__ import annotations

import logging
from dataclasses import dataclass
from math import gcd
from typing import Optional

from .errors import (
    CompositeWitness,
    FermatFailure,
    Inconclusive,
    NoRoot,
    NotProth,
    OrderAnomaly,
    ZeroDivisorWitness,
)
from .modring import Modulus
from .rthroot import DEFAULT_SCAN_BOUND as ZETA_SCAN_BOUND
from .rthroot import FieldProfile, is_small_prime, rth_root

__all__ = [
    "DEFAULT_SCAN_BOUND",
    "ProthForm",
    "PrimalityVerdict",
    "decompose",
    "proth_check",
    "is_prime",
    "verify_verdict",
]

log = logging.getLogger(__name__)

DEFAULT_SCAN_BOUND = 10**6
# bases examined when looking for the best starting point of the root tower
_TOWER_BASES = 100
_TRIAL_LIMIT = 10**6


@dataclass(frozen=True)
class ProthForm:
    n: int
    r: int
    e: int
    t: int

    def __post_init__(self):
        if self.e < 1 or self.t < 1:
            raise NotProth(f"exponents must be positive: e={self.e}, t={self.t}")
        if self.r**self.e * self.t + 1 != self.n:
            raise NotProth(f"{self.r}^{self.e}*{self.t}+1 != {self.n}")
        if not is_small_prime(self.r):
            raise NotProth(f"{self.r} is not prime")
        if self.t % self.r == 0:
            raise NotProth(f"{self.r} divides t={self.t}")
        if self.r**self.e <= self.t:
            raise NotProth(f"{self.r}^{self.e} does not exceed t={self.t}")


@dataclass(frozen=True)
class PrimalityVerdict:
    """``verdict`` is "prime", "composite" or "inconclusive".

    For "prime" the witness is a base ``a``; for "composite" it is a
    ``gcd_factor``/``zero_divisor`` factor or a ``fermat`` base; for
    "inconclusive" it is the scan bound.
    """

    n: int
    verdict: str
    witness_kind: str
    witness_value: int
    form: Optional[ProthForm] = None

    @property
    def is_prime(self) -> bool:
        return self.verdict == "prime"

    def to_json(self) -> dict:
        f = self.form
        return {
            "n": self.n,
            "verdict": self.verdict,
            "witness_kind": self.witness_kind,
            "witness_value": self.witness_value,
            "r": f.r if f else None,
            "e": f.e if f else None,
            "t": f.t if f else None,
        }


def decompose(n: int) -> ProthForm:
    """Smallest prime r with ``n - 1 = r^e * t``, e maximal and ``r^e > t``."""
    if n < 3:
        raise NotProth(f"{n} is too small")
    m = n - 1
    rest = m
    r = 2
    while r * r <= m and r <= _TRIAL_LIMIT:
        if rest % r == 0:
            e, t = 0, m
            while t % r == 0:
                t //= r
                e += 1
            if r**e > t:
                return ProthForm(n, r, e, t)
            while rest % r == 0:
                rest //= r
        r += 1 if r == 2 else 2
    # a prime factor above sqrt(n-1) qualifies with e = 1
    if r * r > m and rest > 1 and rest * rest > m:
        return ProthForm(n, rest, 1, m // rest)
    raise NotProth(f"{n} - 1 has no prime power exceeding its cofactor")


def _composite(form: ProthForm, kind: str, value: int) -> PrimalityVerdict:
    return PrimalityVerdict(form.n, "composite", kind, value, form)


def proth_check(form: ProthForm, a: int) -> Optional[PrimalityVerdict]:
    """Decide primality from one base, or return None when it is uninformative."""
    n = form.n
    if not 2 <= a < n:
        raise ValueError(f"base {a} outside [2, {n})")
    g = gcd(a, n)
    if g > 1:
        return _composite(form, "gcd_factor", g)
    if pow(a, n - 1, n) != 1:
        return _composite(form, "fermat", a)
    if pow(a, (n - 1) // form.r, n) != 1:
        return PrimalityVerdict(n, "prime", "proth_base", a, form)
    return None


def _r_depth(b: int, r: int, e: int, n: int) -> int:
    """Least s <= e with b^(r^s) = 1, or e + 1 if there is none."""
    for s in range(e + 1):
        if b == 1:
            return s
        b = pow(b, r, n)
    return e + 1


def _from_witness(form: ProthForm, w: CompositeWitness) -> Optional[PrimalityVerdict]:
    if isinstance(w, ZeroDivisorWitness) and w.verify():
        return _composite(form, "zero_divisor", w.g)
    if isinstance(w, FermatFailure) and w.verify():
        return _composite(form, "fermat", w.value)
    if isinstance(w, OrderAnomaly) and w.group_order == form.n - 1:
        g = gcd(w.value, form.n)
        if 1 < g < form.n:
            return _composite(form, "gcd_factor", g)
        if g == 1:
            return _composite(form, "fermat", w.value)
    return None


def _tower(form: ProthForm, limit: int) -> Optional[PrimalityVerdict]:
    """Build an element of order r^e by repeated r-th roots over Z/NZ."""
    n, r, e, t = form.n, form.r, form.e, form.t
    best, best_s = None, 0
    candidates = [pow(a, t, n) for a in range(2, min(limit, _TOWER_BASES) + 1)]
    if r == 2:
        candidates.append(n - 1)
    for b in candidates:
        s = _r_depth(b, r, e, n)
        if s > e:
            # b^(r^e) = a^(N-1) != 1 was excluded by the scan
            return None
        if s > best_s:
            best, best_s = b, s
    if best is None:
        log.debug("no base of order divisible by %d below %d", r, limit)
        return None
    profile = FieldProfile(Modulus(n), ((r, e),), t, ZETA_SCAN_BOUND)
    profile.seed_zeta(r, pow(best, r ** (best_s - 1), n))
    z = best
    try:
        for _ in range(e - best_s):
            z = rth_root(profile, r, z).value
    except CompositeWitness as w:
        return _from_witness(form, w)
    except (NoRoot, Inconclusive):
        return None
    return proth_check(form, z)


def is_prime(
    n: int, form: Optional[ProthForm] = None, scan_bound: int = DEFAULT_SCAN_BOUND
) -> PrimalityVerdict:
    """Decide primality of a generalized Proth number.

    Composite verdicts always carry an independently checkable witness;
    failures that carry none are reported as inconclusive.
    """
    if form is None:
        form = decompose(n)
    elif form.n != n:
        raise ValueError(f"form describes {form.n}, not {n}")
    limit = min(scan_bound, n - 1)
    for a in range(2, limit + 1):
        v = proth_check(form, a)
        if v is not None:
            return v
    v = _tower(form, limit)
    if v is not None:
        return v
    return PrimalityVerdict(n, "inconclusive", "scan_bound", scan_bound, form)


def verify_verdict(v: PrimalityVerdict) -> bool:
    """Re-check a verdict's witness from scratch.

    Inconclusive verdicts carry nothing to check and return False.
    """
    n = v.n
    if v.verdict == "prime":
        f = v.form or decompose(n)
        a = v.witness_value
        if f.r**f.e <= f.t or f.r**f.e * f.t + 1 != n:
            return False
        return pow(a, n - 1, n) == 1 and pow(a, (n - 1) // f.r, n) != 1
    if v.verdict == "composite":
        g = v.witness_value
        if v.witness_kind in ("gcd_factor", "zero_divisor"):
            return 1 < g < n and n % g == 0
        if v.witness_kind == "fermat":
            return FermatFailure(n, g).verify()
    return False

