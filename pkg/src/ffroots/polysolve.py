"""Roots of polynomials over F_q by descent through the subgroups of F_q^*.

After removing repeated and non-linear factors, a product ``f`` of distinct
linear factors divides ``x^(q-1) - 1``.  Walking down ``x^d - a`` one prime
of ``q - 1`` at a time, with ``a`` replaced by an r-th root at every level,
eventually separates the roots of ``f`` between the ``r`` cosets, which
splits ``f``.
"""
from __future__ import annotations

from dataclasses import dataclass

from . import kernels as K
from .errors import InputNotLinearProduct, ProfileError
from .modring import RingElement
from .polyring import Poly
from .rthroot import FieldProfile, find_zeta, rth_root

__all__ = ["SolveState", "squarefree_part", "linear_part", "split_linear_product", "roots"]


@dataclass
class SolveState:
    """``f`` divides ``x^d - a`` throughout the descent."""

    a: int
    d: int
    f: Poly

    def holds(self) -> bool:
        n = self.f.n
        h = K.poly_powmod([0, 1], self.d, list(self.f.coeffs), n)
        return not _sub_const(h, self.a, n)


def _sub_const(h: list, c: int, n: int) -> list:
    h = list(h) or [0]
    h[0] = (h[0] - c) % n
    while h and not h[-1]:
        h.pop()
    return h


def _pth_root(f: Poly) -> Poly:
    """g with g^p = f, for f whose derivative vanishes over F_p."""
    p = f.n
    return Poly(f.coeffs[::p], p)


def squarefree_part(f: Poly) -> Poly:
    """Monic product of the distinct irreducible factors of ``f``."""
    if f.is_zero():
        raise ValueError("the zero polynomial has no squarefree part")
    f = f.monic()
    if f.degree <= 0:
        return f
    df = f.derivative()
    if df.is_zero():
        return squarefree_part(_pth_root(f))
    g = K.poly_gcd(list(f.coeffs), list(df.coeffs), f.n)
    if len(g) == 1:
        return f
    # f/g drops every repeated factor whose multiplicity is prime to p;
    # the rest of g still carries them (and p-th powers) with lower multiplicity
    head = f // Poly._raw(g, f.n)
    tail = squarefree_part(Poly._raw(g, f.n))
    return _lcm(head, tail)


def _lcm(f: Poly, g: Poly) -> Poly:
    h = Poly._raw(K.poly_gcd(list(f.coeffs), list(g.coeffs), f.n), f.n)
    return (f * (g // h)).monic()


def linear_part(f: Poly) -> Poly:
    """``gcd(f, x^q - x)``: the product of the distinct linear factors of ``f``."""
    if f.is_zero():
        raise ValueError("linear_part of the zero polynomial")
    q = f.n
    fc = list(f.coeffs)
    if f.degree <= 0:
        return Poly.one(q)
    if f.degree > q:
        # reduce f modulo x^q - x instead of powering x modulo a large f
        xq = [0, q - 1] + [0] * (q - 2) + [1]
        h = K.poly_rem(fc, xq, q)
        if not h:
            return Poly._raw(xq, q)
        return Poly._raw(K.poly_gcd(xq, h, q), q)
    h = K.poly_powmod([0, 1], q, fc, q)
    h = (Poly._raw(h, q) - Poly.x(q)).coeffs
    if not h:
        return f.monic()
    return Poly._raw(K.poly_gcd(fc, list(h), q), q)


def split_linear_product(f: Poly, profile: FieldProfile) -> Poly:
    """A monic proper factor of ``f``, a product of at least two distinct
    monic linear factors not including ``x``."""
    if profile.t != 1:
        raise ProfileError("splitting needs the complete factorization of q-1")
    q = profile.n
    if f.n != q:
        raise ValueError(f"modulus mismatch: {f.n} vs {q}")
    if f.degree < 2 or not f.is_monic() or f[0] == 0:
        raise InputNotLinearProduct("need a monic product of >= 2 linear factors with f(0) != 0")
    fc = list(f.coeffs)
    state = SolveState(1, q - 1, f)
    if not state.holds():
        raise InputNotLinearProduct("f does not divide x^(q-1) - 1")
    for r, e in profile.factors:
        zeta = find_zeta(profile, r).value
        for _ in range(e):
            assert state.holds(), "descent invariant broken"
            b = rth_root(profile, r, state.a).value
            h = K.poly_powmod([0, 1], state.d // r, fc, q)
            full = None
            zi_b = b
            for i in range(r):
                g = K.poly_gcd(fc, _sub_const(h, zi_b, q), q)
                if 1 < len(g) < len(fc):
                    return Poly._raw(g, q)
                if len(g) == len(fc):
                    if full is not None:
                        raise InputNotLinearProduct("two cosets both contain every root")
                    full = zi_b
                zi_b = zi_b * zeta % q
            if full is None:
                raise InputNotLinearProduct("roots of f lie in no coset of the current subgroup")
            state.a, state.d = full, state.d // r
    raise InputNotLinearProduct("descent reached the trivial subgroup without splitting")


def roots(f: Poly, profile: FieldProfile) -> set[RingElement]:
    """All roots of ``f`` in F_q."""
    if f.is_zero():
        raise ValueError("every element is a root of the zero polynomial")
    q = profile.n
    if f.n != q:
        raise ValueError(f"modulus mismatch: {f.n} vs {q}")
    original = f
    out: set[int] = set()
    cs = f.coeffs
    lead_zeros = next(i for i, c in enumerate(cs) if c)
    if lead_zeros:
        out.add(0)
        f = Poly._raw(list(cs[lead_zeros:]), q)
    g = linear_part(squarefree_part(f))
    pending = [g] if g.degree >= 1 else []
    while pending:
        h = pending.pop()
        if h.degree == 1:
            out.add((-h[0]) % q)
            continue
        a = split_linear_product(h, profile)
        b = h // a
        pending.extend(sorted((a, b), key=lambda p: p.degree, reverse=True))
    for x in out:
        if original(x) != 0:
            raise AssertionError(f"{x} is not a root")
    return {RingElement(x, q) for x in out}
