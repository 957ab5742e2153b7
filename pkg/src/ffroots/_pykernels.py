"""Reference polynomial kernels in plain Python.

Polynomials are lists of canonical residues, constant term first, with no
trailing zeros; ``[]`` is the zero polynomial.  ``_kernels.pyx`` mirrors
every function here and must agree with it bit for bit.
"""
from math import gcd

from .errors import ZeroDivisorWitness


def _inv(x, n):
    try:
        return pow(x, -1, n)
    except ValueError:
        raise ZeroDivisorWitness(n, gcd(x, n)) from None


def trim(a):
    while a and not a[-1]:
        a.pop()
    return a


def poly_mul(a, b, n):
    if not a or not b:
        return []
    res = [0] * (len(a) + len(b) - 1)
    for i, ai in enumerate(a):
        if ai:
            for j, bj in enumerate(b):
                res[i + j] += ai * bj
    return trim([c % n for c in res])


def poly_divmod(a, b, n):
    if not b:
        raise ZeroDivisionError("polynomial division by zero")
    db = len(b) - 1
    if len(a) <= db:
        return [], list(a)
    inv = _inv(b[-1], n)
    r = list(a)
    q = [0] * (len(a) - db)
    for i in range(len(a) - 1, db - 1, -1):
        c = r[i] % n
        if c:
            c = c * inv % n
            q[i - db] = c
            off = i - db
            for j in range(db):
                r[off + j] -= c * b[j]
        r[i] = 0
    r = trim([c % n for c in r[:db]])
    return q, r


def poly_rem(a, b, n):
    if not b:
        raise ZeroDivisionError("polynomial division by zero")
    db = len(b) - 1
    if len(a) <= db:
        return list(a)
    inv = _inv(b[-1], n)
    r = list(a)
    for i in range(len(a) - 1, db - 1, -1):
        c = r[i] % n
        if c:
            c = c * inv % n
            off = i - db
            for j in range(db):
                r[off + j] -= c * b[j]
    return trim([c % n for c in r[:db]])


def poly_monic(a, n):
    if not a or a[-1] == 1:
        return list(a)
    inv = _inv(a[-1], n)
    return [c * inv % n for c in a]


def poly_gcd(a, b, n):
    """Monic gcd by Euclid; raises ZeroDivisorWitness on a bad leading term."""
    if not a and not b:
        raise ValueError("gcd(0, 0) is undefined")
    a, b = list(a), list(b)
    while b:
        a, b = b, poly_rem(a, b, n)
    return poly_monic(a, n)


def binom_reduce(a, r, beta, n):
    """Reduce modulo x^r - beta."""
    if len(a) <= r:
        return trim([c % n for c in a])
    res = list(a)
    for i in range(len(res) - 1, r - 1, -1):
        if res[i]:
            res[i - r] += beta * res[i]
    return trim([c % n for c in res[:r]])


def binom_mul(a, b, r, beta, n):
    """Product modulo x^r - beta; both inputs have degree < r."""
    if not a or not b:
        return []
    res = [0] * (len(a) + len(b) - 1)
    for i, ai in enumerate(a):
        if ai:
            for j, bj in enumerate(b):
                res[i + j] += ai * bj
    for i in range(len(res) - 1, r - 1, -1):
        if res[i]:
            res[i - r] += beta * (res[i] % n)
    del res[r:]
    return trim([c % n for c in res])


def binom_pow(a, k, r, beta, n):
    """a^k modulo x^r - beta by left-to-right square-and-multiply."""
    a = binom_reduce(a, r, beta, n)
    if k == 0:
        return [1 % n] if n > 1 else []
    result = a
    for bit in bin(k)[3:]:
        result = binom_mul(result, result, r, beta, n)
        if bit == "1":
            result = binom_mul(result, a, r, beta, n)
    return result


def poly_powmod(a, k, m, n):
    """a^k modulo an arbitrary nonzero polynomial m."""
    a = poly_rem(a, m, n)
    if len(m) == 1:
        return []
    if k == 0:
        return [1]
    result = a
    for bit in bin(k)[3:]:
        result = poly_rem(poly_mul(result, result, n), m, n)
        if bit == "1":
            result = poly_rem(poly_mul(result, a, n), m, n)
    return result
