# cython: language_level=3, boundscheck=False, wraparound=False, cdivision=True
"""Compiled polynomial kernels.

Same contract as ``_pykernels``.  Moduli below 2**31 run on C ``long long``
buffers; larger moduli fall back to generic Python-int loops.
"""
from libc.stdlib cimport malloc, free
from math import gcd

from .errors import ZeroDivisorWitness


ctypedef long long i64

# products of two residues below 2**31 fit in int64
cdef object SMALL = 2**31


cdef inline i64 _inv_small(i64 x, i64 n) except -1:
    cdef i64 r0 = n, r1 = x, t0 = 0, t1 = 1, q, tmp
    while r1:
        q = r0 // r1
        tmp = r0 - q * r1; r0 = r1; r1 = tmp
        tmp = t0 - q * t1; t0 = t1; t1 = tmp
    if r0 != 1:
        raise ZeroDivisorWitness(n, r0)
    if t0 < 0:
        t0 += n
    return t0


def _inv(x, n):
    try:
        return pow(x, -1, n)
    except ValueError:
        raise ZeroDivisorWitness(n, gcd(x, n)) from None


cdef i64* _load(list a, Py_ssize_t size) except NULL:
    cdef i64* buf = <i64*> malloc(max(size, 1) * sizeof(i64))
    cdef Py_ssize_t i, la = len(a)
    if buf == NULL:
        raise MemoryError()
    for i in range(size):
        buf[i] = a[i] if i < la else 0
    return buf


cdef list _store(i64* buf, Py_ssize_t size):
    while size > 0 and buf[size - 1] == 0:
        size -= 1
    return [buf[i] for i in range(size)]


def trim(list a):
    while a and not a[len(a) - 1]:
        a.pop()
    return a


# ---------------------------------------------------------------- small path

cdef list _mul_small(list a, list b, i64 n):
    cdef Py_ssize_t la = len(a), lb = len(b), i, j, lr
    if la == 0 or lb == 0:
        return []
    lr = la + lb - 1
    cdef i64* pa = _load(a, la)
    cdef i64* pb = _load(b, lb)
    cdef i64* pr = _load([], lr)
    cdef i64 ai
    try:
        for i in range(la):
            ai = pa[i]
            if ai:
                for j in range(lb):
                    pr[i + j] = (pr[i + j] + ai * pb[j]) % n
        return _store(pr, lr)
    finally:
        free(pa); free(pb); free(pr)


cdef void _rem_inplace(i64* r, Py_ssize_t la, i64* pb, Py_ssize_t db, i64 inv, i64 n, i64* q):
    cdef Py_ssize_t i, j, off
    cdef i64 c
    for i in range(la - 1, db - 1, -1):
        c = r[i]
        if c:
            c = c * inv % n
            off = i - db
            if q != NULL:
                q[off] = c
            for j in range(db):
                r[off + j] = (r[off + j] - c * pb[j]) % n
                if r[off + j] < 0:
                    r[off + j] += n
        r[i] = 0


cdef list _rem_small(list a, list b, i64 n):
    cdef Py_ssize_t la = len(a), lb = len(b)
    if lb == 0:
        raise ZeroDivisionError("polynomial division by zero")
    if la < lb:
        return list(a)
    cdef i64 inv = _inv_small(b[lb - 1], n)
    cdef i64* r = _load(a, la)
    cdef i64* pb = _load(b, lb)
    try:
        _rem_inplace(r, la, pb, lb - 1, inv, n, NULL)
        return _store(r, lb - 1)
    finally:
        free(r); free(pb)


cdef tuple _divmod_small(list a, list b, i64 n):
    cdef Py_ssize_t la = len(a), lb = len(b)
    if lb == 0:
        raise ZeroDivisionError("polynomial division by zero")
    if la < lb:
        return [], list(a)
    cdef i64 inv = _inv_small(b[lb - 1], n)
    cdef i64* r = _load(a, la)
    cdef i64* pb = _load(b, lb)
    cdef i64* q = _load([], la - lb + 1)
    try:
        _rem_inplace(r, la, pb, lb - 1, inv, n, q)
        return [q[i] for i in range(la - lb + 1)], _store(r, lb - 1)
    finally:
        free(r); free(pb); free(q)


cdef list _gcd_small(list a, list b, i64 n):
    cdef Py_ssize_t la = len(a), lb = len(b), size, i
    cdef Py_ssize_t cap = max(la, lb)
    if la == 0 and lb == 0:
        raise ValueError("gcd(0, 0) is undefined")
    cdef i64* u = _load(a, cap)
    cdef i64* v = _load(b, cap)
    cdef i64* tmp
    cdef i64 inv
    try:
        while lb > 0:
            if la >= lb:
                inv = _inv_small(v[lb - 1], n)
                _rem_inplace(u, la, v, lb - 1, inv, n, NULL)
                la = lb - 1
                while la > 0 and u[la - 1] == 0:
                    la -= 1
            tmp = u; u = v; v = tmp
            size = la; la = lb; lb = size
        inv = _inv_small(u[la - 1], n)
        return [u[i] * inv % n for i in range(la)]
    finally:
        free(u); free(v)


cdef void _bmul(i64* x, i64* y, i64* out, i64* scratch, Py_ssize_t r, i64 beta, i64 n):
    cdef Py_ssize_t i, j
    cdef i64 xi
    for i in range(2 * r - 1):
        scratch[i] = 0
    for i in range(r):
        xi = x[i]
        if xi:
            for j in range(r):
                scratch[i + j] = (scratch[i + j] + xi * y[j]) % n
    for i in range(2 * r - 2, r - 1, -1):
        if scratch[i]:
            scratch[i - r] = (scratch[i - r] + beta * scratch[i]) % n
    for i in range(r):
        out[i] = scratch[i]


cdef list _bpow_small(list a, object k, Py_ssize_t r, i64 beta, i64 n):
    cdef i64* base = _load([], r)
    cdef i64* acc = _load([], r)
    cdef i64* scratch = _load([], 2 * r)
    cdef Py_ssize_t i
    try:
        red = _breduce_generic(a, r, beta, n)
        for i in range(len(red)):
            base[i] = red[i]
        if k == 0:
            return [1]
        for i in range(r):
            acc[i] = base[i]
        for bit in bin(k)[3:]:
            _bmul(acc, acc, acc, scratch, r, beta, n)
            if bit == "1":
                _bmul(acc, base, acc, scratch, r, beta, n)
        return _store(acc, r)
    finally:
        free(base); free(acc); free(scratch)


# -------------------------------------------------------------- generic path

cdef list _breduce_generic(list a, Py_ssize_t r, object beta, object n):
    if len(a) <= r:
        return trim([c % n for c in a])
    res = list(a)
    cdef Py_ssize_t i
    for i in range(len(res) - 1, r - 1, -1):
        if res[i]:
            res[i - r] += beta * res[i]
    return trim([c % n for c in res[:r]])


cdef list _mul_generic(list a, list b, object n):
    if not a or not b:
        return []
    cdef Py_ssize_t i, j, la = len(a), lb = len(b)
    res = [0] * (la + lb - 1)
    for i in range(la):
        ai = a[i]
        if ai:
            for j in range(lb):
                res[i + j] += ai * b[j]
    return trim([c % n for c in res])


cdef tuple _divmod_generic(list a, list b, object n, bint want_q):
    if not b:
        raise ZeroDivisionError("polynomial division by zero")
    cdef Py_ssize_t db = len(b) - 1, i, j, off
    if len(a) <= db:
        return [], list(a)
    inv = _inv(b[db], n)
    r = list(a)
    q = [0] * (len(a) - db) if want_q else None
    for i in range(len(a) - 1, db - 1, -1):
        c = r[i] % n
        if c:
            c = c * inv % n
            off = i - db
            if want_q:
                q[off] = c
            for j in range(db):
                r[off + j] -= c * b[j]
    return q, trim([c % n for c in r[:db]])


cdef list _bmul_generic(list a, list b, Py_ssize_t r, object beta, object n):
    if not a or not b:
        return []
    cdef Py_ssize_t i, j
    res = [0] * (len(a) + len(b) - 1)
    for i in range(len(a)):
        ai = a[i]
        if ai:
            for j in range(len(b)):
                res[i + j] += ai * b[j]
    for i in range(len(res) - 1, r - 1, -1):
        if res[i]:
            res[i - r] += beta * (res[i] % n)
    del res[r:]
    return trim([c % n for c in res])


# ------------------------------------------------------------------- public

def poly_mul(list a, list b, n):
    if n < SMALL:
        return _mul_small(a, b, n)
    return _mul_generic(a, b, n)


def poly_divmod(list a, list b, n):
    if n < SMALL:
        return _divmod_small(a, b, n)
    return _divmod_generic(a, b, n, True)


def poly_rem(list a, list b, n):
    if n < SMALL:
        return _rem_small(a, b, n)
    return _divmod_generic(a, b, n, False)[1]


def poly_monic(list a, n):
    if not a or a[len(a) - 1] == 1:
        return list(a)
    inv = _inv(a[len(a) - 1], n)
    return [c * inv % n for c in a]


def poly_gcd(list a, list b, n):
    if n < SMALL:
        return _gcd_small(a, b, n)
    if not a and not b:
        raise ValueError("gcd(0, 0) is undefined")
    a, b = list(a), list(b)
    while b:
        a, b = b, _divmod_generic(a, b, n, False)[1]
    return poly_monic(a, n)


def binom_reduce(list a, Py_ssize_t r, beta, n):
    return _breduce_generic(a, r, beta, n)


def binom_mul(list a, list b, Py_ssize_t r, beta, n):
    return _bmul_generic(a, b, r, beta, n)


def binom_pow(list a, k, Py_ssize_t r, beta, n):
    if n < SMALL:
        return _bpow_small(a, k, r, beta, n)
    a = _breduce_generic(a, r, beta, n)
    if k == 0:
        return [1]
    result = a
    for bit in bin(k)[3:]:
        result = _bmul_generic(result, result, r, beta, n)
        if bit == "1":
            result = _bmul_generic(result, a, r, beta, n)
    return result


def poly_powmod(list a, k, list m, n):
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
