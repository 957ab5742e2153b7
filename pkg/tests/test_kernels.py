"""Compiled and pure-Python kernels must agree exactly."""
import importlib
import os
import random
import subprocess
import sys

import pytest

from ffroots import _pykernels, kernels
from ffroots.errors import ZeroDivisorWitness

try:
    _compiled = importlib.import_module("ffroots._kernels")
except ImportError:  # pragma: no cover - extension not built
    _compiled = None

needs_ext = pytest.mark.skipif(_compiled is None, reason="compiled kernels not built")

MODULI = [2, 3, 13, 97, 10, 2**31 - 1, 2**31 + 11, 2**40 + 15, 2**61 - 1, 2**127 - 1]


def rand_poly(rng, n, size):
    c = [rng.randrange(n) for _ in range(size)]
    while c and not c[-1]:
        c.pop()
    return c


def test_backend_is_reported():
    assert kernels.BACKEND in ("compiled", "python")


@needs_ext
def test_compiled_backend_selected_by_default():
    assert kernels.BACKEND == "compiled"


def _call(mod, name, *args):
    try:
        return ("ok", getattr(mod, name)(*args))
    except ZeroDivisorWitness as w:
        return ("zd", w.g)
    except ZeroDivisionError:
        return ("zero", None)


@needs_ext
@pytest.mark.parametrize("n", MODULI)
def test_backends_agree(n):
    rng = random.Random(n)
    for _ in range(150):
        a = rand_poly(rng, n, rng.randrange(0, 14))
        b = rand_poly(rng, n, rng.randrange(0, 9))
        for name, args in [
            ("poly_mul", (a, b, n)),
            ("poly_divmod", (a, b, n)),
            ("poly_rem", (a, b, n)),
            ("poly_monic", (a, n)),
        ]:
            assert _call(_compiled, name, *args) == _call(_pykernels, name, *args), name
        if a or b:
            assert _call(_compiled, "poly_gcd", a, b, n) == _call(_pykernels, "poly_gcd", a, b, n)
        r = rng.choice([2, 3, 5, 7, 11])
        beta = rng.randrange(n)
        k = rng.randrange(0, 10**6)
        x = rand_poly(rng, n, r)
        y = rand_poly(rng, n, r)
        assert _compiled.binom_pow(a, k, r, beta, n) == _pykernels.binom_pow(a, k, r, beta, n)
        assert _compiled.binom_mul(x, y, r, beta, n) == _pykernels.binom_mul(x, y, r, beta, n)
        assert _compiled.binom_reduce(a, r, beta, n) == _pykernels.binom_reduce(a, r, beta, n)
        if b:
            m = b + [1]
            got = _call(_compiled, "poly_powmod", a, k, m, n)
            assert got == _call(_pykernels, "poly_powmod", a, k, m, n)


@pytest.mark.parametrize("mod", [_pykernels] + ([_compiled] if _compiled else []))
def test_binomial_power_matches_general_reduction(mod):
    rng = random.Random(7)
    for n in (13, 2**61 - 1):
        for _ in range(40):
            r = rng.choice([2, 3, 5])
            beta = rng.randrange(1, n)
            a = rand_poly(rng, n, r)
            k = rng.randrange(0, 5000)
            modpoly = [(-beta) % n] + [0] * (r - 1) + [1]
            assert mod.binom_pow(a, k, r, beta, n) == mod.poly_powmod(a, k, modpoly, n)


@pytest.mark.parametrize("mod", [_pykernels] + ([_compiled] if _compiled else []))
def test_zero_divisor_surfaces(mod):
    with pytest.raises(ZeroDivisorWitness) as exc:
        mod.poly_rem([0, 1], [1, 2], 10)
    assert exc.value.g == 2
    with pytest.raises(ZeroDivisorWitness):
        mod.poly_gcd([1, 0, 1], [3, 5], 15)


def test_pure_python_switch():
    out = subprocess.run(
        [sys.executable, "-c", "from ffroots import kernels; print(kernels.BACKEND)"],
        env={**os.environ, "FFROOTS_PURE_PYTHON": "1"},
        capture_output=True,
        text=True,
        check=True,
    )
    assert out.stdout.strip() == "python"
