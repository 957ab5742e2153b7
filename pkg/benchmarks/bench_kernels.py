"""Compare the compiled kernels with the pure-Python fallback.

Run with ``python benchmarks/bench_kernels.py``.  Kernel timings import both
backends directly; the end-to-end timings run each backend in a subprocess,
since the backend is fixed when ffroots is imported.
"""
import argparse
import json
import os
import random
import subprocess
import sys
import timeit

from ffroots import _pykernels

try:
    from ffroots import _kernels
except ImportError:
    _kernels = None

Q = 1_000_000_007


def _best(fn, repeat: int) -> float:
    number = 1
    while timeit.timeit(fn, number=number) < 0.05:
        number *= 2
    return min(timeit.repeat(fn, number=number, repeat=repeat)) / number


def kernel_workloads(seed: int = 1):
    rng = random.Random(seed)
    a = [rng.randrange(Q) for _ in range(200)]
    b = [rng.randrange(Q) for _ in range(150)] + [1]
    m = [rng.randrange(Q) for _ in range(64)] + [1]
    x = [rng.randrange(Q) for _ in range(7)]
    beta = rng.randrange(1, Q)
    return {
        "poly_mul 200x151": lambda k: k.poly_mul(a, b, Q),
        "poly_rem 200/151": lambda k: k.poly_rem(a, b, Q),
        "poly_gcd 200,151": lambda k: k.poly_gcd(a, b, Q),
        "poly_powmod deg 64": lambda k: k.poly_powmod([0, 1], Q, m, Q),
        "binom_pow r=7": lambda k: k.binom_pow(x, Q - 1, 7, beta, Q),
    }


END_TO_END = """
import json, time
from ffroots import BACKEND, factor_group_order, is_prime, rth_root
from ffroots.polyring import Poly
from ffroots.polysolve import roots
t0 = time.perf_counter()
prof = factor_group_order(7681)
for b in range(1, 400):
    try:
        rth_root(prof, 2, b * b)
        rth_root(prof, 3, pow(b, 3, 7681))
    except Exception:
        pass
t1 = time.perf_counter()
is_prime(3 * 2**408 + 1)
t2 = time.perf_counter()
prof = factor_group_order(12289)
for s in range(20):
    roots(Poly.from_roots(range(s, s + 40), 12289), prof)
t3 = time.perf_counter()
print(json.dumps({"backend": BACKEND, "rth_root x798": t1 - t0,
                  "is_prime 3*2^408+1": t2 - t1, "roots deg 40 x20": t3 - t2}))
"""


def end_to_end(pure: bool) -> dict:
    env = dict(os.environ)
    env["FFROOTS_PURE_PYTHON"] = "1" if pure else "0"
    out = subprocess.run([sys.executable, "-c", END_TO_END], env=env,
                         capture_output=True, text=True, check=True)
    return json.loads(out.stdout)


def main() -> None:
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--repeat", type=int, default=5)
    args = parser.parse_args()
    if _kernels is None:
        sys.exit("compiled kernels are not built; run pip install -e . --no-build-isolation")

    print(f"{'kernel':24} {'python':>12} {'compiled':>12} {'speedup':>8}")
    for name, work in kernel_workloads().items():
        slow = _best(lambda: work(_pykernels), args.repeat)
        fast = _best(lambda: work(_kernels), args.repeat)
        print(f"{name:24} {slow * 1e6:10.1f}us {fast * 1e6:10.1f}us {slow / fast:7.1f}x")

    pure, compiled = end_to_end(True), end_to_end(False)
    assert pure.pop("backend") == "python" and compiled.pop("backend") == "compiled"
    print()
    print(f"{'end to end':24} {'python':>12} {'compiled':>12} {'speedup':>8}")
    for name in pure:
        print(f"{name:24} {pure[name] * 1e3:10.1f}ms {compiled[name] * 1e3:10.1f}ms "
              f"{pure[name] / compiled[name]:7.1f}x")


if __name__ == "__main__":
    main()
