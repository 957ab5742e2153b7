"""Backend selection for the polynomial kernels.

The compiled extension is used when it imports; otherwise the pure-Python
module.  Setting ``FFROOTS_PURE_PYTHON=1`` forces the fallback.
"""
import os

if os.environ.get("FFROOTS_PURE_PYTHON") == "1":
    from . import _pykernels as impl
    BACKEND = "python"
else:
    try:
        from . import _kernels as impl
        BACKEND = "compiled"
    except ImportError:
        from . import _pykernels as impl
        BACKEND = "python"

poly_mul = impl.poly_mul
poly_divmod = impl.poly_divmod
poly_rem = impl.poly_rem
poly_monic = impl.poly_monic
poly_gcd = impl.poly_gcd
poly_powmod = impl.poly_powmod
binom_reduce = impl.binom_reduce
binom_mul = impl.binom_mul
binom_pow = impl.binom_pow

__all__ = [
    "BACKEND",
    "poly_mul",
    "poly_divmod",
    "poly_rem",
    "poly_monic",
    "poly_gcd",
    "poly_powmod",
    "binom_reduce",
    "binom_mul",
    "binom_pow",
]
