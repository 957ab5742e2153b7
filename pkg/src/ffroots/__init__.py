"""Deterministic finite-field root extraction."""
from .errors import (
    CompositeWitness,
    FermatFailure,
    Inconclusive,
    InputNotLinearProduct,
    NoRoot,
    NotDivisor,
    NotProth,
    ProfileError,
    ZeroDivisorWitness,
)
from .kernels import BACKEND
from .modring import FactoredInteger, Modulus, RingElement, order
from .polyring import Poly
from .rthroot import (
    FieldProfile,
    factor_group_order,
    find_zeta,
    nonresidue,
    primitive_element,
    root_from_factor,
    rth_root,
)
from .primality import PrimalityVerdict, ProthForm, decompose, is_prime, verify_verdict
from .polysolve import roots
from .ecroot import Curve, ec_nth_root, multiplication_maps, scalar_mul

__all__ = [
    "BACKEND",
    "CompositeWitness",
    "Curve",
    "FactoredInteger",
    "FermatFailure",
    "FieldProfile",
    "Inconclusive",
    "InputNotLinearProduct",
    "Modulus",
    "NoRoot",
    "NotDivisor",
    "NotProth",
    "Poly",
    "PrimalityVerdict",
    "ProfileError",
    "ProthForm",
    "RingElement",
    "ZeroDivisorWitness",
    "decompose",
    "ec_nth_root",
    "factor_group_order",
    "find_zeta",
    "is_prime",
    "multiplication_maps",
    "nonresidue",
    "order",
    "primitive_element",
    "root_from_factor",
    "roots",
    "rth_root",
    "scalar_mul",
    "verify_verdict",
]
