"""Command-line frontend.

Exit codes: 0 success, 1 negative answer (no root, no solution, composite),
2 usage or input error, 3 inconclusive.
"""
from __future__ import annotations

import argparse
import json
import sys
import time
from typing import Callable, Optional

from . import oracle
from .ecroot import Curve, ec_nth_root
from .errors import (
    CompositeWitness,
    Inconclusive,
    InputNotLinearProduct,
    NoRoot,
    NotDivisor,
    NotProth,
    ProfileError,
)
from .modring import parse_natural
from .polyring import Poly
from .polysolve import roots
from .primality import ProthForm, is_prime
from .rthroot import factor_group_order, nonresidue, primitive_element, rth_root

EXIT_OK, EXIT_NEGATIVE, EXIT_USAGE, EXIT_INCONCLUSIVE = 0, 1, 2, 3

# trial division of q - 1 stops here; larger prime factors stay in the cofactor
FACTOR_BOUND = 10**6


class _Outcome(Exception):
    """Carries a finished result and exit code out of a handler."""

    def __init__(self, code: int, result: dict, text: str):
        self.code, self.result, self.text = code, result, text


def _natural(text: str) -> int:
    try:
        return parse_natural(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"not a natural number: {text!r}") from None


def _profile(q: int, complete: bool = False):
    return factor_group_order(q, None if complete else FACTOR_BOUND)


def _fmt_point(P) -> str:
    return "infinity" if P is None else f"({P[0]}, {P[1]})"


# ---------------------------------------------------------------- handlers


def cmd_rth_root(args) -> tuple[int, dict, str]:
    trace: Optional[list] = [] if args.trace else None
    profile = _profile(args.modulus)
    try:
        x = rth_root(profile, args.r, args.beta, trace=trace)
    except NoRoot as exc:
        return EXIT_NEGATIVE, {"root": None, "reason": str(exc)}, f"no root: {exc}"
    result = {"root": x.value}
    lines = []
    if trace is not None:
        result["trace"] = trace
        lines = [_trace_line(ev) for ev in trace]
    return EXIT_OK, result, "\n".join(lines + [str(x.value)])


def _trace_line(ev: dict) -> str:
    indent = "  " * ev.get("depth", 0)
    fields = " ".join(f"{k}={v}" for k, v in ev.items() if k not in ("event", "depth", "state"))
    return f"{indent}{ev['event']}: {fields}"


def cmd_nonresidue(args):
    z = nonresidue(_profile(args.modulus), args.r)
    return EXIT_OK, {"nonresidue": z.value}, str(z.value)


def cmd_primitive(args):
    g = primitive_element(_profile(args.modulus, complete=True))
    return EXIT_OK, {"primitive": g.value}, str(g.value)


def cmd_solve(args):
    q = args.modulus
    f = Poly.parse(args.poly, q)
    found = sorted(x.value for x in roots(f, _profile(q, complete=True)))
    code = EXIT_OK if found else EXIT_NEGATIVE
    text = " ".join(map(str, found)) if found else "no roots"
    return code, {"poly": f.to_text(), "roots": found}, text


def cmd_is_prime(args):
    form = None
    parts = (args.r, args.e, args.t)
    if any(p is not None for p in parts):
        if None in parts:
            raise ValueError("--r, --e and --t must be given together")
        form = ProthForm(args.n, *parts)
    v = is_prime(args.n, form, args.scan_bound)
    code = {"prime": EXIT_OK, "composite": EXIT_NEGATIVE}.get(v.verdict, EXIT_INCONCLUSIVE)
    data = v.to_json()
    f = v.form
    text = (
        f"{v.verdict}: {v.witness_kind}={v.witness_value} "
        f"(N = {f.r}^{f.e}*{f.t} + 1)"
    )
    return code, data, text


def cmd_ec_root(args):
    curve = Curve(args.modulus, args.a4, args.a6)
    if args.q_infinity:
        Q = None
    elif args.qx is None or args.qy is None:
        raise ValueError("give --qx and --qy, or --q-infinity")
    else:
        Q = (args.qx % curve.p, args.qy % curve.p)
    pts = sorted(ec_nth_root(curve, Q, args.n))
    code = EXIT_OK if pts else EXIT_NEGATIVE
    text = " ".join(_fmt_point(P) for P in pts) if pts else "no solution"
    return code, {"Q": None if Q is None else list(Q), "points": [list(P) for P in pts]}, text


def cmd_oracle(args):
    sub = args.oracle_command
    if sub == "rth-roots":
        res = sorted(oracle.all_rth_roots(args.modulus, args.r, args.beta))
    elif sub == "nonresidues":
        res = sorted(oracle.all_nonresidues(args.modulus, args.r))
    elif sub == "orders":
        res = oracle.element_orders(args.modulus)
        return EXIT_OK, {"orders": res}, "\n".join(f"{x}: {o}" for x, o in res.items())
    elif sub == "poly-roots":
        res = sorted(oracle.poly_roots_bruteforce(Poly.parse(args.poly, args.modulus)))
    elif sub == "curve-points":
        res = [list(P) for P in oracle.curve_points(Curve(args.modulus, args.a4, args.a6))]
        return EXIT_OK, {"points": res}, " ".join(_fmt_point(P) for P in res)
    elif sub == "trial-division":
        d = oracle.trial_division(args.n)
        return EXIT_OK, {"smallest_factor": d, "prime": d == args.n}, str(d)
    else:  # pragma: no cover - argparse restricts choices
        raise ValueError(sub)
    return EXIT_OK, {"values": res}, " ".join(map(str, res))


# ---------------------------------------------------------------- parser


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="ffroots", description="Deterministic root extraction over Z/qZ."
    )
    parser.add_argument("--json", action="store_true", help="emit one JSON object")
    sub = parser.add_subparsers(dest="command", required=True)

    def command(name: str, handler: Callable, help: str) -> argparse.ArgumentParser:
        p = sub.add_parser(name, help=help)
        p.add_argument("--json", action="store_true", default=argparse.SUPPRESS,
                       help="emit one JSON object")
        p.set_defaults(handler=handler)
        return p

    p = command("rth-root", cmd_rth_root, "an r-th root of beta mod a prime")
    p.add_argument("--modulus", type=_natural, required=True)
    p.add_argument("--r", type=_natural, required=True)
    p.add_argument("--beta", type=_natural, required=True)
    p.add_argument("--trace", action="store_true", help="show the splitting steps")

    p = command("nonresidue", cmd_nonresidue, "an r-th nonresidue of maximal r-power order")
    p.add_argument("--modulus", type=_natural, required=True)
    p.add_argument("--r", type=_natural, required=True)

    p = command("primitive", cmd_primitive, "a generator of the unit group")
    p.add_argument("--modulus", type=_natural, required=True)

    p = command("solve", cmd_solve, "all roots of a polynomial")
    p.add_argument("--modulus", type=_natural, required=True)
    p.add_argument("--poly", required=True, help="coefficients, constant term first")

    p = command("is-prime", cmd_is_prime, "primality of N = r^e*t + 1 with r^e > t")
    p.add_argument("--n", type=_natural, required=True)
    p.add_argument("--r", type=_natural)
    p.add_argument("--e", type=_natural)
    p.add_argument("--t", type=_natural)
    p.add_argument("--scan-bound", type=_natural, default=10**6)

    p = command("ec-root", cmd_ec_root, "all P with nP = Q on an elliptic curve")
    p.add_argument("--modulus", type=_natural, required=True)
    p.add_argument("--a4", type=_natural, required=True)
    p.add_argument("--a6", type=_natural, required=True)
    p.add_argument("--n", type=_natural, required=True)
    p.add_argument("--qx", type=_natural)
    p.add_argument("--qy", type=_natural)
    p.add_argument("--q-infinity", action="store_true")

    p = command("oracle", cmd_oracle, "brute-force enumerations for small inputs")
    osub = p.add_subparsers(dest="oracle_command", required=True)
    o = osub.add_parser("rth-roots")
    o.add_argument("--modulus", type=_natural, required=True)
    o.add_argument("--r", type=_natural, required=True)
    o.add_argument("--beta", type=_natural, required=True)
    o = osub.add_parser("nonresidues")
    o.add_argument("--modulus", type=_natural, required=True)
    o.add_argument("--r", type=_natural, required=True)
    o = osub.add_parser("orders")
    o.add_argument("--modulus", type=_natural, required=True)
    o = osub.add_parser("poly-roots")
    o.add_argument("--modulus", type=_natural, required=True)
    o.add_argument("--poly", required=True)
    o = osub.add_parser("curve-points")
    o.add_argument("--modulus", type=_natural, required=True)
    o.add_argument("--a4", type=_natural, required=True)
    o.add_argument("--a6", type=_natural, required=True)
    o = osub.add_parser("trial-division")
    o.add_argument("--n", type=_natural, required=True)
    return parser


def _inputs(args) -> dict:
    skip = {"handler", "json", "command", "trace"}
    return {k: v for k, v in vars(args).items() if k not in skip and v is not None}


def main(argv: Optional[list[str]] = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    start = time.perf_counter()
    try:
        code, result, text = args.handler(args)
    except Inconclusive as exc:
        code, result, text = EXIT_INCONCLUSIVE, {"inconclusive": str(exc)}, f"inconclusive: {exc}"
    except CompositeWitness as exc:
        code, result, text = EXIT_NEGATIVE, {
            "composite_modulus": True,
            "witness_kind": exc.kind,
            "witness_value": exc.value,
        }, f"modulus is composite: {exc}"
    except (NotProth, NotDivisor, ProfileError, InputNotLinearProduct, ValueError) as exc:
        code, result, text = EXIT_USAGE, {"error": str(exc)}, f"error: {exc}"
    except KeyboardInterrupt:
        print(f"interrupted after {time.perf_counter() - start:.1f}s", file=sys.stderr)
        return 130
    elapsed = (time.perf_counter() - start) * 1000
    if args.json:
        record = {"command": args.command, "inputs": _inputs(args), "exit_code": code,
                  **result, "timing_ms": round(elapsed, 3)}
        print(json.dumps(record, sort_keys=True))
    else:
        out = sys.stdout if code != EXIT_USAGE else sys.stderr
        print(text, file=out)
    return code


if __name__ == "__main__":  # pragma: no cover
    sys.exit(main())
