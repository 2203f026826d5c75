"""Command line front end.

    hyperpoly eval poch --x 1/2 --n 3
    hyperpoly eval fd --n 6 --b 1/2,1/3 --c 3 --x 1/4,1/5 --mode float
    hyperpoly verify multinomial --trials 500 --seed 42 --r-max 5 --n-max 12
    hyperpoly bench multinomial --n 60 --r 5

Exit status: 0 success, 1 input error, 2 degenerate parameters,
3 an identity check came out unequal.
"""

from __future__ import annotations

import argparse
import json
import math
import random
import re
import sys
import time
from fractions import Fraction
from typing import Callable, Sequence, TextIO

from .compositions import weak_compositions
from .exact import (
    DegenerateParameterError,
    binomial,
    degenerate_index,
    format_rational,
    multinomial,
    neg_n_pochhammer_ratio,
    parse_rational,
    rising_factorial,
    tail_pochhammer,
)
from .gauss import Gauss2F1Spec, chu_vandermonde_pair, eval_2f1, gauss_sum, transform_2f1
from .identities import (
    IdentityCase,
    generate_cases,
    multinomial_intermediate,
    multinomial_lhs_counted,
    multinomial_rhs_counted,
    verify_identity,
    verify_many,
)
from .lauricella import LauricellaSpec, eval_fd_exact, eval_fd_float, fd_sum, toscano_transform

EXIT_OK = 0
EXIT_INPUT = 1
EXIT_DEGENERATE = 2
EXIT_UNEQUAL = 3

VERBS = ("eval", "verify", "bench")
SUBJECTS = ("poch", "2f1", "fd", "cv", "multinomial")
BENCH_SUBJECTS = ("fd", "multinomial")


_NEGATIVE_VALUE = re.compile(r"-\d")


class InputError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise InputError(message)


def _rational(text: str) -> Fraction:
    try:
        return parse_rational(text)
    except ValueError as exc:
        raise argparse.ArgumentTypeError(str(exc)) from None


def _vector(text: str) -> tuple[Fraction, ...]:
    return tuple(_rational(part) for part in text.split(","))


def _natural(text: str) -> int:
    try:
        value = int(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected a non-negative integer, got {text!r}") from None
    if value < 0:
        raise argparse.ArgumentTypeError(f"expected a non-negative integer, got {text!r}")
    return value


def build_parser() -> argparse.ArgumentParser:
    p = _Parser(prog="hyperpoly", description="Exact hypergeometric and Lauricella polynomial identities.")
    p.add_argument("verb", choices=VERBS)
    p.add_argument("subject", choices=SUBJECTS)
    p.add_argument("--n", type=_natural)
    p.add_argument("--b", type=_vector, help="comma-separated rationals")
    p.add_argument("--c", type=_rational)
    p.add_argument("--x", type=_vector, help="rational, or comma-separated rationals for fd")
    p.add_argument("--a", type=_vector)
    p.add_argument("--w", type=_vector)
    p.add_argument("--alpha", type=_rational)
    p.add_argument("--beta", type=_rational)
    p.add_argument("--z", type=_rational)
    p.add_argument("--pivot", type=int, help="1-based index of the distinguished weight")
    p.add_argument("--r", type=_natural, help="number of variables for bench")
    p.add_argument("--mode", choices=("exact", "float"), default="exact")
    p.add_argument("--trials", type=_natural)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--r-max", type=_natural, default=5)
    p.add_argument("--n-max", type=_natural, default=12)
    p.add_argument("--magnitude", type=_natural, default=8, help="bound on random numerators and denominators")
    p.add_argument("--jobs", type=_natural, default=1)
    p.add_argument("--output", choices=("json", "plain"), default="json")
    return p


def _require(args, *names: str) -> None:
    missing = [f"--{name.replace('_', '-')}" for name in names if getattr(args, name) is None]
    if missing:
        raise InputError(f"{args.verb} {args.subject} requires {', '.join(missing)}")


def _scalar(args, name: str) -> Fraction:
    value = getattr(args, name)
    if len(value) != 1:
        raise InputError(f"--{name} takes a single rational for {args.subject}")
    return value[0]


def _fmt(value):
    if isinstance(value, Fraction):
        return format_rational(value)
    if isinstance(value, float) and not math.isfinite(value):
        return "inf" if value > 0 else ("-inf" if value < 0 else "nan")
    return value


def _exact_only(args) -> None:
    if args.mode != "exact":
        raise InputError(f"--mode float is not available for {args.verb} {args.subject}")


# -- eval ---------------------------------------------------------------------


def _eval(args) -> list[dict]:
    s = args.subject
    if s == "poch":
        _require(args, "x", "n")
        _exact_only(args)
        return [{"value": rising_factorial(_scalar(args, "x"), args.n)}]
    if s == "2f1":
        _require(args, "n", "b", "c", "x")
        b, x = _scalar(args, "b"), _scalar(args, "x")
        if args.mode == "float":
            value, cond = eval_fd_float(args.n, [b], args.c, [x])
            return [{"value": value, "condition": cond}]
        return [{"value": eval_2f1(Gauss2F1Spec(args.n, b, args.c, x))}]
    if s == "fd":
        _require(args, "n", "b", "c", "x")
        spec = _fd_spec(args)
        if args.mode == "float":
            value, cond = eval_fd_float(spec.n, spec.b, spec.c, spec.x)
            return [{"value": value, "condition": cond}]
        return [{"value": eval_fd_exact(spec)}]
    if s == "cv":
        _require(args, "alpha", "beta", "w", "z", "n")
        _exact_only(args)
        lhs, rhs = chu_vandermonde_pair(args.alpha, args.beta, _scalar(args, "w"), args.z, args.n)
        return [{"lhs": lhs, "rhs": rhs}]
    _require(args, "n", "a", "w")
    _exact_only(args)
    case = _case(args)
    out = {"lhs": multinomial_lhs_counted(case)[0]}
    try:
        out["intermediate"] = multinomial_intermediate(case)
    except DegenerateParameterError:
        out["intermediate"] = None
    out["rhs"] = multinomial_rhs_counted(case)[0]
    return [out]


def _fd_spec(args) -> LauricellaSpec:
    if len(args.b) != len(args.x):
        raise InputError(f"--b has {len(args.b)} entries but --x has {len(args.x)}")
    return LauricellaSpec(args.n, args.b, args.c, args.x)


def _case(args) -> IdentityCase:
    if len(args.a) != len(args.w):
        raise InputError(f"--a has {len(args.a)} entries but --w has {len(args.w)}")
    pivot = None if args.pivot is None else args.pivot - 1
    try:
        return IdentityCase(args.n, args.a, args.w, pivot)
    except ValueError as exc:
        raise InputError(str(exc)) from None


# -- verify -------------------------------------------------------------------


def _check(name: str, lhs, rhs, note: str | None = None) -> dict:
    out = {"identity": name, "lhs": lhs, "rhs": rhs, "equal": rhs is not None and lhs == rhs}
    if note:
        out["note"] = note
    return out


def _verify_poch(args) -> list[dict]:
    _require(args, "n")
    n = args.n
    x = _scalar(args, "x") if args.x is not None else Fraction(1, 2)
    checks = {"binomial": [], "falling_ratio": [], "tail": [], "multinomial": [], "shift": []}
    xn = rising_factorial(x, n)
    for k in range(n + 1):
        signed = (-1) ** k * rising_factorial(-n, k)
        checks["binomial"].append(binomial(n, k) * math.factorial(k) == signed)
        checks["falling_ratio"].append(neg_n_pochhammer_ratio(n, k) == signed)
        shifted = rising_factorial(1 - x - n, k)
        if shifted:
            checks["tail"].append(tail_pochhammer(x, n, k) == (-1) ** k * xn / shifted)
            checks["shift"].append(rising_factorial(x, n - k) * shifted == (-1) ** k * xn)
    r = args.r or 3
    for parts in weak_compositions(r, n):
        s = sum(parts[:-1])
        rhs = (-1) ** s * rising_factorial(-n, s) / math.prod(math.factorial(m) for m in parts[:-1])
        checks["multinomial"].append(multinomial(n, parts) == rhs)
    return [
        {"identity": name, "n": n, "x": x, "checked": len(results), "equal": all(results)}
        for name, results in checks.items()
    ]


def _verify(args) -> list[dict]:
    s = args.subject
    _exact_only(args)
    if s == "poch":
        return _verify_poch(args)
    if s == "2f1":
        _require(args, "n", "b", "c", "x")
        spec = Gauss2F1Spec(args.n, _scalar(args, "b"), args.c, _scalar(args, "x"))
        value = eval_2f1(spec)
        try:
            factor, other = transform_2f1(spec)
            transform = _check("transform", value, factor * eval_2f1(other))
        except DegenerateParameterError as exc:
            transform = _check("transform", value, None, str(exc))
        at_one = Gauss2F1Spec(spec.n, spec.b, spec.c, 1)
        return [transform, _check("gauss_sum", eval_2f1(at_one), gauss_sum(spec.n, spec.b, spec.c))]
    if s == "fd":
        _require(args, "n", "b", "c", "x")
        spec = _fd_spec(args)
        value = eval_fd_exact(spec)
        try:
            factor, other = toscano_transform(spec)
            return [_check("toscano", value, factor * eval_fd_exact(other))]
        except DegenerateParameterError as exc:
            return [_check("toscano", value, None, str(exc))]
    if s == "cv":
        _require(args, "alpha", "beta", "w", "z", "n")
        lhs, rhs = chu_vandermonde_pair(args.alpha, args.beta, _scalar(args, "w"), args.z, args.n)
        note = None if rhs is not None else "closed form undefined for these parameters"
        return [_check("chu_vandermonde", lhs, rhs, note)]
    if args.trials is not None:
        if args.r_max < 2:
            raise InputError("--r-max must be at least 2")
        cases = generate_cases(args.seed, args.trials, args.r_max, args.n_max, args.magnitude)
        return [rep.to_json() for rep in verify_many(cases, args.jobs)]
    _require(args, "n", "a", "w")
    return [verify_identity(_case(args)).to_json()]


# -- bench --------------------------------------------------------------------


def _random_nondegenerate(rng: random.Random, magnitude: int, n: int) -> Fraction:
    while True:
        v = Fraction(rng.randint(-magnitude, magnitude), rng.randint(1, magnitude))
        if degenerate_index(v, n) is None:
            return v


def _bench(args) -> list[dict]:
    if args.subject not in BENCH_SUBJECTS:
        raise InputError(f"bench accepts {' and '.join(BENCH_SUBJECTS)} only, got {args.subject}")
    _exact_only(args)
    _require(args, "n")
    rng = random.Random(args.seed)
    m = args.magnitude
    n = args.n

    def vec(given, name, r, nonzero=False):
        if given is not None:
            return given
        if r is None:
            raise InputError(f"bench {args.subject} requires --r or --{name}")
        out = []
        while len(out) < r:
            v = Fraction(rng.randint(-m, m), rng.randint(1, m))
            if v or not nonzero:
                out.append(v)
        return tuple(out)

    if args.subject == "fd":
        b = vec(args.b, "b", args.r)
        x = vec(args.x, "x", len(b))
        c = args.c if args.c is not None else _random_nondegenerate(rng, m, n)
        spec = LauricellaSpec(n, b, c, x)
        t0 = time.perf_counter_ns()
        value, terms = fd_sum(spec)
        elapsed = time.perf_counter_ns() - t0
        return [
            {
                "subject": "fd",
                "n": n,
                "r": spec.r,
                "terms": terms,
                "elapsed_ns": elapsed,
                "terms_per_second": terms / max(elapsed, 1) * 1e9,
                "value_bits": value.numerator.bit_length() + value.denominator.bit_length(),
            }
        ]

    a = vec(args.a, "a", args.r)
    if args.a is None:
        while degenerate_index(sum(a, Fraction(0)), n) is not None:
            a = vec(None, "a", args.r)
    w = vec(args.w, "w", len(a), nonzero=True)
    if len(a) != len(w):
        raise InputError(f"--a has {len(a)} entries but --w has {len(w)}")
    case = IdentityCase(n, a, w, None if args.pivot is None else args.pivot - 1)
    t0 = time.perf_counter_ns()
    lhs, lhs_terms = multinomial_lhs_counted(case)
    t1 = time.perf_counter_ns()
    rhs, rhs_terms = multinomial_rhs_counted(case)
    t2 = time.perf_counter_ns()
    total = t2 - t0
    return [
        {
            "subject": "multinomial",
            "n": n,
            "r": case.r,
            "lhs_terms": lhs_terms,
            "rhs_terms": rhs_terms,
            "equal": lhs == rhs,
            "elapsed_ns": {"lhs": t1 - t0, "rhs": t2 - t1, "total": total},
            "terms_per_second": (lhs_terms + rhs_terms) / max(total, 1) * 1e9,
        }
    ]


# -- driver -------------------------------------------------------------------

_DISPATCH: dict[str, Callable[[argparse.Namespace], list[dict]]] = {
    "eval": _eval,
    "verify": _verify,
    "bench": _bench,
}


def _emit(results: list[dict], output: str, stream: TextIO) -> None:
    for res in results:
        res = {k: _jsonable(v) for k, v in res.items()}
        if output == "json":
            stream.write(json.dumps(res, separators=(",", ":")) + "\n")
        elif len(res) == 1:
            stream.write(f"{next(iter(res.values()))}\n")
        else:
            stream.write(" ".join(f"{k}={json.dumps(v, separators=(',', ':'))}" for k, v in res.items()) + "\n")


def _jsonable(value):
    if isinstance(value, dict):
        return {k: _jsonable(v) for k, v in value.items()}
    if isinstance(value, (list, tuple)):
        return [_jsonable(v) for v in value]
    return _fmt(value)


def _attach_negative_values(argv: Sequence[str]) -> list[str]:
    """Turn ``--x -1/2`` into ``--x=-1/2``; argparse would read ``-1/2`` as a flag."""
    out: list[str] = []
    it = iter(argv)
    for token in it:
        out.append(token)
        if token.startswith("--") and "=" not in token:
            nxt = next(it, None)
            if nxt is None:
                break
            if _NEGATIVE_VALUE.match(nxt):
                out[-1] = f"{token}={nxt}"
            else:
                out.append(nxt)
    return out


def _status(results: list[dict]) -> int:
    unequal = degenerate = False
    for res in results:
        if res.get("equal") is False:
            if "rhs" in res and res["rhs"] is None:
                degenerate = True
            else:
                unequal = True
    if unequal:
        return EXIT_UNEQUAL
    return EXIT_DEGENERATE if degenerate else EXIT_OK


def run(argv: Sequence[str] | None = None, stdout: TextIO | None = None, stderr: TextIO | None = None) -> int:
    stdout = stdout or sys.stdout
    stderr = stderr or sys.stderr
    argv = sys.argv[1:] if argv is None else argv
    try:
        args = build_parser().parse_args(_attach_negative_values(argv))
        results = _DISPATCH[args.verb](args)
    except InputError as exc:
        stderr.write(f"hyperpoly: error: {exc}\n")
        return EXIT_INPUT
    except DegenerateParameterError as exc:
        stderr.write(f"hyperpoly: {exc}\n")
        return EXIT_DEGENERATE
    except ValueError as exc:
        stderr.write(f"hyperpoly: error: {exc}\n")
        return EXIT_INPUT
    _emit(results, args.output, stdout)
    return _status(results)


def main() -> None:
    sys.exit(run())


if __name__ == "__main__":
    main()
