"""Both sides of the weighted multinomial theorem for rising factorials.

For weights ``w_j`` and parameters ``a_j`` (``j = 1..r``) with ``a = sum a_j``,

    sum_{n_1+..+n_r = n} n!/(n_1!..n_r!) prod_j w_j^{n_j} (a_j)_{n_j}
        = w_p^n (a)_n F_D^(r-1)[-n, (a_j)_{j!=p}; a; (1 - w_j/w_p)_{j!=p}]

for any pivot index ``p`` with ``w_p != 0``.  The intermediate form pulls
``(a_p)_n w_p^n`` out of the left side before the Lauricella transformation
is applied.
"""

from __future__ import annotations

import random
import time
from dataclasses import dataclass, field
from fractions import Fraction
from math import factorial
from typing import Sequence

from .compositions import Mode, separable_sum
from .exact import DegenerateParameterError, as_rational, degenerate_index, format_rational, rising_factorial
from .lauricella import LauricellaSpec, pochhammer_power_table, fd_sum


@dataclass(frozen=True)
class IdentityCase:
    """One instance of the identity.  ``pivot`` is a 0-based index; None picks
    the weight of largest magnitude."""

    n: int
    a: tuple[Fraction, ...]
    w: tuple[Fraction, ...]
    pivot: int | None = None

    def __post_init__(self):
        if isinstance(self.n, bool) or not isinstance(self.n, int) or self.n < 0:
            raise ValueError(f"n must be a natural number, got {self.n!r}")
        a = tuple(as_rational(v) for v in self.a)
        w = tuple(as_rational(v) for v in self.w)
        if len(a) != len(w):
            raise ValueError(f"a has {len(a)} entries but w has {len(w)}")
        if len(a) < 2:
            raise ValueError(f"need at least two parameters, got {len(a)}")
        object.__setattr__(self, "a", a)
        object.__setattr__(self, "w", w)
        pivot = self.pivot
        if pivot is None:
            pivot = max(range(len(w)), key=lambda j: abs(w[j]))
        if not 0 <= pivot < len(w):
            raise ValueError(f"pivot {pivot} out of range for r={len(w)}")
        if w[pivot] == 0:
            raise ValueError(f"weight at pivot {pivot} is zero")
        object.__setattr__(self, "pivot", pivot)

    @property
    def r(self) -> int:
        return len(self.a)

    def with_pivot(self, pivot: int) -> IdentityCase:
        return IdentityCase(self.n, self.a, self.w, pivot)

    def to_json(self) -> dict:
        return {
            "n": self.n,
            "a": [format_rational(v) for v in self.a],
            "w": [format_rational(v) for v in self.w],
            "pivot": self.pivot + 1,
        }


@dataclass
class VerificationReport:
    case: IdentityCase
    lhs: Fraction
    rhs: Fraction | None
    intermediate: Fraction | None
    lhs_terms: int
    rhs_terms: int
    elapsed_ns: dict[str, int] = field(default_factory=dict)
    notes: list[str] = field(default_factory=list)

    @property
    def equal(self) -> bool:
        return self.rhs is not None and self.lhs == self.rhs

    @property
    def chain_equal(self) -> bool | None:
        """``lhs == intermediate == rhs``; None when the intermediate is undefined."""
        if self.intermediate is None:
            return None
        return self.equal and self.intermediate == self.lhs

    def to_json(self) -> dict:
        def fmt(v):
            return None if v is None else format_rational(v)

        out = {
            "case": self.case.to_json(),
            "lhs": fmt(self.lhs),
            "rhs": fmt(self.rhs),
            "intermediate": fmt(self.intermediate),
            "equal": self.equal,
            "lhs_terms": self.lhs_terms,
            "rhs_terms": self.rhs_terms,
            "elapsed_ns": self.elapsed_ns,
        }
        if self.notes:
            out["notes"] = self.notes
        return out


def multinomial_lhs_counted(case: IdentityCase) -> tuple[Fraction, int]:
    tables = []
    denominator = 1
    for a, w in zip(case.a, case.w):
        table, d = pochhammer_power_table(a, w, case.n)
        tables.append(table)
        denominator *= d
    total, count = separable_sum(tables, case.n, Mode.EXACTLY)
    return Fraction(total * factorial(case.n), denominator), count


def multinomial_lhs(case: IdentityCase) -> Fraction:
    """Direct sum over all weak compositions of ``n`` into ``r`` parts."""
    return multinomial_lhs_counted(case)[0]


def _others(case: IdentityCase) -> list[int]:
    return [j for j in range(case.r) if j != case.pivot]


def multinomial_intermediate(case: IdentityCase) -> Fraction:
    """``(a_p)_n w_p^n F_D[-n, (a_j); 1 - a_p - n; (w_j / w_p)]``.

    Raises :class:`DegenerateParameterError` when ``a_p`` is one of
    ``0, -1, ..., -(n-1)``.
    """
    n, p = case.n, case.pivot
    ap, wp = case.a[p], case.w[p]
    c = 1 - ap - n
    if degenerate_index(c, n) is not None:
        raise DegenerateParameterError(f"intermediate form undefined: a at pivot is {ap}")
    others = _others(case)
    spec = LauricellaSpec(n, tuple(case.a[j] for j in others), c, tuple(case.w[j] / wp for j in others))
    return rising_factorial(ap, n) * wp**n * fd_sum(spec)[0]


def multinomial_rhs_counted(case: IdentityCase) -> tuple[Fraction, int]:
    n, p = case.n, case.pivot
    wp = case.w[p]
    total = sum(case.a, Fraction(0))
    if degenerate_index(total, n) is not None:
        raise DegenerateParameterError(f"closed form undefined: sum of a is {total}")
    others = _others(case)
    spec = LauricellaSpec(n, tuple(case.a[j] for j in others), total, tuple(1 - case.w[j] / wp for j in others))
    value, count = fd_sum(spec)
    return wp**n * rising_factorial(total, n) * value, count


def multinomial_rhs(case: IdentityCase) -> Fraction:
    """Closed form in terms of an ``(r-1)``-variable Lauricella polynomial."""
    return multinomial_rhs_counted(case)[0]


def verify_identity(case: IdentityCase) -> VerificationReport:
    """Evaluate every side and report; degeneracies become notes, not exceptions."""
    notes = []
    elapsed = {}

    t0 = time.perf_counter_ns()
    lhs, lhs_terms = multinomial_lhs_counted(case)
    elapsed["lhs"] = time.perf_counter_ns() - t0

    t0 = time.perf_counter_ns()
    try:
        rhs, rhs_terms = multinomial_rhs_counted(case)
    except DegenerateParameterError as exc:
        rhs, rhs_terms = None, 0
        notes.append(str(exc))
    elapsed["rhs"] = time.perf_counter_ns() - t0

    t0 = time.perf_counter_ns()
    try:
        intermediate = multinomial_intermediate(case)
    except DegenerateParameterError as exc:
        intermediate = None
        notes.append(str(exc))
    elapsed["intermediate"] = time.perf_counter_ns() - t0

    return VerificationReport(case, lhs, rhs, intermediate, lhs_terms, rhs_terms, elapsed, notes)


def _random_rational(rng: random.Random, magnitude: int, nonzero: bool = False) -> Fraction:
    while True:
        num = rng.randint(-magnitude, magnitude)
        if num or not nonzero:
            return Fraction(num, rng.randint(1, magnitude))


def generate_cases(
    seed: int,
    count: int,
    r_max: int = 5,
    n_max: int = 12,
    magnitude: int = 8,
) -> list[IdentityCase]:
    """Deterministic pseudo-random cases.

    ``r`` is uniform on ``2..r_max`` and ``n`` on ``0..n_max``; each ``a_j``
    and ``w_j`` is ``p/q`` with ``|p| <= magnitude`` and ``1 <= q <= magnitude``,
    ``w_j != 0``.  Parameter draws whose sum makes the closed form degenerate
    are redrawn.
    """
    if r_max < 2:
        raise ValueError(f"r_max must be at least 2, got {r_max}")
    rng = random.Random(seed)
    cases = []
    for _ in range(count):
        r = rng.randint(2, r_max)
        n = rng.randint(0, n_max)
        while True:
            a = tuple(_random_rational(rng, magnitude) for _ in range(r))
            if degenerate_index(sum(a, Fraction(0)), n) is None:
                break
        w = tuple(_random_rational(rng, magnitude, nonzero=True) for _ in range(r))
        cases.append(IdentityCase(n, a, w))
    return cases


def verify_many(cases: Sequence[IdentityCase], jobs: int = 1) -> list[VerificationReport]:
    """Verify cases in input order, optionally across ``jobs`` worker processes."""
    if jobs <= 1 or len(cases) < 2:
        return [verify_identity(c) for c in cases]
    from concurrent.futures import ProcessPoolExecutor

    with ProcessPoolExecutor(max_workers=jobs) as pool:
        return list(pool.map(verify_identity, cases, chunksize=max(1, len(cases) // (4 * jobs))))
