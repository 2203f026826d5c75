"""Fourth Lauricella polynomials ``F_D^(r)[-n, b_1..b_r; c; x_1..x_r]``.

The polynomial is the sum, over weak compositions ``(n_1..n_r)`` with total
``s <= n``, of

    (-n)_s / (c)_s * prod_j (b_j)_{n_j} x_j^{n_j} / n_j!

Exact evaluation scales every factor table to integers over a common
denominator and runs the integer kernel in :mod:`hyperpoly.compositions`;
only the final quotient is reduced.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterator, Sequence

from .compositions import Mode, separable_sum, separable_terms
from .exact import (
    DegenerateParameterError,
    TransformationUndefined,
    as_rational,
    check_denominator,
    degenerate_index,
    rising_factorial,
)
from .gauss import Gauss2F1Spec

#: Absolute distance from a degenerate non-positive integer below which the
#: float path refuses to evaluate.
FLOAT_DEGENERACY_TOL = 1e-12


@dataclass(frozen=True)
class LauricellaSpec:
    n: int
    b: tuple[Fraction, ...]
    c: Fraction
    x: tuple[Fraction, ...]

    def __post_init__(self):
        if isinstance(self.n, bool) or not isinstance(self.n, int) or self.n < 0:
            raise ValueError(f"degree must be a natural number, got {self.n!r}")
        b = tuple(as_rational(v) for v in self.b)
        x = tuple(as_rational(v) for v in self.x)
        if len(b) != len(x):
            raise ValueError(f"b has {len(b)} entries but x has {len(x)}")
        if not b:
            raise ValueError("F_D needs at least one variable")
        object.__setattr__(self, "b", b)
        object.__setattr__(self, "x", x)
        object.__setattr__(self, "c", as_rational(self.c))

    @property
    def r(self) -> int:
        return len(self.b)


def pochhammer_power_table(b: Fraction, x: Fraction, n: int) -> tuple[list[int], int]:
    """Integers ``H[m]`` and ``D`` with ``(b)_m x^m / m! == H[m] / D`` for ``m <= n``."""
    p, q = b.numerator, b.denominator
    u, v = x.numerator, x.denominator
    qv = q * v
    # falling pieces indexed by m: (qv)^(n-m) * n!/m!
    tail = [1] * (n + 1)
    for m in range(n - 1, -1, -1):
        tail[m] = tail[m + 1] * qv * (m + 1)
    table = []
    head = 1  # prod_{i<m} (p + i q) * u^m
    for m in range(n + 1):
        table.append(head * tail[m])
        head *= (p + m * q) * u
    return table, tail[0]


def _outer_table(n: int, c: Fraction) -> tuple[list[int], int]:
    """Integers ``G[s]`` and ``D`` with ``(-n)_s / (c)_s == G[s] / D`` for ``s <= n``."""
    p, q = c.numerator, c.denominator
    tail = [1] * (n + 1)  # prod_{i=s}^{n-1} (p + i q)
    for s in range(n - 1, -1, -1):
        tail[s] = tail[s + 1] * (p + s * q)
    table = []
    head = 1  # (-n)_s q^s
    for s in range(n + 1):
        table.append(head * tail[s])
        head *= (s - n) * q
    return table, tail[0]


def fd_sum(spec: LauricellaSpec) -> tuple[Fraction, int]:
    """Exact value of the polynomial together with the number of terms summed."""
    check_denominator(spec.c, spec.n)
    tables = []
    denominator = 1
    for b, x in zip(spec.b, spec.x):
        table, d = pochhammer_power_table(b, x, spec.n)
        tables.append(table)
        denominator *= d
    outer, d = _outer_table(spec.n, spec.c)
    total, count = separable_sum(tables, spec.n, Mode.AT_MOST, outer)
    return Fraction(total, denominator * d), count


def eval_fd_exact(spec: LauricellaSpec) -> Fraction:
    return fd_sum(spec)[0]


def fd_terms(spec: LauricellaSpec) -> Iterator[tuple[tuple[int, ...], Fraction]]:
    """Individual terms in colex order, built incrementally in exact arithmetic."""
    check_denominator(spec.c, spec.n)
    n = spec.n
    tables = []
    for b, x in zip(spec.b, spec.x):
        t = [Fraction(1)]
        for m in range(n):
            t.append(t[-1] * (b + m) * x / (m + 1))
        tables.append(t)
    outer = [Fraction(1)]
    for s in range(n):
        outer.append(outer[-1] * (s - n) / (spec.c + s))
    return separable_terms(tables, n, Mode.AT_MOST, outer)


def fd_term(spec: LauricellaSpec, parts: Sequence[int]) -> Fraction:
    """One term computed from scratch."""
    s = sum(parts)
    term = rising_factorial(-spec.n, s) / rising_factorial(spec.c, s)
    for b, x, m in zip(spec.b, spec.x, parts):
        term *= rising_factorial(b, m) * x**m / math.factorial(m)
    return term


def _check_float_denominator(c: float, n: int) -> None:
    nearest = round(c)
    if -(n - 1) <= nearest <= 0 and abs(c - nearest) <= FLOAT_DEGENERACY_TOL:
        raise DegenerateParameterError(
            f"denominator parameter degenerate: c={c!r} is within {FLOAT_DEGENERACY_TOL} of {nearest}",
            k=1 - nearest,
        )


def eval_fd_float(n: int, b: Sequence[float], c: float, x: Sequence[float]) -> tuple[float, float]:
    """Binary64 evaluation of the same sum.

    Returns ``(value, condition)`` where ``value`` is the correctly rounded
    sum of the float terms and ``condition = sum|t| / |sum t|`` (infinite
    when the sum is zero).
    """
    b = [float(v) for v in b]
    x = [float(v) for v in x]
    c = float(c)
    if len(b) != len(x) or not b:
        raise ValueError(f"b and x must be non-empty and equally long, got {len(b)} and {len(x)}")
    if n < 0:
        raise ValueError(f"degree must be non-negative, got {n}")
    _check_float_denominator(c, n)
    tables = []
    for bj, xj in zip(b, x):
        t = [1.0]
        for m in range(n):
            t.append(t[-1] * (bj + m) * xj / (m + 1))
        tables.append(t)
    outer = [1.0]
    for s in range(n):
        outer.append(outer[-1] * (s - n) / (c + s))
    terms = [t for _, t in separable_terms(tables, n, Mode.AT_MOST, outer)]
    value = math.fsum(terms)
    magnitude = math.fsum(abs(t) for t in terms)
    condition = magnitude / abs(value) if value else math.inf
    return value, condition


def toscano_transform(spec: LauricellaSpec) -> tuple[Fraction, LauricellaSpec]:
    """Map every ``x_j -> 1 - x_j``.

    Returns ``(factor, transformed)`` with
    ``eval_fd_exact(spec) == factor * eval_fd_exact(transformed)``, where
    ``factor = (c - sum b)_n / (c)_n`` and the new denominator parameter is
    ``1 + sum b - n - c``.
    """
    n, c = spec.n, spec.c
    check_denominator(c, n)
    bsum = sum(spec.b, Fraction(0))
    c_new = 1 + bsum - n - c
    k = degenerate_index(c_new, n)
    if k is not None:
        raise TransformationUndefined(
            f"transformation undefined for these parameters: new denominator parameter {c_new} is degenerate",
            k=k,
        )
    factor = rising_factorial(c - bsum, n) / rising_factorial(c, n)
    return factor, LauricellaSpec(n, spec.b, c_new, tuple(1 - xj for xj in spec.x))


def reduce_to_2f1(spec: LauricellaSpec) -> Gauss2F1Spec:
    if spec.r != 1:
        raise ValueError(f"only a single-variable F_D reduces to 2F1, got r={spec.r}")
    return Gauss2F1Spec(spec.n, spec.b[0], spec.c, spec.x[0])
