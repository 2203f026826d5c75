"""Terminating Gauss hypergeometric polynomials ``2F1(-n, b; c; x)``."""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .exact import (
    RationalLike,
    TransformationUndefined,
    as_rational,
    binomial,
    check_denominator,
    degenerate_index,
    rising_factorial,
    tail_pochhammer,
)


@dataclass(frozen=True)
class Gauss2F1Spec:
    """Parameters of ``2F1(-n, b; c; x)``; ``n`` is the degree."""

    n: int
    b: Fraction
    c: Fraction
    x: Fraction

    def __post_init__(self):
        if isinstance(self.n, bool) or not isinstance(self.n, int) or self.n < 0:
            raise ValueError(f"degree must be a natural number, got {self.n!r}")
        for name in ("b", "c", "x"):
            object.__setattr__(self, name, as_rational(getattr(self, name)))

    @property
    def degenerate(self) -> bool:
        return degenerate_index(self.c, self.n) is not None


def eval_2f1(spec: Gauss2F1Spec) -> Fraction:
    """Sum the terminating series with the ratio of consecutive terms.

    Raises :class:`DegenerateParameterError` when ``(c)_k`` vanishes for
    some ``k <= n``.
    """
    n, b, c, x = spec.n, spec.b, spec.c, spec.x
    check_denominator(c, n)
    term = Fraction(1)
    total = term
    for k in range(n):
        term = term * ((k - n) * (b + k) * x) / ((k + 1) * (c + k))
        if not term:
            break
        total += term
    return total


def transform_2f1(spec: Gauss2F1Spec) -> tuple[Fraction, Gauss2F1Spec]:
    """Map ``x -> 1 - x``.

    Returns ``(factor, transformed)`` with
    ``eval_2f1(spec) == factor * eval_2f1(transformed)``, where
    ``factor = (c-b)_n / (c)_n`` and the new denominator parameter is
    ``b + 1 - n - c``.
    """
    n, b, c = spec.n, spec.b, spec.c
    check_denominator(c, n)
    c_new = b + 1 - n - c
    if degenerate_index(c_new, n) is not None:
        raise TransformationUndefined(
            f"transformation undefined for these parameters: new denominator parameter {c_new} is degenerate",
            k=degenerate_index(c_new, n),
        )
    factor = rising_factorial(c - b, n) / rising_factorial(c, n)
    return factor, Gauss2F1Spec(n, b, c_new, 1 - spec.x)


def gauss_sum(n: int, b: RationalLike, c: RationalLike) -> Fraction:
    """Closed form ``(c-b)_n / (c)_n`` of the polynomial at ``x = 1``."""
    b, c = as_rational(b), as_rational(c)
    check_denominator(c, n)
    return rising_factorial(c - b, n) / rising_factorial(c, n)


def chu_vandermonde_pair(
    alpha: RationalLike,
    beta: RationalLike,
    w: RationalLike,
    z: RationalLike,
    n: int,
) -> tuple[Fraction, Fraction | None]:
    """Both sides of the weighted two-parameter Chu-Vandermonde identity.

    ``lhs`` is the direct sum of ``C(n,k) (alpha)_k w^k (beta)_{n-k} z^{n-k}``.
    ``rhs`` is ``z^n (alpha+beta)_n 2F1(-n, alpha; alpha+beta; 1 - w/z)``, or
    None when ``z == 0`` or ``alpha + beta`` is degenerate for degree ``n``.
    """
    alpha, beta, w, z = (as_rational(v) for v in (alpha, beta, w, z))
    lhs = Fraction(0)
    for k in range(n + 1):
        lhs += binomial(n, k) * rising_factorial(alpha, k) * w**k * tail_pochhammer(beta, n, k) * z ** (n - k)
    if z == 0 or degenerate_index(alpha + beta, n) is not None:
        return lhs, None
    rhs = z**n * rising_factorial(alpha + beta, n) * eval_2f1(Gauss2F1Spec(n, alpha, alpha + beta, 1 - w / z))
    return lhs, rhs
