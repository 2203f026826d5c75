"""Exact rational arithmetic and Pochhammer-symbol machinery.

Every scalar in exact mode is a :class:`fractions.Fraction`, which is kept in
lowest terms with a positive denominator after every operation, so equality
of two values is equality of their canonical forms.
"""

from __future__ import annotations

import re
from fractions import Fraction
from math import comb, factorial, prod
from typing import Iterable, Sequence, Union

Rational = Fraction
RationalLike = Union[int, Fraction]

_RATIONAL_RE = re.compile(r"\s*([-−]?)(\d+)(?:/(\d+))?\s*")


class DegenerateParameterError(ArithmeticError):
    """A Pochhammer symbol in a denominator vanishes.

    ``k`` is the smallest summation index at which the offending factor
    becomes zero, when there is one.
    """

    def __init__(self, message: str, k: int | None = None):
        super().__init__(message)
        self.k = k


class TransformationUndefined(DegenerateParameterError):
    """The transformed parameter set is degenerate; evaluate directly instead."""


def as_rational(value: RationalLike | str) -> Fraction:
    if isinstance(value, Fraction):
        return value
    if isinstance(value, bool):
        raise TypeError("booleans are not rationals")
    if isinstance(value, int):
        return Fraction(value)
    if isinstance(value, str):
        return parse_rational(value)
    raise TypeError(f"cannot use {type(value).__name__} as an exact rational")


def parse_rational(text: str) -> Fraction:
    """Parse ``"p/q"``, ``"-p/q"`` or ``"p"``; anything else is rejected."""
    m = _RATIONAL_RE.fullmatch(text)
    if m is None:
        raise ValueError(f"malformed rational {text!r}; expected p/q")
    sign, num, den = m.groups()
    if den is not None and int(den) == 0:
        raise ValueError(f"zero denominator in {text!r}")
    value = Fraction(int(num), int(den) if den is not None else 1)
    return -value if sign else value


def format_rational(value: RationalLike) -> str:
    return str(as_rational(value))


def _natural(value: int, name: str) -> int:
    if isinstance(value, bool) or not isinstance(value, int):
        raise TypeError(f"{name} must be a natural number, got {value!r}")
    if value < 0:
        raise ValueError(f"{name} must be non-negative, got {value}")
    return value


def rising_factorial(x: RationalLike, n: int) -> Fraction:
    """Return ``(x)_n = x (x+1) ... (x+n-1)``; ``(x)_0 = 1``."""
    n = _natural(n, "n")
    x = as_rational(x)
    p, q = x.numerator, x.denominator
    # (p/q)_n = prod(p + i q) / q^n, multiplied in integers
    return Fraction(prod(range(p, p + n * q, q)) if n else 1, q**n)


def pochhammer_table(x: RationalLike, n: int) -> list[Fraction]:
    """``[(x)_0, (x)_1, ..., (x)_n]``."""
    x = as_rational(x)
    out = [Fraction(1)]
    for i in range(n):
        out.append(out[-1] * (x + i))
    return out


def binomial(n: int, k: int) -> int:
    n = _natural(n, "n")
    k = _natural(k, "k")
    if k > n:
        raise ValueError(f"binomial needs k <= n, got n={n}, k={k}")
    return comb(n, k)


def multinomial(n: int, parts: Sequence[int]) -> int:
    """``n! / (n_1! ... n_r!)`` for parts summing to ``n``."""
    n = _natural(n, "n")
    parts = [_natural(p, "part") for p in parts]
    if sum(parts) != n:
        raise ValueError(f"parts {parts} do not sum to {n}")
    result = 1
    remaining = n
    for p in parts:
        result *= comb(remaining, p)
        remaining -= p
    return result


def tail_pochhammer(x: RationalLike, n: int, k: int) -> Fraction:
    """Return ``(x)_{n-k}``, the Pochhammer symbol with ``k`` factors dropped.

    Wherever ``(1-x-n)_k`` is nonzero this also equals
    ``(-1)^k (x)_n / (1-x-n)_k``; the direct product is used so the result is
    defined for every ``k <= n``.
    """
    n = _natural(n, "n")
    k = _natural(k, "k")
    if k > n:
        raise ValueError(f"tail_pochhammer needs k <= n, got n={n}, k={k}")
    return rising_factorial(x, n - k)


def neg_n_pochhammer_ratio(n: int, k: int) -> Fraction:
    """``n! / (n-k)!``, which equals ``(-1)^k (-n)_k``."""
    n = _natural(n, "n")
    k = _natural(k, "k")
    if k > n:
        raise ValueError(f"neg_n_pochhammer_ratio needs k <= n, got n={n}, k={k}")
    return Fraction(prod(range(n - k + 1, n + 1)))


def degenerate_index(c: RationalLike, n: int) -> int | None:
    """Smallest ``k <= n`` with ``(c)_k == 0``, or None when ``(c)_n != 0``."""
    c = as_rational(c)
    if c.denominator == 1 and -(n - 1) <= c <= 0:
        return 1 - int(c)
    return None


def check_denominator(c: RationalLike, n: int) -> None:
    k = degenerate_index(c, n)
    if k is not None:
        raise DegenerateParameterError(
            f"denominator parameter degenerate: (c)_k vanishes for c={format_rational(c)} at k={k}",
            k=k,
        )


def rationals(values: Iterable[RationalLike | str]) -> tuple[Fraction, ...]:
    return tuple(as_rational(v) for v in values)


__all__ = [
    "DegenerateParameterError",
    "Rational",
    "TransformationUndefined",
    "as_rational",
    "binomial",
    "check_denominator",
    "degenerate_index",
    "factorial",
    "format_rational",
    "multinomial",
    "neg_n_pochhammer_ratio",
    "parse_rational",
    "pochhammer_table",
    "rationals",
    "rising_factorial",
    "tail_pochhammer",
]
