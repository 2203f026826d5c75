"""Weak compositions in colexicographic order and sums of separable terms over them.

Every multivariate sum in this package has terms of the form

    outer[n_1 + ... + n_r] * table_1[n_1] * ... * table_r[n_r]

summed over weak compositions ``(n_1, ..., n_r)`` whose total is either
exactly ``n`` or at most ``n``.  The composition stream runs with the last
index outermost, so moving to the next composition changes a suffix of
the running product; only that suffix is recomputed.  Nothing is divided
out, which keeps zero table entries (e.g. ``(b)_m`` for a non-positive
integer ``b``) harmless.
"""

from __future__ import annotations

import enum
from math import comb
from operator import mul
from typing import Iterator, Sequence, TypeVar

T = TypeVar("T")


class Mode(enum.Enum):
    EXACTLY = "exactly"
    AT_MOST = "at_most"


def composition_count(r: int, n: int, mode: Mode) -> int:
    if mode is Mode.EXACTLY:
        return comb(n + r - 1, r - 1)
    return comb(n + r, r)


def _check(r: int, n: int) -> None:
    if r < 1:
        raise ValueError(f"need at least one part, got r={r}")
    if n < 0:
        raise ValueError(f"total must be non-negative, got n={n}")


def _colex_steps(r: int, n: int, exactly: bool) -> Iterator[tuple[list[int], int, int]]:
    """Drive the colex stream in place.

    Yields ``(parts, top, total)``: the mutable parts list, the highest index
    changed since the previous step (``r - 1`` on the first step), and the
    sum of the parts.  Callers must copy ``parts`` if they keep it.
    """
    parts = [0] * r
    # rem[j] = budget left for indices 0..j-1 once indices j..r-1 are fixed
    rem = [n] * (r + 1)
    if exactly:
        parts[0] = n
    top = r - 1
    while True:
        yield parts, top, n if exactly else n - rem[0]
        # bump the lowest free index that still has budget, zero everything below it
        j = 1 if exactly else 0
        while j < r and rem[j + 1] == parts[j]:
            j += 1
        if j == r:
            return
        parts[j] += 1
        rem[j] = rem[j + 1] - parts[j]
        for i in range(j):
            parts[i] = 0
            rem[i] = rem[j]
        if exactly:
            parts[0] = rem[1]
        top = j


def weak_compositions(r: int, n: int, mode: Mode = Mode.EXACTLY) -> Iterator[tuple[int, ...]]:
    """Yield every weak composition of ``n`` (or of ``0..n``) into ``r`` parts.

    Order is colexicographic: tuples compare by their last entry first.

    >>> list(weak_compositions(2, 2))
    [(2, 0), (1, 1), (0, 2)]
    >>> list(weak_compositions(2, 1, Mode.AT_MOST))
    [(0, 0), (1, 0), (0, 1)]
    """
    _check(r, n)
    for parts, _, _ in _colex_steps(r, n, mode is Mode.EXACTLY):
        yield tuple(parts)


def separable_terms(
    tables: Sequence[Sequence[T]],
    n: int,
    mode: Mode,
    outer: Sequence[T] | None = None,
) -> Iterator[tuple[tuple[int, ...], T]]:
    """Yield ``(parts, term)`` over the colex stream, updating the product incrementally.

    ``suffix[j]`` holds ``table_j[n_j] * ... * table_{r-1}[n_{r-1}]``.  When
    index ``j`` advances, ``suffix[j]`` and the entries below it are rebuilt
    from ``suffix[j+1]``, one multiplication each.
    """
    r = len(tables)
    _check(r, n)
    suffix = [tables[0][0] * 0 + 1] * (r + 1)
    for parts, top, s in _colex_steps(r, n, mode is Mode.EXACTLY):
        for i in range(top, -1, -1):
            suffix[i] = suffix[i + 1] * tables[i][parts[i]]
        term = suffix[0] if outer is None else suffix[0] * outer[s]
        yield tuple(parts), term


def separable_sum(
    tables: Sequence[Sequence[int]],
    n: int,
    mode: Mode,
    outer: Sequence[int] | None = None,
) -> tuple[int, int]:
    """Integer fast path of ``sum(term for _, term in separable_terms(...))``.

    Returns ``(total, number_of_terms)``.  The running suffix product is
    carried down the index levels; the innermost level is accumulated as a
    dot product and multiplied by the suffix once per row.
    """
    r = len(tables)
    _check(r, n)
    exactly = mode is Mode.EXACTLY
    if exactly and outer is not None:
        scale = outer[n]
    else:
        scale = 1
    t0 = tables[0]

    if exactly and r == 1:
        return scale * t0[n], 1

    total = 0

    if exactly:
        t1 = tables[1]

        def row(rem: int) -> int:
            return sum(map(mul, t1[: rem + 1], reversed(t0[: rem + 1])))

        bottom = 1
    else:

        def row(rem: int) -> int:
            return sum(map(mul, t0[: rem + 1], outer[n - rem :])) if outer is not None else sum(t0[: rem + 1])

        bottom = 0

    def descend(j: int, rem: int, prefix: int) -> None:
        nonlocal total
        if j == bottom:
            total += prefix * row(rem)
            return
        tj = tables[j]
        for m in range(rem + 1):
            v = tj[m]
            if v:
                descend(j - 1, rem - m, prefix * v)

    descend(r - 1, n, 1)
    return scale * total, composition_count(r, n, mode)
