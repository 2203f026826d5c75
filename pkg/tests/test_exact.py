from fractions import Fraction
from math import factorial, prod

import pytest
from hypothesis import given, strategies as st

from hyperpoly.exact import (
    DegenerateParameterError,
    binomial,
    check_denominator,
    degenerate_index,
    format_rational,
    multinomial,
    neg_n_pochhammer_ratio,
    parse_rational,
    rising_factorial,
    tail_pochhammer,
)

import oracles
from conftest import rationals


@pytest.mark.parametrize(
    "x, n, expected",
    [
        (Fraction(7, 3), 0, 1),
        (-2, 4, 0),
        (Fraction(1, 2), 3, Fraction(15, 8)),
        (3, 4, 360),
        (Fraction(-5, 2), 3, Fraction(-15, 8)),
    ],
)
def test_rising_factorial_examples(x, n, expected):
    assert rising_factorial(x, n) == expected


def test_rising_factorial_returns_canonical_fraction():
    v = rising_factorial(Fraction(2, 4), 2)
    assert isinstance(v, Fraction)
    assert (v.numerator, v.denominator) == (3, 4)


def test_rising_factorial_rejects_negative_n():
    with pytest.raises(ValueError):
        rising_factorial(1, -1)


@pytest.mark.parametrize("n, k, expected", [(5, 0, 1), (5, 5, 1), (6, 2, 15)])
def test_binomial_examples(n, k, expected):
    assert binomial(n, k) == expected


def test_binomial_k_above_n():
    with pytest.raises(ValueError):
        binomial(3, 4)


@pytest.mark.parametrize("n, parts, expected", [(4, [4], 1), (3, [1, 1, 1], 6), (4, [2, 1, 1], 12)])
def test_multinomial_examples(n, parts, expected):
    assert multinomial(n, parts) == expected


def test_multinomial_sum_mismatch():
    with pytest.raises(ValueError):
        multinomial(4, [1, 1])


@pytest.mark.parametrize(
    "x, n, k, expected",
    [(Fraction(5, 2), 3, 3, 1), (2, 3, 1, 6), (1, 4, 2, 2)],
)
def test_tail_pochhammer_examples(x, n, k, expected):
    assert tail_pochhammer(x, n, k) == expected


@pytest.mark.parametrize("n, k, expected", [(7, 0, 1), (5, 5, 120), (4, 2, 12)])
def test_neg_n_pochhammer_ratio_examples(n, k, expected):
    assert neg_n_pochhammer_ratio(n, k) == expected


def test_neg_n_pochhammer_ratio_k_above_n():
    with pytest.raises(ValueError):
        neg_n_pochhammer_ratio(2, 3)


@given(rationals(), st.integers(0, 30))
def test_rising_factorial_matches_naive_product(x, n):
    assert rising_factorial(x, n) == oracles.poch(x, n)


@given(rationals(), st.integers(0, 30), st.integers(0, 30))
def test_rising_factorial_splits(x, m, n):
    assert rising_factorial(x, m + n) == rising_factorial(x, m) * rising_factorial(x + m, n)


def test_binomial_via_negative_pochhammer():
    for n in range(51):
        for k in range(n + 1):
            signed = (-1) ** k * rising_factorial(-n, k)
            assert binomial(n, k) * factorial(k) == signed
            assert neg_n_pochhammer_ratio(n, k) == signed


@given(rationals(), st.integers(0, 30), st.data())
def test_tail_pochhammer_shift_form(x, n, data):
    k = data.draw(st.integers(0, n))
    shifted = rising_factorial(1 - x - n, k)
    if shifted:
        assert tail_pochhammer(x, n, k) * shifted == (-1) ** k * rising_factorial(x, n)


@given(st.lists(st.integers(0, 6), min_size=1, max_size=5), st.randoms())
def test_multinomial_permutation_invariant(parts, rnd):
    shuffled = parts[:]
    rnd.shuffle(shuffled)
    assert multinomial(sum(parts), parts) == multinomial(sum(parts), shuffled)


@given(st.lists(st.integers(0, 6), min_size=1, max_size=5))
def test_multinomial_via_negative_pochhammer(parts):
    n = sum(parts)
    s = sum(parts[:-1])
    denom = 1
    for m in parts[:-1]:
        denom *= factorial(m)
    assert multinomial(n, parts) == (-1) ** s * rising_factorial(-n, s) / denom
    assert multinomial(n, parts) == factorial(n) // prod(factorial(m) for m in parts)


@given(rationals(), st.integers(0, 20), st.data())
def test_shifted_pochhammer_product(x, n, data):
    s = data.draw(st.integers(0, n))
    shifted = rising_factorial(1 - x - n, s)
    if shifted:
        assert rising_factorial(x, n - s) * shifted == (-1) ** s * rising_factorial(x, n)


@pytest.mark.parametrize(
    "text, value",
    [("15/8", Fraction(15, 8)), ("-3", Fraction(-3)), ("0", Fraction(0)), ("6/4", Fraction(3, 2)), ("−1/2", Fraction(-1, 2))],
)
def test_parse_rational(text, value):
    assert parse_rational(text) == value


@pytest.mark.parametrize("text", ["", "1.5", "1/0", "a/b", "1//2", "--1", "1/-2"])
def test_parse_rational_rejects(text):
    with pytest.raises(ValueError):
        parse_rational(text)


@pytest.mark.parametrize("value, text", [(Fraction(15, 8), "15/8"), (Fraction(-3), "-3"), (Fraction(0), "0")])
def test_format_rational(value, text):
    assert format_rational(value) == text


@given(rationals(10**6))
def test_format_parse_round_trip(q):
    assert parse_rational(format_rational(q)) == q


def test_degenerate_index():
    assert degenerate_index(0, 3) == 1
    assert degenerate_index(-2, 3) == 3
    assert degenerate_index(-3, 3) is None
    assert degenerate_index(Fraction(-1, 2), 3) is None
    assert degenerate_index(0, 0) is None
    with pytest.raises(DegenerateParameterError) as info:
        check_denominator(-1, 5)
    assert info.value.k == 2
