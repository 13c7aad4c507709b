"""Exact lcm-quotient sums and the 2-adic parity shortcut."""

from math import lcm

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from seqparity.lcm_sums import (
    a061297,
    a061297_parity_shortcut,
    a093431,
    lcm_range,
    quotient_term_is_odd,
    two_adic_valuation,
)
from seqparity.parity import master_m

A061297_PREFIX = [1, 2, 4, 8, 14, 32, 39, 114, 166, 266, 421, 1608]
A093431_PREFIX = [1, 3, 7, 13, 31, 38, 113, 165, 265, 420, 1607, 1004]


def exact_term(n: int, r: int) -> int:
    """Oracle for a single summand: the literal big-integer quotient."""
    return lcm_range(n - r + 1, n) // lcm_range(1, r)


@pytest.mark.parametrize("lo, hi, expected", [(1, 4, 12), (5, 4, 1), (3, 4, 12)])
def test_lcm_range_examples(lo, hi, expected):
    assert lcm_range(lo, hi) == expected


def test_lcm_range_rejects_nonpositive_elements():
    with pytest.raises(ValueError):
        lcm_range(0, 3)
    with pytest.raises(ValueError):
        lcm_range(-4, -2)


@pytest.mark.parametrize("n, expected", [(1, 0), (12, 2), (64, 6)])
def test_two_adic_valuation_examples(n, expected):
    assert two_adic_valuation(n) == expected


def test_two_adic_valuation_rejects_zero():
    with pytest.raises(ValueError):
        two_adic_valuation(0)


def test_a061297_prefix():
    assert [a061297(n) for n in range(12)] == A061297_PREFIX


def test_a061297_term_breakdown_at_four():
    assert [exact_term(4, r) for r in range(5)] == [1, 4, 6, 2, 1]
    assert a061297(4) == 14


def test_a093431_prefix():
    assert [a093431(n) for n in range(1, 13)] == A093431_PREFIX


def test_a093431_is_a061297_minus_one():
    assert all(a093431(n) == a061297(n) - 1 for n in range(1, 101))


def test_base_lcm_divides_window_lcm():
    for n in range(0, 121):
        for r in range(0, n + 1):
            assert lcm_range(n - r + 1, n) % lcm_range(1, r) == 0


def test_valuation_of_initial_lcm_is_floor_log2():
    # exponent of the largest power of two at most r
    running = 1
    for r in range(1, 2**12 + 1):
        running = lcm(running, r)
        assert two_adic_valuation(running) == r.bit_length() - 1


@pytest.mark.parametrize(
    "n, r, expected",
    [
        (4, 0, True),
        (4, 2, False),  # exact quotient is 6
        (4, 3, False),  # exact quotient is 2
        (4, 1, False),  # exact quotient is 4
        (4, 4, True),   # exact quotient is 1
    ],
)
def test_quotient_parity_examples(n, r, expected):
    assert quotient_term_is_odd(n, r) is expected
    assert (exact_term(n, r) % 2 == 1) is expected


def test_quotient_parity_matches_exact_division_exhaustively():
    # incremental form of the exact_term oracle, to keep n <= 200 affordable
    for n in range(0, 201):
        window = 1
        base = 1
        assert quotient_term_is_odd(n, 0) is True
        for r in range(1, n + 1):
            window = lcm(window, n - r + 1)
            base = lcm(base, r)
            assert quotient_term_is_odd(n, r) == (window // base % 2 == 1)


@settings(max_examples=40)
@given(st.integers(min_value=0, max_value=120), st.data())
def test_quotient_parity_matches_literal_lcm_range(n, data):
    r = data.draw(st.integers(min_value=0, max_value=n))
    assert quotient_term_is_odd(n, r) == (exact_term(n, r) % 2 == 1)


def test_quotient_parity_rejects_bad_arguments():
    with pytest.raises(ValueError):
        quotient_term_is_odd(4, 5)
    with pytest.raises(ValueError):
        quotient_term_is_odd(-1, 0)


@pytest.mark.parametrize("n, expected", [(3, 0), (0, 1), (6, 1)])
def test_parity_shortcut_examples(n, expected):
    assert a061297_parity_shortcut(n) == expected


def test_parity_shortcut_matches_exact_sum():
    assert all(a061297(n) % 2 == a061297_parity_shortcut(n) for n in range(201))


def test_parity_shortcut_follows_master_sequence():
    assert all(a061297_parity_shortcut(n) == master_m(n) for n in range(2**14 + 1))
