"""Digit re-reading sequences and the wicked evil sequence."""

import pytest
from hypothesis import given
from hypothesis import strategies as st

from seqparity.digits import (
    a092524,
    a102393,
    a104258,
    binary_digits,
    reinterpret_binary,
    smallest_prime_factor,
)
from seqparity.parity import binary_weight, master_m

A092524_PREFIX = [1, 2, 4, 4, 26, 6, 57, 8, 28, 10, 1343, 12, 2367, 14, 40]
A104258_PREFIX = [1, 2, 4, 16, 26, 42, 57, 512, 730, 1010, 1343, 1872]
A102393_PREFIX = [1, 0, 0, 4, 0, 6, 7, 0, 0, 10, 11, 0, 13, 0, 0, 16, 0, 18, 19]


@pytest.mark.parametrize("n, expected", [(2, 2), (9, 3), (11, 11), (91, 7)])
def test_smallest_prime_factor_examples(n, expected):
    assert smallest_prime_factor(n) == expected


def test_smallest_prime_factor_requires_n_at_least_two():
    with pytest.raises(ValueError):
        smallest_prime_factor(1)


@given(st.integers(min_value=0, max_value=10**18))
def test_binary_digits_round_trip(n):
    bits = binary_digits(n)
    assert sum(bit << i for i, bit in enumerate(bits)) == n
    assert all(bit in (0, 1) for bit in bits)
    if n >= 1:
        assert bits[-1] == 1


@given(st.integers(min_value=0, max_value=10**6))
def test_reinterpret_in_base_two_is_identity(n):
    assert reinterpret_binary(n, 2) == n


@pytest.mark.parametrize("n, expected", [(5, 26), (6, 6), (11, 1343)])
def test_a092524_examples(n, expected):
    assert a092524(n) == expected


def test_a092524_prefix():
    assert [a092524(n) for n in range(1, 16)] == A092524_PREFIX


def test_a092524_fixes_even_numbers():
    assert all(a092524(n) == n for n in range(2, 2048, 2))
    assert all(a092524(2**k) == 2**k for k in range(1, 21))


def test_a092524_parity_on_odd_numbers():
    # a sum of binary_weight(n) odd powers has the perfidy of n
    assert all(a092524(n) % 2 == binary_weight(n) % 2 for n in range(3, 2048, 2))


@pytest.mark.parametrize("n, expected", [(5, 26), (8, 512), (1, 1)])
def test_a104258_examples(n, expected):
    assert a104258(n) == expected


def test_a104258_prefix():
    assert [a104258(n) for n in range(1, 13)] == A104258_PREFIX


def test_a104258_parity_matches_a092524():
    assert all(a104258(n) % 2 == a092524(n) % 2 for n in range(1, 2**12 + 1))


@pytest.mark.parametrize("n, expected", [(3, 4), (1, 0), (9, 10)])
def test_a102393_examples(n, expected):
    assert a102393(n) == expected


def test_a102393_prefix():
    assert [a102393(n) for n in range(19)] == A102393_PREFIX


def test_a102393_values_are_zero_or_n_plus_one():
    assert all(a102393(n) in (0, n + 1) for n in range(512))


def test_a102393_parity_follows_master_sequence():
    assert all(a102393(n) % 2 == master_m(n) for n in range(2**14 + 1))
