"""Merge and insertion sort comparison counts and the halving-recursion chain."""

import pytest

from seqparity.parity import master_prefix, thue_morse_bar
from seqparity.sorting import (
    a001855,
    a003071,
    a003071_simulate,
    a005187,
    a101925,
    a113474,
    a113474_prefix,
    a122248,
    a122248_prefix,
)

A003071_PREFIX = [0, 1, 3, 5, 9, 11, 14, 17, 25, 27, 30, 33, 38, 41, 45, 49, 65]
A001855_PREFIX = [0, 1, 3, 5, 8, 11, 14, 17, 21, 25, 29, 33]
A113474_PREFIX = [1, 2, 2, 4, 4, 5, 5, 8, 8, 9, 9]
A122248_PREFIX = [0, 1, 3, 5, 9, 13, 18, 23, 31, 39, 48, 57, 68, 79, 91, 103, 119]


def legendre_two_adic_valuation_of_factorial(n: int) -> int:
    """Oracle: v2(n!) by summing floor(n / 2**j)."""
    total = 0
    power = 2
    while power <= n:
        total += n // power
        power *= 2
    return total


@pytest.mark.parametrize("n, expected", [(1, 0), (5, 9), (16, 49)])
def test_a003071_examples(n, expected):
    assert a003071(n) == expected


def test_a003071_prefix():
    assert [a003071(n) for n in range(1, 18)] == A003071_PREFIX


@pytest.mark.parametrize("n, expected", [(1, 0), (7, 14), (16, 49)])
def test_simulation_examples(n, expected):
    assert a003071_simulate(n) == expected


def test_seven_element_schedule_by_hand():
    # rounds 1^7 -> (2,2,2,1) -> (4,3) -> 7 cost 3 + 5 + 6
    assert a003071_simulate(7) == 14
    assert a003071(7) == 14


def test_recursion_matches_simulation():
    assert all(a003071(n) == a003071_simulate(n) for n in range(1, 1025))


def test_a003071_odd_at_powers_of_two():
    assert all(a003071(2**k) % 2 == 1 for k in range(1, 13))


@pytest.mark.parametrize("n, expected", [(1, 0), (5, 8), (12, 33)])
def test_a001855_examples(n, expected):
    assert a001855(n) == expected


def test_a001855_prefix():
    assert [a001855(n) for n in range(1, 13)] == A001855_PREFIX


@pytest.mark.parametrize("n, expected", [(1, 1), (6, 5), (11, 9)])
def test_a113474_examples(n, expected):
    assert a113474(n) == expected


def test_a113474_prefix_forms_agree():
    assert a113474_prefix(11) == A113474_PREFIX
    assert [a113474(n) for n in range(1, 12)] == A113474_PREFIX


def test_a113474_odd_even_pairs():
    assert all(a113474(2 * k + 1) == a113474(2 * k) for k in range(1, 2**13))


@pytest.mark.parametrize("k, expected", [(0, 1), (3, 5), (4, 8)])
def test_a101925_examples(k, expected):
    assert a101925(k) == expected


def test_a101925_interleaves_a113474():
    assert all(a101925(k) == a113474(2 * k) for k in range(1, 4097))


def test_a101925_parity_is_negated_thue_morse():
    assert all(a101925(k) % 2 == thue_morse_bar(k) for k in range(2**14 + 1))


@pytest.mark.parametrize("n, expected", [(0, 0), (3, 4), (4, 7)])
def test_a005187_examples(n, expected):
    assert a005187(n) == expected


def test_a005187_equals_factorial_valuation():
    assert all(
        a005187(n) == legendre_two_adic_valuation_of_factorial(2 * n)
        for n in range(2**10 + 1)
    )


def test_a101925_is_a005187_plus_one():
    assert all(a101925(n) == a005187(n) + 1 for n in range(2**14 + 1))


@pytest.mark.parametrize("n, expected", [(0, 0), (4, 9), (16, 119)])
def test_a122248_examples(n, expected):
    assert a122248(n) == expected


def test_a122248_prefix_forms_agree():
    assert a122248_prefix(17) == A122248_PREFIX
    assert [a122248(n) for n in range(17)] == A122248_PREFIX


def test_a122248_odd_at_odd_indices():
    prefix = a122248_prefix(2**13)
    assert all(prefix[n] % 2 == 1 for n in range(1, len(prefix), 2))


def test_a122248_parity_complements_master_sequence():
    prefix = a122248_prefix(2**14 + 1)
    m_bits = master_prefix(2**14 + 1)
    assert all(prefix[n] % 2 == 1 - m_bits[n] for n in range(len(prefix)))


def test_domain_errors():
    with pytest.raises(ValueError):
        a003071(0)
    with pytest.raises(ValueError):
        a003071_simulate(0)
    with pytest.raises(ValueError):
        a001855(0)
    with pytest.raises(ValueError):
        a113474(0)
    with pytest.raises(ValueError):
        a101925(-1)
    with pytest.raises(ValueError):
        a005187(-1)
    with pytest.raises(ValueError):
        a122248(-1)
