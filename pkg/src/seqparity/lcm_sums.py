"""Sums of lcm-window quotients in exact arithmetic, plus their 2-adic parity shortcut.

a061297(n) sums lcm(n, n-1, ..., n-r+1) / lcm(1, 2, ..., r) over r = 0..n; the
empty window has lcm 1.  Every prime power q <= r divides one of any r
consecutive integers, so lcm(1..r) divides the window lcm and every summand is
an exact integer.  Values explode quickly, hence arbitrary precision
throughout; parity questions are answered separately via 2-adic valuations
without any big-integer work.
"""

from __future__ import annotations

from math import lcm

from .parity import binary_weight


def lcm_range(lo: int, hi: int) -> int:
    """Least common multiple of {lo, ..., hi}; 1 for the empty range (lo > hi)."""
    if lo > hi:
        return 1
    if lo < 1:
        raise ValueError(f"range elements must be positive, got [{lo}, {hi}]")
    out = 1
    for k in range(lo, hi + 1):
        out = lcm(out, k)
    return out


def two_adic_valuation(n: int) -> int:
    """Largest v with 2**v dividing n (n >= 1)."""
    if n < 1:
        raise ValueError(f"2-adic valuation requires n >= 1, got {n}")
    return (n & -n).bit_length() - 1


def a061297(n: int) -> int:
    """Sum over r = 0..n of lcm(n, ..., n-r+1) // lcm(1, ..., r), exactly."""
    if n < 0:
        raise ValueError(f"a061297 is defined for n >= 0, got {n}")
    total = 1  # r = 0: empty window over empty base
    window = 1
    base = 1
    for r in range(1, n + 1):
        window = lcm(window, n - r + 1)
        base = lcm(base, r)
        total += window // base
    return total


def a093431(n: int) -> int:
    """Same sum as a061297 but starting at r = 1."""
    if n < 1:
        raise ValueError(f"a093431 is defined for n >= 1, got {n}")
    total = 0
    window = 1
    base = 1
    for k in range(1, n + 1):
        window = lcm(window, n - k + 1)
        base = lcm(base, k)
        total += window // base
    return total


def a061297_parity_shortcut(n: int) -> int:
    """Parity of a061297(n) with no big-integer arithmetic.

    Odd n pair up even contributions, giving 0.  For even n the count of odd
    summands is binary_weight(n/2) + 1.
    """
    if n < 0:
        raise ValueError(f"a061297 is defined for n >= 0, got {n}")
    if n & 1:
        return 0
    return (binary_weight(n // 2) + 1) & 1


def quotient_term_is_odd(n: int, r: int) -> bool:
    """Parity of the single summand lcm(n..n-r+1) // lcm(1..r), without dividing.

    The quotient is odd iff numerator and denominator have equal 2-adic
    valuation.  v2(lcm(1..r)) is floor(log2 r) -- the exponent of the largest
    power of two at most r -- and v2 of the window lcm is the largest j for
    which {n-r+1, ..., n} contains a multiple of 2**j.
    """
    if n < 0 or r < 0 or r > n:
        raise ValueError(f"need 0 <= r <= n, got n={n}, r={r}")
    if r == 0:
        return True  # the empty-window term is 1
    window_v2 = 0
    j = 1
    # the window holds a multiple of 2**j iff floor(n / 2**j) > floor((n-r) / 2**j)
    while (n >> j) > ((n - r) >> j):
        window_v2 = j
        j += 1
    return window_v2 == r.bit_length() - 1
