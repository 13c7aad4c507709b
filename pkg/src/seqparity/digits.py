"""Sequences built by re-reading binary digits in another base, and the wicked evil sequence."""

from __future__ import annotations

from .parity import thue_morse


def smallest_prime_factor(n: int) -> int:
    """Least prime dividing n (n >= 2), by trial division up to sqrt(n)."""
    if n < 2:
        raise ValueError(f"smallest prime factor requires n >= 2, got {n}")
    if n % 2 == 0:
        return 2
    f = 3
    while f * f <= n:
        if n % f == 0:
            return f
        f += 2
    return n


def binary_digits(n: int) -> list[int]:
    """Binary digits of n, least significant first; empty for n = 0."""
    if n < 0:
        raise ValueError(f"binary digits require n >= 0, got {n}")
    bits = []
    while n:
        bits.append(n & 1)
        n >>= 1
    return bits


def reinterpret_binary(n: int, base: int) -> int:
    """Read the binary digits of n as digits of a base-`base` numeral."""
    total = 0
    power = 1
    for bit in binary_digits(n):
        if bit:
            total += power
        power *= base
    return total


def a092524(n: int) -> int:
    """Binary expansion of n re-read in base p, p the smallest prime factor of n.

    n = 1 has no prime factor; any base reads the single digit "1" as 1.
    """
    if n < 1:
        raise ValueError(f"a092524 is defined for n >= 1, got {n}")
    if n == 1:
        return 1
    return reinterpret_binary(n, smallest_prime_factor(n))


def a104258(n: int) -> int:
    """Binary expansion of n re-read in base n."""
    if n < 1:
        raise ValueError(f"a104258 is defined for n >= 1, got {n}")
    return reinterpret_binary(n, n)


def a102393(n: int) -> int:
    """The wicked evil sequence: n + 1 at evil positions, 0 at odious ones."""
    if n < 0:
        raise ValueError(f"a102393 is defined for n >= 0, got {n}")
    return 0 if thue_morse(n) else n + 1
