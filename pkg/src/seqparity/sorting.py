"""Worst-case comparison counts for list-merge and binary-insertion sorting,
and the halving-recursion chain a113474 / a101925 / a005187 / a122248."""

from __future__ import annotations

from functools import lru_cache

from .parity import binary_weight


@lru_cache(maxsize=None)
def a003071(n: int) -> int:
    """Maximal comparisons to sort n elements by list merging, by recursion.

    The final merge joins a block of size 2**k (the largest power of two that
    fits) with the remainder x = n - 2**k, costing n - 1 comparisons; an exact
    power of two splits into two equal halves instead.
    """
    if n < 1:
        raise ValueError(f"a003071 is defined for n >= 1, got {n}")
    if n == 1:
        return 0
    top = 1 << (n.bit_length() - 1)
    if top == n:
        return 2 * a003071(n // 2) + n - 1
    return a003071(top) + a003071(n - top) + n - 1


def a003071_simulate(n: int) -> int:
    """Comparison total from a round-based merge schedule; must agree with a003071.

    Starts from n single-element lists; each round merges neighbours in pairs
    (an odd list carries over) and a merge of sizes (p, q) charges p + q - 1.
    """
    if n < 1:
        raise ValueError(f"a003071 is defined for n >= 1, got {n}")
    sizes = [1] * n
    total = 0
    while len(sizes) > 1:
        merged = []
        i = 0
        while i + 1 < len(sizes):
            p, q = sizes[i], sizes[i + 1]
            total += p + q - 1
            merged.append(p + q)
            i += 2
        if i < len(sizes):
            merged.append(sizes[i])
        sizes = merged
    return total


def a001855(n: int) -> int:
    """Maximal comparisons to sort n elements by binary insertion.

    Inserting the k-th element costs ceil(log2 k) comparisons, so
    a(n) = a(n-1) + ceil(log2 n) with a(1) = 0.
    """
    if n < 1:
        raise ValueError(f"a001855 is defined for n >= 1, got {n}")
    return sum((k - 1).bit_length() for k in range(2, n + 1))


@lru_cache(maxsize=None)
def a113474(n: int) -> int:
    """a(n) = a(n//2) + n//2 with a(1) = 1."""
    if n < 1:
        raise ValueError(f"a113474 is defined for n >= 1, got {n}")
    if n == 1:
        return 1
    return a113474(n // 2) + n // 2


def a113474_prefix(count: int) -> list[int]:
    """First `count` terms of a113474 (indices 1..count)."""
    values = [0] * (count + 1)
    if count >= 1:
        values[1] = 1
    for i in range(2, count + 1):
        values[i] = values[i // 2] + i // 2
    return values[1:]


@lru_cache(maxsize=None)
def a101925(k: int) -> int:
    """b(k) = b(k//2) + k with b(0) = 1; equals a113474(2k) for k >= 1."""
    if k < 0:
        raise ValueError(f"a101925 is defined for k >= 0, got {k}")
    if k == 0:
        return 1
    return a101925(k // 2) + k


def a005187(n: int) -> int:
    """2-adic valuation of (2n)!, which telescopes to 2n - binary_weight(n)."""
    if n < 0:
        raise ValueError(f"a005187 is defined for n >= 0, got {n}")
    return 2 * n - binary_weight(n)


def a122248(n: int) -> int:
    """Partial sums of a113474: a(0) = 0, a(n) = a113474(1) + ... + a113474(n)."""
    if n < 0:
        raise ValueError(f"a122248 is defined for n >= 0, got {n}")
    return sum(a113474_prefix(n))


def a122248_prefix(count: int) -> list[int]:
    """First `count` terms of a122248 (indices 0..count-1)."""
    out = [0] * count
    if count > 1:
        steps = a113474_prefix(count - 1)
        acc = 0
        for i, step in enumerate(steps, start=1):
            acc += step
            out[i] = acc
    return out
