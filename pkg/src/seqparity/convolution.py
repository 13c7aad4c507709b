"""Self-convolutions of Thue-Morse variants.

The per-term sums are quadratic over a prefix; that is deliberate, since the
checked ranges stay in the low thousands and exactness matters more than
speed.
"""

from __future__ import annotations

from .parity import thue_morse_bar


def a001285(n: int) -> int:
    """Thue-Morse over {1, 2}: 1 at evil n, 2 at odious n (i.e. 2 - tbar(n))."""
    if n < 0:
        raise ValueError(f"a001285 is defined for n >= 0, got {n}")
    return 2 - thue_morse_bar(n)


def a001285_prefix(count: int) -> list[int]:
    """First `count` terms of a001285."""
    return [2 - thue_morse_bar(n) for n in range(count)]


def _self_convolution(prefix: list[int]) -> list[int]:
    return [
        sum(x * y for x, y in zip(prefix, prefix[n::-1]))
        for n in range(len(prefix))
    ]


def a029886_prefix(count: int) -> list[int]:
    """First `count` terms of the self-convolution of a001285."""
    return _self_convolution(a001285_prefix(count))


def a029886(n: int) -> int:
    """Self-convolution of a001285 at index n."""
    if n < 0:
        raise ValueError(f"a029886 is defined for n >= 0, got {n}")
    p = a001285_prefix(n + 1)
    return sum(x * y for x, y in zip(p, p[::-1]))


def a247303_prefix(count: int) -> list[int]:
    """First `count` terms of the self-convolution of the negated Thue-Morse sequence."""
    return _self_convolution([thue_morse_bar(n) for n in range(count)])


def a247303(n: int) -> int:
    """Self-convolution of tbar at index n: sum of tbar(i) * tbar(n-i)."""
    if n < 0:
        raise ValueError(f"a247303 is defined for n >= 0, got {n}")
    p = [thue_morse_bar(i) for i in range(n + 1)]
    return sum(x * y for x, y in zip(p, p[::-1]))
