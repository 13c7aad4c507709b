"""Finite binary words: block morphisms, run lengths, cube detection.

Words are plain strings over the alphabet {"0", "1"}.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Mapping


@dataclass(frozen=True)
class Morphism:
    """A substitution on fixed-size blocks of symbols.

    block_length 1 gives an ordinary letter morphism; block_length 2 rewrites
    non-overlapping symbol pairs.
    """

    block_length: int
    rules: Mapping[str, str]

    def __post_init__(self) -> None:
        if self.block_length < 1:
            raise ValueError(f"block_length must be positive, got {self.block_length}")


#: Letter morphism 0 -> 01, 1 -> 10; the Thue-Morse word is its fixed point.
THUE_MORSE_MORPHISM = Morphism(1, {"0": "01", "1": "10"})

#: Pair morphism 00 -> 0010, 10 -> 1000; the master word is its fixed point.
MASTER_MORPHISM = Morphism(2, {"00": "0010", "10": "1000"})


def apply_morphism(word: str, morphism: Morphism) -> str:
    """Rewrite consecutive non-overlapping blocks of `word` by the morphism rules.

    Example:
        >>> apply_morphism("01", THUE_MORSE_MORPHISM)
        '0110'
        >>> apply_morphism("1000", MASTER_MORPHISM)
        '10000010'
    """
    size = morphism.block_length
    if len(word) % size != 0:
        raise ValueError(
            f"word length {len(word)} is not divisible by block length {size}"
        )
    pieces = []
    for i in range(0, len(word), size):
        block = word[i : i + size]
        try:
            pieces.append(morphism.rules[block])
        except KeyError:
            raise ValueError(f"no rule for block {block!r} at position {i}") from None
    return "".join(pieces)


def max_run(word: str, symbol: str) -> int:
    """Length of the longest run of `symbol` in `word`."""
    best = 0
    run = 0
    for ch in word:
        if ch == symbol:
            run += 1
            if run > best:
                best = run
        else:
            run = 0
    return best


def has_cube(word: str, max_block: int) -> bool:
    """True iff `word` contains a factor xxx with 1 <= len(x) <= max_block.

    For each candidate period, a cube is equivalent to word[j] == word[j + period]
    holding at 2*period consecutive positions, so one linear scan per period
    suffices.
    """
    if max_block < 1:
        raise ValueError(f"max_block must be positive, got {max_block}")
    n = len(word)
    for period in range(1, min(max_block, n // 3) + 1):
        run = 0
        for j in range(n - period):
            if word[j] == word[j + period]:
                run += 1
                if run >= 2 * period:
                    return True
            else:
                run = 0
    return False
