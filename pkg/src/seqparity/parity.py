"""Binary-weight primitives: Thue-Morse bits, evil/odious numbers, the master sequence.

The master sequence m is the alternate merge of the negated Thue-Morse
sequence with zeros: m(2k) = tbar(k), m(2k+1) = 0.  Every parity relation
checked elsewhere in this package is stated against m.
"""

from __future__ import annotations


def binary_weight(n: int) -> int:
    """Number of 1-bits in the binary expansion of n."""
    if n < 0:
        raise ValueError(f"binary weight requires n >= 0, got {n}")
    return n.bit_count()


def thue_morse(n: int) -> int:
    """Thue-Morse bit t(n) = binary_weight(n) mod 2; 1 iff n is odious."""
    return binary_weight(n) & 1


def thue_morse_bar(n: int) -> int:
    """Negated Thue-Morse bit tbar(n) = 1 - t(n); 1 iff n is evil."""
    return 1 - thue_morse(n)


def evil(k: int) -> int:
    """The k-th evil number (1-indexed): the k-th n with even binary weight.

    Each pair {2j, 2j+1} contains exactly one evil and one odious number;
    the evil one is 2j + t(j), so no search is needed.
    """
    if k < 1:
        raise ValueError(f"evil numbers are 1-indexed, got k={k}")
    j = k - 1
    return 2 * j + thue_morse(j)


def odious(k: int) -> int:
    """The k-th odious number (1-indexed): the k-th n with odd binary weight."""
    if k < 1:
        raise ValueError(f"odious numbers are 1-indexed, got k={k}")
    j = k - 1
    return 2 * j + 1 - thue_morse(j)


def master_m(n: int) -> int:
    """Master sequence bit: m(2k) = tbar(k), m(2k+1) = 0."""
    if n < 0:
        raise ValueError(f"master sequence is defined for n >= 0, got {n}")
    if n & 1:
        return 0
    return thue_morse_bar(n >> 1)


def master_m_recursive(n: int) -> int:
    """Master sequence bit via the recursion m(2n+1)=0, m(4n)=m(2n), m(4n+2)=1-m(2n).

    Agrees with master_m everywhere; kept as an independent evaluation route.
    """
    if n < 0:
        raise ValueError(f"master sequence is defined for n >= 0, got {n}")
    if n == 0:
        return 1
    if n & 1:
        return 0
    if n % 4 == 0:
        return master_m_recursive(n // 2)
    # n = 4j+2: m(n) = 1 - m(2j) and 2j = (n - 2) // 2
    return 1 - master_m_recursive((n - 2) // 2)


def a228495(n: int) -> int:
    """Characteristic bit of the odd odious numbers: 1 iff n is odd and odious."""
    if n < 1:
        raise ValueError(f"a228495 is defined for n >= 1, got {n}")
    return 1 if (n & 1) and thue_morse(n) == 1 else 0


def thue_morse_word(length: int) -> str:
    """First `length` symbols of the Thue-Morse sequence as a 0/1 string."""
    return "".join("01"[n.bit_count() & 1] for n in range(length))


def thue_morse_bar_word(length: int) -> str:
    """First `length` symbols of the negated Thue-Morse sequence as a 0/1 string."""
    return "".join("10"[n.bit_count() & 1] for n in range(length))


def master_word(length: int) -> str:
    """First `length` symbols of the master sequence as a 0/1 string."""
    return "".join("01"[master_m(n)] for n in range(length))


def master_prefix(length: int) -> list[int]:
    """First `length` master-sequence bits as a list of ints."""
    return [master_m(n) for n in range(length)]
