"""Exact discrete uniform sampling from coin flips.

``fdr_uniform`` draws an integer uniform on {0, ..., n-1} consuming one
bit per loop iteration, and terminates with probability 1.  The expected
bit count meets the information-theoretic optimum for this problem
(Knuth-Yao bound): log2(n) plus a bounded toll below 2 bits.

The loop maintains a candidate c uniform on {0, ..., v-1}.  Each step
doubles the carried range v and appends one bit to c; whenever v reaches
n, either c already names an answer (c < n) or the pair is reduced by n
and the loop keeps the leftover randomness.  Nothing is discarded, which
is where the optimality comes from.
"""

from __future__ import annotations

from typing import NamedTuple

from .bitsource import RandomBitSource
from .errors import EmptyRange, RangeTooLarge

# Doubling can momentarily hold v < 2n, so n itself must stay one doubling
# short of the 63-bit line to keep every intermediate inside 64 bits.
MAX_UNIFORM_RANGE = 1 << 62


class FdrOutcome(NamedTuple):
    """A drawn value together with the number of bits it consumed."""

    value: int
    bits_used: int


def fdr_uniform(source: RandomBitSource, n: int) -> FdrOutcome:
    """Draw uniformly from {0, ..., n-1} using optimally few random bits.

    Args:
        source: bit source; consumed one bit per loop iteration.
        n: number of outcomes, 1 <= n <= 2**62.

    Returns:
        FdrOutcome(value, bits_used).  n == 1 is answered immediately
        with value 0 and zero bits consumed.

    Raises:
        ValueError: n < 1.
        RangeTooLarge: n > 2**62.
    """
    if n < 1:
        raise ValueError(f"need n >= 1, got {n}")
    if n > MAX_UNIFORM_RANGE:
        raise RangeTooLarge(f"n={n} exceeds 2**62")
    if n == 1:
        return FdrOutcome(0, 0)

    next_bit = source.next_bit
    v = 1  # size of the range c is uniform on
    c = 0
    bits = 0
    while True:
        v <<= 1
        c = (c << 1) | next_bit()
        bits += 1
        assert c < v < (n << 1)  # loop invariant; stripped under -O
        if v >= n:
            if c < n:
                return FdrOutcome(c, bits)
            # c landed in the rejection band [n, v): recycle it as a
            # uniform draw on the leftover range of size v - n.
            v -= n
            c -= n


def fdr_uniform_range(source: RandomBitSource, lo: int, hi: int) -> int:
    """Draw uniformly from the inclusive integer range [lo, hi].

    Raises:
        EmptyRange: lo > hi.
        RangeTooLarge: hi - lo + 1 > 2**62.
    """
    if lo > hi:
        raise EmptyRange(f"empty range [{lo}, {hi}]")
    return lo + fdr_uniform(source, hi - lo + 1).value
