"""Uniform random permutations at optimal bit cost.

Three routes to a uniform permutation of {1,...,n}:

* ``fisher_yates``: the classic shuffle, with every swap offset drawn by
  the exact uniform sampler, so each of the n! outcomes is exactly
  equally likely.
* ``random_permutation_unranked``: one uniform rank below n! decomposed
  into factorial-base digits (a Lehmer code), then mapped to a
  permutation; spends u(n!) bits total, the optimum for the whole object.
* ``lehmer_to_permutation_selection``: Laisant's correspondence, kept
  because its inversion count equals the digit sum, a sharp test oracle.

Permutation values are one-indexed; ranks and code digits are zero-based.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Sequence

from .bitsource import RandomBitSource
from .core import fdr_uniform
from .errors import DigitOutOfRange, FactorialOverflow, RankOutOfRange

# 20! = 2432902008176640000 < 2**62 < 21!; larger sizes would push the
# rank draw past the uniform sampler's doubling guard.
MAX_UNRANK_SIZE = 20


@dataclass(frozen=True)
class LehmerCode:
    """Factorial-base digits (X_n, ..., X_1), highest position first.

    digits[idx] is the digit of positional size n - idx, so it must lie
    in [0, n - idx).  The last digit is forced to 0.
    """

    digits: tuple[int, ...]

    def __post_init__(self):
        n = len(self.digits)
        for idx, d in enumerate(self.digits):
            if not 0 <= d < n - idx:
                raise DigitOutOfRange(
                    f"digit {d} at position size {n - idx} (index {idx})")

    @property
    def n(self) -> int:
        return len(self.digits)


@dataclass(frozen=True)
class Rank:
    """A permutation rank: an integer in [0, n!)."""

    value: int
    n: int

    def __post_init__(self):
        if self.n < 0:
            raise ValueError(f"need n >= 0, got {self.n}")
        if not 0 <= self.value < math.factorial(self.n):
            raise RankOutOfRange(
                f"rank {self.value} outside [0, {self.n}!)")


def factorial_decompose(rank: Rank) -> LehmerCode:
    """Write a rank in factorial base: U = X_n*(n-1)! + ... + X_1*0!.

    Greedy division by falling factorials; the digit bounds make the
    representation unique.
    """
    u = rank.value
    digits = []
    for i in range(rank.n, 0, -1):
        d, u = divmod(u, math.factorial(i - 1))
        digits.append(d)
    return LehmerCode(tuple(digits))


def factorial_compose(code: LehmerCode) -> Rank:
    """Inverse of factorial_decompose."""
    n = code.n
    value = 0
    for idx, d in enumerate(code.digits):
        value += d * math.factorial(n - idx - 1)
    return Rank(value, n)


def lehmer_to_permutation_selection(code: LehmerCode) -> list[int]:
    """Laisant's selection construction (quadratic, kept for its oracle).

    Repeatedly pick the X_i-th remaining element of the sorted list.
    The inversion count of the result equals sum(code.digits).
    """
    items = list(range(1, code.n + 1))
    return [items.pop(d) for d in code.digits]


def lehmer_to_permutation_fy(code: LehmerCode) -> list[int]:
    """Map a code to a permutation by a deterministic Fisher-Yates pass.

    Iteration i (1-based) swaps position i with position i + X_{n-i+1},
    i.e. digits drive the shuffle in the order they were decomposed.
    Linear time; a different bijection than the selection construction.
    """
    n = code.n
    t = list(range(1, n + 1))
    for i in range(1, n + 1):
        k = i + code.digits[i - 1]
        t[i - 1], t[k - 1] = t[k - 1], t[i - 1]
    return t


def fisher_yates(source: RandomBitSource, n: int) -> list[int]:
    """Uniform random permutation of {1,...,n} by exact-uniform swaps.

    Step i draws an offset uniform on n-i+1 values; the final step draws
    from a single value and costs zero bits.
    """
    if n < 0:
        raise ValueError(f"need n >= 0, got {n}")
    t = list(range(1, n + 1))
    for i in range(1, n + 1):
        k = i + fdr_uniform(source, n - i + 1).value
        t[i - 1], t[k - 1] = t[k - 1], t[i - 1]
    return t


def random_permutation_unranked(source: RandomBitSource, n: int) -> list[int]:
    """Uniform permutation from a single uniform rank below n!.

    Draws U uniform on [0, n!), decomposes it in factorial base, and maps
    the digits through the Fisher-Yates bijection.  Total expected bits
    are u(n!), optimal for generating the permutation as one object.

    Raises:
        FactorialOverflow: n > 20 (n! would exceed the 64-bit budget).
    """
    if n < 0:
        raise ValueError(f"need n >= 0, got {n}")
    if n > MAX_UNRANK_SIZE:
        raise FactorialOverflow(
            f"{n}! exceeds the 64-bit working range (cap is n = 20)")
    u = fdr_uniform(source, math.factorial(n)).value
    return lehmer_to_permutation_fy(factorial_decompose(Rank(u, n)))


def inversion_count(perm: Sequence[int]) -> int:
    """Number of pairs i < j with perm[i] > perm[j] (plain O(n^2) count)."""
    n = len(perm)
    total = 0
    for i in range(n):
        for j in range(i + 1, n):
            if perm[i] > perm[j]:
                total += 1
    return total
