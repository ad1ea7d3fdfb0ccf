"""Bernoulli sampling with exactly rational bias.

A Bernoulli(k/n) draw is the bit of the binary expansion of k/n found at
a geometric(1/2) position: keep flipping until a flip lands 1, and answer
with the expansion bit at the stopping index.  Position t is reached with
probability 2**-t, and summing 2**-t over the positions whose expansion
bit is 1 gives back exactly k/n.  Expected flips per draw: 2, whatever
the bias.
"""

from __future__ import annotations

from dataclasses import dataclass

from .bitsource import RandomBitSource
from .errors import ImproperFraction

# Same doubling guard as the uniform sampler: the expansion state stays
# below 2*den, which must fit comfortably in 64 bits.
MAX_DENOMINATOR = 1 << 62


@dataclass(frozen=True)
class Rational:
    """A fraction num/den with 0 <= num <= den.  Never auto-reduced:
    reduction would not change any sampling behavior, and keeping the
    caller's numbers makes traces easier to follow."""

    num: int
    den: int

    def __post_init__(self):
        if self.den < 1:
            raise ValueError(f"denominator must be >= 1, got {self.den}")
        if not 0 <= self.num <= self.den:
            raise ValueError(f"need 0 <= num <= den, got {self.num}/{self.den}")


def binary_expansion(p: Rational, count: int) -> list[int]:
    """First `count` bits after the binary point of p in [0, 1).

    Long division by doubling: v starts at num; each step doubles v,
    emits whether it reached den, and reduces when it did.  For odd den
    the stream is purely periodic with period ord_den(2).

    Raises:
        ImproperFraction: num >= den (the expansion needs p < 1).
        ValueError: den beyond the 2**62 doubling guard, or count < 0.
    """
    if p.num >= p.den:
        raise ImproperFraction(f"{p.num}/{p.den} is not in [0, 1)")
    if p.den > MAX_DENOMINATOR:
        raise ValueError(f"denominator {p.den} exceeds 2**62")
    if count < 0:
        raise ValueError("count must be >= 0")
    v = p.num
    den = p.den
    out = []
    for _ in range(count):
        v <<= 1
        if v >= den:
            v -= den
            out.append(1)
        else:
            out.append(0)
    return out


def bernoulli_rational(source: RandomBitSource, p: Rational) -> int:
    """Return 1 with probability exactly p.num/p.den.

    Consumes one flip per expansion bit inspected; the flip stream decides
    the stopping position and never mixes with the expansion values.
    Degenerate biases 0 and 1 return immediately with zero flips.

    Raises:
        ValueError: den beyond the 2**62 doubling guard.
    """
    if p.den > MAX_DENOMINATOR:
        raise ValueError(f"denominator {p.den} exceeds 2**62")
    if p.num == 0:
        return 0
    if p.num == p.den:
        return 1
    v = p.num
    den = p.den
    next_bit = source.next_bit
    while True:
        v <<= 1
        if v >= den:
            v -= den
            b = 1
        else:
            b = 0
        if next_bit():
            return b
