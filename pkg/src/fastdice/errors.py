"""Exception types shared across the package."""


class FastdiceError(Exception):
    """Base class for all errors raised by this package."""


class ScriptExhausted(FastdiceError):
    """A scripted bit/word source ran out of entries."""


class RangeTooLarge(FastdiceError):
    """Requested uniform range exceeds the 2**62 doubling guard."""


class EmptyRange(FastdiceError):
    """Range [lo, hi] with lo > hi."""


class Overflow(FastdiceError):
    """Batch size n**j exceeds the 2**62 guard."""


class ImproperFraction(FastdiceError):
    """Binary expansion needs a fraction strictly inside [0, 1)."""


class RankOutOfRange(FastdiceError):
    """Permutation rank outside [0, n!)."""


class DigitOutOfRange(FastdiceError):
    """Factorial-base digit violates 0 <= digit < position size."""


class FactorialOverflow(FastdiceError):
    """n! would not fit in the 64-bit budget (n > 20)."""


class PoleAtOne(FastdiceError):
    """zeta(s) evaluated at its pole s = 1."""
