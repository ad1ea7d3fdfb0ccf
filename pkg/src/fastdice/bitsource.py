"""Random bit sources.

Samplers in this package consume randomness strictly one bit at a time
through the ``RandomBitSource`` interface.  The production source buffers
32-bit words from an injected word generator and serves their bits most
significant first, so one word feeds exactly 32 calls.  A scripted source
replays a fixed bit list for tests and worked traces.
"""

from __future__ import annotations

from abc import ABC, abstractmethod
from typing import Iterable, Protocol

from .errors import ScriptExhausted

_MASK64 = (1 << 64) - 1


class WordGenerator(Protocol):
    """Anything that yields uniform 32-bit words on demand."""

    def next_word(self) -> int: ...


class SplitMix64Words:
    """Deterministic 32-bit word generator seeded by a 64-bit integer.

    SplitMix64 core: a Weyl sequence fed through two xor-multiply mixing
    rounds.  Each 64-bit output is split here to its top 32 bits, which is
    the better-mixed half.  Any seeded generator of uniform 32-bit words
    could be swapped in; this one is tiny and has no global state.
    """

    def __init__(self, seed: int = 0):
        self._state = seed & _MASK64

    def next_word(self) -> int:
        self._state = (self._state + 0x9E3779B97F4A7C15) & _MASK64
        z = self._state
        z = ((z ^ (z >> 30)) * 0xBF58476D1CE4E5B9) & _MASK64
        z = ((z ^ (z >> 27)) * 0x94D049BB133111EB) & _MASK64
        z ^= z >> 31
        return z >> 32


class ScriptedWords:
    """Serves 32-bit words from a fixed list; raises when exhausted."""

    def __init__(self, words: Iterable[int]):
        self._words = list(words)
        self._next = 0

    def next_word(self) -> int:
        if self._next >= len(self._words):
            raise ScriptExhausted("word script exhausted")
        w = self._words[self._next]
        self._next += 1
        return w & 0xFFFFFFFF


class RandomBitSource(ABC):
    """One fair bit per call, with an auditable consumption counter."""

    @abstractmethod
    def next_bit(self) -> int:
        """Return the next bit, 0 or 1."""

    @abstractmethod
    def bits_consumed(self) -> int:
        """Total bits served since construction or the last counter reset."""

    @abstractmethod
    def reset_bit_count(self) -> None:
        """Zero the consumption counter without touching the bit stream."""


class BufferedWordSource(RandomBitSource):
    """Bit source backed by buffered 32-bit words.

    Bits leave the buffer most significant first; a fresh word is fetched
    only when all 32 bits are spent, so k bits cost exactly ceil(k/32)
    words.  State is per instance: independent sources never share a
    buffer or counter.
    """

    def __init__(self, seed_or_generator: int | WordGenerator = 0):
        if isinstance(seed_or_generator, int):
            self._gen: WordGenerator = SplitMix64Words(seed_or_generator)
        else:
            self._gen = seed_or_generator
        self._word = 0
        self._pos = 0  # bits still unread in the buffered word
        self._count = 0
        self._words_fetched = 0

    def next_bit(self) -> int:
        pos = self._pos
        if pos == 0:
            self._word = self._gen.next_word()
            self._words_fetched += 1
            pos = 32
        pos -= 1
        self._pos = pos
        self._count += 1
        return (self._word >> pos) & 1

    def bits_consumed(self) -> int:
        return self._count

    def reset_bit_count(self) -> None:
        self._count = 0

    @property
    def words_fetched(self) -> int:
        return self._words_fetched


class ScriptedBitSource(RandomBitSource):
    """Replays an explicit bit sequence; raises ScriptExhausted at the end."""

    def __init__(self, bits: Iterable[int]):
        self._bits = [b & 1 for b in bits]
        self._next = 0
        self._count = 0

    def next_bit(self) -> int:
        if self._next >= len(self._bits):
            raise ScriptExhausted(
                f"bit script exhausted after {self._next} bits")
        b = self._bits[self._next]
        self._next += 1
        self._count += 1
        return b

    def bits_consumed(self) -> int:
        return self._count

    def reset_bit_count(self) -> None:
        # Resets the counter only; the replay cursor never rewinds.
        self._count = 0

    @property
    def remaining(self) -> int:
        return len(self._bits) - self._next
