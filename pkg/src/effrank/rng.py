"""Counter-based random streams.

Every draw is a pure function of a 64-bit key and a counter, so a bootstrap
replicate produces the same numbers no matter which process computes it or
in what order. Keys are derived by hashing labels into the parent key with
the SplitMix64 finalizer; normals come from Box-Muller on two uniforms.
"""

from __future__ import annotations

import hashlib
import math

MASK64 = (1 << 64) - 1
_GOLDEN = 0x9E3779B97F4A7C15


def mix64(z: int) -> int:
    """SplitMix64 finalizer: a bijective avalanche mix of a 64-bit word."""
    z = (z + _GOLDEN) & MASK64
    z = ((z ^ (z >> 30)) * 0xBF58476D1CE4E5B9) & MASK64
    z = ((z ^ (z >> 27)) * 0x94D049BB133111EB) & MASK64
    return z ^ (z >> 31)


def label_hash(label: int | str) -> int:
    if isinstance(label, int):
        return label & MASK64
    digest = hashlib.blake2b(label.encode("utf-8"), digest_size=8).digest()
    return int.from_bytes(digest, "little")


class CounterRNG:
    """A keyed stream; ``spawn`` derives independent child streams by label."""

    __slots__ = ("key",)

    def __init__(self, key: int):
        self.key = mix64(key & MASK64)

    def spawn(self, label: int | str) -> "CounterRNG":
        child = CounterRNG.__new__(CounterRNG)
        child.key = mix64(self.key ^ mix64(label_hash(label)))
        return child

    def bits(self, counter: int) -> int:
        return mix64(mix64(self.key ^ (counter & MASK64)) ^ _GOLDEN)

    def uniform(self, counter: int) -> float:
        """Uniform on (0, 1]; never 0, so it is safe under ``log``."""
        return ((self.bits(counter) >> 11) + 1) * 2.0 ** -53

    def normal(self, index: int = 0) -> float:
        """Standard normal from the Box-Muller cosine branch, counters 2i and 2i+1."""
        u1 = self.uniform(2 * index)
        u2 = self.uniform(2 * index + 1)
        return math.sqrt(-2.0 * math.log(u1)) * math.cos(2.0 * math.pi * u2)

    def __eq__(self, other):
        return isinstance(other, CounterRNG) and other.key == self.key

    def __hash__(self):
        return hash(self.key)

    def __repr__(self):
        return f"CounterRNG(key=0x{self.key:016x})"
