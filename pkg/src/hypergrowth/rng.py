"""Deterministic pseudo-random numbers for the property suites.

Everything randomized in this package draws from the 64-bit linear
congruential generator below, so that a (seed, draw sequence) pair pins
down the sampled objects exactly, across runs and across ports to other
languages.

    state' = (6364136223846793005 * state + 1442695040888963407) mod 2^64

A draw returns the new state.  Bounded draws reduce the raw value with a
plain modulus (documented bias is irrelevant at the ranges used here:
bounds are tiny compared to 2^64).
"""

from __future__ import annotations

_MULT = 6364136223846793005
_INC = 1442695040888963407
_MASK = (1 << 64) - 1


class Lcg:
    """64-bit LCG; seed 0 is the suite default."""

    def __init__(self, seed: int = 0):
        self.state = seed & _MASK

    def next_u64(self) -> int:
        self.state = (_MULT * self.state + _INC) & _MASK
        return self.state

    def bit(self) -> int:
        """Top bit of the next draw."""
        return self.next_u64() >> 63

    def randint(self, lo: int, hi: int) -> int:
        """Uniform-ish integer in [lo, hi], inclusive."""
        if hi < lo:
            raise ValueError("empty range")
        return lo + self.next_u64() % (hi - lo + 1)

    def choice(self, seq):
        return seq[self.randint(0, len(seq) - 1)]
