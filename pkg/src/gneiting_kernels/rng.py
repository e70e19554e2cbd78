"""Deterministic 64-bit PRNG used for all sampling in this package.

The generator is SplitMix64 (Steele, Lea & Flood, 2014): a single 64-bit
state advanced by a Weyl increment and finalized with a mix function.  It is
tiny, has no platform- or library-version-dependent behaviour, and passes
BigCrush for the output sizes used here.  Every random decision in the
package flows from one of these generators seeded explicitly; there is no
use of OS entropy or wall-clock time anywhere.
"""

import math

_MASK64 = (1 << 64) - 1
_WEYL = 0x9E3779B97F4A7C15


def derive_seed(seed: int, index: int) -> int:
    """Per-trial seed: base seed XOR trial index (both as 64-bit words)."""
    return (seed ^ index) & _MASK64


class SplitMix64:
    """SplitMix64 stream with helpers for doubles, normals, and choices."""

    def __init__(self, seed: int):
        self._state = seed & _MASK64
        self._spare_normal = None

    def next_u64(self) -> int:
        self._state = (self._state + _WEYL) & _MASK64
        z = self._state
        z = ((z ^ (z >> 30)) * 0xBF58476D1CE4E5B9) & _MASK64
        z = ((z ^ (z >> 27)) * 0x94D049BB133111EB) & _MASK64
        return z ^ (z >> 31)

    def uniform(self, lo: float = 0.0, hi: float = 1.0) -> float:
        """Uniform double in [lo, hi) with 53 random mantissa bits."""
        u = self.next_u64() >> 11
        return lo + (hi - lo) * (u * 2.0 ** -53)

    def normal(self) -> float:
        """Standard normal via Box-Muller; pairs are cached for determinism."""
        if self._spare_normal is not None:
            z = self._spare_normal
            self._spare_normal = None
            return z
        # u1 in (0, 1] so the log is finite.
        u1 = 1.0 - self.uniform()
        u2 = self.uniform()
        radius = math.sqrt(-2.0 * math.log(u1))
        self._spare_normal = radius * math.sin(2.0 * math.pi * u2)
        return radius * math.cos(2.0 * math.pi * u2)

    def randint(self, n: int) -> int:
        """Uniform integer in [0, n) by rejection (no modulo bias)."""
        if n <= 0:
            raise ValueError("randint bound must be positive")
        limit = (_MASK64 + 1) - ((_MASK64 + 1) % n)
        while True:
            u = self.next_u64()
            if u < limit:
                return u % n
