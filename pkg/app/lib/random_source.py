# app/lib/random_source.py
"""
Portable seeded generator for the synthetic signals and images.

xoshiro256** seeded through splitmix64, so any other implementation that
follows the constants below reproduces the same samples bit for bit.

    splitmix64:   z = (state += 0x9E3779B97F4A7C15)
                  z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9
                  z = (z ^ (z >> 27)) * 0x94D049BB133111EB
                  return z ^ (z >> 31)

    xoshiro256**: result = rotl(s1 * 5, 7) * 9
                  t = s1 << 17
                  s2 ^= s0; s3 ^= s1; s1 ^= s2; s0 ^= s3
                  s2 ^= t;  s3 = rotl(s3, 45)

A double in [0, 1) is (result >> 11) * 2^-53.
"""

from typing import List

import numpy as np
from cachetools import LRUCache, cached

MASK64 = (1 << 64) - 1
_SPLITMIX_GAMMA = 0x9E3779B97F4A7C15
_SPLITMIX_MUL1 = 0xBF58476D1CE4E5B9
_SPLITMIX_MUL2 = 0x94D049BB133111EB
_TWO_POW_M53 = 1.0 / (1 << 53)


def _rotl(x: int, k: int) -> int:
    return ((x << k) | (x >> (64 - k))) & MASK64


class Xoshiro256StarStar:
    def __init__(self, seed: int):
        state = seed & MASK64
        self.s: List[int] = []
        for _ in range(4):
            state = (state + _SPLITMIX_GAMMA) & MASK64
            z = state
            z = ((z ^ (z >> 30)) * _SPLITMIX_MUL1) & MASK64
            z = ((z ^ (z >> 27)) * _SPLITMIX_MUL2) & MASK64
            self.s.append(z ^ (z >> 31))

    def next_u64(self) -> int:
        s0, s1, s2, s3 = self.s
        result = (_rotl((s1 * 5) & MASK64, 7) * 9) & MASK64
        t = (s1 << 17) & MASK64
        s2 ^= s0
        s3 ^= s1
        s1 ^= s2
        s0 ^= s3
        s2 ^= t
        s3 = _rotl(s3, 45)
        self.s = [s0, s1, s2, s3]
        return result

    def next_double(self) -> float:
        return (self.next_u64() >> 11) * _TWO_POW_M53

    def uniform(self, n: int, low: float = 0.0, high: float = 1.0) -> np.ndarray:
        unit = np.fromiter((self.next_double() for _ in range(n)), dtype=np.float64, count=n)
        return low + (high - low) * unit


@cached(cache=LRUCache(maxsize=64))
def random_signal(n: int, seed: int) -> np.ndarray:
    """Uniform samples in [-1, 1). The cached array is read-only."""
    signal = Xoshiro256StarStar(seed).uniform(n, -1.0, 1.0)
    signal.flags.writeable = False
    return signal
