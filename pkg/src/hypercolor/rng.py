"""Deterministic pseudo-random generator with a bit-exact external contract.

Random instances and search trials must replay identically from a recorded
seed, on any machine and in any conforming reimplementation.  Everything is
therefore pinned to two published algorithms:

* splitmix64 -- used for seed expansion and for deriving independent
  per-trial seeds.  The stream seeded with ``s`` produces, for j = 1, 2, ...,

      out_j = finalize((s + j * 0x9E3779B97F4A7C15) mod 2^64)

  where ``finalize`` is the splitmix64 finalizer:

      z ^= z >> 30;  z *= 0xBF58476D1CE4E5B9
      z ^= z >> 27;  z *= 0x94D049BB133111EB
      z ^= z >> 31

  (all arithmetic mod 2^64).

* xoshiro256** -- the bulk generator.  Its four 64-bit state words are the
  first four outputs of the splitmix64 stream seeded with the user seed (if
  all four happen to be zero the last word is set to 1).  ``next64`` is the
  standard xoshiro256** step:

      result = rotl64(s1 * 5, 7) * 9
      t = s1 << 17
      s2 ^= s0;  s3 ^= s1;  s1 ^= s2;  s0 ^= s3;  s2 ^= t
      s3 = rotl64(s3, 45)

Bounded draws use bitmask rejection: ``below(b)`` returns 0 without consuming
the stream when b == 1, otherwise it draws ``next64() & mask`` (mask = the
smallest 2^r - 1 >= b - 1) until the value is < b.  ``randint(lo, hi)`` is
``lo + below(hi - lo + 1)``.  Subset and edge sampling orders are documented
where they are used (see gen.random_hypergraph).
"""

from __future__ import annotations

_MASK64 = (1 << 64) - 1
_GOLDEN = 0x9E3779B97F4A7C15


def _splitmix64_finalize(z: int) -> int:
    z = ((z ^ (z >> 30)) * 0xBF58476D1CE4E5B9) & _MASK64
    z = ((z ^ (z >> 27)) * 0x94D049BB133111EB) & _MASK64
    return z ^ (z >> 31)


def splitmix64_output(seed: int, index: int) -> int:
    """The ``index``-th (1-based) output of the splitmix64 stream seeded with ``seed``."""
    if index < 1:
        raise ValueError("splitmix64 output index is 1-based")
    return _splitmix64_finalize((seed + index * _GOLDEN) & _MASK64)


def derive_seed(base_seed: int, trial: int) -> int:
    """Per-trial seed: output trial+1 of the splitmix64 stream seeded with base_seed.

    Trials are order-independent, so search runs may be chunked across
    workers without affecting results.
    """
    if trial < 0:
        raise ValueError("trial index must be >= 0")
    return splitmix64_output(base_seed & _MASK64, trial + 1)


def _rotl64(x: int, k: int) -> int:
    return ((x << k) | (x >> (64 - k))) & _MASK64


class Xoshiro256StarStar:
    """xoshiro256** seeded via splitmix64, per the module contract."""

    __slots__ = ("_s0", "_s1", "_s2", "_s3")

    def __init__(self, seed: int) -> None:
        seed &= _MASK64
        s = [splitmix64_output(seed, j) for j in (1, 2, 3, 4)]
        if s == [0, 0, 0, 0]:
            s[3] = 1
        self._s0, self._s1, self._s2, self._s3 = s

    def next64(self) -> int:
        s0, s1, s2, s3 = self._s0, self._s1, self._s2, self._s3
        result = (_rotl64((s1 * 5) & _MASK64, 7) * 9) & _MASK64
        t = (s1 << 17) & _MASK64
        s2 ^= s0
        s3 ^= s1
        s1 ^= s2
        s0 ^= s3
        s2 ^= t
        s3 = _rotl64(s3, 45)
        self._s0, self._s1, self._s2, self._s3 = s0, s1, s2, s3
        return result

    def below(self, bound: int) -> int:
        """Uniform integer in [0, bound) by bitmask rejection."""
        if bound < 1:
            raise ValueError("bound must be >= 1")
        if bound == 1:
            return 0
        mask = (1 << (bound - 1).bit_length()) - 1
        while True:
            x = self.next64() & mask
            if x < bound:
                return x

    def randint(self, lo: int, hi: int) -> int:
        """Uniform integer in [lo, hi] inclusive."""
        if hi < lo:
            raise ValueError("empty range")
        return lo + self.below(hi - lo + 1)
