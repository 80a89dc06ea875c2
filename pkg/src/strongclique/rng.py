"""SplitMix64 pseudorandom generator.

Chosen because it is tiny, fast, well documented (Steele, Lea & Flood's
SplittableRandom mixer, also the seeding generator recommended for
xoshiro) and trivially portable: identical output on every platform for
a given seed, with no dependence on Python's own random module.  All
randomized search in this package draws from it.
"""

from __future__ import annotations

_MASK = (1 << 64) - 1
_GAMMA = 0x9E3779B97F4A7C15


class SplitMix64:
    def __init__(self, seed: int):
        self.state = seed & _MASK

    def next64(self) -> int:
        self.state = (self.state + _GAMMA) & _MASK
        z = self.state
        z = ((z ^ (z >> 30)) * 0xBF58476D1CE4E5B9) & _MASK
        z = ((z ^ (z >> 27)) * 0x94D049BB133111EB) & _MASK
        return z ^ (z >> 31)

    def randrange(self, bound: int) -> int:
        """Uniform integer in [0, bound). Rejection sampling keeps the
        distribution exact and the draw sequence portable."""
        if bound <= 0:
            raise ValueError("randrange bound must be positive")
        limit = (1 << 64) - ((1 << 64) % bound)
        while True:
            r = self.next64()
            if r < limit:
                return r % bound

    def choice(self, seq):
        if not seq:
            raise ValueError("choice from empty sequence")
        return seq[self.randrange(len(seq))]

    def shuffle(self, items: list) -> None:
        """In-place Fisher-Yates."""
        for i in range(len(items) - 1, 0, -1):
            j = self.randrange(i + 1)
            items[i], items[j] = items[j], items[i]

    def random_bool(self, num: int, den: int) -> bool:
        """True with probability num/den."""
        return self.randrange(den) < num
