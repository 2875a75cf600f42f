"""Deterministic, splittable random number streams.

Streams are backed by the Philox-4x64 counter-based generator keyed by
``(seed, stream)``; Gaussian variates come from numpy's ziggurat
``standard_normal``.  The pair (seed, stream) fully determines every
draw, and distinct stream ids give statistically independent streams, so
parallel workers each take their own stream id.
"""

from dataclasses import dataclass

import numpy as np

from .exceptions import ParameterError

_MASK64 = (1 << 64) - 1


@dataclass(frozen=True)
class RngStream:
    """Identifier of an independent random stream."""

    seed: int
    stream: int = 0

    def generator(self) -> np.random.Generator:
        """Fresh generator positioned at the start of the stream."""
        key = np.array([self.seed & _MASK64, self.stream & _MASK64], dtype=np.uint64)
        return np.random.Generator(np.random.Philox(key=key))

    def substream(self, k: int) -> "RngStream":
        """Stream derived for worker/replica ``k``; disjoint from this one."""
        return RngStream(self.seed, self.stream + 1 + k)


def rng_gaussian(stream: RngStream, n: int) -> np.ndarray:
    """n i.i.d. standard normal draws, reproducible per (seed, stream)."""
    if n < 1:
        raise ParameterError("need n >= 1 draws, got %r" % (n,))
    return stream.generator().standard_normal(int(n))
