"""Counter-based random streams for reproducible replications.

Each replication owns a Philox stream keyed by the master seed. The
replication index occupies the upper 128 bits of the 256-bit Philox
counter, so two indices can only collide after 2**128 draws.
"""

from __future__ import annotations

import numpy as np
from scipy.special import ndtri

from ..exceptions import ParameterError

STREAM_ALGORITHM = "philox4x64-10"

_MASK64 = (1 << 64) - 1
# uniforms are (k + 0.5) * 2**-52 with k < 2**52, strictly inside (0, 1)
_UNIFORM_BITS = 52


class SeedStream:
    """Single-owner stream of uniforms and Gaussians.

    The output is a pure function of (master_seed, replication_index,
    number of values drawn so far). Drawing ``a`` values and then ``b``
    values yields the same numbers as drawing ``a + b`` at once.
    """

    def __init__(self, master_seed: int, replication_index: int):
        if replication_index < 0:
            raise ParameterError("replication_index must be non-negative")
        self.master_seed = int(master_seed) & _MASK64
        self.replication_index = int(replication_index)
        bit_generator = np.random.Philox(
            key=self.master_seed, counter=self.replication_index << 128
        )
        self._generator = np.random.Generator(bit_generator)
        self.drawn = 0

    def uniform(self, size: int) -> np.ndarray:
        """Draw ``size`` uniforms in the open interval (0, 1)."""
        if size < 0:
            raise ParameterError("size must be non-negative")
        k = self._generator.integers(
            0, 1 << _UNIFORM_BITS, size=size, dtype=np.uint64
        )
        self.drawn += size
        return (k.astype(np.float64) + 0.5) * 2.0**-_UNIFORM_BITS

    def standard_normal(self, size: int) -> np.ndarray:
        """Draw standard Gaussians by inverse-CDF transform of uniforms."""
        return ndtri(self.uniform(size))

    def __repr__(self) -> str:
        return (
            f"SeedStream(master_seed={self.master_seed}, "
            f"replication_index={self.replication_index}, drawn={self.drawn})"
        )


def derive_stream(master_seed: int, replication_index: int) -> SeedStream:
    """Return the stream for one replication of an experiment."""
    return SeedStream(master_seed, replication_index)
