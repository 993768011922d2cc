"""Reproducible random number streams.

All randomness flows through :class:`RngSeed`, a (seed, stream) pair mapped
onto numpy's PCG64 bit generator via ``SeedSequence(seed, spawn_key=(stream,))``.
SeedSequence hashes the pair into the generator state, so distinct streams of
the same seed are statistically independent, and the same pair reproduces the
same draws bit for bit on a given build.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

_U64_MAX = 2**64 - 1


@dataclass(frozen=True)
class RngSeed:
    """A reproducible generator identity: base seed plus sub-stream index."""

    seed: int
    stream: int = 0

    def __post_init__(self):
        if not 0 <= int(self.seed) <= _U64_MAX:
            raise ValueError(f"seed must fit in 64 unsigned bits, got {self.seed}")
        if int(self.stream) < 0:
            raise ValueError(f"stream must be nonnegative, got {self.stream}")

    def sequence(self) -> np.random.SeedSequence:
        return np.random.SeedSequence(self.seed, spawn_key=(self.stream,))

    def generator(self) -> np.random.Generator:
        """Fresh PCG64 generator for this (seed, stream) pair."""
        return np.random.Generator(np.random.PCG64(self.sequence()))

    def child(self, index: int) -> RngSeed:
        """Derive an independent sub-seed, e.g. one per trial or per cycle.

        The derived base seed is the first 64-bit word hashed out of
        ``SeedSequence(seed, spawn_key=(stream, index))``.
        """
        if index < 0:
            raise ValueError(f"child index must be nonnegative, got {index}")
        seq = np.random.SeedSequence(self.seed, spawn_key=(self.stream, index))
        derived = int(seq.generate_state(1, np.uint64)[0])
        return RngSeed(derived, 0)


def complex_gaussian(shape, rng: np.random.Generator) -> np.ndarray:
    """Ginibre-convention complex normals: (N(0,1) + i N(0,1)) / sqrt(2)."""
    return (rng.standard_normal(shape) + 1j * rng.standard_normal(shape)) / np.sqrt(2.0)
