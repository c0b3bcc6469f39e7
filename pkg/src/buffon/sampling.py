"""Seeded, splittable random streams for casts.

Streams are counter-based: stream k under seed s is a Philox generator
keyed with ``(s, k)``, so any subset of runs can be drawn independently,
in any order and on any number of workers, with identical results.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .geometry import TWO_PI

_UINT64_MAX = (1 << 64) - 1


@dataclass(frozen=True)
class RngConfig:
    """Seed plus stream index; the pair fully determines a sample sequence."""

    seed: int
    stream_id: int = 0

    def __post_init__(self) -> None:
        for name in ("seed", "stream_id"):
            value = getattr(self, name)
            if not 0 <= value <= _UINT64_MAX:
                raise ValueError(f"{name} must be an unsigned 64-bit integer, got {value}")

    def stream(self) -> np.random.Generator:
        """A fresh generator positioned at the start of this stream."""
        return np.random.Generator(np.random.Philox(key=[self.seed, self.stream_id]))

    def with_stream(self, stream_id: int) -> "RngConfig":
        return RngConfig(self.seed, stream_id)


@dataclass(frozen=True)
class CastSample:
    """The random variables of one trial: rotation and the two grid offsets."""

    rotation: float
    offset_x: float
    offset_y: float


def sample_rotation(rng: np.random.Generator) -> float:
    """Uniform rotation angle in [0, 2*pi)."""
    return TWO_PI * rng.random()


def sample_offset(rng: np.random.Generator, spacing: float) -> float:
    """Uniform continuous grid offset in [0, spacing)."""
    if not (math.isfinite(spacing) and spacing > 0):
        raise ValueError(f"spacing must be a positive finite length, got {spacing}")
    return spacing * rng.random()


def sample_cast(rng: np.random.Generator, spacing: float) -> CastSample:
    """Draw one trial, always in the order rotation, offset_x, offset_y.

    The fixed draw order keeps sequences reproducible: cast i consumes
    exactly the uniforms 3i, 3i+1, 3i+2 of its stream.
    """
    rotation = sample_rotation(rng)
    offset_x = sample_offset(rng, spacing)
    offset_y = sample_offset(rng, spacing)
    return CastSample(rotation, offset_x, offset_y)
