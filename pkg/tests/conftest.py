"""Shared test helpers: a scripted RNG stand-in and a brute-force crossing oracle."""

from __future__ import annotations

import math

import numpy as np

from buffon.geometry import CrossingTally, GridSpec, Vertices, segment_crosses_line


class StubStream:
    """Replays a fixed uniform sequence through the Generator interface."""

    def __init__(self, values):
        self._values = [float(v) for v in values]
        self._pos = 0

    def random(self, size=None):
        if size is None:
            value = self._values[self._pos]
            self._pos += 1
            return value
        chunk = self._values[self._pos : self._pos + size]
        if len(chunk) != size:
            raise IndexError("stub stream exhausted")
        self._pos += size
        return np.asarray(chunk, dtype=np.float64)


def brute_force_tally(v: Vertices, grid: GridSpec) -> CrossingTally:
    """Count crossings side by side: every actual triangle edge against every
    grid line in a generous window around the cast."""
    counts = []
    for axis in (0, 1):
        offset = grid.offset_x if axis == 0 else grid.offset_y
        coords = [p[axis] for p in v]
        lo, hi = min(coords), max(coords)
        k_lo = math.floor((lo - offset) / grid.spacing) - 2
        k_hi = math.ceil((hi - offset) / grid.spacing) + 2
        count = 0
        for k in range(k_lo, k_hi + 1):
            pos = offset + k * grid.spacing
            for a, b in ((0, 1), (1, 2), (2, 0)):
                if segment_crosses_line(coords[a], coords[b], pos):
                    count += 1
        counts.append(count)
    return CrossingTally(counts[0], counts[1])
