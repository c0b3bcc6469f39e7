"""Equilateral-triangle casts on a square grid, and their line crossings.

A cast triangle is built from its circumcircle: vertex k sits at angle
``rotation + k * 2*pi/3`` on the circle of radius ``side / sqrt(3)`` around
the center.  Crossing counts against the two families of grid lines use a
half-open rule throughout: a segment whose endpoint coordinates sort to
``(a, b)`` crosses the line at position ``p`` iff ``a < p <= b``.  The rule
makes vertex-on-line ties deterministic, so degenerate casts are counted,
never resampled.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Literal

SQRT3 = math.sqrt(3.0)
TWO_PI = 2.0 * math.pi
THIRD_TURN = TWO_PI / 3.0

Point = tuple[float, float]
Vertices = tuple[Point, Point, Point]

Axis = Literal["x", "y"]
_AXIS_INDEX = {"x": 0, "y": 1}


@dataclass(frozen=True)
class TriangleSpec:
    """An equilateral triangle cast: center, side length, rotation angle.

    The rotation is the angle of vertex 0 on the circumcircle and must lie
    in [0, 2*pi); samplers produce angles in that range.
    """

    center: Point
    side: float
    rotation: float

    def __post_init__(self) -> None:
        if not (math.isfinite(self.side) and self.side > 0):
            raise ValueError(f"side must be a positive finite length, got {self.side}")
        if not (0.0 <= self.rotation < TWO_PI):
            raise ValueError(f"rotation must lie in [0, 2*pi), got {self.rotation}")

    @property
    def circumradius(self) -> float:
        return self.side / SQRT3

    def vertices(self) -> Vertices:
        return make_triangle(self.center, self.side, self.rotation)


@dataclass(frozen=True)
class GridSpec:
    """Square tiling with lines at ``offset + k * spacing`` along each axis."""

    spacing: float
    offset_x: float
    offset_y: float

    def __post_init__(self) -> None:
        if not (math.isfinite(self.spacing) and self.spacing > 0):
            raise ValueError(f"spacing must be a positive finite length, got {self.spacing}")
        for name in ("offset_x", "offset_y"):
            value = getattr(self, name)
            if not 0.0 <= value < self.spacing:
                raise ValueError(f"{name} must lie in [0, spacing), got {value}")


@dataclass(frozen=True)
class CrossingTally:
    """Per-family crossing counts for one cast (or summed over casts)."""

    count_x: int
    count_y: int

    def __post_init__(self) -> None:
        if self.count_x < 0 or self.count_y < 0:
            raise ValueError("crossing counts cannot be negative")

    @property
    def total(self) -> int:
        return self.count_x + self.count_y


def make_triangle(center: Point, side: float, rotation: float) -> Vertices:
    """Vertices of the equilateral triangle inscribed in its circumcircle.

    Vertex k is ``center + r * (cos(rotation + k*2*pi/3),
    sin(rotation + k*2*pi/3))`` with ``r = side / sqrt(3)``.  Vertices are
    returned in construction order, not sorted.  Any finite rotation is
    accepted.
    """
    if not (math.isfinite(side) and side > 0):
        raise ValueError(f"side must be a positive finite length, got {side}")
    if not math.isfinite(rotation):
        raise ValueError(f"rotation must be finite, got {rotation}")
    cx, cy = center
    if not (math.isfinite(cx) and math.isfinite(cy)):
        raise ValueError(f"center must be finite, got {center}")
    r = side / SQRT3
    points = []
    for k in range(3):
        angle = rotation + k * THIRD_TURN
        points.append((cx + r * math.cos(angle), cy + r * math.sin(angle)))
    return (points[0], points[1], points[2])


def sorted_axis_coords(v: Vertices, axis: Axis) -> tuple[float, float, float]:
    """The three vertex coordinates along one axis, ascending."""
    try:
        i = _AXIS_INDEX[axis]
    except KeyError:
        raise ValueError(f"axis must be 'x' or 'y', got {axis!r}") from None
    a, b, c = sorted((v[0][i], v[1][i], v[2][i]))
    return (a, b, c)


def segment_crosses_line(p_coord: float, q_coord: float, line_pos: float) -> bool:
    """Half-open crossing test: ``min(p, q) < line_pos <= max(p, q)``."""
    if p_coord <= q_coord:
        return p_coord < line_pos <= q_coord
    return q_coord < line_pos <= p_coord


def count_line_crossings_sorted(
    coords: tuple[float, float, float], line_pos: float
) -> int:
    """Crossings of one grid line against the three sorted-coordinate pairs.

    ``coords`` must be nondecreasing.  Each index pair (i, j) with i < j
    contributes one crossing iff ``coords[i] < line_pos <= coords[j]``.  For
    an actual triangle this equals the number of true sides crossed, because
    sorting coordinates permutes which pairs bound the line but not how many.
    """
    a0, a1, a2 = coords
    n = 0
    if a0 < line_pos <= a1:
        n += 1
    if a0 < line_pos <= a2:
        n += 1
    if a1 < line_pos <= a2:
        n += 1
    return n


def _family_crossings(
    coords: tuple[float, float, float], offset: float, spacing: float
) -> int:
    """Sum crossings over every grid line inside the coordinate extent.

    Candidate lines are enumerated from the bounding interval: starting
    below ``coords[0]`` and stepping by ``spacing`` while the position stays
    at or below ``coords[2]``.
    """
    lo = coords[0]
    hi = coords[2]
    k = math.floor((lo - offset) / spacing)
    count = 0
    while True:
        k += 1
        pos = offset + k * spacing
        if pos > hi:
            return count
        count += count_line_crossings_sorted(coords, pos)


def crossings_per_cast(v: Vertices, grid: GridSpec) -> CrossingTally:
    """Count grid-line crossings of one cast, per line family.

    Vertical lines (x family) are tested against sorted x coordinates,
    horizontal lines against sorted y coordinates.
    """
    count_x = _family_crossings(sorted_axis_coords(v, "x"), grid.offset_x, grid.spacing)
    count_y = _family_crossings(sorted_axis_coords(v, "y"), grid.offset_y, grid.spacing)
    return CrossingTally(count_x, count_y)
