"""Exact integer planar geometry in quarter-units.

All coordinates are integers at four times the grid scale, so every
distance that matters (1/4, 1/2, 3/4, 1 in grid units) has an integer
squared value (1, 4, 9, 16) and every comparison is bit-exact.  Actual
radii are never materialized as reals; everything works on squared
lengths.
"""

from typing import NamedTuple


class Point(NamedTuple):
    """Planar position in integer quarter-units."""

    x: int
    y: int

    def translated(self, dx: int, dy: int) -> "Point":
        return Point(self.x + dx, self.y + dy)


def sq_dist(p: Point, q: Point) -> int:
    """Exact squared Euclidean distance between two points."""
    dx = p.x - q.x
    dy = p.y - q.y
    return dx * dx + dy * dy


def in_closed_disk(center: Point, sq_radius: int, p: Point) -> bool:
    """Whether p lies in the closed disk around center (boundary included).

    The closed convention is load-bearing: partner satellites sit at a
    distance exactly equal to their transmission radius.
    """
    return sq_dist(center, p) <= sq_radius
