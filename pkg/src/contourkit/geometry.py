"""Integer-pixel primitives and the distance/angle math behind hit testing.

All scene geometry lives on the integer pixel grid (y grows downward, as on
screen). Distances and angles are computed in real arithmetic and rounded
only when written back to grid coordinates, which keeps replay deterministic.
"""

from __future__ import annotations

import math
from dataclasses import dataclass


@dataclass(frozen=True)
class Pt:
    """A point on the screen, in integer pixels."""

    x: int
    y: int

    def __add__(self, d: "Delta") -> "Pt":
        return Pt(self.x + d.dx, self.y + d.dy)

    def __sub__(self, other: "Pt") -> "Delta":
        return Delta(self.x - other.x, self.y - other.y)


@dataclass(frozen=True)
class Delta:
    """A displacement in integer pixels."""

    dx: int
    dy: int

    def __neg__(self) -> "Delta":
        return Delta(-self.dx, -self.dy)

    def __add__(self, other: "Delta") -> "Delta":
        return Delta(self.dx + other.dx, self.dy + other.dy)


@dataclass(frozen=True)
class Seg:
    """A segment between two points; endpoints may coincide."""

    a: Pt
    b: Pt


@dataclass
class Rect:
    """Axis-aligned rectangle (left, top, width, height)."""

    left: int
    top: int
    width: int
    height: int

    @property
    def right(self) -> int:
        return self.left + self.width

    @property
    def bottom(self) -> int:
        return self.top + self.height

    @property
    def center(self) -> Pt:
        return Pt(self.left + self.width // 2, self.top + self.height // 2)

    def translate(self, d: Delta) -> None:
        self.left += d.dx
        self.top += d.dy


def iround(v: float) -> int:
    """Round to the nearest pixel, halves away from the origin side (up)."""
    return math.floor(v + 0.5)


def dist_point_segment(p: Pt, s: Seg) -> float:
    """Euclidean distance from p to the nearest point of s.

    A degenerate segment (a == b) measures distance to the single point.
    The branch tests and the cross product run on exact integers, so the
    result is bit-identical whichever way round the segment is given.
    """
    abx = s.b.x - s.a.x
    aby = s.b.y - s.a.y
    apx = p.x - s.a.x
    apy = p.y - s.a.y
    ab2 = abx * abx + aby * aby
    dot = apx * abx + apy * aby
    if ab2 == 0 or dot <= 0:
        return math.hypot(apx, apy)
    if dot >= ab2:
        return math.hypot(p.x - s.b.x, p.y - s.b.y)
    cross = apx * aby - apy * abx
    return abs(cross) / math.sqrt(ab2)


def screen_angle_deg(center: Pt, p: Pt) -> float:
    """Angle of p around center in degrees, counterclockwise on screen.

    Screen y grows downward, so the angle is the negated atan2 of the raw
    deltas; the positive x axis is 0 and straight up is +90. The result is
    normalized into (-180, 180].
    """
    if p == center:
        raise ValueError("undefined angle at center")
    deg = -math.degrees(math.atan2(p.y - center.y, p.x - center.x))
    if deg <= -180.0:
        deg += 360.0
    return deg


def rotate_point(center: Pt, p: Pt, deg: float) -> Pt:
    """Rotate p about center by deg (same screen-CCW sense as screen_angle_deg).

    The exact rotation is computed in floats and rounded once to the grid.
    """
    rad = math.radians(deg)
    c = math.cos(rad)
    s = math.sin(rad)
    dx = p.x - center.x
    dy = p.y - center.y
    nx = dx * c + dy * s
    ny = -dx * s + dy * c
    return Pt(center.x + iround(nx), center.y + iround(ny))


def wrap_angle_deg(deg: float) -> float:
    """Normalize an angle difference into (-180, 180]."""
    deg = math.fmod(deg, 360.0)
    if deg <= -180.0:
        deg += 360.0
    elif deg > 180.0:
        deg -= 360.0
    return deg
