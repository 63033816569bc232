"""Exact integer geometry: segment intersection, containment and angle tests.

Coordinates are Python ints (or ``Fraction`` for hand-edited drawings), so
every predicate here is exact. Intersection points come back as pairs of
``Fraction``.
"""
from __future__ import annotations

import enum
import math
from dataclasses import dataclass
from decimal import Decimal, InvalidOperation
from fractions import Fraction
from operator import itemgetter
from typing import Optional, Tuple, Union

Number = Union[int, Fraction]
Point = Tuple[Number, Number]


class Segment(tuple):
    """Closed segment between two distinct points."""

    __slots__ = ()

    def __new__(cls, a: Point, b: Point) -> "Segment":
        if a[0] == b[0] and a[1] == b[1]:
            raise ValueError(f"zero-length segment at {a}")
        return tuple.__new__(cls, (tuple(a), tuple(b)))

    a = property(itemgetter(0))
    b = property(itemgetter(1))

    @property
    def direction(self) -> Point:
        return (self.b[0] - self.a[0], self.b[1] - self.a[1])

    def is_horizontal(self) -> bool:
        return self.a[1] == self.b[1]

    def is_vertical(self) -> bool:
        return self.a[0] == self.b[0]

    def __repr__(self) -> str:
        return f"Segment({self.a}, {self.b})"


class Kind(enum.Enum):
    DISJOINT = "Disjoint"
    SHARED_ENDPOINT = "SharedEndpoint"
    PROPER_CROSS = "ProperCross"
    TOUCH_AT_INTERIOR = "TouchAtInterior"
    COLLINEAR_OVERLAP = "CollinearOverlap"


@dataclass(frozen=True)
class Intersection:
    kind: Kind
    point: Optional[Tuple[Fraction, Fraction]] = None
    overlap: Optional[Segment] = None

    @property
    def is_single_point(self) -> bool:
        return self.point is not None


DISJOINT = Intersection(Kind.DISJOINT)


def cross(ux: Number, uy: Number, vx: Number, vy: Number) -> Number:
    return ux * vy - uy * vx


def orient(p: Point, q: Point, r: Point) -> int:
    """Sign of the turn p -> q -> r (+1 left, -1 right, 0 collinear)."""
    c = (q[0] - p[0]) * (r[1] - p[1]) - (q[1] - p[1]) * (r[0] - p[0])
    return (c > 0) - (c < 0)


def _frac_point(p: Point) -> Tuple[Fraction, Fraction]:
    return (Fraction(p[0]), Fraction(p[1]))


def intersect(s1: Segment, s2: Segment) -> Intersection:
    (ax, ay), (bx, by) = s1
    (cx, cy), (dx, dy) = s2
    d1x, d1y = bx - ax, by - ay
    d2x, d2y = dx - cx, dy - cy
    wx, wy = cx - ax, cy - ay
    denom = d1x * d2y - d1y * d2x

    if denom == 0:
        if wx * d1y - wy * d1x != 0:
            return DISJOINT
        # collinear: compare positions along s1
        length2 = d1x * d1x + d1y * d1y
        t_c = wx * d1x + wy * d1y
        t_d = (dx - ax) * d1x + (dy - ay) * d1y
        lo_t, lo_p = (t_c, s2.a) if t_c <= t_d else (t_d, s2.b)
        hi_t, hi_p = (t_d, s2.b) if t_c <= t_d else (t_c, s2.a)
        if lo_t < 0:
            lo_t, lo_p = 0, s1.a
        if hi_t > length2:
            hi_t, hi_p = length2, s1.b
        if lo_t > hi_t:
            return DISJOINT
        if lo_t == hi_t:
            return Intersection(Kind.SHARED_ENDPOINT, _frac_point(lo_p))
        return Intersection(Kind.COLLINEAR_OVERLAP, overlap=Segment(lo_p, hi_p))

    t_num = wx * d2y - wy * d2x
    u_num = wx * d1y - wy * d1x
    if denom < 0:
        denom, t_num, u_num = -denom, -t_num, -u_num
    if t_num < 0 or t_num > denom or u_num < 0 or u_num > denom:
        return DISJOINT
    end1 = t_num == 0 or t_num == denom
    end2 = u_num == 0 or u_num == denom
    if t_num == 0:
        point = _frac_point(s1.a)
    elif t_num == denom:
        point = _frac_point(s1.b)
    else:
        point = (ax + Fraction(d1x * t_num, denom), ay + Fraction(d1y * t_num, denom))
    if end1 and end2:
        kind = Kind.SHARED_ENDPOINT
    elif end1 or end2:
        kind = Kind.TOUCH_AT_INTERIOR
    else:
        kind = Kind.PROPER_CROSS
    return Intersection(kind, point)


def segments_overlap(s1: Segment, s2: Segment) -> bool:
    """True iff the segments share a sub-segment of positive length."""
    (ax, ay), (bx, by) = s1
    (cx, cy), (dx, dy) = s2
    d1x, d1y = bx - ax, by - ay
    if (cx - ax) * d1y - (cy - ay) * d1x != 0:
        return False
    if (dx - ax) * d1y - (dy - ay) * d1x != 0:
        return False
    length2 = d1x * d1x + d1y * d1y
    t_c = (cx - ax) * d1x + (cy - ay) * d1y
    t_d = (dx - ax) * d1x + (dy - ay) * d1y
    if t_c > t_d:
        t_c, t_d = t_d, t_c
    return max(t_c, 0) < min(t_d, length2)


def point_on_interior(p: Point, s: Segment) -> bool:
    """Collinear and strictly between the endpoints."""
    (ax, ay), (bx, by) = s
    dx, dy = bx - ax, by - ay
    px, py = p[0] - ax, p[1] - ay
    if px * dy - py * dx != 0:
        return False
    t = px * dx + py * dy
    return 0 < t < dx * dx + dy * dy


def point_on_segment(p: Point, s: Segment) -> bool:
    """Collinear and between the endpoints, endpoints included."""
    (ax, ay), (bx, by) = s
    dx, dy = bx - ax, by - ay
    px, py = p[0] - ax, p[1] - ay
    if px * dy - py * dx != 0:
        return False
    t = px * dx + py * dy
    return 0 <= t <= dx * dx + dy * dy


# ---------------------------------------------------------------- angles

_SIN2_DIGITS = 10**12
_COT_SNAP = 1e-9


@dataclass(frozen=True)
class AngleSpec:
    """An angle together with an exact rational lower bound on its sin^2.

    ``cot`` is set only when the angle was built from an exact cotangent,
    in which case ceil(cot) and the complement's sin^2 are computed exactly.
    """

    degrees: float
    sin2: Fraction
    cot: Optional[Fraction] = None

    @classmethod
    def from_degrees(cls, degrees: float) -> "AngleSpec":
        degrees = float(degrees)
        if not 0 < degrees <= 90:
            raise ValueError(f"angle must lie in (0, 90] degrees, got {degrees}")
        if degrees == 90:
            return cls.right()
        s = math.sin(math.radians(degrees))
        return cls(degrees, Fraction(math.floor(s * s * _SIN2_DIGITS), _SIN2_DIGITS))

    @classmethod
    def from_decimal_text(cls, text: str) -> "AngleSpec":
        """Parse decimal degrees as typed by a user.

        When the angle with integer cotangent c agrees with the text to the
        precision it was written in (8.13 vs arccot 7 = 8.1301...), the
        exact angle arccot c is returned instead.
        """
        try:
            dec = Decimal(text.strip())
        except InvalidOperation:
            raise ValueError(f"not a decimal angle: {text!r}") from None
        degrees = float(dec)
        if not 0 < degrees < 90:
            return cls.from_degrees(degrees)
        half_ulp = 0.5 * 10.0 ** dec.as_tuple().exponent
        c = round(1.0 / math.tan(math.radians(degrees)))
        if c >= 1 and abs(math.degrees(math.atan2(1, c)) - degrees) <= half_ulp:
            return cls.from_cot(c)
        return cls.from_degrees(degrees)

    @classmethod
    def right(cls) -> "AngleSpec":
        return cls(90.0, Fraction(1), Fraction(0))

    @classmethod
    def from_cot(cls, cot) -> "AngleSpec":
        """Angle in (0, 90) with the given exact positive cotangent."""
        cot = Fraction(cot)
        if cot <= 0:
            raise ValueError("cotangent must be positive")
        degrees = math.degrees(math.atan2(1, float(cot)))
        return cls(degrees, 1 / (1 + cot * cot), cot)

    @property
    def is_right(self) -> bool:
        return self.sin2 == 1

    @property
    def radians(self) -> float:
        return math.radians(self.degrees)

    def ceil_cot(self) -> int:
        """Smallest integer >= cot of this angle.

        Float cotangents within 1e-9 of an integer snap to that integer, so
        45 degrees gives 1 and not 2.
        """
        if self.cot is not None:
            return math.ceil(self.cot)
        c = 1.0 / math.tan(self.radians)
        nearest = round(c)
        if abs(c - nearest) <= _COT_SNAP:
            return int(nearest)
        return math.ceil(c)

    def complement(self) -> "AngleSpec":
        """The angle 90 degrees minus this one."""
        if self.is_right:
            raise ValueError("complement of a right angle is zero")
        if self.cot is not None:
            c2 = self.cot * self.cot
            return AngleSpec(90.0 - self.degrees, c2 / (1 + c2), 1 / self.cot)
        c = math.cos(self.radians)
        return AngleSpec(
            90.0 - self.degrees, Fraction(math.floor(c * c * _SIN2_DIGITS), _SIN2_DIGITS)
        )


def sin2_between(u: Point, v: Point) -> Fraction:
    """Exact sin^2 of the angle between two direction vectors."""
    c = u[0] * v[1] - u[1] * v[0]
    return Fraction(c * c) / ((u[0] * u[0] + u[1] * u[1]) * (v[0] * v[0] + v[1] * v[1]))


def angle_ok(u: Point, v: Point, alpha: AngleSpec) -> bool:
    """Does the smaller angle between directions u and v reach alpha?"""
    if alpha.is_right:
        return u[0] * v[0] + u[1] * v[1] == 0
    c = u[0] * v[1] - u[1] * v[0]
    q = alpha.sin2
    norms = (u[0] * u[0] + u[1] * u[1]) * (v[0] * v[0] + v[1] * v[1])
    return c * c * q.denominator >= q.numerator * norms


def crossing_angle_satisfies(s1: Segment, s2: Segment, alpha: AngleSpec) -> bool:
    hit = intersect(s1, s2)
    if not hit.is_single_point:
        raise ValueError(f"segments do not meet in a single point ({hit.kind.value})")
    return angle_ok(s1.direction, s2.direction, alpha)


def sin2_to_degrees(sin2) -> float:
    return math.degrees(math.asin(math.sqrt(min(1.0, float(sin2)))))
