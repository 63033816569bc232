"""Exact style-conformance checking of polyline drawings.

Every check runs on exact integer (or rational) coordinates. numpy is used
only to prune segment pairs and segment/vertex pairs that cannot touch;
every surviving pair is classified by :func:`pse.geometry.intersect`.
"""
from __future__ import annotations

import enum
from collections import Counter
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Dict, List, Optional, Sequence, Tuple

import numpy as np

from .errors import MalformedDrawing
from .geometry import (
    AngleSpec,
    Kind,
    Point,
    Segment,
    angle_ok,
    intersect,
    point_on_interior,
    sin2_between,
    sin2_to_degrees,
)
from .model import Drawing, SimpleGraph, StyleSpec, edge_key

_NUMPY_LIMIT = 1 << 29
_CHUNK = 512


class ViolationKind(str, enum.Enum):
    OVERLAP = "Overlap"
    ANGLE_TOO_SMALL = "AngleTooSmall"
    BEND_OFF_GRID = "BendOffGrid"
    SEGMENT_OFF_GRID = "SegmentOffGrid"
    THROUGH_VERTEX = "ThroughVertex"
    TOO_MANY_BENDS = "TooManyBends"
    MAPPING_MISMATCH = "MappingMismatch"
    ADJACENT_EDGE_CROSS = "AdjacentEdgeCross"
    ZERO_LENGTH_SEGMENT = "ZeroLengthSegment"


@dataclass(frozen=True)
class Violation:
    kind: ViolationKind
    edges: Tuple[int, ...] = ()
    location: Optional[Tuple] = None


@dataclass(frozen=True)
class Crossing:
    """Two distinct edges meeting at a point that is not a vertex."""

    edges: Tuple[int, int]
    point: Tuple[Fraction, Fraction]
    directions: Tuple[Tuple[Point, Point], ...]
    sin2: Fraction


@dataclass
class DrawingStats:
    crossing_count: int
    min_angle_sin2: Optional[Fraction]
    min_angle_degrees: Optional[float]
    bounding_box: Optional[Tuple[int, int, int, int]]
    max_bends: int
    bend_histogram: Dict[int, int]
    lam: int

    @property
    def min_angle_is_right(self) -> Optional[bool]:
        if self.min_angle_sin2 is None:
            return None
        return self.min_angle_sin2 == 1

    @property
    def width(self) -> int:
        return self.bounding_box[2] - self.bounding_box[0] if self.bounding_box else 0

    @property
    def height(self) -> int:
        return self.bounding_box[3] - self.bounding_box[1] if self.bounding_box else 0


@dataclass
class VerificationReport:
    violations: List[Violation]
    stats: DrawingStats
    crossings: List[Crossing] = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return not self.violations

    def kinds(self) -> Counter:
        return Counter(v.kind for v in self.violations)


def _is_integral(c) -> bool:
    if isinstance(c, (int, np.integer)) and not isinstance(c, bool):
        return True
    return isinstance(c, Fraction) and c.denominator == 1


class _Scanner:
    def __init__(self, d: Drawing, alpha: Optional[AngleSpec], forbid_adjacent: bool):
        self.d = d
        self.alpha = alpha
        self.forbid_adjacent = forbid_adjacent
        self.violations: List[Violation] = []
        self.crossings: Dict[Tuple, Crossing] = {}
        self.vertex_at: Dict[Point, int] = {d.vertex_point(w): w for w in range(d.n)}
        self.polylines = [d.polyline(i) for i in range(len(d.edges))]
        self.segments: List[Tuple[int, int, Segment]] = []

    def add(self, kind, edges=(), location=None):
        self.violations.append(Violation(kind, tuple(edges), location))

    def run(self):
        self._per_edge()
        self._through_vertex()
        self._pairs()
        return self

    def _per_edge(self):
        for i, pl in enumerate(self.polylines):
            for b in self.d.edges[i].bends:
                if not (_is_integral(b[0]) and _is_integral(b[1])):
                    self.add(ViolationKind.BEND_OFF_GRID, (i,), tuple(b))
                if tuple(b) in self.vertex_at:
                    self.add(ViolationKind.THROUGH_VERTEX, (i,), tuple(b))
            for j in range(len(pl) - 1):
                p, q = pl[j], pl[j + 1]
                if p[0] == q[0] and p[1] == q[1]:
                    self.add(ViolationKind.ZERO_LENGTH_SEGMENT, (i,), tuple(p))
                    continue
                self.segments.append((i, j, Segment(p, q)))

    def _through_vertex(self):
        segs = [s for _, _, s in self.segments]
        verts = list(self.vertex_at)
        for si, vi in _candidate_point_hits(segs, verts):
            e, _, s = self.segments[si]
            p = verts[vi]
            if point_on_interior(p, s):
                self.add(ViolationKind.THROUGH_VERTEX, (e,), tuple(p))

    def _pairs(self):
        segs = self.segments
        ends = [(e.u, e.v) for e in self.d.edges]
        for a, b in _candidate_segment_pairs([s for _, _, s in segs]):
            ei, si, s = segs[a]
            ej, sj, t = segs[b]
            hit = intersect(s, t)
            if hit.kind is Kind.DISJOINT:
                continue
            if hit.kind is Kind.COLLINEAR_OVERLAP:
                self.add(ViolationKind.OVERLAP, sorted({ei, ej}), hit.overlap.a)
                continue
            if ei == ej:
                continue
            p = hit.point
            if p in self.vertex_at:
                # meeting at a common endpoint is legal; anything else at a
                # vertex is already reported as ThroughVertex
                continue
            if ei > ej:
                ei, ej, s, t = ej, ei, t, s
            key = (ei, ej, p)
            pair = (s.direction, t.direction)
            sin2 = sin2_between(*pair)
            old = self.crossings.get(key)
            if old is None:
                self.crossings[key] = Crossing((ei, ej), p, (pair,), sin2)
            else:
                self.crossings[key] = Crossing(
                    (ei, ej), p, old.directions + (pair,), min(old.sin2, sin2)
                )
        for (ei, ej, p), c in self.crossings.items():
            if self.alpha is not None and not all(
                angle_ok(u, v, self.alpha) for u, v in c.directions
            ):
                self.add(ViolationKind.ANGLE_TOO_SMALL, (ei, ej), p)
            if self.forbid_adjacent and set(ends[ei]) & set(ends[ej]):
                self.add(ViolationKind.ADJACENT_EDGE_CROSS, (ei, ej), p)

    def stats(self) -> DrawingStats:
        xs = [p[0] for pl in self.polylines for p in pl] + [p[0] for p in self.vertex_at]
        ys = [p[1] for pl in self.polylines for p in pl] + [p[1] for p in self.vertex_at]
        box = (min(xs), min(ys), max(xs), max(ys)) if xs else None
        hist = Counter(len(e.bends) for e in self.d.edges)
        sin2 = min((c.sin2 for c in self.crossings.values()), default=None)
        return DrawingStats(
            crossing_count=len(self.crossings),
            min_angle_sin2=sin2,
            min_angle_degrees=None if sin2 is None else sin2_to_degrees(sin2),
            bounding_box=box,
            max_bends=max(hist, default=0),
            bend_histogram=dict(sorted(hist.items())),
            lam=self.d.lam,
        )


def _int_array(rows) -> Optional[np.ndarray]:
    flat = [c for r in rows for c in r]
    if not all(_is_integral(c) for c in flat):
        return None
    ints = [int(c) for c in flat]
    if ints and max(abs(c) for c in ints) >= _NUMPY_LIMIT:
        return None
    return np.array(ints, dtype=np.int64).reshape(len(rows), -1)


def _candidate_segment_pairs(segs: Sequence[Segment]):
    """Index pairs (a < b) of segments that may share a point."""
    S = len(segs)
    arr = _int_array([(s.a[0], s.a[1], s.b[0], s.b[1]) for s in segs]) if S else None
    if arr is None:
        for a in range(S):
            for b in range(a + 1, S):
                yield a, b
        return
    ax, ay, bx, by = arr.T
    xlo, xhi = np.minimum(ax, bx), np.maximum(ax, bx)
    ylo, yhi = np.minimum(ay, by), np.maximum(ay, by)
    cols = np.arange(S)
    for r0 in range(0, S, _CHUNK):
        r1 = min(S, r0 + _CHUNK)
        r = slice(r0, r1)
        mask = (
            (xlo[r, None] <= xhi[None, :])
            & (xlo[None, :] <= xhi[r, None])
            & (ylo[r, None] <= yhi[None, :])
            & (ylo[None, :] <= yhi[r, None])
            & (cols[None, :] > np.arange(r0, r1)[:, None])
        )
        ii, jj = np.nonzero(mask)
        ii = ii + r0
        o1 = _orient(ax[ii], ay[ii], bx[ii], by[ii], ax[jj], ay[jj])
        o2 = _orient(ax[ii], ay[ii], bx[ii], by[ii], bx[jj], by[jj])
        o3 = _orient(ax[jj], ay[jj], bx[jj], by[jj], ax[ii], ay[ii])
        o4 = _orient(ax[jj], ay[jj], bx[jj], by[jj], bx[ii], by[ii])
        keep = (o1 * o2 <= 0) & (o3 * o4 <= 0)
        yield from zip(ii[keep].tolist(), jj[keep].tolist())


def _orient(px, py, qx, qy, rx, ry):
    return np.sign((qx - px) * (ry - py) - (qy - py) * (rx - px))


def _candidate_point_hits(segs: Sequence[Segment], pts: Sequence[Point]):
    """(segment, point) index pairs where the point may lie on the segment."""
    if not segs or not pts:
        return
    sarr = _int_array([(s.a[0], s.a[1], s.b[0], s.b[1]) for s in segs])
    parr = _int_array(pts)
    if sarr is None or parr is None:
        for a in range(len(segs)):
            for b in range(len(pts)):
                yield a, b
        return
    ax, ay, bx, by = sarr.T
    px, py = parr.T
    for r0 in range(0, len(segs), _CHUNK):
        r = slice(r0, r0 + _CHUNK)
        dx, dy = (bx[r] - ax[r])[:, None], (by[r] - ay[r])[:, None]
        wx, wy = px[None, :] - ax[r, None], py[None, :] - ay[r, None]
        on_line = wx * dy - wy * dx == 0
        t = wx * dx + wy * dy
        inside = on_line & (t > 0) & (t < dx * dx + dy * dy)
        ii, jj = np.nonzero(inside)
        yield from zip((ii + r0).tolist(), jj.tolist())


def verify(
    d: Drawing,
    style: StyleSpec,
    mapping: Optional[Sequence[int]] = None,
    graph: Optional[SimpleGraph] = None,
) -> VerificationReport:
    """Check a drawing against a style; an empty violation list means it conforms.

    ``mapping`` and ``graph``, when given, are the declared vertex->point
    bijection and the graph the drawing must realize.
    """
    if not isinstance(d, Drawing):
        raise MalformedDrawing(f"expected a Drawing, got {type(d).__name__}")
    scan = _Scanner(d, style.min_angle, style.forbid_adjacent_crossings).run()
    extra: List[Violation] = []
    if style.restricted:
        if d.lam != 1:
            extra.append(Violation(ViolationKind.SEGMENT_OFF_GRID, (), ("lambda", d.lam)))
        for e, _, s in scan.segments:
            if not (s.is_horizontal() or s.is_vertical()):
                extra.append(Violation(ViolationKind.SEGMENT_OFF_GRID, (e,), s.a))
    for i, e in enumerate(d.edges):
        if len(e.bends) > style.max_bends:
            extra.append(Violation(ViolationKind.TOO_MANY_BENDS, (i,), (len(e.bends),)))
    if mapping is not None and tuple(mapping) != tuple(d.mapping):
        extra.append(Violation(ViolationKind.MAPPING_MISMATCH, (), None))
    if graph is not None:
        mine = Counter(edge_key(e.u, e.v) for e in d.edges)
        want = Counter(edge_key(u, v) for u, v in graph.edges)
        if graph.n != d.n or mine != want:
            extra.append(Violation(ViolationKind.MAPPING_MISMATCH, (), ("edges",)))
    return VerificationReport(scan.violations + extra, scan.stats(), list(scan.crossings.values()))


def drawing_stats(d: Drawing) -> DrawingStats:
    if not isinstance(d, Drawing):
        raise MalformedDrawing(f"expected a Drawing, got {type(d).__name__}")
    return _Scanner(d, None, False).run().stats()


def verify_crossings(d: Drawing) -> List[Crossing]:
    """All crossings of a drawing, without any style check."""
    return list(_Scanner(d, None, False).run().crossings.values())
