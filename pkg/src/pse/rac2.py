"""Restricted two-bend constructions.

* bracket drawings from a proper 4-edge-colouring (max degree 3),
* minimum-area book drawings of perfect matchings on collinear points,
* a mapping-free book layout for graphs of max degree 2.
"""
from __future__ import annotations

import enum
import heapq
from typing import Dict, List, Optional, Sequence, Tuple

from .errors import DegreeTooHigh, NotPerfectMatching, PSEError, SizeMismatch
from .model import Drawing, PointSet, SimpleGraph, check_mapping, make_drawing, validate_instance


class Color(enum.IntEnum):
    """Direction in which both end segments of a bracket edge leave."""

    RIGHT = 0
    LEFT = 1
    UP = 2
    DOWN = 3


NUM_COLORS = 4


class _Coloring:
    """Misra-Gries edge colouring with a fixed palette of 4 colours."""

    def __init__(self, n: int):
        self.at: List[Dict[int, int]] = [dict() for _ in range(n)]  # colour -> neighbour

    def free(self, x: int) -> int:
        for c in range(NUM_COLORS):
            if c not in self.at[x]:
                return c
        raise DegreeTooHigh(f"vertex {x} has no free colour")

    def color_of(self, a: int, b: int) -> Optional[int]:
        for c, y in self.at[a].items():
            if y == b:
                return c
        return None

    def set(self, a: int, b: int, c: int) -> None:
        self.at[a][c] = b
        self.at[b][c] = a

    def unset(self, a: int, b: int) -> None:
        c = self.color_of(a, b)
        del self.at[a][c]
        del self.at[b][c]

    def _fan(self, u: int, v: int) -> List[int]:
        fan, members = [v], {v}
        while True:
            last = fan[-1]
            nxt = None
            for c, x in self.at[u].items():
                if x not in members and c not in self.at[last]:
                    nxt = x
                    break
            if nxt is None:
                return fan
            fan.append(nxt)
            members.add(nxt)

    def _invert_path(self, start: int, c: int, d: int) -> None:
        path = []
        x, want = start, d
        while want in self.at[x]:
            y = self.at[x][want]
            path.append((x, y, want))
            x, want = y, (c if want == d else d)
        for a, b, _ in path:
            self.unset(a, b)
        for a, b, col in path:
            self.set(a, b, c if col == d else d)

    def _is_fan_prefix(self, u: int, fan: List[int], w: int) -> bool:
        for i in range(w):
            col = self.color_of(u, fan[i + 1])
            if col is None or col in self.at[fan[i]]:
                return False
        return True

    def add(self, u: int, v: int) -> None:
        fan = self._fan(u, v)
        c, d = self.free(u), self.free(fan[-1])
        self._invert_path(u, c, d)
        w = next(
            i for i in range(len(fan)) if d not in self.at[fan[i]] and self._is_fan_prefix(u, fan, i)
        )
        shifted = [self.color_of(u, fan[i + 1]) for i in range(w)]
        for i in range(1, w + 1):
            self.unset(u, fan[i])
        for i in range(w):
            self.set(u, fan[i], shifted[i])
        self.set(u, fan[w], d)


def edge_color_4(g: SimpleGraph) -> List[Color]:
    """Proper edge colouring with at most four colours (max degree 3)."""
    if g.max_degree() > 3:
        raise DegreeTooHigh(f"maximum degree {g.max_degree()} exceeds 3")
    col = _Coloring(g.n)
    for u, v in g.edges:
        col.add(u, v)
    return [Color(col.color_of(u, v)) for u, v in g.edges]


def is_proper_coloring(g: SimpleGraph, colors: Sequence[int]) -> bool:
    seen = set()
    for (u, v), c in zip(g.edges, colors):
        for x in (u, v):
            if (x, c) in seen:
                return False
            seen.add((x, c))
    return True


def bracket_bends(pu, pv, color: Color, k: int, n: int) -> Tuple[Tuple[int, int], Tuple[int, int]]:
    """Bends of edge number ``k`` (1-based) whose ends leave in ``color``."""
    if color == Color.RIGHT:
        line = n + 1 + k
        return (line, pu[1]), (line, pv[1])
    if color == Color.LEFT:
        return (-k, pu[1]), (-k, pv[1])
    if color == Color.UP:
        line = n + 1 + k
        return (pu[0], line), (pv[0], line)
    return (pu[0], -k), (pv[0], -k)


def bracket_embed(
    g: SimpleGraph, s: PointSet, mu: Sequence[int], colors: Optional[Sequence[Color]] = None
) -> Drawing:
    """Restricted two-bend drawing where both end segments of an edge leave
    in the direction given by its colour and the middle segment runs on a
    line outside the grid reserved for that edge alone."""
    inst = validate_instance(g, s, mu)
    if colors is None:
        colors = edge_color_4(g)
    elif not is_proper_coloring(g, colors):
        raise PSEError("edge colouring is not proper")
    pts, mapping, n = s.points, inst.mapping, len(s)
    bends = [
        bracket_bends(pts[mapping[u]], pts[mapping[v]], Color(c), k, n)
        for k, ((u, v), c) in enumerate(zip(g.edges, colors), start=1)
    ]
    return make_drawing(pts, mapping, g.edges, bends)


# ------------------------------------------------------------ matchings


def _collinear_mapping(g: SimpleGraph, s: PointSet, mu: Optional[Sequence[int]]) -> Tuple[int, ...]:
    if not s.collinear:
        raise PSEError("this construction needs a collinear point set (collinear: true)")
    if g.n != len(s):
        raise SizeMismatch(f"{g.n} vertices but {len(s)} points")
    if mu is None:
        return tuple(range(g.n))
    return check_mapping(mu, g.n)


def interval_layers(intervals: Sequence[Tuple[int, int]]) -> Tuple[List[int], int]:
    """Optimal colouring of closed intervals with distinct endpoints.

    Sweeps by left endpoint, reusing the smallest layer freed so far.
    Returns (1-based layer per interval, number of layers).
    """
    order = sorted(range(len(intervals)), key=lambda i: intervals[i][0])
    active: List[Tuple[int, int]] = []  # (right end, layer)
    free: List[int] = []
    layer = [0] * len(intervals)
    count = 0
    for i in order:
        lo, hi = intervals[i]
        while active and active[0][0] < lo:
            heapq.heappush(free, heapq.heappop(active)[1])
        if free:
            ell = heapq.heappop(free)
        else:
            count += 1
            ell = count
        layer[i] = ell
        heapq.heappush(active, (hi, ell))
    return layer, count


def max_interval_overlap(intervals: Sequence[Tuple[int, int]]) -> int:
    events = sorted([(lo, 1) for lo, _ in intervals] + [(hi, -1) for _, hi in intervals], key=lambda e: (e[0], -e[1]))
    best = cur = 0
    for _, delta in events:
        cur += delta
        best = max(best, cur)
    return best


def matching_min_area(
    s: PointSet, g: SimpleGraph, mu: Optional[Sequence[int]] = None
) -> Tuple[Drawing, int]:
    """Minimum-area restricted two-bend drawing of a perfect matching on
    points of the y-axis, right of the axis.

    Pairs matched to consecutive points become straight segments on the
    axis; every other edge leaves both endpoints rightwards and runs
    vertically on its layer column. Returns (drawing, number of layers).
    """
    mapping = _collinear_mapping(g, s, mu)
    if any(d != 1 for d in g.degrees()):
        raise NotPerfectMatching("every vertex must have exactly one incident edge")
    pts = s.points
    rank = {p: r for r, p in enumerate(s.by_y())}
    long_edges, intervals = [], []
    for i, (u, v) in enumerate(g.edges):
        pu, pv = mapping[u], mapping[v]
        if abs(rank[pu] - rank[pv]) != 1:
            long_edges.append(i)
            intervals.append(tuple(sorted((pts[pu][1], pts[pv][1]))))
    layers, count = interval_layers(intervals)
    bends: List[List[Tuple[int, int]]] = [[] for _ in g.edges]
    for i, ell in zip(long_edges, layers):
        u, v = g.edges[i]
        bends[i] = [(ell, pts[mapping[u]][1]), (ell, pts[mapping[v]][1])]
    return make_drawing(pts, mapping, g.edges, bends), count


# ------------------------------------------------------- max degree two


def _component_sequence(comp: List[int], adj: List[List[int]]) -> Tuple[List[int], bool]:
    ends = [v for v in comp if len(adj[v]) <= 1]
    start = min(ends) if ends else min(comp)
    seq, prev, cur = [start], -1, start
    while True:
        nxt = [w for w in adj[cur] if w != prev and w != start]
        if not nxt:
            break
        prev, cur = cur, nxt[0]
        seq.append(cur)
    return seq, not ends and len(comp) >= 3


def book_embed_maxdeg2_unmapped(g: SimpleGraph, s: PointSet) -> Drawing:
    """Components one after another from the top point down; path edges
    run on the axis, each cycle closes through column 1."""
    _collinear_mapping(g, s, None)
    if g.max_degree() > 2:
        raise DegreeTooHigh(f"maximum degree {g.max_degree()} exceeds 2")
    adj = g.adjacency()
    top_down = list(reversed(s.by_y()))
    mapping = [-1] * g.n
    closing = set()
    pos = 0
    for comp in g.components():
        seq, is_cycle = _component_sequence(comp, adj)
        for v in seq:
            mapping[v] = top_down[pos]
            pos += 1
        if is_cycle:
            closing.add((min(seq[0], seq[-1]), max(seq[0], seq[-1])))
    pts = s.points
    bends = []
    for u, v in g.edges:
        if (min(u, v), max(u, v)) in closing:
            bends.append([(1, pts[mapping[u]][1]), (1, pts[mapping[v]][1])])
        else:
            bends.append([])
    return make_drawing(pts, mapping, g.edges, bends)
