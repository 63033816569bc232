"""Graphs, point sets, mappings, drawings and drawing styles."""
from __future__ import annotations

from collections import deque
from dataclasses import dataclass, field
from typing import List, Optional, Sequence, Tuple

from .errors import (
    CycleTooSmall,
    DuplicateEdge,
    MalformedDrawing,
    NotATree,
    NotBijective,
    NotPermutationGrid,
    PSEError,
    SelfLoop,
    SizeMismatch,
)
from .geometry import AngleSpec, Point

Edge = Tuple[int, int]


@dataclass(frozen=True)
class SimpleGraph:
    n: int
    edges: Tuple[Edge, ...] = ()

    def __post_init__(self):
        edges = tuple((int(u), int(v)) for u, v in self.edges)
        object.__setattr__(self, "edges", edges)
        if self.n < 0:
            raise PSEError("vertex count must be non-negative")
        seen = set()
        for u, v in edges:
            if not (0 <= u < self.n and 0 <= v < self.n):
                raise PSEError(f"edge ({u}, {v}) references a vertex outside [0, {self.n})")
            if u == v:
                raise SelfLoop(f"self-loop at vertex {u}")
            key = (u, v) if u < v else (v, u)
            if key in seen:
                raise DuplicateEdge(f"duplicate edge {key}")
            seen.add(key)

    @property
    def m(self) -> int:
        return len(self.edges)

    def adjacency(self) -> List[List[int]]:
        adj: List[List[int]] = [[] for _ in range(self.n)]
        for u, v in self.edges:
            adj[u].append(v)
            adj[v].append(u)
        return adj

    def incidence(self) -> List[List[int]]:
        """Edge indices incident to each vertex, in edge-list order."""
        inc: List[List[int]] = [[] for _ in range(self.n)]
        for i, (u, v) in enumerate(self.edges):
            inc[u].append(i)
            inc[v].append(i)
        return inc

    def degrees(self) -> List[int]:
        deg = [0] * self.n
        for u, v in self.edges:
            deg[u] += 1
            deg[v] += 1
        return deg

    def max_degree(self) -> int:
        return max(self.degrees(), default=0)

    def components(self) -> List[List[int]]:
        adj = self.adjacency()
        seen = [False] * self.n
        comps = []
        for s in range(self.n):
            if seen[s]:
                continue
            seen[s] = True
            comp, queue = [], deque([s])
            while queue:
                x = queue.popleft()
                comp.append(x)
                for y in adj[x]:
                    if not seen[y]:
                        seen[y] = True
                        queue.append(y)
            comps.append(comp)
        return comps


@dataclass(frozen=True)
class PointSet:
    """Points in unrefined grid units.

    By default the points must form a permutation grid: the x-coordinates
    and the y-coordinates are each exactly {1, ..., n}. With
    ``collinear=True`` the points must instead sit on the y-axis (x = 0)
    with pairwise distinct y.
    """

    points: Tuple[Point, ...]
    collinear: bool = False

    def __post_init__(self):
        pts = tuple((int(x), int(y)) for x, y in self.points)
        object.__setattr__(self, "points", pts)
        n = len(pts)
        if self.collinear:
            if any(x != 0 for x, _ in pts):
                raise NotPermutationGrid("collinear point sets must lie on the y-axis")
            if len({y for _, y in pts}) != n:
                raise NotPermutationGrid("collinear points must have distinct y")
            return
        target = list(range(1, n + 1))
        if sorted(x for x, _ in pts) != target:
            raise NotPermutationGrid("x-coordinates are not a permutation of 1..n")
        if sorted(y for _, y in pts) != target:
            raise NotPermutationGrid("y-coordinates are not a permutation of 1..n")

    def __len__(self) -> int:
        return len(self.points)

    def by_x(self) -> List[int]:
        """Point indices sorted by x-coordinate."""
        return sorted(range(len(self.points)), key=lambda i: self.points[i][0])

    def by_y(self) -> List[int]:
        return sorted(range(len(self.points)), key=lambda i: self.points[i][1])


def check_mapping(mapping: Sequence[int], n: int) -> Tuple[int, ...]:
    mapping = tuple(int(p) for p in mapping)
    if len(mapping) != n or sorted(mapping) != list(range(n)):
        raise NotBijective(f"mapping {list(mapping)} is not a bijection onto {n} points")
    return mapping


@dataclass(frozen=True)
class Instance:
    graph: SimpleGraph
    points: PointSet
    mapping: Optional[Tuple[int, ...]] = None

    @property
    def n(self) -> int:
        return self.graph.n


def validate_instance(g: SimpleGraph, s: PointSet, mu: Optional[Sequence[int]] = None) -> Instance:
    """Cross-check graph, point set and optional vertex->point mapping."""
    if g.n != len(s):
        raise SizeMismatch(f"{g.n} vertices but {len(s)} points")
    mapping = check_mapping(mu, g.n) if mu is not None else None
    return Instance(g, s, mapping)


def bfs_order(t: SimpleGraph, root: int = 0) -> Tuple[List[int], List[int]]:
    """Breadth-first numbering of a tree and the size of each subtree.

    Returns ``(order, sizes)`` where ``order[0] == root`` and ``sizes[i]`` is
    the size of the subtree rooted at ``order[i]``.
    """
    order, parent = _bfs(t, root)
    pos = {v: i for i, v in enumerate(order)}
    sizes = [1] * len(order)
    for i in range(len(order) - 1, 0, -1):
        sizes[pos[parent[order[i]]]] += sizes[i]
    return order, sizes


def _bfs(t: SimpleGraph, root: int) -> Tuple[List[int], List[int]]:
    if t.n == 0:
        raise NotATree("empty graph")
    if t.m != t.n - 1:
        raise NotATree(f"{t.n} vertices but {t.m} edges")
    if not 0 <= root < t.n:
        raise NotATree(f"root {root} out of range")
    adj = t.adjacency()
    parent = [-1] * t.n
    parent[root] = root
    order = [root]
    head = 0
    while head < len(order):
        x = order[head]
        head += 1
        for y in adj[x]:
            if parent[y] == -1:
                parent[y] = x
                order.append(y)
    if len(order) != t.n:
        raise NotATree("graph is disconnected")
    return order, parent


def rooted_children(t: SimpleGraph, root: int) -> Tuple[List[int], List[List[int]], List[int]]:
    """BFS order, children lists (input order) and subtree sizes per vertex."""
    order, parent = _bfs(t, root)
    adj = t.adjacency()
    children = [[y for y in adj[x] if parent[y] == x and y != x] for x in range(t.n)]
    size = [1] * t.n
    for x in reversed(order[1:]):
        size[parent[x]] += size[x]
    return order, children, size


# ---------------------------------------------------------------- drawings


@dataclass(frozen=True)
class DrawnEdge:
    u: int
    v: int
    bends: Tuple[Point, ...] = ()


@dataclass(frozen=True)
class Drawing:
    """Vertex placement plus one polyline per edge.

    ``points`` are in unrefined units; bends are in units of the grid refined
    by ``lam``, so vertex ``w`` sits at ``lam * points[mapping[w]]``.
    """

    lam: int
    points: Tuple[Point, ...]
    mapping: Tuple[int, ...]
    edges: Tuple[DrawnEdge, ...]

    def __post_init__(self):
        if not isinstance(self.lam, int) or self.lam < 1:
            raise MalformedDrawing(f"lambda must be a positive integer, got {self.lam!r}")
        n = len(self.points)
        try:
            check_mapping(self.mapping, n)
        except NotBijective as exc:
            raise MalformedDrawing(str(exc)) from None
        for e in self.edges:
            if not (0 <= e.u < n and 0 <= e.v < n) or e.u == e.v:
                raise MalformedDrawing(f"edge ({e.u}, {e.v}) has invalid endpoints")

    @property
    def n(self) -> int:
        return len(self.points)

    def vertex_point(self, w: int) -> Point:
        x, y = self.points[self.mapping[w]]
        return (self.lam * x, self.lam * y)

    def polyline(self, i: int) -> List[Point]:
        e = self.edges[i]
        return [self.vertex_point(e.u), *e.bends, self.vertex_point(e.v)]

    def graph(self) -> SimpleGraph:
        return SimpleGraph(self.n, tuple((e.u, e.v) for e in self.edges))


def make_drawing(points, mapping, edges, bends: Sequence[Sequence[Point]], lam: int = 1) -> Drawing:
    drawn = tuple(
        DrawnEdge(u, v, tuple(tuple(b) for b in bs)) for (u, v), bs in zip(edges, bends)
    )
    return Drawing(lam, tuple(points), tuple(mapping), drawn)


@dataclass(frozen=True)
class StyleSpec:
    restricted: bool
    max_bends: int
    min_angle: AngleSpec = field(default_factory=AngleSpec.right)
    forbid_adjacent_crossings: bool = False

    def __post_init__(self):
        if self.max_bends < 0:
            raise ValueError("max_bends must be non-negative")
        if self.restricted and not self.min_angle.is_right:
            raise ValueError("restricted styles only admit right-angle crossings")

    @classmethod
    def restricted_rac(cls, bends: int) -> "StyleSpec":
        return cls(True, bends, AngleSpec.right())

    @classmethod
    def rac(cls, bends: int) -> "StyleSpec":
        return cls(False, bends, AngleSpec.right())

    @classmethod
    def aac(cls, bends: int, alpha: AngleSpec) -> "StyleSpec":
        return cls(False, bends, alpha)


# ---------------------------------------------------------------- cacti


@dataclass
class CactusNode:
    """One cycle of a cactus.

    ``vertices`` lists the cycle in cyclic order; ``z``, ``u`` and ``v`` are
    positions in that list of the connectors to the parent, the left child
    and the right child (``None`` when absent).
    """

    vertices: List[int]
    z: Optional[int] = None
    u: Optional[int] = None
    v: Optional[int] = None
    left: Optional["CactusNode"] = None
    right: Optional["CactusNode"] = None

    @property
    def k(self) -> int:
        return len(self.vertices)

    def children(self) -> List["CactusNode"]:
        return [c for c in (self.left, self.right) if c is not None]


@dataclass
class CactusTree:
    root: CactusNode

    def __post_init__(self):
        seen: List[int] = []
        for node, is_root in self.nodes_with_flag():
            k = node.k
            if k < 3:
                raise CycleTooSmall(f"cycle of length {k}")
            if is_root and node.z is not None:
                raise PSEError("root cycle cannot have a parent connector")
            if not is_root and node.z is None:
                raise PSEError("non-root cycle needs a parent connector z")
            if (node.u is None) != (node.left is None) or (node.v is None) != (node.right is None):
                raise PSEError("connector u/v must be present exactly when the child is")
            idx = [i for i in (node.z, node.u, node.v) if i is not None]
            if any(not 0 <= i < k for i in idx) or len(set(idx)) != len(idx):
                raise PSEError("connectors z, u, v must be distinct positions in the cycle")
            seen.extend(node.vertices)
        if sorted(seen) != list(range(len(seen))):
            raise PSEError("cactus vertex ids must be exactly 0..n-1")

    def nodes(self) -> List[CactusNode]:
        return [node for node, _ in self.nodes_with_flag()]

    def nodes_with_flag(self):
        out, stack = [], [(self.root, True)]
        while stack:
            node, is_root = stack.pop()
            out.append((node, is_root))
            for child in (node.right, node.left):
                if child is not None:
                    stack.append((child, False))
        return out

    @property
    def n(self) -> int:
        return sum(node.k for node in self.nodes())

    def graph(self) -> SimpleGraph:
        edges: List[Edge] = []
        for node in self.nodes():
            vs = node.vertices
            for i in range(node.k):
                edges.append((vs[i], vs[(i + 1) % node.k]))
            if node.left is not None:
                edges.append((vs[node.u], node.left.vertices[node.left.z]))
            if node.right is not None:
                edges.append((vs[node.v], node.right.vertices[node.right.z]))
        return SimpleGraph(self.n, tuple(edges))


def edge_key(u: int, v: int) -> Edge:
    return (u, v) if u < v else (v, u)


def same_edge_set(a: SimpleGraph, b: SimpleGraph) -> bool:
    return a.n == b.n and {edge_key(*e) for e in a.edges} == {edge_key(*e) for e in b.edges}
