"""Linear-time 2-SAT via the implication graph and Tarjan's SCC algorithm.

Literals use the DIMACS convention: variable ``i`` (0-based) appears as
``i + 1`` and its negation as ``-(i + 1)``.
"""
from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, List, Optional, Sequence, Tuple

Clause = Tuple[int, int]


@dataclass(frozen=True)
class TwoSatFormula:
    num_vars: int
    clauses: Tuple[Clause, ...] = ()

    def __post_init__(self):
        object.__setattr__(self, "clauses", tuple((int(a), int(b)) for a, b in self.clauses))
        for a, b in self.clauses:
            for lit in (a, b):
                if lit == 0 or abs(lit) > self.num_vars:
                    raise ValueError(f"literal {lit} out of range for {self.num_vars} variables")

    def satisfied_by(self, assignment: Sequence[bool]) -> bool:
        return all(_lit_value(a, assignment) or _lit_value(b, assignment) for a, b in self.clauses)


def _lit_value(lit: int, assignment: Sequence[bool]) -> bool:
    val = assignment[abs(lit) - 1]
    return val if lit > 0 else not val


def _node(lit: int) -> int:
    return 2 * (abs(lit) - 1) + (lit < 0)


def _lit(node: int) -> int:
    return -(node // 2 + 1) if node & 1 else node // 2 + 1


class Unsatisfiable(Exception):
    """No satisfying assignment exists.

    ``variable`` is a 0-based variable whose two literals share a strongly
    connected component of the implication graph; ``component`` lists the
    literals of that component and ``clauses`` the input clauses whose
    implications stay inside it.
    """

    def __init__(self, variable: int, component: List[int], clauses: List[Clause]):
        super().__init__(f"variable {variable + 1} and its negation are equivalent")
        self.variable = variable
        self.component = component
        self.clauses = clauses


def strongly_connected_components(
    num_nodes: int, start: List[int], targets: List[int], roots: Optional[Iterable[int]] = None
) -> List[int]:
    """Tarjan's algorithm on a CSR graph.

    Returns a component id per node; ids are assigned in reverse topological
    order of the condensation (sink components first). ``roots`` is the
    order in which depth-first searches are started (default 0..n-1).
    """
    index = [-1] * num_nodes
    low = [0] * num_nodes
    comp = [-1] * num_nodes
    on_stack = [False] * num_nodes
    stack: List[int] = []
    counter = 0
    n_comp = 0
    for root in range(num_nodes) if roots is None else roots:
        if index[root] != -1:
            continue
        index[root] = low[root] = counter
        counter += 1
        stack.append(root)
        on_stack[root] = True
        work = [(root, start[root])]
        while work:
            v, ptr = work[-1]
            end = start[v + 1]
            while ptr < end:
                w = targets[ptr]
                ptr += 1
                if index[w] == -1:
                    work[-1] = (v, ptr)
                    index[w] = low[w] = counter
                    counter += 1
                    stack.append(w)
                    on_stack[w] = True
                    work.append((w, start[w]))
                    break
                if on_stack[w] and index[w] < low[v]:
                    low[v] = index[w]
            else:
                work.pop()
                if low[v] == index[v]:
                    while True:
                        w = stack.pop()
                        on_stack[w] = False
                        comp[w] = n_comp
                        if w == v:
                            break
                    n_comp += 1
                if work:
                    u = work[-1][0]
                    if low[v] < low[u]:
                        low[u] = low[v]
    return comp


def _implication_graph(f: TwoSatFormula) -> Tuple[List[int], List[int]]:
    n = 2 * f.num_vars
    count = [0] * (n + 1)
    for a, b in f.clauses:
        count[_node(-a)] += 1
        count[_node(-b)] += 1
    start = [0] * (n + 1)
    acc = 0
    for i in range(n):
        start[i] = acc
        acc += count[i]
    start[n] = acc
    fill = start[:]
    targets = [0] * acc
    for a, b in f.clauses:
        na, nb = _node(-a), _node(-b)
        targets[fill[na]] = _node(b)
        fill[na] += 1
        targets[fill[nb]] = _node(a)
        fill[nb] += 1
    return start, targets


def solve_2sat(f: TwoSatFormula) -> List[bool]:
    """A satisfying assignment, or raise :class:`Unsatisfiable`."""
    start, targets = _implication_graph(f)
    # searching from negative literals first makes unconstrained variables false
    n2 = 2 * f.num_vars
    roots = list(range(1, n2, 2)) + list(range(0, n2, 2))
    comp = strongly_connected_components(n2, start, targets, roots)
    assignment = []
    for i in range(f.num_vars):
        cp, cn = comp[2 * i], comp[2 * i + 1]
        if cp == cn:
            members = [_lit(x) for x in range(2 * f.num_vars) if comp[x] == cp]
            inside = [
                (a, b)
                for a, b in f.clauses
                if comp[_node(-a)] == cp and comp[_node(b)] == cp
                or comp[_node(-b)] == cp and comp[_node(a)] == cp
            ]
            raise Unsatisfiable(i, members, inside)
        # sink-most component first: a literal is true when its component
        # comes later in topological order than its negation's
        assignment.append(cp < cn)
    return assignment
