"""JSON documents for instances, drawings and verification reports.

Instance::

    {"n": 3, "edges": [[0, 1]], "points": [[1, 2], ...],
     "mapping": [...], "collinear": false, "cactus": {...}}

A cactus node is ``{"k", "vertices", "z", "u", "v", "children": [left, right]}``
where absent connectors and children are ``null``. If ``vertices`` is
omitted the nodes take consecutive ids in pre-order (node, left, right).

Drawing::

    {"lambda": 1, "points": [...], "mapping": [...],
     "edges": [{"u": 0, "v": 1, "bends": [[x, y], ...]}]}

Bend coordinates are integers in refined units; a non-integral coordinate
may be written as a decimal or as a ``"p/q"`` string and is kept exact.
"""
from __future__ import annotations

import json
from dataclasses import dataclass
from fractions import Fraction
from pathlib import Path
from typing import Any, Dict, List, Optional, Tuple, Union

from .errors import MalformedDrawing, PSEError
from .model import CactusNode, CactusTree, Drawing, DrawnEdge, PointSet, SimpleGraph
from .verifier import VerificationReport

PathLike = Union[str, Path]


@dataclass(frozen=True)
class InstanceDoc:
    graph: SimpleGraph
    points: PointSet
    mapping: Optional[Tuple[int, ...]] = None
    cactus: Optional[CactusTree] = None


def _compact(value: Any) -> str:
    return json.dumps(value, sort_keys=True, separators=(",", ":"))


def dumps(doc: Dict[str, Any]) -> str:
    """Canonical text: sorted keys, one top-level key per line and one list
    item per line, so equal documents give equal bytes."""
    parts = []
    for key in sorted(doc):
        value = doc[key]
        if isinstance(value, list) and any(isinstance(x, (list, dict)) for x in value):
            body = ",\n".join("  " + _compact(x) for x in value)
            parts.append(f" {_compact(key)}: [\n{body}\n ]")
        else:
            parts.append(f" {_compact(key)}: {_compact(value)}")
    return "{\n" + ",\n".join(parts) + "\n}\n"


def write_json(path: PathLike, doc: Dict[str, Any]) -> None:
    Path(path).write_text(dumps(doc))


def read_json(path: PathLike) -> Dict[str, Any]:
    try:
        return json.loads(Path(path).read_text())
    except json.JSONDecodeError as exc:
        raise PSEError(f"{path}: not valid JSON ({exc})") from None


# ------------------------------------------------------------- numbers


def _num_out(c):
    if isinstance(c, Fraction):
        return c.numerator if c.denominator == 1 else f"{c.numerator}/{c.denominator}"
    return int(c)


def _num_in(c):
    if isinstance(c, bool):
        raise MalformedDrawing(f"coordinate {c!r} is not a number")
    if isinstance(c, int):
        return c
    if isinstance(c, float):
        f = Fraction(repr(c))
        return f.numerator if f.denominator == 1 else f
    if isinstance(c, str):
        try:
            f = Fraction(c)
        except ValueError:
            raise MalformedDrawing(f"coordinate {c!r} is not a number") from None
        return f.numerator if f.denominator == 1 else f
    raise MalformedDrawing(f"coordinate {c!r} is not a number")


# ------------------------------------------------------------- cactus


def cactus_to_doc(node: Optional[CactusNode]) -> Optional[Dict[str, Any]]:
    if node is None:
        return None
    return {
        "k": node.k,
        "vertices": list(node.vertices),
        "z": node.z,
        "u": node.u,
        "v": node.v,
        "children": [cactus_to_doc(node.left), cactus_to_doc(node.right)],
    }


def cactus_from_doc(doc: Dict[str, Any]) -> CactusTree:
    counter = [0]

    def build(d: Dict[str, Any]) -> CactusNode:
        k = d.get("k")
        verts = d.get("vertices")
        if verts is None:
            if k is None:
                raise PSEError("cactus node needs 'k' or 'vertices'")
            verts = list(range(counter[0], counter[0] + int(k)))
            counter[0] += int(k)
        elif k is not None and int(k) != len(verts):
            raise PSEError(f"cactus node declares k={k} but lists {len(verts)} vertices")
        children = list(d.get("children") or [])
        children += [None] * (2 - len(children))
        if len(children) != 2:
            raise PSEError("cactus node has more than two children")
        node = CactusNode([int(x) for x in verts], d.get("z"), d.get("u"), d.get("v"))
        node.left = build(children[0]) if children[0] is not None else None
        node.right = build(children[1]) if children[1] is not None else None
        return node

    return CactusTree(build(doc))


# ------------------------------------------------------------ instance


def instance_to_doc(
    g: SimpleGraph,
    s: PointSet,
    mapping=None,
    cactus: Optional[CactusTree] = None,
) -> Dict[str, Any]:
    doc: Dict[str, Any] = {
        "n": g.n,
        "edges": [list(e) for e in g.edges],
        "points": [list(p) for p in s.points],
    }
    if s.collinear:
        doc["collinear"] = True
    if mapping is not None:
        doc["mapping"] = list(mapping)
    if cactus is not None:
        doc["cactus"] = cactus_to_doc(cactus.root)
    return doc


def instance_from_doc(doc: Dict[str, Any]) -> InstanceDoc:
    cactus = cactus_from_doc(doc["cactus"]) if doc.get("cactus") is not None else None
    if "edges" in doc:
        n = int(doc.get("n", len(doc.get("points", []))))
        g = SimpleGraph(n, tuple(tuple(e) for e in doc["edges"]))
    elif cactus is not None:
        g = cactus.graph()
    else:
        raise PSEError("instance has neither 'edges' nor 'cactus'")
    points = PointSet(tuple(tuple(p) for p in doc.get("points", [])), bool(doc.get("collinear", False)))
    mapping = tuple(int(p) for p in doc["mapping"]) if doc.get("mapping") is not None else None
    return InstanceDoc(g, points, mapping, cactus)


def merge_docs(*docs: Dict[str, Any]) -> Dict[str, Any]:
    """Later documents override earlier ones key by key (graph + points files)."""
    out: Dict[str, Any] = {}
    for d in docs:
        out.update(d)
    return out


# ------------------------------------------------------------- drawing


def drawing_to_doc(d: Drawing) -> Dict[str, Any]:
    return {
        "lambda": d.lam,
        "points": [list(p) for p in d.points],
        "mapping": list(d.mapping),
        "edges": [
            {"u": e.u, "v": e.v, "bends": [[_num_out(x), _num_out(y)] for x, y in e.bends]}
            for e in d.edges
        ],
    }


def drawing_from_doc(doc: Dict[str, Any]) -> Drawing:
    try:
        edges = tuple(
            DrawnEdge(int(e["u"]), int(e["v"]), tuple((_num_in(b[0]), _num_in(b[1])) for b in e.get("bends", [])))
            for e in doc["edges"]
        )
        return Drawing(
            int(doc.get("lambda", 1)),
            tuple((int(x), int(y)) for x, y in doc["points"]),
            tuple(int(p) for p in doc["mapping"]),
            edges,
        )
    except (KeyError, TypeError, ValueError, IndexError) as exc:
        if isinstance(exc, PSEError):
            raise
        raise MalformedDrawing(f"malformed drawing document: {exc!r}") from None


# -------------------------------------------------------------- report


def _loc_out(loc):
    if loc is None:
        return None
    if isinstance(loc, (tuple, list)):
        return [_loc_out(x) for x in loc]
    return _num_out(loc)


def report_to_doc(r: VerificationReport) -> Dict[str, Any]:
    st = r.stats
    return {
        "ok": r.ok,
        "violations": [
            {"kind": v.kind.value, "edges": list(v.edges), "location": _loc_out(v.location)}
            for v in r.violations
        ],
        "stats": {
            "crossing_count": st.crossing_count,
            "min_angle": None
            if st.min_angle_sin2 is None
            else {
                "exact_right": st.min_angle_is_right,
                "sin2": _num_out(st.min_angle_sin2),
                "degrees": round(st.min_angle_degrees, 9),
            },
            "bounding_box": list(st.bounding_box) if st.bounding_box else None,
            "max_bends": st.max_bends,
            "bend_histogram": {str(k): v for k, v in sorted(st.bend_histogram.items())},
            "lambda": st.lam,
        },
    }


def format_report(r: VerificationReport) -> str:
    st = r.stats
    lines = ["OK" if r.ok else f"{len(r.violations)} violation(s)"]
    for v in r.violations[:50]:
        lines.append(f"  {v.kind.value} edges={list(v.edges)} at {_loc_out(v.location)}")
    if len(r.violations) > 50:
        lines.append(f"  ... {len(r.violations) - 50} more")
    if st.min_angle_sin2 is None:
        angle = "none (no crossings)"
    elif st.min_angle_is_right:
        angle = "90 (exact)"
    else:
        angle = f"{st.min_angle_degrees:.6f} deg (sin^2 = {st.min_angle_sin2})"
    lines.append(
        f"crossings={st.crossing_count} min_angle={angle} bbox={st.bounding_box} "
        f"max_bends={st.max_bends} lambda={st.lam}"
    )
    return "\n".join(lines)


def load_fixture(name: str) -> Dict[str, Any]:
    """A bundled fixture from ``pse/data`` by file stem."""
    from importlib import resources

    return json.loads(resources.files("pse").joinpath("data", f"{name}.json").read_text())


def fixture_names() -> List[str]:
    from importlib import resources

    return sorted(p.name[:-5] for p in resources.files("pse").joinpath("data").iterdir() if p.name.endswith(".json"))
