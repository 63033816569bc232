"""``pse`` command line: embed, verify, gen, render, oracle.

Exit codes: 0 success, 1 input or usage error (or verification failure),
2 infeasible instance.
"""
from __future__ import annotations

import argparse
import json
import os
import random
import sys
from pathlib import Path
from typing import Any, Dict, Optional, Sequence

from . import generators as gen
from .cactus import embed_cactus
from .errors import PSEError
from .geometry import AngleSpec
from .io import (
    dumps,
    drawing_from_doc,
    drawing_to_doc,
    format_report,
    instance_from_doc,
    instance_to_doc,
    merge_docs,
    read_json,
    report_to_doc,
)
from .model import StyleSpec
from .oracle import brute_min_layers, brute_rac1_mapped, brute_rac1_unmapped, find_unsat_binary_tree
from .rac1 import embed_binary_tree, embed_path_or_cycle_mapped
from .rac1_decide import Infeasible, decide_and_embed_rac1_mapped, format_certificate
from .rac2 import bracket_embed, book_embed_maxdeg2_unmapped, matching_min_area
from .svg import render_svg
from .unrestricted import alpha_ac1_embed, alpha_ac2_embed, rac3_embed
from .verifier import verify

EXIT_OK, EXIT_ERROR, EXIT_INFEASIBLE = 0, 1, 2

EMBED_STYLES = (
    "rac1-tree",
    "rac1-path-cycle",
    "rac1-cactus",
    "rac1-2sat",
    "rac2-bracket",
    "rac2-matching",
    "rac2-book",
    "rac3",
    "aac2",
    "aac1",
)
GEN_KINDS = ("points", "tree", "cactus", "graph3", "graph4", "matching", "path", "cycle", "maxdeg2")

# (restricted, max bends, needs an angle) implied by each style name
_STYLE_DEFAULTS = {
    "rac1-tree": (True, 1, False),
    "rac1-path-cycle": (True, 1, False),
    "rac1-cactus": (True, 1, False),
    "rac1-2sat": (True, 1, False),
    "rac2-bracket": (True, 2, False),
    "rac2-matching": (True, 2, False),
    "rac2-book": (True, 2, False),
    "rac3": (False, 3, False),
    "aac2": (False, 2, True),
    "aac1": (False, 1, True),
}


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        self.exit(EXIT_ERROR, f"{self.prog}: error: {message}\n")


def _emit(text: str, out: Optional[str]) -> None:
    if out and out != "-":
        Path(out).write_text(text)
    else:
        sys.stdout.write(text)


def _load_instance(args) -> Dict[str, Any]:
    docs = [read_json(args.graph)]
    if getattr(args, "points", None):
        docs.append(read_json(args.points))
    if getattr(args, "mapping", None):
        m = read_json(args.mapping)
        docs.append({"mapping": m} if isinstance(m, list) else {"mapping": m["mapping"]})
    return merge_docs(*docs)


def _epsilon(args) -> AngleSpec:
    if args.epsilon_deg is None:
        raise UsageError(f"--epsilon-deg is required for style {args.style}")
    return AngleSpec.from_decimal_text(args.epsilon_deg)


def cmd_embed(args) -> int:
    inst = instance_from_doc(_load_instance(args))
    g, s, mu = inst.graph, inst.points, inst.mapping
    ident = tuple(range(g.n))
    style = args.style
    note = None
    if style == "rac1-tree":
        d = embed_binary_tree(g, s, args.root)
    elif style == "rac1-path-cycle":
        d = embed_path_or_cycle_mapped(g, s, mu or ident)
    elif style == "rac1-cactus":
        if inst.cactus is None:
            raise UsageError("rac1-cactus needs a 'cactus' entry in the instance")
        d = embed_cactus(inst.cactus, s)
    elif style == "rac1-2sat":
        try:
            d = decide_and_embed_rac1_mapped(g, s, mu or ident)
        except Infeasible as exc:
            print("INFEASIBLE", file=sys.stdout)
            print(format_certificate(g, exc), file=sys.stdout)
            return EXIT_INFEASIBLE
    elif style == "rac2-bracket":
        d = bracket_embed(g, s, mu or ident)
    elif style == "rac2-matching":
        d, layers = matching_min_area(s, g, mu)
        note = f"layers={layers}"
    elif style == "rac2-book":
        d = book_embed_maxdeg2_unmapped(g, s)
    elif style == "rac3":
        d = rac3_embed(g, s, mu)
    elif style == "aac2":
        d = alpha_ac2_embed(g, s, _epsilon(args), mu)
    else:
        d = alpha_ac1_embed(g, s, _epsilon(args), mu)
    _emit(dumps(drawing_to_doc(d)), args.out)
    if note:
        print(note, file=sys.stderr)
    return EXIT_OK


def style_from_args(args) -> StyleSpec:
    restricted, bends, needs_angle = _STYLE_DEFAULTS.get(args.style, (False, 1, False))
    if args.style in ("rac", "aac"):
        needs_angle = args.style == "aac"
    if args.max_bends is not None:
        bends = args.max_bends
    if args.restricted:
        restricted = True
    if args.alpha_deg is not None:
        angle = AngleSpec.from_degrees(args.alpha_deg)
    elif args.epsilon_deg is not None and not restricted:
        angle = AngleSpec.from_decimal_text(args.epsilon_deg).complement()
    elif needs_angle:
        raise UsageError(f"style {args.style} needs --alpha-deg or --epsilon-deg")
    else:
        angle = AngleSpec.right()
    return StyleSpec(restricted, bends, angle, args.forbid_adjacent_crossings)


def cmd_verify(args) -> int:
    d = drawing_from_doc(read_json(args.drawing))
    style = style_from_args(args)
    graph = mapping = None
    if args.instance:
        inst = instance_from_doc(read_json(args.instance))
        graph, mapping = inst.graph, inst.mapping
    report = verify(d, style, mapping=mapping, graph=graph)
    if args.json:
        sys.stdout.write(dumps(report_to_doc(report)))
    else:
        print(format_report(report))
    return EXIT_OK if report.ok else EXIT_ERROR


def _seed(args) -> int:
    env = os.environ.get("PSE_SEED")
    if env is not None and env.strip() != "":
        try:
            return int(env)
        except ValueError:
            raise UsageError(f"PSE_SEED={env!r} is not an integer") from None
    return args.seed


def generate(kind: str, n: int, seed: int) -> Dict[str, Any]:
    """Instance document for a generator kind; deterministic in ``seed``."""
    if n < 0:
        raise UsageError("--n must be non-negative")
    rng = random.Random(seed)
    if kind == "points":
        s = gen.random_points(n, rng)
        return {"n": n, "edges": [], "points": [list(p) for p in s.points]}
    if kind == "tree":
        g = gen.random_binary_tree(n, rng)
        return instance_to_doc(g, gen.random_points(n, rng))
    if kind == "cactus":
        c = gen.random_cactus(n, rng)
        return instance_to_doc(c.graph(), gen.random_points(n, rng), cactus=c)
    if kind in ("graph3", "graph4"):
        g = gen.random_graph(n, int(kind[-1]), rng)
    elif kind == "path":
        g = gen.random_path(n, rng)
    elif kind == "cycle":
        g = gen.random_cycle(n, rng)
    elif kind == "matching":
        g = gen.random_matching(n, rng)
        return instance_to_doc(g, gen.random_collinear_points(n, rng), gen.random_mapping(n, rng))
    elif kind == "maxdeg2":
        g = gen.random_maxdeg2(n, rng)
        return instance_to_doc(g, gen.random_collinear_points(n, rng))
    else:
        raise UsageError(f"unknown kind {kind!r}")
    return instance_to_doc(g, gen.random_points(n, rng), gen.random_mapping(n, rng))


def cmd_gen(args) -> int:
    try:
        doc = generate(args.kind, args.n, _seed(args))
    except ValueError as exc:
        if isinstance(exc, PSEError):
            raise
        raise UsageError(str(exc)) from None
    _emit(dumps(doc), args.out)
    return EXIT_OK


def cmd_render(args) -> int:
    d = drawing_from_doc(read_json(args.drawing))
    _emit(render_svg(d, scale=args.scale), args.out)
    return EXIT_OK


def cmd_oracle(args) -> int:
    if args.task == "unsat-fixture":
        _emit(dumps(find_unsat_binary_tree(args.n)), args.out)
        return EXIT_OK
    if args.graph is None:
        raise UsageError(f"oracle task {args.task} needs --graph")
    inst = instance_from_doc(_load_instance(args))
    g, s = inst.graph, inst.points
    if args.task == "mapped":
        res = brute_rac1_mapped(g, s, inst.mapping or tuple(range(g.n)), count=args.count)
    elif args.task == "unmapped":
        res = brute_rac1_unmapped(g, s)
    else:
        rank = {p: r for r, p in enumerate(s.by_y())}
        mu = inst.mapping or tuple(range(g.n))
        intervals = [
            tuple(sorted((s.points[mu[u]][1], s.points[mu[v]][1])))
            for u, v in g.edges
            if abs(rank[mu[u]] - rank[mu[v]]) != 1
        ]
        print(json.dumps({"min_layers": brute_min_layers(intervals)}))
        return EXIT_OK
    out = {"feasible": res.feasible}
    if res.feasible:
        out["mapping"] = list(res.mapping)
        out["assignment"] = list(res.assignment)
    if res.witnesses is not None:
        out["witnesses"] = res.witnesses
    print(json.dumps(out, sort_keys=True))
    return EXIT_OK if res.feasible else EXIT_INFEASIBLE


def build_parser() -> argparse.ArgumentParser:
    p = _Parser(prog="pse", description="Point-set embeddings with right-angle and large-angle crossings.")
    sub = p.add_subparsers(dest="command", required=True, parser_class=_Parser)

    e = sub.add_parser("embed", help="compute a drawing")
    e.add_argument("--style", required=True, choices=EMBED_STYLES)
    e.add_argument("--graph", required=True, help="instance JSON (graph, optionally points/mapping/cactus)")
    e.add_argument("--points", help="JSON with a 'points' entry, overrides the instance's")
    e.add_argument("--mapping", help="JSON list, or object with a 'mapping' entry")
    e.add_argument("--epsilon-deg", help="epsilon in decimal degrees for aac1/aac2")
    e.add_argument("--root", type=int, help="root vertex for rac1-tree")
    e.add_argument("--out", help="output file (default stdout)")
    e.set_defaults(func=cmd_embed)

    v = sub.add_parser("verify", help="check a drawing against a style")
    v.add_argument("--drawing", required=True)
    v.add_argument("--style", required=True, choices=EMBED_STYLES + ("rac", "aac"))
    v.add_argument("--alpha-deg", type=float, help="minimum crossing angle")
    v.add_argument("--epsilon-deg", help="aac styles: minimum angle is 90 minus this")
    v.add_argument("--max-bends", type=int)
    v.add_argument("--restricted", action="store_true")
    v.add_argument("--forbid-adjacent-crossings", action="store_true")
    v.add_argument("--instance", help="instance JSON to check graph and mapping against")
    v.add_argument("--json", action="store_true", help="print the report as JSON")
    v.set_defaults(func=cmd_verify)

    g = sub.add_parser("gen", help="generate a random instance")
    g.add_argument("--kind", required=True, choices=GEN_KINDS)
    g.add_argument("--n", required=True, type=int)
    g.add_argument("--seed", type=int, default=0, help="overridden by $PSE_SEED")
    g.add_argument("--out")
    g.set_defaults(func=cmd_gen)

    r = sub.add_parser("render", help="draw a drawing as SVG")
    r.add_argument("--drawing", required=True)
    r.add_argument("--out")
    r.add_argument("--scale", type=float, default=20.0)
    r.set_defaults(func=cmd_render)

    o = sub.add_parser("oracle", help="brute-force checks and fixture regeneration")
    o.add_argument("--task", required=True, choices=("unsat-fixture", "mapped", "unmapped", "min-layers"))
    o.add_argument("--graph")
    o.add_argument("--points")
    o.add_argument("--mapping")
    o.add_argument("--count", action="store_true", help="count all witnesses (mapped)")
    o.add_argument("--n", type=int, default=6, help="tree size for unsat-fixture")
    o.add_argument("--out")
    o.set_defaults(func=cmd_oracle)
    return p


def main(argv: Optional[Sequence[str]] = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except (PSEError, UsageError, ValueError, OSError, KeyError) as exc:
        print(f"pse: error: {exc}", file=sys.stderr)
        return EXIT_ERROR


if __name__ == "__main__":
    sys.exit(main())
