"""Command line entry point: ``dynchroma {generate,order,color,exact,check}``.

Exit codes: 0 success, 1 verification failure, 2 usage error, 3 cap or
budget exhausted.
"""

from __future__ import annotations

import argparse
import json
import os
import sys
from pathlib import Path
from typing import Optional

from . import dynamic, graph as gc, ordering

EXIT_OK, EXIT_FAIL, EXIT_USAGE, EXIT_EXHAUSTED = 0, 1, 2, 3

STRATEGIES = ("exact-dp", "exact-brute", "reverse-peo", "product", "subdivision", "min-backreach")


class UsageError(Exception):
    pass


class Exhausted(Exception):
    pass


# -- generator specs ------------------------------------------------------------


def generate(spec: str, seed: int = 0):
    """Build ``(graph, structure)`` from a spec such as ``subdivide:complete:5:1``.

    ``structure`` is the KTree / SubdividedGraph / LayeredProduct behind the
    graph, or None for unstructured families.
    """
    tokens = spec.split(":")
    head, args = tokens[0], tokens[1:]
    try:
        if head in ("complete", "path", "cycle", "empty"):
            (n,) = map(int, args)
            make = {"complete": gc.complete_graph, "path": gc.path_graph,
                    "cycle": gc.cycle_graph, "empty": gc.empty_graph}[head]
            return make(n), None
        if head == "ktree":
            if len(args) not in (2, 3):
                raise UsageError(f"ktree spec needs k:n[:seed], got {spec!r}")
            k, n = int(args[0]), int(args[1])
            kt = gc.random_k_tree(k, n, int(args[2]) if len(args) == 3 else seed)
            return kt.graph, kt
        if head in ("subdivide", "universal", "product") and len(args) >= 2:
            inner_spec, param = ":".join(args[:-1]), int(args[-1])
            inner, inner_structure = generate(inner_spec, seed)
            if head == "subdivide":
                sg = gc.subdivide(inner, param)
                return sg.graph, sg
            if head == "universal":
                return gc.add_universal(inner, param), None
            kt = inner_structure if isinstance(inner_structure, gc.KTree) else _as_ktree(inner)
            lp = gc.strong_product_with_path(kt, param)
            return lp.graph, lp
        if head == "square" and args:
            inner, _ = generate(":".join(args), seed)
            return gc.square(inner), None
    except gc.GraphError as exc:
        raise UsageError(f"bad generator spec {spec!r}: {exc}") from None
    except ValueError:
        raise UsageError(f"bad generator spec {spec!r}") from None
    raise UsageError(f"unknown generator spec {spec!r}")


def _as_ktree(g: gc.Graph) -> gc.KTree:
    # complete graphs are the only unstructured k-trees we accept as a product base
    if g.m != g.n * (g.n - 1) // 2 or g.n == 0:
        raise UsageError("product base must be a ktree or complete spec")
    return gc.ktree_from_graph(g, g.n - 1, range(g.n))


# -- structure sidecars -----------------------------------------------------------


def structure_to_meta(structure) -> Optional[dict]:
    if isinstance(structure, gc.KTree):
        return {"kind": "ktree", "k": structure.k,
                "construction_order": list(structure.construction_order)}
    if isinstance(structure, gc.SubdividedGraph):
        return {"kind": "subdivision", "times": structure.times,
                "source": structure.source.to_json(),
                "is_original": list(structure.is_original),
                "parent_edge": [list(e) if e else None for e in structure.parent_edge]}
    if isinstance(structure, gc.LayeredProduct):
        base = structure.base
        return {"kind": "product", "layers": structure.layers, "h": structure.h.to_json(),
                "k": base.k if base else None,
                "construction_order": list(base.construction_order) if base else None,
                "layer": list(structure.layer), "projection": list(structure.projection)}
    return None


def structure_from_meta(g: gc.Graph, meta: dict):
    kind = meta.get("kind")
    try:
        if kind == "ktree":
            return gc.ktree_from_graph(g, meta["k"], meta["construction_order"])
        if kind == "subdivision":
            sg = gc.SubdividedGraph(
                g, gc.graph_from_json(meta["source"]), meta["times"],
                tuple(bool(x) for x in meta["is_original"]),
                tuple(tuple(e) if e else None for e in meta["parent_edge"]))
            sg.check()
            return sg
        if kind == "product":
            h = gc.graph_from_json(meta["h"])
            base = None
            if meta.get("k") is not None:
                base = gc.ktree_from_graph(h, meta["k"], meta["construction_order"])
            lp = gc.LayeredProduct(g, h, tuple(meta["layer"]), tuple(meta["projection"]),
                                   meta["layers"], base)
            lp.check()
            return lp
    except (KeyError, TypeError, gc.GraphError) as exc:
        raise UsageError(f"invalid structure metadata: {exc}") from None
    raise UsageError(f"unknown metadata kind {kind!r}")


def sidecar_path(path: Path) -> Path:
    return path.with_suffix(".meta.json")


# -- graph files ------------------------------------------------------------------


def read_graph(path: Path) -> gc.Graph:
    text = path.read_text()
    suffix = path.suffix.lower()
    if suffix in (".col", ".dimacs"):
        return gc.parse_dimacs(text)
    if suffix == ".json":
        return gc.graph_from_json(json.loads(text))
    return gc.parse_edge_list(text)


def write_graph(g: gc.Graph, path: Path) -> None:
    suffix = path.suffix.lower()
    if suffix == ".json":
        path.write_text(json.dumps(g.to_json()) + "\n")
    elif suffix in (".col", ".dimacs"):
        path.write_text(gc.write_dimacs(g))
    else:
        path.write_text("".join(f"{u} {v}\n" for u, v in g.edges()))


def load_input(args):
    """Resolve ``--input`` or ``--gen`` to ``(graph, structure)``."""
    if bool(args.input) == bool(args.gen):
        raise UsageError("give exactly one of --input or --gen")
    if args.gen:
        return generate(args.gen, args.seed)
    path = Path(args.input)
    try:
        g = read_graph(path)
    except OSError as exc:
        raise UsageError(f"cannot read {path}: {exc}") from None
    except (gc.GraphError, json.JSONDecodeError, KeyError) as exc:
        raise UsageError(f"cannot parse {path}: {exc}") from None
    meta = sidecar_path(path)
    structure = None
    if meta.exists():
        structure = structure_from_meta(g, json.loads(meta.read_text()))
    return g, structure


def _read_json(path: str):
    try:
        return json.loads(Path(path).read_text())
    except (OSError, json.JSONDecodeError) as exc:
        raise UsageError(f"cannot read {path}: {exc}") from None


# -- commands ---------------------------------------------------------------------


def build_order(g, structure, strategy: str, t: int, cap: Optional[int]):
    if strategy == "exact-dp":
        return _exact(ordering.exact_col_t, g, t, cap if cap is not None else 20)
    if strategy == "exact-brute":
        return _exact(ordering.exact_col_t_bruteforce, g, t, cap if cap is not None else 9)
    if strategy == "min-backreach":
        order = ordering.min_backreach_order(g, t)
    elif strategy == "reverse-peo":
        if not isinstance(structure, gc.KTree):
            raise UsageError("reverse-peo needs k-tree metadata")
        order = ordering.reverse_peo_order(structure)
    elif strategy == "product":
        if not isinstance(structure, gc.LayeredProduct) or structure.base is None:
            raise UsageError("product needs layered-product metadata with a k-tree base")
        order = ordering.product_order(structure, ordering.reverse_peo_order(structure.base))
    elif strategy == "subdivision":
        if not isinstance(structure, gc.SubdividedGraph):
            raise UsageError("subdivision needs subdivision metadata")
        order = ordering.subdivision_order(structure)
    else:
        raise UsageError(f"unknown strategy {strategy!r}")
    width = ordering.order_width(g, order, t)
    return ordering.ColNumberResult(t, width, order, "upper-bound-only")


def _exact(solver, g, t, cap):
    try:
        return solver(g, t, cap=cap)
    except ordering.CapExceeded as exc:
        raise Exhausted(str(exc)) from None


def cmd_generate(args) -> tuple[int, dict]:
    if not args.gen:
        raise UsageError("generate needs --gen")
    g, structure = generate(args.gen, args.seed)
    meta = structure_to_meta(structure)
    out = {"graph": g.to_json(), "meta": meta}
    if args.output:
        path = Path(args.output)
        write_graph(g, path)
        if meta is not None:
            sidecar_path(path).write_text(json.dumps(meta) + "\n")
    return EXIT_OK, out


def cmd_order(args) -> tuple[int, dict]:
    g, structure = load_input(args)
    result = build_order(g, structure, args.strategy, args.t, args.cap)
    out = {
        "strategy": args.strategy,
        "order": result.witness.to_json(),
        "width": ordering.order_width(g, result.witness, args.t),
        "width_2": ordering.order_width(g, result.witness, 2),
        "result": result.to_json(),
    }
    if args.output:
        Path(args.output).write_text(json.dumps(out["order"]) + "\n")
    return EXIT_OK, out


def cmd_color(args) -> tuple[int, dict]:
    g, structure = load_input(args)
    if args.order:
        data = _read_json(args.order)
        seq = data["order"] if isinstance(data, dict) else data
        if len(seq) != g.n:
            raise UsageError(f"order has {len(seq)} vertices, graph has {g.n}")
        try:
            order = ordering.LinearOrder.from_sequence(seq)
        except ValueError as exc:
            raise UsageError(str(exc)) from None
    else:
        order = build_order(g, structure, args.strategy, 2, args.cap).witness
    coloring, _ = dynamic.greedy_r_dynamic(g, order, args.r)
    report = dynamic.verify_r_dynamic(g, coloring, args.r)
    width = ordering.order_width(g, order, 2)
    out = {
        "r": args.r,
        "width_2": width,
        "bound": dynamic.theorem_bound(max(width, 1), args.r),
        "coloring": coloring.to_json(),
        "verified": report.ok,
        "report": report.to_json(),
    }
    if args.output:
        Path(args.output).write_text(json.dumps(coloring.to_json()) + "\n")
    return (EXIT_OK if report.ok else EXIT_FAIL), out


def cmd_exact(args) -> tuple[int, dict]:
    g, _ = load_input(args)
    budget = args.budget
    if budget is None and os.environ.get("DYNCHROMA_BUDGET"):
        budget = int(os.environ["DYNCHROMA_BUDGET"])
    res = dynamic.exact_chi_r(g, args.r, color_cap=args.cap, node_budget=budget)
    return (EXIT_OK if res.solved else EXIT_EXHAUSTED), res.to_json()


def cmd_check(args) -> tuple[int, dict]:
    g, _ = load_input(args)
    if not args.coloring:
        raise UsageError("check needs --coloring")
    data = _read_json(args.coloring)
    colors = data["colors"] if isinstance(data, dict) else data
    try:
        report = dynamic.verify_r_dynamic(g, colors, args.r)
    except ValueError as exc:
        raise UsageError(str(exc)) from None
    return (EXIT_OK if report.ok else EXIT_FAIL), report.to_json()


COMMANDS = {"generate": cmd_generate, "order": cmd_order, "color": cmd_color,
            "exact": cmd_exact, "check": cmd_check}


# -- text rendering ---------------------------------------------------------------


def render_text(command: str, out: dict) -> str:
    if command == "generate":
        g = out["graph"]
        return gc.write_dimacs(gc.graph_from_json(g)).rstrip()
    if command == "order":
        return (f"strategy {out['strategy']}: width {out['width']} "
                f"(t={out['result']['t']}), 2-width {out['width_2']}\n"
                f"order {' '.join(map(str, out['order']))}")
    if command == "color":
        lines = [f"palette {out['coloring']['palette']} <= bound {out['bound']} "
                 f"(2-width {out['width_2']}, r={out['r']})",
                 f"colors {' '.join(map(str, out['coloring']['colors']))}",
                 "verified" if out["verified"] else "VERIFICATION FAILED"]
        return "\n".join(lines)
    if command == "exact":
        if out["status"] == "exact":
            return f"chi_{out['r']} = {out['value']} ({out['nodes']} nodes)"
        return f"chi_{out['r']} {out['status']}: >= {out['lower']} ({out['nodes']} nodes)"
    lines = []
    for u, v in out["proper_violations"]:
        lines.append(f"edge {u}-{v} is monochromatic")
    for d in out["dynamic_violations"]:
        lines.append(f"vertex {d['vertex']} sees {len(d['seen'])} colors {d['seen']}, "
                     f"needs {d['required']}")
    lines.append("ok" if out["ok"] else "not r-dynamic")
    return "\n".join(lines)


def make_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="dynchroma", description=__doc__.splitlines()[0])
    parser.add_argument("command", choices=sorted(COMMANDS))
    parser.add_argument("--input", help="graph file (.col DIMACS, .json, or edge list)")
    parser.add_argument("--gen", help="generator spec, e.g. subdivide:complete:5:1")
    parser.add_argument("--order", help="order file (JSON array) for color")
    parser.add_argument("--coloring", help="coloring file (JSON) for check")
    parser.add_argument("--strategy", choices=STRATEGIES, default="min-backreach")
    parser.add_argument("--r", type=int, default=2)
    parser.add_argument("--t", type=int, default=2)
    parser.add_argument("--seed", type=int, default=0)
    parser.add_argument("--cap", type=int, help="vertex cap (exact orders) or color cap (exact)")
    parser.add_argument("--budget", type=int, help="node budget for exact (env DYNCHROMA_BUDGET)")
    parser.add_argument("--format", choices=("json", "text"), default="json")
    parser.add_argument("-o", "--output", help="write the main artifact to this path")
    return parser


def main(argv=None) -> int:
    args = make_parser().parse_args(argv)
    if args.r < 0 or args.t < 0:
        print("error: --r and --t must be nonnegative", file=sys.stderr)
        return EXIT_USAGE
    try:
        code, out = COMMANDS[args.command](args)
    except UsageError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except Exhausted as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_EXHAUSTED
    if args.format == "json":
        print(json.dumps(out))
    else:
        print(render_text(args.command, out))
    return code


if __name__ == "__main__":
    sys.exit(main())
