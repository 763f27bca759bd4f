"""Command-line front end.

Exit codes: 0 on success, 1 for malformed input or usage errors, 2 for
precondition violations.  Identical inputs produce byte-identical output.
"""

from __future__ import annotations

import argparse
import json
import sys

from . import bernardi, picard, serialize
from .divisors import laplacian
from .errors import GraphInputError, PreconditionError
from .fibers import (SpecialFiberDescription, balanced_representatives,
                     component_group, dual_graph, phi_note)
from .graphs import (SplitPlan, add_leaf, component_genera, expand_hat,
                     shrink_vertex_weight, split_edge, split_vertex,
                     validate, weighted_genus)
from .selfcheck import run_selfcheck
from .trees import enumerate_forests


class _Parser(argparse.ArgumentParser):
    # usage errors exit 1; argparse's default of 2 is reserved for
    # precondition violations here
    def error(self, message):
        self.print_usage(sys.stderr)
        print(f"{self.prog}: error: {message}", file=sys.stderr)
        raise SystemExit(1)


def _load_json(path):
    try:
        with open(path, encoding="utf-8") as fh:
            return json.load(fh)
    except OSError as exc:
        raise GraphInputError(f"cannot read {path!r}: {exc}") from exc
    except json.JSONDecodeError as exc:
        raise GraphInputError(f"{path!r} is not valid JSON: {exc}") from exc


def _load_graph(path):
    return serialize.graph_from_obj(_load_json(path))


def _load_divisor(path):
    return serialize.divisor_from_obj(_load_json(path))


def _load_potential(path):
    obj = _load_json(path)
    key = "potential" if isinstance(obj, dict) and "potential" in obj else "coefficients"
    D = serialize.divisor_from_obj(obj, key=key)
    return D.coefficients


def _emit(text):
    sys.stdout.write(text)


def _emit_graph(g, fmt):
    if fmt == "dot":
        _emit(serialize.graph_to_dot(g))
    else:
        _emit(serialize.dumps(serialize.graph_to_obj(g)))


def _cmd_validate(args):
    g = _load_graph(args.graph)
    if args.format == "dot":
        _emit_graph(g, "dot")
        return 0
    report = validate(g)
    _emit(serialize.dumps({"pleasant": report.pleasant,
                           "connected": report.connected,
                           "issues": list(report.issues)}))
    return 0


def _cmd_genus(args):
    g = _load_graph(args.graph)
    total = weighted_genus(g)
    if args.json or not g.is_connected():
        _emit(serialize.dumps({"genus": total,
                               "component_genera": component_genera(g)}))
    else:
        _emit(f"{total}\n")
    return 0


def _cmd_group(args):
    g = _load_graph(args.graph)
    s = picard.picb0_structure(g) if args.picb0 else picard.pic0_structure(g)
    _emit(serialize.dumps(serialize.group_to_obj(s)))
    return 0


def _cmd_count(args):
    g = _load_graph(args.graph)
    n = picard.count_picb0(g) if args.picb0 else picard.count_pic0(g)
    if args.json:
        _emit(serialize.dumps({"count": n}))
    else:
        _emit(f"{n}\n")
    return 0


def _cmd_trees(args):
    g = _load_graph(args.graph)
    if args.balanced:
        reps = balanced_representatives(g)
    else:
        reps = [ts for forest in enumerate_forests(g)
                for ts in bernardi.enumerate_subweightings(g, forest)]
    _emit(serialize.dumps(
        {"representatives": [serialize.tree_to_obj(g, ts) for ts in reps]}))
    return 0


def _cmd_laplacian(args):
    g = _load_graph(args.graph)
    if args.divisor:
        f = _load_potential(args.divisor)
        _emit(serialize.dumps(serialize.divisor_to_obj(laplacian(g, f))))
    else:
        _emit(serialize.dumps({"vertices": list(g.vertices),
                               "laplacian": g.laplacian_matrix()}))
    return 0


def _cmd_reduce(args):
    g = _load_graph(args.graph)
    D = _load_divisor(args.divisor)
    ts, cert = bernardi.reduce(g, D, q=args.root, e0=args.start)
    _emit(serialize.dumps({"tree": serialize.tree_to_obj(g, ts),
                           "certificate": serialize.certificate_to_obj(cert)}))
    return 0


def _cmd_act(args):
    g = _load_graph(args.graph)
    D0 = _load_divisor(args.divisor)
    ts = serialize.tree_from_obj(g, _load_json(args.tree))
    out = bernardi.torsor_act(g, D0, ts)
    _emit(serialize.dumps(serialize.tree_to_obj(g, out)))
    return 0


def _cmd_expand(args):
    g = _load_graph(args.graph)
    hat = expand_hat(g)
    if args.format == "dot":
        _emit_graph(hat.graph, "dot")
        return 0
    _emit(serialize.dumps({"graph": serialize.graph_to_obj(hat.graph),
                           "copy_of": {cid: list(pair)
                                       for cid, pair in hat.copy_of.items()}}))
    return 0


def _parse_parts(text):
    try:
        return [int(p) for p in text.split(",")]
    except ValueError:
        raise GraphInputError(f"parts must be comma-separated integers, got {text!r}")


def _cmd_rewrite(args):
    g = _load_graph(args.graph)
    if args.rewrite == "add-leaf":
        out = add_leaf(g, args.vertex, args.leaf_weight, args.edge_weight)
    elif args.rewrite == "split-edge":
        out = split_edge(g, args.edge, _parse_parts(args.parts))
    elif args.rewrite == "shrink":
        out = shrink_vertex_weight(g, args.vertex, args.weight)
    else:  # split-vertex
        plan_obj = _load_json(args.plan)
        try:
            parts = {eid: [(tuple(p[0]) if isinstance(p[0], list) else p[0], p[1])
                           for p in ps]
                     for eid, ps in plan_obj["parts"].items()}
        except (KeyError, TypeError) as exc:
            raise GraphInputError(f"malformed split plan: {exc}") from exc
        out, _vmap = split_vertex(g, args.vertex, args.copies, SplitPlan(parts))
    _emit_graph(out, args.format)
    return 0


def _cmd_fiber(args):
    f = SpecialFiberDescription.from_obj(_load_json(args.fiber))
    g = dual_graph(f)
    structure, reps = component_group(f)
    _emit(serialize.dumps({
        "group": serialize.group_to_obj(structure),
        "representatives": [serialize.tree_to_obj(g, ts) for ts in reps],
        "phi_note": phi_note(f),
    }))
    return 0


def _cmd_selfcheck(args):
    ok = run_selfcheck(seed=args.seed, max_vertices=args.max_vertices,
                       max_edges=args.max_edges, max_weight=args.max_weight)
    return 0 if ok else 1


def _build_parser():
    parser = _Parser(prog="chipfire",
                     description="Chip-firing toolkit for weighted multigraphs")
    sub = parser.add_subparsers(dest="command", required=True,
                                parser_class=_Parser)

    def add(name, fn, help_text):
        p = sub.add_parser(name, help=help_text)
        p.set_defaults(fn=fn)
        return p

    p = add("validate", _cmd_validate, "check pleasantness and connectivity")
    p.add_argument("--graph", required=True)
    p.add_argument("--format", choices=["json", "dot"], default="json")

    p = add("genus", _cmd_genus, "weighted genus")
    p.add_argument("--graph", required=True)
    p.add_argument("--json", action="store_true")

    p = add("group", _cmd_group, "Jacobian / balanced Jacobian structure")
    p.add_argument("--graph", required=True)
    which = p.add_mutually_exclusive_group()
    which.add_argument("--pic0", action="store_true")
    which.add_argument("--picb0", action="store_true")

    p = add("count", _cmd_count, "tree-sum count of classes")
    p.add_argument("--graph", required=True)
    which = p.add_mutually_exclusive_group()
    which.add_argument("--pic0", action="store_true")
    which.add_argument("--picb0", action="store_true")
    p.add_argument("--json", action="store_true")

    p = add("trees", _cmd_trees, "sub-weighted spanning trees")
    p.add_argument("--graph", required=True)
    p.add_argument("--balanced", action="store_true")

    p = add("laplacian", _cmd_laplacian,
            "Laplacian matrix, or its value on a potential")
    p.add_argument("--graph", required=True)
    p.add_argument("--divisor", help="file holding the potential")

    p = add("reduce", _cmd_reduce,
            "canonical sub-weighted tree equivalent to a divisor")
    p.add_argument("--graph", required=True)
    p.add_argument("--divisor", required=True)
    p.add_argument("--root")
    p.add_argument("--start")

    p = add("act", _cmd_act, "torsor action of a degree-0 divisor on a tree")
    p.add_argument("--graph", required=True)
    p.add_argument("--divisor", required=True)
    p.add_argument("--tree", required=True)

    p = add("expand", _cmd_expand, "hat-graph expansion")
    p.add_argument("--graph", required=True)
    p.add_argument("--format", choices=["json", "dot"], default="json")

    p = add("rewrite", _cmd_rewrite, "graph rewrites")
    p.add_argument("--graph", required=True)
    p.add_argument("--format", choices=["json", "dot"], default="json")
    rw = p.add_subparsers(dest="rewrite", required=True, parser_class=_Parser)
    q = rw.add_parser("add-leaf")
    q.add_argument("--vertex", required=True)
    q.add_argument("--leaf-weight", type=int, default=1)
    q.add_argument("--edge-weight", type=int, default=1)
    q = rw.add_parser("split-edge")
    q.add_argument("--edge", required=True)
    q.add_argument("--parts", required=True, help="comma-separated weights")
    q = rw.add_parser("shrink")
    q.add_argument("--vertex", required=True)
    q.add_argument("--weight", type=int, required=True)
    q = rw.add_parser("split-vertex")
    q.add_argument("--vertex", required=True)
    q.add_argument("--copies", type=int, required=True)
    q.add_argument("--plan", required=True, help="JSON file with the edge plan")

    p = add("fiber", _cmd_fiber, "component group of a special fiber")
    p.add_argument("--fiber", required=True)

    p = add("selfcheck", _cmd_selfcheck, "run the full verification suite")
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--max-vertices", type=int, default=4)
    p.add_argument("--max-edges", type=int, default=5)
    p.add_argument("--max-weight", type=int, default=3)

    return parser


def main(argv=None) -> int:
    parser = _build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return exc.code or 0
    try:
        return args.fn(args)
    except GraphInputError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1
    except (PreconditionError, ValueError, AssertionError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
