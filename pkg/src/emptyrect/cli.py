"""Command-line front end.

Exit status: 0 on success, 2 when an identity, bound or statistical check
fails, 1 on usage or input errors.
"""

from __future__ import annotations

import argparse
import hashlib
import json
import sys
from fractions import Fraction
from pathlib import Path

from . import boxgraph, rectgraph, realizer, scarf
from .geom import GeometryError, normalize_ranks, normalize_ranks3
from .graph import Graph
from .pointfile import format_points, parse_points, PointFileError

SCHEMA = "emptyrect.report/1"
EXIT_OK, EXIT_USAGE, EXIT_VIOLATION = 0, 1, 2


class UsageError(Exception):
    pass


class Outcome:
    def __init__(self, payload: dict, ok: bool = True):
        self.payload = payload
        self.ok = ok


def digest(data: bytes) -> str:
    return "sha256:" + hashlib.sha256(data).hexdigest()


def make_report(command: str, input_bytes: bytes, payload: dict, seed=None) -> dict:
    return {"schema": SCHEMA, "command": command, "input_digest": digest(input_bytes),
            "seed": seed, "payload": payload}


def dumps(obj) -> str:
    return json.dumps(obj, sort_keys=True, indent=2) + "\n"


def _read(path):
    if path == "-":
        return sys.stdin.buffer.read()
    return Path(path).read_bytes()


def _load_points(data: bytes, perturb: bool, dim=None):
    pts = parse_points(data.decode("utf-8"), dim)
    if not pts:
        raise PointFileError("no points in input")
    if len(pts[0]) == 2:
        return normalize_ranks(pts, perturb=perturb)
    return normalize_ranks3(pts, perturb=perturb)


def _rank_labels(X):
    return ["(" + ",".join(map(str, p)) + ")" for p in X]


def _write_dot(args, G, X):
    if args.dot:
        Path(args.dot).write_text(G.to_dot(_rank_labels(X)), encoding="utf-8")


def cmd_analyze(args, data):
    X = _load_points(data, args.perturb, dim=2)
    G = rectgraph.rectangle_graph(X, oracle=args.oracle)
    report = rectgraph.verify_w_span(X, oracle=args.oracle)
    diagram, conjugate = rectgraph.decompose_conjugate(X, G)
    violations = rectgraph.streifen_violations(X, G)
    payload = report.to_json()
    payload.update({
        "diagram_edges": len(diagram),
        "conjugate_edges": len(conjugate),
        "streifen_ok": not violations,
    })
    _write_dot(args, G, X)
    ok = report.identity1_holds and report.identity2_holds and report.within_bound and not violations
    return Outcome(payload, ok)


def cmd_construct(args, data):
    if args.kind == "extremal":
        if args.n is None or args.n < 2:
            raise UsageError("construct extremal needs --n >= 2")
        X = rectgraph.extremal_pointset(args.n)
        G = rectgraph.rectangle_graph(X, oracle=args.oracle)
        bound = rectgraph.max_edges_bound(args.n)
        payload = {"kind": "extremal", "n": X.n, "edges": G.m, "bound": bound,
                   "at_bound": G.m == bound}
        ok = G.m == bound
    elif args.kind == "k16":
        X = realizer.k16_pointset()
        G = boxgraph.box_graph(X)
        payload = {"kind": "k16", "n": X.n, "edges": G.m, "complete": G.is_complete()}
        ok = G.is_complete()
    else:
        if args.part_size is None or args.part_size < 1:
            raise UsageError("construct eightpartite needs --part-size >= 1")
        X = boxgraph.eight_partite_pointset(args.part_size)
        G = boxgraph.box_graph(X)
        cross = boxgraph.cross_part_edges(args.part_size)
        present = sum(1 for e in cross if G.has_edge(*e))
        payload = {"kind": "eightpartite", "part_size": args.part_size, "n": X.n,
                   "edges": G.m, "cross_edges": present,
                   "all_cross_edges": present == len(cross)}
        ok = present == len(cross)
    text = format_points(X.points, header=f"emptyrect construct {args.kind}")
    if args.out:
        Path(args.out).write_text(text, encoding="utf-8")
    _write_dot(args, G, X)
    return Outcome(payload, ok)


def cmd_scarf(args, data):
    P = _load_points(data, args.perturb)
    if len(P[0]) == 2:
        check = scarf.verify_face_numbers(P)
        payload = check.to_json()
        payload["d"] = 4
        ok = check.all_ok and check.identity1 and check.identity2
        if args.facets:
            cx = scarf.scarf_complex(scarf.lift_to_4d(P))
            Path(args.facets).write_text(cx.facet_text(), encoding="utf-8")
        return Outcome(payload, ok)
    V = scarf.suspend(P.points, M=P.n + 1)
    cx = scarf.scarf_complex_3d(V)
    chi = cx.euler_characteristic()
    if args.facets:
        Path(args.facets).write_text(cx.facet_text(), encoding="utf-8")
    return Outcome({"d": 3, "f": list(cx.f_vector), "euler_3d": chi}, chi == 1)


def _load_json(path):
    return json.loads(_read(path).decode("utf-8"))


def cmd_realizer(args, data):
    if args.action == "from-points":
        P = _load_points(data, args.perturb)
        if len(P[0]) == 2:
            R = realizer.pointset_to_double_arrow(P)
            direct = rectgraph.rectangle_graph(P, oracle=args.oracle)
        else:
            R = realizer.pointset_to_box_realizer(P)
            direct = boxgraph.box_graph(P)
        G = realizer.graph_from_realizer(R)
        _write_dot(args, G, P)
        payload = {"realizer": R.to_json(), "edges": G.m, "matches_geometry": G == direct,
                   "degenerate": R.degenerate}
        return Outcome(payload, G == direct)
    if args.action == "derive":
        R = realizer.Realizer.from_json(json.loads(data.decode("utf-8")))
        G = realizer.graph_from_realizer(R)
        if args.dot:
            Path(args.dot).write_text(G.to_dot(), encoding="utf-8")
        return Outcome({"graph": G.to_json(), "edges": G.m, "degenerate": R.degenerate})
    if args.action == "verify":
        if not args.realizer:
            raise UsageError("realizer verify needs --realizer FILE")
        G = Graph.from_json(json.loads(data.decode("utf-8")))
        R = realizer.Realizer.from_json(_load_json(args.realizer))
        return Outcome({"valid": realizer.verify_realizer(G, R), "degenerate": R.degenerate})
    G = Graph.from_json(json.loads(data.decode("utf-8")))
    R = realizer.search_realizer(G, args.t)
    return Outcome({"experimental": True, "t": args.t,
                    "realizer": R.to_json() if R is not None else None})


def cmd_box(args, data):
    Y = _load_points(data, args.perturb, dim=3)
    stats = boxgraph.box_stats(Y)
    G = boxgraph.box_graph(Y)
    R = realizer.pointset_to_box_realizer(Y)
    payload = stats.to_json()
    payload["matches_realizer"] = realizer.graph_from_realizer(R) == G
    _write_dot(args, G, Y)
    return Outcome(payload, payload["matches_realizer"] and stats.max_clique_lower <= 16)


def cmd_random(args, data):
    if args.n < 1 or args.trials < 1:
        raise UsageError("random needs --n >= 1 and --trials >= 1")
    seed = args.seed if args.seed is not None else 0
    mean, stderr = rectgraph.monte_carlo_edges(args.n, args.trials, seed, workers=args.workers)
    exact = rectgraph.expected_edges_exact(args.n)
    diff = abs(mean - float(exact))
    agree = diff <= 3 * stderr if stderr > 0 else diff == 0
    payload = {"n": args.n, "trials": args.trials, "mean": mean, "stderr": stderr,
               "exact": str(Fraction(exact)), "exact_float": float(exact),
               "within_3_stderr": agree}
    return Outcome(payload, agree)


def _common(suppress: bool) -> argparse.ArgumentParser:
    # subcommand copies use SUPPRESS so they don't overwrite flags given before the subcommand
    d = (lambda v: argparse.SUPPRESS) if suppress else (lambda v: v)
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--json", action="store_true", default=d(False),
                        help="print the full JSON report")
    common.add_argument("--dot", metavar="PATH", default=d(None),
                        help="write the graph as Graphviz DOT")
    common.add_argument("--perturb", action="store_true", default=d(False),
                        help="break coordinate ties deterministically (changes the instance)")
    common.add_argument("--seed", type=int, default=d(None))
    common.add_argument("--oracle", action="store_true", default=d(False),
                        help="use brute-force edge enumeration")
    return common


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="emptyrect", parents=[_common(False)],
                                description="Empty rectangles, realizers and Scarf complexes.")
    sub = p.add_subparsers(dest="command", required=True)
    common = _common(True)

    a = sub.add_parser("analyze", parents=[common], help="span statistics of a planar point file")
    a.add_argument("file")

    c = sub.add_parser("construct", parents=[common], help="build an extremal construction")
    c.add_argument("kind", choices=["extremal", "eightpartite", "k16"])
    c.add_argument("--n", type=int)
    c.add_argument("--part-size", type=int)
    c.add_argument("--out", metavar="PATH", help="write the point file here")

    s = sub.add_parser("scarf", parents=[common], help="Scarf complex face numbers")
    s.add_argument("file")
    s.add_argument("--facets", metavar="PATH", help="write maximal faces, one per line")

    r = sub.add_parser("realizer", parents=[common], help="realizer tools")
    r.add_argument("action", choices=["verify", "derive", "from-points", "search"])
    r.add_argument("file", help="graph JSON (verify/search), realizer JSON (derive) or point file")
    r.add_argument("--realizer", metavar="PATH")
    r.add_argument("--t", type=int, default=4)

    b = sub.add_parser("box", parents=[common], help="box graph statistics of a 3D point file")
    b.add_argument("file")

    q = sub.add_parser("random", parents=[common], help="Monte Carlo edge count vs exact expectation")
    q.add_argument("--n", type=int, required=True)
    q.add_argument("--trials", type=int, default=10000)
    q.add_argument("--workers", type=int, default=1)
    return p


COMMANDS = {
    "analyze": cmd_analyze,
    "construct": cmd_construct,
    "scarf": cmd_scarf,
    "realizer": cmd_realizer,
    "box": cmd_box,
    "random": cmd_random,
}


def _summary(report) -> str:
    lines = [f"{report['command']}:"]
    for k, v in sorted(report["payload"].items()):
        if isinstance(v, (dict, list)) and len(json.dumps(v)) > 60:
            v = "<%s>" % type(v).__name__
        lines.append(f"  {k}: {v}")
    return "\n".join(lines) + "\n"


def run(argv=None, stdout=None) -> int:
    stdout = stdout or sys.stdout
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        if args.command in ("construct", "random"):
            params = {k: v for k, v in sorted(vars(args).items()) if k not in ("dot", "out", "json", "workers")}
            data = json.dumps(params, sort_keys=True).encode()
        else:
            data = _read(args.file)
        outcome = COMMANDS[args.command](args, data)
    except (PointFileError, GeometryError, scarf.ScarfError, realizer.SizeMismatch,
            UsageError, OSError, ValueError, KeyError) as exc:
        print(f"emptyrect: error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    seed = args.seed if args.command == "random" else None
    if args.command == "random" and seed is None:
        seed = 0
    report = make_report(args.command, data, outcome.payload, seed)
    stdout.write(dumps(report) if args.json else _summary(report))
    return EXIT_OK if outcome.ok else EXIT_VIOLATION


def main():
    sys.exit(run())


if __name__ == "__main__":
    main()
