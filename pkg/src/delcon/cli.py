"""Command-line interface: ``delcon {compute,check-scheme,verify,collide}``.

Exit codes: 0 success, 1 verification failure or ill-defined scheme,
2 usage or parse error.
"""

from __future__ import annotations

import argparse
import json
import re
import sys
from concurrent.futures import ThreadPoolExecutor
from pathlib import Path

from . import checks
from .engine import ReductionScheme, is_well_defined
from .expr import ExprError, parse_base, parse_poly
from .formats import ParseError, parse_graph_file, render_edge_list
from .generate import MAX_GENERATED_VERTICES, connected_graphs_upto, multigraph_panel
from .invariants import InvariantKind, evaluate, hamiltonian_count, j_kind, signless_laplacian_lift
from .multigraph import GraphError, Multigraph

FORMAT_VERSION = 1


class UsageError(Exception):
    pass


def _kind(name: str, lam: int | None) -> InvariantKind:
    if name == "J":
        if lam is None:
            raise UsageError("invariant J needs --lambda 0 or --lambda 1")
        return j_kind(lam)
    return InvariantKind(name)


def _load(paths: list[str], fmt: str) -> list[tuple[str, Multigraph]]:
    out = []
    for p in paths:
        try:
            text = Path(p).read_text()
        except OSError as exc:
            raise UsageError(f"cannot read {p}: {exc.strerror}") from None
        try:
            graphs = parse_graph_file(text, fmt)
        except ParseError as exc:
            raise UsageError(f"{p}: {exc}") from None
        for i, g in enumerate(graphs):
            out.append((p if len(graphs) == 1 else f"{p}:{i + 1}", g))
    return out


def _lift(g: Multigraph, q_lift: bool) -> Multigraph:
    if not q_lift:
        return g
    try:
        return signless_laplacian_lift(g)
    except GraphError as exc:
        raise UsageError(str(exc)) from None


def _pmap(fn, items, threads: int):
    if threads > 1:
        with ThreadPoolExecutor(max_workers=threads) as pool:
            return list(pool.map(fn, items))
    return [fn(item) for item in items]


def _one_line(g: Multigraph) -> str:
    return render_edge_list(g).strip().replace("\n", " | ")


# -- compute -------------------------------------------------------------

def cmd_compute(args) -> int:
    kinds = [_kind(name, args.lam) for name in (args.invariant or ["H"])]
    graphs = _load(args.inputs, args.input_format)
    results = []
    for source, g in graphs:
        g = _lift(g, args.q_lift)
        for name, kind in zip(args.invariant or ["H"], kinds):
            value = evaluate(g, kind, threads=args.threads)
            results.append((source, g, name, value))
    if args.format == "json":
        payload = {"format": FORMAT_VERSION, "results": [
            {"source": source, "invariant": name,
             "lambda": args.lam if name == "J" else None, "q_lift": args.q_lift,
             "n": g.n, "m": g.m, "components": g.num_components(),
             "hamiltonian_cycles": hamiltonian_count(g),
             "text": value.to_text(), "terms": value.to_json()}
            for source, g, name, value in results]}
        print(json.dumps(payload, indent=2))
    elif len(results) == 1:
        print(results[0][3].to_text())
    else:
        for source, _, name, value in results:
            print(f"{source}\t{name}\t{value.to_text()}")
    return 0


# -- check-scheme --------------------------------------------------------

_SCHEME_KEY = re.compile(r"(?:^|\s)(a|b|c|d|base)\s*=")


def parse_scheme(text: str) -> tuple[ReductionScheme, dict[str, str]]:
    marks = list(_SCHEME_KEY.finditer(text))
    if not marks or text[:marks[0].start()].strip():
        raise UsageError("scheme must look like 'a=<poly> b=<poly> c=<poly> d=<poly> base=<expr in n>'")
    parts: dict[str, str] = {}
    for i, mk in enumerate(marks):
        end = marks[i + 1].start() if i + 1 < len(marks) else len(text)
        key = mk.group(1)
        if key in parts:
            raise UsageError(f"scheme field {key!r} given twice")
        parts[key] = text[mk.end():end].strip()
    missing = [k for k in ("a", "b", "c", "d", "base") if k not in parts]
    if missing:
        raise UsageError(f"scheme is missing {', '.join(missing)}")
    try:
        coefs = {k: parse_poly(parts[k]) for k in "abcd"}
        base = parse_base(parts["base"])
    except ExprError as exc:
        raise UsageError(f"scheme parse error: {exc}") from None
    return ReductionScheme(coefs["a"], coefs["b"], coefs["c"], coefs["d"], base, "cli"), parts


def cmd_check_scheme(args) -> int:
    text = " ".join(args.scheme)
    scheme, parts = parse_scheme(text)
    verdict = is_well_defined(scheme, max_orders=args.max_orders, seed=args.seed)
    w = verdict.witness
    if args.format == "json":
        payload = {
            "format": FORMAT_VERSION, "scheme": parts,
            "condition": verdict.condition.to_text(), "condition_terms": verdict.condition.to_json(),
            "condition_holds": verdict.condition_holds,
            "trivial_suspected": verdict.trivial_suspected,
            "well_defined": verdict.well_defined,
            "witness": None if w is None else {
                "graph": render_edge_list(w.graph),
                "order_a": list(w.order_a), "value_a": w.value_a.to_text(),
                "order_b": list(w.order_b), "value_b": w.value_b.to_text()},
        }
        print(json.dumps(payload, indent=2))
    else:
        print("scheme: " + " ".join(f"{k}={parts[k]}" for k in ("a", "b", "c", "d", "base")))
        status = "well-defined" if verdict.condition_holds else "nonzero"
        print(f"condition: {verdict.condition} — {status}")
        print(f"trivial_suspected: {str(verdict.trivial_suspected).lower()}")
        if w is not None:
            print(f"witness graph: {_one_line(w.graph)}")
            print(f"  order {list(w.order_a)}: {w.value_a}")
            print(f"  order {list(w.order_b)}: {w.value_b}")
        elif not verdict.condition_holds:
            print("witness: none found")
        print(f"verdict: {'well-defined' if verdict.well_defined else 'ill-defined'}")
    return 0 if verdict.well_defined else 1


# -- verify --------------------------------------------------------------

def cmd_verify(args) -> int:
    if args.max_vertices > MAX_GENERATED_VERTICES:
        raise UsageError(f"--max-vertices is capped at {MAX_GENERATED_VERTICES}")
    if args.inputs:
        panel = [g for _, g in _load(args.inputs, args.input_format)]
    else:
        panel = connected_graphs_upto(args.max_vertices)
        panel += [g for g in multigraph_panel() if g.n <= args.max_vertices]
    names = args.identity or list(checks.IDENTITIES)
    failures = 0
    for name in names:
        check = checks.IDENTITIES[name]
        outcomes = _pmap(check, panel, args.threads)
        bad = [(g, msg) for g, msg in zip(panel, outcomes) if msg is not None]
        failures += len(bad)
        print(f"{'PASS' if not bad else 'FAIL'} {name}: {len(panel) - len(bad)}/{len(panel)} graphs")
        for g, msg in bad:
            print(f"  graph: {_one_line(g)}")
            print(f"  {msg}")
    if failures:
        print(f"FAIL: {failures} mismatches")
        return 1
    print(f"PASS: {len(names)} identity families × {len(panel)} graphs")
    return 0


# -- collide -------------------------------------------------------------

def collision_buckets(graphs: list[Multigraph], kind: InvariantKind, q_lift: bool = False,
                      threads: int = 1) -> list[dict]:
    """Group graphs by invariant value; keep groups with two or more
    non-isomorphic members. Order follows first appearance in ``graphs``."""
    values = _pmap(lambda g: evaluate(_lift(g, q_lift), kind), graphs, threads)
    buckets: dict[str, dict] = {}
    for g, value in zip(graphs, values):
        key = value.to_text()
        bucket = buckets.setdefault(key, {"value": value, "members": []})
        cert = g.certificate().decode("ascii")
        if cert not in bucket["members"]:
            bucket["members"].append(cert)
    return [{"value": b["value"], "members": b["members"], "count": len(b["members"])}
            for b in buckets.values() if len(b["members"]) >= 2]


def cmd_collide(args) -> int:
    kind = _kind(args.invariant, args.lam)
    if args.inputs:
        graphs = [g for _, g in _load(args.inputs, args.input_format)]
    else:
        if args.max_vertices > MAX_GENERATED_VERTICES:
            raise UsageError(f"refusing to generate graphs on {args.max_vertices} vertices: "
                             f"the exhaustive family is capped at {MAX_GENERATED_VERTICES}")
        graphs = connected_graphs_upto(args.max_vertices)
    buckets = collision_buckets(graphs, kind, args.q_lift, args.threads)
    if args.format == "json":
        payload = {"format": FORMAT_VERSION, "invariant": args.invariant,
                   "lambda": args.lam if args.invariant == "J" else None, "q_lift": args.q_lift,
                   "graphs": len(graphs),
                   "buckets": [{"value": b["value"].to_text(), "terms": b["value"].to_json(),
                                "members": b["members"], "count": b["count"]} for b in buckets]}
        print(json.dumps(payload, indent=2))
    else:
        lift = " on Q-lift" if args.q_lift else ""
        print(f"invariant {args.invariant}{lift}: {len(graphs)} graphs, {len(buckets)} collision buckets")
        for i, b in enumerate(buckets, 1):
            print(f"bucket {i}\t{b['count']} non-isomorphic\t{b['value']}")
            for cert in b["members"]:
                print(f"  {cert}")
    return 0


# -- argument parsing ----------------------------------------------------

def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="delcon", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True)

    def common(p, inputs_required: bool):
        p.add_argument("inputs", nargs="+" if inputs_required else "*", metavar="GRAPH",
                       help="edge-list file, or graph6 file with one graph per line")
        p.add_argument("--input-format", choices=["auto", "edgelist", "graph6"], default="auto")
        p.add_argument("--format", choices=["text", "json"], default="text")
        p.add_argument("--threads", type=int, default=1)

    p = sub.add_parser("compute", help="evaluate invariants of input graphs")
    common(p, True)
    p.add_argument("--invariant", action="append", choices=["H", "C", "M", "D", "J"])
    p.add_argument("--lambda", dest="lam", type=int, choices=[0, 1])
    p.add_argument("--q-lift", action="store_true", help="evaluate on the signless-Laplacian lift")
    p.set_defaults(func=cmd_compute)

    p = sub.add_parser("check-scheme", help="decide whether an edge recursion is well-defined")
    p.add_argument("scheme", nargs="+", help="a=<poly> b=<poly> c=<poly> d=<poly> base=<expr in n>")
    p.add_argument("--format", choices=["text", "json"], default="text")
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--max-orders", type=int, default=720)
    p.set_defaults(func=cmd_check_scheme)

    p = sub.add_parser("verify", help="check every invariant against its brute-force oracle")
    common(p, False)
    p.add_argument("--identity", action="append", choices=list(checks.IDENTITIES))
    p.add_argument("--max-vertices", type=int, default=6)
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("collide", help="search for non-isomorphic graphs sharing an invariant")
    common(p, False)
    p.add_argument("--invariant", choices=["H", "C", "M", "D", "J"], default="C")
    p.add_argument("--lambda", dest="lam", type=int, choices=[0, 1])
    p.add_argument("--q-lift", action="store_true")
    p.add_argument("--max-vertices", type=int, default=5)
    p.set_defaults(func=cmd_collide)
    return parser


def main(argv: list[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except UsageError as exc:
        print(f"delcon: error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
