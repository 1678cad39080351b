"""``dflow`` command-line driver.

Graph arguments are file paths or ``@name`` for a corpus entry (``@fig4#3``).
Output is one ``key=value`` record per line. Exit codes: 0 yes/success,
1 no, 2 parse error, 3 search budget exceeded.
"""

from __future__ import annotations

import argparse
import sys

from .algebra import GroupContext, Kind, parse_context
from .coloring import (EdgeColoring, find_3_edge_coloring, flow_to_special4, special4_check,
                       special4_to_flow)
from .corpus import corpus as load_corpus, get as corpus_get, get_graph as corpus_graph
from .embedded import EmbeddedGraph, Multigraph, bridges, enumerate_rotation_systems
from .errors import Blocked, ComplexityGuard, DflowError, ParseError
from .existence import devos_verdict, plane_sided_bridges
from .flows import count_flows, find_flow, lift, verify
from .formats import (emit_coloring, emit_flow, emit_graph, parse_adjacency, parse_coloring,
                      parse_flow, parse_graph)
from .transforms import reduce_to_rotation_flow

EXIT_YES, EXIT_NO, EXIT_PARSE, EXIT_GUARD = 0, 1, 2, 3


def _read(path: str) -> str:
    if path == "-":
        return sys.stdin.read()
    try:
        with open(path, encoding="utf-8") as fh:
            return fh.read()
    except OSError as exc:
        raise ParseError(f"cannot read {path}: {exc.strerror}") from exc


def _graph(arg: str) -> EmbeddedGraph:
    if arg.startswith("@"):
        try:
            return corpus_graph(arg[1:])
        except DflowError as exc:
            raise ParseError(str(exc)) from exc
    return parse_graph(_read(arg))


def _multigraph(arg: str) -> Multigraph:
    if arg.startswith("@"):
        return _graph(arg).underlying()
    text = _read(arg)
    first = next((ln.split("#", 1)[0].split() for ln in text.splitlines()
                  if ln.split("#", 1)[0].strip()), [""])
    if first[0] == "adjacency":
        return parse_adjacency(text)
    return parse_graph(text).underlying()


def _flow(g: EmbeddedGraph, path: str):
    name, f = parse_flow(_read(path), g.num_edges)
    return name, f


def _ctx(spec: str) -> GroupContext:
    try:
        return parse_context(spec)
    except (ValueError, DflowError) as exc:
        raise ParseError(str(exc)) from exc


def _yes(flag: bool) -> str:
    return "yes" if flag else "no"


def _write(text: str) -> None:
    sys.stdout.write(text)


# ------------------------------------------------------------- commands

def cmd_faces(a) -> int:
    g = _graph(a.graph)
    fs = g.face_structure
    print(f"vertices={g.num_vertices} edges={g.num_edges} faces={fs.num_faces} genus={fs.genus}")
    for i, face in enumerate(fs.faces):
        print(f"face {i}: " + " ".join(str(d) for d in face))
    return EXIT_YES


def cmd_bridges(a) -> int:
    g = _graph(a.graph)
    bs = sorted(bridges(g))
    psb = plane_sided_bridges(g)
    print(f"bridges={len(bs)} plane_sided={len(psb)}")
    for e in bs:
        print(f"bridge {e} plane_sided={_yes(e in psb)}")
    return EXIT_YES


def cmd_exists(a) -> int:
    ctx = _ctx(a.group)
    if ctx.kind is not Kind.MOD:
        raise ParseError("--group expects D2n:<n>")
    verdict = devos_verdict(_graph(a.graph), ctx.n, budget=a.budget)
    print(verdict)
    if verdict.exists is None:
        return EXIT_GUARD
    return EXIT_YES if verdict.exists else EXIT_NO


def cmd_count(a) -> int:
    g = _graph(a.graph)
    print(f"count={count_flows(g, _ctx(a.ctx), not a.allow_identity, budget=a.budget)}")
    return EXIT_YES


def cmd_find(a) -> int:
    g = _graph(a.graph)
    f = find_flow(g, _ctx(a.ctx), not a.allow_identity, budget=a.budget)
    if f is None:
        print("found=no")
        return EXIT_NO
    _write(emit_flow(f, g.name))
    return EXIT_YES


def cmd_verify(a) -> int:
    g = _graph(a.graph)
    _, f = _flow(g, a.flow)
    r = verify(g, f, require_nowhere_identity=False)
    print(f"valid={_yes(r.kirchhoff_ok)} nowhere_identity={_yes(r.nowhere_identity)}")
    for v in r.bad_vertices:
        print(f"bad_vertex {v}")
    for e in r.identity_edges:
        print(f"identity_edge {e}")
    return EXIT_YES if r.kirchhoff_ok and r.nowhere_identity else EXIT_NO


def cmd_lift(a) -> int:
    g = _graph(a.graph)
    name, f = _flow(g, a.flow)
    if f.ctx.kind is not Kind.MOD:
        raise ParseError("lift expects a D2n flow")
    out = lift(g, f, budget=a.budget)
    if out is None:
        print("lift=none")
        return EXIT_NO
    _write(emit_flow(out, name))
    return EXIT_YES


def cmd_reduce(a) -> int:
    g = _graph(a.graph)
    name, f = _flow(g, a.flow)
    if f.ctx.kind is not Kind.MOD:
        raise ParseError("reduce expects a D2n flow")
    try:
        out = reduce_to_rotation_flow(g, f)
    except Blocked as exc:
        print(f"blocked={exc.reason} cycle=" + ",".join(str(e) for e in exc.cycle))
        return EXIT_NO
    _write(emit_flow(out, name))
    return EXIT_YES


def cmd_color3(a) -> int:
    mg = _multigraph(a.graph)
    c = find_3_edge_coloring(mg)
    if c is None:
        print("colorable=no")
        return EXIT_NO
    _write(emit_coloring(c, mg.name))
    return EXIT_YES


def cmd_special4(a) -> int:
    g = _graph(a.graph)
    if a.action == "from-flow":
        name, f = _flow(g, a.file)
        _write(emit_coloring(flow_to_special4(g, f), name))
        return EXIT_YES
    name, c = parse_coloring(_read(a.file))
    if len(c) != g.num_edges:
        raise ParseError(f"coloring has {len(c)} edges, graph has {g.num_edges}")
    c = EdgeColoring(c.colors, "special4")
    if a.action == "check":
        ok = special4_check(g, c)
        print(f"special={_yes(ok)}")
        return EXIT_YES if ok else EXIT_NO
    _write(emit_flow(special4_to_flow(g, c), name))
    return EXIT_YES


def cmd_corpus(a) -> int:
    if a.action == "list":
        for e in load_corpus():
            g = e.graph
            print(f"{e.name} vertices={g.num_vertices} edges={g.num_edges} faces={e.faces} "
                  f"genus={e.genus} flows={','.join(e.flows) or '-'} variants={len(e.variants)}")
        return EXIT_YES
    if a.name is None:
        raise ParseError("corpus emit needs an entry name")
    try:
        entry = corpus_get(a.name)
    except DflowError as exc:
        raise ParseError(str(exc)) from exc
    if a.flow is None:
        _write(emit_graph(entry.graph))
        return EXIT_YES
    if a.flow not in entry.flows:
        raise ParseError(f"{a.name} has no bundled flow {a.flow!r}")
    _write(emit_flow(entry.flows[a.flow], a.flow))
    return EXIT_YES


def cmd_sweep(a) -> int:
    g = _graph(a.graph)
    for n in range(a.n_from, a.n_to + 1):
        ctx = _ctx(f"{a.ctx_family}:{n}")
        print(f"n={n} ctx={ctx} count={count_flows(g, ctx, budget=a.budget)}")
    return EXIT_YES


def cmd_rotations(a) -> int:
    mg = _multigraph(a.graph)
    total = shown = 0
    for g in enumerate_rotation_systems(mg):
        total += 1
        if a.faces is not None and g.num_faces != a.faces:
            continue
        shown += 1
        rots = " | ".join(" ".join(str(d) for d in r) for r in g.rotations)
        print(f"system {shown} faces={g.num_faces} genus={g.genus} rotations={rots}")
    print(f"systems={total} matching={shown}")
    return EXIT_YES


# --------------------------------------------------------------- parser

def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="dflow", description="Dihedral flows on embedded graphs.")
    sub = p.add_subparsers(dest="command", required=True)

    def graph_cmd(name, fn, help_):
        sp = sub.add_parser(name, help=help_)
        sp.add_argument("graph", help="graph file, '-' for stdin, or @corpus-name")
        sp.set_defaults(fn=fn)
        return sp

    def budgeted(sp):
        sp.add_argument("--budget", type=int, default=None,
                        help="maximum search size (default: DFLOW_BUDGET or 1e9)")
        return sp

    graph_cmd("faces", cmd_faces, "face count, genus and facial walks")
    graph_cmd("bridges", cmd_bridges, "bridges and whether they are plane-sided")
    sp = budgeted(graph_cmd("exists", cmd_exists, "existence of a nowhere-identity D2n flow"))
    sp.add_argument("--group", required=True, metavar="D2n:N")
    for name, fn in (("count", cmd_count), ("find", cmd_find)):
        sp = budgeted(graph_cmd(name, fn, f"{name} flows"))
        sp.add_argument("--ctx", required=True, metavar="SPEC", help="D2n:N, Dlt:N or Zn:N")
        sp.add_argument("--allow-identity", action="store_true")
    sp = graph_cmd("verify", cmd_verify, "check a flow file")
    sp.add_argument("flow")
    sp = budgeted(graph_cmd("lift", cmd_lift, "lift a D2n flow to a bounded flow"))
    sp.add_argument("flow")
    sp = graph_cmd("reduce", cmd_reduce, "turn a D2n flow into a rotation-only flow")
    sp.add_argument("flow")
    graph_cmd("color3", cmd_color3, "find a proper 3-edge coloring")

    sp = sub.add_parser("special4", help="special 4-edge colorings")
    sp.add_argument("action", choices=("check", "from-flow", "to-flow"))
    sp.add_argument("graph")
    sp.add_argument("file", help="coloring file (check, to-flow) or flow file (from-flow)")
    sp.set_defaults(fn=cmd_special4)

    sp = sub.add_parser("corpus", help="built-in examples")
    sp.add_argument("action", choices=("list", "emit"))
    sp.add_argument("name", nargs="?")
    sp.add_argument("--flow", help="emit this bundled flow instead of the graph")
    sp.set_defaults(fn=cmd_corpus)

    sp = budgeted(graph_cmd("sweep", cmd_sweep, "flow counts over a range of n"))
    sp.add_argument("--ctx-family", required=True, choices=("D2n", "Dlt", "Zn"))
    sp.add_argument("--n-from", type=int, required=True)
    sp.add_argument("--n-to", type=int, required=True)

    sp = graph_cmd("rotations", cmd_rotations, "enumerate rotation systems of a multigraph")
    sp.add_argument("--faces", type=int, default=None)
    return p


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.fn(args)
    except ParseError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_PARSE
    except ComplexityGuard as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_GUARD
    except DflowError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_NO


if __name__ == "__main__":
    sys.exit(main())
