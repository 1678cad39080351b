"""Line-oriented text formats for embedded graphs, flows, colorings and
abstract multigraphs. ``#`` starts a comment; blank lines are ignored.

Embedded graph::

    graph <name>
    vertex <vid>: <dart> <dart> ...     # rotation order
    edge <eid>: <head dart> <tail dart>

Dart labels in a file may be any non-negative integers; vertex and edge ids
must be exactly ``0..V-1`` and ``0..E-1``. Emitting always uses the internal
darts ``2e`` (head) and ``2e+1`` (tail) and starts each rotation at its
smallest dart, so emit, parse, emit is byte-identical.

Flow::

    flow <name> ctx=<D2n:n|Dlt:n|Zn:n>
    <eid> <element>                     # along the graph's reference orientation

Coloring::

    coloring <name> kind=<proper3|special4>
    <eid> <color>

Abstract multigraph (input of ``rotations``)::

    adjacency <name>
    vertices <V>
    edge <eid>: <tail> <head>
"""

from __future__ import annotations

import re

from .algebra import DihedralElement, format_element, parse_context, parse_element
from .coloring import EdgeColoring
from .embedded import EmbeddedGraph, Multigraph
from .errors import InvalidGraph, ParseError
from .flows import FlowAssignment


def _lines(text: str):
    for no, raw in enumerate(text.splitlines(), 1):
        line = raw.split("#", 1)[0].strip()
        if line:
            yield no, line


def _int(tok: str, no: int, what: str) -> int:
    if not re.fullmatch(r"\d+", tok):
        raise ParseError(f"line {no}: {what} must be a non-negative integer, got {tok!r}")
    return int(tok)


def _header(lines, keyword: str) -> tuple[int, list[str]]:
    try:
        no, line = next(lines)
    except StopIteration:
        raise ParseError(f"empty input, expected '{keyword} <name>'") from None
    parts = line.split()
    if parts[0] != keyword:
        raise ParseError(f"line {no}: expected '{keyword}', got {parts[0]!r}")
    return no, parts[1:]


def _name(name: str) -> str:
    if "#" in name or "\n" in name:
        raise ValueError(f"name {name!r} cannot be written: '#' starts a comment")
    return name


def _dense(ids: dict[int, object], what: str):
    if sorted(ids) != list(range(len(ids))):
        raise ParseError(f"{what} ids must be 0..{len(ids) - 1} without gaps")


# --------------------------------------------------------------- graphs

def parse_graph(text: str) -> EmbeddedGraph:
    lines = _lines(text)
    _, rest = _header(lines, "graph")
    name = " ".join(rest)
    vertices: dict[int, list[int]] = {}
    edges: dict[int, tuple[int, int]] = {}
    for no, line in lines:
        m = re.fullmatch(r"(vertex|edge)\s+(\S+)\s*:\s*(.*)", line)
        if not m:
            raise ParseError(f"line {no}: cannot parse {line!r}")
        kind, ident, body = m.groups()
        ident = _int(ident, no, f"{kind} id")
        darts = [_int(t, no, "dart") for t in body.split()]
        if kind == "vertex":
            if ident in vertices:
                raise ParseError(f"line {no}: vertex {ident} listed twice")
            vertices[ident] = darts
        else:
            if ident in edges:
                raise ParseError(f"line {no}: edge {ident} listed twice")
            if len(darts) != 2:
                raise ParseError(f"line {no}: an edge needs exactly two darts")
            if darts[0] == darts[1]:
                raise ParseError(f"line {no}: edge {ident} pairs a dart with itself")
            edges[ident] = (darts[0], darts[1])
    _dense(vertices, "vertex")
    _dense(edges, "edge")
    internal = {}
    for e, (h, t) in edges.items():
        for d, new in ((h, 2 * e), (t, 2 * e + 1)):
            if d in internal:
                raise ParseError(f"dart {d} belongs to two edges")
            internal[d] = new
    seen = set()
    rots = []
    for v in range(len(vertices)):
        rot = []
        for d in vertices[v]:
            if d in seen:
                raise ParseError(f"dart {d} appears at two places in the rotations")
            if d not in internal:
                raise ParseError(f"dart {d} at vertex {v} belongs to no edge")
            seen.add(d)
            rot.append(internal[d])
        rots.append(rot)
    missing = set(internal) - seen
    if missing:
        raise ParseError(f"darts {sorted(missing)} are missing from the rotations")
    try:
        return EmbeddedGraph(rots, name)
    except InvalidGraph as exc:
        raise ParseError(str(exc)) from exc


def emit_graph(g: EmbeddedGraph) -> str:
    out = [f"graph {_name(g.name)}".rstrip()]
    for v, rot in enumerate(g.rotations):
        out.append(f"vertex {v}: " + " ".join(str(d) for d in rot) if rot else f"vertex {v}:")
    for e in range(g.num_edges):
        out.append(f"edge {e}: {2 * e} {2 * e + 1}")
    return "\n".join(out) + "\n"


# ---------------------------------------------------------------- flows

def parse_flow(text: str, num_edges: int | None = None) -> tuple[str, FlowAssignment]:
    lines = _lines(text)
    no, rest = _header(lines, "flow")
    ctx_tok = [t for t in rest if t.startswith("ctx=")]
    if len(ctx_tok) != 1:
        raise ParseError(f"line {no}: flow header needs exactly one ctx=<spec>")
    ctx = parse_context(ctx_tok[0][4:])
    name = " ".join(t for t in rest if not t.startswith("ctx="))
    values: dict[int, DihedralElement] = {}
    for no, line in lines:
        parts = line.split()
        if len(parts) != 2:
            raise ParseError(f"line {no}: expected '<eid> <element>'")
        e = _int(parts[0], no, "edge id")
        if e in values:
            raise ParseError(f"line {no}: edge {e} listed twice")
        values[e] = parse_element(parts[1])
    _dense(values, "edge")
    if num_edges is not None and len(values) != num_edges:
        raise ParseError(f"flow has {len(values)} edges, graph has {num_edges}")
    try:
        f = FlowAssignment(ctx, tuple(values[e] for e in range(len(values))))
    except (ValueError, ArithmeticError) as exc:
        raise ParseError(str(exc)) from exc
    return name, f


def emit_flow(f: FlowAssignment, name: str = "") -> str:
    f = f.normalized()
    head = f"flow {_name(name)} ctx={f.ctx}" if name else f"flow ctx={f.ctx}"
    out = [head] + [f"{e} {format_element(x)}" for e, x in enumerate(f.values)]
    return "\n".join(out) + "\n"


# ------------------------------------------------------------- colorings

def parse_coloring(text: str) -> tuple[str, EdgeColoring]:
    lines = _lines(text)
    no, rest = _header(lines, "coloring")
    kind_tok = [t for t in rest if t.startswith("kind=")]
    kind = kind_tok[0][5:] if kind_tok else "proper3"
    name = " ".join(t for t in rest if not t.startswith("kind="))
    colors: dict[int, int] = {}
    for no, line in lines:
        parts = line.split()
        if len(parts) != 2:
            raise ParseError(f"line {no}: expected '<eid> <color>'")
        e = _int(parts[0], no, "edge id")
        if e in colors:
            raise ParseError(f"line {no}: edge {e} listed twice")
        colors[e] = _int(parts[1], no, "color")
    _dense(colors, "edge")
    try:
        return name, EdgeColoring(tuple(colors[e] for e in range(len(colors))), kind)
    except ValueError as exc:
        raise ParseError(str(exc)) from exc


def emit_coloring(c: EdgeColoring, name: str = "") -> str:
    head = f"coloring {_name(name)} kind={c.kind}" if name else f"coloring kind={c.kind}"
    return "\n".join([head] + [f"{e} {k}" for e, k in enumerate(c.colors)]) + "\n"


# ---------------------------------------------------------- multigraphs

def parse_adjacency(text: str) -> Multigraph:
    lines = _lines(text)
    _, rest = _header(lines, "adjacency")
    name = " ".join(rest)
    nv = None
    edges: dict[int, tuple[int, int]] = {}
    for no, line in lines:
        parts = line.split()
        if parts[0] == "vertices" and len(parts) == 2:
            nv = _int(parts[1], no, "vertex count")
            continue
        m = re.fullmatch(r"edge\s+(\S+)\s*:\s*(\S+)\s+(\S+)", line)
        if not m:
            raise ParseError(f"line {no}: cannot parse {line!r}")
        e = _int(m.group(1), no, "edge id")
        if e in edges:
            raise ParseError(f"line {no}: edge {e} listed twice")
        edges[e] = (_int(m.group(2), no, "vertex"), _int(m.group(3), no, "vertex"))
    if nv is None:
        raise ParseError("missing 'vertices <V>' line")
    _dense(edges, "edge")
    pairs = tuple(edges[e] for e in range(len(edges)))
    if any(max(p) >= nv for p in pairs):
        raise ParseError("edge endpoint outside 0..V-1")
    return Multigraph(nv, pairs, name)


def emit_adjacency(mg: Multigraph) -> str:
    out = [f"adjacency {_name(mg.name)}".rstrip(), f"vertices {mg.num_vertices}"]
    out += [f"edge {e}: {a} {b}" for e, (a, b) in enumerate(mg.edges)]
    return "\n".join(out) + "\n"
