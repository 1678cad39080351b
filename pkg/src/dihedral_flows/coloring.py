"""Edge colorings and the flows they encode.

Element names follow the bounded set with ``n = 2``::

    z = (-1, 0)   y = (-1, 1)   w = (-1, -1)   x = (1, 1)

A proper 3-edge coloring maps to ``z, y, x`` for colors 1, 2, 3. A special
4-edge coloring maps ``z, w, x^{±1}, y`` to colors 1, 2, 3, 4.
"""

from __future__ import annotations

from dataclasses import dataclass

from .algebra import DihedralElement, GroupContext
from .embedded import EmbeddedGraph, Multigraph, delete_edge
from .errors import (ComplexityGuard, InvalidFlow, MissedColorClash, NotAlmostHamiltonian,
                     NotCubic, NotSimpleVertex, NotSpecial)
from .flows import FlowAssignment, verify
from .transforms import contractible_cycle_through, removal_construction

Z = DihedralElement(-1, 0)
Y = DihedralElement(-1, 1)
W = DihedralElement(-1, -1)
X = DihedralElement(1, 1)
X_INV = DihedralElement(1, -1)

HAMILTON_MAX_VERTICES = 30


@dataclass(frozen=True)
class EdgeColoring:
    colors: tuple[int, ...]
    kind: str = "proper3"       # or "special4"

    def __post_init__(self):
        if self.kind not in ("proper3", "special4"):
            raise ValueError(f"unknown coloring kind {self.kind!r}")
        top = 3 if self.kind == "proper3" else 4
        if any(not 1 <= c <= top for c in self.colors):
            raise ValueError(f"{self.kind} colors must lie in 1..{top}")

    def __len__(self) -> int:
        return len(self.colors)

    def classes(self) -> dict[int, frozenset[int]]:
        out: dict[int, set[int]] = {}
        for e, c in enumerate(self.colors):
            out.setdefault(c, set()).add(e)
        return {c: frozenset(es) for c, es in sorted(out.items())}


def _graph(g: EmbeddedGraph | Multigraph) -> Multigraph:
    return g.underlying() if isinstance(g, EmbeddedGraph) else g


def is_proper(g: EmbeddedGraph | Multigraph, c: EdgeColoring) -> bool:
    mg = _graph(g)
    if len(c) != mg.num_edges:
        return False
    for v in range(mg.num_vertices):
        seen = []
        for e in mg.incident(v):
            seen.append(c.colors[e])
        if len(seen) != len(set(seen)):
            return False
    return True


def find_3_edge_coloring(g: EmbeddedGraph | Multigraph) -> EdgeColoring | None:
    """First proper 3-edge coloring by backtracking (edges ascending, colors
    ascending). Subcubic graphs are accepted."""
    mg = _graph(g)
    if any(d > 3 for d in mg.degrees()):
        raise NotCubic("graph has a vertex of degree above 3")
    ne = mg.num_edges
    if any(a == b for a, b in mg.edges):
        return None
    used = [set() for _ in range(mg.num_vertices)]
    colors = [0] * ne
    i = 0
    while 0 <= i < ne:
        a, b = mg.edges[i]
        if colors[i]:
            used[a].discard(colors[i])
            used[b].discard(colors[i])
        c = colors[i] + 1
        while c <= 3 and (c in used[a] or c in used[b]):
            c += 1
        if c <= 3:
            colors[i] = c
            used[a].add(c)
            used[b].add(c)
            i += 1
        else:
            colors[i] = 0
            i -= 1
    return EdgeColoring(tuple(colors)) if i == ne else None


def coloring_to_flow(g: EmbeddedGraph | Multigraph, c: EdgeColoring) -> tuple[EmbeddedGraph, FlowAssignment]:
    """Embedding and nowhere-identity bounded 2-flow built from a proper
    3-edge coloring; color-3 edges keep the graph's orientation."""
    mg = _graph(g)
    if not mg.is_cubic():
        raise NotCubic("coloring_to_flow needs a cubic graph")
    if not is_proper(mg, c):
        raise InvalidFlow("coloring is not proper")
    rots = []
    for v in range(mg.num_vertices):
        dart = {}
        for e in mg.incident(v):
            dart[c.colors[e]] = 2 * e if mg.edges[e][1] == v else 2 * e + 1
        d1, d2, d3 = dart[1], dart[2], dart[3]
        rots.append((d1, d2, d3) if d3 % 2 == 0 else (d1, d3, d2))
    emb = EmbeddedGraph(rots, mg.name)
    value = {1: Z, 2: Y, 3: X}
    f = FlowAssignment(GroupContext.bounded(2), tuple(value[k] for k in c.colors))
    return emb, f


def _value_color(x: DihedralElement) -> int:
    if x == Z:
        return 1
    if x in (X, X_INV):
        return 3
    if x in (Y, W):
        return 2
    raise InvalidFlow(f"value {x} is the identity or outside the bounded set for n = 2")


def flow_to_coloring(g: EmbeddedGraph, f: FlowAssignment) -> EdgeColoring:
    if not g.is_cubic():
        raise NotCubic("flow_to_coloring needs a cubic graph")
    if f.ctx != GroupContext.bounded(2) or not verify(g, f):
        raise InvalidFlow("expected a nowhere-identity bounded 2-flow")
    c = EdgeColoring(tuple(_value_color(x) for x in f.values))
    if not is_proper(g, c):
        raise InvalidFlow("color classes are not a 1-factorization")
    return c


# ------------------------------------------------------ special 4-colorings

def _enters(g: EmbeddedGraph, colors, v: int) -> bool:
    """Whether the color-3 edge must enter ``v`` for Kirchhoff to hold."""
    cs = [colors[d >> 1] for d in g.rotations[v]]
    i = cs.index(1)
    cs = cs[i:] + cs[:i]
    pos = cs.index(3)
    other = cs[3 - pos]
    return (pos == 1 and other == 2) or (pos == 2 and other == 4)


def special4_validate(g: EmbeddedGraph, c: EdgeColoring) -> list[int]:
    """Check a special 4-edge coloring; return for every edge the head dart
    the flow correspondence needs (only meaningful on color-3 edges)."""
    if not g.is_cubic():
        raise NotCubic("special colorings live on cubic graphs")
    if len(c) != g.num_edges:
        raise NotSpecial("coloring does not cover every edge")
    colors = c.colors
    for v in range(g.num_vertices):
        cs = sorted(colors[d >> 1] for d in g.rotations[v])
        if cs not in ([1, 2, 3], [1, 3, 4]):
            raise NotSpecial(f"vertex {v} sees colors {cs}", (v, v))
    heads = [2 * e for e in range(g.num_edges)]
    for e in range(g.num_edges):
        if colors[e] != 3:
            continue
        t, h = g.endpoints(e)
        if t == h:
            raise NotSpecial(f"color-3 loop {e}", (t, h))
        et, eh = _enters(g, colors, t), _enters(g, colors, h)
        if et == eh:
            raise NotSpecial(f"no direction of edge {e} fits both ends", (t, h))
        heads[e] = 2 * e if eh else 2 * e + 1
    return heads


def special4_check(g: EmbeddedGraph, c: EdgeColoring) -> bool:
    try:
        special4_validate(g, c)
    except NotSpecial:
        return False
    return True


def special4_to_flow(g: EmbeddedGraph, c: EdgeColoring) -> FlowAssignment:
    heads = special4_validate(g, c)
    value = {1: Z, 2: W, 3: X, 4: Y}
    vals = tuple(value[k] for k in c.colors)
    flips = tuple(bool(h & 1) for h in heads)
    return FlowAssignment(GroupContext.bounded(2), vals, flips)


def flow_to_special4(g: EmbeddedGraph, f: FlowAssignment) -> EdgeColoring:
    if f.ctx != GroupContext.bounded(2) or not verify(g, f):
        raise InvalidFlow("expected a nowhere-identity bounded 2-flow")
    color = {Z: 1, W: 2, X: 3, X_INV: 3, Y: 4}
    c = EdgeColoring(tuple(color[x] for x in f.values), "special4")
    special4_validate(g, c)
    return c


# ----------------------------------------------------------- 4-flows

def four_flow_from_coloring(g: EmbeddedGraph, c: EdgeColoring) -> FlowAssignment:
    """Nowhere-zero Z_4 flow ``f12 + 2 f13`` from a 3-edge coloring.

    Also works on a subdivision when both edges at every degree-2 vertex
    share a color, since each pair of classes still splits into cycles.
    """
    mg = g.underlying()
    total = [0] * g.num_edges
    for weight, pair in ((1, (1, 2)), (2, (1, 3))):
        sub = {e for e in range(g.num_edges) if c.colors[e] in pair}
        inc = {}
        for e in sub:
            for x in mg.edges[e]:
                inc.setdefault(x, []).append(e)
        if any(len(es) % 2 for es in inc.values()):
            raise InvalidFlow(f"colors {pair} do not form cycles")
        left = set(sub)
        while left:
            e0 = min(left)
            v = mg.edges[e0][0]
            e = e0
            while True:
                left.discard(e)
                a, b = mg.edges[e]
                total[e] += weight if a == v else -weight
                v = b if a == v else a
                nxt = [x for x in inc[v] if x in left]
                if not nxt:
                    break
                e = nxt[0]
    out = FlowAssignment(GroupContext.cyclic(4), tuple(DihedralElement(1, t) for t in total))
    if not verify(g, out):
        raise InvalidFlow("coloring does not give a nowhere-zero 4-flow")
    return out


# ----------------------------------------------------- snark constructions

def hamiltonian_cycle(mg: Multigraph, max_vertices: int = HAMILTON_MAX_VERTICES) -> list[int] | None:
    """Vertex sequence of a Hamiltonian cycle, by backtracking from vertex 0
    through neighbours in ascending order."""
    nv = mg.num_vertices
    if nv > max_vertices:
        raise ComplexityGuard(f"Hamiltonicity search limited to {max_vertices} vertices")
    if nv < 3:
        return None
    nbrs = [sorted({mg.other_end(e, v) for e in mg.incident(v)} - {v}) for v in range(nv)]
    path = [0]
    on = [False] * nv
    on[0] = True
    iters = [iter(nbrs[0])]
    while iters:
        for w in iters[-1]:
            if on[w]:
                continue
            path.append(w)
            on[w] = True
            if len(path) == nv:
                if 0 in nbrs[w]:
                    return path
                path.pop()
                on[w] = False
                continue
            iters.append(iter(nbrs[w]))
            break
        else:
            iters.pop()
            on[path.pop()] = False
    return None


def _edge_between(mg: Multigraph, a: int, b: int, taken: set[int]) -> int:
    for e in mg.incident(a):
        if mg.other_end(e, a) == b and e not in taken:
            return e
    raise NotAlmostHamiltonian(f"no edge between {a} and {b}")


def _coloring_on_minor(g: EmbeddedGraph, removed: int, colors: dict[int, int]) -> tuple[EmbeddedGraph, EdgeColoring]:
    minor = delete_edge(g, removed)[0]
    return minor, EdgeColoring(tuple(colors[e] for e in minor.parent_edges))


def _simple_edge_at(g: EmbeddedGraph, v: int):
    for d in g.rotations[v]:
        c = contractible_cycle_through(g, d >> 1)
        if c is not None:
            return d >> 1, c
    raise NotSimpleVertex(f"no edge at vertex {v} lies on a simple contractible cycle")


def almost_hamiltonian_flow(g: EmbeddedGraph, v: int, hamilton: list[int] | None = None) -> FlowAssignment:
    """Nowhere-identity bounded 4-flow from a Hamiltonian cycle of ``g - v``
    and a simple contractible cycle through an edge at ``v``."""
    if not g.is_cubic():
        raise NotCubic("expected a cubic graph")
    e1, cyc = _simple_edge_at(g, v)
    v1 = g.head(e1) if g.tail(e1) == v else g.tail(e1)
    rest, keep_v, keep_e = g.underlying().delete_vertices([v])
    if hamilton is None:
        local = hamiltonian_cycle(rest)
        if local is None:
            raise NotAlmostHamiltonian(f"graph minus vertex {v} is not Hamiltonian")
        hamilton = [keep_v[x] for x in local]
    if sorted(hamilton) != keep_v:
        raise NotAlmostHamiltonian("cycle does not visit every other vertex exactly once")
    mg = g.underlying()
    i = hamilton.index(v1)
    seq = hamilton[i:] + hamilton[:i]
    taken: set[int] = set()
    h_edges = []
    for a, b in zip(seq, seq[1:] + seq[:1]):
        e = _edge_between(mg, a, b, taken | {d >> 1 for d in g.rotations[v]})
        taken.add(e)
        h_edges.append(e)
    m = len(h_edges)
    if m % 2 == 0:
        raise NotAlmostHamiltonian("Hamiltonian cycle of even length")
    colors = {e: 3 for e in range(g.num_edges)}
    for k, e in enumerate(h_edges):
        colors[e] = 1 if k == m - 1 or k % 2 == 0 else 2
    minor, c = _coloring_on_minor(g, e1, colors)
    h = four_flow_from_coloring(minor, c)
    return removal_construction(g, e1, cyc, h)


def missed_color(mg: Multigraph, c: EdgeColoring, v: int) -> int:
    present = {c.colors[e] for e in mg.incident(v)}
    missing = sorted({1, 2, 3} - present)
    if len(missing) != 1:
        raise InvalidFlow(f"vertex {v} misses colors {missing}")
    return missing[0]


def avc_flow(g: EmbeddedGraph, e: int, c3: EdgeColoring | None = None) -> FlowAssignment:
    """Nowhere-identity bounded 4-flow from a 3-edge coloring of
    ``g - {u, v}`` where ``e = uv`` lies on a simple contractible cycle.

    ``c3`` is indexed by the edges of ``g.underlying().delete_vertices``.
    """
    if not g.is_cubic():
        raise NotCubic("expected a cubic graph")
    cyc = contractible_cycle_through(g, e)
    if cyc is None:
        raise NotSimpleVertex(f"edge {e} lies on no simple contractible cycle")
    u, v = g.endpoints(e)
    if u == v:
        raise NotSimpleVertex(f"edge {e} is a loop")
    mg = g.underlying()
    rest, keep_v, keep_e = mg.delete_vertices([u, v])
    if c3 is None:
        c3 = find_3_edge_coloring(rest)
        if c3 is None:
            raise MissedColorClash(f"graph minus the ends of edge {e} is not 3-edge colorable")
    if not is_proper(rest, c3):
        raise InvalidFlow("c3 is not a proper 3-edge coloring")
    vmap = {old: new for new, old in enumerate(keep_v)}
    side_colors = {}
    for end in (u, v):
        outer = [x for x in mg.incident(end) if x != e]
        miss = [missed_color(rest, c3, vmap[mg.other_end(x, end)]) for x in outer]
        if miss[0] != miss[1]:
            raise MissedColorClash(
                f"neighbours of {end} miss colors {miss[0]} and {miss[1]}; the coloring extends")
        for x in outer:
            side_colors[x] = miss[0]
    colors = {old: c3.colors[i] for i, old in enumerate(keep_e)}
    colors.update(side_colors)
    minor, c = _coloring_on_minor(g, e, colors)
    h = four_flow_from_coloring(minor, c)
    return removal_construction(g, e, cyc, h)


@dataclass(frozen=True)
class StructureSets:
    almost_hamiltonian: frozenset[int]
    simple_vertices: frozenset[int]
    avc_edges: frozenset[int]
    simple_edges: frozenset[int]


def structure_sets(g: EmbeddedGraph, max_vertices: int = HAMILTON_MAX_VERTICES) -> StructureSets:
    mg = g.underlying()
    if mg.num_vertices > max_vertices:
        raise ComplexityGuard(f"structure sets limited to {max_vertices} vertices")
    vah = set()
    for v in range(g.num_vertices):
        rest = mg.delete_vertices([v])[0]
        if rest.is_connected() and hamiltonian_cycle(rest, max_vertices) is not None:
            vah.add(v)
    esimple = {e for e in range(g.num_edges) if contractible_cycle_through(g, e) is not None}
    vsimple = {x for e in esimple for x in g.endpoints(e)}
    eavc = set()
    for e in range(g.num_edges):
        u, v = g.endpoints(e)
        if u == v:
            continue
        rest = mg.delete_vertices([u, v])[0]
        if find_3_edge_coloring(rest) is not None:
            eavc.add(e)
    return StructureSets(frozenset(vah), frozenset(vsimple), frozenset(eavc), frozenset(esimple))
