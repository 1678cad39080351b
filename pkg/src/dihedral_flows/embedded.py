"""Graphs cellularly embedded in closed orientable surfaces.

An embedding is stored as a rotation system on darts (half-edges). Edge ``e``
owns darts ``2e`` and ``2e + 1``; the dart involution is ``d ^ 1``. Dart
``2e`` is the *head* of the reference orientation (the end at which the edge
enters its vertex) and ``2e + 1`` the tail. ``rotations[v]`` lists the darts
at ``v`` in the cyclic order of the rotation, canonically starting at the
smallest dart. Faces are the orbits of ``d -> sigma(alpha(d))``; with this
convention a traced face lies to the right of its walk.
"""

from __future__ import annotations

import itertools
import math
from dataclasses import dataclass, field
from functools import cached_property
from typing import Iterable, Iterator, Sequence

import numpy as np

from .errors import ComplexityGuard, InvalidGraph, NonContractible

ROTATION_BUDGET = 10**7


def _canonical(rot: Sequence[int]) -> tuple[int, ...]:
    if not rot:
        return ()
    i = min(range(len(rot)), key=rot.__getitem__)
    return tuple(rot[i:]) + tuple(rot[:i])


@dataclass(frozen=True)
class Multigraph:
    """Abstract multigraph; edge ``(u, v)`` is directed from ``u`` to ``v``."""

    num_vertices: int
    edges: tuple[tuple[int, int], ...]
    name: str = field(default="", compare=False)

    def __post_init__(self):
        object.__setattr__(self, "edges", tuple((int(u), int(v)) for u, v in self.edges))
        for u, v in self.edges:
            if not (0 <= u < self.num_vertices and 0 <= v < self.num_vertices):
                raise InvalidGraph(f"edge ({u}, {v}) has an endpoint out of range")

    @property
    def num_edges(self) -> int:
        return len(self.edges)

    def incident(self, v: int) -> list[int]:
        """Edge ids at ``v``; a loop is listed twice."""
        out = []
        for e, (a, b) in enumerate(self.edges):
            if a == v:
                out.append(e)
            if b == v:
                out.append(e)
        return out

    def degree(self, v: int) -> int:
        return len(self.incident(v))

    def degrees(self) -> list[int]:
        deg = [0] * self.num_vertices
        for a, b in self.edges:
            deg[a] += 1
            deg[b] += 1
        return deg

    def is_cubic(self) -> bool:
        return all(d == 3 for d in self.degrees())

    def other_end(self, e: int, v: int) -> int:
        a, b = self.edges[e]
        return b if a == v else a

    def is_connected(self) -> bool:
        if self.num_vertices == 0:
            return True
        adj = [[] for _ in range(self.num_vertices)]
        for a, b in self.edges:
            adj[a].append(b)
            adj[b].append(a)
        seen = {0}
        stack = [0]
        while stack:
            for w in adj[stack.pop()]:
                if w not in seen:
                    seen.add(w)
                    stack.append(w)
        return len(seen) == self.num_vertices

    def delete_vertices(self, vs: Iterable[int]) -> tuple["Multigraph", list[int], list[int]]:
        """Remove vertices and incident edges.

        Returns the new graph, the old id of every new vertex and the old id
        of every new edge.
        """
        gone = set(vs)
        keep_v = [v for v in range(self.num_vertices) if v not in gone]
        vmap = {v: i for i, v in enumerate(keep_v)}
        keep_e = [e for e, (a, b) in enumerate(self.edges) if a not in gone and b not in gone]
        edges = tuple((vmap[self.edges[e][0]], vmap[self.edges[e][1]]) for e in keep_e)
        return Multigraph(len(keep_v), edges), keep_v, keep_e


@dataclass(frozen=True)
class FaceStructure:
    faces: tuple[tuple[int, ...], ...]
    genus: int

    @property
    def num_faces(self) -> int:
        return len(self.faces)


@dataclass(frozen=True)
class CycleRef:
    """Closed walk given by darts: ``darts[i]`` sits at the i-th vertex and
    ``darts[i] ^ 1`` at the next one."""

    darts: tuple[int, ...]
    simple: bool

    @property
    def edges(self) -> tuple[int, ...]:
        return tuple(d >> 1 for d in self.darts)

    def reversed(self) -> "CycleRef":
        return CycleRef(tuple(d ^ 1 for d in reversed(self.darts)), self.simple)

    def __len__(self) -> int:
        return len(self.darts)


@dataclass(frozen=True, eq=False)
class EmbeddedGraph:
    rotations: tuple[tuple[int, ...], ...]
    name: str = ""
    # old ids of edges/vertices when the graph came out of surgery
    parent_edges: tuple[int, ...] | None = None
    parent_vertices: tuple[int, ...] | None = None

    def __post_init__(self):
        rots = tuple(_canonical([int(d) for d in r]) for r in self.rotations)
        object.__setattr__(self, "rotations", rots)
        darts = sorted(d for r in rots for d in r)
        if len(darts) % 2 or darts != list(range(len(darts))):
            raise InvalidGraph("darts must be exactly 0..2|E|-1, each at one vertex")
        if not self._connected():
            raise InvalidGraph("embedded graph must be connected")

    def _connected(self) -> bool:
        nv = len(self.rotations)
        if nv <= 1:
            return True
        vof = self.vertex_of
        seen = {0}
        stack = [0]
        while stack:
            v = stack.pop()
            for d in self.rotations[v]:
                w = int(vof[d ^ 1])
                if w not in seen:
                    seen.add(w)
                    stack.append(w)
        return len(seen) == nv

    def __eq__(self, other):
        return isinstance(other, EmbeddedGraph) and self.rotations == other.rotations

    def __hash__(self):
        return hash(self.rotations)

    def __repr__(self):
        return f"EmbeddedGraph({self.name!r}, V={self.num_vertices}, E={self.num_edges})"

    @property
    def num_vertices(self) -> int:
        return len(self.rotations)

    @property
    def num_darts(self) -> int:
        return sum(len(r) for r in self.rotations)

    @property
    def num_edges(self) -> int:
        return self.num_darts // 2

    @cached_property
    def vertex_of(self) -> np.ndarray:
        out = np.empty(self.num_darts, dtype=np.int64)
        for v, rot in enumerate(self.rotations):
            out[list(rot)] = v
        return out

    @cached_property
    def sigma(self) -> np.ndarray:
        out = np.empty(self.num_darts, dtype=np.int64)
        for rot in self.rotations:
            for i, d in enumerate(rot):
                out[d] = rot[(i + 1) % len(rot)]
        return out

    def head(self, e: int) -> int:
        return int(self.vertex_of[2 * e])

    def tail(self, e: int) -> int:
        return int(self.vertex_of[2 * e + 1])

    def endpoints(self, e: int) -> tuple[int, int]:
        """``(tail, head)`` of the reference orientation."""
        return self.tail(e), self.head(e)

    def is_loop(self, e: int) -> bool:
        return self.head(e) == self.tail(e)

    def degree(self, v: int) -> int:
        return len(self.rotations[v])

    def is_cubic(self) -> bool:
        return all(len(r) == 3 for r in self.rotations)

    def underlying(self) -> Multigraph:
        return Multigraph(self.num_vertices,
                          tuple(self.endpoints(e) for e in range(self.num_edges)),
                          self.name)

    @cached_property
    def face_structure(self) -> FaceStructure:
        return trace_faces(self)

    @property
    def genus(self) -> int:
        return self.face_structure.genus

    @property
    def num_faces(self) -> int:
        return self.face_structure.num_faces

    def reoriented(self, edges: Iterable[int]) -> "EmbeddedGraph":
        """Same map with the reference orientation of ``edges`` reversed."""
        flip = set(edges)
        rots = [[(d ^ 1) if (d >> 1) in flip else d for d in r] for r in self.rotations]
        return EmbeddedGraph(rots, self.name)

    def mirrored(self) -> "EmbeddedGraph":
        return EmbeddedGraph([tuple(reversed(r)) for r in self.rotations], self.name)

    def renamed(self, name: str) -> "EmbeddedGraph":
        return EmbeddedGraph(self.rotations, name, self.parent_edges, self.parent_vertices)


def from_edge_rotations(mg: Multigraph, orders: Sequence[Sequence[int]], name: str = "") -> EmbeddedGraph:
    """Build an embedding from cyclic orders given as edge ids.

    A loop appears twice in its vertex's order; the first occurrence is taken
    as its head dart.
    """
    rots = []
    for v, order in enumerate(orders):
        rot = []
        seen_loop = set()
        for e in order:
            a, b = mg.edges[e]
            if a == b:
                rot.append(2 * e + (1 if e in seen_loop else 0))
                seen_loop.add(e)
            elif b == v:
                rot.append(2 * e)
            elif a == v:
                rot.append(2 * e + 1)
            else:
                raise InvalidGraph(f"edge {e} is not incident with vertex {v}")
        rots.append(rot)
    return EmbeddedGraph(rots, name or mg.name)


def from_coordinates(mg: Multigraph, coords: Sequence[tuple[float, float]],
                     clockwise: Iterable[int] = (), name: str = "") -> EmbeddedGraph:
    """Rotation read off a straight-line drawing: counterclockwise at every
    vertex except those listed in ``clockwise``."""
    cw = set(clockwise)
    orders = []
    for v in range(mg.num_vertices):
        inc = []
        for e, (a, b) in enumerate(mg.edges):
            if a == b and a == v:
                raise InvalidGraph("loops have no straight-line direction")
            if v in (a, b):
                w = b if a == v else a
                dx = coords[w][0] - coords[v][0]
                dy = coords[w][1] - coords[v][1]
                inc.append((math.atan2(dy, dx), e))
        inc.sort(reverse=v in cw)
        orders.append([e for _, e in inc])
    return from_edge_rotations(mg, orders, name)


def trace_faces(g: EmbeddedGraph) -> FaceStructure:
    """Face orbits of ``d -> sigma(alpha(d))`` and the genus from Euler's
    formula."""
    if g.num_darts == 0:
        return FaceStructure(((),), 0)
    sigma = g.sigma
    seen = np.zeros(g.num_darts, dtype=bool)
    faces = []
    for start in range(g.num_darts):
        if seen[start]:
            continue
        face = []
        d = start
        while not seen[d]:
            seen[d] = True
            face.append(d)
            d = int(sigma[d ^ 1])
        faces.append(tuple(face))
    chi = g.num_vertices - g.num_edges + len(faces)
    assert chi % 2 == 0 and chi <= 2, "Euler characteristic of an orientable surface"
    return FaceStructure(tuple(faces), (2 - chi) // 2)


def bridges(g: EmbeddedGraph | Multigraph) -> set[int]:
    """Cut edges, by iterative low-point DFS over edge ids (parallel edges
    are never bridges, loops never are)."""
    mg = g.underlying() if isinstance(g, EmbeddedGraph) else g
    nv = mg.num_vertices
    adj = [[] for _ in range(nv)]
    for e, (a, b) in enumerate(mg.edges):
        if a != b:
            adj[a].append((b, e))
            adj[b].append((a, e))
    disc = [-1] * nv
    low = [0] * nv
    out = set()
    t = 0
    for root in range(nv):
        if disc[root] >= 0:
            continue
        disc[root] = low[root] = t
        t += 1
        stack = [(root, -1, iter(adj[root]))]
        while stack:
            v, pe, it = stack[-1]
            for w, e in it:
                if e == pe:
                    continue
                if disc[w] < 0:
                    disc[w] = low[w] = t
                    t += 1
                    stack.append((w, e, iter(adj[w])))
                    break
                low[v] = min(low[v], disc[w])
            else:
                stack.pop()
                if stack:
                    u = stack[-1][0]
                    low[u] = min(low[u], low[v])
                    if low[v] > disc[u]:
                        out.add(pe)
    return out


def _split(rots: Sequence[Sequence[int]], name: str = "",
           edge_origin: Sequence[int] | None = None,
           vertex_origin: Sequence[int] | None = None) -> list[EmbeddedGraph]:
    """Split raw rotations (dart ids arbitrary but paired by ``d ^ 1``) into
    connected, densely relabelled embedded graphs with provenance."""
    vof = {}
    for v, r in enumerate(rots):
        for d in r:
            vof[d] = v
    nv = len(rots)
    comp = [-1] * nv
    ncomp = 0
    for s in range(nv):
        if comp[s] >= 0:
            continue
        comp[s] = ncomp
        stack = [s]
        while stack:
            v = stack.pop()
            for d in rots[v]:
                w = vof[d ^ 1]
                if comp[w] < 0:
                    comp[w] = ncomp
                    stack.append(w)
        ncomp += 1
    out = []
    for c in range(ncomp):
        verts = [v for v in range(nv) if comp[v] == c]
        old_edges = sorted({d >> 1 for v in verts for d in rots[v]})
        emap = {e: i for i, e in enumerate(old_edges)}
        new_rots = [[2 * emap[d >> 1] + (d & 1) for d in rots[v]] for v in verts]
        pe = tuple(edge_origin[e] if edge_origin is not None else e for e in old_edges)
        pv = tuple(vertex_origin[v] if vertex_origin is not None else v for v in verts)
        out.append(EmbeddedGraph(new_rots, name, pe, pv))
    return out


@dataclass(frozen=True)
class SpliceRecord:
    """What :func:`restore_edge` needs to undo :func:`delete_edge`."""

    edge: int
    # (dart, vertex, predecessor dart or None) in re-insertion order
    steps: tuple[tuple[int, int, int | None], ...]
    num_vertices: int
    num_edges: int
    name: str


def delete_edge(g: EmbeddedGraph, e: int) -> list[EmbeddedGraph]:
    """Remove edge ``e``, splicing the rotations; one or two components."""
    return delete_edge_with_record(g, e)[0]


def delete_edge_with_record(g: EmbeddedGraph, e: int) -> tuple[list[EmbeddedGraph], SpliceRecord]:
    h, t = 2 * e, 2 * e + 1
    sig = g.sigma
    inv = np.empty_like(sig)
    inv[sig] = np.arange(len(sig))
    steps = []
    # re-insert first the dart whose predecessor survives the deletion
    pending = [h, t]
    preds = {d: int(inv[d]) for d in pending}
    order = sorted(pending, key=lambda d: preds[d] in (h, t))
    for d in order:
        p = preds[d]
        if p == d:
            p = None
        steps.append((d, int(g.vertex_of[d]), p))
    rots = [[d for d in r if d not in (h, t)] for r in g.rotations]
    comps = _split(rots, g.name)
    rec = SpliceRecord(e, tuple(steps), g.num_vertices, g.num_edges, g.name)
    return comps, rec


def restore_edge(components: Sequence[EmbeddedGraph], record: SpliceRecord) -> EmbeddedGraph:
    rots: list[list[int]] = [[] for _ in range(record.num_vertices)]
    for c in components:
        for v_new, rot in enumerate(c.rotations):
            rots[c.parent_vertices[v_new]] = [2 * c.parent_edges[d >> 1] + (d & 1) for d in rot]
    for d, v, pred in record.steps:
        r = rots[v]
        if pred is None or not r:
            r.insert(0, d)
        else:
            r.insert(r.index(pred) + 1, d)
    return EmbeddedGraph(rots, record.name)


def contract_edge(g: EmbeddedGraph, e: int) -> EmbeddedGraph:
    """Contract a non-loop edge, merging the two rotations at its darts."""
    if g.is_loop(e):
        raise InvalidGraph(f"edge {e} is a loop and cannot be contracted")
    h, t = 2 * e, 2 * e + 1
    u, v = g.tail(e), g.head(e)

    def after(rot, d):
        i = rot.index(d)
        return list(rot[i + 1:]) + list(rot[:i])

    merged = after(g.rotations[u], t) + after(g.rotations[v], h)
    keep, drop = min(u, v), max(u, v)
    rots = []
    for w, rot in enumerate(g.rotations):
        if w == keep:
            rots.append(merged)
        elif w != drop:
            rots.append(list(rot))
    relabel = lambda d: d if (d >> 1) < e else d - 2
    return EmbeddedGraph([[relabel(d) for d in r] for r in rots], g.name)


def insert_edge(g: EmbeddedGraph, tail_after: int | None, head_after: int | None,
                tail_vertex: int | None = None, head_vertex: int | None = None) -> EmbeddedGraph:
    """Add a new last edge whose darts follow the given darts in rotation.

    ``tail_vertex``/``head_vertex`` are only needed for a dart-less vertex.
    """
    ne = g.num_edges
    h, t = 2 * ne, 2 * ne + 1
    rots = [list(r) for r in g.rotations]
    for d, after, vtx in ((t, tail_after, tail_vertex), (h, head_after, head_vertex)):
        if after is None:
            rots[vtx].insert(0, d)
        else:
            r = next(rr for rr in rots if after in rr)
            r.insert(r.index(after) + 1, d)
    return EmbeddedGraph(rots, g.name)


def make_cycle(g: EmbeddedGraph, darts: Sequence[int]) -> CycleRef:
    darts = tuple(int(d) for d in darts)
    if not darts:
        raise InvalidGraph("empty cycle")
    vof = g.vertex_of
    k = len(darts)
    for i, d in enumerate(darts):
        if vof[d ^ 1] != vof[darts[(i + 1) % k]]:
            raise InvalidGraph(f"darts {d} and {darts[(i + 1) % k]} do not chain")
    verts = [int(vof[d]) for d in darts]
    edges = [d >> 1 for d in darts]
    simple = len(set(verts)) == k and len(set(edges)) == k
    return CycleRef(darts, simple)


def cycle_from_edges(g: EmbeddedGraph, edges: Iterable[int]) -> CycleRef:
    """Order an edge set forming one simple cycle into a dart walk."""
    es = sorted(set(edges))
    if not es:
        raise InvalidGraph("empty cycle")
    vof = g.vertex_of
    if len(es) == 1:
        if not g.is_loop(es[0]):
            raise InvalidGraph("a single edge is a cycle only if it is a loop")
        return make_cycle(g, [2 * es[0]])
    at = {}
    for e in es:
        for d in (2 * e, 2 * e + 1):
            at.setdefault(int(vof[d]), []).append(d)
    if any(len(ds) != 2 for ds in at.values()):
        raise InvalidGraph("edge set is not 2-regular")
    darts = [2 * es[0] + 1]
    used = {es[0]}
    while True:
        v = int(vof[darts[-1] ^ 1])
        nxt = [d for d in at[v] if (d >> 1) not in used]
        if not nxt:
            break
        darts.append(nxt[0])
        used.add(nxt[0] >> 1)
    if len(used) != len(es):
        raise InvalidGraph("edge set is not connected")
    return make_cycle(g, darts)


@dataclass(frozen=True)
class CutSide:
    graph: EmbeddedGraph
    genus: int
    edges: frozenset[int]      # original non-cycle edges on this side
    sides: frozenset[str]      # subset of {"left", "right"}


def cut_along_cycle(g: EmbeddedGraph, c: CycleRef) -> list[CutSide]:
    """Cut the surface along a simple cycle and cap both boundary walks.

    At a cycle vertex with rotation ``(out, A..., in, B...)`` the darts ``A``
    stay with the left copy and ``B`` go with the right copy. Returns one
    side if the cycle does not separate, else two.
    """
    if not c.simple:
        raise InvalidGraph("can only cut along a simple cycle")
    k = len(c.darts)
    ne, nv = g.num_edges, g.num_vertices
    vof = g.vertex_of
    on_cycle = set(c.edges)
    rcopy = {}
    for i, d in enumerate(c.darts):
        rcopy[d] = 2 * (ne + i) + (d & 1)
        rcopy[d ^ 1] = 2 * (ne + i) + ((d ^ 1) & 1)
    rots = [list(r) for r in g.rotations] + [[] for _ in range(k)]
    vorigin = list(range(nv)) + [int(vof[d]) for d in c.darts]
    for i, out in enumerate(c.darts):
        inn = c.darts[i - 1] ^ 1
        v = int(vof[out])
        rot = list(g.rotations[v])
        j = rot.index(out)
        rot = rot[j:] + rot[:j]
        m = rot.index(inn)
        left = rot[: m + 1]                      # out, A..., in
        right = [inn] + rot[m + 1:] + [out]      # in, B..., out
        rots[v] = left
        rots[nv + i] = [rcopy.get(d, d) if d in (inn, out) else d for d in right]
    eorigin = list(range(ne)) + list(c.edges)
    out = []
    for comp in _split(rots, g.name):
        raw = comp.parent_edges
        sides = set()
        if c.edges[0] in raw:
            sides.add("left")
        if ne in raw:
            sides.add("right")
        edges = frozenset(e for e in raw if e < ne and e not in on_cycle)
        comp = EmbeddedGraph(comp.rotations, g.name,
                             tuple(eorigin[e] for e in raw),
                             tuple(vorigin[v] for v in comp.parent_vertices))
        out.append(CutSide(comp, comp.genus, edges, frozenset(sides)))
    return out


def is_contractible(g: EmbeddedGraph, c: CycleRef) -> bool:
    """True iff the simple cycle bounds a disk."""
    sides = cut_along_cycle(g, c)
    return len(sides) == 2 and any(s.genus == 0 for s in sides)


def disk_sides(g: EmbeddedGraph, c: CycleRef) -> list[CutSide]:
    """Genus-0 sides of a separating cycle, preferred first: fewer interior
    edges, then lexicographically smaller edge set."""
    sides = cut_along_cycle(g, c)
    if len(sides) != 2:
        return []
    disks = [s for s in sides if s.genus == 0]
    return sorted(disks, key=lambda s: (len(s.edges), sorted(s.edges)))


def disk_interior(g: EmbeddedGraph, c: CycleRef) -> set[int]:
    disks = disk_sides(g, c)
    if not disks:
        raise NonContractible(f"cycle {list(c.edges)} does not bound a disk")
    return set(disks[0].edges)


def y_delta(g: EmbeddedGraph, v: int) -> EmbeddedGraph:
    """Replace a cubic vertex by a triangle extending its rotation.

    Vertex ``v`` keeps its id for the corner holding its first dart; the other
    corners become the last two vertices and the triangle edges the last three
    edges, edge ``E + i`` running from corner ``i`` to corner ``i + 1``.
    """
    rot = g.rotations[v]
    if len(rot) != 3:
        raise InvalidGraph(f"vertex {v} has degree {len(rot)}, not 3")
    if len({d >> 1 for d in rot}) != 3:
        raise InvalidGraph(f"vertex {v} carries a loop")
    ne, nv = g.num_edges, g.num_vertices
    corner = [v, nv, nv + 1]
    rots = [list(r) for r in g.rotations] + [[], []]
    for i in range(3):
        tail_i = 2 * (ne + i) + 1               # t_i leaves corner i
        head_prev = 2 * (ne + (i - 1) % 3)      # t_{i-1} enters corner i
        rots[corner[i]] = [rot[i], tail_i, head_prev]
    out = EmbeddedGraph(rots, g.name)
    assert out.num_faces == g.num_faces + 1 and out.genus == g.genus
    return out


def enumerate_rotation_systems(mg: Multigraph, budget: int = ROTATION_BUDGET) -> Iterator[EmbeddedGraph]:
    """Every rotation system, smallest dart fixed first at each vertex; the
    first vertex varies slowest."""
    dart_lists = [[] for _ in range(mg.num_vertices)]
    for e, (a, b) in enumerate(mg.edges):
        dart_lists[b].append(2 * e)
        dart_lists[a].append(2 * e + 1)
    total = 1
    for ds in dart_lists:
        total *= math.factorial(max(len(ds) - 1, 0))
    if total > budget:
        raise ComplexityGuard(f"{total} rotation systems exceed the budget {budget}")
    choices = []
    for ds in dart_lists:
        ds = sorted(ds)
        if not ds:
            choices.append([()])
        else:
            choices.append([(ds[0],) + p for p in itertools.permutations(ds[1:])])
    for combo in itertools.product(*choices):
        yield EmbeddedGraph(combo, mg.name)


def simple_faces(g: EmbeddedGraph) -> list[CycleRef]:
    """Facial walks that visit no vertex twice, as cycles."""
    out = []
    for face in g.face_structure.faces:
        if face:
            c = make_cycle(g, face)
            if c.simple:
                out.append(c)
    return out


def simple_cycles(g: EmbeddedGraph, limit: int = 10**5) -> Iterator[CycleRef]:
    """All simple cycles (loops, digons, ...), each once, smallest vertex
    first."""
    vof = g.vertex_of
    count = 0
    for e in range(g.num_edges):
        if g.is_loop(e):
            count += 1
            yield make_cycle(g, [2 * e])
    seen = set()
    for s in range(g.num_vertices):
        path: list[int] = []
        on_path = {s}
        stack = [iter(g.rotations[s])]
        while stack:
            for d in stack[-1]:
                e = d >> 1
                w = int(vof[d ^ 1])
                if w == s and path and e != path[-1] >> 1 and e not in {x >> 1 for x in path}:
                    key = frozenset([x >> 1 for x in path] + [e])
                    if key not in seen:
                        seen.add(key)
                        count += 1
                        if count > limit:
                            raise ComplexityGuard(f"more than {limit} simple cycles")
                        yield make_cycle(g, path + [d])
                elif w > s and w not in on_path:
                    path.append(d)
                    on_path.add(w)
                    stack.append(iter(g.rotations[w]))
                    break
            else:
                stack.pop()
                if path:
                    on_path.discard(int(vof[path[-1] ^ 1]))
                    path.pop()
