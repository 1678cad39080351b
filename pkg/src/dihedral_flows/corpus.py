"""Built-in example graphs, embeddings and flows.

Every entry re-checks its face count, genus and bundled flows when built.
``corpus(check_counts=True)`` also recounts the recorded flow totals.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from functools import lru_cache

from .algebra import DihedralElement, GroupContext, parse_context
from .embedded import (EmbeddedGraph, Multigraph, enumerate_rotation_systems,
                       from_coordinates, from_edge_rotations, y_delta)
from .errors import DflowError, StructureViolation
from .flows import FlowAssignment, count_flows, verify


@dataclass(frozen=True)
class CorpusEntry:
    name: str
    graph: EmbeddedGraph
    faces: int
    genus: int
    flows: dict[str, FlowAssignment] = field(default_factory=dict)
    counts: dict[str, int] = field(default_factory=dict)   # ctx spec -> nowhere-identity count
    variants: tuple[EmbeddedGraph, ...] = ()               # addressable as name#k, 1-based
    description: str = ""

    def check(self, counts: bool = False) -> None:
        for g in self.variants or (self.graph,):
            if g.num_faces != self.faces or g.genus != self.genus:
                raise StructureViolation(
                    f"{self.name}: {g.num_faces} faces / genus {g.genus}, "
                    f"expected {self.faces} / {self.genus}")
            if counts:
                for spec, want in self.counts.items():
                    got = count_flows(g, parse_context(spec))
                    if got != want:
                        raise StructureViolation(f"{self.name}: {spec} count {got}, expected {want}")
        for label, f in self.flows.items():
            report = verify(self.graph, f)
            if not report.valid:
                raise StructureViolation(f"{self.name}: flow {label} does not verify ({report})")


def _flow(ctx: GroupContext, pairs) -> FlowAssignment:
    return FlowAssignment(ctx, tuple(DihedralElement(*p) for p in pairs))


def _fig1() -> CorpusEntry:
    # centre 0 with spokes to 1, 3, 2; each outer vertex carries two
    # interleaved loops
    mg = Multigraph(4, [(1, 0), (3, 0), (2, 0), (1, 1), (1, 1), (3, 3), (3, 3), (2, 2), (2, 2)], "fig1")
    g = from_edge_rotations(mg, [[0, 1, 2], [0, 3, 4, 3, 4], [2, 7, 8, 7, 8], [1, 5, 6, 5, 6]])
    f = _flow(GroupContext.mod(3), [(1, 2)] * 3 + [(-1, 2), (-1, 1)] * 3)
    return CorpusEntry("fig1", g, 1, 3, {"counterexample": f},
                       {"Dlt:3": 0, "Dlt:4": 0},
                       description="three spokes to interleaved double loops, 3-torus")


def _theta() -> CorpusEntry:
    # all three edges run v1 -> v2, rotation (e1 e2 e3) at both ends
    g = EmbeddedGraph(((1, 3, 5), (0, 2, 4)), "theta")
    flows = {}
    for n in range(2, 7):
        if n % 2 == 0:
            pairs = [(1, n // 2), (-1, n // 2), (-1, 0)]
        else:
            pairs = [(1, n - 2), (1, 1), (1, 1)]
        flows[f"n{n}"] = _flow(GroupContext.mod(n), pairs)
    return CorpusEntry("theta", g, 1, 1, flows, {"Dlt:2": 0},
                       description="two vertices, three parallel edges, torus")


FIG4_GRAPH = Multigraph(6, ((0, 1), (0, 1), (1, 2), (2, 3), (3, 4), (4, 5), (0, 2), (4, 5), (3, 5)), "fig4")


def fig4_systems() -> tuple[EmbeddedGraph, ...]:
    return tuple(g.renamed(f"fig4_{k}") for k, g in
                 enumerate((g for g in enumerate_rotation_systems(FIG4_GRAPH) if g.num_faces == 1), 1))


def _fig4() -> CorpusEntry:
    systems = fig4_systems()
    return CorpusEntry("fig4", systems[0].renamed("fig4"), 1, 2, {},
                       {"D2n:4": 576, "Dlt:4": 512}, systems,
                       description="6-vertex cubic graph, its one-face rotation systems")


PETERSEN = Multigraph(10, ((0, 5), (1, 6), (2, 7), (3, 8), (4, 9),
                           (0, 2), (1, 3), (2, 4), (3, 0), (4, 1),
                           (5, 6), (6, 7), (7, 8), (8, 9), (9, 5)), "petersen")
# inner pentagram 0..4 on radius 2.5, outer pentagon 5..9 on radius 5
PETERSEN_COORDS = tuple((r * math.cos(math.radians(90 + 72 * k)), r * math.sin(math.radians(90 + 72 * k)))
                        for r in (2.5, 5.0) for k in range(5))
FIG5_VALUES = ([(1, 1)] * 4 + [(1, -2)]
               + [(-1, -1), (-1, 1), (-1, 0), (-1, 0), (-1, 2)]
               + [(-1, 0), (-1, 1), (-1, 0), (-1, -1), (-1, 1)])


def _petersen(name: str, clockwise, faces: int, genus: int, flows=None) -> CorpusEntry:
    g = from_coordinates(PETERSEN, PETERSEN_COORDS, clockwise, name)
    return CorpusEntry(name, g, faces, genus, flows or {})


def _petersen3t() -> CorpusEntry:
    cw = tuple(v for v in range(10) if v not in (2, 6))
    return _petersen("petersen3t", cw, 1, 3, {"fig5": _flow(GroupContext.bounded(3), FIG5_VALUES)})


def _tietze() -> CorpusEntry:
    base = from_coordinates(PETERSEN, PETERSEN_COORDS, (), "petersen2t")
    return CorpusEntry("tietze", y_delta(base, 0).renamed("tietze"), 4, 2,
                       description="petersen2t with vertex 0 replaced by a triangle")


def _k4planar() -> CorpusEntry:
    mg = Multigraph(4, ((0, 1), (0, 2), (0, 3), (1, 2), (2, 3), (3, 1)), "k4planar")
    coords = ((0.0, 0.0), (0.0, 1.0), (-0.87, -0.5), (0.87, -0.5))
    return CorpusEntry("k4planar", from_coordinates(mg, coords, (), "k4planar"), 4, 0)


_BUILDERS = (
    _fig1, _theta, _fig4,
    lambda: _petersen("petersen2t", (), 3, 2),
    lambda: _petersen("petersen1t", (5, 7), 5, 1),
    _petersen3t, _tietze, _k4planar,
)


@lru_cache(maxsize=None)
def _entries() -> tuple[CorpusEntry, ...]:
    out = []
    for build in _BUILDERS:
        entry = build()
        entry.check()
        out.append(entry)
    return tuple(out)


def corpus(check_counts: bool = False) -> list[CorpusEntry]:
    entries = list(_entries())
    if check_counts:
        for entry in entries:
            entry.check(counts=True)
    return entries


def get(name: str) -> CorpusEntry:
    """Look up ``name`` or ``name#k`` (the k-th variant, 1-based)."""
    base, _, k = name.partition("#")
    for entry in _entries():
        if entry.name == base:
            break
    else:
        raise DflowError(f"no corpus entry {base!r}")
    if not k:
        return entry
    if not k.isdigit() or not entry.variants or not 1 <= int(k) <= len(entry.variants):
        raise DflowError(f"{base} has no variant {k!r}")
    g = entry.variants[int(k) - 1]
    return CorpusEntry(g.name, g, entry.faces, entry.genus, {}, entry.counts, (), entry.description)


def get_graph(name: str) -> EmbeddedGraph:
    return get(name).graph
