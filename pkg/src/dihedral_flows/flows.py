"""Flows on embedded graphs: representation, verification and exhaustive
counting.

A flow stores one value per edge together with the dart it treats as the
edge's head. ``flipped[e]`` means the head is dart ``2e+1``, i.e. the edge is
read against the graph's reference orientation.
"""

from __future__ import annotations

import os
from collections import deque
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass, field
from typing import Iterable, Iterator, Sequence

import numpy as np

from . import _kernels as K
from .algebra import (IDENTITY, DihedralElement, GroupContext, Kind, in_commutator_subgroup,
                      inverse)
from .embedded import CycleRef, EmbeddedGraph, make_cycle
from .errors import ComplexityGuard, StructureViolation

DEFAULT_BUDGET = 10**9
_PARALLEL_MIN = 1 << 17


def budget_from_env() -> int:
    raw = os.environ.get("DFLOW_BUDGET")
    return int(float(raw)) if raw else DEFAULT_BUDGET


@dataclass(frozen=True)
class FlowAssignment:
    ctx: GroupContext
    values: tuple[DihedralElement, ...]
    flipped: tuple[bool, ...] = ()

    def __post_init__(self):
        vals = tuple(self.ctx.normalize(DihedralElement(int(s), int(a))) for s, a in self.values)
        object.__setattr__(self, "values", vals)
        flips = tuple(bool(x) for x in self.flipped) or (False,) * len(vals)
        if len(flips) != len(vals):
            raise ValueError("orientation must cover every edge")
        object.__setattr__(self, "flipped", flips)

    @classmethod
    def identity(cls, ctx: GroupContext, num_edges: int) -> "FlowAssignment":
        return cls(ctx, (IDENTITY,) * num_edges)

    def __len__(self) -> int:
        return len(self.values)

    def head_dart(self, e: int) -> int:
        return 2 * e + int(self.flipped[e])

    def reference_value(self, e: int) -> DihedralElement:
        """Value read along the graph's reference orientation."""
        x = self.values[e]
        return inverse(x, self.ctx) if self.flipped[e] else x

    def normalized(self) -> "FlowAssignment":
        return FlowAssignment(self.ctx, tuple(self.reference_value(e) for e in range(len(self))))

    def with_values(self, updates: dict[int, DihedralElement],
                    flips: dict[int, bool] | None = None) -> "FlowAssignment":
        vals = list(self.values)
        fl = list(self.flipped)
        for e, x in updates.items():
            vals[e] = x
        for e, b in (flips or {}).items():
            fl[e] = b
        return FlowAssignment(self.ctx, tuple(vals), tuple(fl))

    def reflection_edges(self) -> list[int]:
        return [e for e, x in enumerate(self.values) if x.sign < 0]

    def is_rotation_only(self) -> bool:
        return all(x.sign > 0 for x in self.values)


def _exact(ctx: GroupContext, sign: int, shift: int) -> DihedralElement:
    if ctx.kind in (Kind.MOD, Kind.CYCLIC):
        return DihedralElement(sign, shift % ctx.n)
    return DihedralElement(sign, shift)


def kirchhoff_product(g: EmbeddedGraph, f: FlowAssignment, v: int) -> DihedralElement:
    """Product around ``v`` from its smallest dart, inverting the values of
    edges that leave ``v``. Computed exactly; bounded contexts do not range
    check the result."""
    sign, shift = 1, 0
    for d in g.rotations[v]:
        s, a = f.values[d >> 1]
        if d != f.head_dart(d >> 1):
            a = -s * a
        sign, shift = sign * s, shift + sign * a
    return _exact(f.ctx, sign, shift)


@dataclass(frozen=True)
class VerifyReport:
    bad_vertices: tuple[int, ...]
    identity_edges: tuple[int, ...]
    nowhere_identity_required: bool

    @property
    def kirchhoff_ok(self) -> bool:
        return not self.bad_vertices

    @property
    def nowhere_identity(self) -> bool:
        return not self.identity_edges

    @property
    def valid(self) -> bool:
        if self.nowhere_identity_required:
            return self.kirchhoff_ok and self.nowhere_identity
        return self.kirchhoff_ok

    def __bool__(self) -> bool:
        return self.valid


def verify(g: EmbeddedGraph, f: FlowAssignment, require_nowhere_identity: bool = True) -> VerifyReport:
    if len(f) != g.num_edges:
        return VerifyReport(tuple(range(g.num_vertices)), (), require_nowhere_identity)
    bad = tuple(v for v in range(g.num_vertices) if kirchhoff_product(g, f, v) != IDENTITY)
    ident = tuple(e for e, x in enumerate(f.values) if x == IDENTITY)
    return VerifyReport(bad, ident, require_nowhere_identity)


# ------------------------------------------------------------------ search

_KIND_CODE = {Kind.MOD: K.KIND_MOD, Kind.BOUNDED: K.KIND_BOUNDED, Kind.CYCLIC: K.KIND_CYCLIC}


def spanning_tree(g: EmbeddedGraph) -> tuple[list[int], list[int]]:
    """BFS from vertex 0 over edges in id order, loops excluded.

    Returns the visiting order and the parent edge of every vertex (-1 at
    the root).
    """
    nv = g.num_vertices
    inc = [[] for _ in range(nv)]
    for e in range(g.num_edges):
        t, h = g.endpoints(e)
        if t != h:
            inc[t].append(e)
            inc[h].append(e)
    parent = [-1] * nv
    seen = [False] * nv
    seen[0] = True
    order = [0]
    queue = deque([0])
    while queue:
        v = queue.popleft()
        for e in inc[v]:
            t, h = g.endpoints(e)
            w = h if t == v else t
            if not seen[w]:
                seen[w] = True
                parent[w] = e
                order.append(w)
                queue.append(w)
    return order, parent


def _problem(g: EmbeddedGraph, ctx: GroupContext,
             allowed: Sequence[Sequence[DihedralElement]]) -> K.ScanProblem:
    if ctx.kind is Kind.INFINITE:
        raise ValueError("counting needs a finite context")
    kind = _KIND_CODE[ctx.kind]
    n = ctx.n
    ne = g.num_edges
    order, parent = spanning_tree(g)
    tree = {e for e in parent if e >= 0}
    cot = [e for e in range(ne) if e not in tree]

    vstart = np.zeros(g.num_vertices + 1, np.int64)
    vdarts = []
    for v, rot in enumerate(g.rotations):
        vdarts.extend(rot)
        vstart[v + 1] = len(vdarts)
    vdarts = np.asarray(vdarts, np.int64)

    # each step solves the parent edge of v; record the last co-tree digit
    # the solved value depends on and run steps in order of that digit
    cpos = {e: j for j, e in enumerate(cot)}
    dep = {}
    steps = []
    for i, v in enumerate(reversed(order[1:])):
        d = max((cpos[x >> 1] for x in g.rotations[v] if (x >> 1) in cpos), default=-1)
        for x in g.rotations[v]:
            w = int(g.vertex_of[x ^ 1])
            if parent[w] == x >> 1 and w != v:
                d = max(d, dep[w])
        dep[v] = d
        rot = g.rotations[v]
        pos = next(k for k, x in enumerate(rot) if x >> 1 == parent[v])
        steps.append((d, i, v, parent[v], pos))
    steps.sort()
    plan_dep = [s[0] for s in steps]
    plan_v = [s[2] for s in steps]
    plan_e = [s[3] for s in steps]
    plan_pos = [s[4] for s in steps]

    table = np.zeros((ne, K.table_size(kind, n)), bool)
    for e in range(ne):
        for x in allowed[e]:
            table[e, K.table_index(kind, n, x.sign, x.shift)] = True

    m = max([len(allowed[e]) for e in cot] + [1])
    cs = np.ones((len(cot), m), np.int64)
    ca = np.zeros((len(cot), m), np.int64)
    nc = np.zeros(len(cot), np.int64)
    for j, e in enumerate(cot):
        for i, x in enumerate(allowed[e]):
            cs[j, i], ca[j, i] = x
        nc[j] = len(allowed[e])

    return K.ScanProblem(kind, n, vstart, vdarts, np.asarray(cot, np.int64), cs, ca, nc,
                         np.asarray(plan_v, np.int64), np.asarray(plan_e, np.int64),
                         np.asarray(plan_pos, np.int64), np.asarray(plan_dep, np.int64),
                         table, 0, ne)


def _guard(pb: K.ScanProblem, budget: int | None) -> int:
    budget = budget_from_env() if budget is None else budget
    total = pb.total
    if total > budget:
        raise ComplexityGuard(f"{total} co-tree assignments exceed the budget {budget}")
    return total


def _workers(workers: int | None) -> int:
    if workers is None:
        workers = int(os.environ.get("DFLOW_WORKERS", "0")) or (os.cpu_count() or 1)
    return max(1, min(workers, 32))


def _uniform(g: EmbeddedGraph, ctx: GroupContext, nowhere_identity: bool):
    elems = ctx.elements(include_identity=not nowhere_identity)
    return [elems] * g.num_edges


def _count(pb: K.ScanProblem, total: int, workers: int | None, use_numba: bool | None) -> int:
    w = _workers(workers)
    if w == 1 or total < _PARALLEL_MIN:
        return K.scan(pb, 0, total, 0, use_numba)[0]
    step = -(-total // (4 * w))
    bounds = [(lo, min(total, lo + step)) for lo in range(0, total, step)]
    with ThreadPoolExecutor(w) as pool:
        parts = pool.map(lambda b: K.scan(pb, b[0], b[1], 0, use_numba)[0], bounds)
        return sum(parts)


def _as_flows(ctx: GroupContext, signs, shifts) -> list[FlowAssignment]:
    return [FlowAssignment(ctx, tuple(DihedralElement(int(s), int(a)) for s, a in zip(ss, aa)))
            for ss, aa in zip(signs, shifts)]


def count_flows(g: EmbeddedGraph, ctx: GroupContext, nowhere_identity: bool = True, *,
                budget: int | None = None, workers: int | None = None,
                use_numba: bool | None = None) -> int:
    """Number of flows for the reference orientation of ``g``."""
    pb = _problem(g, ctx, _uniform(g, ctx, nowhere_identity))
    total = _guard(pb, budget)
    return _count(pb, total, workers, use_numba)


def iter_flows(g: EmbeddedGraph, ctx: GroupContext, nowhere_identity: bool = True,
               limit: int | None = None, *, budget: int | None = None,
               use_numba: bool | None = None) -> Iterator[FlowAssignment]:
    """Flows in search order: co-tree edges ascending, the first varying
    slowest; rotations by shift, then reflections by shift."""
    pb = _problem(g, ctx, _uniform(g, ctx, nowhere_identity))
    total = _guard(pb, budget)
    yield from _collect(pb, ctx, total, limit, use_numba)


def _collect(pb, ctx, total, limit, use_numba):
    if limit is None:
        limit = _count(pb, total, None, use_numba)
    if limit <= 0:
        return []
    _, ss, aa = K.scan(pb, 0, total, limit, use_numba)
    return _as_flows(ctx, ss, aa)


def find_flow(g: EmbeddedGraph, ctx: GroupContext, nowhere_identity: bool = True, *,
              budget: int | None = None, use_numba: bool | None = None) -> FlowAssignment | None:
    pb = _problem(g, ctx, _uniform(g, ctx, nowhere_identity))
    total = _guard(pb, budget)
    _, ss, aa = K.scan(pb, 0, total, 1, use_numba)
    flows = _as_flows(ctx, ss, aa)
    return flows[0] if flows else None


def preimages(x: DihedralElement, n: int) -> list[DihedralElement]:
    """Non-identity elements of the bounded set projecting onto ``x``."""
    s, a = x[0], x[1] % n
    if a == 0:
        return [DihedralElement(-1, 0)] if s < 0 else []
    return [DihedralElement(s, a), DihedralElement(s, a - n)]


def lift(g: EmbeddedGraph, f: FlowAssignment, *, budget: int | None = None,
         use_numba: bool | None = None) -> FlowAssignment | None:
    """A nowhere-identity bounded flow projecting onto ``f``, or ``None``.

    The result uses the reference orientation of ``g``.
    """
    if f.ctx.kind is not Kind.MOD:
        raise ValueError("lift expects a flow in D2n")
    n = f.ctx.n
    ref = f.normalized()
    allowed = [preimages(x, n) for x in ref.values]
    if any(not a for a in allowed):
        return None
    ctx = GroupContext.bounded(n)
    pb = _problem(g, ctx, allowed)
    total = _guard(pb, budget)
    _, ss, aa = K.scan(pb, 0, total, 1, use_numba)
    flows = _as_flows(ctx, ss, aa)
    return flows[0] if flows else None


def cutset_product(g: EmbeddedGraph, f: FlowAssignment, X: Iterable[int]) -> DihedralElement:
    """Product over the edges of the cut ``δ(X)`` in increasing edge order,
    each taken as entering ``X``."""
    xs = set(X)
    sign, shift = 1, 0
    for e in range(g.num_edges):
        h = int(g.vertex_of[f.head_dart(e)])
        t = int(g.vertex_of[f.head_dart(e) ^ 1])
        if (h in xs) == (t in xs):
            continue
        s, a = f.values[e]
        if h not in xs:
            a = -s * a
        sign, shift = sign * s, shift + sign * a
    out = _exact(f.ctx, sign, shift)
    if not in_commutator_subgroup(out, f.ctx):
        raise StructureViolation(f"cut product {out} outside the commutator subgroup")
    return out


# -------------------------------------------------------- reflection cycles

@dataclass(frozen=True)
class ReflectionStructure:
    cycles: list[CycleRef]
    matchings: dict[int, frozenset[int]] = field(default_factory=dict)


def _euler_walk(g: EmbeddedGraph, edges: set[int]) -> CycleRef:
    vof = g.vertex_of
    unused = set(edges)
    at: dict[int, list[int]] = {}
    for e in sorted(edges):
        for d in (2 * e + 1, 2 * e):
            at.setdefault(int(vof[d]), []).append(d)
    start = int(vof[2 * min(edges) + 1])
    stack = [(start, None)]
    walk = []
    while stack:
        v, d_in = stack[-1]
        nxt = None
        while at[v]:
            d = at[v].pop(0)
            if (d >> 1) in unused:
                nxt = d
                break
        if nxt is None:
            stack.pop()
            if d_in is not None:
                walk.append(d_in)
        else:
            unused.discard(nxt >> 1)
            stack.append((int(vof[nxt ^ 1]), nxt))
    walk.reverse()
    return make_cycle(g, walk)


def reflection_cycles(g: EmbeddedGraph, f: FlowAssignment) -> ReflectionStructure:
    """Components of the reflection-valued edges, each as a closed walk, and
    the classes ``M_a`` of edges valued ``r^a s``.

    On a cubic graph the components must be simple cycles and each ``M_a``
    a matching; a violation means ``f`` is not a valid flow.
    """
    refl = set(f.reflection_edges())
    cubic = g.is_cubic()
    vof = g.vertex_of
    deg = {}
    for e in refl:
        for d in (2 * e, 2 * e + 1):
            deg[int(vof[d])] = deg.get(int(vof[d]), 0) + 1
    if any(k % 2 for k in deg.values()):
        raise StructureViolation("odd number of reflections at a vertex")
    if cubic and any(k != 2 for k in deg.values()):
        raise StructureViolation("reflection edges are not 2-regular")
    cycles = []
    left = set(refl)
    while left:
        comp = {min(left)}
        frontier = [min(left)]
        while frontier:
            e = frontier.pop()
            ends = {int(vof[2 * e]), int(vof[2 * e + 1])}
            for e2 in list(left - comp):
                if ends & {int(vof[2 * e2]), int(vof[2 * e2 + 1])}:
                    comp.add(e2)
                    frontier.append(e2)
        left -= comp
        c = _euler_walk(g, comp)
        if cubic and not c.simple:
            raise StructureViolation(f"reflection component {sorted(comp)} is not a cycle")
        cycles.append(c)
    cycles.sort(key=lambda c: min(c.edges))
    matchings: dict[int, set[int]] = {}
    for e in refl:
        matchings.setdefault(f.values[e].shift, set()).add(e)
    if cubic:
        for a, es in matchings.items():
            ends = [int(vof[d]) for e in es for d in (2 * e, 2 * e + 1)]
            if len(ends) != len(set(ends)):
                raise StructureViolation(f"M_{a} is not a matching")
    return ReflectionStructure(cycles, {a: frozenset(es) for a, es in sorted(matchings.items())})
