"""Flow transformations: twisting a reflection cycle, multiplying a
contractible cycle by a reflection, the reduction to rotation-only flows,
the edge-removal construction and the extension over a Y-Δ triangle."""

from __future__ import annotations

from typing import Iterable

from .algebra import DihedralElement, GroupContext, Kind, inverse, multiply
from .embedded import (CycleRef, EmbeddedGraph, delete_edge,
                       disk_sides, is_contractible, make_cycle, simple_cycles, simple_faces,
                       y_delta)
from .errors import (Blocked, InvalidFlow, InvalidGraph, NoFeasibleZ, NonContractible,
                     NotAReflectionCycle, ReflectionInInterior, StructureViolation)
from .flows import FlowAssignment, find_flow, lift, reflection_cycles, verify

REFLECTOR = DihedralElement(-1, 0)


def _edges(c: CycleRef | Iterable[int]) -> tuple[int, ...]:
    return c.edges if isinstance(c, CycleRef) else tuple(c)


def shift_reflection_cycle(f: FlowAssignment, c: CycleRef | Iterable[int], a: int) -> FlowAssignment:
    """Right-multiply every value on the reflection cycle by ``r^-a``."""
    if f.ctx.kind is not Kind.MOD:
        raise ValueError("cycle twisting is defined in D2n")
    twist = DihedralElement(1, -a)
    updates = {}
    for e in _edges(c):
        if f.values[e].sign > 0:
            raise NotAReflectionCycle(f"edge {e} carries the rotation {f.values[e]}")
        updates[e] = multiply(f.values[e], twist, f.ctx)
    return f.with_values(updates)


def _choose_disk(g: EmbeddedGraph, f: FlowAssignment, c: CycleRef):
    if not c.simple:
        raise InvalidGraph("cycle must be simple")
    sides = disk_sides(g, c)
    if not sides:
        raise NonContractible(f"cycle {list(c.edges)} does not bound a disk")
    for side in sides:
        if all(f.values[e].sign > 0 for e in side.edges):
            return side
    raise ReflectionInInterior(f"every disk of cycle {list(c.edges)} contains a reflection")


def multiply_cycle(g: EmbeddedGraph, f: FlowAssignment, c: CycleRef,
                   reflector: DihedralElement = REFLECTOR) -> FlowAssignment:
    """Multiply the values on a contractible cycle by a reflection.

    Cycle edges are read along the cycle, oriented so that the chosen disk
    lies on the side reached by turning from the incoming to the outgoing
    dart; edges strictly inside the disk are reversed.
    """
    if reflector[0] > 0:
        raise ValueError("reflector must be a reflection")
    side = _choose_disk(g, f, c)
    if "left" in side.sides:
        c = c.reversed()
    updates, flips = {}, {}
    for d in c.darts:
        e = d >> 1
        head = d ^ 1
        x = f.values[e] if f.head_dart(e) == head else inverse(f.values[e], f.ctx)
        updates[e] = multiply(x, reflector, f.ctx)
        flips[e] = bool(head & 1)
    for e in side.edges:
        flips[e] = not f.flipped[e]
    return f.with_values(updates, flips)


def _blocked_reason(g: EmbeddedGraph, c: CycleRef) -> str | None:
    if c.simple:
        return None if is_contractible(g, c) else "non-contractible"
    # split a closed walk at repeated vertices into simple loops
    vof = g.vertex_of
    stack, loops = [], []
    for d in c.darts:
        v = int(vof[d])
        starts = [i for i, x in enumerate(stack) if int(vof[x]) == v]
        if starts:
            i = starts[0]
            loops.append(stack[i:])
            stack = stack[:i]
        stack.append(d)
    if stack:
        loops.append(stack)
    for lp in loops:
        try:
            cyc = make_cycle(g, lp)
        except InvalidGraph:
            continue
        if cyc.simple and not is_contractible(g, cyc):
            return "non-contractible"
    return "not-simple"


def reduce_to_rotation_flow(g: EmbeddedGraph, f: FlowAssignment) -> FlowAssignment:
    """Remove all reflections by repeatedly multiplying an innermost
    non-zero contractible reflection cycle by ``s``.

    Raises :class:`Blocked` naming a cycle that prevents the reduction.
    """
    if f.ctx.kind is not Kind.MOD:
        raise ValueError("the reduction works on D2n flows")
    n = f.ctx.n
    while True:
        cycles = reflection_cycles(g, f).cycles
        if not cycles:
            return f
        for c in cycles:
            reason = _blocked_reason(g, c)
            if reason:
                raise Blocked(c.edges, reason)
        for c in cycles:
            shifts = {f.values[e].shift for e in c.edges}
            if 0 in shifts:
                missing = sorted(set(range(n)) - shifts)
                if not missing:
                    raise Blocked(c.edges, "contains-all-reflections")
                f = shift_reflection_cycle(f, c, (n - missing[0]) % n)
        best = None
        for c in cycles:
            try:
                side = _choose_disk(g, f, c)
            except ReflectionInInterior:
                continue
            key = (len(side.edges), min(c.edges))
            if best is None or key < best[0]:
                best = (key, c)
        if best is None:
            raise StructureViolation("no reflection cycle has a reflection-free disk")
        f = multiply_cycle(g, f, best[1])


def contractible_cycle_through(g: EmbeddedGraph, e: int, limit: int = 10**5) -> CycleRef | None:
    """A simple contractible cycle containing ``e``: simple facial walks
    first, then a bounded simple-cycle search."""
    for c in simple_faces(g):
        if e in c.edges:
            return c
    best = None
    for c in simple_cycles(g, limit):
        if e in c.edges and is_contractible(g, c):
            if best is None or len(c) < len(best):
                best = c
    return best


def removal_construction(g: EmbeddedGraph, e_removed: int, c: CycleRef,
                         h: FlowAssignment) -> FlowAssignment:
    """Nowhere-identity bounded ``n``-flow on ``g`` from a nowhere-zero
    ``Z_n`` flow ``h`` on ``g`` minus ``e_removed``.

    ``h`` is indexed by the edges of ``delete_edge(g, e_removed)[0]``. It is
    first lifted to integer values in ``(-n, n)``, extended by the identity
    on the removed edge, and the cycle ``c`` through that edge is then
    multiplied by ``(-1, 0)``.
    """
    if e_removed not in c.edges:
        raise InvalidGraph(f"edge {e_removed} is not on the cycle")
    comps = delete_edge(g, e_removed)
    if len(comps) != 1:
        raise InvalidGraph(f"edge {e_removed} is a bridge")
    minor = comps[0]
    if h.ctx.kind is not Kind.CYCLIC or len(h) != minor.num_edges or not verify(minor, h):
        raise InvalidFlow("h must be a nowhere-zero Z_n flow on the graph minus the edge")
    n = h.ctx.n
    as_dihedral = FlowAssignment(GroupContext.mod(n), h.values, h.flipped)
    lifted = lift(minor, as_dihedral)
    if lifted is None:
        raise InvalidFlow("h has no integer lift")  # every Z_n flow has one
    ctx = GroupContext.bounded(n)
    vals = [DihedralElement(1, 0)] * g.num_edges
    for i, e in enumerate(minor.parent_edges):
        vals[e] = lifted.values[i]
    f = FlowAssignment(ctx, tuple(vals))
    out = multiply_cycle(g, f, c, REFLECTOR)
    report = verify(g, out)
    if not report.valid:
        raise StructureViolation(f"removal construction failed: {report}")
    return out


def removal_flow(g: EmbeddedGraph, e_removed: int, n: int = 4) -> FlowAssignment:
    """Run the removal construction with a cycle and ``Z_n`` flow found by
    search."""
    c = contractible_cycle_through(g, e_removed)
    if c is None:
        raise NonContractible(f"no simple contractible cycle through edge {e_removed}")
    minor = delete_edge(g, e_removed)[0]
    h = find_flow(minor, GroupContext.cyclic(n))
    if h is None:
        raise InvalidFlow(f"the graph minus edge {e_removed} has no nowhere-zero {n}-flow")
    return removal_construction(g, e_removed, c, h)




def _z_candidates(n: int):
    yield 0
    for k in range(1, n):
        yield k
        yield -k


def extend_over_triangle(g: EmbeddedGraph, f: FlowAssignment, v: int,
                         g2: EmbeddedGraph | None = None) -> FlowAssignment:
    """Extend a nowhere-identity bounded flow over ``y_delta(g, v)``."""
    if f.ctx.kind is not Kind.BOUNDED:
        raise ValueError("extension over a triangle needs a bounded context")
    n = f.ctx.n
    if g2 is None:
        g2 = y_delta(g, v)
    elif g2 != y_delta(g, v):
        raise InvalidGraph("g2 is not y_delta(g, v)")
    rot = g.rotations[v]
    # phi[i]: value of the edge at corner i read as entering v
    phi = []
    for d in rot:
        x = f.values[d >> 1]
        phi.append(x if f.head_dart(d >> 1) == d else inverse(x, f.ctx))
    tau = [None] * 3    # tau[i] on the triangle edge from corner i to i+1
    rot_idx = [i for i in range(3) if phi[i].sign > 0]
    if len(rot_idx) == 3:
        a = [x.shift for x in phi]
        x2 = 0
        x0 = x2 - a[0]
        x1 = x0 - a[1]
        tau = [DihedralElement(-1, x0), DihedralElement(-1, x1), DihedralElement(-1, x2)]
    elif len(rot_idx) == 1:
        k = rot_idx[0]
        alpha = phi[(k + 1) % 3].shift
        beta = phi[(k + 2) % 3].shift
        for z in _z_candidates(n):
            if 1 <= abs(z - alpha) < n and 1 <= abs(z - beta) < n:
                break
        else:
            raise NoFeasibleZ(f"no z for reflections {alpha}, {beta}")
        tau[k] = DihedralElement(1, z - alpha)
        tau[(k + 1) % 3] = DihedralElement(-1, z)
        tau[(k + 2) % 3] = DihedralElement(1, z - beta)
    else:
        raise InvalidFlow(f"vertex {v} does not satisfy Kirchhoff's law")
    out = FlowAssignment(f.ctx, tuple(f.values) + tuple(tau), tuple(f.flipped) + (False,) * 3)
    report = verify(g2, out)
    if not report.valid:
        raise StructureViolation(f"triangle extension failed: {report}")
    return out
