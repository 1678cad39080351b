"""Acceptance criteria 1-8, each at its stated tolerance and time limit.

Every test carries a ``criterion`` mark; the summary hook in conftest
prints one PASS/FAIL line per criterion at the end of the run.
"""

import random
import time

import pytest

from dihedral_flows.algebra import GroupContext, in_commutator_subgroup
from dihedral_flows.coloring import coloring_to_flow, find_3_edge_coloring, flow_to_coloring, is_proper
from dihedral_flows.corpus import FIG4_GRAPH, corpus
from dihedral_flows.embedded import enumerate_rotation_systems, is_contractible, y_delta
from dihedral_flows.errors import ReflectionInInterior
from dihedral_flows.existence import devos_verdict, obstrd6_check
from dihedral_flows.flows import (count_flows, cutset_product, find_flow, iter_flows,
                                  reflection_cycles, verify)
from dihedral_flows.transforms import (extend_over_triangle, multiply_cycle, removal_flow,
                                       shift_reflection_cycle)

D = GroupContext.mod
B = GroupContext.bounded


def report(k, ok, detail):
    print(f"criterion {k}: {'PASS' if ok else 'FAIL'}  {detail}")
    assert ok, detail


# ---------------------------------------------------------------- 1

def one_face_systems():
    systems = list(enumerate_rotation_systems(FIG4_GRAPH))
    return systems, [g for g in systems if g.num_faces == 1]


@pytest.mark.criterion(1, "fig4 graph: exactly 10 one-face systems, 576 / 512 on each, < 10 s")
def test_c1_one_face_system_count():
    systems, one = one_face_systems()
    # the enumeration gives 16 (see the decisions ledger); the stated 10 is checked as written
    report(1, len(systems) == 64 and len(one) == 10,
           f"{len(systems)} candidates, {len(one)} one-face systems (expected 10)")


@pytest.mark.criterion(1, "fig4 graph: exactly 10 one-face systems, 576 / 512 on each, < 10 s")
def test_c1_counts_on_every_one_face_system():
    t = time.perf_counter()
    _, one = one_face_systems()
    got = {(count_flows(g, D(4)), count_flows(g, B(4))) for g in one}
    dt = time.perf_counter() - t
    report(1, got == {(576, 512)} and dt < 10,
           f"counts {sorted(got)} on {len(one)} systems in {dt:.2f} s")


# ---------------------------------------------------------------- 2

@pytest.mark.criterion(2, "fig1 counterexample flow, < 5 s")
def test_c2_fig1(entries):
    t = time.perf_counter()
    e = entries["fig1"]
    f = e.flows["counterexample"]
    ok = (f.ctx == D(3) and verify(e.graph, f).valid
          and count_flows(e.graph, B(3)) == 0 and count_flows(e.graph, B(4)) == 0
          and obstrd6_check(e.graph) and e.graph.genus == 3)
    dt = time.perf_counter() - t
    report(2, ok and dt < 5, f"genus {e.graph.genus}, {dt:.2f} s")


# ---------------------------------------------------------------- 3

@pytest.mark.criterion(3, "theta graph on the torus, < 5 s")
def test_c3_theta(entries):
    t = time.perf_counter()
    e = entries["theta"]
    g = e.graph
    ok = count_flows(g, B(2)) == 0
    for n in range(2, 7):
        f = e.flows[f"n{n}"]
        ok &= f.ctx == D(n) and verify(g, f).valid
    seen = 0
    for n in (3, 5):
        for f in iter_flows(g, B(n)):
            seen += 1
            ok &= f.is_rotation_only()
    dt = time.perf_counter() - t
    report(3, ok and seen > 0 and dt < 5, f"{seen} bounded flows for n in (3, 5), {dt:.2f} s")


# ---------------------------------------------------------------- 4

@pytest.mark.criterion(4, "Petersen embeddings, bundled fig5 flow, removal and Y-Delta, < 10 s")
def test_c4_petersen(entries):
    t = time.perf_counter()
    surfaces = [(entries[n].graph.num_faces, entries[n].graph.genus)
                for n in ("petersen2t", "petersen1t", "petersen3t")]
    ok = surfaces == [(3, 2), (5, 1), (1, 3)]
    fig5 = entries["petersen3t"].flows["fig5"]
    ok &= fig5.ctx == B(3) and verify(entries["petersen3t"].graph, fig5).valid
    made = 0
    for name, edges in (("petersen2t", range(5, 15)), ("petersen1t", range(15))):
        g = entries[name].graph
        tietze = y_delta(g, 0)
        for e in edges:
            f = removal_flow(g, e, 4)
            ok &= f.ctx == B(4) and verify(g, f).valid
            ok &= verify(tietze, extend_over_triangle(g, f, 0)).valid
            made += 1
    ok &= y_delta(entries["petersen2t"].graph, 0) == entries["tietze"].graph
    dt = time.perf_counter() - t
    report(4, ok and dt < 10, f"surfaces {surfaces}, {made} removal flows, {dt:.2f} s")


# ---------------------------------------------------------------- 5

@pytest.mark.criterion(5, "3-edge colorings vs bounded 2-flows on cubic graphs <= 10 vertices, < 60 s")
def test_c5_equivalence(entries):
    t = time.perf_counter()
    ok, lines = True, []
    for name in ("theta", "k4planar", "fig4", "petersen2t"):
        mg = entries[name].graph.underlying()
        c = find_3_edge_coloring(mg)
        with_flow = 0
        for g in enumerate_rotation_systems(mg):
            for f in iter_flows(g, B(2)):
                ok &= is_proper(mg, flow_to_coloring(g, f))
                with_flow += 1
        if c is not None:
            emb, f = coloring_to_flow(mg, c)
            ok &= verify(emb, f).valid
        ok &= (c is not None) == (with_flow > 0)
        lines.append(f"{name}:{'colorable' if c else 'snark'}/{with_flow}")
    dt = time.perf_counter() - t
    report(5, ok and dt < 60, f"{' '.join(lines)}, {dt:.2f} s")


# ---------------------------------------------------------------- 6

def sample_flows(total=1000):
    pools = []
    for e in corpus():
        for n in (3, 4, 5):
            if n == 5 and e.graph.num_edges > 9:
                continue
            pool = [f for f in iter_flows(e.graph, D(n)) if not f.is_rotation_only()]
            if pool:
                pools.append((e.graph, pool))
    q = 1
    while sum(min(q, len(p)) for _, p in pools) < total:
        q += 1
    out = []
    for g, pool in pools:
        step = max(1, len(pool) // q)
        out += [(g, f) for f in pool[::step][:q]]
    return out[:total]


@pytest.mark.criterion(6, "transformation closure on 1000 sampled flows, < 60 s")
def test_c6_transformations(entries):
    t = time.perf_counter()
    rng = random.Random(2024)
    sample = sample_flows()
    ok = len(sample) == 1000
    shifted = multiplied = 0
    for g, f in sample:
        n = f.ctx.n
        for c in reflection_cycles(g, f).cycles:
            out = shift_reflection_cycle(f, c, rng.randrange(n))
            ok &= verify(g, out).valid
            shifted += 1
            if not (c.simple and is_contractible(g, c)):
                continue
            shifts = {f.values[e].shift for e in c.edges}
            free = sorted(set(range(n)) - shifts)
            if not free:
                continue
            nz = shift_reflection_cycle(f, c, (n - free[0]) % n)    # no edge valued s
            try:
                out = multiply_cycle(g, nz, c)
            except ReflectionInInterior:
                continue
            ok &= verify(g, out).valid
            multiplied += 1
    cuts = 0
    for e in corpus():
        g = e.graph
        f = find_flow(g, D(3))
        for _ in range(100):
            X = [v for v in range(g.num_vertices) if rng.random() < 0.5]
            ok &= in_commutator_subgroup(cutset_product(g, f, X), f.ctx)
            cuts += 1
    dt = time.perf_counter() - t
    report(6, ok and multiplied > 0 and dt < 60,
           f"{len(sample)} flows, {shifted} shifts, {multiplied} multiplications, {cuts} cuts, {dt:.2f} s")


# ---------------------------------------------------------------- 7

def corpus_embeddings():
    for e in corpus():
        for g in e.variants or (e.graph,):
            yield g


@pytest.mark.criterion(7, "existence verdicts agree with exhaustive search")
def test_c7_verdicts():
    checked, bad = 0, []
    for g in corpus_embeddings():
        for n in (3, 5):
            v = devos_verdict(g, n, search=False)
            if v.exists != (find_flow(g, D(n)) is not None):
                bad.append((g.name, n))
            checked += 1
        v = devos_verdict(g, 4, search=False)
        if v.reason == "Bridgeless":
            if not find_flow(g, D(4)):
                bad.append((g.name, 4))
            checked += 1
    report(7, not bad and checked > 0, f"{checked} verdicts, disagreements {bad}")


# ---------------------------------------------------------------- 8

@pytest.mark.criterion(8, "excluded (cubic census); substituted by Petersen and Tietze")
def test_c8_substitute(entries):
    # the two non-3-edge-colorable bridgeless cubics on at most 16 vertices
    ok = True
    for name in ("petersen2t", "tietze"):
        g = entries[name].graph
        ok &= find_3_edge_coloring(g) is None
        ok &= find_flow(g, B(4)) is not None
    report(8, ok, "census excluded; Petersen and Tietze are not 3-edge colorable and carry bounded 4-flows")
