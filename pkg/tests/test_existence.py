import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from dihedral_flows.algebra import GroupContext
from dihedral_flows.embedded import (EmbeddedGraph, Multigraph, bridges, delete_edge,
                                     from_edge_rotations)
from dihedral_flows.errors import ComplexityGuard
from dihedral_flows.existence import (ExistenceVerdict, devos_verdict, find_odd_bridge_set,
                                      obstrd6_check, odd_bridge_sets, plane_sided_bridges)
from dihedral_flows.flows import count_flows

import oracles


def spokes(k, interleaved=True):
    """A centre joined to ``k`` vertices, each carrying two loops."""
    edges = [(i + 1, 0) for i in range(k)]
    orders = [list(range(k))]
    for i in range(k):
        a = len(edges)
        edges += [(i + 1, i + 1), (i + 1, i + 1)]
        orders.append([i, a, a + 1, a, a + 1] if interleaved else [i, a, a, a + 1, a + 1])
    return from_edge_rotations(Multigraph(k + 1, edges), orders)


def component_genera(rots, dropped):
    """Genus of each component after deleting the edges in ``dropped``,
    computed from relabelled rotation tuples."""
    rots = [[d for d in r if d >> 1 not in dropped] for r in rots]
    where = {d: v for v, r in enumerate(rots) for d in r}
    seen, out = set(), []
    for s in range(len(rots)):
        if s in seen:
            continue
        comp, stack = {s}, [s]
        while stack:
            v = stack.pop()
            for d in rots[v]:
                w = where[d ^ 1]
                if w not in comp:
                    comp.add(w)
                    stack.append(w)
        seen |= comp
        edges = sorted({d >> 1 for v in comp for d in rots[v]})
        new = {e: i for i, e in enumerate(edges)}
        sub = [tuple(2 * new[d >> 1] + (d & 1) for d in rots[v]) for v in sorted(comp)]
        out.append((comp, oracles.euler_genus(sub) if edges else 0))
    return out


def brute_plane_sided(rots):
    return {e for e in oracles.brute_bridges(rots)
            if any(gen == 0 for _, gen in component_genera(rots, {e}))}


@given(oracles.embedded_rotations(max_vertices=5, max_edges=7))
def test_plane_sided_bridges_match_oracle(rots):
    assert plane_sided_bridges(EmbeddedGraph(rots)) == brute_plane_sided(rots)


@settings(max_examples=40)
@given(oracles.embedded_rotations(max_vertices=4, max_edges=4), st.sampled_from([3, 5]))
def test_verdict_matches_brute_force(rots, n):
    g = EmbeddedGraph(rots)
    v = devos_verdict(g, n)
    assert v.exists == (oracles.brute_count(rots, "D2n", n) > 0)


@settings(max_examples=40)
@given(oracles.embedded_rotations(max_vertices=4, max_edges=4))
def test_d8_verdict_matches_brute_force(rots):
    g = EmbeddedGraph(rots)
    v = devos_verdict(g, 4)
    assert v.exists == (oracles.brute_count(rots, "D2n", 4) > 0)
    if not bridges(g):
        assert v.reason == "Bridgeless"


def test_verdict_reasons(entries):
    fig1 = entries["fig1"].graph
    assert devos_verdict(fig1, 3) == ExistenceVerdict(True, "NoPlaneSidedBridge")
    v = devos_verdict(fig1, 4)
    assert v.exists is False and v.reason == "SearchResult" and v.detail == (0,)
    assert str(v) == "exists=no reason=SearchResult(0)"
    assert devos_verdict(fig1, 4, search=False).exists is None
    assert devos_verdict(entries["petersen2t"].graph, 4).reason == "Bridgeless"
    v = devos_verdict(entries["fig4"].graph, 4)        # one bridge, not plane-sided
    assert v.exists and v.reason == "SearchResult" and v.detail == (576,)
    assert devos_verdict(entries["petersen2t"].graph, 2).reason == "SearchResult"


def test_verdict_budget(entries):
    v = devos_verdict(entries["tietze"].graph, 2, budget=10)
    assert v == ExistenceVerdict(None, "SearchBudgetExceeded")


def test_uninterleaved_spoke_is_plane_sided():
    g = spokes(3, interleaved=False)
    psb = plane_sided_bridges(g)
    assert psb == {0, 1, 2}
    v = devos_verdict(g, 3)
    assert v.exists is False and v.reason == "PlaneSidedBridge" and v.detail == (0,)
    assert count_flows(g, GroupContext.mod(3)) == 0
    assert not obstrd6_check(g)


def test_spokes_have_odd_bridge_set():
    g = spokes(3)
    assert (g.num_faces, g.genus) == (1, 3)
    assert plane_sided_bridges(g) == set()
    assert find_odd_bridge_set(g) == (0, 1, 2)
    # a single spoke is not plane-sided once the others stay
    assert list(odd_bridge_sets(g)) == [(0, 1, 2)]
    assert obstrd6_check(g)
    assert count_flows(g, GroupContext.mod(3)) == 1458
    assert count_flows(g, GroupContext.bounded(3)) == 0
    assert count_flows(g, GroupContext.bounded(4)) == 0


def test_odd_bridge_set_definition():
    g = spokes(3)
    for subset in odd_bridge_sets(g):
        for e in subset:
            rest = set(subset) - {e}
            comps = component_genera(g.rotations, rest)
            # e is a bridge of g minus the rest and one side is planar
            ends = g.endpoints(e)
            sides = component_genera(g.rotations, set(subset))
            touching = [gen for comp, gen in sides if ends[0] in comp or ends[1] in comp]
            assert len(comps) == len(subset)
            assert 0 in touching


def test_larger_spokes_without_search():
    g = spokes(5)
    assert find_odd_bridge_set(g) == (0, 1, 2, 3, 4)
    assert obstrd6_check(g, confirm=False)
    assert obstrd6_check(g, budget=10**4)     # searches skipped past the budget


def test_bridge_subset_guard():
    g = spokes(3)
    with pytest.raises(ComplexityGuard):
        list(odd_bridge_sets(g, limit=4))


def test_fig1_obstrd6(entries):
    e = entries["fig1"]
    assert obstrd6_check(e.graph)
    assert e.counts["Dlt:3"] == 0 and e.counts["Dlt:4"] == 0


def test_bridgeless_corpus_has_no_obstruction(entries):
    for name in ("theta", "petersen2t", "k4planar", "tietze"):
        g = entries[name].graph
        assert not bridges(g) and not obstrd6_check(g, confirm=False)
    # the fig4 bridge joins two genus-1 sides, so it is no odd bridge set
    g = entries["fig4"].graph
    assert bridges(g) == {3} and plane_sided_bridges(g) == set()
    assert [c.genus for c in delete_edge(g, 3)] == [1, 1]
    assert find_odd_bridge_set(g) is None
