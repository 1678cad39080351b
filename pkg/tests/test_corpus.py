import networkx as nx
import pytest

from dihedral_flows.corpus import (FIG4_GRAPH, PETERSEN, corpus, fig4_systems, get, get_graph)
from dihedral_flows.errors import DflowError
from dihedral_flows.formats import emit_flow, emit_graph, parse_flow, parse_graph

import oracles

NAMES = ["fig1", "theta", "fig4", "petersen2t", "petersen1t", "petersen3t", "tietze", "k4planar"]


def nx_graph(g):
    h = nx.MultiGraph()
    h.add_nodes_from(range(g.num_vertices))
    h.add_edges_from(g.underlying().edges)
    return h


def test_names_and_order():
    assert [e.name for e in corpus()] == NAMES


@pytest.mark.parametrize("name", NAMES)
def test_stated_surface_matches_oracle(name):
    e = get(name)
    for g in e.variants or (e.graph,):
        assert oracles.face_count(g.rotations) == e.faces
        assert oracles.euler_genus(g.rotations) == e.genus


@pytest.mark.parametrize("name", NAMES)
def test_bundled_flows_satisfy_kirchhoff(name):
    e = get(name)
    for f in e.flows.values():
        n = f.normalized()
        kind = str(n.ctx).split(":")[0]
        assert oracles.is_flow(e.graph.rotations, [tuple(x) for x in n.values], kind, n.ctx.n)
        assert (1, 0) not in [tuple(x) for x in n.values]


def test_underlying_graphs():
    assert nx.is_isomorphic(nx_graph(get_graph("petersen2t")), nx.petersen_graph())
    for name in ("petersen1t", "petersen3t"):
        assert get_graph(name).underlying().edges == PETERSEN.edges
    assert nx.is_isomorphic(nx_graph(get_graph("k4planar")), nx.complete_graph(4))
    t = nx.Graph(nx_graph(get_graph("tietze")))
    assert t.number_of_nodes() == 12 and all(d == 3 for _, d in t.degree())
    assert sum(nx.triangles(t).values()) == 3          # exactly one triangle


def test_fig4_variants():
    systems = fig4_systems()
    assert len(systems) == 16 == len(set(systems))
    assert all(s.underlying().edges == FIG4_GRAPH.edges for s in systems)
    assert get("fig4#3").graph == systems[2]
    assert get("fig4#16").counts == {"D2n:4": 576, "Dlt:4": 512}
    for bad in ("fig4#0", "fig4#17", "fig4#x", "theta#1", "nope"):
        with pytest.raises(DflowError):
            get(bad)


def test_counts_hold():
    corpus(check_counts=True)


@pytest.mark.parametrize("name", NAMES)
def test_emit_and_reparse(name):
    e = get(name)
    text = emit_graph(e.graph)
    assert parse_graph(text) == e.graph
    for label, f in e.flows.items():
        assert parse_flow(emit_flow(f, label), e.graph.num_edges)[1] == f.normalized()
