# Copyright (c) apasp contributors.
# SPDX-License-Identifier: Apache-2.0

import os
from fractions import Fraction

import networkx as nx
import pytest

import apasp

EXAMPLE_EDGES = [
    (0, 1, 1), (0, 2, 1), (1, 3, 1), (2, 3, 1),
    (3, 4, 2), (1, 4, 3), (4, 5, 1), (2, 5, 4), (5, 0, "2.5"),
]


def nx_graph(a: apasp.Apasp) -> nx.DiGraph:
    g = nx.DiGraph()
    g.add_nodes_from(a.graph.live_vertices())
    for u, v, w in a.edges():
        g.add_edge(u, v, weight=w)
    return g


def check_against_networkx(a: apasp.Apasp) -> None:
    g = nx_graph(a)
    for x in g.nodes:
        dist = nx.single_source_dijkstra_path_length(g, x)
        for y in g.nodes:
            if y not in dist:
                assert a.distance(x, y) is None
                assert a.sigma(x, y) == 0
                continue
            assert a.distance(x, y) == dist[y]
            if x != y:
                paths = list(nx.all_shortest_paths(g, x, y, weight="weight"))
                assert a.sigma(x, y) == len(paths)
                assert sorted(a.paths(x, y)) == sorted(paths)
    bc = nx.betweenness_centrality(g, normalized=False, weight="weight")
    got = a.betweenness()
    for v in g.nodes:
        assert float(got[v]) == pytest.approx(bc[v])


def test_static_queries():
    a = apasp.Apasp(6, EXAMPLE_EDGES)
    assert a.distance(0, 5) == 5
    assert a.distance(5, 0) == Fraction(5, 2)
    assert a.sigma(0, 5) == 4
    assert a.betweenness()[4] == Fraction(37, 4)
    check_against_networkx(a)


def test_updates_track_networkx():
    a = apasp.Apasp(6, EXAMPLE_EDGES)
    a.reweight(3, out={4: 1}, in_={1: None})
    check_against_networkx(a)
    a.delete(2)
    check_against_networkx(a)
    assert a.distance(0, 3) is None
    a.insert(2, out={5: 0.5}, in_={0: 1})
    assert a.distance(2, 5) == Fraction(1, 2)
    check_against_networkx(a)
    assert a.step > 0


def test_big_counts_are_python_ints():
    k = 70
    edges = []
    for s in range(0, 3 * k, 3):
        edges += [(s, s + 1, 1), (s, s + 2, 1), (s + 1, s + 3, 1), (s + 2, s + 3, 1)]
    a = apasp.Apasp(3 * k + 1, edges)
    assert a.sigma(0, 3 * k) == 2**70


def test_errors():
    a = apasp.Apasp(3, [(0, 1, 1)], dead=[2])
    with pytest.raises(apasp.GraphError):
        a.distance(0, 2)
    with pytest.raises(ValueError):
        a.reweight(0, out={1: Fraction(1, 3)})
    with pytest.raises(apasp.ParseError):
        apasp.parse_graph("not a graph\n")


def test_parse_graph_and_verify(tmp_path):
    g = apasp.parse_graph("apasp-graph 1\nn 3\ne 0 1 1\ne 1 2 0.5\ne 0 2 1.5\n")
    a = apasp.Apasp.from_graph(g)
    assert a.sigma(0, 2) == 2
    graph = tmp_path / "g.txt"
    trace = tmp_path / "t.txt"
    graph.write_text("apasp-graph 1\nn 3\ne 0 1 1\ne 1 2 0.5\ne 0 2 1.5\n")
    trace.write_text("apasp-trace 1\nstep 1 reweight 1 out 2 2\nstep 2 delete 0\n")
    r = apasp.verify(os.fspath(graph), os.fspath(trace))
    assert r["ok"], r["failures"]
    assert r["steps"] == 2
