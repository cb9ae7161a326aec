"""Serialization round-trips."""

import pytest

from strongodd import graphio
from strongodd.experiments import random_sum_desc
from strongodd.gadgets import gen_random_partial_ktree
from strongodd.graphs import Coloring, DiGraph, Graph, Hypergraph, PlaneGraph


class TestEdgeList:
    def test_graph_round_trip(self):
        g = Graph(4, [(0, 1), (2, 3)])
        assert graphio.parse_edge_list(graphio.write_edge_list(g)) == g

    def test_digraph_round_trip(self):
        d = DiGraph(3, [(0, 1), (1, 0), (2, 1)])
        assert graphio.parse_edge_list(graphio.write_edge_list(d)) == d

    def test_header_mismatch(self):
        with pytest.raises(graphio.FormatError):
            graphio.parse_edge_list("2 2\n0 1\n")

    def test_bad_header(self):
        with pytest.raises(graphio.FormatError):
            graphio.parse_edge_list("nope\n")

    def test_directed_header(self):
        text = "2 1 directed\n0 1\n"
        d = graphio.parse_edge_list(text)
        assert isinstance(d, DiGraph) and d.arcs == {(0, 1)}


class TestJson:
    def test_graph_round_trip(self):
        g = Graph(5, [(0, 4), (1, 2)])
        assert graphio.graph_from_json(graphio.graph_to_json(g)) == g

    def test_hypergraph_round_trip(self):
        h = Hypergraph(4, [[0, 1, 2], [3]])
        back = graphio.hypergraph_from_json(graphio.hypergraph_to_json(h))
        assert back.n == 4 and back.hyperedges == h.hyperedges

    def test_plane_round_trip(self):
        p = PlaneGraph(Graph.complete(3), [(0, 1, 2), (0, 2, 1)])
        back = graphio.plane_from_json(graphio.plane_to_json(p))
        assert back.graph == p.graph and back.faces == p.faces

    def test_ktree_round_trip(self):
        seq, _ = gen_random_partial_ktree(2, 8, 0.5, seed=3)
        assert graphio.ktree_from_json(graphio.ktree_to_json(seq)) == seq

    def test_sumdesc_round_trip(self):
        desc = random_sum_desc(2, 1, 1, 4, seed=11)
        assert graphio.sumdesc_from_json(graphio.sumdesc_to_json(desc)) == desc

    def test_coloring_round_trip(self):
        c = Coloring({0: 2, 1: 0}, {0: ("a", 1), 1: ("b",)})
        encoded = graphio.coloring_to_json(c)
        assert "tuples" in encoded
        back = graphio.coloring_from_json(encoded)
        assert back.assignment == c.assignment

    def test_malformed_rejected(self):
        with pytest.raises(graphio.FormatError):
            graphio.graph_from_json({"edges": []})
        with pytest.raises(graphio.FormatError):
            graphio.ktree_from_json({"k": 1})

    def test_dumps_stable(self):
        g = Graph(3, [(0, 1)])
        assert graphio.dumps(graphio.graph_to_json(g)) == \
            graphio.dumps(graphio.graph_to_json(g))
