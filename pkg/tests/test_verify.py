"""Verifier decision procedures and their witnesses."""

import random
from collections import Counter
from itertools import combinations

import pytest
from hypothesis import given, settings, strategies as st

from strongodd.graphs import (
    Coloring,
    DiGraph,
    Graph,
    Hypergraph,
    MultiplicityRule,
    PlaneGraph,
)
from strongodd.verify import (
    PartialColoring,
    is_facially_odd,
    is_hypergraph_strong_odd,
    is_odd_coloring,
    is_proper,
    is_strong_odd,
    is_strong_odd_directed,
    is_strong_odd_on_set,
    plane_to_strong_odd,
)


def coloring(*colors) -> Coloring:
    return Coloring({v: c for v, c in enumerate(colors)})


class TestProper:
    def test_rainbow_triangle(self):
        assert is_proper(Graph.complete(3), coloring(0, 1, 2)).ok

    def test_monochromatic_edge_witness(self):
        report = is_proper(Graph.complete(2), coloring(0, 0))
        assert not report.ok and report.violations == [("edge", 0, 1)]

    def test_edgeless_any(self):
        assert is_proper(Graph(3), coloring(0, 0, 0)).ok

    def test_partial_raises(self):
        with pytest.raises(PartialColoring):
            is_proper(Graph.complete(2), Coloring({0: 1}))


class TestStrongOdd:
    def test_star_center_sees_three(self):
        g = Graph(4, [(0, 1), (0, 2), (0, 3)])
        assert is_strong_odd(g, coloring(0, 1, 1, 1)).ok

    def test_star_center_sees_two(self):
        g = Graph(3, [(0, 1), (0, 2)])
        report = is_strong_odd(g, coloring(0, 1, 1))
        assert not report.ok
        assert ("parity", 0, 1, 2) in report.violations

    def test_witnesses_replay(self):
        rng = random.Random(4)
        for _ in range(200):
            n = rng.randrange(1, 8)
            g = Graph(n, [e for e in combinations(range(n), 2) if rng.random() < 0.5])
            c = Coloring({v: rng.randrange(3) for v in range(n)})
            for violation in is_strong_odd(g, c).violations:
                if violation[0] == "edge":
                    _, u, v = violation
                    assert g.has_edge(u, v) and c.of(u) == c.of(v)
                else:
                    _, v, col, count = violation
                    real = sum(1 for u in g.neighbors(v) if c.of(u) == col)
                    assert real == count and count % 2 == 0 and count > 0

    def test_matches_reference_parity(self):
        # Independent reference: direct Counter arithmetic per vertex.
        rng = random.Random(99)
        for _ in range(10_000):
            n = rng.randrange(1, 7)
            g = Graph(n, [e for e in combinations(range(n), 2) if rng.random() < 0.5])
            c = Coloring({v: rng.randrange(4) for v in range(n)})
            ref = True
            for u, v in g.edges:
                if c.of(u) == c.of(v):
                    ref = False
            for v in range(n):
                for cnt in Counter(c.of(u) for u in g.neighbors(v)).values():
                    if cnt % 2 == 0:
                        ref = False
            assert is_strong_odd(g, c).ok == ref

    def test_generalized_rule(self):
        g = Graph(5, [(0, i) for i in range(1, 5)])
        c = coloring(0, 1, 1, 1, 1)
        rule = MultiplicityRule(3, frozenset({1}))
        assert is_strong_odd(g, c, rule).ok  # 4 mod 3 == 1
        assert not is_strong_odd(g, c).ok  # 4 is even


class TestSetAndDirected:
    def test_empty_set(self):
        assert is_strong_odd_on_set(coloring(), [])

    def test_pair_same_color(self):
        assert not is_strong_odd_on_set(coloring(5, 5), [0, 1])
        assert is_strong_odd_on_set(coloring(5, 5, 5), [0, 1, 2])

    def test_directed_coincides_with_undirected(self):
        rng = random.Random(7)
        for _ in range(100):
            n = rng.randrange(1, 7)
            g = Graph(n, [e for e in combinations(range(n), 2) if rng.random() < 0.5])
            d = DiGraph.from_graph(g)
            c = Coloring({v: rng.randrange(4) for v in range(n)})
            assert is_strong_odd(g, c).ok == is_strong_odd_directed(d, c).ok

    def test_arc_properness(self):
        d = DiGraph(2, [(0, 1)])
        assert not is_strong_odd_directed(d, coloring(3, 3)).ok

    def test_out_neighborhood_parity(self):
        d = DiGraph(3, [(0, 1), (0, 2)])
        report = is_strong_odd_directed(d, coloring(0, 1, 1))
        assert not report.ok
        assert ("parity", 0, 1, 2) in report.violations


class TestOddColoring:
    def test_strong_odd_implies_odd(self):
        rng = random.Random(11)
        checked = 0
        for _ in range(3000):
            n = rng.randrange(2, 8)
            g = Graph(n, [e for e in combinations(range(n), 2) if rng.random() < 0.4])
            c = Coloring({v: rng.randrange(5) for v in range(n)})
            if is_strong_odd(g, c).ok and all(g.neighbors(v) for v in range(n)):
                checked += 1
                assert is_odd_coloring(g, c).ok
        assert checked > 10

    def test_c4_two_colored_fails(self):
        assert not is_odd_coloring(Graph.cycle(4), coloring(0, 1, 0, 1)).ok

    def test_k2(self):
        assert is_odd_coloring(Graph.complete(2), coloring(0, 1)).ok

    def test_isolated_vertices_exempt(self):
        g = Graph(3, [(0, 1)])
        assert is_odd_coloring(g, coloring(0, 1, 0)).ok


class TestHypergraph:
    def test_triple_same_color(self):
        h = Hypergraph(3, [[0, 1, 2]])
        assert is_hypergraph_strong_odd(h, coloring(9, 9, 9)).ok

    def test_pair_same_color(self):
        h = Hypergraph(2, [[0, 1]])
        assert not is_hypergraph_strong_odd(h, coloring(9, 9)).ok

    def test_no_properness_requirement(self):
        # Adjacent-looking vertices may share a color: only parity matters.
        h = Hypergraph(3, [[0, 1, 2], [0, 1, 2]])
        assert is_hypergraph_strong_odd(h, coloring(1, 1, 1)).ok

    def test_no_hyperedges(self):
        assert is_hypergraph_strong_odd(Hypergraph(2, []), coloring(0, 0)).ok


class TestFacial:
    def triangle_plane(self):
        return PlaneGraph(Graph.complete(3), [(0, 1, 2), (0, 2, 1)])

    def test_plane_to_strong_odd_triangle(self):
        augmented, face_vertex = plane_to_strong_odd(self.triangle_plane())
        assert augmented.n == 5 and augmented.m == 9
        assert face_vertex == {0: 3, 1: 4}

    def test_plane_to_strong_odd_square(self):
        p = PlaneGraph(Graph.cycle(4), [(0, 1, 2, 3), (3, 2, 1, 0)])
        augmented, _ = plane_to_strong_odd(p)
        assert augmented.n == 6 and augmented.m == 12

    def test_k4_rainbow_passes(self):
        g = Graph.complete(4)
        p = PlaneGraph(g, [(0, 1, 2), (0, 3, 1), (1, 3, 2), (2, 3, 0)])
        assert is_facially_odd(p, coloring(0, 1, 2, 3)).ok

    def test_c4_alternating_fails(self):
        p = PlaneGraph(Graph.cycle(4), [(0, 1, 2, 3), (3, 2, 1, 0)])
        assert not is_facially_odd(p, coloring(0, 1, 0, 1)).ok

    def test_pullback_soundness_on_triangulations(self):
        # Any strong odd coloring of the face-augmented graph restricts to a
        # facially odd coloring of the embedded graph.
        from strongodd.experiments import plane_triangulations
        from strongodd.solver import feasible

        for plane in plane_triangulations(100, max_n=7, seed=77):
            augmented, _ = plane_to_strong_odd(plane)
            witness = None
            for t in range(4, augmented.n + 1):
                witness = feasible(augmented, t)
                if witness is not None:
                    break
            assert witness is not None
            assert is_strong_odd(augmented, witness).ok
            restricted = witness.restrict(range(plane.graph.n))
            assert is_facially_odd(plane, restricted).ok
