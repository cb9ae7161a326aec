"""Product, summand, and clique-sum colorings."""

import random
from collections import Counter

import pytest

from strongodd.experiments import random_sum_desc, random_subdigraph, random_subsets
from strongodd.gadgets import gen_random_partial_ktree
from strongodd.graphs import DiGraph, Graph, join_with_clique, strong_product
from strongodd.ktree import KTreeSeq, build_ktree
from strongodd.rowtw import color_rtw
from strongodd.sumcolor import (
    UntaggedClique,
    color_sum,
    color_summand,
    sum_clique_coloring,
    tag_cliques,
)
from strongodd.sums import SumDesc, Summand, build_sum
from strongodd.treewidth import InputNotSubgraph
from strongodd.verify import (
    is_proper,
    is_strong_odd,
    is_strong_odd_directed,
    is_strong_odd_on_set,
)


class TestColorRtw:
    def test_single_layer_reduces_to_tw(self):
        seq, _ = gen_random_partial_ktree(1, 5, 1.0, seed=0)
        g = build_ktree(seq)
        arcs = DiGraph.from_graph(g)
        c = color_rtw(seq, 1, arcs, [])
        assert is_proper(g, c).ok and is_strong_odd_directed(arcs, c).ok

    def test_zero_tree_gives_paths(self):
        seq = KTreeSeq.make(0, [(0, [])])
        prod = strong_product(build_ktree(seq), 6)
        assert prod == Graph.path(6)
        arcs = DiGraph.from_graph(prod)
        c = color_rtw(seq, 6, arcs, [])
        assert is_strong_odd(prod, c).ok

    def test_r1_r2_r3_random(self):
        for i in range(60):
            rng = random.Random(200 + i)
            k = rng.choice([0, 1])
            seq, _ = gen_random_partial_ktree(k, rng.randrange(0, 10), 1.0, seed=i)
            path_len = rng.randrange(1, 7)
            prod = strong_product(build_ktree(seq), path_len)
            arcs = random_subdigraph(prod, rng)
            sets = random_subsets(prod.n, rng.randrange(0, 3), rng)
            c = color_rtw(seq, path_len, arcs, sets)
            assert is_proper(prod, c).ok
            assert is_strong_odd_directed(arcs, c).ok
            assert all(is_strong_odd_on_set(c, m) for m in sets)

    def test_foreign_arcs_rejected(self):
        seq = KTreeSeq.make(0, [(0, [])])
        with pytest.raises(InputNotSubgraph):
            color_rtw(seq, 3, DiGraph(3, [(0, 2)]), [])


class TestColorSummand:
    def test_t_zero_is_rtw(self):
        seq, _ = gen_random_partial_ktree(1, 4, 1.0, seed=3)
        prod = strong_product(build_ktree(seq), 2)
        arcs = random_subdigraph(prod, random.Random(1))
        a = color_summand(seq, 2, 0, arcs, [])
        b = color_rtw(seq, 2, arcs, [])
        assert a.assignment == b.assignment

    def test_apex_neighborhoods(self):
        seq, _ = gen_random_partial_ktree(1, 4, 1.0, seed=5)
        f = join_with_clique(strong_product(build_ktree(seq), 2), 1)
        apex = f.n - 1
        arcs = DiGraph(f.n, [(apex, v) for v in range(f.n - 1)])
        c = color_summand(seq, 2, 1, arcs, [])
        assert is_strong_odd_directed(arcs, c).ok

    def test_f1_f2_f3_random(self):
        for i in range(60):
            rng = random.Random(300 + i)
            k, t = rng.choice([0, 1]), rng.randrange(0, 3)
            seq, _ = gen_random_partial_ktree(k, rng.randrange(0, 8), 1.0, seed=i)
            path_len = rng.randrange(1, 5)
            f = join_with_clique(strong_product(build_ktree(seq), path_len), t)
            arcs = random_subdigraph(f, rng)
            sets = random_subsets(f.n, rng.randrange(0, 3), rng)
            c = color_summand(seq, path_len, t, arcs, sets)
            assert is_proper(f, c).ok
            assert is_strong_odd_directed(arcs, c).ok
            assert all(is_strong_odd_on_set(c, m) for m in sets)


class TestColorSum:
    def test_single_summand(self):
        desc = SumDesc.single(2, 1, 1, KTreeSeq.make(1, [(1, [0])]), 2)
        s = build_sum(desc)
        arcs = random_subdigraph(s.graph, random.Random(0))
        c = color_sum(desc, arcs, [])
        assert is_proper(s.graph, c).ok and is_strong_odd_directed(arcs, c).ok

    def test_two_glued_on_vertex_k0_t0(self):
        path = Summand(KTreeSeq.make(0, [(0, [])]), 3)
        desc = SumDesc(1, 0, 0, (path, path), (((2,), (0,)),))
        s = build_sum(desc)
        arcs = DiGraph.from_graph(s.graph)
        c = color_sum(desc, arcs, [])
        assert is_strong_odd(s.graph, c).ok

    def test_s1_s2_s3_random(self):
        for i in range(60):
            rng = random.Random(400 + i)
            w, k, t = rng.choice([1, 2]), rng.choice([0, 1]), rng.choice([0, 1])
            desc = random_sum_desc(w, k, t, rng.randrange(1, 6), seed=i)
            s = build_sum(desc)
            if s.graph.n > 60 or s.graph.n == 0:
                continue
            arcs = random_subdigraph(s.graph, rng)
            sets = random_subsets(s.graph.n, rng.randrange(0, 3), rng)
            c = color_sum(desc, arcs, sets)
            assert is_proper(s.graph, c).ok
            assert is_strong_odd_directed(arcs, c).ok
            assert all(is_strong_odd_on_set(c, m) for m in sets)

    def test_deterministic(self):
        desc = random_sum_desc(2, 1, 1, 4, seed=8)
        arcs = random_subdigraph(build_sum(desc).graph, random.Random(2))
        assert color_sum(desc, arcs, []).assignment == \
            color_sum(desc, arcs, []).assignment


class TestSumCliqueColoring:
    def _random_cliques(self, g, rng, count=6):
        cliques = set()
        for _ in range(count):
            r = rng.random()
            if r < 0.4 and g.n:
                cliques.add(frozenset([rng.randrange(g.n)]))
            elif g.m:
                e = g.edge_list()[rng.randrange(g.m)]
                if r < 0.8:
                    cliques.add(frozenset(e))
                else:
                    common = g.neighbors(e[0]) & g.neighbors(e[1])
                    if common:
                        cliques.add(frozenset(e) | {min(common)})
        return sorted(cliques, key=sorted)

    def test_empty_family(self):
        desc = SumDesc.single(1, 0, 1, KTreeSeq.make(0, [(0, [])]), 1)
        assert sum_clique_coloring(desc, [], []) == {}

    def test_single_clique(self):
        desc = SumDesc.single(1, 0, 1, KTreeSeq.make(0, [(0, [])]), 2)
        s = build_sum(desc)
        cliques = [frozenset({0, 1})]
        sigma = sum_clique_coloring(desc, cliques, tag_cliques(s, cliques))
        assert len(sigma) == 1

    def test_untagged_rejected(self):
        desc = SumDesc.single(1, 0, 1, KTreeSeq.make(0, [(0, [])]), 2)
        with pytest.raises(UntaggedClique):
            sum_clique_coloring(desc, [frozenset({0, 1})], None)
        with pytest.raises(UntaggedClique):
            sum_clique_coloring(desc, [frozenset({0, 1})], [])

    def test_sprime_properties_random(self):
        for i in range(60):
            rng = random.Random(500 + i)
            w, k, t = rng.choice([1, 2]), rng.choice([0, 1]), rng.choice([0, 1])
            desc = random_sum_desc(w, k, t, rng.randrange(1, 4), seed=i)
            s = build_sum(desc)
            if s.graph.n == 0:
                continue
            cliques = self._random_cliques(s.graph, rng)
            if not cliques:
                continue
            sigma = sum_clique_coloring(desc, cliques, tag_cliques(s, cliques))
            classes = Counter(sigma.values())
            assert all(c % 2 == 1 for c in classes.values())
            for v in range(s.graph.n):
                around = Counter(sigma[q] for q in sigma if v in q)
                assert all(c % 2 == 1 for c in around.values())
