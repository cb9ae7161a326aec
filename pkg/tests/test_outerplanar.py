"""Outerplanar 8-coloring: the gadget extension and the full driver."""

import random

import pytest

from strongodd.gadgets import gen_random_maximal_outerplanar
from strongodd.graphs import Coloring, Graph
from strongodd.ktree import KTreeSeq, build_ktree
from strongodd.outerplanar import (
    ClaimGadget,
    NotOuterplanarWitness,
    PreconditionViolated,
    V,
    X,
    Y,
    claim_extend,
    color_outerplanar,
    gadget_graph,
    validate_outerplanar_structure,
)
from strongodd.verify import is_proper, is_strong_odd


class TestGadget:
    def test_preconditions(self):
        with pytest.raises(PreconditionViolated):
            ClaimGadget(1, 2, 7, 6)
        with pytest.raises(PreconditionViolated):
            ClaimGadget(2, 2, 1, 6)  # u1 collides on its path
        with pytest.raises(PreconditionViolated):
            ClaimGadget(2, 2, 7, 4)  # w1 collides on its path
        with pytest.raises(PreconditionViolated):
            ClaimGadget(2, 2, 9, 6)

    def test_empty_mask_keeps_preliminary_pattern(self):
        g = ClaimGadget(4, 4, 7, 6)
        col = claim_extend(g, [])
        assert [col.of(g.u_vertex(r)) for r in range(4)] == [6, 7, 8, 6]
        assert [col.of(g.w_vertex(r)) for r in range(4)] == [8, 7, 6, 8]

    def test_even_class_recolored(self):
        g = ClaimGadget(4, 2, 7, 6)
        host = gadget_graph(g)
        # v adjacent to u3 and u6 (both preliminary color 6) and to y.
        mask = [(V, g.u_vertex(0)), (V, g.u_vertex(3)), (V, Y)]
        col = claim_extend(g, mask)
        seen = [col.of(g.u_vertex(0)), col.of(g.u_vertex(3))]
        counts = {}
        for u, c in [(g.u_vertex(0), seen[0]), (g.u_vertex(3), seen[1]), (Y, 3)]:
            counts[c] = counts.get(c, 0) + 1
        assert all(v % 2 == 1 for v in counts.values())

    def test_postconditions_on_random_masks(self):
        rng = random.Random(0)
        for _ in range(300):
            p, q = rng.randrange(2, 7), rng.randrange(2, 7)
            i = rng.choice([3, 4, 6, 7, 8])
            j = rng.choice([1, 2, 6, 7, 8])
            g = ClaimGadget(p, q, i, j)
            host = gadget_graph(g)
            mask = [e for e in host.edge_list() if rng.random() < 0.5]
            col = claim_extend(g, mask)
            assert is_proper(host, col).ok
            masked = Graph(host.n, mask)
            parity = [v for v in is_strong_odd(masked, col).violations
                      if v[0] == "parity" and v[1] == V]
            assert not parity
            assert col.of(g.u_vertex(0)) != 2
            assert col.of(g.w_vertex(0)) != 3

    def test_bad_mask_edge_rejected(self):
        g = ClaimGadget(2, 2, 7, 6)
        with pytest.raises(PreconditionViolated):
            claim_extend(g, [(X, Y), (0, 99)])


class TestStructureValidation:
    def test_accepts_generated_hosts(self):
        for seed in range(30):
            seq = gen_random_maximal_outerplanar(3 + seed, seed)
            validate_outerplanar_structure(seq)

    def test_rejects_wrong_k(self):
        with pytest.raises(NotOuterplanarWitness):
            validate_outerplanar_structure(KTreeSeq.make(1, [(1, [0])]))

    def test_rejects_nonsimple_two_tree(self):
        # Two vertices attached to the same edge from the same side produce a
        # branching layer.
        seq = KTreeSeq.make(2, [(2, [0, 1]), (3, [0, 2]), (4, [0, 2])])
        with pytest.raises(NotOuterplanarWitness):
            validate_outerplanar_structure(seq)

    def test_rejects_double_path_on_one_edge(self):
        # Both sides of the initial edge used: two layer paths on one edge.
        seq = KTreeSeq.make(2, [(2, [0, 1]), (3, [0, 1])])
        with pytest.raises(NotOuterplanarWitness):
            validate_outerplanar_structure(seq)


class TestDriver:
    def test_triangle(self):
        seq = gen_random_maximal_outerplanar(3, 0)
        host = build_ktree(seq)
        c = color_outerplanar(seq, host)
        assert is_strong_odd(host, c).ok
        assert all(1 <= col <= 8 for col in c.assignment.values())

    def test_full_host_masks(self):
        for seed in range(25):
            seq = gen_random_maximal_outerplanar(4 + 3 * seed, seed)
            host = build_ktree(seq)
            c = color_outerplanar(seq, host)
            assert is_proper(host, c).ok
            assert is_strong_odd(host, c).ok

    def test_random_masks(self):
        for seed in range(40):
            rng = random.Random(seed)
            n = rng.randrange(3, 80)
            seq = gen_random_maximal_outerplanar(n, seed + 1000)
            host = build_ktree(seq)
            mask = Graph(host.n, [e for e in host.edge_list() if rng.random() < 0.6])
            c = color_outerplanar(seq, mask)
            assert all(1 <= col <= 8 for col in c.assignment.values())
            assert is_proper(host, c).ok
            assert is_strong_odd(mask, c).ok

    def test_empty_mask(self):
        seq = gen_random_maximal_outerplanar(12, 3)
        host = build_ktree(seq)
        c = color_outerplanar(seq, Graph(host.n))
        assert is_proper(host, c).ok

    def test_deterministic(self):
        seq = gen_random_maximal_outerplanar(30, 9)
        host = build_ktree(seq)
        mask = Graph(host.n, host.edge_list()[::2])
        assert color_outerplanar(seq, mask).assignment == \
            color_outerplanar(seq, mask).assignment

    def test_mask_must_fit_host(self):
        seq = gen_random_maximal_outerplanar(5, 0)
        host = build_ktree(seq)
        with pytest.raises(NotOuterplanarWitness):
            color_outerplanar(seq, Graph(4))
        non_edge = next(
            (u, v)
            for u in range(host.n)
            for v in range(u + 1, host.n)
            if not host.has_edge(u, v)
        )
        with pytest.raises(NotOuterplanarWitness):
            color_outerplanar(seq, [non_edge])
