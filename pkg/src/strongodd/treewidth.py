"""Layered strong odd colorings of k-trees, with clique colorings.

The construction follows the BFS layering of the k-tree.  Each layer is
colored through its parent cliques: every clique's children get a recursive
coloring inside a (k-1)-tree completion of the layer slice, cliques are
grouped by a type matrix recording which recursive colors meet which tracked
sets, cliques of equal type share a clique coloring, and a final mod-3 layer
tag plus a layer-parity repair assemble the result.

Color values are structured tuples; two recursive colors are the same color
exactly when the values compare equal, which is what lets type matrices from
independent subinstances synchronize.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Optional, Sequence

from .bounds import tw_bound, tw_clique_bound
from .canon import canonical_key
from .graphs import Coloring, DiGraph, Graph
from .ktree import (
    Completion,
    KTreeSeq,
    bfs_layering,
    build_ktree,
    layer_completion,
    _component_parents,
)


class InputNotSubgraph(ValueError):
    """A digraph constraint or tracked set leaves the host graph."""


class NotAStepClique(ValueError):
    """A clique submitted for clique coloring was never created by a step."""


class TypeMatrix:
    """Sparse 0-1 matrix over (tracked-set row, color value) cells.

    Only the 1-cells are stored; rows are keyed semantically (("M", j) for
    tracked sets, ("N", i, h) for digraph/parent-vertex rows) and columns by
    the color values themselves, so matrices of equal meaning compare equal
    regardless of how many colors the palette bound would allow.
    """

    __slots__ = ("entries", "_key")

    def __init__(self, cells: Iterable[tuple[tuple, object]]):
        entries = tuple(sorted(set(cells), key=canonical_key))
        object.__setattr__(self, "entries", entries)
        object.__setattr__(self, "_key", tuple(canonical_key(e) for e in entries))

    def __setattr__(self, name, value):  # pragma: no cover - guard
        raise AttributeError("TypeMatrix is immutable")

    def canonical_key(self):
        return self._key

    def __eq__(self, other):
        return isinstance(other, TypeMatrix) and self._key == other._key

    def __hash__(self):
        return hash(self._key)

    def __repr__(self):
        return f"TypeMatrix({len(self.entries)} ones)"


def _validate_inputs(g: Graph, digraphs: Sequence[DiGraph], sets: Sequence[frozenset[int]]):
    for d in digraphs:
        if d.n != g.n or not d.is_subgraph_of(g):
            raise InputNotSubgraph("digraph constraint is not a subgraph of the host")
    for m in sets:
        if any(not (0 <= v < g.n) for v in m):
            raise InputNotSubgraph("tracked set contains a foreign vertex")


def _base_sets_coloring(n: int, sets: Sequence[frozenset[int]]) -> dict[int, object]:
    """Edgeless base case: color so every tracked set meets every color an
    odd number of times or not at all.

    Vertices are partitioned by their membership pattern; a pattern class of
    even size splits off its smallest vertex into a second palette color.
    """
    pattern: dict[int, tuple[int, ...]] = {}
    groups: dict[tuple[int, ...], list[int]] = {}
    for v in range(n):
        j = tuple(i for i, m in enumerate(sets) if v in m)
        pattern[v] = j
        groups.setdefault(j, []).append(v)
    out: dict[int, object] = {}
    for j, members in groups.items():
        members.sort()
        split = members[0] if len(members) % 2 == 0 else None
        for v in members:
            out[v] = (j, 1 if v == split else 0)
    return out


def _greedy_layer_coloring(g: Graph, layer: frozenset[int], k: int) -> dict[int, int]:
    """Proper coloring of one layer with colors 1..k, greedy along the
    inherited construction order (earlier in-layer neighbors number < k)."""
    chi: dict[int, int] = {}
    for v in sorted(layer):
        used = {chi[u] for u in g.neighbors(v) if u in chi}
        c = 1
        while c in used:
            c += 1
        if c > max(k, 1):  # pragma: no cover - violated only by invalid input
            raise InputNotSubgraph(f"layer is not a partial ({k - 1})-tree at {v}")
        chi[v] = c
    return chi


def _rep_map(seq: KTreeSeq) -> dict[frozenset[int], int]:
    """Each step's created clique mapped to the vertex representing it."""
    return {seq.represented_clique(v): v for v in range(seq.k, seq.n)}


def _clique_color_raw(
    seq: KTreeSeq, cliques: Sequence[frozenset[int]]
) -> dict[frozenset[int], object]:
    """Clique coloring via representatives: strong odd around every vertex,
    all classes odd.  Values come from a recursive vertex coloring."""
    reps = _rep_map(seq)
    chosen: dict[frozenset[int], int] = {}
    for q in cliques:
        if q not in reps:
            raise NotAStepClique(f"{sorted(q)} is not a step clique")
        chosen[q] = reps[q]
    arcs = []
    for q, r in chosen.items():
        for p in q - {r}:
            arcs.append((p, r))
    marked = frozenset(chosen.values())
    psi = _tw_color(seq, [DiGraph(seq.n, arcs)], [marked])
    return {q: psi[r] for q, r in chosen.items()}


def clique_coloring(seq: KTreeSeq, cliques: Iterable[frozenset[int]]) -> dict[frozenset[int], int]:
    """Color a family of step cliques so that, around every vertex, each color
    class among the cliques containing it has odd size or is absent, and
    every color class has odd size overall."""
    cliques = [frozenset(q) for q in cliques]
    g = build_ktree(seq)
    for q in cliques:
        if len(q) != seq.k + 1 or not g.is_clique(q):
            raise NotAStepClique(f"{sorted(q)} is not a ({seq.k + 1})-clique")
    raw = _clique_color_raw(seq, cliques)
    ids: dict[object, int] = {}
    out = {}
    for q in sorted(raw, key=lambda s: sorted(s)):
        val = raw[q]
        if val not in ids:
            ids[val] = len(ids)
        out[q] = ids[val]
    count = len(set(out.values()))
    assert tw_clique_bound(seq.k).at_least(count), "clique coloring exceeded its bound"
    return out


def _tw_color(
    seq: KTreeSeq,
    digraphs: Sequence[DiGraph],
    sets: Sequence[frozenset[int]],
) -> dict[int, object]:
    """Raw recursive coloring; returns structured color values per vertex."""
    k = seq.k
    g = build_ktree(seq)
    if k == 0:
        return _base_sets_coloring(g.n, sets)

    ell = len(digraphs)
    layering = bfs_layering(seq)
    layers = layering.layers
    chis = [_greedy_layer_coloring(g, layer, k) for layer in layers]
    completions: dict[int, Completion] = {}

    def completion_of_layer(d: int) -> Completion:
        if d not in completions:
            completions[d] = layer_completion(seq, layers[d])
        return completions[d]

    phi: dict[int, object] = {}
    for v in sorted(layers[0]):
        phi[v] = (chis[0][v], -1, -1, 1 % 3)

    for d in range(1, len(layers)):
        layer = layers[d]
        prev = layers[d - 1]
        chi_prev = chis[d - 1]
        # Group the layer's components by parent clique.
        children: dict[frozenset[int], set[int]] = {}
        for comp, parents in _component_parents(g, layer, prev):
            assert len(parents) == k and g.is_clique(parents), "parent set is not a k-clique"
            children.setdefault(parents, set()).update(comp)

        per_clique: dict[frozenset[int], tuple[dict[int, object], TypeMatrix]] = {}
        for q in sorted(children, key=lambda s: sorted(s)):
            vq = children[q]
            comp = layer_completion(seq, vq)
            loc = comp.to_local
            sub_n = comp.seq.n
            sub_digraphs = [
                DiGraph(sub_n, ((loc[a], loc[b]) for a, b in h.arcs
                                if a in loc and b in loc))
                for h in digraphs
            ]
            vertex_of_color = {chi_prev[u]: u for u in q}
            tracked: list[tuple[tuple, frozenset[int]]] = []
            for j, m in enumerate(sets):
                tracked.append((("M", j), frozenset(m) & vq))
            for i, h_digraph in enumerate(digraphs):
                for h in range(1, k + 1):
                    vh = vertex_of_color[h]
                    tracked.append((("N", i, h), h_digraph.out_neighbors(vh) & vq))
            sub_sets = [frozenset(loc[v] for v in m) for _, m in tracked]
            raw = _tw_color(comp.seq, sub_digraphs, sub_sets)
            phi_q = {v: raw[loc[v]] for v in vq}
            cells = []
            for (row, m) in tracked:
                for v in m:
                    cells.append((row, phi_q[v]))
            per_clique[q] = (phi_q, TypeMatrix(cells))

        by_type: dict[TypeMatrix, list[frozenset[int]]] = {}
        for q, (_, mat) in per_clique.items():
            by_type.setdefault(mat, []).append(q)
        sigma: dict[frozenset[int], object] = {}
        prev_comp = completion_of_layer(d - 1)
        for mat in sorted(by_type, key=canonical_key):
            qs = sorted(by_type[mat], key=lambda s: sorted(s))
            local_cliques = [frozenset(prev_comp.to_local[v] for v in q) for q in qs]
            colored = _clique_color_raw(prev_comp.seq, local_cliques)
            for q, lq in zip(qs, local_cliques):
                sigma[q] = colored[lq]

        for q, (phi_q, mat) in per_clique.items():
            for v in phi_q:
                phi[v] = (phi_q[v], mat, sigma[q], (d + 1) % 3)

    # Layer-parity repair: every color must appear on an odd number of
    # layers; an even class is renamed on its lowest layer.
    layer_of = layering.layer_of()
    occupied: dict[object, set[int]] = {}
    for v, c in phi.items():
        occupied.setdefault(c, set()).add(layer_of[v])
    renamed: dict[object, int] = {}
    for c in sorted(occupied, key=canonical_key):
        if len(occupied[c]) % 2 == 0:
            renamed[c] = min(occupied[c])
    out: dict[int, object] = {}
    for v, c in phi.items():
        flag = 1 if c in renamed and layer_of[v] == renamed[c] else 0
        out[v] = (c, flag)
    return out


def color_tw(
    seq: KTreeSeq,
    digraphs: Sequence[DiGraph] = (),
    sets: Sequence[Iterable[int]] = (),
) -> Coloring:
    """Proper coloring of the k-tree that is strong odd on every digraph
    constraint and on every tracked set.

    Missing constraints are padded with an empty digraph / empty set; the
    color count respects the memoized treewidth bound for the padded counts.
    """
    g = build_ktree(seq)
    digraphs = list(digraphs) or [DiGraph(g.n)]
    sets = [frozenset(m) for m in sets] or [frozenset()]
    _validate_inputs(g, digraphs, sets)
    raw = _tw_color(seq, digraphs, sets)
    coloring = Coloring.from_values(raw)
    bound = tw_bound(seq.k, len(digraphs), len(sets))
    assert bound.at_least(coloring.num_colors()), "treewidth coloring exceeded its bound"
    return coloring
