"""Strong odd colorings of subgraphs of (k-tree x path) products.

Every product layer is a copy of the k-tree, colored independently by the
treewidth construction; the directed edges incident to a layer are projected
into it as three digraph constraints (from below, from above, within), a
layer type records which colors meet which tracked sets, a mod-3 tag keeps
the palettes of nearby layers apart, and a final layer-parity repair makes
the tracked sets globally odd.
"""

from __future__ import annotations

from typing import Iterable, Sequence

from .bounds import rtw_bound
from .canon import canonical_key
from .graphs import Coloring, DiGraph, Graph, product_coords, strong_product
from .ktree import KTreeSeq, build_ktree
from .treewidth import InputNotSubgraph, TypeMatrix, _tw_color


def _rtw_color(
    h_seq: KTreeSeq,
    path_len: int,
    arcs: DiGraph,
    sets: Sequence[frozenset[int]],
) -> dict[int, object]:
    nh = build_ktree(h_seq).n
    layers = [range(d * nh, (d + 1) * nh) for d in range(path_len)]
    by_layer_arcs: dict[tuple[int, int], list[tuple[int, int]]] = {}
    for a, b in arcs.arcs:
        (u, da) = product_coords(a, nh)
        (v, db) = product_coords(b, nh)
        by_layer_arcs.setdefault((da, db), []).append((u, v))

    out: dict[int, object] = {}
    layer_colors: list[dict[int, object]] = []
    for d in range(path_len):
        within = [(u, v) for u, v in by_layer_arcs.get((d, d), ())]
        from_below = [(u, v) for u, v in by_layer_arcs.get((d - 1, d), ()) if u != v]
        from_above = [(u, v) for u, v in by_layer_arcs.get((d + 1, d), ()) if u != v]
        projected = [DiGraph(nh, from_below), DiGraph(nh, from_above), DiGraph(nh, within)]
        local_sets = [
            frozenset(u for u in range(nh) if d * nh + u in m) for m in sets
        ]
        gamma = _tw_color(h_seq, projected, local_sets)
        cells = []
        for j, m in enumerate(local_sets):
            for u in m:
                cells.append((("M", j), gamma[u]))
        mat = TypeMatrix(cells)
        layer_colors.append(gamma)
        for u in range(nh):
            out[d * nh + u] = (gamma[u], mat, (d + 1) % 3)

    # Layer-parity repair (same argument as the treewidth construction).
    occupied: dict[object, set[int]] = {}
    for x, c in out.items():
        occupied.setdefault(c, set()).add(x // nh)
    renamed: dict[object, int] = {}
    for c in sorted(occupied, key=canonical_key):
        if len(occupied[c]) % 2 == 0:
            renamed[c] = min(occupied[c])
    return {
        x: (c, 1 if c in renamed and x // nh == renamed[c] else 0)
        for x, c in out.items()
    }


def color_rtw(
    h_seq: KTreeSeq,
    path_len: int,
    arcs: DiGraph | None = None,
    sets: Sequence[Iterable[int]] = (),
) -> Coloring:
    """Proper coloring of (k-tree x path) that is strong odd on the given
    directed subgraph and on every tracked set."""
    product = strong_product(build_ktree(h_seq), path_len)
    arcs = arcs if arcs is not None else DiGraph(product.n)
    sets = [frozenset(m) for m in sets]
    if arcs.n != product.n or not arcs.is_subgraph_of(product):
        raise InputNotSubgraph("directed subgraph leaves the product")
    for m in sets:
        if any(not (0 <= v < product.n) for v in m):
            raise InputNotSubgraph("tracked set contains a foreign vertex")
    raw = _rtw_color(h_seq, path_len, arcs, sets)
    coloring = Coloring.from_values(raw)
    assert rtw_bound(h_seq.k, len(sets)).at_least(coloring.num_colors()), \
        "row-treewidth coloring exceeded its bound"
    return coloring
