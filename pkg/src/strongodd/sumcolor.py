"""Strong odd colorings of (k,t)-summands and (w,k,t)-sums.

The summand coloring reuses the product coloring, feeding the apex
out-neighborhoods in as extra tracked sets and spending t fresh colors on
the apexes.  The sum coloring recurses on w along the natural layering,
mirroring the treewidth construction with per-layer sum witnesses in place
of (k-1)-tree completions, and with a clique coloring of parent cliques
driven by representative vertices inside their host summands.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Optional, Sequence

from .bounds import summand_bound, sum_bound, sum_clique_bound
from .canon import canonical_key
from .graphs import Coloring, DiGraph, Graph, product_coords, product_vertex
from .ktree import KTreeSeq, build_ktree, _component_parents
from .rowtw import _rtw_color
from .sums import (
    LayerWitness,
    Sum,
    SumDesc,
    build_sum,
    layer_sum_desc,
    natural_layering,
)
from .treewidth import InputNotSubgraph, TypeMatrix, _tw_color


class UntaggedClique(ValueError):
    """A clique arrived without a valid host-summand tag."""


def _summand_color(
    h_seq: KTreeSeq,
    path_len: int,
    t: int,
    arcs: DiGraph,
    sets: Sequence[frozenset[int]],
) -> dict[int, object]:
    """Raw coloring of (k-tree x path) + K_t; apexes get fresh colors."""
    np = build_ktree(h_seq).n * path_len
    apexes = range(np, np + t)
    apex_sets = [
        frozenset(u for u in arcs.out_neighbors(a) if u < np) for a in apexes
    ]
    prod_arcs = DiGraph(np, ((a, b) for a, b in arcs.arcs if a < np and b < np))
    prod_sets = [frozenset(v for v in m if v < np) for m in sets] + apex_sets
    raw = _rtw_color(h_seq, path_len, prod_arcs, prod_sets)
    for i, a in enumerate(apexes):
        raw[a] = ("apex", i)
    return raw


def color_summand(
    h_seq: KTreeSeq,
    path_len: int,
    t: int,
    arcs: DiGraph | None = None,
    sets: Sequence[Iterable[int]] = (),
) -> Coloring:
    """Proper coloring of (k-tree x path) + K_t, strong odd on the directed
    subgraph and on every tracked set."""
    from .graphs import join_with_clique, strong_product

    f = join_with_clique(strong_product(build_ktree(h_seq), path_len), t)
    arcs = arcs if arcs is not None else DiGraph(f.n)
    sets = [frozenset(m) for m in sets]
    if arcs.n != f.n or not arcs.is_subgraph_of(f):
        raise InputNotSubgraph("directed subgraph leaves the summand")
    for m in sets:
        if any(not (0 <= v < f.n) for v in m):
            raise InputNotSubgraph("tracked set contains a foreign vertex")
    raw = _summand_color(h_seq, path_len, t, arcs, sets)
    coloring = Coloring.from_values(raw)
    assert summand_bound(h_seq.k, t, len(sets)).at_least(coloring.num_colors()), \
        "summand coloring exceeded its bound"
    return coloring


@dataclass(frozen=True)
class CliqueTag:
    """Host choice for a clique of a sum: the summand containing it, the
    (k+1)-clique of the summand's k-tree covering its product projection,
    and the lower of the two product layers it meets."""

    clique: frozenset[int]
    summand: int
    qh: tuple[int, ...]
    layer: int


def _extend_clique(h: Graph, base: set[int], size: int) -> tuple[int, ...]:
    """Deterministically grow a clique by smallest-id common neighbors."""
    clique = set(base)
    while len(clique) < size:
        for v in range(h.n):
            if v not in clique and all(h.has_edge(v, u) for u in clique):
                clique.add(v)
                break
        else:
            break
    return tuple(sorted(clique))


def tag_cliques(s: Sum, cliques: Iterable[frozenset[int]]) -> list[CliqueTag]:
    """Tag every clique with its earliest host summand and a covering
    (k+1)-clique of that summand's k-tree."""
    desc = s.desc
    tags = []
    for q in cliques:
        q = frozenset(q)
        host = None
        for i in range(len(desc.summands)):
            if q <= s.summand_vertices(i):
                host = i
                break
        if host is None:
            raise UntaggedClique(f"{sorted(q)} lies in no single summand")
        summand = desc.summands[host]
        h = build_ktree(summand.ktree)
        np = h.n * summand.path_len
        loc = s.to_local(host)
        coords = [product_coords(loc[v], h.n) for v in q if loc[v] < np]
        layers = sorted({d for _, d in coords})
        if len(layers) > 2 or (len(layers) == 2 and layers[1] != layers[0] + 1):
            raise UntaggedClique(f"{sorted(q)} spans non-adjacent product layers")
        d0 = layers[0] if layers else 0
        proj = {v for v, _ in coords}
        if not h.is_clique(proj):
            raise UntaggedClique(f"{sorted(q)} projects to a non-clique")
        qh = _extend_clique(h, proj, summand.ktree.k + 1)
        tags.append(CliqueTag(q, host, qh, d0))
    return tags


def _clique_type(tag: CliqueTag, s: Sum) -> tuple:
    desc = s.desc
    summand = desc.summands[tag.summand]
    h_n = summand.ktree.n
    np = h_n * summand.path_len
    loc = s.to_local(tag.summand)
    local = {loc[v] for v in tag.clique}
    k1 = desc.k + 1
    a1 = tuple(
        1 if i < len(tag.qh) and product_vertex(tag.qh[i], tag.layer, h_n) in local else 0
        for i in range(k1)
    )
    a2 = tuple(
        1
        if i < len(tag.qh)
        and tag.layer + 1 < summand.path_len
        and product_vertex(tag.qh[i], tag.layer + 1, h_n) in local
        else 0
        for i in range(k1)
    )
    a3 = tuple(1 if np + i in local else 0 for i in range(desc.t))
    return (a1, a2, a3)


def _rep_vertex(tag: CliqueTag, s: Sum) -> int:
    summand = s.desc.summands[tag.summand]
    if tag.qh:
        local = product_vertex(max(tag.qh), tag.layer, summand.ktree.n)
    else:
        # Empty product: the clique is pure apexes and determined by its
        # type, so any fixed member works as representative.
        loc = s.to_local(tag.summand)
        local = max(loc[v] for v in tag.clique)
    return s.vmaps[tag.summand][local]


def _sum_clique_color_raw(
    s: Sum, tags: Sequence[CliqueTag]
) -> dict[frozenset[int], object]:
    """Clique coloring of a sum via representatives, per host-summand type.

    The type includes the host summand: two summands can share a vertex that
    would represent same-shaped cliques in both, so palettes are kept apart
    per summand to keep the representative map injective.
    """
    for tag in tags:
        if not s.summand_vertices(tag.summand) >= tag.clique:
            raise UntaggedClique(f"{sorted(tag.clique)} not inside summand {tag.summand}")
    groups: dict[tuple, list[CliqueTag]] = {}
    for tag in tags:
        key = (tag.summand, _clique_type(tag, s))
        groups.setdefault(key, []).append(tag)
    out: dict[frozenset[int], object] = {}
    for key in sorted(groups, key=canonical_key):
        members = groups[key]
        reps = {}
        for tag in sorted(members, key=lambda tg: sorted(tg.clique)):
            r = _rep_vertex(tag, s)
            if r in reps:
                raise UntaggedClique(
                    f"representative {r} shared by two cliques of one type"
                )
            reps[r] = tag
        arcs = []
        for r, tag in reps.items():
            for x in tag.clique - {r}:
                arcs.append((x, r))
        marked = frozenset(reps)
        psi = _sum_color(s, DiGraph(s.graph.n, arcs), [marked])
        for r, tag in reps.items():
            out[tag.clique] = (key, psi[r])
    return out


def sum_clique_coloring(
    desc: SumDesc,
    cliques: Iterable[frozenset[int]],
    tags: Optional[Sequence[CliqueTag]] = None,
) -> dict[frozenset[int], int]:
    """Color a family of tagged cliques of the sum so that, around every
    vertex, each color class among the cliques containing it has odd size or
    is absent, and every color class has odd size overall."""
    s = build_sum(desc)
    cliques = [frozenset(q) for q in cliques]
    for q in cliques:
        if not s.graph.is_clique(q) or not q:
            raise UntaggedClique(f"{sorted(q)} is not a nonempty clique of the sum")
    if tags is None:
        raise UntaggedClique("cliques must arrive tagged; see tag_cliques")
    by_clique = {tag.clique: tag for tag in tags}
    ordered = []
    for q in cliques:
        if q not in by_clique:
            raise UntaggedClique(f"{sorted(q)} has no tag")
        ordered.append(by_clique[q])
    raw = _sum_clique_color_raw(s, ordered)
    ids: dict[object, int] = {}
    out = {}
    for q in sorted(raw, key=lambda x: sorted(x)):
        val = raw[q]
        if val not in ids:
            ids[val] = len(ids)
        out[q] = ids[val]
    return out


def _sum_color(
    s: Sum,
    arcs: DiGraph,
    sets: Sequence[frozenset[int]],
) -> dict[int, object]:
    """Raw recursive coloring of a (w,k,t)-sum."""
    desc = s.desc
    if desc.w == 0:
        return _disjoint_sum_color(s, arcs, sets)

    layering = natural_layering(desc)
    layers = layering.layers
    if not any(layers):
        return {}
    witnesses: dict[int, LayerWitness] = {
        d: layer_sum_desc(s, layering, d) for d in range(len(layers)) if layers[d]
    }

    def pull_coloring(d: int, sub_arcs: DiGraph, sub_sets) -> dict[int, object]:
        wit = witnesses[d]
        raw = _sum_color(wit.sum, sub_arcs, sub_sets)
        return {v: raw[wit.embed[v]] for v in layers[d]}

    def map_into(d: int, vs: Iterable[int]) -> frozenset[int]:
        wit = witnesses[d]
        return frozenset(wit.embed[v] for v in vs)

    phi: dict[int, object] = {}

    wit0 = witnesses[0]
    arcs0 = DiGraph(
        wit0.sum.graph.n,
        ((wit0.embed[a], wit0.embed[b]) for a, b in arcs.arcs
         if a in layers[0] and b in layers[0]),
    )
    sets0 = [map_into(0, m & layers[0]) for m in sets]
    first = pull_coloring(0, arcs0, sets0)
    for v in layers[0]:
        phi[v] = (first[v], -1, -1, 1 % 3)

    chi_cache: dict[int, dict[int, object]] = {}

    def chi_of(d: int) -> dict[int, object]:
        if d not in chi_cache:
            wit = witnesses[d]
            chi_cache[d] = pull_coloring(d, DiGraph(wit.sum.graph.n), [])
        return chi_cache[d]

    g = s.graph
    for d in range(1, len(layers)):
        layer = layers[d]
        prev = layers[d - 1]
        chi_prev = chi_of(d - 1)
        children: dict[frozenset[int], set[int]] = {}
        for comp, parents in _component_parents(g, layer, prev):
            assert len(parents) <= desc.w and g.is_clique(parents), \
                "parent set is not a small clique"
            children.setdefault(parents, set()).update(comp)

        wit = witnesses[d]
        per_clique: dict[frozenset[int], tuple[dict[int, object], TypeMatrix]] = {}
        for q in sorted(children, key=lambda x: sorted(x)):
            vq = children[q]
            sub_arcs = DiGraph(
                wit.sum.graph.n,
                ((wit.embed[a], wit.embed[b]) for a, b in arcs.arcs
                 if a in vq and b in vq),
            )
            tracked: list[tuple[tuple, frozenset[int]]] = []
            for j, m in enumerate(sets):
                tracked.append((("M", j), m & vq))
            for v in sorted(q, key=lambda u: canonical_key(chi_prev[u])):
                tracked.append(
                    (("chi", chi_prev[v]), arcs.out_neighbors(v) & vq)
                )
            sub_sets = [map_into(d, m) for _, m in tracked]
            raw_q = _sum_color(wit.sum, sub_arcs, sub_sets)
            phi_q = {v: raw_q[wit.embed[v]] for v in vq}
            cells = []
            for row, m in tracked:
                for v in m:
                    cells.append((row, phi_q[v]))
            per_clique[q] = (phi_q, TypeMatrix(cells))

        by_type: dict[TypeMatrix, list[frozenset[int]]] = {}
        for q, (_, mat) in per_clique.items():
            by_type.setdefault(mat, []).append(q)
        sigma: dict[frozenset[int], object] = {}
        wit_prev = witnesses[d - 1]
        for mat in sorted(by_type, key=canonical_key):
            qs = sorted(by_type[mat], key=lambda x: sorted(x))
            mapped = [frozenset(wit_prev.embed[v] for v in q) for q in qs]
            tags = tag_cliques(wit_prev.sum, mapped)
            colored = _sum_clique_color_raw(wit_prev.sum, tags)
            for q, mq in zip(qs, mapped):
                sigma[q] = colored[mq]

        for q, (phi_q, mat) in per_clique.items():
            for v in phi_q:
                phi[v] = (phi_q[v], mat, sigma[q], (d + 1) % 3)

    layer_of = layering.layer_of()
    occupied: dict[object, set[int]] = {}
    for v, c in phi.items():
        occupied.setdefault(c, set()).add(layer_of[v])
    renamed: dict[object, int] = {}
    for c in sorted(occupied, key=canonical_key):
        if len(occupied[c]) % 2 == 0:
            renamed[c] = min(occupied[c])
    return {
        v: (c, 1 if c in renamed and layer_of[v] == renamed[c] else 0)
        for v, c in phi.items()
    }


def _disjoint_sum_color(
    s: Sum, arcs: DiGraph, sets: Sequence[frozenset[int]]
) -> dict[int, object]:
    """w = 0 base: disjoint summands, synchronized by summand types."""
    desc = s.desc
    raws = []
    mats = []
    for i, summand in enumerate(desc.summands):
        verts = s.summand_vertices(i)
        loc = s.to_local(i)
        n_local = summand.n(desc.t)
        local_arcs = DiGraph(
            n_local,
            ((loc[a], loc[b]) for a, b in arcs.arcs if a in verts and b in verts),
        )
        local_sets = [frozenset(loc[v] for v in m & verts) for m in sets]
        raw = _summand_color(summand.ktree, summand.path_len, desc.t,
                             local_arcs, local_sets)
        cells = []
        for j, m in enumerate(local_sets):
            for l in m:
                cells.append((("M", j), raw[l]))
        raws.append(raw)
        mats.append(TypeMatrix(cells))

    by_type: dict[TypeMatrix, list[int]] = {}
    for i, mat in enumerate(mats):
        by_type.setdefault(mat, []).append(i)
    sigma: dict[int, object] = {}
    for mat in sorted(by_type, key=canonical_key):
        members = by_type[mat]
        zero_tree = KTreeSeq.make(0, [(x, ()) for x in range(len(members))])
        marks = [
            frozenset(
                idx for idx, i in enumerate(members)
                if sets[j] & s.summand_vertices(i)
            )
            for j in range(len(sets))
        ]
        sig = _tw_color(zero_tree, [DiGraph(len(members))], marks or [frozenset()])
        for idx, i in enumerate(members):
            sigma[i] = sig[idx]

    out: dict[int, object] = {}
    for i in range(len(desc.summands)):
        loc = s.to_local(i)
        for v in s.summand_vertices(i):
            out[v] = (raws[i][loc[v]], mats[i], sigma[i])
    return out


def color_sum(
    desc: SumDesc,
    arcs: DiGraph | None = None,
    sets: Sequence[Iterable[int]] = (),
) -> Coloring:
    """Proper coloring of the (w,k,t)-sum, strong odd on the directed
    subgraph and on every tracked set."""
    s = build_sum(desc)
    arcs = arcs if arcs is not None else DiGraph(s.graph.n)
    sets = [frozenset(m) for m in sets]
    if arcs.n != s.graph.n or not arcs.is_subgraph_of(s.graph):
        raise InputNotSubgraph("directed subgraph leaves the sum")
    for m in sets:
        if any(not (0 <= v < s.graph.n) for v in m):
            raise InputNotSubgraph("tracked set contains a foreign vertex")
    raw = _sum_color(s, arcs, sets)
    coloring = Coloring.from_values(raw)
    assert sum_bound(desc.k, desc.t, len(sets), desc.w).at_least(coloring.num_colors()), \
        "sum coloring exceeded its bound"
    return coloring
