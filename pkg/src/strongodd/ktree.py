"""k-tree construction sequences, BFS layerings, and their validators.

A k-tree is described by its construction sequence: an initial k-clique
(always vertices 0..k-1) followed by steps, each attaching one new vertex to
an existing k-clique.  The sequence is the witness carried through every
layered coloring algorithm; nothing here recognizes tree-like structure in a
raw graph.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from itertools import combinations
from typing import Iterable, Optional, Sequence

from .graphs import Graph


class InvalidStep(ValueError):
    """A declared parent clique is not a clique of the prefix graph."""


@dataclass(frozen=True)
class KTreeSeq:
    """Construction sequence of a k-tree.

    ``initial`` must be exactly the vertices 0..k-1 and step vertices must be
    consecutive from k on.  Clique validity of each step is checked lazily by
    :meth:`graph` / :func:`build_ktree`.
    """

    k: int
    initial: tuple[int, ...]
    steps: tuple[tuple[int, frozenset[int]], ...]

    def __post_init__(self):
        if self.k < 0:
            raise InvalidStep("k must be nonnegative")
        if tuple(self.initial) != tuple(range(self.k)):
            raise InvalidStep("initial clique must be the vertices 0..k-1")
        for i, (v, parents) in enumerate(self.steps):
            if v != self.k + i:
                raise InvalidStep(f"step vertex {v} is not consecutive (expected {self.k + i})")
            if len(parents) != self.k:
                raise InvalidStep(f"step {v}: parent clique has size {len(parents)} != k")
            if any(p >= v for p in parents):
                raise InvalidStep(f"step {v}: parent {max(parents)} not yet inserted")

    @classmethod
    def make(cls, k: int, steps: Iterable[tuple[int, Iterable[int]]]) -> "KTreeSeq":
        return cls(k, tuple(range(k)), tuple((v, frozenset(p)) for v, p in steps))

    @property
    def n(self) -> int:
        return self.k + len(self.steps)

    def parent_clique(self, v: int) -> frozenset[int]:
        """Parent clique of a step vertex; initial vertices have none."""
        if v < self.k:
            raise KeyError(f"vertex {v} is in the initial clique")
        return self.steps[v - self.k][1]

    def represented_clique(self, v: int) -> frozenset[int]:
        """The (k+1)-clique created when step vertex v was attached."""
        return self.parent_clique(v) | {v}


def build_ktree(seq: KTreeSeq) -> Graph:
    """Build the k-tree graph, checking every step clique against the prefix."""
    edges = list(combinations(seq.initial, 2))
    g = Graph(seq.n, ())
    adj: list[set[int]] = [set() for _ in range(seq.n)]
    for u, v in edges:
        adj[u].add(v)
        adj[v].add(u)
    for v, parents in seq.steps:
        for a, b in combinations(sorted(parents), 2):
            if b not in adj[a]:
                raise InvalidStep(f"step {v}: parents {sorted(parents)} are not a clique")
        for p in parents:
            adj[p].add(v)
            adj[v].add(p)
            edges.append((p, v))
    return Graph(seq.n, edges)


@dataclass(frozen=True)
class Layering:
    """Ordered partition of the vertex set into layers."""

    layers: tuple[frozenset[int], ...]
    kind: str  # "bfs" or "natural"

    def layer_of(self) -> dict[int, int]:
        out = {}
        for i, layer in enumerate(self.layers):
            for v in layer:
                out[v] = i
        return out

    def __len__(self):
        return len(self.layers)


def bfs_layering(seq: KTreeSeq) -> Layering:
    """Layers by distance to a virtual root attached to the initial clique.

    The root is never materialized; layer 0 of the result is the set of
    vertices at distance 1 (the initial clique itself).
    """
    if seq.k < 1:
        raise InvalidStep("bfs_layering requires k >= 1")
    g = build_ktree(seq)
    dist = g.bfs_distances(seq.initial)  # distance-to-root minus one
    top = max(d for d in dist if d is not None)
    layers = [set() for _ in range(top + 1)]
    for v, d in enumerate(dist):
        if d is None:  # pragma: no cover - k>=1 k-trees are connected
            raise InvalidStep(f"vertex {v} unreachable from the initial clique")
        layers[d].add(v)
    return Layering(tuple(frozenset(s) for s in layers), "bfs")


@dataclass(frozen=True)
class Completion:
    """A (k-1)-tree completion of a layer slice of a k-tree.

    ``seq`` is the completion's own construction sequence in local ids;
    ``to_local`` maps original vertices into it.  Local ids >= len(vertices)
    that are not images of real vertices are padding.
    """

    seq: KTreeSeq
    to_local: dict[int, int]
    from_local: tuple[Optional[int], ...]

    def graph(self) -> Graph:
        return build_ktree(self.seq)


class CompletionError(ValueError):
    """The slice admits no (k-1)-tree completion along the inherited order."""


def layer_completion(seq: KTreeSeq, vertices: Iterable[int]) -> Completion:
    """Complete a union of same-layer components into a (k-1)-tree.

    Vertices are processed in their original insertion order; each vertex's
    earlier neighbors inside the slice must form a clique of size at most
    k-1 (guaranteed for genuine BFS layers), which is extended to a full
    attachment clique inside the completion being built.
    """
    kk = seq.k - 1
    if kk < 0:
        raise CompletionError("layer completions need k >= 1")
    order = sorted(set(vertices))
    g = build_ktree(seq)
    pos = {v: i for i, v in enumerate(order)}

    m = len(order)
    if m <= kk:
        # Slice fits inside the initial clique of the completion; pad it.
        initial = tuple(range(kk))
        comp_seq = KTreeSeq(kk, initial, ())
        to_local = {v: i for i, v in enumerate(order)}
        from_local = tuple(order[i] if i < m else None for i in range(kk))
        return Completion(comp_seq, to_local, from_local)

    to_local = {v: i for i, v in enumerate(order)}
    from_local = tuple(order)
    steps = []
    # attach_clique[i] for attached local vertex i; initial clique is 0..kk-1
    attach: dict[int, frozenset[int]] = {}
    for i in range(kk, m):
        v = order[i]
        earlier = sorted(
            pos[u] for u in g.neighbors(v) if u in pos and pos[u] < i
        )
        if len(earlier) > kk:
            raise CompletionError(
                f"vertex {v} has {len(earlier)} earlier in-slice neighbors > {kk}"
            )
        s = set(earlier)
        if not s or max(s) < kk:
            # Inside the initial clique (or empty): extend there.
            if not s <= set(range(kk)):  # pragma: no cover - max(s) < kk implies this
                raise CompletionError(f"vertex {v}: earlier neighbors not a clique")
            clique = set(s)
            for c in range(kk):
                if len(clique) == kk:
                    break
                clique.add(c)
        else:
            x = max(s)
            base = attach[x] | {x}
            if not s <= base:
                raise CompletionError(
                    f"vertex {v}: earlier in-slice neighbors do not share a clique"
                )
            clique = set(base)
            for c in sorted(base - s, reverse=True):
                if len(clique) == kk:
                    break
                clique.remove(c)
        attach[i] = frozenset(clique)
        steps.append((i, frozenset(clique)))
    comp_seq = KTreeSeq(kk, tuple(range(kk)), tuple(steps))
    # Sanity: the completion must contain every slice edge.
    comp_g = build_ktree(comp_seq)
    for u in order:
        for w in g.neighbors(u):
            if w in pos and not comp_g.has_edge(pos[u], pos[w]):  # pragma: no cover
                raise CompletionError(f"slice edge ({u},{w}) missing from completion")
    return Completion(comp_seq, to_local, from_local)


@dataclass
class PropertyReport:
    """Outcome of checking a named list of structural properties."""

    results: dict[str, bool] = field(default_factory=dict)
    witnesses: dict[str, object] = field(default_factory=dict)

    @property
    def ok(self) -> bool:
        return all(self.results.values())

    def record(self, name: str, ok: bool, witness: object = None):
        self.results[name] = ok
        if not ok:
            self.witnesses[name] = witness


def _component_parents(g: Graph, layer: frozenset[int], prev: frozenset[int]):
    """Per-component sets of previous-layer vertices with a neighbor inside."""
    sub_adj = {v: g.neighbors(v) & layer for v in layer}
    seen = set()
    out = []
    for s in sorted(layer):
        if s in seen:
            continue
        comp = {s}
        seen.add(s)
        stack = [s]
        while stack:
            u = stack.pop()
            for w in sub_adj[u]:
                if w not in seen:
                    seen.add(w)
                    comp.add(w)
                    stack.append(w)
        parents = frozenset().union(*(g.neighbors(v) & prev for v in comp)) if prev else frozenset()
        out.append((frozenset(comp), parents))
    return out


def validate_bfs_properties(seq: KTreeSeq, layering: Layering) -> PropertyReport:
    """Check the four BFS-layering properties of a k-tree layering.

    B1: first layer is a k-clique.  B2: per-component previous-layer
    neighborhoods are k-cliques.  B3: each layer admits a (k-1)-tree
    completion along the inherited construction order.  B4: edges stay
    within or between consecutive layers.
    """
    g = build_ktree(seq)
    report = PropertyReport()
    layers = layering.layers

    first = layers[0] if layers else frozenset()
    report.record(
        "B1",
        len(first) == seq.k and g.is_clique(first),
        sorted(first),
    )

    b2_ok, b2_witness = True, None
    for i in range(1, len(layers)):
        for comp, parents in _component_parents(g, layers[i], layers[i - 1]):
            if len(parents) != seq.k or not g.is_clique(parents):
                b2_ok, b2_witness = False, (i, sorted(comp), sorted(parents))
                break
        if not b2_ok:
            break
    report.record("B2", b2_ok, b2_witness)

    b3_ok, b3_witness = True, None
    for i, layer in enumerate(layers):
        try:
            layer_completion(seq, layer)
        except CompletionError as exc:
            b3_ok, b3_witness = False, (i, str(exc))
            break
    report.record("B3", b3_ok, b3_witness)

    layer_of = layering.layer_of()
    b4_ok, b4_witness = True, None
    missing = [v for v in range(g.n) if v not in layer_of]
    if missing or sum(len(l) for l in layers) != g.n:
        b4_ok, b4_witness = False, ("not a partition", missing)
    else:
        for u, v in g.edge_list():
            if abs(layer_of[u] - layer_of[v]) > 1:
                b4_ok, b4_witness = False, (u, v)
                break
    report.record("B4", b4_ok, b4_witness)
    return report
