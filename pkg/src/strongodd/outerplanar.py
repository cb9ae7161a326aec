"""Strong odd 8-colorings of outerplanar graphs.

The host must be an edge-maximal outerplanar graph given as a 2-tree
construction sequence whose BFS layering has the path-layer discipline:
every layer is a disjoint union of paths, one per edge of the previous
layer, and each path splits into two subpaths around the unique vertex with
two neighbors below.

The coloring is built layer by layer.  Around each already-colored path
vertex, the two stubs of uncolored children plus seven colored neighbors
form a fixed precolored gadget; a deterministic extension routine colors the
stubs so the center vertex's masked neighborhood is parity-clean while the
coloring stays proper and distance-2-clean along the relevant paths.  The
host is first augmented with two dummy bottom layers and with dummy path
extensions so that every gadget instance is complete; dummies never carry
mask edges and are stripped from the result.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import permutations
from typing import Iterable, Optional, Sequence

from .graphs import Coloring, Graph
from .ktree import KTreeSeq, build_ktree


class NotOuterplanarWitness(ValueError):
    """The 2-tree sequence lacks the outerplanar path-layer structure."""


class PreconditionViolated(ValueError):
    """A gadget precoloring violates the extension routine's assumptions."""


# ---------------------------------------------------------------------------
# The gadget extension routine.
#
# Canonical gadget: triangle x,y,v colored 2,3,5; path [u1,u2,v,w2,w1] with
# u2=1, w2=4 and free colors i=psi(u1), j=psi(w1); two uncolored stubs
# hanging off v: u3..  (adjacent u2) and w3..  (adjacent w2), every stub
# vertex adjacent to v.  Canonical vertex ids:
X, Y, V, U1, U2, W2, W1 = range(7)


@dataclass(frozen=True)
class ClaimGadget:
    """Shape and precoloring of one extension instance."""

    u_len: int
    w_len: int
    u1_color: int
    w1_color: int

    def __post_init__(self):
        if self.u_len < 2 or self.w_len < 2:
            raise PreconditionViolated("stubs need at least two vertices each")
        if not (1 <= self.u1_color <= 8 and 1 <= self.w1_color <= 8):
            raise PreconditionViolated("colors must lie in 1..8")
        if self.u1_color in (1, 2, 5):
            raise PreconditionViolated(f"u1 color {self.u1_color} clashes on its path")
        if self.w1_color in (3, 4, 5):
            raise PreconditionViolated(f"w1 color {self.w1_color} clashes on its path")

    def u_vertex(self, r: int) -> int:
        return 7 + r

    def w_vertex(self, r: int) -> int:
        return 7 + self.u_len + r

    @property
    def n(self) -> int:
        return 7 + self.u_len + self.w_len


def gadget_graph(g: ClaimGadget) -> Graph:
    edges = [
        (X, Y), (X, V), (Y, V),
        (X, U1), (X, U2), (U1, U2), (U2, V),
        (V, W2), (W2, W1), (Y, W2), (Y, W1),
    ]
    prev = U2
    for r in range(g.u_len):
        u = g.u_vertex(r)
        edges += [(prev, u), (V, u)]
        prev = u
    prev = W2
    for r in range(g.w_len):
        w = g.w_vertex(r)
        edges += [(prev, w), (V, w)]
        prev = w
    return Graph(g.n, edges)


from functools import lru_cache


@lru_cache(maxsize=None)
def _rename_high(i: int, j: int) -> dict[int, int]:
    """Permutation of {6,7,8} (identity elsewhere) making i != 6 and j != 8."""
    for perm in permutations((6, 7, 8)):
        pi = {6: perm[0], 7: perm[1], 8: perm[2]}
        if pi.get(i, i) != 6 and pi.get(j, j) != 8:
            out = {c: c for c in range(1, 6)}
            out.update(pi)
            return out
    raise AssertionError("no admissible renaming")  # pragma: no cover


@lru_cache(maxsize=None)
def _prelim_pattern(p: int, q: int):
    """Preliminary stub colors plus per-class bitmasks over the vmask bits."""
    ucol = tuple((6, 7, 8)[r % 3] for r in range(p))
    wcol = tuple((8, 7, 6)[r % 3] for r in range(q))
    masks = {6: 0, 7: 0, 8: 0}
    for r, col in enumerate(ucol):
        masks[col] |= 1 << (4 + r)
    for r, col in enumerate(wcol):
        masks[col] |= 1 << (4 + p + r)
    return ucol, wcol, masks[6], masks[7], masks[8]


def _check_extension(
    i: int, j: int, p: int, q: int, vmask: int,
    ucol: Sequence[int], wcol: Sequence[int],
) -> bool:
    """All five postconditions on a candidate stub coloring."""
    if ucol[0] == 2 or wcol[0] == 3:
        return False
    if i == ucol[0] or 1 == ucol[0] or (p > 1 and 1 == ucol[1]):
        return False
    if j == wcol[0] or 4 == wcol[0] or (q > 1 and 4 == wcol[1]):
        return False
    for col, r2, r3 in ((ucol, p, 0), (wcol, q, 0)):
        for r in range(r2):
            c = col[r]
            if c == 5:
                return False
            if r + 1 < r2 and c == col[r + 1]:
                return False
            if r + 2 < r2 and c == col[r + 2]:
                return False
    counts = [0] * 9
    if vmask & 1:
        counts[2] += 1
    if vmask >> 1 & 1:
        counts[3] += 1
    if vmask >> 2 & 1:
        counts[1] += 1
    if vmask >> 3 & 1:
        counts[4] += 1
    for r in range(p):
        if vmask >> (4 + r) & 1:
            counts[ucol[r]] += 1
    for r in range(q):
        if vmask >> (4 + p + r) & 1:
            counts[wcol[r]] += 1
    return all(cnt % 2 == 1 for cnt in counts if cnt)


def _repair_candidates(i, j, p, q, vmask, ucol0, wcol0):
    """Candidate repairs of the preliminary 6,7,8 pattern, paper-first.

    Yields (ucol, wcol) lists.  Colors 6 and 8 retire into the {3,4} / {1,2}
    palette wholesale or by one adjacent member; color 7 splits over the two
    remaining low colors with anchored stubs.  The paper's fixed choice comes
    first; remaining combinations cover the corner cases where precolored
    neighbors flip a parity.
    """
    def positions(color):
        out = [r for r in range(p) if ucol0[r] == color]
        out += [p + r for r in range(q) if wcol0[r] == color]
        return out

    def adjacent(r):
        return bool(vmask >> (4 + r) & 1)

    pos6, pos7, pos8 = positions(6), positions(7), positions(8)
    adj6 = [r for r in pos6 if adjacent(r)]
    adj7 = [r for r in pos7 if adjacent(r)]
    adj8 = [r for r in pos8 if adjacent(r)]
    fix6 = len(adj6) > 0 and len(adj6) % 2 == 0
    fix7 = len(adj7) > 0 and len(adj7) % 2 == 0
    fix8 = len(adj8) > 0 and len(adj8) % 2 == 0

    default_a = 3 if i != 3 else 4
    default_b = 1 if j != 1 else 2
    a_orders = [(default_a, 7 - default_a), (7 - default_a, default_a)]
    b_orders = [(default_b, 3 - default_b), (3 - default_b, default_b)]

    for a, c in a_orders:
        prec_a = (vmask >> 1 & 1) if a == 3 else (vmask >> 3 & 1)
        if not fix6:
            acts6 = [None]
        elif prec_a:
            acts6 = [("all", a)] + [("move", a, m) for m in adj6]
        else:
            acts6 = [("move", a, m) for m in adj6] + [("all", a)]
        for b, d in b_orders:
            prec_b = (vmask >> 2 & 1) if b == 1 else (vmask & 1)
            if not fix8:
                acts8 = [None]
            elif prec_b:
                acts8 = [("all", b)] + [("move", b, m) for m in adj8]
            else:
                acts8 = [("move", b, m) for m in adj8] + [("all", b)]
            if not fix7:
                splits = [None]
            else:
                anchor_u, anchor_w = 1, p + 1
                free_adj = [r for r in adj7 if r not in (anchor_u, anchor_w)]
                splits = []
                for u4_side, w4_side in ((c, d), (c, c), (d, d), (d, c)):
                    for extra in range(len(free_adj) + 1):
                        splits.append((u4_side, w4_side, extra))
            for act6 in acts6:
                for act8 in acts8:
                    for split in splits:
                        u = list(ucol0)
                        w = list(wcol0)

                        def setcol(r, col):
                            if r < p:
                                u[r] = col
                            else:
                                w[r - p] = col

                        if act6 is not None:
                            if act6[0] == "all":
                                for r in pos6:
                                    setcol(r, act6[1])
                            else:
                                setcol(act6[2], act6[1])
                        if act8 is not None:
                            if act8[0] == "all":
                                for r in pos8:
                                    setcol(r, act8[1])
                            else:
                                setcol(act8[2], act8[1])
                        if split is not None:
                            u4_side, w4_side, extra = split
                            anchor_u, anchor_w = 1, p + 1
                            free_adj = [r for r in adj7
                                        if r not in (anchor_u, anchor_w)]
                            setcol(anchor_u, u4_side)
                            setcol(anchor_w, w4_side)
                            chosen = set(free_adj[:extra])
                            for r in pos7:
                                if r in (anchor_u, anchor_w):
                                    continue
                                if r in chosen:
                                    setcol(r, c)
                                elif r in free_adj:
                                    setcol(r, d)
                                else:
                                    setcol(r, c if r < p else d)
                        yield u, w


def _dfs_extension(i, j, p, q, vmask):
    """Exhaustive fallback: color the stubs directly under all constraints."""
    pu = [i, 1]
    pw = [j, 4]

    def masked_positions():
        out = []
        if vmask & 1:
            out.append((None, 2))
        if vmask >> 1 & 1:
            out.append((None, 3))
        if vmask >> 2 & 1:
            out.append((None, 1))
        if vmask >> 3 & 1:
            out.append((None, 4))
        return out

    base = masked_positions()
    total = p + q

    def rec(idx, counts):
        if idx == total:
            return [] if all(cnt % 2 == 1 for cnt in counts if cnt) else None
        on_u = idx < p
        path = pu if on_u else pw
        r = idx if on_u else idx - p
        forbidden = {5, path[-1]}
        if len(path) >= 2:
            forbidden.add(path[-2])
        if r == 0:
            forbidden.add(2 if on_u else 3)
        adjacent = bool(vmask >> (4 + idx) & 1)
        for col in range(1, 9):
            if col in forbidden:
                continue
            path.append(col)
            if adjacent:
                counts[col] += 1
            rest = rec(idx + 1, counts)
            if adjacent:
                counts[col] -= 1
            path.pop()
            if rest is not None:
                return [col] + rest
        return None

    counts = [0] * 9
    for _, col in base:
        counts[col] += 1
    return rec(0, counts)


@lru_cache(maxsize=None)
def _prelim_renamed(p: int, q: int, inv_key: tuple):
    ucol, wcol, _, _, _ = _prelim_pattern(p, q)
    inv = dict(inv_key)
    return (tuple(inv.get(c, c) for c in ucol), tuple(inv.get(c, c) for c in wcol))


def _extend_core(
    i: int, j: int, p: int, q: int, vmask: int
) -> tuple[tuple[int, ...], tuple[int, ...]]:
    """Color the stubs.  ``vmask`` packs which center edges are masked in:
    bit 0 v-x, bit 1 v-y, bit 2 v-u2, bit 3 v-w2, bits 4.. the u stub, then
    the w stub.  Returns stub colors in canonical palette."""
    pi = _rename_high(i, j)
    inv_key = tuple(sorted((v, k) for k, v in pi.items() if k != v))
    ri, rj = pi.get(i, i), pi.get(j, j)

    ucol0, wcol0, m6, m7, m8 = _prelim_pattern(p, q)
    n6 = (vmask & m6).bit_count()
    n7 = (vmask & m7).bit_count()
    n8 = (vmask & m8).bit_count()
    if (n6 % 2 or not n6) and (n7 % 2 or not n7) and (n8 % 2 or not n8):
        # The preliminary pattern is proper and distance-2-clean by shape;
        # the precolored neighbors contribute at most one each, so parity at
        # the center reduces to these three class counts.
        return _prelim_renamed(p, q, inv_key)

    ucol0, wcol0 = list(ucol0), list(wcol0)
    for u, w in _repair_candidates(ri, rj, p, q, vmask, ucol0, wcol0):
        if _check_extension(ri, rj, p, q, vmask, u, w):
            break
    else:
        flat = _dfs_extension(ri, rj, p, q, vmask)
        assert flat is not None, "gadget admits no valid extension"
        u, w = flat[:p], flat[p:]
    inv = dict(inv_key)
    return (
        tuple(inv.get(col, col) for col in u),
        tuple(inv.get(col, col) for col in w),
    )


def claim_extend(g: ClaimGadget, mask_edges: Iterable[tuple[int, int]]) -> Coloring:
    """Extend the gadget precoloring over the stubs.

    The result is proper on the gadget, distance-2-clean on both mixed
    paths, parity-clean at the center vertex for the masked edges, and the
    first stub vertices avoid the colors of x and y respectively.
    """
    host = gadget_graph(g)
    mask = set()
    for u, v in mask_edges:
        if not host.has_edge(u, v):
            raise PreconditionViolated(f"mask edge ({u},{v}) is not a gadget edge")
        mask.add((u, v) if u < v else (v, u))

    def masked(a: int, bvert: int) -> bool:
        return ((a, bvert) if a < bvert else (bvert, a)) in mask

    vmask = (
        masked(V, X) | masked(V, Y) << 1 | masked(V, U2) << 2 | masked(V, W2) << 3
    )
    for r in range(g.u_len):
        vmask |= masked(V, g.u_vertex(r)) << (4 + r)
    for r in range(g.w_len):
        vmask |= masked(V, g.w_vertex(r)) << (4 + g.u_len + r)
    ucol, wcol = _extend_core(g.u1_color, g.w1_color, g.u_len, g.w_len, vmask)
    assignment = {X: 2, Y: 3, V: 5, U1: g.u1_color, U2: 1, W2: 4, W1: g.w1_color}
    for r, col in enumerate(ucol):
        assignment[g.u_vertex(r)] = col
    for r, col in enumerate(wcol):
        assignment[g.w_vertex(r)] = col
    return Coloring(assignment)


# ---------------------------------------------------------------------------
# Structure validation of the witness sequence.


def _path_components(g: Graph, layer: frozenset[int]) -> list[list[int]]:
    """Split a layer into its paths; raise if any component is not a path."""
    sub = {v: sorted(g.neighbors(v) & layer) for v in layer}
    for v, nb in sub.items():
        if len(nb) > 2:
            raise NotOuterplanarWitness(f"layer vertex {v} has {len(nb)} in-layer neighbors")
    comps = []
    seen: set[int] = set()
    for s in sorted(layer):
        if s in seen:
            continue
        comp = {s}
        stack = [s]
        seen.add(s)
        while stack:
            u = stack.pop()
            for w in sub[u]:
                if w not in seen:
                    seen.add(w)
                    comp.add(w)
                    stack.append(w)
        ends = [v for v in comp if len(sub[v]) <= 1]
        if len(comp) == 1:
            comps.append([next(iter(comp))])
            continue
        if len(ends) != 2:
            raise NotOuterplanarWitness(f"layer component {sorted(comp)} is not a path")
        cur, prev = min(ends), None
        path = [cur]
        while len(path) < len(comp):
            nxt = [w for w in sub[cur] if w != prev]
            if len(nxt) != 1:
                raise NotOuterplanarWitness(f"layer component {sorted(comp)} is not a path")
            prev, cur = cur, nxt[0]
            path.append(cur)
        comps.append(path)
    return comps


def validate_outerplanar_structure(seq: KTreeSeq) -> None:
    """Check the path-layer structure the coloring relies on."""
    if seq.k != 2:
        raise NotOuterplanarWitness("witness must be a 2-tree sequence")
    from .ktree import bfs_layering

    g = build_ktree(seq)
    layering = bfs_layering(seq)
    layers = layering.layers
    if len(layers[0]) != 2 or not g.is_clique(layers[0]):
        raise NotOuterplanarWitness("first layer is not an edge")
    for idx in range(1, len(layers)):
        prev = layers[idx - 1]
        claimed_edges = set()
        for path in _path_components(g, layers[idx]):
            below = {v: g.neighbors(v) & prev for v in path}
            anchors = frozenset().union(*below.values())
            if len(anchors) != 2 or not g.is_clique(anchors):
                raise NotOuterplanarWitness(
                    f"path {path} hangs below {sorted(anchors)}, not an edge"
                )
            if anchors in claimed_edges:
                raise NotOuterplanarWitness(
                    f"edge {sorted(anchors)} carries two layer paths"
                )
            claimed_edges.add(anchors)
            shared = [v for v in path if len(below[v]) == 2]
            if len(shared) != 1:
                raise NotOuterplanarWitness(
                    f"path {path} has {len(shared)} vertices with two neighbors below"
                )
            if any(len(below[v]) == 0 for v in path):
                raise NotOuterplanarWitness(f"path {path} has a floating vertex")
            s = path.index(shared[0])
            left, right = path[:s], path[s + 1:]
            # One side is all-x, the other all-y (either orientation).
            def side_anchor(side):
                seen_anchors = {next(iter(below[v])) for v in side}
                return seen_anchors

            la, ra = side_anchor(left), side_anchor(right)
            if len(la) > 1 or len(ra) > 1 or (la and la == ra):
                raise NotOuterplanarWitness(f"path {path} mixes its two subpaths")


# ---------------------------------------------------------------------------
# The augmented host and the layer-by-layer driver.


class _Host:
    """Mutable augmented 2-tree: the original host on top of two dummy
    layers, extended with path and stub padding as instances require."""

    OFFSET = 5  # dummy ids 0..4: bottom edge a,b; middle path d,v*,e

    def __init__(self, seq: KTreeSeq):
        self.parents: list[Optional[tuple[int, int]]] = [None, None]
        self.adj: list[set[int]] = [set(), set()]
        self.dist: list[int] = [1, 1]
        self.childs: dict[tuple[int, int], list[int]] = {}
        self._edge(0, 1)
        self.attach(0, 1)          # 2 = middle shared
        self.attach(0, 2)          # 3 = middle x-side
        self.attach(1, 2)          # 4 = middle y-side
        self.attach(2, 3)          # 5 = original initial vertex 0
        self.attach(2, 5)          # 6 = original initial vertex 1
        for v, ps in seq.steps:
            a, b = sorted(ps)
            self.attach(a + self.OFFSET, b + self.OFFSET)
        self.n_real = seq.n

    def _edge(self, a: int, b: int):
        self.adj[a].add(b)
        self.adj[b].add(a)

    def attach(self, a: int, b: int) -> int:
        if b not in self.adj[a]:
            raise NotOuterplanarWitness(f"attachment pair ({a},{b}) is not an edge")
        v = len(self.adj)
        self.adj.append(set())
        self.parents.append((a, b) if a < b else (b, a))
        self.dist.append(1 + min(self.dist[a], self.dist[b]))
        self._edge(v, a)
        self._edge(v, b)
        key = (a, b) if a < b else (b, a)
        self.childs.setdefault(key, []).append(v)
        return v

    def children_of(self, a: int, b: int) -> list[int]:
        return self.childs.get((a, b) if a < b else (b, a), [])

    def chain(self, start: int, anchor: int) -> list[int]:
        """Successive children of (current, anchor) starting at ``start``."""
        out = []
        cur = start
        while True:
            kids = self.children_of(cur, anchor)
            assert len(kids) <= 1, "branching chain; host is not simple"
            if not kids:
                return out
            cur = kids[0]
            out.append(cur)

    def layers(self) -> list[list[int]]:
        top = max(self.dist)
        out: list[list[int]] = [[] for _ in range(top)]
        for v, dv in enumerate(self.dist):
            out[dv - 1].append(v)
        return out


@dataclass
class _Instance:
    center: int
    x: int
    y: int
    u1: int
    u2: int
    w2: int
    w1: int
    u_ext: list[int]
    w_ext: list[int]


def _plan_path(host: _Host, shared: int, x: int, y: int) -> Optional[list[_Instance]]:
    """Plan the sweep over one layer path, padding as needed.

    Returns the instance list in processing order (0, +1.., then -1..), or
    None when no vertex of the path has children to color.
    """
    left = host.chain(shared, x)   # negative side, outward
    right = host.chain(shared, y)  # positive side, outward

    def path_at(t: int) -> Optional[int]:
        if t == 0:
            return shared
        if t > 0:
            return right[t - 1] if t - 1 < len(right) else None
        return left[-t - 1] if -t - 1 < len(left) else None

    def edge_at(t: int) -> Optional[tuple[int, int]]:
        a, b = path_at(t), path_at(t + 1)
        return None if a is None or b is None else (a, b)

    def stub(t: int) -> tuple[Optional[int], list[int], list[int]]:
        """Child path of edge (p_t, p_{t+1}): shared child, t-side, (t+1)-side."""
        e = edge_at(t)
        if e is None:
            return None, [], []
        kids = host.children_of(*e)
        assert len(kids) <= 1, "two shared children on one edge"
        if not kids:
            return None, [], []
        s = kids[0]
        return s, host.chain(s, e[0]), host.chain(s, e[1])

    # Responsibilities: the shared child and near side of edge (t, t+1) go to
    # the instance closer to position 0, the far side to the other one.
    lo = -len(left)
    hi = len(right)
    resp: dict[int, int] = {}
    for t in range(lo, hi):
        s, near_t, near_t1 = stub(t)
        count = (0 if s is None else 1) + len(near_t) + len(near_t1)
        if count == 0:
            continue
        closer, farther = (t, t + 1) if t >= 0 else (t + 1, t)
        closer_side = near_t if closer == t else near_t1
        farther_side = near_t1 if closer == t else near_t
        if s is not None or closer_side:
            resp[closer] = resp.get(closer, 0) + 1 + len(closer_side)
        if farther_side:
            resp[farther] = resp.get(farther, 0) + len(farther_side)
    if not resp:
        return None
    t_min = min(min(resp), 0)
    t_max = max(max(resp), 0)

    # Path padding: two vertices beyond each processed end.
    while len(right) < t_max + 2:
        end = right[-1] if right else shared
        right.append(host.attach(end, y))
    while len(left) < -t_min + 2:
        end = left[-1] if left else shared
        left.append(host.attach(end, x))

    def grown_stub(t: int, need_shared: bool, need_near: int, need_far: int):
        e = edge_at(t)
        assert e is not None
        s, near, far = stub(t)
        if s is None and (need_shared or need_near or need_far):
            s = host.attach(*e)
            near, far = [], []
        while len(near) < need_near:
            prev = near[-1] if near else s
            near.append(host.attach(prev, e[0]))
        while len(far) < need_far:
            prev = far[-1] if far else s
            far.append(host.attach(prev, e[1]))
        return s, near, far

    # Stub padding per instance, then assemble.
    for t in range(0, t_max + 1):
        grown_stub(t, True, 1, 2 if t + 1 <= t_max else 0)
    grown_stub(-1, True, 0, 1)  # edge (-1, 0): shared + one on the 0 side
    for t in range(-1, t_min - 1, -1):
        grown_stub(t, True, 2, 1)      # u-ext on the t side, anchor on the t+1 side
        grown_stub(t - 1, True, 0, 1)  # w-ext: shared + one on the t side

    instances = []
    for t in list(range(0, t_max + 1)) + list(range(-1, t_min - 1, -1)):
        if t == 0:
            s_l, near_l, far_l = stub(-1)   # edge (p_-1, p_0)
            s_r, near_r, far_r = stub(0)    # edge (p_0, p_1)
            inst = _Instance(
                center=shared, x=x, y=y,
                u1=path_at(-2), u2=path_at(-1), w2=path_at(1), w1=path_at(2),
                u_ext=[s_l] + far_l, w_ext=[s_r] + near_r,
            )
        elif t > 0:
            s_l, near_l, far_l = stub(t - 1)
            s_r, near_r, far_r = stub(t)
            inst = _Instance(
                center=path_at(t), x=path_at(t - 1), y=y,
                u1=near_l[0], u2=s_l, w2=path_at(t + 1), w1=path_at(t + 2),
                u_ext=list(far_l), w_ext=[s_r] + near_r,
            )
        else:
            s_r, near_r, far_r = stub(t)      # edge (p_t, p_{t+1})
            s_l, near_l, far_l = stub(t - 1)  # edge (p_{t-1}, p_t)
            inst = _Instance(
                center=path_at(t), x=path_at(t + 1), y=x,
                u1=far_r[0], u2=s_r, w2=path_at(t - 1), w1=path_at(t - 2),
                u_ext=list(near_r), w_ext=[s_l] + far_l,
            )
        assert len(inst.u_ext) >= 2 and len(inst.w_ext) >= 2, "stub padding failed"
        assert None not in (inst.u1, inst.u2, inst.w2, inst.w1), "path padding failed"
        instances.append(inst)
    return instances


def color_outerplanar(seq: KTreeSeq, mask: Iterable[tuple[int, int]] | Graph) -> Coloring:
    """8-coloring of the host whose restriction to the masked subgraph is
    strong odd.  ``mask`` is the subgraph's edge set (or a Graph on the host's
    vertices with a subset of its edges)."""
    validate_outerplanar_structure(seq)
    host_graph = build_ktree(seq)
    if isinstance(mask, Graph):
        if mask.n != host_graph.n:
            raise NotOuterplanarWitness("mask graph has a different vertex count")
        mask_edges = mask.edges
    else:
        mask_edges = frozenset(tuple(sorted(e)) for e in mask)
    for u, v in mask_edges:
        if not host_graph.has_edge(u, v):
            raise NotOuterplanarWitness(f"mask edge ({u},{v}) is not a host edge")

    host = _Host(seq)
    off = _Host.OFFSET
    masked = {(u + off, v + off) for u, v in mask_edges}

    def in_mask(a: int, b: int) -> bool:
        return (a, b) in masked or (b, a) in masked

    # Plan instances layer by layer, top down, so padding at one layer is
    # visible to the spans of the layer below before its plan is drawn.
    plans: dict[int, list[_Instance]] = {}
    layer_count = len(host.layers())
    for idx in range(layer_count - 1, 0, -1):
        layer = set(host.layers()[idx]) if idx < len(host.layers()) else set()
        plan = []
        shareds = []
        for v in sorted(layer):
            a, b = host.parents[v]
            if host.dist[a] == host.dist[b] == host.dist[v] - 1:
                shareds.append((v, a, b))
        for v, a, b in shareds:
            x, y = (a, b) if a < b else (b, a)
            instances = _plan_path(host, v, x, y)
            if instances:
                plan.extend(instances)
        if plan:
            plans[idx] = plan

    psi: dict[int, int] = {0: 1, 1: 2}
    # Middle layer: 3,4,5 repeated along the (possibly padded) path.
    middle = host.chain(2, 0)[::-1] + [2] + host.chain(2, 1)
    for pos, v in enumerate(middle):
        psi[v] = 3 + pos % 3

    for idx in sorted(plans):
        for inst in plans[idx]:
            _apply_instance(host, inst, psi, in_mask)

    out = {}
    for v in range(seq.n):
        out[v] = psi[v + off]
    return Coloring(out)


def _apply_instance(host: _Host, inst: _Instance, psi: dict[int, int], in_mask) -> None:
    slots = [inst.x, inst.y, inst.center, inst.u2, inst.w2]
    cols = [psi[s] for s in slots]
    assert len(set(cols)) == 5, f"precolored slots collide: {cols}"
    canonical = {inst.x: 2, inst.y: 3, inst.center: 5, inst.u2: 1, inst.w2: 4}
    rename = {psi[s]: canonical[s] for s in slots}
    free = sorted(set(range(1, 9)) - set(rename))
    free_targets = sorted(set(range(1, 9)) - set(rename.values()))
    for src, dst in zip(free, free_targets):
        rename[src] = dst
    inverse = {dst: src for src, dst in rename.items()}
    i = rename[psi[inst.u1]]
    j = rename[psi[inst.w1]]
    assert i not in (1, 2, 5), "u1 precondition violated"
    assert j not in (3, 4, 5), "w1 precondition violated"

    v = inst.center
    vmask = (
        in_mask(v, inst.x)
        | in_mask(v, inst.y) << 1
        | in_mask(v, inst.u2) << 2
        | in_mask(v, inst.w2) << 3
    )
    p, q = len(inst.u_ext), len(inst.w_ext)
    for r, u in enumerate(inst.u_ext):
        vmask |= in_mask(v, u) << (4 + r)
    for r, w in enumerate(inst.w_ext):
        vmask |= in_mask(v, w) << (4 + p + r)
    ucol, wcol = _extend_core(i, j, p, q, vmask)
    for u, col in zip(inst.u_ext, ucol):
        assert u not in psi, "stub vertex colored twice"
        psi[u] = inverse[col]
    for w, col in zip(inst.w_ext, wcol):
        assert w not in psi, "stub vertex colored twice"
        psi[w] = inverse[col]
