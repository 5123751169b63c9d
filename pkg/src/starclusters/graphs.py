"""Finite simple graphs on nonnegative integer labels.

A :class:`Graph` is immutable once built. Every operation here is a pure
function returning a new graph, and every list-valued result is returned in
canonical (sorted) order so outputs are reproducible byte for byte.
"""

from __future__ import annotations

import math
from collections import deque
from itertools import combinations
from typing import Dict, Hashable, Iterable, List, Optional, Sequence, Tuple

from .exceptions import GraphError, HypothesisViolation, InstanceTooLarge

Edge = Tuple[int, int]

DEFAULT_CHROMATIC_CAP = 20
UNREACHABLE = math.inf


class Graph:
    """Simple undirected graph stored as adjacency sets.

    ``tags`` is an optional provenance map from vertex label to whatever the
    constructing code wants to remember about it (the pair of endpoints of a
    subdivided edge, a lattice point, a 2-subset...). Tags take no part in
    equality.
    """

    def __init__(self, adjacency: Dict[int, Iterable[int]], tags: Optional[Dict[int, Hashable]] = None):
        adj = {}
        for v, nbrs in adjacency.items():
            _check_label(v)
            adj[v] = frozenset(nbrs)
        for v, nbrs in adj.items():
            for w in nbrs:
                if w == v:
                    raise GraphError(f"self-loop at vertex {v}")
                if w not in adj:
                    raise GraphError(f"edge ({v}, {w}) has undeclared endpoint {w}")
                if v not in adj[w]:
                    raise GraphError(f"adjacency is not symmetric on ({v}, {w})")
        self._adj = adj
        self._vertices = tuple(sorted(adj))
        self.tags = dict(tags) if tags else {}
        self._index = None
        self._masks = None

    @classmethod
    def from_edge_list(cls, vertices: Iterable[int], edges: Iterable[Sequence[int]], tags=None) -> "Graph":
        adj: Dict[int, set] = {}
        for v in vertices:
            _check_label(v)
            if v in adj:
                raise GraphError(f"duplicate vertex label {v}")
            adj[v] = set()
        for e in edges:
            u, w = _as_pair(e)
            if u == w:
                raise GraphError(f"self-loop at vertex {u}")
            for x in (u, w):
                if x not in adj:
                    raise GraphError(f"edge ({u}, {w}) has undeclared endpoint {x}")
            adj[u].add(w)
            adj[w].add(u)
        return cls(adj, tags)

    @property
    def vertices(self) -> Tuple[int, ...]:
        return self._vertices

    @property
    def edges(self) -> Tuple[Edge, ...]:
        return tuple(sorted((u, w) for u in self._vertices for w in self._adj[u] if u < w))

    def neighbors(self, v: int) -> frozenset:
        try:
            return self._adj[v]
        except KeyError:
            raise GraphError(f"unknown vertex {v}") from None

    def degree(self, v: int) -> int:
        return len(self.neighbors(v))

    def max_degree(self) -> int:
        return max((len(n) for n in self._adj.values()), default=0)

    def has_edge(self, u: int, w: int) -> bool:
        return w in self._adj.get(u, ())

    def num_edges(self) -> int:
        return sum(len(n) for n in self._adj.values()) // 2

    def is_independent(self, vertex_set: Iterable[int]) -> bool:
        vs = list(vertex_set)
        return all(not self.has_edge(a, b) for a, b in combinations(vs, 2))

    def fresh_label(self) -> int:
        return self._vertices[-1] + 1 if self._vertices else 0

    def __len__(self):
        return len(self._vertices)

    def __contains__(self, v):
        return v in self._adj

    def __iter__(self):
        return iter(self._vertices)

    def __eq__(self, other):
        if not isinstance(other, Graph):
            return NotImplemented
        return self._adj == other._adj

    def __hash__(self):
        return hash((self._vertices, self.edges))

    def __repr__(self):
        return f"Graph(vertices={list(self._vertices)}, edges={[list(e) for e in self.edges]})"

    def to_dict(self) -> dict:
        return {"vertices": list(self._vertices), "edges": [list(e) for e in self.edges]}

    # bitmask view, indexed by position in ``vertices``; cached since graphs are immutable
    def index(self) -> Dict[int, int]:
        if self._index is None:
            self._index = {v: i for i, v in enumerate(self._vertices)}
        return self._index

    def adjacency_masks(self) -> Tuple[int, ...]:
        if self._masks is None:
            idx = self.index()
            masks = []
            for v in self._vertices:
                m = 0
                for w in self._adj[v]:
                    m |= 1 << idx[w]
                masks.append(m)
            self._masks = tuple(masks)
        return self._masks

    def mask_to_vertices(self, mask: int) -> Tuple[int, ...]:
        out = []
        i = 0
        while mask:
            if mask & 1:
                out.append(self._vertices[i])
            mask >>= 1
            i += 1
        return tuple(out)

    def vertices_to_mask(self, vertex_set: Iterable[int]) -> int:
        idx = self.index()
        m = 0
        for v in vertex_set:
            if v not in idx:
                raise GraphError(f"unknown vertex {v}")
            m |= 1 << idx[v]
        return m


def _check_label(v):
    if isinstance(v, bool) or not isinstance(v, int) or v < 0:
        raise GraphError(f"vertex labels must be nonnegative integers, got {v!r}")


def _as_pair(e) -> Edge:
    try:
        u, w = e
    except (TypeError, ValueError):
        raise GraphError(f"edge {e!r} is not a pair") from None
    return u, w


def empty_graph(vertices: Iterable[int] = ()) -> Graph:
    return Graph.from_edge_list(vertices, [])


def complement(G: Graph) -> Graph:
    vs = set(G.vertices)
    return Graph({v: vs - G.neighbors(v) - {v} for v in G.vertices}, G.tags)


def line_graph(G: Graph) -> Graph:
    """Edge graph: one vertex per edge of ``G``, labelled 0, 1, ... in sorted
    edge order, with the original endpoint pair kept in ``tags``."""
    edges = G.edges
    incident: Dict[int, List[int]] = {v: [] for v in G.vertices}
    for i, (a, b) in enumerate(edges):
        incident[a].append(i)
        incident[b].append(i)
    adj = {i: set() for i in range(len(edges))}
    for ids in incident.values():
        for i, j in combinations(ids, 2):
            adj[i].add(j)
            adj[j].add(i)
    return Graph(adj, {i: e for i, e in enumerate(edges)})


def induced_subgraph(G: Graph, vertex_set: Iterable[int]) -> Graph:
    keep = set(vertex_set)
    for v in keep:
        if v not in G:
            raise GraphError(f"unknown vertex {v}")
    tags = {v: t for v, t in G.tags.items() if v in keep}
    return Graph({v: G.neighbors(v) & keep for v in keep}, tags)


def delete_vertices(G: Graph, vertex_set: Iterable[int]) -> Graph:
    drop = set(vertex_set)
    return induced_subgraph(G, [v for v in G.vertices if v not in drop])


def relabel(G: Graph, mapping: Dict[int, int]) -> Graph:
    """Rename vertices through an injective ``mapping`` (missing keys map to themselves)."""
    f = {v: mapping.get(v, v) for v in G.vertices}
    if len(set(f.values())) != len(f):
        raise GraphError("relabelling is not injective")
    tags = {f[v]: t for v, t in G.tags.items() if v in f}
    return Graph({f[v]: {f[w] for w in G.neighbors(v)} for v in G.vertices}, tags)


def disjoint_union(G: Graph, H: Graph) -> Graph:
    """``G`` plus a copy of ``H`` shifted above the largest label of ``G``."""
    offset = G.fresh_label()
    H2 = relabel(H, {v: v + offset for v in H.vertices})
    adj = {v: G.neighbors(v) for v in G.vertices}
    adj.update({v: H2.neighbors(v) for v in H2.vertices})
    tags = dict(G.tags)
    tags.update(H2.tags)
    return Graph(adj, tags)


def is_subgraph(H: Graph, G: Graph) -> bool:
    return all(v in G for v in H.vertices) and all(G.has_edge(a, b) for a, b in H.edges)


def find_claw(G: Graph) -> Optional[Tuple[int, Tuple[int, int, int]]]:
    """Return ``(center, leaves)`` of an induced K_{1,3}, or None."""
    for v in G.vertices:
        nbrs = sorted(G.neighbors(v))
        if len(nbrs) < 3:
            continue
        for a, b, c in combinations(nbrs, 3):
            if not (G.has_edge(a, b) or G.has_edge(a, c) or G.has_edge(b, c)):
                return v, (a, b, c)
    return None


def is_claw_free(G: Graph) -> bool:
    return find_claw(G) is None


def is_triangle_free(G: Graph) -> bool:
    return all(G.is_independent(G.neighbors(v)) for v in G.vertices)


def vertex_in_no_triangle(G: Graph) -> Optional[int]:
    """Smallest vertex whose neighbourhood is independent."""
    for v in G.vertices:
        if G.is_independent(G.neighbors(v)):
            return v
    return None


def bfs_distances(G: Graph, source: int) -> Dict[int, int]:
    dist = {source: 0}
    queue = deque([source])
    while queue:
        u = queue.popleft()
        for w in G.neighbors(u):
            if w not in dist:
                dist[w] = dist[u] + 1
                queue.append(w)
    return dist


def distance_matrix(G: Graph) -> List[List[float]]:
    """Hop distances in ``G.vertices`` order; unreachable pairs hold ``math.inf``."""
    rows = []
    for v in G.vertices:
        d = bfs_distances(G, v)
        rows.append([d.get(w, UNREACHABLE) for w in G.vertices])
    return rows


def is_connected(G: Graph) -> bool:
    if not G.vertices:
        return True
    return len(bfs_distances(G, G.vertices[0])) == len(G)


def diameter(G: Graph) -> int:
    if not is_connected(G):
        raise HypothesisViolation("diameter requires a connected graph")
    best = 0
    for v in G.vertices:
        best = max(best, max(bfs_distances(G, v).values()))
    return best


def connected_components(G: Graph) -> List[Tuple[int, ...]]:
    seen = set()
    comps = []
    for v in G.vertices:
        if v not in seen:
            comp = bfs_distances(G, v)
            seen.update(comp)
            comps.append(tuple(sorted(comp)))
    return comps


def is_bipartite(G: Graph) -> bool:
    side = {}
    for s in G.vertices:
        if s in side:
            continue
        side[s] = 0
        queue = deque([s])
        while queue:
            u = queue.popleft()
            for w in G.neighbors(u):
                if w not in side:
                    side[w] = 1 - side[u]
                    queue.append(w)
                elif side[w] == side[u]:
                    return False
    return True


def _bits(mask: int):
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


def maximal_independent_set_masks(G: Graph) -> List[int]:
    """Bron-Kerbosch with Tomita pivoting, run on the complement via bitmasks."""
    n = len(G)
    if n == 0:
        return [0]
    full = (1 << n) - 1
    # non-neighbours in G == neighbours in the complement
    co = [full & ~m & ~(1 << i) for i, m in enumerate(G.adjacency_masks())]
    out = []

    def expand(R, P, X):
        if not P and not X:
            out.append(R)
            return
        PX = P | X
        pivot, best = -1, -1
        for u in _bits(PX):
            c = (co[u] & P).bit_count()
            if c > best:
                pivot, best = u, c
        for u in _bits(P & ~co[pivot]):
            bit = 1 << u
            expand(R | bit, P & co[u], X & co[u])
            P &= ~bit
            X |= bit

    expand(0, full, 0)
    return out


def count_independent_sets(G: Graph, limit: Optional[int] = None) -> Optional[int]:
    """Number of independent sets, the empty set included; None once it exceeds ``limit``."""
    adj = G.adjacency_masks()
    memo: Dict[int, int] = {}

    def count(allowed):
        if not allowed:
            return 1
        hit = memo.get(allowed)
        if hit is not None:
            return hit
        low = allowed & -allowed
        i = low.bit_length() - 1
        rest = allowed ^ low
        total = count(rest) + count(rest & ~adj[i])
        if limit is not None and total > limit:
            raise _OverLimit
        memo[allowed] = total
        return total

    try:
        return count((1 << len(adj)) - 1)
    except _OverLimit:
        return None


class _OverLimit(Exception):
    pass


def maximal_independent_sets(G: Graph) -> List[Tuple[int, ...]]:
    sets = [G.mask_to_vertices(m) for m in maximal_independent_set_masks(G)]
    return sorted(sets)


def _max_clique_size(G: Graph) -> int:
    return max((len(s) for s in maximal_independent_sets(complement(G))), default=0)


def chromatic_coloring(G: Graph, cap: int = DEFAULT_CHROMATIC_CAP) -> List[Tuple[int, ...]]:
    """Exact minimum colouring as a list of colour classes.

    DSATUR branch and bound: the greedy DSATUR colouring gives the first upper
    bound and the clique number the lower bound; search stops once they meet.
    """
    n = len(G)
    if n > cap:
        raise InstanceTooLarge(f"exact colouring capped at {cap} vertices, graph has {n}")
    if n == 0:
        return []
    lower = _max_clique_size(G)
    order = sorted(G.vertices, key=lambda v: (-G.degree(v), v))
    best = _dsatur(G)
    best_k = max(best.values()) + 1
    if best_k > lower:
        state = {"best": best, "k": best_k}
        color: Dict[int, int] = {}

        def search(used):
            if state["k"] == lower:
                return
            if len(color) == n:
                state["best"], state["k"] = dict(color), used
                return
            # most saturated uncoloured vertex, ties by degree then label
            v = max(
                (u for u in order if u not in color),
                key=lambda u: (len({color[w] for w in G.neighbors(u) if w in color}), G.degree(u), -u),
            )
            forbidden = {color[w] for w in G.neighbors(v) if w in color}
            for c in range(used):
                if c not in forbidden:
                    color[v] = c
                    search(used)
                    del color[v]
                    if state["k"] == lower:
                        return
            if used + 1 < state["k"]:
                color[v] = used
                search(used + 1)
                del color[v]

        search(0)
        best = state["best"]
    classes: Dict[int, List[int]] = {}
    for v, c in best.items():
        classes.setdefault(c, []).append(v)
    return sorted(tuple(sorted(cls)) for cls in classes.values())


def _dsatur(G: Graph) -> Dict[int, int]:
    color: Dict[int, int] = {}
    while len(color) < len(G):
        v = max(
            (u for u in G.vertices if u not in color),
            key=lambda u: (len({color[w] for w in G.neighbors(u) if w in color}), G.degree(u), -u),
        )
        used = {color[w] for w in G.neighbors(v) if w in color}
        c = 0
        while c in used:
            c += 1
        color[v] = c
    return color


def chromatic_number(G: Graph, cap: int = DEFAULT_CHROMATIC_CAP) -> int:
    return len(chromatic_coloring(G, cap))
