"""Graph constructions whose independence complexes are suspensions.

Every construction here comes with a degree shift: the reduced homology of
the output's independence complex equals the input's shifted up by a known
amount. Fresh vertices get labels above the current maximum, in a fixed
order, and each fresh label is described in the output's ``tags``.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations, product
from typing import FrozenSet, Iterable, Sequence, Tuple

from .complexes import SimplicialComplex
from .exceptions import GraphError, HypothesisViolation
from .graphs import Edge, Graph, bfs_distances, is_subgraph, maximal_independent_sets


@dataclass(frozen=True)
class Relation:
    X: Tuple[int, ...]
    Y: Tuple[int, ...]
    pairs: FrozenSet[Tuple[int, int]]

    def __init__(self, X: Iterable[int], Y: Iterable[int], pairs: Iterable[Sequence[int]]):
        xs, ys = tuple(sorted(set(X))), tuple(sorted(set(Y)))
        ps = frozenset((x, y) for x, y in pairs)
        bad = [p for p in ps if p[0] not in xs or p[1] not in ys]
        if bad:
            raise GraphError(f"relation pairs {sorted(bad)} are not in X x Y")
        object.__setattr__(self, "X", xs)
        object.__setattr__(self, "Y", ys)
        object.__setattr__(self, "pairs", ps)

    def to_dict(self) -> dict:
        return {"X": list(self.X), "Y": list(self.Y), "pairs": [list(p) for p in sorted(self.pairs)]}


def _inherit_tags(G: Graph) -> dict:
    return dict(G.tags)


def jonsson_graph(K: SimplicialComplex) -> Graph:
    """Bipartite graph on the vertices and the facets of ``K``.

    A vertex is joined to every facet that does not contain it. Facets get
    labels above the largest vertex, in facet order, tagged ``("facet", f)``.
    """
    V = K.vertices
    if not V:
        raise GraphError("the complex needs at least one vertex")
    start = V[-1] + 1
    facets = K.facets
    tags = {v: ("vertex", v) for v in V}
    tags.update({start + i: ("facet", f) for i, f in enumerate(facets)})
    edges = [(v, start + i) for i, f in enumerate(facets) for v in V if v not in f]
    return Graph.from_edge_list(list(V) + [start + i for i in range(len(facets))], edges, tags)


def csorba_full_subdivision(G: Graph) -> Graph:
    """Insert one new vertex in the middle of every edge (edges in sorted order)."""
    edges = G.edges
    if not edges:
        raise HypothesisViolation("the graph has no edges")
    start = G.fresh_label()
    tags = _inherit_tags(G)
    new_edges = []
    for i, (a, b) in enumerate(edges):
        mid = start + i
        tags[mid] = ("subdivides", (a, b))
        new_edges += [(a, mid), (mid, b)]
    return Graph.from_edge_list(list(G.vertices) + [start + i for i in range(len(edges))], new_edges, tags)


def _require_edge(G: Graph, e) -> Edge:
    a, b = e
    if not G.has_edge(a, b):
        raise GraphError(f"({a}, {b}) is not an edge")
    return (a, b) if a < b else (b, a)


def subdivide_edge_four(G: Graph, e: Sequence[int]) -> Graph:
    """Replace edge ``e = (a, b)`` by the path a - x - y - z - b."""
    a, b = _require_edge(G, e)
    x, y, z = (G.fresh_label() + i for i in range(3))
    tags = _inherit_tags(G)
    tags.update({x: ("subdivides", (a, b), 1), y: ("subdivides", (a, b), 2), z: ("subdivides", (a, b), 3)})
    edges = [f for f in G.edges if f != (a, b)] + [(a, x), (x, y), (y, z), (z, b)]
    return Graph.from_edge_list(list(G.vertices) + [x, y, z], edges, tags)


def graph_suspension(G: Graph, H: Graph) -> Graph:
    """Suspension of ``G`` over its subgraph ``H``.

    Adds a vertex ``s`` and one vertex ``s_M`` per maximal independent set ``M``
    of ``H`` (canonical order). Edges of ``H`` are removed; ``s`` is joined to
    each ``s_M``, and ``s_M`` to the vertices of ``H`` outside ``M``.
    """
    if not is_subgraph(H, G):
        raise GraphError("H is not a subgraph of G")
    s = G.fresh_label()
    mis = maximal_independent_sets(H)
    tags = _inherit_tags(G)
    tags[s] = ("apex",)
    h_edges = set(H.edges)
    edges = [f for f in G.edges if f not in h_edges]
    new = []
    for i, M in enumerate(mis):
        sm = s + 1 + i
        new.append(sm)
        tags[sm] = ("maximal_independent_set", M)
        edges.append((s, sm))
        edges += [(w, sm) for w in H.vertices if w not in M]
    return Graph.from_edge_list(list(G.vertices) + [s] + new, edges, tags)


def crossing_resolution(G: Graph, e1: Sequence[int], e2: Sequence[int]) -> Graph:
    """Suspension over two vertex-disjoint edges; adds 5 vertices."""
    a = _require_edge(G, e1)
    b = _require_edge(G, e2)
    if set(a) & set(b):
        raise HypothesisViolation(f"edges {a} and {b} share an endpoint", witness=(a, b))
    H = Graph.from_edge_list(sorted(a + b), [a, b])
    return graph_suspension(G, H)


def _excess(G: Graph) -> int:
    return sum(max(G.degree(v) - 3, 0) for v in G.vertices)


def degree3_reduction(G: Graph) -> Tuple[Graph, int]:
    """Suspend over 2-edge stars until the maximum degree is at most 3.

    Each round takes the smallest vertex ``w`` of degree > 3 and its two
    smallest neighbours. Returns the final graph and the number of rounds,
    which is the suspension count.
    """
    rounds = 0
    measure = _excess(G)
    while True:
        w = next((v for v in G.vertices if G.degree(v) > 3), None)
        if w is None:
            return G, rounds
        w1, w2 = sorted(G.neighbors(w))[:2]
        H = Graph.from_edge_list([w, w1, w2], [(w, w1), (w, w2)])
        G = graph_suspension(G, H)
        rounds += 1
        new_measure = _excess(G)
        assert new_measure < measure, "degree excess failed to drop"
        measure = new_measure


def contractibility_criterion(G: Graph, S: Sequence[int]) -> bool:
    """Combinatorial sufficient condition for a contractible independence complex.

    True when the vertices of ``S`` are pairwise at distance >= 3 and every
    choice of one neighbour per vertex of ``S`` contains an adjacent pair.
    """
    vs = list(S)
    for v in vs:
        if v not in G:
            raise GraphError(f"unknown vertex {v}")
    for u, v in combinations(vs, 2):
        if bfs_distances(G, u).get(v, float("inf")) < 3:
            return False
    nbrs = [sorted(G.neighbors(v)) for v in vs]

    # search for an independent transversal; the criterion holds iff none exists
    def independent_transversal(i, chosen):
        if i == len(nbrs):
            return True
        for w in nbrs[i]:
            if all(not G.has_edge(w, c) for c in chosen):
                if independent_transversal(i + 1, chosen + [w]):
                    return True
        return False

    if not vs:
        return False
    return not independent_transversal(0, [])


def dowker_pair(R: Relation) -> Tuple[SimplicialComplex, SimplicialComplex]:
    """``(K_X, K_Y)``: subsets of X related to a common y, and symmetrically."""
    if not R.X or not R.Y:
        raise GraphError("both sides of the relation must be non-empty")
    KX = SimplicialComplex([[x for x in R.X if (x, y) in R.pairs] for y in R.Y if any((x, y) in R.pairs for x in R.X)])
    KY = SimplicialComplex([[y for y in R.Y if (x, y) in R.pairs] for x in R.X if any((x, y) in R.pairs for y in R.Y)])
    return KX, KY


def dowker_graph(R: Relation) -> Graph:
    """Bipartite graph joining x to y when they are *not* related. Y is shifted
    above X and tagged ``("Y", y)``."""
    off = (max(R.X) + 1) if R.X else 0
    tags = {x: ("X", x) for x in R.X}
    tags.update({off + y: ("Y", y) for y in R.Y})
    edges = [(x, off + y) for x, y in product(R.X, R.Y) if (x, y) not in R.pairs]
    return Graph.from_edge_list(list(R.X) + [off + y for y in R.Y], edges, tags)
