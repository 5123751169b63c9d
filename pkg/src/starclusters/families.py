"""Named graph and complex families.

Vertices are always labelled 0, 1, 2, ...; when the natural vertex is a
structured object (a subset, a lattice point, a board square) it is kept in
the ``tags`` of the result.
"""

from __future__ import annotations

from itertools import combinations
from typing import List, Tuple

from .complexes import SimplicialComplex, independence_complex, matching_complex
from .exceptions import GraphError
from .graphs import Graph, disjoint_union, empty_graph


def _need(cond, message):
    if not cond:
        raise GraphError(message)


def cycle(n: int) -> Graph:
    _need(n >= 3, f"cycle needs n >= 3, got {n}")
    return Graph.from_edge_list(range(n), [(i, (i + 1) % n) for i in range(n)])


def path(n: int) -> Graph:
    """Path on ``n`` vertices."""
    _need(n >= 1, f"path needs n >= 1, got {n}")
    return Graph.from_edge_list(range(n), [(i, i + 1) for i in range(n - 1)])


def complete(n: int) -> Graph:
    _need(n >= 1, f"complete graph needs n >= 1, got {n}")
    return Graph.from_edge_list(range(n), combinations(range(n), 2))


def complete_bipartite(n: int, m: int) -> Graph:
    _need(n >= 1 and m >= 1, f"complete bipartite graph needs n, m >= 1, got {n}, {m}")
    return Graph.from_edge_list(range(n + m), [(i, n + j) for i in range(n) for j in range(m)])


def _colex(subsets):
    return sorted(subsets, key=lambda s: tuple(reversed(s)))


def kneser(n: int, k: int) -> Graph:
    """Kneser graph KG_{n,k}: n-subsets of {1..2n+k}, adjacent when disjoint."""
    _need(n >= 1 and k >= 0, f"kneser needs n >= 1 and k >= 0, got {n}, {k}")
    subsets = _colex(combinations(range(1, 2 * n + k + 1), n))
    return _disjointness_graph(subsets)


def _is_stable(s, size):
    if any(b - a == 1 for a, b in zip(s, s[1:])):
        return False
    return not (1 in s and size in s)


def stable_kneser(n: int, k: int) -> Graph:
    """Subgraph of KG_{n,k} induced by subsets with no two cyclically consecutive elements."""
    _need(n >= 1 and k >= 0, f"stable kneser needs n >= 1 and k >= 0, got {n}, {k}")
    size = 2 * n + k
    subsets = _colex(s for s in combinations(range(1, size + 1), n) if _is_stable(s, size))
    return _disjointness_graph(subsets)


def _disjointness_graph(subsets) -> Graph:
    sets = [frozenset(s) for s in subsets]
    edges = [(i, j) for i, j in combinations(range(len(sets)), 2) if not sets[i] & sets[j]]
    return Graph.from_edge_list(range(len(sets)), edges, tags={i: tuple(s) for i, s in enumerate(subsets)})


# --- square grids ----------------------------------------------------------------------------------


def _lattice_graph(points) -> Graph:
    pts = sorted(set(points))
    idx = {p: i for i, p in enumerate(pts)}
    edges = []
    for (x, y), i in idx.items():
        for q in ((x + 1, y), (x, y + 1)):
            if q in idx:
                edges.append((i, idx[q]))
    return Graph.from_edge_list(range(len(pts)), edges, tags={i: p for i, p in enumerate(pts)})


def grid_points_G(n: int, m: int) -> List[Tuple[int, int]]:
    return [
        (x, y)
        for x in range(0, n + m + 1)
        for y in range(-x, x + 1)
        if x - m <= y <= -x + n
    ]


def grid_points_H(n: int, m: int) -> List[Tuple[int, int]]:
    return [
        (x, y)
        for x in range(0, n + m + 1)
        for y in range(-x - 1, x + 1)
        if x - m <= y <= -x + n - 1
    ]


def _check_grid(*params):
    _need(all(p >= 0 for p in params), f"grid parameters must be nonnegative, got {params}")


def grid_G(n: int, m: int) -> Graph:
    """Lattice points with -x <= y <= x and x-m <= y <= -x+n, unit-distance edges."""
    _check_grid(n, m)
    return _lattice_graph(grid_points_G(n, m))


def grid_H(n: int, m: int) -> Graph:
    """Lattice points with -x-1 <= y <= x and x-m <= y <= -x+n-1."""
    _check_grid(n, m)
    return _lattice_graph(grid_points_H(n, m))


def tilde_G(n: int, m: int, k: int) -> Graph:
    """Part of ``grid_G(n, m)`` with y >= -x+k or y <= x-3."""
    _check_grid(n, m, k)
    return _lattice_graph(p for p in grid_points_G(n, m) if p[1] >= -p[0] + k or p[1] <= p[0] - 3)


def tilde_H(n: int, m: int, k: int) -> Graph:
    """Part of ``grid_H(n, m)`` with y >= -x+k-1 or y <= x-3."""
    _check_grid(n, m, k)
    return _lattice_graph(p for p in grid_points_H(n, m) if p[1] >= -p[0] + k - 1 or p[1] <= p[0] - 3)


# --- matching complexes -----------------------------------------------------------------------------


def matching_complete(n: int) -> SimplicialComplex:
    _need(n >= 2, f"M_n needs n >= 2, got {n}")
    return matching_complex(complete(n))


def chessboard(n: int, m: int) -> SimplicialComplex:
    _need(n >= 1 and m >= 1, f"chessboard needs n, m >= 1, got {n}, {m}")
    K = matching_complex(complete_bipartite(n, m))
    # re-tag line-graph vertices as board squares (row, column)
    K.tags = {v: (a, b - n) for v, (a, b) in K.tags.items()}
    return K


def stirling(n: int) -> SimplicialComplex:
    """Rook placements strictly above the diagonal of an n x n board.

    Vertices are the squares (i, j) with 1 <= i < j <= n, labelled in lex
    order; a simplex uses pairwise distinct rows and distinct columns.
    """
    _need(n >= 2, f"stirling complex needs n >= 2, got {n}")
    squares = [(i, j) for i in range(1, n + 1) for j in range(i + 1, n + 1)]
    edges = [
        (a, b)
        for a, b in combinations(range(len(squares)), 2)
        if squares[a][0] == squares[b][0] or squares[a][1] == squares[b][1]
    ]
    G = Graph.from_edge_list(range(len(squares)), edges, tags=dict(enumerate(squares)))
    return independence_complex(G)


# --- sharpness families and figure graphs ---------------------------------------------------------


def family_A(k: int) -> Graph:
    """``k`` disjoint squares."""
    _need(k >= 1, f"family A needs k >= 1, got {k}")
    G = cycle(4)
    for _ in range(k - 1):
        G = disjoint_union(G, cycle(4))
    return G


def family_B(k: int) -> Graph:
    """Two adjacent edges (a path on 3 vertices) plus ``k - 1`` disjoint squares."""
    _need(k >= 1, f"family B needs k >= 1, got {k}")
    G = path(3)
    for _ in range(k - 1):
        G = disjoint_union(G, cycle(4))
    return G


def pentagon_prism(n: int) -> Graph:
    """Vertex (i, c) for i in Z_n and c in 'abc', labelled 3*i + position of c.

    Edges: (i,a)-(i,b), (i,b)-(i,c), and the two n-gons on the a's and the c's.
    """
    _need(n >= 3 and n % 2 == 1, f"pentagon prism needs odd n >= 3, got {n}")

    def lab(i, c):
        return 3 * (i % n) + "abc".index(c)

    edges = []
    for i in range(n):
        edges += [(lab(i, "a"), lab(i, "b")), (lab(i, "b"), lab(i, "c"))]
        edges += [(lab(i, "a"), lab(i + 1, "a")), (lab(i, "c"), lab(i + 1, "c"))]
    tags = {lab(i, c): (i, c) for i in range(n) for c in "abc"}
    return Graph.from_edge_list(range(3 * n), edges, tags=tags)


GRAPH_W_CENTER = 0


def graph_W() -> Graph:
    """The 7-vertex graph whose centre's suspension piece is a hollow triangle.

    Centre 0 joined to 1, 2, 3; each ``i`` in 1..3 has one private outer
    neighbour ``i + 3``. The outer vertices pairwise extend to some neighbour of
    the centre but not all three together.
    """
    edges = [(0, 1), (0, 2), (0, 3), (1, 4), (2, 5), (3, 6)]
    return Graph.from_edge_list(range(7), edges)


def disjoint_cycles(*lengths: int) -> Graph:
    G = empty_graph()
    for n in lengths:
        G = disjoint_union(G, cycle(n))
    return G
