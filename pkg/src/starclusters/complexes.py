"""Finite abstract simplicial complexes stored by their facets.

A simplex is a strictly increasing tuple of vertex labels. A complex keeps an
explicit ground set (normally the union of its facets, but Alexander duality
and complexes built from graphs may carry extra vertices) and a lex-sorted
antichain of facets. The empty complex has no facets and dimension -1; it is
the (-1)-sphere for homology purposes.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from itertools import combinations, permutations
from typing import Dict, FrozenSet, Iterable, List, Optional, Sequence, Tuple

from .exceptions import ComplexError, HypothesisViolation
from .graphs import Graph, complement, line_graph, maximal_independent_set_masks

Simplex = Tuple[int, ...]


def simplex(vertices: Iterable[int]) -> Simplex:
    """Normalise ``vertices`` into a simplex, rejecting empty or repeated input."""
    vs = list(vertices)
    s = tuple(sorted(vs))
    if not s:
        raise ComplexError("a simplex needs at least one vertex")
    if len(set(s)) != len(s):
        raise ComplexError(f"repeated vertex in {vs}")
    return s


def _maximal(masks: Iterable[int]) -> List[int]:
    """Inclusion-maximal elements of a family of bitmasks."""
    uniq = sorted(set(masks), key=lambda m: -m.bit_count())
    kept: List[int] = []
    for m in uniq:
        if not any(m & k == m for k in kept):
            kept.append(m)
    return kept


class SimplicialComplex:
    """Complex given by facets over an ordered ground set.

    Internally every simplex is a bitmask over positions in ``ground``;
    :meth:`to_mask` and :meth:`from_mask` convert.
    """

    def __init__(self, facets: Iterable[Iterable[int]] = (), ground: Optional[Iterable[int]] = None, tags=None):
        fs = [simplex(f) for f in facets]
        support = sorted({v for f in fs for v in f})
        if ground is None:
            g = support
        else:
            g = sorted(set(ground))
            missing = set(support) - set(g)
            if missing:
                raise ComplexError(f"facet vertices {sorted(missing)} are not in the ground set")
        self._ground = tuple(g)
        self._index = {v: i for i, v in enumerate(self._ground)}
        masks = _maximal(self.to_mask(f) for f in fs)
        self._facet_masks = masks
        self._facets = tuple(sorted(self.from_mask(m) for m in masks))
        self.tags = dict(tags) if tags else {}

    @classmethod
    def _from_masks(cls, masks: Iterable[int], ground: Sequence[int], tags=None) -> "SimplicialComplex":
        K = cls.__new__(cls)
        K._ground = tuple(ground)
        K._index = {v: i for i, v in enumerate(K._ground)}
        ms = _maximal(m for m in masks if m)
        K._facet_masks = ms
        K._facets = tuple(sorted(K.from_mask(m) for m in ms))
        K.tags = dict(tags) if tags else {}
        return K

    @classmethod
    def full_simplex(cls, vertices: Iterable[int]) -> "SimplicialComplex":
        vs = list(vertices)
        return cls([vs] if vs else [], ground=vs)

    @property
    def ground(self) -> Tuple[int, ...]:
        return self._ground

    @property
    def facets(self) -> Tuple[Simplex, ...]:
        return self._facets

    @property
    def facet_masks(self) -> List[int]:
        return list(self._facet_masks)

    @property
    def vertices(self) -> Tuple[int, ...]:
        """Vertices that actually occur in some facet."""
        return tuple(sorted({v for f in self._facets for v in f}))

    @property
    def dim(self) -> int:
        return max((len(f) for f in self._facets), default=0) - 1

    def is_empty(self) -> bool:
        return not self._facets

    def is_full_simplex(self) -> bool:
        return len(self._facets) == 1 and len(self._facets[0]) == len(self._ground)

    def to_mask(self, vertices: Iterable[int]) -> int:
        m = 0
        for v in vertices:
            try:
                m |= 1 << self._index[v]
            except KeyError:
                raise ComplexError(f"vertex {v} is not in the ground set") from None
        return m

    def from_mask(self, mask: int) -> Simplex:
        out = []
        g = self._ground
        while mask:
            low = mask & -mask
            out.append(g[low.bit_length() - 1])
            mask ^= low
        return tuple(out)

    def contains(self, s: Iterable[int]) -> bool:
        vs = list(s)
        if any(v not in self._index for v in vs):
            return False
        m = self.to_mask(vs)
        if m == 0:
            return True
        return any(m & f == m for f in self._facet_masks)

    __contains__ = contains

    def simplex_masks(self) -> List[List[int]]:
        """All non-empty simplices as masks, grouped by dimension (index = dim)."""
        seen = set()
        for f in self._facet_masks:
            if f in seen:
                continue
            # enumerate submasks of f
            sub = f
            while sub:
                seen.add(sub)
                sub = (sub - 1) & f
        by_dim: List[List[int]] = [[] for _ in range(self.dim + 1)]
        for m in seen:
            by_dim[m.bit_count() - 1].append(m)
        for lst in by_dim:
            lst.sort(key=self._lex_key)
        return by_dim

    def _lex_key(self, mask: int):
        return self.from_mask(mask)

    def simplices(self, k: Optional[int] = None) -> List[Simplex]:
        """Simplices in lex order, either all of them or only those of dimension ``k``."""
        by_dim = self.simplex_masks()
        if k is not None:
            if 0 <= k < len(by_dim):
                return [self.from_mask(m) for m in by_dim[k]]
            return []
        return sorted(self.from_mask(m) for lst in by_dim for m in lst)

    def f_vector(self) -> List[int]:
        return [len(lst) for lst in self.simplex_masks()]

    def num_simplices(self) -> int:
        return sum(self.f_vector())

    def skeleton_graph(self) -> Graph:
        """1-skeleton as a graph on the ground set."""
        edges = set()
        for f in self._facets:
            edges.update(combinations(f, 2))
        return Graph.from_edge_list(self._ground, sorted(edges))

    def with_ground(self, ground: Iterable[int]) -> "SimplicialComplex":
        return SimplicialComplex(self._facets, ground=ground, tags=self.tags)

    def restrict_ground(self) -> "SimplicialComplex":
        return SimplicialComplex(self._facets, tags=self.tags)

    def __eq__(self, other):
        if not isinstance(other, SimplicialComplex):
            return NotImplemented
        return self._ground == other._ground and self._facets == other._facets

    def __hash__(self):
        return hash((self._ground, self._facets))

    def same_simplices(self, other: "SimplicialComplex") -> bool:
        """Equality of simplex sets, ignoring any difference in ground sets."""
        return self._facets == other._facets

    def __repr__(self):
        return f"SimplicialComplex(ground={list(self._ground)}, facets={[list(f) for f in self._facets]})"

    def to_dict(self) -> dict:
        return {"ground": list(self._ground), "facets": [list(f) for f in self._facets]}


def _common_ground(*complexes: SimplicialComplex) -> Tuple[int, ...]:
    return tuple(sorted({v for K in complexes for v in K.ground}))


def _remask(K: SimplicialComplex, ground: Sequence[int]) -> List[int]:
    idx = {v: i for i, v in enumerate(ground)}
    out = []
    for f in K.facets:
        m = 0
        for v in f:
            m |= 1 << idx[v]
        out.append(m)
    return out


def union(*complexes: SimplicialComplex) -> SimplicialComplex:
    ground = _common_ground(*complexes)
    masks = [m for K in complexes for m in _remask(K, ground)]
    return SimplicialComplex._from_masks(masks, ground)


def intersection(K: SimplicialComplex, L: SimplicialComplex) -> SimplicialComplex:
    """Common simplices; the ground is the union of the vertices that survive."""
    ground = _common_ground(K, L)
    km, lm = _remask(K, ground), _remask(L, ground)
    masks = [a & b for a in km for b in lm if a & b]
    R = SimplicialComplex._from_masks(masks, ground)
    return R.restrict_ground()


def is_subcomplex(L: SimplicialComplex, K: SimplicialComplex) -> bool:
    return all(K.contains(f) for f in L.facets)


# --- complexes from graphs ------------------------------------------------------------------------


def independence_complex(G: Graph) -> SimplicialComplex:
    if len(G) == 0:
        return SimplicialComplex([], ground=[])
    masks = maximal_independent_set_masks(G)
    return SimplicialComplex._from_masks(masks, G.vertices, G.tags)


def clique_complex(G: Graph) -> SimplicialComplex:
    return independence_complex(complement(G))


def is_clique(K: SimplicialComplex) -> bool:
    """True iff every vertex set that is pairwise joined in the 1-skeleton is a simplex."""
    H = K.skeleton_graph()
    flag = clique_complex(H).with_ground(K.ground)
    return flag.same_simplices(K)


def matching_complex(G: Graph) -> SimplicialComplex:
    """Complex of non-empty matchings, labelled by line-graph vertex (see its ``tags``)."""
    if G.num_edges() == 0:
        raise ComplexError("the matching complex needs a graph with at least one edge")
    return independence_complex(line_graph(G))


# --- stars and star clusters ------------------------------------------------------------------------


def _require_simplex(K: SimplicialComplex, s: Iterable[int]) -> Simplex:
    sigma = simplex(s)
    if not K.contains(sigma):
        raise ComplexError(f"{list(sigma)} is not a simplex of the complex")
    return sigma


def star(K: SimplicialComplex, s: Iterable[int]) -> SimplicialComplex:
    """Closed star: every simplex whose union with ``s`` is still a simplex."""
    sigma = _require_simplex(K, s)
    m = K.to_mask(sigma)
    R = SimplicialComplex._from_masks([f for f in K.facet_masks if f & m == m], K.ground)
    return R.restrict_ground()


def star_cluster(K: SimplicialComplex, s: Iterable[int]) -> SimplicialComplex:
    """Union of the stars of the vertices of ``s``."""
    sigma = _require_simplex(K, s)
    m = K.to_mask(sigma)
    R = SimplicialComplex._from_masks([f for f in K.facet_masks if f & m], K.ground)
    return R.restrict_ground()


def link(K: SimplicialComplex, s: Iterable[int]) -> SimplicialComplex:
    sigma = _require_simplex(K, s)
    m = K.to_mask(sigma)
    R = SimplicialComplex._from_masks([f & ~m for f in K.facet_masks if f & m == m], K.ground)
    return R.restrict_ground()


def suspension_pieces(G: Graph, v: int) -> Tuple[SimplicialComplex, SimplicialComplex]:
    """Return ``(st(v) & SC(N(v)), SC(N(v)))`` inside the independence complex.

    ``v`` must be non-isolated and lie in no triangle; then the independence
    complex of ``G`` is the union of the two contractible pieces ``st(v)`` and
    ``SC(N(v))``, so it has the homotopy type of the suspension of the first
    returned complex.
    """
    nbrs = sorted(G.neighbors(v))
    if not nbrs:
        raise HypothesisViolation(f"vertex {v} is isolated", witness=v)
    for a, b in combinations(nbrs, 2):
        if G.has_edge(a, b):
            raise HypothesisViolation(f"vertex {v} lies in the triangle {(v, a, b)}", witness=(v, a, b))
    I = independence_complex(G)
    sc = star_cluster(I, nbrs)
    return intersection(star(I, [v]), sc), sc


# --- joins, cones, suspensions -----------------------------------------------------------------------


def join(K: SimplicialComplex, L: SimplicialComplex) -> SimplicialComplex:
    """Simplicial join. If the ground sets overlap, ``L`` is shifted above ``K``'s
    largest label and the shift is recorded in ``tags`` as ``("join", old_label)``."""
    if set(K.ground) & set(L.ground):
        off = (max(K.ground) + 1) if K.ground else 0
        mapping = {v: v + off for v in L.ground}
        L = SimplicialComplex(
            [[mapping[v] for v in f] for f in L.facets],
            ground=mapping.values(),
            tags={mapping[v]: ("join", v) for v in L.ground},
        )
    ground = _common_ground(K, L)
    kf = K.facets or ((),)
    lf = L.facets or ((),)
    facets = [f + g for f in kf for g in lf if f + g]
    tags = dict(K.tags)
    tags.update(L.tags)
    return SimplicialComplex(facets, ground=ground, tags=tags)


def _fresh(K: SimplicialComplex, count: int) -> List[int]:
    start = (max(K.ground) + 1) if K.ground else 0
    return list(range(start, start + count))


def cone(K: SimplicialComplex) -> SimplicialComplex:
    (apex,) = _fresh(K, 1)
    return join(K, SimplicialComplex([[apex]]))


def simplicial_suspension(K: SimplicialComplex) -> SimplicialComplex:
    a, b = _fresh(K, 2)
    return join(K, SimplicialComplex([[a], [b]]))


# --- Alexander dual --------------------------------------------------------------------------------


def alexander_dual(K: SimplicialComplex) -> SimplicialComplex:
    """Proper non-empty subsets of the ground set whose complement is not a face.

    Facets of the dual are the complements of the minimal non-faces of ``K``.
    """
    n = len(K.ground)
    if n == 0:
        raise ComplexError("the Alexander dual needs a non-empty ground set")
    if K.is_full_simplex():
        raise ComplexError("the Alexander dual of a full simplex is undefined")
    full = (1 << n) - 1
    facets = K.facet_masks

    def is_face(m):
        return m == 0 or any(m & f == m for f in facets)

    dual = []
    for tau in range(1, full + 1):
        if is_face(tau):
            continue
        # minimal non-face: removing any single vertex gives a face
        if all(is_face(tau & ~(1 << i)) for i in range(n) if tau >> i & 1):
            sigma = full & ~tau
            if sigma:
                dual.append(sigma)
    return SimplicialComplex._from_masks(dual, K.ground)


# --- barycentric subdivision and the incomparability graph ----------------------------------------


def face_labels(K: SimplicialComplex) -> List[Simplex]:
    """Simplices of ``K`` ordered by dimension then lex; position = label used by
    :func:`barycentric_subdivision` and :func:`incomparability_graph`."""
    return [K.from_mask(m) for lst in K.simplex_masks() for m in lst]


def barycentric_subdivision(K: SimplicialComplex) -> SimplicialComplex:
    faces = face_labels(K)
    label = {f: i for i, f in enumerate(faces)}
    chains = set()
    for F in K.facets:
        for order in permutations(F):
            chains.add(tuple(sorted(label[tuple(sorted(order[: i + 1]))] for i in range(len(order)))))
    return SimplicialComplex(sorted(chains), ground=range(len(faces)), tags=dict(enumerate(faces)))


def incomparability_graph(K: SimplicialComplex) -> Graph:
    """Graph on the simplices of ``K`` joining pairs where neither is a face of the other."""
    faces = face_labels(K)
    sets = [frozenset(f) for f in faces]
    edges = [
        (i, j)
        for i, j in combinations(range(len(faces)), 2)
        if not (sets[i] <= sets[j] or sets[j] <= sets[i])
    ]
    return Graph.from_edge_list(range(len(faces)), edges, tags=dict(enumerate(faces)))


# --- posets and order complexes ---------------------------------------------------------------------


@dataclass(frozen=True)
class Poset:
    """Finite poset given by its cover relation ``(lower, upper)``."""

    elements: Tuple[int, ...]
    covers: FrozenSet[Tuple[int, int]]
    _up: Dict[int, FrozenSet[int]] = field(init=False, repr=False, compare=False)

    def __init__(self, elements: Iterable[int], covers: Iterable[Sequence[int]] = ()):
        elems = tuple(sorted(set(elements)))
        cov = frozenset((a, b) for a, b in covers)
        for a, b in cov:
            if a not in elems or b not in elems:
                raise ComplexError(f"cover ({a}, {b}) uses an unknown element")
            if a == b:
                raise ComplexError(f"cover ({a}, {b}) is reflexive")
        object.__setattr__(self, "elements", elems)
        object.__setattr__(self, "covers", cov)
        succ = {e: [b for a, b in cov if a == e] for e in elems}
        up: Dict[int, FrozenSet[int]] = {}
        state: Dict[int, int] = {}

        def visit(e):
            if state.get(e) == 1:
                raise ComplexError("cover relation contains a cycle")
            if e in up:
                return up[e]
            state[e] = 1
            above = set()
            for b in succ[e]:
                above.add(b)
                above |= visit(b)
            state[e] = 2
            up[e] = frozenset(above)
            return up[e]

        for e in elems:
            visit(e)
        object.__setattr__(self, "_up", up)

    @classmethod
    def from_relation(cls, elements: Iterable[int], less_than: Iterable[Sequence[int]]) -> "Poset":
        """Build from any generating set of strict relations; reduces to covers."""
        elems = list(elements)
        tmp = cls(elems, less_than)
        covers = [
            (a, b)
            for a in tmp.elements
            for b in tmp._up[a]
            if not any(b in tmp._up[c] for c in tmp._up[a])
        ]
        return cls(elems, covers)

    def less(self, a: int, b: int) -> bool:
        return b in self._up[a]

    def comparable(self, a: int, b: int) -> bool:
        return a == b or self.less(a, b) or self.less(b, a)

    def is_chain(self, items: Iterable[int]) -> bool:
        xs = list(items)
        return all(self.comparable(a, b) for a, b in combinations(xs, 2))

    def maximal_chains(self) -> List[Tuple[int, ...]]:
        succ = {e: sorted(b for a, b in self.covers if a == e) for e in self.elements}
        has_lower = {b for _, b in self.covers}
        chains = []

        def walk(path):
            nxt = succ[path[-1]]
            if not nxt:
                chains.append(tuple(sorted(path)))
                return
            for b in nxt:
                walk(path + [b])

        for e in self.elements:
            if e not in has_lower:
                walk([e])
        return sorted(chains)


def order_complex(P: Poset) -> SimplicialComplex:
    return SimplicialComplex(P.maximal_chains(), ground=P.elements)


def chain_hits_all_maximal_chains(P: Poset) -> Optional[Simplex]:
    """Smallest chain (by size, then lex) meeting every maximal chain, or None.

    When a witness exists the order complex is the star cluster of that chain.
    """
    chains = [frozenset(c) for c in P.maximal_chains()]
    if not chains:
        return None
    K = order_complex(P)
    for c in sorted(K.simplices(), key=lambda s: (len(s), s)):
        cs = set(c)
        if all(cs & m for m in chains):
            return c
    return None
