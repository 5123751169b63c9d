"""Elementary collapses and dominated-vertex reductions.

Greedy collapsing is evidence, not a decision procedure: a residual larger
than a point only means this particular order got stuck.
"""

from __future__ import annotations

import heapq
from dataclasses import dataclass, field
from typing import Dict, List, Optional, Sequence, Tuple

from .complexes import Simplex, SimplicialComplex
from .exceptions import ComplexError
from .graphs import Graph, delete_vertices

COLLAPSIBLE = "collapsible"
UNKNOWN = "unknown"


@dataclass
class CollapseTrace:
    steps: List[Tuple[Simplex, Simplex]] = field(default_factory=list)
    residual: SimplicialComplex = field(default_factory=SimplicialComplex)

    @property
    def verdict(self) -> str:
        return COLLAPSIBLE if self.residual.facets and len(self.residual.facets) == 1 and len(self.residual.facets[0]) == 1 else UNKNOWN

    def to_dict(self) -> dict:
        return {
            "steps": [[list(a), list(b)] for a, b in self.steps],
            "residual": self.residual.to_dict(),
            "verdict": self.verdict,
        }


def _all_masks(K: SimplicialComplex) -> set:
    return {m for lst in K.simplex_masks() for m in lst}


def greedy_collapse(K: SimplicialComplex) -> CollapseTrace:
    """Collapse ``K`` greedily.

    At each step the lex-smallest free face (a simplex with exactly one proper
    coface, which is then a facet one dimension up) is removed together with
    that coface. Stops when no free face is left.
    """
    present = _all_masks(K)
    # cofaces one dimension up, kept current as simplices disappear
    up: Dict[int, set] = {m: set() for m in present}
    for m in present:
        rest = m
        while rest:
            low = rest & -rest
            rest ^= low
            face = m ^ low
            if face:
                up[face].add(m)
    key = K.from_mask
    heap = [(key(m), m) for m in present if len(up[m]) == 1]
    heapq.heapify(heap)
    steps = []
    while heap:
        _, sigma = heapq.heappop(heap)
        if sigma not in present or len(up[sigma]) != 1:
            continue
        (tau,) = up[sigma]
        for gone in (tau, sigma):
            present.discard(gone)
            rest = gone
            while rest:
                low = rest & -rest
                rest ^= low
                face = gone ^ low
                if face and face in present:
                    up[face].discard(gone)
                    if len(up[face]) == 1:
                        heapq.heappush(heap, (key(face), face))
        steps.append((key(sigma), key(tau)))
    residual = SimplicialComplex._from_masks(present, K.ground).restrict_ground()
    return CollapseTrace(steps, residual)


def replay(K: SimplicialComplex, steps: Sequence[Tuple[Sequence[int], Sequence[int]]]) -> SimplicialComplex:
    """Re-apply a collapse sequence, checking that every step is an elementary collapse."""
    present = {K.to_mask(s) for s in K.simplices()}
    for sigma, tau in steps:
        s, t = K.to_mask(sigma), K.to_mask(tau)
        if s not in present or t not in present:
            raise ComplexError(f"step {list(sigma)} -> {list(tau)} uses a missing simplex")
        if t & s != s or (t ^ s).bit_count() != 1:
            raise ComplexError(f"{list(tau)} is not a codimension-one coface of {list(sigma)}")
        cofaces = [m for m in present if m != s and m & s == s]
        if cofaces != [t]:
            raise ComplexError(f"{list(sigma)} is not a free face")
        present.discard(s)
        present.discard(t)
    return SimplicialComplex._from_masks(present, K.ground).restrict_ground()


def is_collapsible_greedy(K: SimplicialComplex) -> bool:
    return greedy_collapse(K).verdict == COLLAPSIBLE


def dominated_vertex(G: Graph) -> Optional[Tuple[int, int]]:
    """Lex-smallest pair ``(v, w)``, ``v != w``, with N(v) contained in N(w).

    Deleting ``w`` is then a (strong) collapse of the independence complex.
    """
    for v in G.vertices:
        nv = G.neighbors(v)
        for w in G.vertices:
            if w != v and nv <= G.neighbors(w):
                return v, w
    return None


def strong_core(G: Graph, trace: bool = False):
    """Delete dominating vertices until no dominated pair is left.

    With ``trace=True`` also returns the list of ``(v, w)`` pairs used.
    """
    used = []
    while True:
        pair = dominated_vertex(G)
        if pair is None:
            break
        used.append(pair)
        G = delete_vertices(G, [pair[1]])
    return (G, used) if trace else G
