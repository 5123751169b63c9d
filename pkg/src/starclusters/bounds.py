"""Connectivity bounds for independence complexes and contractible covers.

Every bound is an integer computed from the graph alone. ``bound_report``
pairs it with the homological connectivity of the independence complex,
which is the checkable consequence of a connectivity claim: n-connected
implies that reduced homology vanishes up to degree n. Brackets are floors
(toward minus infinity), which is what ``//`` does on negative numbers.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from itertools import combinations
from typing import Any, Callable, Dict, List, Sequence

from .collapses import greedy_collapse
from .complexes import SimplicialComplex, independence_complex, star, star_cluster, union
from .exceptions import GraphError, HypothesisViolation
from .graphs import (
    DEFAULT_CHROMATIC_CAP,
    Graph,
    bfs_distances,
    chromatic_coloring,
    diameter,
    find_claw,
    induced_subgraph,
)
from .homology import ALL, HomologyProfile, homological_connectivity, independence_homology, reduced_homology


def _connectivity_json(c):
    return "all" if c == ALL else c


@dataclass
class BoundReport:
    bound_name: str
    inputs: Dict[str, Any]
    claimed: int
    evidence: Dict[str, Any] = field(default_factory=dict)

    @property
    def holds(self) -> bool:
        return bool(self.evidence.get("holds"))

    def to_dict(self) -> dict:
        return {
            "bound_name": self.bound_name,
            "inputs": self.inputs,
            "claimed": self.claimed,
            "evidence": self.evidence,
        }


def independence_dim(G: Graph) -> int:
    """Dimension of the independence complex: independence number minus one."""
    return independence_complex(G).dim


def _require_claw_free(G: Graph):
    claw = find_claw(G)
    if claw is not None:
        center, leaves = claw
        raise HypothesisViolation(f"graph has a claw centred at {center} with leaves {leaves}", witness=claw)


def clawfree_bound(G: Graph) -> int:
    """floor((dim I_G - 2) / 2) for a claw-free graph."""
    _require_claw_free(G)
    return (independence_dim(G) - 2) // 2


def extension_hypothesis(G: Graph, sigma: Sequence[int], r: int) -> bool:
    """True iff every independent set of size <= r stays independent after
    adding some vertex of ``sigma``."""
    sig = sorted(set(sigma))
    for v in sig:
        if v not in G:
            raise GraphError(f"unknown vertex {v}")
    if not G.is_independent(sig):
        raise HypothesisViolation(f"{sig} is not independent", witness=tuple(sig))
    if r < 0:
        return True
    masks = G.adjacency_masks()
    idx = G.index()
    sig_bits = [idx[v] for v in sig]
    n = len(masks)

    def extends(tau):
        # tau plus s is independent iff s has no neighbour in tau (s in tau is fine)
        return any(not masks[s] & tau for s in sig_bits)

    def walk(tau, size, allowed):
        if not extends(tau):
            return False
        if size == r:
            return True
        while allowed:
            low = allowed & -allowed
            allowed ^= low
            i = low.bit_length() - 1
            if not walk(tau | low, size + 1, allowed & ~masks[i]):
                return False
        return True

    return walk(0, 0, (1 << n) - 1)


def distance3_bound(G: Graph, S: Sequence[int]) -> int:
    """#S - 2 for a vertex set whose members are pairwise at distance >= 3."""
    vs = sorted(set(S))
    for v in vs:
        if v not in G:
            raise GraphError(f"unknown vertex {v}")
    for u, v in combinations(vs, 2):
        d = bfs_distances(G, u).get(v)
        if d is not None and d < 3:
            raise HypothesisViolation(f"vertices {u} and {v} are at distance {d}", witness=(u, v, d))
    return len(vs) - 2


def diameter_bound(G: Graph) -> int:
    """floor(diam / 3) - 1 for a connected graph."""
    return diameter(G) // 3 - 1


def maxdeg_bound(G: Graph) -> int:
    """floor(dim I_G / m) - 1 where m is the maximum degree (m >= 1)."""
    m = G.max_degree()
    if m == 0:
        raise HypothesisViolation("maximum degree is 0", witness=0)
    return independence_dim(G) // m - 1


def engstrom_clawfree_bound(G: Graph) -> int:
    """floor((2n - 1) / (3m + 2)) - 1 for a claw-free graph on n vertices of maximum degree m."""
    _require_claw_free(G)
    n = len(G)
    if n == 0:
        raise HypothesisViolation("graph has no vertices")
    return (2 * n - 1) // (3 * G.max_degree() + 2) - 1


BOUNDS: Dict[str, Callable[..., int]] = {
    "clawfree": clawfree_bound,
    "distance3": distance3_bound,
    "diameter": diameter_bound,
    "maxdeg": maxdeg_bound,
    "engstrom": engstrom_clawfree_bound,
}


def bound_report(name: str, G: Graph, profile: HomologyProfile = None, **kwargs) -> BoundReport:
    """Compute bound ``name`` and compare it with the homological connectivity of I_G."""
    if name not in BOUNDS:
        raise ValueError(f"unknown bound {name!r}; choose from {sorted(BOUNDS)}")
    claimed = BOUNDS[name](G, **kwargs)
    if profile is None:
        profile = independence_homology(G)
    conn = homological_connectivity(profile)
    inputs = {"graph": G.to_dict()}
    inputs.update({k: list(v) if isinstance(v, (list, tuple)) else v for k, v in kwargs.items()})
    evidence = {
        "level": "homology",
        "homological_connectivity": _connectivity_json(conn),
        "homology": profile.to_json(),
        "holds": conn >= claimed,
    }
    return BoundReport(name, inputs, claimed, evidence)


# --- covers by contractible subcomplexes -------------------------------------------------------------


def catloc_cover(G: Graph, v: int, cap: int = DEFAULT_CHROMATIC_CAP) -> List[SimplicialComplex]:
    """st(v) followed by the star clusters of the colour classes of an optimal
    colouring of the neighbourhood of ``v``."""
    if v not in G:
        raise GraphError(f"unknown vertex {v}")
    I = independence_complex(G)
    classes = chromatic_coloring(induced_subgraph(G, G.neighbors(v)), cap)
    return [star(I, [v])] + [star_cluster(I, c) for c in classes]


def chromatic_cover(G: Graph, cap: int = DEFAULT_CHROMATIC_CAP) -> List[SimplicialComplex]:
    """Star clusters of the colour classes of an optimal colouring of ``G``."""
    if len(G) == 0:
        raise GraphError("graph has no vertices")
    I = independence_complex(G)
    return [star_cluster(I, c) for c in chromatic_coloring(G, cap)]


def check_cover(K: SimplicialComplex, pieces: Sequence[SimplicialComplex]) -> Dict[str, Any]:
    """Evidence that ``pieces`` is a cover of ``K`` by acyclic, greedily collapsible subcomplexes."""
    covered = union(*pieces) if pieces else SimplicialComplex()
    rows = []
    for P in pieces:
        rows.append(
            {
                "facets": [list(f) for f in P.facets],
                "point_homology": reduced_homology(P).is_point(),
                "collapse": greedy_collapse(P).verdict,
            }
        )
    union_ok = covered.same_simplices(K)
    return {
        "size": len(pieces),
        "union_equals_complex": union_ok,
        "pieces": rows,
        "holds": union_ok and all(r["point_homology"] and r["collapse"] == "collapsible" for r in rows),
    }
