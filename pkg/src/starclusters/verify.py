"""Named verification suites.

Each suite turns a family of statements about independence complexes into
cases of (params, expected, computed, pass) and returns a
``VerificationReport``. Inputs are either exhaustive (all labelled graphs up
to a size) or drawn from a seeded Philox stream, so a report is reproducible
from its suite name, parameters and seed. Failing cases carry a ``repro``
payload with the input objects and both sides of the comparison.
"""

from __future__ import annotations

import json
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from itertools import combinations
from math import comb
from typing import Any, Callable, Dict, Iterable, List, Optional

from .bounds import catloc_cover, check_cover, chromatic_cover, clawfree_bound, engstrom_clawfree_bound
from .collapses import dominated_vertex, greedy_collapse, strong_core
from .complexes import (
    SimplicialComplex,
    alexander_dual,
    barycentric_subdivision,
    independence_complex,
    incomparability_graph,
    matching_complex,
    star_cluster,
    suspension_pieces,
)
from .constructions import (
    crossing_resolution,
    csorba_full_subdivision,
    degree3_reduction,
    dowker_pair,
    graph_suspension,
    jonsson_graph,
    subdivide_edge_four,
)
from .corpora import (
    DEFAULT_SEED,
    labeled_graphs_up_to,
    make_rng,
    max_degree_two_graphs,
    random_claw_free,
    random_complex,
    random_forest,
    random_graph,
    random_integer_matrix,
    random_relation,
)
from .formats import relation_from_json
from .families import (
    cycle,
    disjoint_cycles,
    family_A,
    family_B,
    grid_G,
    grid_H,
    grid_points_G,
    grid_points_H,
    kneser,
    path,
    tilde_G,
    tilde_H,
)
from .graphs import Graph, count_independent_sets, disjoint_union, find_claw, is_bipartite
from .homology import (
    ALL,
    HomologyProfile,
    IntegerMatrix,
    determinantal_invariant_factors,
    homological_connectivity,
    independence_homology,
    naive_smith_normal_form,
    reduced_homology,
    smith_normal_form,
)

RP2_FACETS = [
    (1, 2, 3), (1, 3, 4), (1, 4, 5), (1, 5, 6), (1, 2, 6),
    (2, 3, 5), (2, 4, 5), (2, 4, 6), (3, 4, 6), (3, 5, 6),
]  # fmt: skip


@dataclass
class VerificationReport:
    suite: str
    seed: Optional[int]
    params: Dict[str, Any]
    cases: List[Dict[str, Any]] = field(default_factory=list)

    @property
    def summary(self) -> Dict[str, int]:
        passed = sum(1 for c in self.cases if c["pass"])
        return {"pass": passed, "fail": len(self.cases) - passed}

    @property
    def ok(self) -> bool:
        return all(c["pass"] for c in self.cases)

    def failures(self) -> List[Dict[str, Any]]:
        return [c for c in self.cases if not c["pass"]]

    def to_dict(self) -> dict:
        return {
            "suite": self.suite,
            "seed": self.seed,
            "params": self.params,
            "cases": self.cases,
            "summary": self.summary,
        }

    def to_json(self, **kwargs) -> str:
        return json.dumps(self.to_dict(), **kwargs)

    @classmethod
    def from_dict(cls, data: dict) -> "VerificationReport":
        return cls(data["suite"], data["seed"], data["params"], list(data["cases"]))


def _case(params, expected, computed, passed, repro=None) -> Dict[str, Any]:
    c = {"params": params, "expected": expected, "computed": computed, "pass": bool(passed)}
    if not passed:
        payload = {"expected": expected, "computed": computed}
        payload.update(repro or {})
        c["repro"] = payload
    return c


def _conn(c):
    return "all" if c == ALL else c


def _run(worker: Callable, items: Iterable, threads: int = 1) -> List[Dict[str, Any]]:
    """Apply ``worker`` to every item; each call returns a case or a list of cases.

    Results keep the input order whatever the number of workers.
    """
    items = list(items)
    if threads > 1 and len(items) > 1:
        with ProcessPoolExecutor(max_workers=threads) as ex:
            results = list(ex.map(worker, items, chunksize=max(1, len(items) // (4 * threads))))
    else:
        results = [worker(x) for x in items]
    cases: List[Dict[str, Any]] = []
    for r in results:
        if isinstance(r, list):
            cases.extend(r)
        else:
            cases.append(r)
    return cases


def _graph_json(G: Graph) -> dict:
    return G.to_dict()


def _from_json(data: dict) -> Graph:
    return Graph.from_edge_list(data["vertices"], data["edges"])


# --- cycles ------------------------------------------------------------------------------------------


def cycle_profile(n: int) -> HomologyProfile:
    """S^{k-1} when n = 3k - 1 or 3k + 1, two copies of S^{k-1} when n = 3k."""
    if n % 3 == 0:
        return HomologyProfile.sphere(n // 3 - 1, 2)
    k = (n - 1) // 3 if n % 3 == 1 else (n + 1) // 3
    return HomologyProfile.sphere(k - 1)


def _cycle_case(n):
    expected = cycle_profile(n)
    computed = independence_homology(cycle(n))
    return _case({"n": n}, expected.to_json(), computed.to_json(), expected == computed, {"graph": _graph_json(cycle(n))})


def suite_cycles(n_max: int = 15, threads: int = 1) -> VerificationReport:
    if n_max < 3:
        raise ValueError("n_max must be at least 3")
    return VerificationReport("cycles", None, {"n_max": n_max}, _run(_cycle_case, range(3, n_max + 1), threads))


# --- forests -----------------------------------------------------------------------------------------


def _is_point_or_matching(G: Graph) -> bool:
    if len(G) == 1:
        return True
    return len(G) > 0 and all(G.degree(v) == 1 for v in G.vertices)


def _forest_case(item):
    index, gj = item
    G = _from_json(gj)
    prof = independence_homology(G, simplify=False)
    core = strong_core(G)
    computed = {
        "homology": prof.to_json(),
        "point_or_sphere": prof.is_point_or_sphere(),
        "core_dominated_pair": dominated_vertex(core),
        "core_is_point_or_cross_polytope_boundary": _is_point_or_matching(core),
        "core_homology_matches": independence_homology(core, simplify=False) == prof,
    }
    expected = {
        "point_or_sphere": True,
        "core_dominated_pair": None,
        "core_is_point_or_cross_polytope_boundary": True,
        "core_homology_matches": True,
    }
    ok = all(computed[k] == v for k, v in expected.items())
    return _case({"index": index, "graph": gj}, expected, computed, ok, {"graph": gj, "core": _graph_json(core)})


def suite_forests(count: int = 200, v_max: int = 14, seed: int = DEFAULT_SEED, threads: int = 1) -> VerificationReport:
    rng = make_rng(seed)
    items = [(i, _graph_json(random_forest(rng, v_max))) for i in range(count)]
    return VerificationReport("forests", seed, {"count": count, "v_max": v_max}, _run(_forest_case, items, threads))


# --- Kneser graphs -----------------------------------------------------------------------------------


def _kneser_case(k):
    expected = HomologyProfile.sphere(2, comb(k + 3, 3))
    computed = independence_homology(kneser(2, k))
    return _case({"n": 2, "k": k}, expected.to_json(), computed.to_json(), expected == computed, {"family": ["kneser", 2, k]})


def suite_kneser(k_max: int = 3, threads: int = 1) -> VerificationReport:
    if k_max < 0:
        raise ValueError("k_max must be nonnegative")
    return VerificationReport("kneser", None, {"k_max": k_max}, _run(_kneser_case, range(k_max + 1), threads))


# --- square grids ------------------------------------------------------------------------------------

_GRID = {"G": grid_G, "H": grid_H}
_TILDE = {"G": tilde_G, "H": tilde_H}


def _grid_case(item):
    kind, params = item
    if kind == "grid":
        which, n, m = params
        prof = independence_homology(_GRID[which](n, m))
        return _case(
            {"graph": which, "n": n, "m": m},
            {"point_or_sphere": True},
            {"point_or_sphere": prof.is_point_or_sphere(), "homology": prof.to_json()},
            prof.is_point_or_sphere(),
            {"family": [which, n, m]},
        )
    if kind == "tilde":
        which, n, m, k = params
        T = _TILDE[which](n, m, k)
        prof = independence_homology(T)
        checks = {"point_or_sphere": prof.is_point_or_sphere()}
        if k == 0:
            checks["equals_untilded"] = T == _GRID[which](n, m)
        return _case(
            {"graph": "tilde" + which, "n": n, "m": m, "k": k},
            {key: True for key in checks},
            dict(checks, homology=prof.to_json()),
            all(checks.values()),
            {"family": ["tilde" + which, n, m, k]},
        )
    if kind == "shift":
        which, n, m, k = params
        T = _TILDE[which](n, m, k)
        upper = independence_homology(T)
        lower = independence_homology(_TILDE[which](n, m, k + 3))
        expected = {"homology": lower.shifted(1).to_json()}
        computed = {"homology": upper.to_json()}
        ok = upper == lower.shifted(1)
        if which == "G":
            # at v = ([(k+1)/2], [(k+1)/2]) the complex splits as a suspension of
            # st(v) & SC(N(v)), which should be the complex of the k + 3 graph
            v_point = ((k + 1) // 2, (k + 1) // 2)
            v = next(u for u, p in T.tags.items() if p == v_point)
            piece = reduced_homology(suspension_pieces(T, v)[0])
            expected["piece_homology"] = lower.to_json()
            computed["piece_homology"] = piece.to_json()
            ok = ok and piece == lower
        return _case({"graph": "tilde" + which, "n": n, "m": m, "k": k}, expected, computed, ok, {"family": ["tilde" + which, n, m, k]})
    # isomorphism between a tilde graph and the other grid, as a translation of point sets
    which, n, m, k = params
    if which == "G":
        source = set(_TILDE["G"](n, m + 3, k).tags.values())
        target, shift = set(grid_points_H(n, m)), (-2, 1)
    else:
        source = set(_TILDE["H"](n, m + 3, k).tags.values())
        target, shift = set(grid_points_G(n, m)), (-1, 2)
    moved = {(x + shift[0], y + shift[1]) for x, y in source}
    return _case(
        {"graph": "tilde" + which, "n": n, "m": m + 3, "k": k, "translation": list(shift)},
        {"isomorphic": True},
        {"isomorphic": moved == target},
        moved == target,
        {"family": ["tilde" + which, n, m + 3, k]},
    )


def suite_grids(n_max: int = 5, m_max: int = 5, k_max: int = 5, threads: int = 1) -> VerificationReport:
    items = []
    for which in "GH":
        for n in range(n_max + 1):
            for m in range(m_max + 1):
                items.append(("grid", (which, n, m)))
                for k in range(k_max + 1):
                    items.append(("tilde", (which, n, m, k)))
                    if k < n and m != 0:
                        items.append(("shift", (which, n, m, k)))
                    if k > n and m + 3 <= m_max:
                        items.append(("iso", (which, n, m, k)))
    params = {"n_max": n_max, "m_max": m_max, "k_max": k_max}
    return VerificationReport("grids", None, params, _run(_grid_case, items, threads))


# --- constructions -----------------------------------------------------------------------------------


def _construction_cases(item):
    index, gj, choices = item
    G = _from_json(gj)
    I = independence_complex(G)
    base = independence_homology(G)
    cases = []

    def add(name, extra, out: Graph, shift: int, reference: HomologyProfile, structural=None):
        prof = independence_homology(out)
        expected = {"homology": reference.shifted(shift).to_json()}
        computed = {"homology": prof.to_json()}
        for key, (want, got) in (structural or {}).items():
            expected[key] = want
            computed[key] = got
        ok = all(expected[key] == computed[key] for key in expected)
        params = {"index": index, "construction": name, "graph": gj}
        params.update(extra)
        cases.append(_case(params, expected, computed, ok, {"graph": gj, "output": _graph_json(out)}))

    if len(G):
        J = jonsson_graph(I)
        add("jonsson", {}, J, 1, base, {"bipartite": (True, is_bipartite(J))})
    if G.edges:
        dual = reduced_homology(alexander_dual(I))
        add("csorba", {}, csorba_full_subdivision(G), 1, dual)
        for e in choices["four"]:
            add("subdivide_edge_four", {"edge": list(e)}, subdivide_edge_four(G, e), 1, base)
        e1, e2 = choices["crossing"] or (None, None)
        if e1 is not None:
            out = crossing_resolution(G, e1, e2)
            add(
                "crossing_resolution",
                {"edges": [list(e1), list(e2)]},
                out,
                1,
                base,
                {"added_vertices": (5, len(out) - len(G))},
            )
    for hj in choices["suspension"]:
        H = _from_json(hj)
        out = graph_suspension(G, H)
        structural = {"bipartite": (True, is_bipartite(out))} if H == G else None
        add("graph_suspension", {"subgraph": hj}, out, 1, base, structural)
    out, r = degree3_reduction(G)
    add("degree3_reduction", {"rounds": r}, out, r, base, {"max_degree_at_most_3": (True, out.max_degree() <= 3)})
    return cases


def _disjoint_edge_pairs(G: Graph):
    return [(a, b) for a, b in combinations(G.edges, 2) if not set(a) & set(b)]


def _exhaustive_choices(G: Graph):
    pairs = _disjoint_edge_pairs(G)
    subgraphs = [G, Graph.from_edge_list(G.vertices, [])]
    if G.edges:
        subgraphs.append(Graph.from_edge_list(G.edges[0], [G.edges[0]]))
    return {
        "four": list(G.edges),
        "crossing": pairs[0] if pairs else None,
        "suspension": [_graph_json(H) for H in subgraphs if len(H)],
    }


def _random_choices(rng, G: Graph):
    edges = list(G.edges)
    four = [edges[int(rng.integers(len(edges)))]] if edges else []
    pairs = _disjoint_edge_pairs(G)
    crossing = pairs[int(rng.integers(len(pairs)))] if pairs else None
    keep = [e for e in edges if rng.random() < 0.5]
    verts = sorted({v for e in keep for v in e} | {v for v in G.vertices if rng.random() < 0.3})
    subgraphs = [G]
    if verts:
        subgraphs.append(Graph.from_edge_list(verts, keep))
    return {"four": four, "crossing": crossing, "suspension": [_graph_json(H) for H in subgraphs]}


def _construction_outputs(G: Graph, choices) -> List[Graph]:
    outs = [jonsson_graph(independence_complex(G))] if len(G) else []
    if G.edges:
        outs.append(csorba_full_subdivision(G))
        outs += [subdivide_edge_four(G, e) for e in choices["four"]]
        if choices["crossing"]:
            outs.append(crossing_resolution(G, *choices["crossing"]))
    outs += [graph_suspension(G, _from_json(hj)) for hj in choices["suspension"]]
    outs.append(degree3_reduction(G)[0])
    return outs


def suite_constructions(
    seed: int = DEFAULT_SEED,
    n_exhaustive: int = 5,
    random_count: int = 100,
    v_min: int = 6,
    v_max: int = 9,
    edge_probability: float = 0.3,
    cell_budget: int = 500_000,
    threads: int = 1,
) -> VerificationReport:
    """Suspension identities of every construction.

    Exhaustive over labelled graphs on 1..n_exhaustive vertices, then
    ``random_count`` graphs G(n, edge_probability) with v_min <= n <= v_max.
    A random draw is kept only if every construction output has at most
    ``cell_budget`` independent sets; the number of rejected draws is
    recorded in the report parameters.
    """
    items = []
    for G in labeled_graphs_up_to(n_exhaustive):
        items.append((len(items), _graph_json(G), _exhaustive_choices(G)))
    rng = make_rng(seed)
    rejected = 0
    kept = 0
    while kept < random_count:
        G = random_graph(rng, int(rng.integers(v_min, v_max + 1)), edge_probability)
        choices = _random_choices(rng, G)
        if any(count_independent_sets(out, cell_budget) is None for out in _construction_outputs(G, choices)):
            rejected += 1
            continue
        items.append((len(items), _graph_json(G), choices))
        kept += 1
    params = {
        "n_exhaustive": n_exhaustive,
        "random_count": random_count,
        "v_min": v_min,
        "v_max": v_max,
        "edge_probability": edge_probability,
        "cell_budget": cell_budget,
        "rejected_draws": rejected,
    }
    return VerificationReport("constructions", seed, params, _run(_construction_cases, items, threads))


# --- Dowker ------------------------------------------------------------------------------------------


def _dowker_case(item):
    index, rj = item
    R = relation_from_json(rj)
    KX, KY = dowker_pair(R)
    px, py = reduced_homology(KX), reduced_homology(KY)
    return _case({"index": index, "relation": rj}, px.to_json(), py.to_json(), px == py, {"relation": rj})


def suite_dowker(count: int = 50, x_max: int = 6, y_max: int = 6, seed: int = DEFAULT_SEED, threads: int = 1) -> VerificationReport:
    rng = make_rng(seed)
    items = [(i, random_relation(rng, x_max, y_max).to_dict()) for i in range(count)]
    params = {"count": count, "x_max": x_max, "y_max": y_max}
    return VerificationReport("dowker", seed, params, _run(_dowker_case, items, threads))


# --- star clusters -----------------------------------------------------------------------------------


def _starcluster_case(item):
    index, gj, seed, per_graph = item
    G = _from_json(gj)
    I = independence_complex(G)
    simplices = I.simplices()
    if len(simplices) > per_graph:
        rng = make_rng(seed, index)
        picks = sorted(int(i) for i in rng.choice(len(simplices), size=per_graph, replace=False))
        simplices = [simplices[i] for i in picks]
    seen: Dict[tuple, tuple] = {}
    bad = []
    for s in simplices:
        SC = star_cluster(I, s)
        key = SC.facets
        if key not in seen:
            seen[key] = (reduced_homology(SC).is_point(), greedy_collapse(SC).verdict)
        point, verdict = seen[key]
        if not point or verdict != "collapsible":
            bad.append({"simplex": list(s), "point_homology": point, "collapse": verdict})
    params = {"index": index, "graph": gj, "simplices": [list(s) for s in simplices]}
    return _case(params, {"failures": []}, {"failures": bad}, not bad, {"graph": gj})


def suite_starclusters(n_max: int = 6, per_graph: int = 20, seed: int = DEFAULT_SEED, threads: int = 1) -> VerificationReport:
    items = [(i, _graph_json(G), seed, per_graph) for i, G in enumerate(labeled_graphs_up_to(n_max))]
    params = {"n_max": n_max, "per_graph": per_graph}
    return VerificationReport("starclusters", seed, params, _run(_starcluster_case, items, threads))


# --- claw-free connectivity --------------------------------------------------------------------------


def _clawfree_case(item):
    index, gj, origin = item
    G = _from_json(gj)
    conn = homological_connectivity(independence_homology(G))
    b1, b2 = clawfree_bound(G), engstrom_clawfree_bound(G)
    expected = {"at_least": max(b1, b2), "clawfree_bound": b1, "engstrom_bound": b2}
    computed = {"homological_connectivity": _conn(conn)}
    return _case({"index": index, "origin": origin, "graph": gj}, expected, computed, conn >= b1 and conn >= b2, {"graph": gj})


def suite_clawfree(
    n_max: int = 6, random_count: int = 200, v_min: int = 7, v_max: int = 9, seed: int = DEFAULT_SEED, threads: int = 1
) -> VerificationReport:
    items = []
    for G in labeled_graphs_up_to(n_max):
        if find_claw(G) is None:
            items.append((len(items), _graph_json(G), "exhaustive"))
    rng = make_rng(seed)
    for _ in range(random_count):
        G, recipe = random_claw_free(rng, v_min, v_max)
        items.append((len(items), _graph_json(G), recipe))
    params = {"n_max": n_max, "random_count": random_count, "v_min": v_min, "v_max": v_max}
    return VerificationReport("clawfree", seed, params, _run(_clawfree_case, items, threads))


# --- sharpness of the claw-free bound ----------------------------------------------------------------


def _sharpness_case(item):
    name, k = item
    G = family_A(k) if name == "A" else family_B(k)
    M = matching_complex(G)
    prof = reduced_homology(M)
    want_dim = 2 * k - 1 if name == "A" else 2 * k - 2
    expected = {"dim": want_dim, "homology": HomologyProfile.sphere(k - 1).to_json()}
    computed = {"dim": M.dim, "homology": prof.to_json()}
    ok = M.dim == want_dim and prof == HomologyProfile.sphere(k - 1)
    return _case({"family": name, "k": k}, expected, computed, ok, {"graph": _graph_json(G)})


def suite_sharpness(k_max: int = 4, threads: int = 1) -> VerificationReport:
    items = [(name, k) for name in "AB" for k in range(1, k_max + 1)]
    return VerificationReport("sharpness", None, {"k_max": k_max}, _run(_sharpness_case, items, threads))


# --- covers ------------------------------------------------------------------------------------------


def _cover_case(item):
    index, label, gj, vertices = item
    G = _from_json(gj)
    I = independence_complex(G)
    results = {"chromatic": check_cover(I, chromatic_cover(G))}
    for v in vertices:
        results[f"catloc:{v}"] = check_cover(I, catloc_cover(G, v))
    computed = {
        name: {
            "size": r["size"],
            "union_equals_complex": r["union_equals_complex"],
            "point_homology": [p["point_homology"] for p in r["pieces"]],
            "collapse": [p["collapse"] for p in r["pieces"]],
        }
        for name, r in results.items()
    }
    ok = all(r["holds"] for r in results.values())
    return _case({"index": index, "graph_name": label, "graph": gj}, {"all_covers_hold": True}, computed, ok, {"graph": gj})


def suite_covers(
    n_max: int = 6, random_count: int = 20, v_min: int = 7, v_max: int = 10, seed: int = DEFAULT_SEED, threads: int = 1
) -> VerificationReport:
    """Chromatic and neighbourhood-colouring covers.

    Named graphs and random graphs check the neighbourhood cover at every
    vertex. For the exhaustive corpus vertex 0 suffices: every (graph, vertex)
    pair appears with that vertex relabelled 0.
    """
    items = []
    for label, G in (("C5", cycle(5)), ("Petersen", kneser(2, 1))):
        items.append((len(items), label, _graph_json(G), list(G.vertices)))
    for G in labeled_graphs_up_to(n_max):
        items.append((len(items), "exhaustive", _graph_json(G), [0]))
    rng = make_rng(seed)
    for _ in range(random_count):
        G = random_graph(rng, int(rng.integers(v_min, v_max + 1)), float(rng.uniform(0.2, 0.6)))
        items.append((len(items), "random", _graph_json(G), list(G.vertices)))
    params = {"n_max": n_max, "random_count": random_count, "v_min": v_min, "v_max": v_max}
    return VerificationReport("covers", seed, params, _run(_cover_case, items, threads))


# --- maximum degree two ------------------------------------------------------------------------------


def _maxdeg2_case(item):
    cycles, paths = item
    G = disjoint_cycles(*cycles)
    for m in paths:
        G = disjoint_union(G, path(m))
    prof = independence_homology(G)
    computed = {"homology": prof.to_json()}
    if prof.is_trivial():
        ok, computed["shape"] = True, "point"
    else:
        degrees = prof.nonzero_degrees()
        g = prof[degrees[0]]
        count = g.betti
        r = count.bit_length() - 1
        ok = len(degrees) == 1 and not g.torsion and count == 1 << r and degrees[0] >= r - 1
        computed.update({"shape": "wedge", "dimension": degrees[0], "spheres": count, "r": r})
    return _case(
        {"cycles": list(cycles), "paths": list(paths)},
        {"point_or_equal_sphere_wedge_of_size_2^r_with_dim_at_least_r-1": True},
        computed,
        ok,
        {"graph": _graph_json(G)},
    )


def suite_maxdeg2(v_max: int = 12, threads: int = 1) -> VerificationReport:
    """All graphs of maximum degree <= 2 on <= v_max vertices, one per isomorphism class."""
    return VerificationReport("maxdeg2", None, {"v_max": v_max}, _run(_maxdeg2_case, max_degree_two_graphs(v_max), threads))


# --- Smith normal form oracle ------------------------------------------------------------------------


def _snf_case(item):
    index, rows = item
    M = IntegerMatrix.from_rows(rows)
    fast, rank = smith_normal_form(M)
    ref, ref_rank = naive_smith_normal_form(M)
    computed = {"diagonal": fast, "rank": rank}
    expected = {"diagonal": ref, "rank": ref_rank}
    if len(rows) <= 5 and len(rows[0]) <= 5:
        expected["determinantal"] = determinantal_invariant_factors(M)
        computed["determinantal"] = fast
    return _case({"index": index, "matrix": rows}, expected, computed, expected == computed, {"matrix": rows})


def _rp2_case():
    K = SimplicialComplex(RP2_FACETS)
    expected = HomologyProfile({1: (0, (2,))})
    fast, ref = reduced_homology(K), reduced_homology(K, method="reference")
    return _case(
        {"complex": "RP2", "facets": [list(f) for f in RP2_FACETS]},
        {"sparse": expected.to_json(), "reference": expected.to_json()},
        {"sparse": fast.to_json(), "reference": ref.to_json()},
        fast == expected and ref == expected,
    )


def suite_snf(count: int = 1000, max_dim: int = 8, bound: int = 9, seed: int = DEFAULT_SEED, threads: int = 1) -> VerificationReport:
    rng = make_rng(seed)
    items = [(i, random_integer_matrix(rng, max_dim, bound)) for i in range(count)]
    cases = _run(_snf_case, items, threads) + [_rp2_case()]
    params = {"count": count, "max_dim": max_dim, "bound": bound}
    return VerificationReport("snf", seed, params, cases)


# --- barycentric subdivision -------------------------------------------------------------------------


def _barycentric_case(item):
    index, cj = item
    K = SimplicialComplex(cj["facets"])
    chains = independence_complex(incomparability_graph(K))
    B = barycentric_subdivision(K)
    ok = chains == B
    return _case(
        {"index": index, "complex": cj},
        {"facets": [list(f) for f in B.facets]},
        {"facets": [list(f) for f in chains.facets]},
        ok,
        {"complex": cj},
    )


def suite_barycentric(count: int = 200, max_simplices: int = 8, seed: int = DEFAULT_SEED, threads: int = 1) -> VerificationReport:
    rng = make_rng(seed)
    items = [(i, random_complex(rng, max_simplices).to_dict()) for i in range(count)]
    params = {"count": count, "max_simplices": max_simplices}
    return VerificationReport("barycentric", seed, params, _run(_barycentric_case, items, threads))


SUITES: Dict[str, Callable[..., VerificationReport]] = {
    "cycles": suite_cycles,
    "forests": suite_forests,
    "kneser": suite_kneser,
    "grids": suite_grids,
    "constructions": suite_constructions,
    "dowker": suite_dowker,
    "starclusters": suite_starclusters,
    "clawfree": suite_clawfree,
    "sharpness": suite_sharpness,
    "covers": suite_covers,
    "maxdeg2": suite_maxdeg2,
    "snf": suite_snf,
    "barycentric": suite_barycentric,
}


def run_suite(name: str, **params) -> VerificationReport:
    if name not in SUITES:
        raise ValueError(f"unknown suite {name!r}; choose from {sorted(SUITES)}")
    return SUITES[name](**params)
