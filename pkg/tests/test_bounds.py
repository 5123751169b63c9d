from itertools import combinations

import pytest
from hypothesis import assume, given

from conftest import graphs
from oracles import independence_homology as oracle_ih
from oracles import profile_dict
from oracles import reduced_homology as oracle_homology
from starclusters import GraphError, HypothesisViolation
from starclusters.bounds import (
    bound_report,
    catloc_cover,
    check_cover,
    chromatic_cover,
    clawfree_bound,
    diameter_bound,
    distance3_bound,
    engstrom_clawfree_bound,
    extension_hypothesis,
    independence_dim,
    maxdeg_bound,
)
from starclusters.complexes import independence_complex, matching_complex, union
from starclusters.families import complete, complete_bipartite, cycle, family_A, kneser, path
from starclusters.graphs import Graph, bfs_distances, is_claw_free, is_connected, line_graph
from starclusters.homology import homological_connectivity, reduced_homology


def oracle_connectivity(G):
    h = oracle_ih(G)
    return min(h) - 1 if h else float("inf")


class TestClawFree:
    def test_c6(self):
        # I_{C_6} has facets {0,2,4} and {1,3,5}, so dim 2
        assert independence_dim(cycle(6)) == 2
        assert clawfree_bound(cycle(6)) == 0
        assert oracle_connectivity(cycle(6)) == 0

    def test_matching_complex_of_two_squares(self):
        G = line_graph(family_A(2))
        assert independence_dim(G) == 3 and clawfree_bound(G) == 0
        # connected, but the next level fails: H~_1 = Z
        assert oracle_ih(G) == {1: (1, [])}

    def test_m5(self):
        G = line_graph(complete(5))
        assert independence_dim(G) == 1 and clawfree_bound(G) == -1

    def test_claw_rejected_with_witness(self):
        with pytest.raises(HypothesisViolation) as info:
            clawfree_bound(complete_bipartite(1, 3))
        assert info.value.witness[0] == 0

    @given(graphs(max_n=7))
    def test_bound_holds(self, G):
        assume(len(G) > 0 and is_claw_free(G))
        assert oracle_connectivity(G) >= clawfree_bound(G)
        assert oracle_connectivity(G) >= engstrom_clawfree_bound(G)

    @given(graphs(max_n=5))
    def test_bound_holds_on_line_graphs(self, G):
        L = line_graph(G)
        assume(len(L) > 0)
        assert oracle_connectivity(L) >= clawfree_bound(L)

    def test_engstrom_formula(self):
        # n = 6, m = 2: floor(11 / 8) - 1 = 0
        assert engstrom_clawfree_bound(cycle(6)) == 0
        assert engstrom_clawfree_bound(complete(4)) == 7 // 11 - 1


class TestExtension:
    def test_r_zero(self):
        assert extension_hypothesis(cycle(5), [0], 0)

    def test_c4(self):
        # tau = {1} is adjacent to both 0 and 2; a true answer would force I_{C_4} = S^0 to be connected
        assert not extension_hypothesis(cycle(4), [0, 2], 1)
        assert extension_hypothesis(cycle(4), [0, 2], 0)

    @given(graphs(min_n=1, max_n=7))
    def test_implies_connectivity(self, G):
        c = oracle_connectivity(G)
        for sigma in independence_complex(G).facets:
            for r in range(1, 4):
                if extension_hypothesis(G, sigma, r):
                    assert c >= r - 1

    def test_dependent_sigma(self):
        with pytest.raises(HypothesisViolation):
            extension_hypothesis(cycle(4), [0, 1], 1)

    @given(graphs(min_n=1, max_n=7))
    def test_matches_brute_force(self, G):
        sigma = list(independence_complex(G).facets[0])
        for r in range(0, 3):
            brute = all(
                any(G.is_independent(set(tau) | {s}) for s in sigma)
                for k in range(r + 1)
                for tau in combinations(G.vertices, k)
                if G.is_independent(tau)
            )
            assert extension_hypothesis(G, sigma, r) == brute

    @given(graphs(min_n=1, max_n=7))
    def test_claw_free_maximum_sets_extend(self, G):
        assume(is_claw_free(G))
        I = independence_complex(G)
        d = I.dim
        sigma = next(f for f in I.facets if len(f) == d + 1)
        assert extension_hypothesis(G, sigma, (d - 2) // 2 + 1)


class TestDistanceBounds:
    def test_p7(self):
        assert distance3_bound(path(7), [0, 3, 6]) == 1
        h = oracle_ih(path(7))
        assert 0 not in h and 1 not in h

    def test_too_close(self):
        with pytest.raises(HypothesisViolation) as info:
            distance3_bound(path(7), [0, 2])
        assert info.value.witness == (0, 2, 2)

    def test_c9_diameter(self):
        assert diameter_bound(cycle(9)) == 0
        assert oracle_connectivity(cycle(9)) >= 0

    @pytest.mark.parametrize("n", range(3, 13))
    def test_maxdeg_on_cycles(self, n):
        b = maxdeg_bound(cycle(n))
        assert b == independence_dim(cycle(n)) // 2 - 1
        assert oracle_connectivity(cycle(n)) >= b

    def test_maxdeg_edgeless(self):
        with pytest.raises(HypothesisViolation):
            maxdeg_bound(Graph.from_edge_list(range(3), []))

    @given(graphs(min_n=1, max_n=7))
    def test_all_bounds_hold(self, G):
        c = oracle_connectivity(G)
        if G.max_degree() > 0:
            assert c >= maxdeg_bound(G)
        if is_connected(G):
            assert c >= diameter_bound(G)
        S = []
        for v in G.vertices:
            if all(bfs_distances(G, u).get(v, 99) >= 3 for u in S):
                S.append(v)
        assert c >= distance3_bound(G, S)


class TestReport:
    def test_fields(self):
        r = bound_report("clawfree", cycle(6))
        d = r.to_dict()
        assert d["claimed"] == 0 and d["evidence"]["level"] == "homology"
        assert d["evidence"]["homology"] == {"1": {"betti": 2, "torsion": []}}
        assert r.holds

    def test_acyclic_serialised_as_all(self):
        r = bound_report("maxdeg", Graph.from_edge_list(range(3), [(0, 1)]))
        assert r.to_dict()["evidence"]["homological_connectivity"] == "all"

    def test_unknown(self):
        with pytest.raises(ValueError):
            bound_report("nope", cycle(5))

    def test_kwargs_passed(self):
        r = bound_report("distance3", path(7), S=[0, 3, 6])
        assert r.inputs["S"] == [0, 3, 6] and r.holds


class TestCovers:
    def test_c5_vertex_zero(self):
        G = cycle(5)
        pieces = catloc_cover(G, 0)
        assert len(pieces) == 2
        assert union(*pieces).same_simplices(independence_complex(G))

    @pytest.mark.parametrize("n", [3, 4, 5])
    def test_complete(self, n):
        assert len(catloc_cover(complete(n), 0)) == n

    def test_bipartite_neighbourhood(self):
        # the centre of a wheel on an even rim sees an even cycle
        G = Graph.from_edge_list(range(7), [(0, i) for i in range(1, 7)] + [(i, i % 6 + 1) for i in range(1, 7)])
        assert len(catloc_cover(G, 0)) == 3
        assert check_cover(independence_complex(G), catloc_cover(G, 0))["union_equals_complex"]

    def test_chromatic_bipartite(self):
        assert len(chromatic_cover(cycle(6))) == 2

    def test_chromatic_k3(self):
        pieces = chromatic_cover(complete(3))
        assert [P.facets for P in pieces] == [((0,),), ((1,),), ((2,),)]

    def test_petersen(self):
        G = kneser(2, 1)
        ev = check_cover(independence_complex(G), chromatic_cover(G))
        assert ev["size"] == 3 and ev["holds"]

    def test_unknown_vertex(self):
        with pytest.raises(GraphError):
            catloc_cover(cycle(5), 9)

    @given(graphs(min_n=1, max_n=7))
    def test_covers_are_contractible(self, G):
        I = independence_complex(G)
        for pieces in (catloc_cover(G, G.vertices[0]), chromatic_cover(G)):
            ev = check_cover(I, pieces)
            assert ev["holds"]
            for P in pieces:
                assert oracle_homology(P.facets) == {}


@pytest.mark.parametrize("n", range(3, 8))
def test_matching_complex_of_complete_graph(n):
    M = matching_complex(complete(n))
    assert profile_dict(reduced_homology(M)) == oracle_homology(M.facets)
    # informational: the classical connectivity bound for M_n
    assert homological_connectivity(M) >= (n - 5) // 3
