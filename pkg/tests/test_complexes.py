from itertools import combinations

import pytest
from hypothesis import assume, given

from conftest import complexes, graphs, hollow_triangle
from oracles import independence_facets, profile_dict, reduced_homology
from starclusters import ComplexError, HypothesisViolation
from starclusters.collapses import greedy_collapse
from starclusters.complexes import (
    Poset,
    SimplicialComplex,
    alexander_dual,
    barycentric_subdivision,
    chain_hits_all_maximal_chains,
    clique_complex,
    cone,
    incomparability_graph,
    independence_complex,
    is_clique,
    join,
    matching_complex,
    order_complex,
    simplicial_suspension,
    star,
    star_cluster,
    suspension_pieces,
)
from starclusters.constructions import jonsson_graph
from starclusters.corpora import make_rng, random_tree
from starclusters.families import (
    GRAPH_W_CENTER,
    complete,
    complete_bipartite,
    cycle,
    graph_W,
    pentagon_prism,
)
from starclusters.graphs import Graph, disjoint_union
from starclusters.homology import reduced_homology as package_homology


def homology_of(K):
    return reduced_homology(K.facets)


def direct_star_cluster(K, sigma):
    return sorted(f for f in K.facets if set(f) & set(sigma))


class TestSimplicialComplex:
    def test_facets_form_antichain(self):
        K = SimplicialComplex([[0, 1, 2], [0, 1], [3]])
        assert K.facets == ((0, 1, 2), (3,))

    def test_ground_must_cover_facets(self):
        with pytest.raises(ComplexError):
            SimplicialComplex([[0, 5]], ground=[0, 1])

    def test_empty_complex(self):
        K = SimplicialComplex([], ground=[0, 1])
        assert K.dim == -1 and K.is_empty() and K.ground == (0, 1)

    @given(complexes())
    def test_contains_iff_inside_a_facet(self, K):
        for r in range(1, 4):
            for s in combinations(K.ground, r):
                assert K.contains(s) == any(set(s) <= set(f) for f in K.facets)

    @given(complexes())
    def test_f_vector_counts_faces(self, K):
        from oracles import all_faces

        faces = all_faces(K.facets)
        assert K.f_vector() == [len(faces[d]) for d in sorted(faces)]


class TestIndependenceAndClique:
    def test_k3(self):
        I = independence_complex(complete(3))
        assert I.dim == 0 and len(I.facets) == 3

    def test_edgeless(self):
        assert independence_complex(Graph.from_edge_list(range(3), [])).facets == ((0, 1, 2),)

    def test_c5_pentagon(self):
        I = independence_complex(cycle(5))
        assert len(I.facets) == 5 and all(len(f) == 2 for f in I.facets)
        assert homology_of(I) == {1: (1, [])}

    def test_hollow_triangle_not_clique(self):
        assert not is_clique(hollow_triangle())

    def test_full_simplex_is_clique(self):
        assert is_clique(SimplicialComplex.full_simplex(range(4)))

    @given(graphs())
    def test_independence_complex_is_clique(self, G):
        assert is_clique(independence_complex(G))

    @given(graphs())
    def test_facets_match_networkx(self, G):
        assert sorted(independence_complex(G).facets) == [f for f in independence_facets(G) if f]

    @given(graphs())
    def test_clique_complex_of_complement(self, G):
        from starclusters.graphs import complement

        assert clique_complex(G).facets == independence_complex(complement(G)).facets


class TestStars:
    def test_star_full_simplex(self):
        K = SimplicialComplex.full_simplex(range(4))
        assert star(K, [2]).facets == K.facets

    def test_star_in_c5(self):
        # two edges meeting at 0
        S = star(independence_complex(cycle(5)), [0])
        assert S.facets == ((0, 2), (0, 3))

    def test_star_hollow_triangle(self):
        assert star(hollow_triangle(), [0]).facets == ((0, 1), (0, 2))

    def test_star_requires_simplex(self):
        with pytest.raises(ComplexError):
            star(hollow_triangle(), [0, 1, 2])

    @given(complexes())
    def test_cluster_of_vertex_is_star(self, K):
        for v in K.vertices:
            assert star_cluster(K, [v]).facets == star(K, [v]).facets

    @given(complexes(max_vertices=5, max_facets=4, max_size=3))
    def test_cluster_matches_definition(self, K):
        for s in K.simplices():
            assert list(star_cluster(K, s).facets) == direct_star_cluster(K, s)

    def test_pentagon_prism_cluster_is_everything(self):
        G = pentagon_prism(5)
        I = independence_complex(G)
        middles = [v for v, (_, c) in G.tags.items() if c == "b"]
        assert star_cluster(I, middles).facets == I.facets

    def test_jonsson_gadget_cluster_collapses(self):
        G = jonsson_graph(hollow_triangle())
        W = [v for v, t in G.tags.items() if t[0] == "facet"]
        SC = star_cluster(independence_complex(G), W)
        assert greedy_collapse(SC).verdict == "collapsible"

    @given(graphs(max_n=6))
    def test_cluster_in_clique_complex_collapses(self, G):
        I = independence_complex(G)
        for s in I.simplices()[:12]:
            assert greedy_collapse(star_cluster(I, s)).verdict == "collapsible"


class TestJoinsAndCones:
    def test_two_zero_spheres(self):
        S0 = SimplicialComplex([[0], [1]])
        assert homology_of(join(S0, S0)) == {1: (1, [])}

    @given(complexes())
    def test_cone_acyclic(self, K):
        assert homology_of(cone(K)) == {}

    @given(complexes(max_vertices=5, max_facets=4, max_size=3))
    def test_suspension_shifts(self, K):
        assert homology_of(simplicial_suspension(K)) == {k + 1: v for k, v in homology_of(K).items()}

    @given(graphs(max_n=4), graphs(max_n=4))
    def test_disjoint_union_gives_join(self, G, H):
        U = disjoint_union(G, H)
        J = join(independence_complex(G), independence_complex(H))
        assert homology_of(independence_complex(U)) == homology_of(J)
        assert len(independence_complex(U).facets) == len(J.facets) or len(U) == 0


def brute_dual(K, ground):
    faces = []
    for r in range(0, len(ground) + 1):
        for s in combinations(ground, r):
            rest = tuple(v for v in ground if v not in s)
            if rest and not K.contains(rest):
                faces.append(s)
    return faces


class TestAlexanderDual:
    def test_three_points(self):
        D = alexander_dual(SimplicialComplex([[1], [2], [3]]))
        assert D.facets == ((1,), (2,), (3,))

    def test_full_simplex_rejected(self):
        with pytest.raises(ComplexError):
            alexander_dual(SimplicialComplex.full_simplex([0, 1]))

    def test_zero_sphere_dual_is_empty(self):
        D = alexander_dual(SimplicialComplex([[0], [1]]))
        assert D.is_empty() and homology_of(D) == {-1: (1, [])}

    def test_edge_plus_point(self):
        D = alexander_dual(SimplicialComplex([[1, 2], [3]]))
        assert D.facets == ((1,), (2,))

    @given(complexes(max_vertices=5))
    def test_matches_definition(self, K):
        assume(not K.is_full_simplex())
        D = alexander_dual(K)
        ground = K.ground
        expected = {s for s in brute_dual(K, ground) if s}
        got = {s for s in D.simplices()}
        assert got == expected
        assert all(len(f) <= len(ground) - 1 for f in D.facets)

    @given(complexes(max_vertices=5))
    def test_combinatorial_duality(self, K):
        assume(not K.is_full_simplex())
        # H~_i(K*) = H~^{n-i-3}(K); ranks agree by universal coefficients
        n = len(K.ground)
        h = homology_of(K)
        hd = homology_of(alexander_dual(K))
        for i in range(-1, n):
            assert hd.get(i, (0, []))[0] == h.get(n - i - 3, (0, []))[0]


class TestBarycentric:
    def test_point(self):
        assert len(barycentric_subdivision(SimplicialComplex([[0]])).facets) == 1

    def test_edge(self):
        B = barycentric_subdivision(SimplicialComplex([[0, 1]]))
        assert len(B.facets) == 2 and B.dim == 1

    def test_hollow_triangle_hexagon(self):
        B = barycentric_subdivision(hollow_triangle())
        assert len(B.vertices) == 6 and len(B.facets) == 6
        assert homology_of(B) == {1: (1, [])}

    def test_incomparability_of_edge(self):
        G = incomparability_graph(SimplicialComplex([[0, 1]]))
        assert len(G) == 3 and G.num_edges() == 1
        (u, w) = G.edges[0]
        assert {G.tags[u], G.tags[w]} == {(0,), (1,)}

    def test_incomparability_of_point(self):
        G = incomparability_graph(SimplicialComplex([[0]]))
        assert len(G) == 1 and G.num_edges() == 0

    def test_incomparability_hexagon(self):
        I = independence_complex(incomparability_graph(hollow_triangle()))
        assert homology_of(I) == {1: (1, [])}

    @given(complexes(max_vertices=4, max_facets=3, max_size=3))
    def test_identity_on_labels(self, K):
        assert independence_complex(incomparability_graph(K)).facets == barycentric_subdivision(K).facets


class TestSuspensionPieces:
    def test_c6(self):
        inter, _ = suspension_pieces(cycle(6), 4)
        assert homology_of(inter) == {0: (2, [])} and len(inter.vertices) == 3

    def test_leaf_in_tree(self):
        T = random_tree(make_rng(7), 8)
        I = independence_complex(T)
        for v in T:
            if T.degree(v) == 1:
                (w,) = T.neighbors(v)
                inter, sc = suspension_pieces(T, v)
                assert sc.facets == star(I, [w]).facets
                both = SimplicialComplex(
                    [tuple(sorted(set(f) & set(g))) for f in star(I, [v]).facets for g in star(I, [w]).facets
                     if set(f) & set(g)]
                )
                assert inter.facets == both.facets

    def test_graph_w(self):
        inter, _ = suspension_pieces(graph_W(), GRAPH_W_CENTER)
        assert homology_of(inter) == {1: (1, [])}
        assert not is_clique(inter)
        assert len(inter.facets) == 3 and all(len(f) == 2 for f in inter.facets)

    def test_rejects_triangle(self):
        with pytest.raises(HypothesisViolation):
            suspension_pieces(complete(3), 0)

    @given(graphs(min_n=2, max_n=7))
    def test_union_and_suspension(self, G):
        for v in G:
            nb = sorted(G.neighbors(v))
            if not nb or any(G.has_edge(a, b) for a, b in combinations(nb, 2)):
                continue
            inter, sc = suspension_pieces(G, v)
            I = independence_complex(G)
            pieces = set(star(I, [v]).facets) | set(sc.facets)
            assert pieces == set(I.facets)
            assert homology_of(I) == {k + 1: h for k, h in homology_of(inter).items()}


class TestOrderComplex:
    def test_chain(self):
        P = Poset.from_relation(range(3), [(0, 1), (1, 2)])
        assert order_complex(P).facets == ((0, 1, 2),)

    def test_maximum_is_witness(self):
        P = Poset.from_relation(range(4), [(0, 3), (1, 3), (2, 3)])
        assert chain_hits_all_maximal_chains(P) == (3,)

    def test_antichain(self):
        P = Poset(range(2))
        assert chain_hits_all_maximal_chains(P) is None
        assert homology_of(order_complex(P)) == {0: (1, [])}

    def test_cycle_rejected(self):
        with pytest.raises(ComplexError):
            Poset(range(2), [(0, 1), (1, 0)])


class TestMatchingComplex:
    def test_k3(self):
        M = matching_complex(complete(3))
        assert len(M.facets) == 3 and M.dim == 0

    def test_k22(self):
        M = matching_complex(complete_bipartite(2, 2))
        assert len(M.facets) == 2 and homology_of(M) == {0: (1, [])}

    def test_k23(self):
        M = matching_complex(complete_bipartite(2, 3))
        assert len(M.facets) == 6 and homology_of(M) == {1: (1, [])}

    @given(graphs(max_n=6))
    def test_package_homology_matches_oracle(self, G):
        assume(G.num_edges() > 0)
        M = matching_complex(G)
        assert profile_dict(package_homology(M)) == homology_of(M)
