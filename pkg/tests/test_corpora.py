import pytest

from starclusters.corpora import (
    DEFAULT_SEED,
    labeled_graphs,
    labeled_graphs_up_to,
    make_rng,
    max_degree_two_graphs,
    random_claw_free,
    random_complex,
    random_forest,
    random_integer_matrix,
    random_relation,
    random_tree,
)
from starclusters.graphs import connected_components, is_claw_free


def test_labeled_graph_counts():
    assert [sum(1 for _ in labeled_graphs(n)) for n in range(1, 6)] == [1, 2, 8, 64, 1024]
    assert sum(1 for _ in labeled_graphs_up_to(6)) == 1 + 2 + 8 + 64 + 1024 + 32768


def test_same_seed_same_draws():
    a, b = make_rng(DEFAULT_SEED, 3), make_rng(DEFAULT_SEED, 3)
    assert random_forest(a, 14) == random_forest(b, 14)
    assert make_rng(1).integers(0, 10**9) != make_rng(2).integers(0, 10**9)


def test_streams_are_independent():
    assert make_rng(5, 0).integers(0, 10**9) != make_rng(5, 1).integers(0, 10**9)


@pytest.mark.parametrize("bad", [-1, 2**64])
def test_seed_range(bad):
    with pytest.raises(ValueError):
        make_rng(bad)


@pytest.mark.parametrize("n", [1, 2, 5, 12])
def test_random_tree(n):
    T = random_tree(make_rng(n), n)
    assert len(T) == n and T.num_edges() == n - 1 and len(connected_components(T)) == 1


def test_random_forest_is_acyclic():
    rng = make_rng(11)
    for _ in range(50):
        F = random_forest(rng, 14)
        assert 1 <= len(F) <= 14
        assert F.num_edges() == len(F) - len(connected_components(F))


def test_random_claw_free():
    rng = make_rng(12)
    recipes = set()
    for _ in range(60):
        G, recipe = random_claw_free(rng, 7, 9)
        recipes.add(recipe)
        assert is_claw_free(G) and 7 <= len(G)
    assert recipes == {"dense", "line", "cobipartite"}


def test_random_objects_respect_limits():
    rng = make_rng(13)
    for _ in range(30):
        assert random_complex(rng, 8).num_simplices() <= 8
        M = random_integer_matrix(rng, 8, 9)
        assert 1 <= len(M) <= 8 and all(abs(x) <= 9 for row in M for x in row)
        R = random_relation(rng, 6, 6)
        assert len(R.X) <= 6 and len(R.Y) <= 6


def test_max_degree_two_enumeration():
    shapes = list(max_degree_two_graphs(4))
    assert ((3,), (1,)) in shapes and ((), (2, 2)) in shapes and ((4,), ()) in shapes
    assert len(shapes) == len(set(shapes))
    assert all(sum(c) + sum(p) <= 4 for c, p in shapes)
