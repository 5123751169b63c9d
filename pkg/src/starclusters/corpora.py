"""Deterministic input corpora: exhaustive small graphs and seeded random objects.

Random objects come from a counter-based generator (numpy's Philox) so a
64-bit seed, plus an index for per-case streams, reproduces every draw.
"""

from __future__ import annotations

from itertools import combinations
from typing import Iterator, List, Tuple

import numpy as np

from .complexes import SimplicialComplex
from .constructions import Relation
from .graphs import Graph, complement, disjoint_union, empty_graph, find_claw, line_graph, relabel

DEFAULT_SEED = 20260418


def make_rng(seed: int, *stream: int) -> np.random.Generator:
    """Philox generator for ``seed``; extra integers select an independent sub-stream."""
    if seed < 0 or seed >= 2**64:
        raise ValueError("seed must be a 64-bit unsigned integer")
    return np.random.Generator(np.random.Philox(np.random.SeedSequence([seed, *stream])))


def labeled_graphs(n: int) -> Iterator[Graph]:
    """All 2^(n choose 2) graphs on the vertex set 0..n-1."""
    pairs = list(combinations(range(n), 2))
    for bits in range(1 << len(pairs)):
        yield Graph.from_edge_list(range(n), [pairs[i] for i in range(len(pairs)) if bits >> i & 1])


def labeled_graphs_up_to(n_max: int, n_min: int = 1) -> Iterator[Graph]:
    for n in range(n_min, n_max + 1):
        yield from labeled_graphs(n)


def random_graph(rng: np.random.Generator, n: int, p: float) -> Graph:
    pairs = list(combinations(range(n), 2))
    keep = rng.random(len(pairs)) < p
    return Graph.from_edge_list(range(n), [e for e, k in zip(pairs, keep) if k])


def random_tree(rng: np.random.Generator, n: int) -> Graph:
    """Uniform labelled tree on 0..n-1 (decoded from a random Pruefer sequence)."""
    if n <= 2:
        return Graph.from_edge_list(range(n), [(0, 1)] if n == 2 else [])
    seq = [int(x) for x in rng.integers(0, n, size=n - 2)]
    degree = [1] * n
    for x in seq:
        degree[x] += 1
    edges = []
    for x in seq:
        leaf = min(i for i in range(n) if degree[i] == 1)
        edges.append((leaf, x))
        degree[leaf] -= 1
        degree[x] -= 1
    u, w = [i for i in range(n) if degree[i] == 1]
    edges.append((u, w))
    return Graph.from_edge_list(range(n), edges)


def random_forest(rng: np.random.Generator, v_max: int) -> Graph:
    """Disjoint union of uniform random trees with at most ``v_max`` vertices in
    total, randomly relabelled."""
    total = int(rng.integers(1, v_max + 1))
    parts = int(rng.integers(1, max(1, total // 3) + 1))
    cuts = sorted(int(c) for c in rng.choice(np.arange(1, total), size=parts - 1, replace=False)) if parts > 1 else []
    sizes = [b - a for a, b in zip([0] + cuts, cuts + [total])]
    G = empty_graph()
    for s in sizes:
        G = disjoint_union(G, random_tree(rng, s))
    perm = [int(x) for x in rng.permutation(total)]
    return relabel(G, dict(zip(G.vertices, perm)))


def random_claw_free(rng: np.random.Generator, n_min: int, n_max: int) -> Tuple[Graph, str]:
    """A claw-free graph on n_min..n_max vertices and the recipe that produced it.

    Recipes: rejection-sampled dense G(n, p), the line graph of a random graph
    with n edges, or the complement of a random bipartite graph (independence
    number at most 2).
    """
    n = int(rng.integers(n_min, n_max + 1))
    recipe = ("dense", "line", "cobipartite")[int(rng.integers(0, 3))]
    if recipe == "dense":
        for _ in range(500):
            G = random_graph(rng, n, float(rng.uniform(0.45, 0.9)))
            if find_claw(G) is None:
                return G, recipe
        recipe = "line"
    if recipe == "line":
        base_n = int(rng.integers(5, 9))
        pairs = list(combinations(range(base_n), 2))
        chosen = sorted(int(i) for i in rng.choice(len(pairs), size=n, replace=False))
        base = Graph.from_edge_list(range(base_n), [pairs[i] for i in chosen])
        L = line_graph(base)
        return Graph.from_edge_list(L.vertices, L.edges), recipe
    split = int(rng.integers(1, n))
    p = float(rng.uniform(0.2, 0.8))
    edges = [(a, b) for a in range(split) for b in range(split, n) if rng.random() < p]
    return complement(Graph.from_edge_list(range(n), edges)), recipe


def random_relation(rng: np.random.Generator, x_max: int, y_max: int) -> Relation:
    nx_, ny = int(rng.integers(1, x_max + 1)), int(rng.integers(1, y_max + 1))
    p = float(rng.uniform(0.2, 0.8))
    pairs = [(x, y) for x in range(nx_) for y in range(ny) if rng.random() < p]
    return Relation(range(nx_), range(ny), pairs)


def random_complex(rng: np.random.Generator, max_simplices: int, n_vertices: int = 5) -> SimplicialComplex:
    """A random non-empty complex with at most ``max_simplices`` non-empty simplices."""
    while True:
        k = int(rng.integers(1, 4))
        facets = []
        for _ in range(k):
            size = int(rng.integers(1, 4))
            facets.append([int(v) for v in rng.choice(n_vertices, size=size, replace=False)])
        K = SimplicialComplex(facets)
        if K.num_simplices() <= max_simplices:
            return K


def random_integer_matrix(rng: np.random.Generator, max_dim: int, bound: int) -> List[List[int]]:
    """Entries in [-bound, bound]; density and a common factor vary so that
    rank deficiency and torsion both show up."""
    r, c = int(rng.integers(1, max_dim + 1)), int(rng.integers(1, max_dim + 1))
    factor = int(rng.choice([1, 1, 2, 3]))
    top = bound // factor
    density = float(rng.uniform(0.2, 1.0))
    vals = rng.integers(-top, top + 1, size=(r, c)) * factor
    mask = rng.random((r, c)) < density
    return [[int(v) if m else 0 for v, m in zip(row, mrow)] for row, mrow in zip(vals, mask)]


def _partitions(total: int, smallest: int = 1) -> Iterator[List[int]]:
    if total == 0:
        yield []
        return
    for first in range(smallest, total + 1):
        for rest in _partitions(total - first, first):
            yield [first] + rest


def max_degree_two_graphs(v_max: int) -> Iterator[Tuple[Tuple[int, ...], Tuple[int, ...]]]:
    """Every graph of maximum degree <= 2 on at most ``v_max`` vertices, up to
    isomorphism, as (cycle lengths, path lengths)."""
    for total in range(0, v_max + 1):
        for cyc_total in range(0, total + 1):
            cycle_parts = [p for p in _partitions(cyc_total, 3)] if cyc_total else [[]]
            for cycles in cycle_parts:
                for paths in _partitions(total - cyc_total):
                    yield tuple(cycles), tuple(paths)
