import os
import sys
from itertools import combinations

import pytest
from hypothesis import settings
from hypothesis import strategies as st

sys.path.insert(0, os.path.dirname(__file__))

from starclusters import Graph, SimplicialComplex  # noqa: E402

settings.register_profile("default", max_examples=60, deadline=None)
settings.load_profile("default")


@st.composite
def graphs(draw, min_n=0, max_n=7):
    n = draw(st.integers(min_n, max_n))
    pairs = list(combinations(range(n), 2))
    keep = draw(st.lists(st.booleans(), min_size=len(pairs), max_size=len(pairs)))
    return Graph.from_edge_list(range(n), [p for p, k in zip(pairs, keep) if k])


@st.composite
def complexes(draw, max_vertices=6, max_facets=5, max_size=4):
    facets = draw(
        st.lists(
            st.sets(st.integers(0, max_vertices - 1), min_size=1, max_size=max_size),
            min_size=1,
            max_size=max_facets,
        )
    )
    return SimplicialComplex([sorted(f) for f in facets])


def hollow_triangle():
    return SimplicialComplex([[0, 1], [1, 2], [0, 2]])


@pytest.fixture
def triangle_boundary():
    return hollow_triangle()


def pytest_terminal_summary(terminalreporter):
    from test_acceptance import RESULTS

    if RESULTS:
        terminalreporter.section("acceptance criteria")
        for line in RESULTS:
            terminalreporter.write_line(line)
