import json

import pytest

from oracles import independence_homology as oracle_ih
from oracles import profile_dict
from starclusters.families import cycle, disjoint_cycles
from starclusters.graphs import Graph
from starclusters.homology import HomologyProfile
from starclusters.verify import (
    SUITES,
    VerificationReport,
    _case,
    _forest_case,
    cycle_profile,
    run_suite,
    suite_cycles,
    suite_kneser,
)

SMALL = {
    "cycles": {"n_max": 8},
    "forests": {"count": 10, "v_max": 9},
    "kneser": {"k_max": 1},
    "grids": {"n_max": 2, "m_max": 4, "k_max": 3},
    "constructions": {"n_exhaustive": 3, "random_count": 3, "v_min": 6, "v_max": 7},
    "dowker": {"count": 10},
    "starclusters": {"n_max": 3, "per_graph": 5},
    "clawfree": {"n_max": 4, "random_count": 5},
    "sharpness": {"k_max": 2},
    "covers": {"n_max": 3, "random_count": 2, "v_min": 6, "v_max": 7},
    "maxdeg2": {"v_max": 6},
    "snf": {"count": 30},
    "barycentric": {"count": 20},
}


def test_every_suite_has_a_small_run():
    assert set(SMALL) == set(SUITES)


@pytest.mark.parametrize("name", sorted(SMALL))
def test_small_runs_pass_and_are_deterministic(name):
    a = run_suite(name, **SMALL[name])
    b = run_suite(name, **SMALL[name])
    assert a.ok and a.cases
    assert a.to_json() == b.to_json()
    assert VerificationReport.from_dict(json.loads(a.to_json())).to_dict() == a.to_dict()


@pytest.mark.parametrize("name", ["forests", "dowker", "snf", "barycentric", "starclusters"])
def test_seed_recorded_and_used(name):
    params = dict(SMALL[name])
    a = run_suite(name, seed=1, **params)
    b = run_suite(name, seed=2, **params)
    assert a.seed == 1 and b.seed == 2
    assert a.to_dict()["cases"] != b.to_dict()["cases"]


def test_threads_keep_order():
    assert run_suite("snf", count=40, threads=2).to_json() == run_suite("snf", count=40).to_json()


class TestCycleExpectations:
    def test_values(self):
        assert cycle_profile(7) == HomologyProfile.sphere(1)
        assert cycle_profile(9) == HomologyProfile.sphere(2, 2)
        assert cycle_profile(3) == HomologyProfile.sphere(0, 2)

    @pytest.mark.parametrize("n", range(3, 13))
    def test_formula_matches_oracle(self, n):
        assert profile_dict(cycle_profile(n)) == oracle_ih(cycle(n))

    def test_rejects_tiny(self):
        with pytest.raises(ValueError):
            suite_cycles(2)


class TestForestCases:
    def test_single_edge(self):
        case = _forest_case((0, Graph.from_edge_list([0, 1], [(0, 1)]).to_dict()))
        assert case["pass"] and case["computed"]["homology"] == {"0": {"betti": 1, "torsion": []}}

    def test_claw(self):
        G = Graph.from_edge_list(range(4), [(0, 1), (0, 2), (0, 3)])
        case = _forest_case((0, G.to_dict()))
        # the triangle on the leaves plus the isolated centre: two components
        assert case["pass"] and case["computed"]["homology"] == {"0": {"betti": 1, "torsion": []}}
        assert oracle_ih(G) == {0: (1, [])}


def test_kneser_expected_ranks():
    report = suite_kneser(1)
    assert [c["computed"] for c in report.cases] == [
        {"2": {"betti": 1, "torsion": []}},
        {"2": {"betti": 4, "torsion": []}},
    ]


def test_two_triangles_wedge():
    assert oracle_ih(disjoint_cycles(3, 3)) == {1: (4, [])}


def test_failing_case_carries_repro():
    c = _case({"n": 1}, {"x": 1}, {"x": 2}, False, {"graph": {"vertices": [0], "edges": []}})
    assert c["repro"] == {"expected": {"x": 1}, "computed": {"x": 2}, "graph": {"vertices": [0], "edges": []}}
    assert "repro" not in _case({}, 1, 1, True)


def test_summary_and_failures():
    r = VerificationReport("x", None, {}, [_case({}, 1, 1, True), _case({}, 1, 2, False)])
    assert r.summary == {"pass": 1, "fail": 1} and not r.ok and len(r.failures()) == 1


def test_unknown_suite():
    with pytest.raises(ValueError):
        run_suite("nope")
