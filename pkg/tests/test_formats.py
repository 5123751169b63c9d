import json

import pytest
from hypothesis import given

from conftest import complexes, graphs
from starclusters import ParseError
from starclusters.complexes import SimplicialComplex
from starclusters.constructions import Relation
from starclusters.families import cycle
from starclusters.formats import (
    dumps,
    graph_from_edge_list_text,
    graph_to_edge_list_text,
    parse,
    parse_complex,
    parse_graph,
    to_csv,
)
from starclusters.homology import HomologyProfile


class TestRoundTrip:
    @given(graphs())
    def test_graph_json(self, G):
        assert parse(dumps(G)) == G

    @given(graphs())
    def test_graph_edge_list(self, G):
        assert parse(graph_to_edge_list_text(G)) == G

    @given(complexes())
    def test_complex_json(self, K):
        back = parse(dumps(K))
        assert back == K and back.ground == K.ground

    def test_complex_keeps_larger_ground(self):
        K = SimplicialComplex([[0]], ground=[0, 1, 2])
        assert parse(dumps(K)).ground == (0, 1, 2)

    def test_relation(self):
        R = Relation([0, 1], [0, 1, 2], [(0, 2), (1, 0)])
        assert parse(dumps(R)) == R

    def test_profile_json(self):
        P = HomologyProfile({1: (2, ()), 2: (0, (2,))})
        assert HomologyProfile.from_json(json.loads(dumps(P))) == P


class TestEdgeListText:
    def test_comments_and_isolated(self):
        G = graph_from_edge_list_text("# a path\n0 1\n1 2\n#vertex 7\n\n")
        assert G.vertices == (0, 1, 2, 7) and G.num_edges() == 2

    @pytest.mark.parametrize(
        "text, line, column",
        [
            ("0 1\n1 x\n", 2, 3),
            ("0 1 2\n", 1, 5),
            ("0\n", 1, 2),
            ("0 1\n  3 3\n", 2, 3),
            ("0 -1\n", 1, 3),
            ("#vertex\n", 1, 1),
        ],
    )
    def test_errors_carry_position(self, text, line, column):
        with pytest.raises(ParseError) as info:
            graph_from_edge_list_text(text)
        assert (info.value.line, info.value.column) == (line, column)
        assert str(info.value).startswith(f"line {line}, column {column}: ")


class TestJsonErrors:
    def test_bad_json_position(self):
        with pytest.raises(ParseError) as info:
            parse('{"edges": [[0, 1],\n  [1, }')
        assert info.value.line == 2

    @pytest.mark.parametrize(
        "text",
        [
            '{"edges": [[0]]}',
            '{"edges": [[0, 0]]}',
            '{"edges": "no"}',
            '{"facets": [[0, "a"]]}',
            '{"facets": [[0, 3]], "ground": [0]}',
            '{"X": [0], "Y": [0], "pairs": [[0, 5]]}',
            '{"vertices": [0, true], "edges": []}',
            "[1, 2]",
        ],
    )
    def test_rejected(self, text):
        with pytest.raises(ParseError):
            parse(text)

    def test_typed_parsers(self):
        with pytest.raises(ParseError):
            parse_complex(dumps(cycle(4)))
        with pytest.raises(ParseError):
            parse_graph(dumps(SimplicialComplex([[0]])))


class TestCsv:
    def test_graph(self):
        assert to_csv(cycle(3)).splitlines() == ["u,v", "0,1", "0,2", "1,2"]

    def test_complex(self):
        assert to_csv(SimplicialComplex([[0, 1], [2]])).splitlines() == ["facet", "0 1", "2"]

    def test_profile(self):
        assert to_csv(HomologyProfile({1: (0, (2,))})).splitlines() == ["degree,betti,torsion", "1,0,2"]

    def test_unsupported(self):
        with pytest.raises(TypeError):
            to_csv(3)
