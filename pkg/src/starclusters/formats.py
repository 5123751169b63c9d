"""Reading and writing graphs, complexes, relations and homology profiles.

Graphs: ``{"vertices": [...], "edges": [[u, v], ...]}`` or edge-list text,
one ``u v`` pair per line, isolated vertices declared as ``#vertex u``; other
lines starting with ``#`` are comments. Complexes: ``{"ground": [...],
"facets": [[...], ...]}``. Relations: ``{"X": [...], "Y": [...], "pairs": [[x, y], ...]}``.
"""

from __future__ import annotations

import csv
import io
import json
from typing import Any, Union

from .complexes import SimplicialComplex
from .constructions import Relation
from .exceptions import ParseError, StarClusterError
from .graphs import Graph
from .homology import HomologyProfile

Parsed = Union[Graph, SimplicialComplex, Relation]


def _load_json(text: str) -> Any:
    try:
        return json.loads(text)
    except json.JSONDecodeError as exc:
        raise ParseError(exc.msg, exc.lineno, exc.colno) from None


def _int_list(value, what):
    if not isinstance(value, list) or not all(isinstance(x, int) and not isinstance(x, bool) for x in value):
        raise ParseError(f"{what} must be a list of integers")
    return value


def graph_from_json(data: Any) -> Graph:
    if not isinstance(data, dict) or "edges" not in data:
        raise ParseError('graph JSON needs an "edges" list')
    edges = data["edges"]
    if not isinstance(edges, list):
        raise ParseError('"edges" must be a list')
    for e in edges:
        _int_list(e, "an edge")
        if len(e) != 2:
            raise ParseError(f"edge {e} does not have two endpoints")
    vertices = _int_list(data.get("vertices", sorted({v for e in edges for v in e})), '"vertices"')
    try:
        return Graph.from_edge_list(vertices, edges)
    except StarClusterError as exc:
        raise ParseError(str(exc)) from None


def complex_from_json(data: Any) -> SimplicialComplex:
    if not isinstance(data, dict) or "facets" not in data:
        raise ParseError('complex JSON needs a "facets" list')
    facets = data["facets"]
    if not isinstance(facets, list):
        raise ParseError('"facets" must be a list')
    for f in facets:
        _int_list(f, "a facet")
    ground = data.get("ground")
    if ground is not None:
        _int_list(ground, '"ground"')
    try:
        return SimplicialComplex(facets, ground)
    except StarClusterError as exc:
        raise ParseError(str(exc)) from None


def relation_from_json(data: Any) -> Relation:
    if not isinstance(data, dict) or not {"X", "Y", "pairs"} <= set(data):
        raise ParseError('relation JSON needs "X", "Y" and "pairs"')
    X, Y = _int_list(data["X"], '"X"'), _int_list(data["Y"], '"Y"')
    pairs = data["pairs"]
    if not isinstance(pairs, list):
        raise ParseError('"pairs" must be a list')
    for p in pairs:
        _int_list(p, "a pair")
        if len(p) != 2:
            raise ParseError(f"pair {p} does not have two entries")
    try:
        return Relation(X, Y, pairs)
    except StarClusterError as exc:
        raise ParseError(str(exc)) from None


def _parse_int(token: str, line: int, column: int) -> int:
    try:
        v = int(token)
    except ValueError:
        raise ParseError(f"expected an integer, got {token!r}", line, column) from None
    if v < 0:
        raise ParseError(f"vertex labels must be nonnegative, got {v}", line, column)
    return v


def graph_from_edge_list_text(text: str) -> Graph:
    vertices, edges = set(), []
    for lineno, raw in enumerate(text.splitlines(), 1):
        stripped = raw.strip()
        if not stripped:
            continue
        if stripped.startswith("#"):
            parts = stripped.split()
            if parts[0] == "#vertex":
                if len(parts) != 2:
                    raise ParseError('"#vertex" takes exactly one label', lineno, 1)
                vertices.add(_parse_int(parts[1], lineno, raw.index(parts[1], raw.index("#vertex") + 7) + 1))
            continue
        tokens, pos = [], 0
        for tok in stripped.split():
            pos = raw.index(tok, pos)
            tokens.append((tok, pos + 1))
            pos += len(tok)
        if len(tokens) != 2:
            col = tokens[2][1] if len(tokens) > 2 else len(raw.rstrip()) + 1
            raise ParseError(f"expected two vertex labels, got {len(tokens)}", lineno, col)
        u, w = (_parse_int(t, lineno, c) for t, c in tokens)
        if u == w:
            raise ParseError(f"self-loop at vertex {u}", lineno, tokens[0][1])
        vertices.update((u, w))
        edges.append((u, w))
    return Graph.from_edge_list(sorted(vertices), edges)


def parse(text: str) -> Parsed:
    """Parse a graph, complex or relation, detecting the format from the content."""
    if text.lstrip().startswith("{"):
        data = _load_json(text)
        if not isinstance(data, dict):
            raise ParseError("expected a JSON object", 1, 1)
        if "facets" in data:
            return complex_from_json(data)
        if "pairs" in data:
            return relation_from_json(data)
        return graph_from_json(data)
    return graph_from_edge_list_text(text)


def parse_graph(text: str) -> Graph:
    obj = parse(text)
    if not isinstance(obj, Graph):
        raise ParseError(f"expected a graph, got a {type(obj).__name__}")
    return obj


def parse_complex(text: str) -> SimplicialComplex:
    obj = parse(text)
    if not isinstance(obj, SimplicialComplex):
        raise ParseError(f"expected a simplicial complex, got a {type(obj).__name__}")
    return obj


def to_jsonable(obj: Any) -> Any:
    if isinstance(obj, HomologyProfile):
        return obj.to_json()
    if hasattr(obj, "to_dict"):
        return obj.to_dict()
    return obj


def dumps(obj: Any) -> str:
    return json.dumps(to_jsonable(obj), sort_keys=False)


def graph_to_edge_list_text(G: Graph) -> str:
    touched = {v for e in G.edges for v in e}
    lines = [f"#vertex {v}" for v in G.vertices if v not in touched]
    lines += [f"{u} {w}" for u, w in G.edges]
    return "\n".join(lines) + ("\n" if lines else "")


def to_csv(obj: Any) -> str:
    """Tabular rendering: edges, facets, homology groups, or report cases."""
    buf = io.StringIO()
    w = csv.writer(buf, lineterminator="\n")
    if isinstance(obj, Graph):
        w.writerow(["u", "v"])
        w.writerows(obj.edges)
    elif isinstance(obj, SimplicialComplex):
        w.writerow(["facet"])
        w.writerows([" ".join(map(str, f))] for f in obj.facets)
    elif isinstance(obj, HomologyProfile):
        w.writerow(["degree", "betti", "torsion"])
        for k, g in obj.groups.items():
            w.writerow([k, g.betti, " ".join(map(str, g.torsion))])
    elif isinstance(obj, Relation):
        w.writerow(["x", "y"])
        w.writerows(sorted(obj.pairs))
    else:
        data = to_jsonable(obj)
        if not isinstance(data, dict):
            raise TypeError(f"no CSV rendering for {type(obj).__name__}")
        rows = data.get("cases")
        if rows is None:
            w.writerow(["key", "value"])
            w.writerows([k, v if isinstance(v, (int, str)) else json.dumps(v)] for k, v in data.items())
            return buf.getvalue()
        w.writerow(["params", "expected", "computed", "pass"])
        for c in rows:
            w.writerow([json.dumps(c["params"]), json.dumps(c["expected"]), json.dumps(c["computed"]), c["pass"]])
    return buf.getvalue()
