"""Command-line interface.

Objects travel between subcommands as JSON on stdin/stdout, so pipelines such
as ``starclusters family cycle 6 | starclusters indep | starclusters homology``
work. Diagnostics go to stderr. Exit codes: 0 success, 1 a verification or
bound check failed, 2 bad usage or unparsable input.
"""

from __future__ import annotations

import argparse
import inspect
import json
import sys
from typing import List, Optional

from . import bounds as bounds_mod
from . import families
from .collapses import greedy_collapse
from .complexes import (
    SimplicialComplex,
    alexander_dual,
    barycentric_subdivision,
    clique_complex,
    independence_complex,
    matching_complex,
)
from .constructions import (
    Relation,
    crossing_resolution,
    csorba_full_subdivision,
    degree3_reduction,
    dowker_graph,
    dowker_pair,
    graph_suspension,
    jonsson_graph,
    subdivide_edge_four,
)
from .corpora import DEFAULT_SEED
from .exceptions import HypothesisViolation, ParseError, StarClusterError
from .formats import graph_to_edge_list_text, parse, to_csv, to_jsonable
from .graphs import DEFAULT_CHROMATIC_CAP, Graph
from .homology import HomologyProfile, reduced_homology
from .verify import SUITES, VerificationReport

EXIT_OK, EXIT_FAIL, EXIT_USAGE = 0, 1, 2

FAMILIES = {
    "cycle": (families.cycle, 1),
    "path": (families.path, 1),
    "complete": (families.complete, 1),
    "kbipartite": (families.complete_bipartite, 2),
    "kneser": (families.kneser, 2),
    "stable-kneser": (families.stable_kneser, 2),
    "gridG": (families.grid_G, 2),
    "gridH": (families.grid_H, 2),
    "tildeG": (families.tilde_G, 3),
    "tildeH": (families.tilde_H, 3),
    "matching": (families.matching_complete, 1),
    "chessboard": (families.chessboard, 2),
    "stirling": (families.stirling, 1),
    "familyA": (families.family_A, 1),
    "familyB": (families.family_B, 1),
    "pentagon-prism": (families.pentagon_prism, 1),
    "graphW": (families.graph_W, 0),
}

CONSTRUCTIONS = [
    "jonsson",
    "csorba",
    "subdivide",
    "suspension",
    "crossing",
    "degree3",
    "dowker",
    "dowker-graph",
    "alexander-dual",
    "barycentric",
    "matching-complex",
]

BOUND_NAMES = sorted(bounds_mod.BOUNDS) + ["extension", "catloc", "chromatic"]

# suite keyword arguments reachable from each flag, first match wins
_FLAG_PARAMS = {
    "nmax": ("n_max", "n_exhaustive"),
    "mmax": ("m_max",),
    "kmax": ("k_max",),
    "vmax": ("v_max",),
    "count": ("count", "random_count"),
}


class UsageError(Exception):
    pass


def _read(path: str) -> str:
    if path == "-":
        return sys.stdin.read()
    try:
        with open(path) as fh:
            return fh.read()
    except OSError as exc:
        raise UsageError(f"cannot read {path}: {exc.strerror}") from None


def _expect(obj, kind, what):
    if not isinstance(obj, kind):
        raise UsageError(f"{what} expects a {kind.__name__} as input, got a {type(obj).__name__}")
    return obj


def _pairs(text: str, what: str) -> List[tuple]:
    """Parse "u v;w x" into [(u, v), (w, x)]."""
    out = []
    for chunk in text.split(";"):
        parts = chunk.split()
        if not parts:
            continue
        if len(parts) != 2:
            raise UsageError(f"{what}: expected pairs like '0 1;2 3', got {chunk.strip()!r}")
        try:
            out.append((int(parts[0]), int(parts[1])))
        except ValueError:
            raise UsageError(f"{what}: labels must be integers, got {chunk.strip()!r}") from None
    return out


def _ints(text: str, what: str) -> List[int]:
    try:
        return [int(x) for x in text.replace(",", " ").split()]
    except ValueError:
        raise UsageError(f"{what}: expected integers, got {text!r}") from None


# --- rendering ----------------------------------------------------------------------------------------


def _text(obj) -> str:
    if isinstance(obj, Graph):
        return graph_to_edge_list_text(obj)
    if isinstance(obj, SimplicialComplex):
        return "".join(" ".join(map(str, f)) + "\n" for f in obj.facets)
    if isinstance(obj, HomologyProfile):
        if obj.is_trivial():
            return "acyclic\n"
        return "".join(f"H~_{k} = {g}\n" for k, g in obj.groups.items())
    if isinstance(obj, VerificationReport):
        s = obj.summary
        seeded = f"seed {obj.seed}" if obj.seed is not None else "deterministic"
        lines = [f"{obj.suite}: {s['pass']} passed, {s['fail']} failed ({seeded})"]
        lines += [f"FAIL {json.dumps(c['params'])}" for c in obj.failures()]
        return "\n".join(lines) + "\n"
    if isinstance(obj, bounds_mod.BoundReport):
        verdict = "holds" if obj.holds else "FAILS"
        return f"{obj.bound_name}: claimed {obj.claimed}, {verdict}\n"
    return json.dumps(to_jsonable(obj), indent=2) + "\n"


def _emit(obj, fmt: str):
    if fmt == "json":
        sys.stdout.write(json.dumps(to_jsonable(obj)) + "\n")
    elif fmt == "csv":
        try:
            sys.stdout.write(to_csv(obj))
        except TypeError as exc:
            raise UsageError(str(exc)) from None
    else:
        sys.stdout.write(_text(obj))


# --- subcommands ----------------------------------------------------------------------------------------


def cmd_family(args):
    if args.name not in FAMILIES:
        raise UsageError(f"unknown family {args.name!r}; choose from {', '.join(FAMILIES)}")
    fn, arity = FAMILIES[args.name]
    if len(args.params) != arity:
        raise UsageError(f"family {args.name} takes {arity} integer parameter(s), got {len(args.params)}")
    return fn(*args.params), EXIT_OK


def cmd_indep(args):
    G = _expect(parse(_read(args.input)), Graph, "indep")
    return independence_complex(G), EXIT_OK


def cmd_clique(args):
    G = _expect(parse(_read(args.input)), Graph, "clique")
    return clique_complex(G), EXIT_OK


def cmd_homology(args):
    obj = parse(_read(args.input))
    if isinstance(obj, Graph):
        raise UsageError("homology expects a complex; pipe the graph through 'indep' or 'clique' first")
    K = _expect(obj, SimplicialComplex, "homology")
    return reduced_homology(K), EXIT_OK


def cmd_collapse(args):
    K = _expect(parse(_read(args.input)), SimplicialComplex, "collapse")
    return greedy_collapse(K), EXIT_OK


def cmd_construct(args):
    name = args.name
    if name not in CONSTRUCTIONS:
        raise UsageError(f"unknown construction {name!r}; choose from {', '.join(CONSTRUCTIONS)}")
    obj = parse(_read(args.input))
    if name in ("jonsson", "alexander-dual", "barycentric"):
        K = _expect(obj, SimplicialComplex, name)
        fn = {"jonsson": jonsson_graph, "alexander-dual": alexander_dual, "barycentric": barycentric_subdivision}[name]
        return fn(K), EXIT_OK
    if name == "dowker":
        KX, KY = dowker_pair(_expect(obj, Relation, name))
        return {"K_X": KX.to_dict(), "K_Y": KY.to_dict()}, EXIT_OK
    if name == "dowker-graph":
        return dowker_graph(_expect(obj, Relation, name)), EXIT_OK
    G = _expect(obj, Graph, name)
    if name == "matching-complex":
        return matching_complex(G), EXIT_OK
    if name == "csorba":
        return csorba_full_subdivision(G), EXIT_OK
    if name == "degree3":
        out, rounds = degree3_reduction(G)
        if args.format == "json":
            return {"graph": out.to_dict(), "rounds": rounds}, EXIT_OK
        return out, EXIT_OK
    if name == "subdivide":
        if not args.edge:
            raise UsageError("subdivide needs --edge 'u v'")
        (e,) = _pairs(args.edge, "--edge") or [None]
        return subdivide_edge_four(G, e), EXIT_OK
    if name == "crossing":
        edges = _pairs(args.edges or "", "--edges")
        if len(edges) != 2:
            raise UsageError("crossing needs --edges 'a b;c d' with exactly two edges")
        return crossing_resolution(G, *edges), EXIT_OK
    # suspension over a subgraph: given edges, given vertices (no edges), or G itself
    chosen = [x for x in (args.over_edges, args.over_vertices, args.over_all) if x]
    if len(chosen) != 1:
        raise UsageError("suspension needs exactly one of --over-edges, --over-vertices, --over-all")
    if args.over_all:
        H = G
    elif args.over_edges:
        edges = _pairs(args.over_edges, "--over-edges")
        H = Graph.from_edge_list(sorted({v for e in edges for v in e}), edges)
    else:
        H = Graph.from_edge_list(_ints(args.over_vertices, "--over-vertices"), [])
    return graph_suspension(G, H), EXIT_OK


def cmd_bounds(args):
    name = args.name
    if name not in BOUND_NAMES:
        raise UsageError(f"unknown bound {name!r}; choose from {', '.join(BOUND_NAMES)}")
    G = _expect(parse(_read(args.input)), Graph, "bounds")
    cap = args.cap_chromatic
    if name in ("catloc", "chromatic"):
        I = independence_complex(G)
        if name == "catloc":
            if args.vertex is None:
                raise UsageError("catloc needs --vertex")
            pieces = bounds_mod.catloc_cover(G, args.vertex, cap)
        else:
            pieces = bounds_mod.chromatic_cover(G, cap)
        evidence = bounds_mod.check_cover(I, pieces)
        report = bounds_mod.BoundReport(
            f"{name}_cover", {"graph": G.to_dict(), "vertex": args.vertex}, len(pieces) - 1, evidence
        )
        return report, EXIT_OK if report.holds else EXIT_FAIL
    if name == "extension":
        if args.simplex is None or args.r is None:
            raise UsageError("extension needs --simplex and --r")
        sigma = _ints(args.simplex, "--simplex")
        holds = bounds_mod.extension_hypothesis(G, sigma, args.r)
        return {"bound_name": "extension", "simplex": sigma, "r": args.r, "holds": holds}, EXIT_OK
    kwargs = {}
    if name == "distance3":
        if args.set is None:
            raise UsageError("distance3 needs --set")
        kwargs["S"] = _ints(args.set, "--set")
    report = bounds_mod.bound_report(name, G, **kwargs)
    return report, EXIT_OK if report.holds else EXIT_FAIL


def cmd_verify(args):
    if args.suite not in SUITES:
        raise UsageError(f"unknown suite {args.suite!r}; choose from {', '.join(SUITES)}")
    fn = SUITES[args.suite]
    accepted = set(inspect.signature(fn).parameters)
    kwargs = {}
    for flag, names in _FLAG_PARAMS.items():
        value = getattr(args, flag)
        if value is None:
            continue
        target = next((n for n in names if n in accepted), None)
        if target is None:
            raise UsageError(f"suite {args.suite} does not take --{flag}")
        kwargs[target] = value
    if args.seed is not None:
        if "seed" in accepted:
            kwargs["seed"] = args.seed
        else:
            print(f"note: suite {args.suite} is deterministic; --seed ignored", file=sys.stderr)
    if "threads" in accepted:
        kwargs["threads"] = args.threads
    report = fn(**kwargs)
    return report, EXIT_OK if report.ok else EXIT_FAIL


# --- parser ------------------------------------------------------------------------------------------


def _positive(text):
    v = int(text)
    if v <= 0:
        raise argparse.ArgumentTypeError(f"expected a positive integer, got {text}")
    return v


def _seed(text):
    v = int(text, 0)
    if not 0 <= v < 2**64:
        raise argparse.ArgumentTypeError("seed must be an unsigned 64-bit integer")
    return v


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--format", choices=["json", "csv", "text"], default="json")

    p = argparse.ArgumentParser(prog="starclusters", description=__doc__.splitlines()[0], parents=[common])
    sub = p.add_subparsers(dest="command", required=True)

    s = sub.add_parser("family", parents=[common], help="emit a named graph or complex")
    s.add_argument("name")
    s.add_argument("params", nargs="*", type=int)
    s.set_defaults(func=cmd_family)

    for name, func, help_ in (
        ("indep", cmd_indep, "independence complex of a graph"),
        ("clique", cmd_clique, "clique complex of a graph"),
        ("homology", cmd_homology, "reduced integral homology of a complex"),
        ("collapse", cmd_collapse, "greedy elementary collapses of a complex"),
    ):
        s = sub.add_parser(name, parents=[common], help=help_)
        s.add_argument("input", nargs="?", default="-")
        s.set_defaults(func=func)

    s = sub.add_parser("construct", parents=[common], help="apply a construction")
    s.add_argument("name")
    s.add_argument("input", nargs="?", default="-")
    s.add_argument("--edge", help="edge to subdivide, 'u v'")
    s.add_argument("--edges", help="two disjoint edges for crossing, 'a b;c d'")
    s.add_argument("--over-edges", help="suspension subgraph by its edges, 'a b;c d'")
    s.add_argument("--over-vertices", help="suspension over a discrete subgraph on these vertices")
    s.add_argument("--over-all", action="store_true", help="suspension over the whole graph")
    s.set_defaults(func=cmd_construct)

    s = sub.add_parser("bounds", parents=[common], help="compute a connectivity bound or cover")
    s.add_argument("name")
    s.add_argument("input", nargs="?", default="-")
    s.add_argument("--set", help="vertex set for distance3, e.g. '0 3 6'")
    s.add_argument("--vertex", type=int, help="vertex for the catloc cover")
    s.add_argument("--simplex", help="independent set for the extension check")
    s.add_argument("--r", type=int, help="size bound for the extension check")
    s.add_argument("--cap-chromatic", type=_positive, default=DEFAULT_CHROMATIC_CAP)
    s.set_defaults(func=cmd_bounds)

    s = sub.add_parser("verify", parents=[common], help="run a verification suite")
    s.add_argument("suite")
    s.add_argument("--seed", type=_seed, default=None, help=f"64-bit seed (default {DEFAULT_SEED})")
    for flag in ("nmax", "mmax", "kmax", "vmax", "count"):
        s.add_argument(f"--{flag}", type=_positive if flag == "count" else int)
    s.add_argument("--threads", type=_positive, default=1)
    s.set_defaults(func=cmd_verify)
    return p


def main(argv: Optional[List[str]] = None) -> int:
    parser = build_parser()
    try:
        args, extra = parser.parse_known_args(argv)
        # argparse binds an optional positional early, so `construct NAME --flag x FILE` leaves FILE over
        if len(extra) == 1 and not extra[0].startswith("-") and getattr(args, "input", None) == "-":
            args.input = extra[0]
        elif extra:
            parser.error(f"unrecognized arguments: {' '.join(extra)}")
    except SystemExit as exc:
        return EXIT_USAGE if exc.code else EXIT_OK
    try:
        result, code = args.func(args)
        _emit(result, args.format)
        return code
    except ParseError as exc:
        print(f"parse error: {exc}", file=sys.stderr)
    except UsageError as exc:
        print(f"usage error: {exc}", file=sys.stderr)
    except HypothesisViolation as exc:
        witness = f" (witness: {exc.witness!r})" if exc.witness is not None else ""
        print(f"hypothesis violated: {exc}{witness}", file=sys.stderr)
    except StarClusterError as exc:
        print(f"error: {exc}", file=sys.stderr)
    return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
