"""Command-line interface.

Inputs are file paths or ``fixtures:<name>``; every number is printed as
an exact rational, so repeated runs are byte-identical.
Exit codes: 0 success, 1 domain error (violations as JSON on stderr),
2 usage error.
"""

from __future__ import annotations

import argparse
import json
import os
import sys

from . import errors
from .fbg import check_si
from .fixtures import fixture_names, load_fixture
from .mutation import generalized_kauer_move, kauer_move
from .quiver import (
    ADMISSIBLE,
    TWO_REGULAR,
    build_quiver,
    build_skew_quiver,
    rho_path_basis,
)
from .reduction import orbit_graph, reduced_form
from .ribbon import parse_graph
from .walks import (
    bijection_psi,
    complete_sets,
    default_cap,
    enumerate_signed_walks,
    tilting_discrete,
)


def _load(spec):
    if spec.startswith("fixtures:"):
        return load_fixture(spec.removeprefix("fixtures:"))
    with open(spec, "r", encoding="utf-8") as fh:
        graph, degree = parse_graph(fh.read())
    if degree is None:
        raise errors.MalformedInput("vertex degrees are required")
    return check_si(graph, degree)


def _emit(payload, fmt):
    if fmt == "json":
        print(json.dumps(payload, indent=2, sort_keys=True))
    else:
        _emit_text(payload)


def _emit_text(payload, indent=0):
    pad = "  " * indent
    if isinstance(payload, dict):
        for key in payload:
            value = payload[key]
            if isinstance(value, (dict, list)):
                print(f"{pad}{key}:")
                _emit_text(value, indent + 1)
            else:
                print(f"{pad}{key}: {value}")
    elif isinstance(payload, list):
        for value in payload:
            if isinstance(value, (dict, list)):
                _emit_text(value, indent)
                print()
            else:
                print(f"{pad}{value}")
    else:
        print(f"{pad}{payload}")


def _max_count(args):
    if args.max_count is not None:
        return args.max_count
    env = os.environ.get("FBGA_MAX_COUNT")
    return int(env) if env else None


def cmd_validate(args):
    f = _load(args.graph)
    _emit({"valid": True, "graph": f.to_json()}, args.format)
    return 0


def cmd_invariants(args):
    f = _load(args.graph)
    adm, witness = f.is_admissible()
    payload = {
        "vertices": f.invariant_report(),
        "nu_order": f.nu_order,
        "edge_orbits": [list(o) for o in f.edge_orbits],
        "admissible": adm,
        "brauer_graph": f.is_brauer_graph(),
        "brauer_tree": f.is_brauer_tree(),
    }
    if witness:
        payload["orbifold_witness"] = witness
    _emit(payload, args.format)
    return 0


def cmd_quiver(args):
    f = _load(args.graph)
    if args.skew:
        og = orbit_graph(f)
        quiver, rels = build_skew_quiver(og.graph, og.degree)
        payload = quiver.as_json(rels)
    else:
        presentation = TWO_REGULAR if args.two_regular else ADMISSIBLE
        quiver, rels = build_quiver(f, presentation)
        payload = quiver.as_json(rels)
        if presentation == ADMISSIBLE:
            payload["dim"] = rho_path_basis(f).report()
    if args.dot:
        print(quiver.to_dot(), end="")
        return 0
    _emit(payload, args.format)
    return 0


def cmd_reduce(args):
    f = _load(args.graph)
    og = orbit_graph(f)
    red = reduced_form(f)
    payload = {
        "admissible": red.admissible,
        "orbifold_edges": list(og.graph.fixed_set),
        "loops_above": {k: list(v) for k, v in og.loops_above.items()},
        "orbit_graph": og.graph.to_json(og.degree),
        "reduced_form": red.fbg.to_json(),
        "reduced_multiplicities": {
            v: str(red.fbg.multiplicity(v)) for v in red.graph.vertices
        },
    }
    if args.orbit_out:
        with open(args.orbit_out, "w", encoding="utf-8") as fh:
            fh.write(og.graph.dumps(og.degree) + "\n")
    if args.out:
        with open(args.out, "w", encoding="utf-8") as fh:
            fh.write(red.fbg.graph.dumps(red.fbg.degree) + "\n")
    _emit(payload, args.format)
    return 0


def cmd_mutate(args):
    f = _load(args.graph)
    if args.halves:
        halves = set(args.halves.split(","))
        result = generalized_kauer_move(f, halves, args.dir)
    else:
        orbit = f.edge_orbit_of(args.orbit)
        result = kauer_move(f, orbit, args.dir)
    payload = result.as_json()
    payload["multiplicities"] = {
        v: str(result.fbg.multiplicity(v)) for v in result.fbg.graph.vertices
    }
    if args.out:
        with open(args.out, "w", encoding="utf-8") as fh:
            fh.write(result.fbg.graph.dumps(result.fbg.degree) + "\n")
    _emit(payload, args.format)
    return 0


def cmd_walks(args):
    from .walks import nu_action, stable_filter

    f = _load(args.graph)
    cap = args.max_len if args.max_len else default_cap(f)
    max_count = _max_count(args)
    if args.via_reduced:
        rep = bijection_psi(f, cap, max_count)
        _emit(rep.as_json(), args.format)
        return 0
    if args.complete:
        result = complete_sets(f, cap, max_count)
        sets = result.sets
        if args.nu_stable:
            sets = stable_filter(sets, lambda w: nu_action(f, w))
        payload = result.counts()
        payload["sets"] = len(sets)
        payload["complete_sets"] = [[w.as_json() for w in ws] for ws in sets]
    else:
        walks, truncated = enumerate_signed_walks(f, cap, max_count)
        if args.nu_stable:
            walks = [w for w in walks if nu_action(f, w).key() == w.key()]
        payload = {
            "cap": cap,
            "truncated": truncated,
            "count": len(walks),
            "walks": [w.as_json() for w in walks],
        }
    _emit(payload, args.format)
    return 0


def cmd_tilt_discrete(args):
    f = _load(args.graph)
    flag, reason, census = tilting_discrete(f)
    red = reduced_form(f)
    payload = {
        "tilting_discrete": flag,
        "reason": reason,
        "census": census.as_json(),
        "reduced_admissible": red.admissible,
        "reduced_edges": list(red.graph.edges()),
    }
    if args.format == "text":
        print(f"{'true' if flag else 'false'} ({reason})")
        return 0
    _emit(payload, args.format)
    return 0


def cmd_dot(args):
    f = _load(args.graph)
    print(f.graph.to_dot(f.degree), end="")
    return 0


def cmd_fixtures(args):
    _emit(fixture_names(), args.format)
    return 0


def cmd_serve(args):
    import uvicorn

    from .service import create_app

    uvicorn.run(create_app(cors=args.cors), host="127.0.0.1", port=args.port)
    return 0


def build_parser():
    parser = argparse.ArgumentParser(prog="fbga")
    parser.add_argument("--format", choices=("json", "text"), default="json")
    sub = parser.add_subparsers(dest="command", required=True)

    def graph_cmd(name, fn, **kwargs):
        p = sub.add_parser(name, **kwargs)
        p.add_argument("graph", help="path to a graph file or fixtures:<name>")
        p.set_defaults(fn=fn)
        return p

    graph_cmd("validate", cmd_validate)
    graph_cmd("invariants", cmd_invariants)
    p = graph_cmd("quiver", cmd_quiver)
    p.add_argument("--two-regular", action="store_true")
    p.add_argument("--skew", action="store_true", help="skew presentation of the orbit graph")
    p.add_argument("--dot", action="store_true")
    p = graph_cmd("reduce", cmd_reduce)
    p.add_argument("--orbit-out", help="write the orbit graph here")
    p.add_argument("-o", "--out", help="write the reduced form here")
    p = graph_cmd("mutate", cmd_mutate)
    p.add_argument("--orbit", help="edge id; the full orbit is inferred")
    p.add_argument("--halves", help="comma-separated half-edge ids")
    p.add_argument("--dir", choices=("left", "right"), default="left")
    p.add_argument("-o", "--out")
    p = graph_cmd("walks", cmd_walks)
    p.add_argument("--max-len", type=int)
    p.add_argument("--max-count", type=int)
    p.add_argument("--complete", action="store_true")
    p.add_argument("--via-reduced", action="store_true")
    p.add_argument("--nu-stable", action="store_true")
    p = graph_cmd("tilt-discrete", cmd_tilt_discrete)
    graph_cmd("dot", cmd_dot)
    p = sub.add_parser("fixtures")
    p.set_defaults(fn=cmd_fixtures)
    p = sub.add_parser("serve")
    p.add_argument("--port", type=int, default=8787)
    p.add_argument("--cors", action="store_true")
    p.set_defaults(fn=cmd_serve)
    return parser


def main(argv=None):
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return 2 if exc.code not in (0, None) else 0
    try:
        return args.fn(args)
    except errors.StructureViolation as exc:
        print(json.dumps({"error": "structure", "violations": exc.violations}), file=sys.stderr)
        return 1
    except errors.SIViolation as exc:
        print(
            json.dumps(
                {
                    "error": "si",
                    "failures": [
                        {"half_edge": h, "lhs": a, "rhs": b} for h, a, b in exc.failures
                    ],
                }
            ),
            file=sys.stderr,
        )
        return 1
    except errors.FbgaError as exc:
        print(json.dumps({"error": type(exc).__name__, "detail": str(exc)}), file=sys.stderr)
        return 1
    except (FileNotFoundError, KeyError) as exc:
        print(json.dumps({"error": "not_found", "detail": str(exc)}), file=sys.stderr)
        return 1


if __name__ == "__main__":
    raise SystemExit(main())
