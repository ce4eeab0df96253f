"""Kauer moves: tilting mutations as rotation-list surgery.

The local move is a pure rewrite of rotation lists: every maximal
cyclically consecutive run of moving half-edges detaches and re-attaches
as a block next to the partner of its non-moving neighbour.  A left move
anchors the block immediately before iota(predecessor); a right move
immediately after iota(successor); the two are mutually inverse.  A run
covering a whole vertex cycle stays put.  Degrees are transported so that
every vertex keeps its multiplicity.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .errors import NotAnOrbit, NotStable, StructureViolation, UnknownEdge
from .fbg import ISOLATED, BiserialFBG, check_si
from .ribbon import RibbonGraph

LEFT = "left"
RIGHT = "right"


@dataclass
class MutationResult:
    fbg: BiserialFBG
    direction: str
    orbit: tuple
    case: str | None
    extended: bool
    trace: dict

    def as_json(self):
        return {
            "direction": self.direction,
            "orbit": list(self.orbit),
            "case": self.case,
            "extended": self.extended,
            "trace": self.trace,
            "graph": self.fbg.to_json(),
        }


@dataclass
class OkuyamaRickardDescriptor:
    orbit: tuple
    summands: list  # per orbit edge: {"minus_one": e, "zero": [e1, e2]}
    untouched: tuple

    def as_json(self):
        return {
            "orbit": list(self.orbit),
            "two_term": self.summands,
            "projective": list(self.untouched),
        }


def okuyama_rickard(f: BiserialFBG, orbit) -> OkuyamaRickardDescriptor:
    orbit = tuple(sorted(orbit))
    if orbit not in f.edge_orbits:
        raise NotAnOrbit(f"{orbit} is not a Nakayama orbit of edges")
    g = f.graph
    summands = []
    for e in orbit:
        h1, h2 = g.edge_halves(e)
        summands.append(
            {
                "minus_one": e,
                "zero": sorted(
                    (g.edge_of(g.rho(h1, -1)), g.edge_of(g.rho(h2, -1)))
                ),
            }
        )
    untouched = tuple(e for e in g.edges() if e not in orbit)
    return OkuyamaRickardDescriptor(orbit, summands, untouched)


def _slide(graph: RibbonGraph, moving, direction):
    """Rewrite rotation lists; returns (rotation dict, trace)."""
    rotations = {v: list(graph.rotation(v)) for v in graph.vertices}
    old_pos = {h: (v, i) for v, hs in rotations.items() for i, h in enumerate(hs)}
    blocks = []  # (block tuple, anchor half-edge)
    for v, cycle in rotations.items():
        member = [h in moving for h in cycle]
        if all(member):
            continue  # full-cycle runs stay put
        n = len(cycle)
        starts = [
            j for j in range(n) if member[j] and not member[(j - 1) % n]
        ]
        for j in starts:
            run = []
            k = j
            while member[k % n]:
                run.append(cycle[k % n])
                k += 1
            if direction == LEFT:
                pred = cycle[(j - 1) % n]
                blocks.append((tuple(run), graph.inv(pred)))
            else:
                succ = cycle[k % n]
                blocks.append((tuple(run), graph.inv(succ)))
    moved = {h for block, _ in blocks for h in block}
    new_rot = {
        v: [h for h in cycle if h not in moved] for v, cycle in rotations.items()
    }
    for block, anchor in blocks:
        v = graph.source(anchor)
        cycle = new_rot[v]
        at = cycle.index(anchor)
        if direction == LEFT:
            new_rot[v] = cycle[:at] + list(block) + cycle[at:]
        else:
            new_rot[v] = cycle[: at + 1] + list(block) + cycle[at + 1 :]
    trace = {}
    for v, cycle in new_rot.items():
        for i, h in enumerate(cycle):
            if h in moving and old_pos[h] != (v, i):
                ov, oi = old_pos[h]
                trace[h] = {"from": [ov, oi], "to": [v, i]}
    return {v: tuple(hs) for v, hs in new_rot.items()}, trace


def generalized_kauer_move(f: BiserialFBG, halves, direction) -> MutationResult:
    """Simultaneous block slide of an iota- and nu-stable half-edge set."""
    if direction not in (LEFT, RIGHT):
        raise ValueError(f"direction must be {LEFT!r} or {RIGHT!r}")
    halves = set(halves)
    unknown = halves - set(f.graph.half_edges)
    if unknown:
        raise NotStable(f"unknown half-edges {sorted(unknown)}")
    if any(f.graph.inv(h) not in halves for h in halves):
        raise NotStable("half-edge set is not closed under the pairing")
    if any(f.nu[h] not in halves for h in halves):
        raise NotStable("half-edge set is not closed under the Nakayama action")
    new_rot, trace = _slide(f.graph, halves, direction)
    graph = RibbonGraph(new_rot, {h: f.graph.inv(h) for h in f.graph.half_edges})
    degree = {}
    for v in graph.vertices:
        m = f.multiplicity(v)
        d = m * len(graph.rotation(v))
        if d.denominator != 1 or d < 1:
            raise StructureViolation(
                [f"multiplicity transport gives non-integral degree {d} at {v}"]
            )
        degree[v] = int(d)
    result = check_si(graph, degree)
    orbit = tuple(sorted({f.graph.edge_of(h) for h in halves}))
    return MutationResult(result, direction, orbit, None, True, trace)


def kauer_move(f: BiserialFBG, orbit, direction) -> MutationResult:
    """Irreducible tilting mutation at a Nakayama orbit of edges."""
    orbit = tuple(sorted(orbit))
    if orbit not in f.edge_orbits:
        raise NotAnOrbit(f"{orbit} is not a Nakayama orbit of edges")
    case = f.classify_nu_orbit(orbit)
    g = f.graph
    halves = {h for e in orbit for h in g.edge_halves(e)}
    proper = len(orbit) < len(g.edges())
    extended = case != ISOLATED or not proper
    if case == ISOLATED and proper:
        n = f.nu_order
        some = g.edge_halves(orbit[0])
        v1, v2 = g.source(some[0]), g.source(some[1])
        assert len(g.rotation(v1)) != n and len(g.rotation(v2)) != n
        assert all(
            g.rho(h) != g.inv(h) and g.rho(h, -1) != g.inv(h) for h in halves
        )
    result = generalized_kauer_move(f, halves, direction)
    result.case = case
    result.extended = extended
    result.orbit = orbit
    return result


def kauer_move_orbifold(og: RibbonGraph, degree, edge, direction):
    """Slide one (possibly orbifold) edge of an orbifold ribbon graph.

    Returns (graph, degree).  Sliding along an orbifold anchor keeps the
    block at the same vertex, re-attached on the other side of the cross.
    """
    if direction not in (LEFT, RIGHT):
        raise ValueError(f"direction must be {LEFT!r} or {RIGHT!r}")
    if edge not in og.edges():
        raise UnknownEdge(edge)
    halves = set(og.edge_halves(edge))
    new_rot, _ = _slide(og, halves, direction)
    graph = RibbonGraph(
        new_rot, {h: og.inv(h) for h in og.half_edges}, orbifold=og.orbifold
    )
    new_degree = {}
    for v in graph.vertices:
        m = Fraction(degree[v], len(og.rotation(v)))
        d = m * len(graph.rotation(v))
        if d.denominator != 1 or d < 1:
            raise StructureViolation(
                [f"multiplicity transport gives non-integral degree {d} at {v}"]
            )
        new_degree[v] = int(d)
    return graph, new_degree
