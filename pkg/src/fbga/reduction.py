"""Quotients by the Nakayama action, double covers, and reduced forms."""

from __future__ import annotations

from dataclasses import dataclass

from .errors import UnsupportedAction
from .fbg import BiserialFBG, check_si
from .quiver import TWO_REGULAR, Arrow, Quiver, arrow_name, build_quiver, skew_vertex
from .ribbon import RibbonGraph


@dataclass
class OrbitGraph:
    """The graph of Nakayama orbits, with inherited degrees.

    Half-edges are orbit representatives (least member); ``orbit_map``
    sends every original half-edge to its representative.  Each orbifold
    edge records the loops lying above it.
    """

    graph: RibbonGraph
    degree: dict
    orbit_map: dict
    loops_above: dict

    @property
    def orbifold_edges(self):
        return self.graph.fixed_set


def orbit_graph(f: BiserialFBG) -> OrbitGraph:
    g = f.graph
    rep = {}
    for orbit in f.half_edge_orbits:
        least = orbit[0]
        for h in orbit:
            rep[h] = least
    # Well-definedness of the induced maps: independent of representatives.
    for h in g.half_edges:
        r = rep[h]
        assert rep[g.rho(h)] == rep[g.rho(r)], "rotation does not descend"
        assert rep[g.inv(h)] == rep[g.inv(r)], "pairing does not descend"
    rotation = {}
    for v in g.vertices:
        cycle = g.rotation(v)
        seen = []
        for h in cycle:
            if rep[h] not in seen:
                seen.append(rep[h])
        rotation[v] = tuple(seen)
        # The quotient rotation must be consistent with rho'([h]) = [rho(h)].
        o = len(seen)
        for i, r in enumerate(seen):
            assert rep[g.rho(r)] == seen[(i + 1) % o]
    pairing = {rep[h]: rep[g.inv(h)] for h in g.half_edges}
    quotient = RibbonGraph(rotation, pairing, orbifold=True)
    loops_above = {}
    for h in quotient.fixed_set:
        orbit = f.half_edge_orbit(h)
        loops_above[h] = tuple(sorted({g.edge_of(x) for x in orbit}))
    return OrbitGraph(quotient, dict(f.degree), rep, loops_above)


def cover_name(x, copy):
    return f"{x}#{copy}"


@dataclass
class DoubleCover:
    graph: RibbonGraph
    degree: dict
    phi: dict
    covered: bool  # False when the input had no orbifold edges

    def project(self):
        """Names of the covered object: strip the copy suffix."""
        return {x: x.rsplit("#", 1)[0] for x in self.phi}


def double_cover(og: RibbonGraph, degree) -> DoubleCover:
    """Two copies glued along the orbifold edges.

    Without orbifold edges the graph is returned unchanged with a
    no-cover flag.
    """
    fixed = set(og.fixed_set)
    if not fixed:
        return DoubleCover(og, dict(degree), {}, covered=False)
    rotation = {}
    deg = {}
    for copy in (1, 2):
        for v in og.vertices:
            rotation[cover_name(v, copy)] = tuple(
                cover_name(h, copy) for h in og.rotation(v)
            )
            deg[cover_name(v, copy)] = degree[v]
    pairing = {}
    for copy in (1, 2):
        for h in og.half_edges:
            ih = og.inv(h)
            if ih != h:
                pairing[cover_name(h, copy)] = cover_name(ih, copy)
            else:
                pairing[cover_name(h, copy)] = cover_name(h, 3 - copy)
    cover = RibbonGraph(rotation, pairing, orbifold=False)
    phi = {}
    for v in og.vertices:
        phi[cover_name(v, 1)] = cover_name(v, 2)
        phi[cover_name(v, 2)] = cover_name(v, 1)
    for h in og.half_edges:
        phi[cover_name(h, 1)] = cover_name(h, 2)
        phi[cover_name(h, 2)] = cover_name(h, 1)
    # phi is a fixed-point-free automorphism commuting with everything.
    for h in og.half_edges:
        for copy in (1, 2):
            hc = cover_name(h, copy)
            assert phi[hc] != hc
            assert cover.inv(phi[hc]) == phi[cover.inv(hc)]
            assert cover.rho(phi[hc]) == phi[cover.rho(hc)]
            assert deg[cover.source(phi[hc])] == deg[cover.source(hc)]
    return DoubleCover(cover, deg, phi, covered=True)


@dataclass
class ReducedForm:
    fbg: BiserialFBG  # a Brauer graph
    admissible: bool
    phi: dict | None
    orbit: OrbitGraph

    @property
    def graph(self):
        return self.fbg.graph


def reduced_form(f: BiserialFBG) -> ReducedForm:
    og = orbit_graph(f)
    admissible, _ = f.is_admissible()
    if admissible:
        plain = RibbonGraph(
            {v: og.graph.rotation(v) for v in og.graph.vertices},
            {h: og.graph.inv(h) for h in og.graph.half_edges},
            orbifold=False,
        )
        red = check_si(plain, og.degree)
        phi = None
    else:
        cov = double_cover(og.graph, og.degree)
        red = check_si(cov.graph, cov.degree)
        phi = cov.phi
    assert red.is_brauer_graph(), "reduced form must be a Brauer graph"
    # Multiplicity on the reduced form equals F of the source vertex.
    for v in red.graph.vertices:
        src = v.rsplit("#", 1)[0] if phi else v
        assert red.multiplicity(v) == f.vertex_invariants[src].F
    return ReducedForm(red, admissible, phi, og)


def is_representation_finite(f: BiserialFBG) -> bool:
    return reduced_form(f).fbg.is_brauer_tree()


def skew_group_quiver(f: BiserialFBG) -> Quiver:
    """Quiver of the basic skew group algebra under the Nakayama action.

    Built from orbit data: one vertex per orbit of non-loop edges, a signed
    pair per orbit of loops; one arrow per orbit of half-edges, signed by
    the four adjacency cases.  In the admissible case the action gives the
    plain presentation of the orbit graph instead.
    """
    admissible, _ = f.is_admissible()
    og = orbit_graph(f)
    if admissible:
        red = check_si(og.graph.__class__(
            {v: og.graph.rotation(v) for v in og.graph.vertices},
            {h: og.graph.inv(h) for h in og.graph.half_edges},
            orbifold=False,
        ), og.degree)
        quiver, _ = build_quiver(red, TWO_REGULAR)
        return quiver
    if f.nu_order % 2 != 0:
        raise UnsupportedAction(
            "non-admissible action requires the Nakayama order to be even"
        )
    g = f.graph
    rep = og.orbit_map
    quotient = og.graph
    fixed = set(quotient.fixed_set)

    def vertex_of(orbit_half, sign=""):
        return skew_vertex(quotient.edge_of(orbit_half), sign)

    vertices = []
    for e in quotient.edges():
        halves = quotient.edge_halves(e)
        if len(halves) == 1:
            vertices.extend([skew_vertex(e, "+"), skew_vertex(e, "-")])
        else:
            vertices.append(skew_vertex(e))
    arrows = []
    for orbit in f.half_edge_orbits:
        h = orbit[0]  # least representative of the arrow orbit
        src, tgt = rep[h], rep[g.rho(h)]
        src_signs = ("+", "-") if src in fixed else ("",)
        tgt_signs = ("+", "-") if tgt in fixed else ("",)
        for i in src_signs:
            for j in tgt_signs:
                arrows.append(
                    Arrow(
                        arrow_name(h),
                        vertex_of(src, i),
                        vertex_of(tgt, j),
                        h,
                        sign_in=i,
                        sign_out=j,
                    )
                )
    return Quiver(tuple(sorted(vertices)), tuple(arrows))
