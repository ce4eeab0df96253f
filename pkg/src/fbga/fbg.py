"""Degree functions, the compatibility check, and Nakayama combinatorics.

A biserial fractional Brauer graph is a connected ribbon graph with a
positive degree per vertex such that the permutation h -> rho^{d(s(h))}(h)
commutes with the pairing.  That permutation (nu) then descends to edges.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import cached_property

from .errors import (
    DisconnectedGraph,
    NotAnOrbit,
    SIViolation,
    StructureViolation,
    UnknownEdge,
)
from .ribbon import RibbonGraph, edge_id

ISOLATED = "Isolated"
SHARED_NONLOOP = "SharedVerticesNonLoop"
ALL_LOOPS = "AllLoops"


def si_failures(graph, degree):
    """All half-edges where iota(nu(h)) differs from nu(iota(h))."""
    out = []
    for h in graph.half_edges:
        lhs = graph.inv(graph.rho(h, degree[graph.source(h)]))
        ih = graph.inv(h)
        rhs = graph.rho(ih, degree[graph.source(ih)])
        if lhs != rhs:
            out.append((h, lhs, rhs))
    return out


def check_si(graph, degree):
    """Validate (graph, degree) into a BiserialFBG or raise.

    Raises SIViolation with every failing half-edge, StructureViolation on
    a bad degree map, DisconnectedGraph when not connected.
    """
    if graph.orbifold and graph.fixed_set:
        raise StructureViolation(["orbifold edges are not allowed here"])
    bad = []
    for v in graph.vertices:
        d = degree.get(v)
        if not isinstance(d, int) or d < 1:
            bad.append(f"degree of {v} must be a positive integer, got {d!r}")
    extra = set(degree) - set(graph.vertices)
    if extra:
        bad.append(f"degree map mentions unknown vertices {sorted(extra)}")
    if bad:
        raise StructureViolation(bad)
    if not graph.connected():
        raise DisconnectedGraph("the degree compatibility check requires a connected graph")
    failures = si_failures(graph, degree)
    if failures:
        raise SIViolation(failures)
    return BiserialFBG(graph, dict(degree))


@dataclass(frozen=True)
class VertexInvariants:
    val: int
    o: int
    n: int
    F: int
    m: Fraction

    def as_json(self):
        return {
            "val": self.val,
            "o": self.o,
            "n": self.n,
            "F": self.F,
            "m": f"{self.m.numerator}/{self.m.denominator}",
        }


class BiserialFBG:
    """A validated ribbon graph with degree function; carries nu cached."""

    def __init__(self, graph: RibbonGraph, degree):
        self.graph = graph
        self.degree = dict(degree)

    def truncated(self, v):
        return self.degree[v] == 1

    @cached_property
    def nu(self):
        g = self.graph
        return {h: g.rho(h, self.degree[g.source(h)]) for h in g.half_edges}

    def nu_pow(self, h, k):
        for _ in range(k % self.nu_order):
            h = self.nu[h]
        return h

    @cached_property
    def nu_inverse(self):
        return {b: a for a, b in self.nu.items()}

    @cached_property
    def nu_edge(self):
        g = self.graph
        return {g.edge_of(h): g.edge_of(self.nu[h]) for h in g.half_edges}

    @cached_property
    def nu_order(self):
        order = 1
        for orbit in self.half_edge_orbits:
            order = order * len(orbit) // _gcd(order, len(orbit))
        return order

    @cached_property
    def half_edge_orbits(self):
        """Nakayama orbits of half-edges, each a tuple starting from its
        lexicographically least member, sorted by that representative."""
        seen = set()
        orbits = []
        for h in self.graph.half_edges:
            if h in seen:
                continue
            orbit = [h]
            cur = self.nu[h]
            while cur != h:
                orbit.append(cur)
                cur = self.nu[cur]
            seen.update(orbit)
            least = min(orbit)
            i = orbit.index(least)
            orbits.append(tuple(orbit[i:] + orbit[:i]))
        orbits.sort()
        return tuple(orbits)

    def half_edge_orbit(self, h):
        for orbit in self.half_edge_orbits:
            if h in orbit:
                return orbit
        raise UnknownEdge(h)

    @cached_property
    def edge_orbits(self):
        """Nakayama orbits of edges, as sorted tuples of EdgeIds."""
        g = self.graph
        seen = set()
        orbits = []
        for e in g.edges():
            if e in seen:
                continue
            orbit = {e}
            cur = self.nu_edge[e]
            while cur != e:
                orbit.add(cur)
                cur = self.nu_edge[cur]
            seen.update(orbit)
            orbits.append(tuple(sorted(orbit)))
        orbits.sort()
        return tuple(orbits)

    def edge_orbit_of(self, e):
        for orbit in self.edge_orbits:
            if e in orbit:
                return orbit
        raise UnknownEdge(e)

    def nakayama(self):
        """(nu on half-edges, induced edge permutation, group order)."""
        return dict(self.nu), dict(self.nu_edge), self.nu_order

    @cached_property
    def vertex_invariants(self):
        g = self.graph
        out = {}
        ns = set()
        for v in g.vertices:
            fiber = g.rotation(v)
            val = len(fiber)
            orbit_sizes = {len(self.half_edge_orbit(h)) for h in fiber}
            assert len(orbit_sizes) == 1, f"unequal orbit sizes at {v}"
            n = orbit_sizes.pop()
            o = val // n
            assert o * n == val
            d = self.degree[v]
            assert d % o == 0, f"degree {d} not divisible by o={o} at {v}"
            F = d // o
            m = Fraction(d, val)
            assert m == Fraction(F, n)
            out[v] = VertexInvariants(val=val, o=o, n=n, F=F, m=m)
            ns.add(n)
        assert len(ns) == 1 and ns.pop() == self.nu_order
        return out

    def multiplicity(self, v):
        return self.vertex_invariants[v].m

    def nu_fans(self, v):
        """Partition the fiber at v into n fans of o consecutive half-edges,
        starting from the lexicographically least half-edge."""
        inv = self.vertex_invariants[v]
        cycle = self.graph.rotation(v)
        start = cycle.index(min(cycle))
        ordered = cycle[start:] + cycle[:start]
        return tuple(
            tuple(ordered[i : i + inv.o]) for i in range(0, inv.val, inv.o)
        )

    def classify_nu_orbit(self, orbit):
        """One of Isolated / SharedVerticesNonLoop / AllLoops per the
        trichotomy of Nakayama edge orbits."""
        orbit = tuple(sorted(orbit))
        if orbit not in self.edge_orbits:
            raise NotAnOrbit(f"{orbit} is not a Nakayama orbit of edges")
        g = self.graph
        halves = [h for e in orbit for h in g.edge_halves(e)]
        neighbor_hit = any(g.edge_of(g.rho(h)) in orbit for h in halves)
        if not neighbor_hit:
            return ISOLATED
        loops = [g.is_loop(e) for e in orbit]
        if all(loops):
            # The loops' halves need not be rotation-adjacent to their
            # partners: two orbits of half-edges at one vertex can pair
            # across with an offset.
            return ALL_LOOPS
        assert not any(loops), "orbit mixes loops and non-loops"
        return SHARED_NONLOOP

    def is_admissible(self):
        """(flag, witness): true iff no orbit of half-edges is closed under
        the pairing; the witness is the least half-edge of a closed orbit.

        Checked twice: at the orbit level and by the direct power test
        nu^k(h) = iota(h); the two must agree.
        """
        witness = None
        for orbit in self.half_edge_orbits:
            if self.graph.inv(orbit[0]) in orbit:
                witness = orbit[0]
                break
        direct = None
        for h in self.graph.half_edges:
            cur = h
            for _ in range(self.nu_order):
                if cur == self.graph.inv(h):
                    direct = direct or h
                    break
                cur = self.nu[cur]
            if direct:
                break
        assert (witness is None) == (direct is None)
        return (witness is None), witness

    def is_brauer_graph(self):
        return all(inv.m.denominator == 1 for inv in self.vertex_invariants.values())

    def is_brauer_tree(self):
        if not self.is_brauer_graph():
            return False
        g = self.graph
        if len(g.edges()) != len(g.vertices) - 1:
            return False
        if any(g.is_loop(e) for e in g.edges()):
            return False
        big = [v for v in g.vertices if self.multiplicity(v) > 1]
        return len(big) <= 1

    def invariant_report(self):
        return [
            {"vertex": v, **self.vertex_invariants[v].as_json()}
            for v in self.graph.vertices
        ]

    def to_json(self):
        return self.graph.to_json(self.degree)

    def __repr__(self):
        return f"BiserialFBG({self.graph!r}, order {self.nu_order})"


def _gcd(a, b):
    while b:
        a, b = b, a % b
    return a


def brauer_degree(graph: RibbonGraph):
    """The degree map with multiplicity one everywhere: d = valency."""
    return {v: len(graph.rotation(v)) for v in graph.vertices}


def induced_edge_id(*halves):
    return edge_id(*halves)
