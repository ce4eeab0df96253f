"""Signed walks, admissible sets, and the tilting-discreteness decision.

A walk is a half-edge sequence chained through the pairing; a signature
alternates signs along it, with each consecutive pair certified by a
rotation gap inside one fan.  A signed walk is stored as the canonical
representative of its two orientations (reversal transports the sign of
h to the sign of iota(h)).

Pair compatibility is the sign condition at shared endpoints plus
non-crossing, decided combinatorially:

* at a vertex visited by both walks through four distinct half-edges,
  each visit sweeps the clockwise interval given by its certificate; a
  proper interval crossing is a violation;
* every maximal common subwalk must carry equal signs; where both walks
  continue past one of its ends, the nearer strand (smaller gap) must be
  the same walk at both ends; a subwalk one occurrence of which lies
  strictly inside the other walk (the same walk continuing past both
  ends while the other terminates at both) is a violation; an end past
  which only one walk continues imposes nothing otherwise;
* a walk terminating at a vertex conflicts with a passage of another
  walk through that vertex when the end spoke lies strictly inside the
  swept interval (a spoke on the boundary is the shared-edge case,
  handled by the subwalk rules).

The one free orientation convention (which strand counts as "nearer")
is fixed by NC2_INNER_MATCHES below and pinned by the counting tests.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field

import networkx as nx

from .errors import CapMismatch, NoEvenCycle, NotStable, PreconditionFailed
from .fbg import BiserialFBG, check_si
from .reduction import ReducedForm, reduced_form
from .ribbon import RibbonGraph

# At a common subwalk passed through by both walks, the strand closer to
# the subwalk at one end stays closer at the other end.
NC2_INNER_MATCHES = True

# Fan certificates allow the gap to reach o (wrapping to the next orbit
# representative); the strict reading stops at o - 1.
PERMISSIVE_FAN_BOUND = True


@dataclass(frozen=True)
class SignedWalk:
    halves: tuple
    signs: tuple  # +1 / -1 per step

    def __len__(self):
        return len(self.halves)

    def key(self):
        return (self.halves, self.signs)

    def as_json(self):
        return {
            "halves": list(self.halves),
            "signs": ["+" if s > 0 else "-" for s in self.signs],
        }


def _reverse(graph, halves, signs):
    rev = tuple(graph.inv(h) for h in reversed(halves))
    return rev, tuple(reversed(signs))


def canonical_walk(graph, halves, signs) -> SignedWalk:
    halves = tuple(halves)
    signs = tuple(signs)
    rev = _reverse(graph, halves, signs)
    return SignedWalk(*min((halves, signs), rev))


def _orientations(graph, walk: SignedWalk):
    yield walk.halves, walk.signs
    rev = _reverse(graph, walk.halves, walk.signs)
    if rev != (walk.halves, walk.signs):
        yield rev


def _gap(graph, frm, to):
    """Clockwise steps from frm to to within one vertex cycle, in [1, val]."""
    cycle = graph.rotation(graph.source(frm))
    k = (cycle.index(to) - cycle.index(frm)) % len(cycle)
    return k if k else len(cycle)


def step_certificate(f: BiserialFBG, h, sign, nxt):
    """Gap certificate for the consecutive pair (h, nxt), or None.

    sign = sign of h; for - the next half-edge lies ahead of iota(h),
    for + iota(h) lies ahead of it; either way within one fan.
    """
    g = f.graph
    u = g.source(g.inv(h))
    if g.source(nxt) != u:
        return None
    o = f.vertex_invariants[u].o
    bound = o if PERMISSIVE_FAN_BOUND else o - 1
    k = _gap(g, g.inv(h), nxt) if sign < 0 else _gap(g, nxt, g.inv(h))
    return k if 1 <= k <= bound else None


def _signature_consistent(halves, signs):
    seen = {}
    for h, s in zip(halves, signs):
        if seen.setdefault(h, s) != s:
            return False
    return True


def walk_is_valid(f: BiserialFBG, halves, signs):
    """Alternation, chaining, certificates, signature map, self sign
    condition and self non-crossing."""
    g = f.graph
    if not halves:
        return False
    for a, b in zip(signs, signs[1:]):
        if a == b:
            return False
    if not _signature_consistent(halves, signs):
        return False
    for h, s, nxt in zip(halves, signs, halves[1:]):
        if step_certificate(f, h, s, nxt) is None:
            return False
    if g.source(halves[0]) == g.source(g.inv(halves[-1])) and signs[0] != signs[-1]:
        return False
    walk = canonical_walk(g, halves, signs)
    return check_pair(f, walk, walk).ok


def enumerate_signed_walks(f: BiserialFBG, max_len, max_count=None):
    """All valid signed walks of length <= max_len, canonical and sorted.

    Returns (walks, truncated): the flag is set when max_count stopped
    the search early.
    """
    g = f.graph
    found = set()
    truncated = False

    def candidates(h, sign):
        u = g.source(g.inv(h))
        o = f.vertex_invariants[u].o
        bound = o if PERMISSIVE_FAN_BOUND else o - 1
        ih = g.inv(h)
        if sign < 0:
            return [g.rho(ih, k) for k in range(1, bound + 1)]
        return [g.rho(ih, -k) for k in range(1, bound + 1)]

    stack = (
        [((h,), (s,)) for h in g.half_edges for s in (1, -1)]
        if max_len >= 1
        else []
    )
    while stack:
        halves, signs = stack.pop()
        if max_count is not None and len(found) >= max_count:
            truncated = True
            break
        if walk_is_valid(f, halves, signs):
            found.add(canonical_walk(g, halves, signs))
        if len(halves) >= max_len:
            continue
        h, s = halves[-1], signs[-1]
        for nxt in candidates(h, s):
            nh, ns = halves + (nxt,), signs + (-s,)
            if not _signature_consistent(nh, ns):
                continue
            stack.append((nh, ns))
    walks = sorted(found, key=SignedWalk.key)
    return walks, truncated


# ---------------------------------------------------------------------------
# Pair compatibility
# ---------------------------------------------------------------------------


@dataclass
class PairReport:
    sign_ok: bool = True
    noncrossing_ok: bool = True
    violations: list = field(default_factory=list)

    @property
    def ok(self):
        return self.sign_ok and self.noncrossing_ok


def _endpoints(g, halves, signs):
    return (
        (g.source(halves[0]), signs[0]),
        (g.source(g.inv(halves[-1])), signs[-1]),
    )


def _visits(g, halves, signs):
    """Internal vertex passages: (vertex, in-half, out-half, sweep arc).

    The sweep arc is (vertex, start position, length): the clockwise
    interval realized by the certificate of the consecutive pair.
    """
    out = []
    for i in range(len(halves) - 1):
        a = g.inv(halves[i])
        b = halves[i + 1]
        u = g.source(a)
        cycle = g.rotation(u)
        if signs[i] < 0:
            start, end = a, b
        else:
            start, end = b, a
        k = (cycle.index(end) - cycle.index(start)) % len(cycle)
        if k == 0:
            k = len(cycle)
        out.append((u, a, b, cycle.index(start), k))
    return out


def _arcs_cross(val, s1, k1, s2, k2):
    """Proper crossing of clockwise intervals [s, s+k] on Z/val with all
    four endpoints distinct."""
    def strictly_inside(x, s, k):
        return 0 < (x - s) % val < k

    ins = sum(
        1 for x in (s2 % val, (s2 + k2) % val) if strictly_inside(x, s1, k1)
    )
    if ins == 1:
        return True
    # Symmetric probe: handles intervals long enough to wrap around.
    ins2 = sum(
        1 for x in (s1 % val, (s1 + k1) % val) if strictly_inside(x, s2, k2)
    )
    return ins2 == 1


def _maximal_matches(a, b, skip_identity=False):
    """Maximal common contiguous runs between sequences a and b, as
    (i, j, length) triples, by scanning diagonals."""
    out = []
    la, lb = len(a), len(b)
    for d in range(-(lb - 1), la):
        i = max(0, d)
        j = i - d
        run = 0
        while i + run < la and j + run < lb:
            if a[i + run] == b[j + run]:
                run += 1
                continue
            if run:
                out.append((i, j, run))
            i, j = i + run + 1, j + run + 1
            run = 0
        if run:
            out.append((i, j, run))
    if skip_identity:
        out = [(i, j, L) for i, j, L in out if i != j]
    return out


def check_pair(f: BiserialFBG, W: SignedWalk, Wp: SignedWalk) -> PairReport:
    """Sign condition and non-crossing for an (unordered, possibly equal)
    pair of signed walks."""
    g = f.graph
    report = PairReport()
    same = W.key() == Wp.key()

    for (p, s) in _endpoints(g, W.halves, W.signs):
        for (q, t) in _endpoints(g, Wp.halves, Wp.signs):
            if p == q and s != t:
                report.sign_ok = False
                report.violations.append(f"sign condition fails at vertex {p}")

    # Vertex crossings between four pairwise distinct half-edges, and
    # endpoints against passages.  Visits and arcs are orientation
    # independent, so the canonical orientations suffice.
    vis1 = _visits(g, W.halves, W.signs)
    vis2 = vis1 if same else _visits(g, Wp.halves, Wp.signs)
    pairs = (
        itertools.combinations(range(len(vis1)), 2)
        if same
        else itertools.product(range(len(vis1)), range(len(vis2)))
    )
    for idx1, idx2 in pairs:
        u1, a1, b1, s1, k1 = vis1[idx1]
        u2, a2, b2, s2, k2 = vis2[idx2]
        if u1 != u2:
            continue
        if len({a1, b1, a2, b2}) != 4:
            continue
        if _arcs_cross(len(g.rotation(u1)), s1, k1, s2, k2):
            report.noncrossing_ok = False
            report.violations.append(f"crossing at vertex {u1}")
    ends1 = [(g.source(W.halves[0]), W.halves[0]),
             (g.source(g.inv(W.halves[-1])), g.inv(W.halves[-1]))]
    ends2 = [(g.source(Wp.halves[0]), Wp.halves[0]),
             (g.source(g.inv(Wp.halves[-1])), g.inv(Wp.halves[-1]))]
    for ends, visits in (((ends1, vis2)), ((ends2, vis1))):
        for (u, x) in ends:
            for (w, a, b, start, k) in visits:
                if w != u or x in (a, b):
                    continue
                cycle = g.rotation(u)
                if 0 < (cycle.index(x) - start) % len(cycle) < k:
                    report.noncrossing_ok = False
                    report.violations.append(
                        f"walk end at {u} lies inside a passing sweep"
                    )

    # Maximal common subwalks.
    for hs, ss in _orientations(g, Wp):
        identity = same and (hs, ss) == (W.halves, W.signs)
        for i, j, L in _maximal_matches(W.halves, hs, skip_identity=identity):
            if same and not identity and (i, j, L) == (0, 0, len(W.halves)):
                continue  # a walk equal to its own reversal
            zsigns1 = W.signs[i : i + L]
            zsigns2 = ss[j : j + L]
            if zsigns1 != zsigns2:
                report.noncrossing_ok = False
                report.violations.append(
                    f"signatures differ on common subwalk {W.halves[i:i + L]}"
                )
                continue
            extL = (i > 0, j > 0)
            extR = (i + L < len(W.halves), j + L < len(hs))
            if (extL == extR == (True, False)) or (extL == extR == (False, True)):
                report.noncrossing_ok = False
                report.violations.append(
                    f"subwalk {W.halves[i:i + L]} lies strictly inside the other walk"
                )
                continue
            sides = []
            if extL == (True, True):
                z = W.halves[i]
                k1 = step_certificate(f, W.halves[i - 1], W.signs[i - 1], z)
                k2 = step_certificate(f, hs[j - 1], ss[j - 1], z)
                sides.append("W" if k1 < k2 else "Wp")
            if extR == (True, True):
                z = W.halves[i + L - 1]
                k1 = step_certificate(f, z, W.signs[i + L - 1], W.halves[i + L])
                k2 = step_certificate(f, z, ss[j + L - 1], hs[j + L])
                sides.append("W" if k1 < k2 else "Wp")
            if len(sides) == 2:
                inner_same = sides[0] == sides[1]
                if inner_same != NC2_INNER_MATCHES:
                    report.noncrossing_ok = False
                    report.violations.append(
                        f"strands cross along common subwalk {W.halves[i:i + L]}"
                    )
    return report


# ---------------------------------------------------------------------------
# Admissible and complete sets
# ---------------------------------------------------------------------------


@dataclass
class WalkSets:
    sets: list
    truncated: bool
    cap: int
    universe: int

    def counts(self):
        return {
            "sets": len(self.sets),
            "universe": self.universe,
            "cap": self.cap,
            "truncated": self.truncated,
        }


def default_cap(f: BiserialFBG):
    return 2 * len(f.graph.edges())


def _compat_graph(f, walks):
    gph = nx.Graph()
    gph.add_nodes_from(range(len(walks)))
    for i in range(len(walks)):
        for j in range(i + 1, len(walks)):
            if check_pair(f, walks[i], walks[j]).ok:
                gph.add_edge(i, j)
    return gph


def _all_cliques(gph, max_count=None):
    """Every clique including the empty one, as sorted index tuples."""
    nodes = sorted(gph.nodes)
    adj = {v: set(gph[v]) for v in nodes}
    out = []
    truncated = False

    def extend(clique, candidates):
        nonlocal truncated
        if truncated:
            return
        out.append(tuple(clique))
        if max_count is not None and len(out) > max_count:
            truncated = True
            return
        for v in list(candidates):
            extend(clique + [v], {u for u in candidates if u > v} & adj[v])

    extend([], set(nodes))
    return out, truncated


def admissible_sets(f: BiserialFBG, max_len=None, max_count=None) -> WalkSets:
    cap = default_cap(f) if max_len is None else max_len
    walks, trunc = enumerate_signed_walks(f, cap, max_count)
    gph = _compat_graph(f, walks)
    cliques, trunc2 = _all_cliques(gph, max_count)
    sets = [tuple(walks[i] for i in c) for c in cliques]
    return WalkSets(sets, trunc or trunc2, cap, len(walks))


def complete_sets(f: BiserialFBG, max_len=None, max_count=None) -> WalkSets:
    cap = default_cap(f) if max_len is None else max_len
    walks, trunc = enumerate_signed_walks(f, cap, max_count)
    gph = _compat_graph(f, walks)
    sets = []
    truncated = trunc
    for clique in nx.find_cliques(gph) if walks else []:
        sets.append(tuple(walks[i] for i in sorted(clique)))
        if max_count is not None and len(sets) > max_count:
            truncated = True
            break
    sets.sort(key=lambda ws: [w.key() for w in ws])
    return WalkSets(sets, truncated, cap, len(walks))


def nu_action(f: BiserialFBG, walk: SignedWalk) -> SignedWalk:
    return canonical_walk(
        f.graph, tuple(f.nu[h] for h in walk.halves), walk.signs
    )


def phi_action(graph: RibbonGraph, phi: dict, walk: SignedWalk) -> SignedWalk:
    return canonical_walk(graph, tuple(phi[h] for h in walk.halves), walk.signs)


def stable_filter(sets, action):
    """Keep the walk sets closed under the given walk action."""
    out = []
    for ws in sets:
        keys = {w.key() for w in ws}
        if all(action(w).key() in keys for w in ws):
            out.append(ws)
    return out


def walk_orbits(walks, action):
    """Group walks into orbits of the action; orbits keyed by least member."""
    index = {w.key(): w for w in walks}
    seen = set()
    orbits = []
    for w in walks:
        if w.key() in seen:
            continue
        orbit = [w]
        cur = action(w)
        while cur.key() != w.key():
            if cur.key() not in index:
                raise NotStable(
                    "walk universe is not closed under the action; raise the cap"
                )
            orbit.append(index[cur.key()])
            seen.add(cur.key())
            cur = action(cur)
        seen.add(w.key())
        orbits.append(tuple(sorted(orbit, key=SignedWalk.key)))
    return orbits


def _orbit_compat(f, orbits):
    gph = nx.Graph()
    gph.add_nodes_from(range(len(orbits)))
    ok_self = set()
    for i, orbit in enumerate(orbits):
        if all(
            check_pair(f, a, b).ok
            for a, b in itertools.combinations_with_replacement(orbit, 2)
        ):
            ok_self.add(i)
    for i in ok_self:
        for j in ok_self:
            if j <= i:
                continue
            if all(
                check_pair(f, a, b).ok
                for a in orbits[i]
                for b in orbits[j]
            ):
                gph.add_edge(i, j)
    gph.remove_nodes_from([i for i in range(len(orbits)) if i not in ok_self])
    return gph


def stable_admissible_count(f: BiserialFBG, walks, action, max_count=None):
    """Number of admissible walk sets closed under the action, counted as
    cliques over action orbits; also the number of maximal ones."""
    orbits = walk_orbits(walks, action)
    gph = _orbit_compat(f, orbits)
    cliques, truncated = _all_cliques(gph, max_count)
    maximal = list(nx.find_cliques(gph)) if gph.number_of_nodes() else []
    return len(cliques), len(maximal), truncated


def plain_admissible_count(f: BiserialFBG, walks, max_count=None):
    gph = _compat_graph(f, walks)
    cliques, truncated = _all_cliques(gph, max_count)
    maximal = list(nx.find_cliques(gph)) if walks else []
    return len(cliques), len(maximal), truncated


# ---------------------------------------------------------------------------
# The bijection with the reduced form
# ---------------------------------------------------------------------------


@dataclass
class PsiReport:
    admissible: bool
    source_counts: tuple  # (admissible sets, complete sets)
    reduced_counts: tuple
    cap: int

    @property
    def ok(self):
        return self.source_counts == self.reduced_counts

    def as_json(self):
        return {
            "admissible": self.admissible,
            "source": {
                "admissible_sets": self.source_counts[0],
                "complete_sets": self.source_counts[1],
            },
            "reduced": {
                "admissible_sets": self.reduced_counts[0],
                "complete_sets": self.reduced_counts[1],
            },
            "cap": self.cap,
            "match": self.ok,
        }


def psi_walk(f: BiserialFBG, red: ReducedForm, walk: SignedWalk) -> SignedWalk:
    """Image of a signed walk on the reduced form, transporting each step
    by the same rotation gap."""
    og = red.orbit
    rep = og.orbit_map
    rg = red.graph
    first = rep[walk.halves[0]]
    if red.phi is not None:
        first = f"{first}#1"
    halves = [first]
    for idx in range(len(walk.halves) - 1):
        h, s = walk.halves[idx], walk.signs[idx]
        k = step_certificate(f, h, s, walk.halves[idx + 1])
        assert k is not None
        prev = halves[-1]
        base = rg.inv(prev)
        halves.append(rg.rho(base, k if s < 0 else -k))
    return canonical_walk(rg, tuple(halves), walk.signs)


def bijection_psi(f: BiserialFBG, max_len=None, max_count=None) -> PsiReport:
    """Compare stable admissible/complete set counts with the reduced form.

    The walk universes on both sides are bounded by the same cap; a count
    mismatch raises CapMismatch after reporting.
    """
    cap = default_cap(f) if max_len is None else max_len
    red = reduced_form(f)
    walks, trunc1 = enumerate_signed_walks(f, cap, max_count)
    red_walks, trunc2 = enumerate_signed_walks(red.fbg, cap, max_count)
    if trunc1 or trunc2:
        raise CapMismatch("walk enumeration truncated; raise max_count")
    n_adm, n_cw, t1 = stable_admissible_count(
        f, walks, lambda w: nu_action(f, w), max_count
    )
    if red.phi is None:
        r_adm, r_cw, t2 = plain_admissible_count(red.fbg, red_walks, max_count)
    else:
        r_adm, r_cw, t2 = stable_admissible_count(
            red.fbg,
            red_walks,
            lambda w: phi_action(red.graph, red.phi, w),
            max_count,
        )
    if t1 or t2:
        raise CapMismatch("set enumeration truncated; raise max_count")
    # psi itself: every self-admissible nu-orbit class (the ones that can
    # occur inside a stable admissible set) must land on a valid walk.
    for orbit in walk_orbits(walks, lambda w: nu_action(f, w)):
        if not all(
            check_pair(f, a, b).ok
            for a, b in itertools.combinations_with_replacement(orbit, 2)
        ):
            continue
        image = psi_walk(f, red, orbit[0])
        if not walk_is_valid(red.fbg, image.halves, image.signs):
            raise CapMismatch(f"psi image invalid for {orbit[0].as_json()}")
    return PsiReport(red.admissible, (n_adm, n_cw), (r_adm, r_cw), cap)


# ---------------------------------------------------------------------------
# Cycle census and the tilting-discreteness decision
# ---------------------------------------------------------------------------


@dataclass
class CycleCensus:
    betti: int
    is_tree: bool
    cycle_length: int | None  # length of the unique cycle when betti = 1
    at_most_one_odd_no_even: bool

    def as_json(self):
        return {
            "betti": self.betti,
            "is_tree": self.is_tree,
            "cycle_length": self.cycle_length,
            "at_most_one_odd_no_even": self.at_most_one_odd_no_even,
        }


def cycle_census(graph: RibbonGraph) -> CycleCensus:
    verts = list(graph.vertices)
    edges = [graph.edge_halves(e) for e in graph.edges()]
    parent = {v: v for v in verts}

    def find(x):
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    components = len(verts)
    for hs in edges:
        ends = [graph.source(h) for h in hs]
        a, b = (ends[0], ends[-1])
        ra, rb = find(a), find(b)
        if ra != rb:
            parent[ra] = rb
            components -= 1
    betti = len(edges) - len(verts) + components
    is_tree = betti == 0 and components == 1
    cycle_length = None
    if betti == 1:
        degree = {v: 0 for v in verts}
        incident = {v: set() for v in verts}
        alive = set(range(len(edges)))
        for idx, hs in enumerate(edges):
            for h in hs:
                degree[graph.source(h)] += 1
            for h in hs:
                incident[graph.source(h)].add(idx)
        queue = [v for v in verts if degree[v] == 1]
        while queue:
            v = queue.pop()
            live = [i for i in incident[v] if i in alive]
            if len(live) != 1:
                continue
            idx = live[0]
            alive.discard(idx)
            for h in edges[idx]:
                u = graph.source(h)
                degree[u] -= 1
                if degree[u] == 1:
                    queue.append(u)
        cycle_length = len(alive)
    ok = betti == 0 or (betti == 1 and cycle_length % 2 == 1)
    return CycleCensus(betti, is_tree, cycle_length, ok)


def tilting_discrete(f: BiserialFBG):
    """(flag, reason, census of the reduced form)."""
    red = reduced_form(f)
    census = cycle_census(red.graph)
    if red.admissible:
        flag = census.at_most_one_odd_no_even
        crit = "at most one odd cycle and no even cycle in the reduced form"
    else:
        flag = census.is_tree
        crit = "the reduced form is a tree"
    reason = f"{'satisfies' if flag else 'fails'}: {crit}"
    return flag, reason, census


def two_silt_count_m_ge_1(f: BiserialFBG, max_len=None, max_count=None):
    """Complete-set count of the multiplicity-one algebra on the same
    ribbon graph; only defined when every multiplicity is at least 1."""
    low = [v for v in f.graph.vertices if f.multiplicity(v) < 1]
    if low:
        raise PreconditionFailed(
            f"multiplicity below 1 at {sorted(low)}"
        )
    prime = check_si(
        f.graph, {v: len(f.graph.rotation(v)) for v in f.graph.vertices}
    )
    result = complete_sets(prime, max_len, max_count)
    return len(result.sets), result


# ---------------------------------------------------------------------------
# Even-cycle witness families
# ---------------------------------------------------------------------------


def _find_even_cycle(graph: RibbonGraph):
    """An even simple cycle as a list of (vertex, edge) steps, or None."""
    edges = graph.edges()
    by_pair = {}
    for e in edges:
        hs = graph.edge_halves(e)
        if len(hs) == 1 or graph.is_loop(e):
            continue
        key = tuple(sorted(graph.edge_endpoints(e)))
        by_pair.setdefault(key, []).append(e)
    for (a, b), par in by_pair.items():
        if len(par) >= 2:
            return [(a, par[0]), (b, par[1])]
    simple = nx.Graph()
    for e in edges:
        hs = graph.edge_halves(e)
        if len(hs) == 1 or graph.is_loop(e):
            continue
        u, v = graph.edge_endpoints(e)
        simple.add_edge(u, v, name=e)
    best = None
    for cyc in nx.simple_cycles(simple):
        if len(cyc) % 2 == 0 and (best is None or len(cyc) < len(best)):
            best = cyc
    if best is None:
        return None
    steps = []
    for idx, u in enumerate(best):
        v = best[(idx + 1) % len(best)]
        steps.append((u, simple[u][v]["name"]))
    return steps


def winding_walk(f: BiserialFBG, steps, winds) -> SignedWalk:
    """The walk following an even cycle the given number of times and
    closing with one extra copy of the first edge."""
    g = f.graph
    length = len(steps)
    halves = []
    for j in range(length * winds + 1):
        u, e = steps[j % length]
        h = next(h for h in g.edge_halves(e) if g.source(h) == u)
        halves.append(h)
    signs = tuple(1 if j % 2 == 0 else -1 for j in range(len(halves)))
    return canonical_walk(g, tuple(halves), signs)


def even_cycle_witnesses(red: ReducedForm, L):
    """For each winding count up to L, a stable admissible walk family
    built around an even cycle of the reduced form, following the
    repeated two-term pattern; witnesses that the count grows with L."""
    f = red.fbg
    steps = _find_even_cycle(red.graph)
    if steps is None:
        raise NoEvenCycle("the reduced form has no even cycle")
    length = len(steps)
    families = []
    for winds in range(1, L + 1):
        family = {}
        for offset in range(0, length, 2):
            rolled = steps[offset:] + steps[:offset]
            w = winding_walk(f, rolled, winds)
            family[w.key()] = w
        if red.phi is not None:
            for w in list(family.values()):
                img = phi_action(red.graph, red.phi, w)
                family[img.key()] = img
        walks = sorted(family.values(), key=SignedWalk.key)
        for w in walks:
            if not walk_is_valid(f, w.halves, w.signs):
                raise AssertionError(f"witness walk invalid: {w.as_json()}")
        for a, b in itertools.combinations(walks, 2):
            rep = check_pair(f, a, b)
            if not rep.ok:
                raise AssertionError(
                    f"witness family not admissible: {rep.violations}"
                )
        families.append(tuple(walks))
    return families
