"""Random valid biserial fractional Brauer graphs.

Instead of rejection sampling over raw rotations, graphs are assembled
from Nakayama-orbit data, which satisfies the compatibility identity by
construction: every vertex gets o slots of n half-edges with the rotation
interleaving slots fan by fan, and the pairing matches whole slots with a
cyclic offset (a slot matched to itself needs even n and uses the
half-turn offset).
"""

from __future__ import annotations

import random

from .fbg import BiserialFBG, check_si
from .ribbon import RibbonGraph


def _coprime_choices(n, max_F):
    out = [F for F in range(1, max_F + 1) if _gcd(F, n) == 1]
    return out or [1]


def _gcd(a, b):
    while b:
        a, b = b, a % b
    return a


def random_fbg(
    rng: random.Random,
    n=None,
    max_vertices=3,
    max_o=2,
    max_F=2,
    max_edges=8,
    require_orbifold=False,
    forbid_orbifold=False,
    max_tries=400,
) -> BiserialFBG:
    """A random connected biserial FBG with at most max_edges edges."""
    for _ in range(max_tries):
        order = n if n is not None else rng.choice((1, 1, 2, 2, 3, 4))
        if require_orbifold and order % 2:
            order = rng.choice((2, 4))
        nverts = rng.randint(1, max_vertices)
        slots = []  # (vertex index, slot index)
        o_of = {}
        F_of = {}
        for v in range(nverts):
            o_of[v] = rng.randint(1, max_o)
            F_of[v] = rng.choice(_coprime_choices(order, max_F))
            slots.extend((v, r) for r in range(o_of[v]))
        if len(slots) < 2 and not (order % 2 == 0 and slots):
            continue
        rng.shuffle(slots)
        matching = []  # ("pair", S, S', offset) or ("self", S)
        budget = max_edges
        pool = list(slots)
        ok = True
        while pool:
            S = pool.pop()
            may_self = order % 2 == 0 and not forbid_orbifold
            if pool and (not may_self or rng.random() < 0.7):
                S2 = pool.pop(rng.randrange(len(pool)))
                if budget < order:
                    ok = False
                    break
                budget -= order
                matching.append(("pair", S, S2, rng.randrange(order)))
            elif may_self:
                if budget < order // 2:
                    ok = False
                    break
                budget -= order // 2
                matching.append(("self", S))
            else:
                ok = False
                break
        if not ok:
            continue
        if require_orbifold and not any(m[0] == "self" for m in matching):
            continue
        fbg = _assemble(nverts, o_of, F_of, order, matching)
        if fbg is None:
            continue
        return fbg
    raise RuntimeError("could not generate a fixture within the retry budget")


def _assemble(nverts, o_of, F_of, order, matching):
    def half(v, r, j):
        # Orbit element j of slot r at vertex v sits in fan j*F mod n.
        return f"h{v}.{r}.{j % order}"

    rotation = {}
    for v in range(nverts):
        F = F_of[v]
        cycle = []
        for fan in range(order):
            for r in range(o_of[v]):
                cycle.append(f"h{v}.{r}.{fan}")
        rotation[f"v{v}"] = tuple(cycle)
    # Orbit element j of slot (v, r) is the half-edge in fan (j * F) % n,
    # so that the Nakayama step (rotation by o*F) advances j by one.
    def orbit_elem(v, r, j):
        return f"h{v}.{r}.{(j * F_of[v]) % order}"

    pairing = {}
    for entry in matching:
        if entry[0] == "pair":
            _, (v1, r1), (v2, r2), t = entry
            for j in range(order):
                a = orbit_elem(v1, r1, j)
                b = orbit_elem(v2, r2, j + t)
                pairing[a] = b
                pairing[b] = a
        else:
            _, (v, r) = entry
            half_turn = order // 2
            for j in range(order):
                a = orbit_elem(v, r, j)
                b = orbit_elem(v, r, j + half_turn)
                pairing[a] = b
                pairing[b] = a
    graph = RibbonGraph(rotation, pairing)
    if not graph.connected():
        return None
    degree = {f"v{v}": o_of[v] * F_of[v] for v in range(nverts)}
    return check_si(graph, degree)


def random_corpus(seed, count, **kwargs):
    rng = random.Random(seed)
    return [random_fbg(rng, **kwargs) for _ in range(count)]
