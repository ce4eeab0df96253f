"""Quivers with relations for the three presentations.

Vertices are edge ids (or signed edge ids for skew presentations); arrows
carry the half-edge they came from.  Relations are stored as generator
descriptors (lists of arrow names), never as ideal-membership oracles;
dimension questions go through the explicit path basis instead.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field

from .errors import NotSkewBG, SizeLimitExceeded
from .fbg import BiserialFBG

TWO_REGULAR = "two_regular"
ADMISSIBLE = "admissible"


@dataclass(frozen=True)
class Arrow:
    name: str
    source: str
    target: str
    half_edge: str
    sign_in: str = ""
    sign_out: str = ""

    def as_json(self):
        return {
            "id": self.name,
            "from": self.source,
            "to": self.target,
            "half_edge": self.half_edge,
            "signs": [self.sign_in, self.sign_out],
        }


@dataclass
class RelationSet:
    commutativity: list = field(default_factory=list)
    zero: list = field(default_factory=list)
    nilpotency: list = field(default_factory=list)
    skew: dict = field(default_factory=dict)

    def as_json(self):
        out = {
            "commutativity": self.commutativity,
            "zero": self.zero,
            "nilpotency": self.nilpotency,
        }
        if self.skew:
            out["skew"] = self.skew
        return out

    def family_counts(self):
        out = {
            "commutativity": len(self.commutativity),
            "zero": len(self.zero),
            "nilpotency": len(self.nilpotency),
        }
        for tag, rels in self.skew.items():
            out[f"skew_{tag}"] = _skew_count(tag, rels)
        return out


def _skew_count(tag, rels):
    if tag == "ii":
        # Each entry chains every sign-variant of both cycles.
        return sum(len(r["chain"]) - 1 for r in rels)
    return len(rels)


@dataclass
class Quiver:
    vertices: tuple
    arrows: tuple

    def arrow(self, name):
        for a in self.arrows:
            if a.name == name:
                return a
        raise KeyError(name)

    def as_json(self, relations=None):
        out = {
            "vertices": list(self.vertices),
            "arrows": [a.as_json() for a in self.arrows],
        }
        if relations is not None:
            out["relations"] = relations.as_json()
        return out

    def to_dot(self):
        lines = ["digraph quiver {"]
        for v in self.vertices:
            lines.append(f'  "{v}";')
        for a in sorted(self.arrows, key=lambda a: a.name):
            label = f"{a.sign_in}{a.name}{a.sign_out}" if (a.sign_in or a.sign_out) else a.name
            lines.append(f'  "{a.source}" -> "{a.target}" [label="{label}"];')
        lines.append("}")
        return "\n".join(lines) + "\n"


def arrow_name(h):
    return f"a[{h}]"


def build_quiver(f: BiserialFBG, presentation=ADMISSIBLE):
    """Quiver and relation generators of the algebra of f.

    two_regular keeps one arrow per half-edge with the commutativity and
    overlap-zero families.  admissible deletes arrows around truncated
    vertices (for an edge with both endpoints truncated, the two arrows are
    equal in the algebra: the one at the lexicographically least half-edge
    is kept) and uses the commutativity / nilpotency / zero families.
    """
    g = f.graph
    vertices = g.edges()
    if presentation == TWO_REGULAR:
        arrows = tuple(
            Arrow(arrow_name(h), g.edge_of(h), g.edge_of(g.rho(h)), h)
            for h in g.half_edges
        )
        rels = RelationSet()
        for e in vertices:
            halves = g.edge_halves(e)
            h1, h2 = halves if len(halves) == 2 else (halves[0], halves[0])
            rels.commutativity.append(
                [_raw_path(f, h1), _raw_path(f, h2)]
            )
        for h in g.half_edges:
            wrong = g.inv(g.rho(h))
            rels.zero.append([arrow_name(h), arrow_name(wrong)])
        _sort_relations(rels)
        return Quiver(vertices, arrows), rels
    if presentation != ADMISSIBLE:
        raise ValueError(f"unknown presentation {presentation!r}")

    kept = _kept_halves(f)
    arrows = tuple(
        Arrow(arrow_name(h), g.edge_of(h), g.edge_of(g.rho(h)), h)
        for h in g.half_edges
        if h in kept
    )
    rels = RelationSet()
    for e in vertices:
        halves = g.edge_halves(e)
        if len(halves) == 2:
            h1, h2 = halves
        else:  # pragma: no cover - plain graphs have no fixed halves
            h1 = h2 = halves[0]
        if not f.truncated(g.source(h1)) and not f.truncated(g.source(h2)):
            rels.commutativity.append(
                [_expanded_path(f, kept, h1, f.degree[g.source(h1)]),
                 _expanded_path(f, kept, h2, f.degree[g.source(h2)])]
            )
    for h in sorted(kept):
        d = f.degree[g.source(h)]
        rels.nilpotency.append(_expanded_path(f, kept, h, d + 1))
        succ = _successor_arrow(f, kept, h)
        target_edge = g.edge_of(g.rho(h))
        for cand in g.edge_halves(target_edge):
            if cand in kept and arrow_name(cand) != succ:
                rels.zero.append([arrow_name(h), arrow_name(cand)])
    _sort_relations(rels)
    return Quiver(vertices, arrows), rels


def _kept_halves(f):
    g = f.graph
    kept = set()
    for h in g.half_edges:
        v = g.source(h)
        if not f.truncated(v):
            kept.add(h)
            continue
        other = g.inv(h)
        if f.truncated(g.source(other)) and h == min(h, other):
            kept.add(h)
    return kept


def _raw_path(f, h, length=None):
    g = f.graph
    length = f.degree[g.source(h)] if length is None else length
    return [arrow_name(g.rho(h, j)) for j in range(length)]


def _expanded_path(f, kept, h, length):
    """Arrow word of the rotation path from h, substituting each deleted
    arrow by the equal maximal path from its partner half-edge."""
    g = f.graph
    word = []
    for j in range(length):
        step = g.rho(h, j)
        if step in kept:
            word.append(arrow_name(step))
        else:
            other = g.inv(step)
            if f.truncated(g.source(other)):
                word.append(arrow_name(other))
            else:
                word.extend(_raw_path(f, other))
    return word


def _successor_arrow(f, kept, h):
    g = f.graph
    nxt = g.rho(h)
    if nxt in kept:
        return arrow_name(nxt)
    other = g.inv(nxt)
    if f.truncated(g.source(other)):
        return arrow_name(other)
    return arrow_name(other)


def _sort_relations(rels):
    rels.commutativity.sort()
    rels.zero.sort()
    rels.nilpotency.sort()


# ---------------------------------------------------------------------------
# Path basis and dimensions
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class BasisElement:
    kind: str  # "triv", "path", "soc"
    source: str
    target: str
    half_edge: str = ""
    length: int = 0


class PathBasis:
    """The standard basis of the algebra: trivial paths, proper rotation
    paths of length below the degree bound, and one socle class per edge
    identifying the two maximal paths."""

    def __init__(self, f: BiserialFBG):
        self.fbg = f
        g = f.graph
        elems = []
        for e in g.edges():
            elems.append(BasisElement("triv", e, e))
        for h in g.half_edges:
            d = f.degree[g.source(h)]
            for k in range(1, d):
                elems.append(
                    BasisElement("path", g.edge_of(h), g.edge_of(g.rho(h, k)), h, k)
                )
        for e in g.edges():
            elems.append(BasisElement("soc", e, f.nu_edge[e]))
        self.elements = tuple(elems)

    def dim(self, source, target):
        return sum(1 for b in self.elements if b.source == source and b.target == target)

    @property
    def total_dimension(self):
        return len(self.elements)

    def projective_dimension(self, e):
        return sum(1 for b in self.elements if b.source == e)

    def loewy_vector(self, e):
        g = self.fbg.graph
        halves = g.edge_halves(e)
        degs = [self.fbg.degree[g.source(h)] for h in halves]
        if len(degs) == 1:  # pragma: no cover
            degs = degs * 2
        top = max(degs)
        vec = [0] * (top + 1)
        for b in self.elements:
            if b.source != e:
                continue
            layer = {"triv": 0, "path": b.length, "soc": top}[b.kind]
            vec[layer] += 1
        return tuple(vec)

    def report(self):
        g = self.fbg.graph
        edges = g.edges()
        dims = {
            e: {e2: self.dim(e, e2) for e2 in edges if self.dim(e, e2)} for e in edges
        }
        return {
            "total": self.total_dimension,
            "projectives": {e: self.projective_dimension(e) for e in edges},
            "loewy": {e: list(self.loewy_vector(e)) for e in edges},
            "dims": dims,
        }


def rho_path_basis(f: BiserialFBG):
    return PathBasis(f)


def hom_dim_formula(f: BiserialFBG, P, Pp):
    """dim Hom(proj at Pp, proj at P) = dim e_P A e_{Pp}, in closed form.

    Case analysis over shared endpoints of the two edges: each half-edge h
    of P whose vertex carries some half of Pp contributes the number of
    rotation hits of Pp within the degree window, which is ceil(m) or
    ceil(m)-1 depending on where the first hit falls.  A hit at exactly the
    degree bound is the socle and is shared by both halves (top of Pp
    matches the socle of P), hence counted once; the trivial path
    contributes when P = Pp.
    """
    g = f.graph
    total = 1 if P == Pp else 0
    if f.nu_edge[P] == Pp:
        total += 1  # socle class, shared by the two maximal paths
    p_halves = g.edge_halves(P)
    q_halves = g.edge_halves(Pp)
    for h in p_halves:
        v = g.source(h)
        d = f.degree[v]
        val = len(g.rotation(v))
        for q in q_halves:
            if g.source(q) != v:
                continue
            cycle = g.rotation(v)
            k0 = (cycle.index(q) - cycle.index(h)) % val
            if k0 == 0:
                k0 = val
            if k0 > d:
                continue
            hits = (d - k0) // val + 1  # hits in [1, d]
            if k0 + ((d - k0) // val) * val == d:
                hits -= 1  # the k = d hit is the socle, already counted
            total += hits
    return total


# ---------------------------------------------------------------------------
# Skew presentation from an orbifold ribbon graph
# ---------------------------------------------------------------------------


def skew_vertex(edge, sign=""):
    return f"{edge}^{sign}" if sign else edge


def build_skew_quiver(og, degree):
    """Quiver and (i)-(v) relation families of a skew presentation.

    Requires valency | degree at every vertex.  Orbifold edges split into
    two signed quiver vertices; arrows follow the four adjacency cases.
    """
    for v in og.vertices:
        val = len(og.rotation(v))
        if degree[v] % val != 0:
            raise NotSkewBG(f"val {val} does not divide degree {degree[v]} at {v}")
    fixed = set(og.fixed_set)

    def slots(h):
        return ("+", "-") if h in fixed else ("",)

    vertices = []
    for e in og.edges():
        halves = og.edge_halves(e)
        if len(halves) == 1:
            vertices.extend([skew_vertex(e, "+"), skew_vertex(e, "-")])
        else:
            vertices.append(skew_vertex(e))
    vertices = tuple(sorted(vertices))

    arrows = []
    for h in og.half_edges:
        h2 = og.rho(h)
        e1, e2 = og.edge_of(h), og.edge_of(h2)
        for i in slots(h):
            for j in slots(h2):
                arrows.append(
                    Arrow(
                        arrow_name(h),
                        skew_vertex(e1, i),
                        skew_vertex(e2, j),
                        h,
                        sign_in=i,
                        sign_out=j,
                    )
                )
    arrows = tuple(arrows)

    def cycle_variants(h):
        """All sign-realizations of the cycle of arrows around source(h),
        each a list of (arrow name, sign_in, sign_out); the closing sign
        equals the opening one."""
        v = og.source(h)
        val = len(og.rotation(v))
        steps = [og.rho(h, t) for t in range(val)]
        slot_choices = [slots(s) for s in steps]
        out = []
        for combo in itertools.product(*slot_choices):
            word = []
            for t, step in enumerate(steps):
                i = combo[t]
                j = combo[(t + 1) % val]
                word.append((arrow_name(step), i, j))
            out.append(word)
        # Canonical variant first: all-plus where a choice exists.
        out.sort(key=lambda w: [s for _, s, _ in w])
        return out

    def m_of(h):
        v = og.source(h)
        return degree[v] // len(og.rotation(v))

    rel_i = []
    rel_ii = []
    rel_iii = []
    rel_iv = []
    rel_v = []
    for h in og.half_edges:
        nxt = og.rho(h)
        after = og.rho(h, 2)
        if nxt in fixed:
            for i in slots(h):
                for j in slots(after):
                    rel_i.append(
                        {
                            "left": [(arrow_name(h), i, "+"), (arrow_name(nxt), "+", j)],
                            "right": [(arrow_name(h), i, "-"), (arrow_name(nxt), "-", j)],
                        }
                    )
        else:
            partner = og.inv(nxt)
            for i in slots(h):
                for j in slots(og.rho(partner)):
                    rel_iii.append(
                        {"word": [(arrow_name(h), i, ""), (arrow_name(partner), "", j)]}
                    )
    done_edges = set()
    for h in og.half_edges:
        e = og.edge_of(h)
        if h in fixed or e in done_edges:
            continue
        done_edges.add(e)
        h1, h2 = og.edge_halves(e)
        chain = [
            {"cycle": w, "power": m_of(h1)} for w in cycle_variants(h1)
        ] + [
            {"cycle": w, "power": m_of(h2)} for w in cycle_variants(h2)
        ]
        rel_ii.append({"edge": skew_vertex(e), "chain": chain})
    for h in og.half_edges:
        for w in cycle_variants(h):
            first, i1, i2 = w[0]
            if h in fixed:
                flipped = "-" if i1 == "+" else "+"
                rel_iv.append(
                    {
                        "word": [(first, flipped, i2)] + w[1:],
                        "power_tail": m_of(h) - 1,
                        "cycle": w,
                    }
                )
            rel_v.append({"cycle": w, "power": m_of(h), "then": (first, i1, i2)})

    rels = RelationSet(
        skew={"i": rel_i, "ii": rel_ii, "iii": rel_iii, "iv": rel_iv, "v": rel_v}
    )
    return Quiver(vertices, arrows), rels


# ---------------------------------------------------------------------------
# Quiver isomorphism
# ---------------------------------------------------------------------------


def quiver_isomorphic(q1: Quiver, q2: Quiver, rels1=None, rels2=None, max_vertices=64):
    """Vertex/arrow bijection preserving incidence and sign decorations.

    Relation sets, when given, are compared by tagged-family cardinality.
    Returns the vertex mapping or None.
    """
    if len(q1.vertices) != len(q2.vertices) or len(q1.arrows) != len(q2.arrows):
        return None
    if len(q1.vertices) > max_vertices:
        raise SizeLimitExceeded(f"quiver isomorphism capped at {max_vertices} vertices")
    if rels1 is not None and rels2 is not None:
        if rels1.family_counts() != rels2.family_counts():
            return None

    def edge_multiset(q):
        out = {}
        for a in q.arrows:
            key = (a.source, a.target, a.sign_in, a.sign_out)
            out[key] = out.get(key, 0) + 1
        return out

    m1, m2 = edge_multiset(q1), edge_multiset(q2)

    def profile(q, m, v):
        outs = sorted(
            (cnt, si, so) for (s, t, si, so), cnt in m.items() if s == v
        )
        ins = sorted(
            (cnt, si, so) for (s, t, si, so), cnt in m.items() if t == v
        )
        return (tuple(outs), tuple(ins))

    p1 = {v: profile(q1, m1, v) for v in q1.vertices}
    p2 = {v: profile(q2, m2, v) for v in q2.vertices}
    if sorted(p1.values()) != sorted(p2.values()):
        return None

    verts1 = sorted(q1.vertices)
    used = set()
    mapping = {}

    def consistent():
        for (s, t, si, so), cnt in m1.items():
            if s in mapping and t in mapping:
                if m2.get((mapping[s], mapping[t], si, so), 0) != cnt:
                    return False
        return True

    def backtrack(i):
        if i == len(verts1):
            return True
        v = verts1[i]
        for w in sorted(q2.vertices):
            if w in used or p2[w] != p1[v]:
                continue
            mapping[v] = w
            used.add(w)
            if consistent() and backtrack(i + 1):
                return True
            del mapping[v]
            used.discard(w)
        return False

    if backtrack(0):
        return dict(mapping)
    return None
