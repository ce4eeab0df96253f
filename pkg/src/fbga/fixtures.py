"""Built-in graphs: the worked examples plus small parametric families."""

from __future__ import annotations

from .fbg import BiserialFBG, check_si
from .ribbon import RibbonGraph


def example1_preproj_a3() -> BiserialFBG:
    """Two vertices, a loop edge and two parallel edges; degrees 2 and 1.

    The algebra is the preprojective algebra of type A3.  The rotation at
    w is the unique choice (up to relabeling) compatible with the degree
    function; the loop edge is fixed by the Nakayama action and the two
    parallel edges are swapped.
    """
    graph = RibbonGraph(
        {"v": ("1", "2", "3", "2'"), "w": ("1'", "3'")},
        _pairs(("1", "1'"), ("2", "2'"), ("3", "3'")),
    )
    return check_si(graph, {"v": 2, "w": 1})


def triangle_nakayama() -> BiserialFBG:
    """Three parallel edges, both degrees 1; multiplicity 1/3 twice.

    The algebra is the Nakayama algebra on a 3-cycle with radical square
    zero.  Of the two cyclic orders at w, only this one passes the
    compatibility check.
    """
    graph = RibbonGraph(
        {"v": ("1", "2", "3"), "w": ("1'", "2'", "3'")},
        _pairs(("1", "1'"), ("2", "2'"), ("3", "3'")),
    )
    return check_si(graph, {"v": 1, "w": 1})


def kauer_gamma1() -> BiserialFBG:
    """Three vertices; edges 1,3,5 join v1-v2 and 2,4,6 join v1-v3.

    Multiplicities 2/3, 1/3, 1/3; the algebra is a self-injective Nakayama
    algebra on a 6-cycle with radical^5 = 0.
    """
    graph = RibbonGraph(
        {
            "v1": ("1", "2", "3", "4", "5", "6"),
            "v2": ("1'", "5'", "3'"),
            "v3": ("2'", "6'", "4'"),
        },
        _pairs(*((str(i), f"{i}'") for i in range(1, 7))),
    )
    return check_si(graph, {"v1": 4, "v2": 1, "v3": 1})


def kauer_gamma2() -> BiserialFBG:
    """The mutation partner of kauer_gamma1: edges 1,3,5 moved to v3."""
    graph = RibbonGraph(
        {
            "v1": ("2", "4", "6"),
            "v2": ("1'", "5'", "3'"),
            "v3": ("1", "6'", "5", "4'", "3", "2'"),
        },
        _pairs(*((str(i), f"{i}'") for i in range(1, 7))),
    )
    return check_si(graph, {"v1": 2, "v2": 1, "v3": 2})


def brauer_path(n=3) -> BiserialFBG:
    """A path with n edges and multiplicity one everywhere."""
    if n < 1:
        raise ValueError("need at least one edge")
    rotation = {}
    pairing = {}
    for i in range(n + 1):
        halves = []
        if i > 0:
            halves.append(f"e{i}b")
        if i < n:
            halves.append(f"e{i + 1}a")
        rotation[f"u{i}"] = tuple(halves)
    for i in range(1, n + 1):
        pairing[f"e{i}a"] = f"e{i}b"
        pairing[f"e{i}b"] = f"e{i}a"
    graph = RibbonGraph(rotation, pairing)
    degree = {v: len(graph.rotation(v)) for v in graph.vertices}
    return check_si(graph, degree)


def brauer_star(n=3, center_multiplicity=1) -> BiserialFBG:
    """n edges around one center; optional exceptional multiplicity."""
    rotation = {"c": tuple(f"e{i}a" for i in range(1, n + 1))}
    pairing = {}
    for i in range(1, n + 1):
        rotation[f"u{i}"] = (f"e{i}b",)
        pairing[f"e{i}a"] = f"e{i}b"
        pairing[f"e{i}b"] = f"e{i}a"
    graph = RibbonGraph(rotation, pairing)
    degree = {v: len(graph.rotation(v)) for v in graph.vertices}
    degree["c"] *= center_multiplicity
    return check_si(graph, degree)


def cycle_graph(length, multiplicity=1) -> BiserialFBG:
    """A cycle of the given length with constant multiplicity."""
    if length < 2:
        raise ValueError("cycle length must be at least 2")
    rotation = {}
    pairing = {}
    for i in range(length):
        rotation[f"c{i}"] = (f"e{i}a", f"e{(i - 1) % length}b")
        pairing[f"e{i}a"] = f"e{i}b"
        pairing[f"e{i}b"] = f"e{i}a"
    graph = RibbonGraph(rotation, pairing)
    degree = {v: 2 * multiplicity for v in graph.vertices}
    return check_si(graph, degree)


def even_cycle(k=2) -> BiserialFBG:
    """The 2k-cycle with multiplicity one; never tilting-discrete."""
    return cycle_graph(2 * k)


CATALOG = {
    "example1-preproj-a3": example1_preproj_a3,
    "triangle-nakayama": triangle_nakayama,
    "kauer-gamma1": kauer_gamma1,
    "kauer-gamma2": kauer_gamma2,
    "brauer-path-3": brauer_path,
}


def fixture_names():
    return sorted(CATALOG) + ["even-cycle-2k"]


def load_fixture(name) -> BiserialFBG:
    if name in CATALOG:
        return CATALOG[name]()
    if name.startswith("even-cycle-"):
        tail = name.removeprefix("even-cycle-")
        if tail == "2k":
            tail = "4"
        try:
            size = int(tail)
        except ValueError:
            raise KeyError(name) from None
        if size < 2 or size % 2:
            raise ValueError("even-cycle size must be a positive even number")
        return even_cycle(size // 2)
    raise KeyError(name)


def _pairs(*pairs):
    out = {}
    for a, b in pairs:
        out[a] = b
        out[b] = a
    return out
