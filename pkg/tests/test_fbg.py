import random
from fractions import Fraction

import pytest

from fbga.errors import DisconnectedGraph, NotAnOrbit, SIViolation
from fbga.fbg import ALL_LOOPS, ISOLATED, SHARED_NONLOOP, check_si
from fbga.fixtures import (
    brauer_path,
    brauer_star,
    example1_preproj_a3,
    kauer_gamma1,
    triangle_nakayama,
)
from fbga.randgen import random_fbg
from fbga.ribbon import RibbonGraph


def test_example1_is_valid():
    f = example1_preproj_a3()
    assert f.degree == {"v": 2, "w": 1}


def test_example1_with_wrong_degree_fails_with_all_witnesses():
    g = example1_preproj_a3().graph
    with pytest.raises(SIViolation) as exc:
        check_si(g, {"v": 3, "w": 1})
    failing = {h for h, _, _ in exc.value.failures}
    assert failing  # every failing half-edge is reported, with both sides
    for h, lhs, rhs in exc.value.failures:
        assert lhs != rhs


def test_triangle_fixture_valid_and_fractional():
    f = triangle_nakayama()
    assert all(inv.m == Fraction(1, 3) for inv in f.vertex_invariants.values())
    # The other cyclic order at w fails the compatibility identity.
    g = RibbonGraph(
        {"v": ("1", "2", "3"), "w": ("1'", "3'", "2'")},
        {h: h[:-1] if h.endswith("'") else h + "'" for h in ("1", "2", "3", "1'", "2'", "3'")},
    )
    with pytest.raises(SIViolation):
        check_si(g, {"v": 1, "w": 1})


def test_disconnected_rejected():
    g = RibbonGraph(
        {"v": ("a",), "w": ("a'",), "x": ("b",), "y": ("b'",)},
        {"a": "a'", "a'": "a", "b": "b'", "b'": "b"},
    )
    with pytest.raises(DisconnectedGraph):
        check_si(g, {"v": 2, "w": 1, "x": 2, "y": 1})


def test_example1_nakayama():
    f = example1_preproj_a3()
    nu, nu_edge, order = f.nakayama()
    assert order == 2
    assert nu_edge == {"1~1'": "3~3'", "3~3'": "1~1'", "2~2'": "2~2'"}
    assert f.edge_orbits == (("1~1'", "3~3'"), ("2~2'",))
    for h in f.graph.half_edges:
        assert nu[f.graph.inv(h)] == f.graph.inv(nu[h])


def test_brauer_graph_nakayama_trivial():
    f = brauer_path(3)
    assert f.nu_order == 1
    assert all(inv.n == 1 for inv in f.vertex_invariants.values())
    assert f.is_brauer_graph()


def test_gamma1_orbits_and_invariants():
    f = kauer_gamma1()
    assert f.nu_order == 3
    assert f.edge_orbits == (
        ("1~1'", "3~3'", "5~5'"),
        ("2~2'", "4~4'", "6~6'"),
    )
    inv = f.vertex_invariants
    assert inv["v1"].m == Fraction(2, 3)
    assert inv["v2"].m == inv["v3"].m == Fraction(1, 3)
    assert (inv["v1"].val, inv["v1"].o, inv["v1"].n, inv["v1"].F) == (6, 2, 3, 2)


def test_example1_invariants():
    f = example1_preproj_a3()
    inv = f.vertex_invariants
    assert (inv["v"].val, inv["v"].o, inv["v"].n, inv["v"].F) == (4, 2, 2, 1)
    assert (inv["w"].val, inv["w"].o, inv["w"].n, inv["w"].F) == (2, 1, 2, 1)
    assert inv["v"].m == inv["w"].m == Fraction(1, 2)


def test_invariant_identities_on_random_graphs():
    rng = random.Random(17)
    for _ in range(40):
        f = random_fbg(rng)
        for v, inv in f.vertex_invariants.items():
            assert inv.val == inv.o * inv.n
            assert f.degree[v] == inv.o * inv.F
            assert inv.m * inv.val == f.degree[v]
        ns = {inv.n for inv in f.vertex_invariants.values()}
        assert ns == {f.nu_order}


def test_nu_fans():
    f = example1_preproj_a3()
    fans = f.nu_fans("v")
    assert len(fans) == 2 and all(len(fan) == 2 for fan in fans)
    assert fans[0][0] == "1"
    g1 = kauer_gamma1()
    fans = g1.nu_fans("v1")
    assert len(fans) == 3 and all(len(fan) == 2 for fan in fans)
    # A Brauer-graph vertex has a single fan: the whole rotation.
    bp = brauer_path(2)
    assert g_len(bp.nu_fans("u1")) == (1, 2)


def g_len(fans):
    return (len(fans), len(fans[0]))


def test_classify_orbits():
    g1 = kauer_gamma1()
    assert g1.classify_nu_orbit(("1~1'", "3~3'", "5~5'")) == SHARED_NONLOOP
    f = example1_preproj_a3()
    # The loop's halves are not rotation-adjacent, so no neighbour of the
    # orbit lies in it.
    assert f.classify_nu_orbit(("2~2'",)) == ISOLATED
    assert f.classify_nu_orbit(("1~1'", "3~3'")) == SHARED_NONLOOP
    # Two rotation-adjacent loops above one vertex, plus a spectator edge.
    loops = check_si(
        RibbonGraph(
            {"v": ("a0", "b0", "c0", "a1", "b1", "c1"), "w": ("w0", "w1")},
            {
                "a0": "b0", "b0": "a0", "a1": "b1", "b1": "a1",
                "c0": "w0", "w0": "c0", "c1": "w1", "w1": "c1",
            },
        ),
        {"v": 3, "w": 1},
    )
    assert loops.classify_nu_orbit(("a0~b0", "a1~b1")) == ALL_LOOPS
    # A leaf edge neighbours itself through the valency-one rotation, so
    # it is a shared-vertex orbit; an interior path edge is isolated.
    star = brauer_star(3)
    assert star.classify_nu_orbit(("e1a~e1b",)) == SHARED_NONLOOP
    path = brauer_path(3)
    assert path.classify_nu_orbit(("e2a~e2b",)) == ISOLATED
    with pytest.raises(NotAnOrbit):
        f.classify_nu_orbit(("1~1'",))


def test_admissibility():
    f = example1_preproj_a3()
    ok, witness = f.is_admissible()
    assert not ok and witness == "2"
    g1 = kauer_gamma1()
    assert g1.is_admissible() == (True, None)
    assert brauer_path(3).is_admissible() == (True, None)


def test_brauer_tree_recognition():
    assert brauer_path(3).is_brauer_tree()
    assert brauer_star(4, center_multiplicity=2).is_brauer_tree()
    two_exceptional = check_si(
        brauer_path(2).graph, {"u0": 2, "u1": 2, "u2": 2}
    )
    assert two_exceptional.is_brauer_graph()
    assert not two_exceptional.is_brauer_tree()
    assert not triangle_nakayama().is_brauer_graph()
