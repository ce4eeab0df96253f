import random

import pytest

from fbga.errors import NotAnOrbit, NotStable
from fbga.fixtures import (
    brauer_path,
    brauer_star,
    example1_preproj_a3,
    kauer_gamma1,
    kauer_gamma2,
)
from fbga.mutation import (
    generalized_kauer_move,
    kauer_move,
    kauer_move_orbifold,
    okuyama_rickard,
)
from fbga.quiver import ADMISSIBLE, build_quiver, quiver_isomorphic
from fbga.randgen import random_fbg
from fbga.reduction import orbit_graph
from fbga.ribbon import graph_isomorphic


def test_okuyama_rickard_descriptor():
    g1 = kauer_gamma1()
    desc = okuyama_rickard(g1, ("1~1'", "3~3'", "5~5'"))
    assert len(desc.summands) == 3
    by_edge = {s["minus_one"]: s["zero"] for s in desc.summands}
    # rho-inverse neighbours of the halves of edge 1 are edges 6 and 3.
    assert by_edge["1~1'"] == sorted(["6~6'", "3~3'"])
    assert desc.untouched == ("2~2'", "4~4'", "6~6'")


def test_okuyama_rickard_single_edge_orbit():
    f = brauer_path(2)
    desc = okuyama_rickard(f, ("e1a~e1b",))
    assert desc.summands[0]["minus_one"] == "e1a~e1b"
    with pytest.raises(NotAnOrbit):
        okuyama_rickard(f, ("e1a~e1b", "e2a~e2b"))


def test_kauer_move_reproduces_worked_example():
    g1 = kauer_gamma1()
    g2 = kauer_gamma2()
    mv = kauer_move(g1, ("1~1'", "3~3'", "5~5'"), "left")
    assert graph_isomorphic(mv.fbg.graph, g2.graph, mv.fbg.degree, g2.degree)
    qm, rm = build_quiver(mv.fbg, ADMISSIBLE)
    q2, r2 = build_quiver(g2, ADMISSIBLE)
    assert quiver_isomorphic(qm, q2, rm, r2) is not None
    for v in mv.fbg.graph.vertices:
        assert mv.fbg.multiplicity(v) == g1.multiplicity(v)
    back = kauer_move(mv.fbg, mv.orbit, "right")
    assert graph_isomorphic(back.fbg.graph, g1.graph, back.fbg.degree, g1.degree)


def test_classical_leaf_move():
    # The centre attachment of a star edge slides along its predecessor
    # edge and re-attaches at that edge's far end.
    star = brauer_star(3)
    mv = kauer_move(star, ("e1a~e1b",), "left")
    assert sorted(mv.fbg.graph.valency().values()) == [1, 1, 2, 2]
    back = kauer_move(mv.fbg, mv.orbit, "right")
    assert graph_isomorphic(back.fbg.graph, star.graph, back.fbg.degree, star.degree)
    # A path leaf slides onto the next vertex: the shape changes.
    path = brauer_path(3)
    mv = kauer_move(path, ("e1a~e1b",), "left")
    assert sorted(mv.fbg.graph.valency().values()) == [1, 1, 1, 3]


def test_trace_records_reattachments():
    g1 = kauer_gamma1()
    mv = kauer_move(g1, ("1~1'", "3~3'", "5~5'"), "left")
    moved = {h for h in mv.trace}
    assert moved == {"1", "3", "5"}  # the v2-side halves stay put
    for h, rec in mv.trace.items():
        assert rec["from"][0] == "v1" and rec["to"][0] == "v3"


def test_generalized_move_empty_set_is_identity():
    f = example1_preproj_a3()
    mv = generalized_kauer_move(f, set(), "left")
    assert mv.fbg.graph == f.graph and mv.fbg.degree == f.degree


def test_generalized_move_matches_orbit_move():
    g1 = kauer_gamma1()
    halves = {"1", "1'", "3", "3'", "5", "5'"}
    a = generalized_kauer_move(g1, halves, "left")
    b = kauer_move(g1, ("1~1'", "3~3'", "5~5'"), "left")
    assert a.fbg.graph == b.fbg.graph and a.fbg.degree == b.fbg.degree


def test_generalized_move_rejects_unstable_sets():
    g1 = kauer_gamma1()
    with pytest.raises(NotStable):
        generalized_kauer_move(g1, {"1"}, "left")  # not iota-closed
    with pytest.raises(NotStable):
        generalized_kauer_move(g1, {"1", "1'"}, "left")  # not nu-closed


def test_two_disjoint_orbits_slide_together():
    f = brauer_path(4)
    halves = {"e1a", "e1b", "e3a", "e3b"}
    joint = generalized_kauer_move(f, halves, "left")
    one = generalized_kauer_move(f, {"e1a", "e1b"}, "left")
    two = generalized_kauer_move(one.fbg, {"e3a", "e3b"}, "left")
    assert graph_isomorphic(
        joint.fbg.graph, two.fbg.graph, joint.fbg.degree, two.fbg.degree
    )


def test_mutation_invariants_on_random_corpus():
    rng = random.Random(31)
    for _ in range(60):
        f = random_fbg(rng)
        for orbit in f.edge_orbits:
            for direction, inverse in (("left", "right"), ("right", "left")):
                mv = kauer_move(f, orbit, direction)
                assert len(mv.fbg.graph.half_edges) == len(f.graph.half_edges)
                assert len(mv.fbg.graph.edges()) == len(f.graph.edges())
                for v in mv.fbg.graph.vertices:
                    assert mv.fbg.multiplicity(v) == f.multiplicity(v)
                sizes = sorted(len(o) for o in mv.fbg.edge_orbits)
                assert sizes == sorted(len(o) for o in f.edge_orbits)
                back = kauer_move(mv.fbg, mv.orbit, inverse)
                assert graph_isomorphic(
                    back.fbg.graph, f.graph, back.fbg.degree, f.degree
                )


def test_quotient_commutation_on_random_corpus():
    rng = random.Random(37)
    for _ in range(40):
        f = random_fbg(rng)
        og = orbit_graph(f)
        for orbit in f.edge_orbits:
            mv = kauer_move(f, orbit, "left")
            down = orbit_graph(mv.fbg)
            e0 = og.graph.edge_of(og.orbit_map[f.graph.edge_halves(orbit[0])[0]])
            slid, deg = kauer_move_orbifold(og.graph, og.degree, e0, "left")
            assert graph_isomorphic(down.graph, slid, down.degree, deg)


def test_orbifold_move_inverts():
    f = example1_preproj_a3()
    og = orbit_graph(f)
    for edge in og.graph.edges():
        there, d1 = kauer_move_orbifold(og.graph, og.degree, edge, "left")
        back, d2 = kauer_move_orbifold(there, d1, edge, "right")
        assert graph_isomorphic(back, og.graph, d2, og.degree)
