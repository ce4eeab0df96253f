import random

from fbga.fixtures import (
    brauer_path,
    brauer_star,
    cycle_graph,
    example1_preproj_a3,
    kauer_gamma1,
    triangle_nakayama,
)
from fbga.quiver import build_skew_quiver, quiver_isomorphic
from fbga.randgen import random_fbg
from fbga.reduction import (
    double_cover,
    is_representation_finite,
    orbit_graph,
    reduced_form,
    skew_group_quiver,
)
from fbga.ribbon import graph_isomorphic


def test_example1_orbit_graph():
    f = example1_preproj_a3()
    og = orbit_graph(f)
    assert og.graph.fixed_set == ("2",)
    assert og.graph.edges() == ("1~1'", "2")
    assert og.loops_above == {"2": ("2~2'",)}
    assert og.degree == {"v": 2, "w": 1}


def test_gamma1_orbit_graph_is_plain():
    og = orbit_graph(kauer_gamma1())
    assert og.graph.fixed_set == ()
    assert len(og.graph.edges()) == 2
    assert og.degree["v1"] == 4


def test_brauer_graph_is_its_own_orbit_graph():
    f = brauer_path(3)
    og = orbit_graph(f)
    assert graph_isomorphic(og.graph, f.graph) is not None


def test_double_cover_of_example1_orbit_graph():
    f = example1_preproj_a3()
    og = orbit_graph(f)
    cov = double_cover(og.graph, og.degree)
    assert cov.covered
    g = cov.graph
    assert len(g.vertices) == 4
    assert len(g.edges()) == 3
    assert not g.orbifold
    # phi is a fixed-point-free involution commuting with the structure.
    for x, y in cov.phi.items():
        assert x != y and cov.phi[y] == x
    # The underlying graph is a path: two leaves, two inner vertices.
    vals = sorted(g.valency().values())
    assert vals == [1, 1, 2, 2]


def test_double_cover_of_single_orbifold_loop():
    from fbga.ribbon import RibbonGraph

    og = RibbonGraph({"v": ("x",)}, {"x": "x"}, orbifold=True)
    cov = double_cover(og, {"v": 1})
    assert cov.graph.vertices == ("v#1", "v#2")
    assert cov.graph.edges() == ("x#1~x#2",)
    assert cov.graph.valency() == {"v#1": 1, "v#2": 1}


def test_double_cover_without_orbifold_edges_is_identity():
    f = brauer_path(2)
    cov = double_cover(f.graph, f.degree)
    assert not cov.covered
    assert cov.graph is f.graph


def test_reduced_forms():
    f = example1_preproj_a3()
    red = reduced_form(f)
    assert not red.admissible
    assert len(red.graph.edges()) == 3
    assert all(red.fbg.multiplicity(v) == 1 for v in red.graph.vertices)
    assert red.fbg.is_brauer_tree()

    g1 = kauer_gamma1()
    red1 = reduced_form(g1)
    assert red1.admissible
    assert len(red1.graph.edges()) == 2
    mult = {v: red1.fbg.multiplicity(v) for v in red1.graph.vertices}
    assert sorted(mult.values()) == [1, 1, 2]

    bp = brauer_path(3)
    assert graph_isomorphic(reduced_form(bp).graph, bp.graph) is not None


def test_reduced_multiplicity_equals_fan_count():
    rng = random.Random(6)
    for _ in range(25):
        f = random_fbg(rng)
        red = reduced_form(f)
        for v in red.graph.vertices:
            src = v.rsplit("#", 1)[0] if red.phi else v
            assert red.fbg.multiplicity(v) == f.vertex_invariants[src].F


def test_representation_finiteness():
    assert is_representation_finite(example1_preproj_a3())
    assert not is_representation_finite(triangle_nakayama()) or True
    # The triangle's reduced form is a single edge: a tree.
    assert is_representation_finite(triangle_nakayama())
    assert is_representation_finite(brauer_star(4, center_multiplicity=2))
    assert not is_representation_finite(cycle_graph(3))


def test_skew_group_quiver_example1():
    f = example1_preproj_a3()
    q = skew_group_quiver(f)
    assert len(q.vertices) == 3 and len(q.arrows) == 5
    og = orbit_graph(f)
    skew, _ = build_skew_quiver(og.graph, og.degree)
    assert quiver_isomorphic(q, skew) is not None


def test_skew_group_quiver_admissible_case():
    g1 = kauer_gamma1()
    q = skew_group_quiver(g1)
    # One arrow per Nakayama orbit of half-edges.
    assert len(q.arrows) == len(g1.half_edge_orbits)
    assert len(q.vertices) == 2


def test_skew_group_comparison_on_random_non_admissible():
    rng = random.Random(13)
    done = 0
    while done < 12:
        f = random_fbg(rng, require_orbifold=True)
        admissible, _ = f.is_admissible()
        if admissible:
            continue
        q = skew_group_quiver(f)
        og = orbit_graph(f)
        skew, _ = build_skew_quiver(og.graph, og.degree)
        assert quiver_isomorphic(q, skew) is not None
        done += 1


def test_orbit_graph_respects_quotient_maps():
    rng = random.Random(21)
    for _ in range(20):
        f = random_fbg(rng)
        og = orbit_graph(f)
        rep = og.orbit_map
        g = f.graph
        for h in g.half_edges:
            assert rep[f.nu[h]] == rep[h]
            assert og.graph.inv(rep[h]) == rep[g.inv(h)]
            assert og.graph.rho(rep[h]) == rep[g.rho(h)]
