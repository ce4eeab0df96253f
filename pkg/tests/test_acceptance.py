"""Acceptance suite: one timed pass/fail line per criterion.

Every tolerance is exact; randomized corpora use fixed seeds so the run
is reproducible byte for byte.
"""

import random
import time

import pytest

from fbga.errors import PreconditionFailed
from fbga.fixtures import (
    brauer_path,
    brauer_star,
    cycle_graph,
    even_cycle,
    example1_preproj_a3,
    kauer_gamma1,
    kauer_gamma2,
    triangle_nakayama,
)
from fbga.mutation import kauer_move, kauer_move_orbifold
from fbga.quiver import (
    ADMISSIBLE,
    build_quiver,
    build_skew_quiver,
    hom_dim_formula,
    quiver_isomorphic,
    rho_path_basis,
)
from fbga.randgen import random_fbg
from fbga.reduction import orbit_graph, reduced_form, is_representation_finite, skew_group_quiver
from fbga.ribbon import graph_isomorphic
from fbga.walks import (
    bijection_psi,
    cycle_census,
    even_cycle_witnesses,
    tilting_discrete,
    two_silt_count_m_ge_1,
)

BUNDLED = (
    example1_preproj_a3,
    triangle_nakayama,
    kauer_gamma1,
    kauer_gamma2,
    brauer_path,
)


def timed(name, budget):
    class Ctx:
        def __enter__(self):
            self.start = time.perf_counter()
            return self

        def __exit__(self, exc_type, exc, tb):
            elapsed = time.perf_counter() - self.start
            status = "PASS" if exc_type is None else "FAIL"
            print(f"{status}: {name} ({elapsed:.2f}s, budget {budget}s)")
            if exc_type is None and elapsed > budget:
                raise AssertionError(f"{name} exceeded {budget}s: {elapsed:.2f}s")
            return False

    return Ctx()


def test_example1_pipeline():
    with timed("example-1 pipeline", 1.0):
        f = example1_preproj_a3()
        quiver, rels = build_quiver(f, ADMISSIBLE)
        assert len(quiver.arrows) == 4
        assert len(rels.commutativity) == 1
        basis = rho_path_basis(f)
        assert basis.projective_dimension("1~1'") == 3
        assert basis.projective_dimension("2~2'") == 4
        assert basis.projective_dimension("3~3'") == 3
        assert basis.total_dimension == 10
        assert f.edge_orbits == (("1~1'", "3~3'"), ("2~2'",))
        admissible, witness = f.is_admissible()
        assert not admissible and witness == "2"
        og = orbit_graph(f)
        assert og.graph.fixed_set == ("2",) and len(og.graph.edges()) == 2
        red = reduced_form(f)
        assert len(red.graph.edges()) == 3
        assert sorted(red.graph.valency().values()) == [1, 1, 2, 2]
        assert all(red.fbg.multiplicity(v) == 1 for v in red.graph.vertices)
        assert is_representation_finite(f)
        assert tilting_discrete(f)[0]


def test_example1_skew_presentation():
    # The relation-family cardinalities follow the published example's
    # explicit display: (i) one commuting pair, (ii) two cycle
    # identifications, (iii) four overlap zeros, (iv) two sign-mismatch
    # zeros, (v) five overflow zeros.
    with timed("skew presentation of the orbit graph", 1.0):
        f = example1_preproj_a3()
        og = orbit_graph(f)
        quiver, rels = build_skew_quiver(og.graph, og.degree)
        assert len(quiver.vertices) == 3
        assert len(quiver.arrows) == 5
        counts = rels.family_counts()
        assert counts["skew_i"] == 1
        assert counts["skew_ii"] == 2
        assert counts["skew_iii"] == 4
        assert counts["skew_iv"] == 2
        assert counts["skew_v"] == 5


def test_kauer_move_reproduction():
    with timed("worked-example mutation", 5.0):
        g1 = kauer_gamma1()
        g2 = kauer_gamma2()
        orbit = ("1~1'", "3~3'", "5~5'")
        moved = kauer_move(g1, orbit, "left")
        q_moved, r_moved = build_quiver(moved.fbg, ADMISSIBLE)
        q2, r2 = build_quiver(g2, ADMISSIBLE)
        assert len(q2.vertices) == 6 and len(q2.arrows) == 9
        assert len(r2.commutativity) == 3
        assert len(r2.nilpotency) == 9
        assert len(r2.zero) == 6
        assert quiver_isomorphic(q_moved, q2, r_moved, r2) is not None
        mults = sorted(str(moved.fbg.multiplicity(v)) for v in moved.fbg.graph.vertices)
        assert mults == ["1/3", "1/3", "2/3"]
        back = kauer_move(moved.fbg, moved.orbit, "right")
        assert graph_isomorphic(back.fbg.graph, g1.graph, back.fbg.degree, g1.degree)


def corpus(seed, count, **kwargs):
    rng = random.Random(seed)
    return [random_fbg(rng, **kwargs) for _ in range(count)]


def test_hom_formula_oracle_equivalence():
    with timed("closed-form dimensions equal the path-basis counts", 60.0):
        graphs = [fn() for fn in BUNDLED] + corpus(101, 200, max_edges=8)
        for f in graphs:
            basis = rho_path_basis(f)
            edges = f.graph.edges()
            for a in edges:
                for b in edges:
                    got = hom_dim_formula(f, a, b)
                    want = basis.dim(a, b)
                    if got != want:
                        raise AssertionError(
                            f"dim mismatch at ({a}, {b}): formula {got}, "
                            f"basis {want}\n{f.graph.dumps(f.degree)}"
                        )


def test_mutation_invariants_on_corpus():
    with timed("mutation invariants", 120.0):
        graphs = [fn() for fn in BUNDLED] + corpus(101, 200, max_edges=8)
        for f in graphs:
            og = orbit_graph(f)
            for orbit in f.edge_orbits:
                moved = kauer_move(f, orbit, "left")  # revalidates (SI)
                assert len(moved.fbg.graph.half_edges) == len(f.graph.half_edges)
                assert len(moved.fbg.graph.edges()) == len(f.graph.edges())
                for v in f.graph.vertices:
                    assert moved.fbg.multiplicity(v) == f.multiplicity(v)
                back = kauer_move(moved.fbg, moved.orbit, "right")
                assert graph_isomorphic(
                    back.fbg.graph, f.graph, back.fbg.degree, f.degree
                ), "right move does not invert"
                down = orbit_graph(moved.fbg)
                rep = og.orbit_map[f.graph.edge_halves(orbit[0])[0]]
                slid, deg = kauer_move_orbifold(
                    og.graph, og.degree, og.graph.edge_of(rep), "left"
                )
                assert graph_isomorphic(down.graph, slid, down.degree, deg), (
                    "quotient does not commute with the move"
                )


def test_walk_bijection_counts():
    with timed("stable walk-set counts against the reduced form", 120.0):
        admissible = [triangle_nakayama(), kauer_gamma1(), kauer_gamma2()]
        rng = random.Random(211)
        while len(admissible) < 22:
            f = random_fbg(rng, max_edges=3, max_o=2, forbid_orbifold=True)
            admissible.append(f)
        for f in admissible:
            assert f.is_admissible()[0]
            rep = bijection_psi(f, max_count=300000)
            assert rep.ok, rep.as_json()
        non_admissible = [example1_preproj_a3()]
        rng = random.Random(223)
        while len(non_admissible) < 11:
            f = random_fbg(rng, max_edges=3, max_o=2, require_orbifold=True)
            if not f.is_admissible()[0]:
                non_admissible.append(f)
        for f in non_admissible:
            rep = bijection_psi(f, max_count=300000)
            assert rep.ok, rep.as_json()


def test_tilting_discreteness_decisions():
    with timed("tilting-discreteness decisions", 30.0):
        assert tilting_discrete(example1_preproj_a3())[0]
        assert tilting_discrete(brauer_path(3))[0]
        assert tilting_discrete(brauer_star(4, center_multiplicity=2))[0]
        assert tilting_discrete(cycle_graph(3))[0]
        assert tilting_discrete(triangle_nakayama())[0]
        for k in (2, 3):
            f = even_cycle(k)
            assert not tilting_discrete(f)[0]
            families = even_cycle_witnesses(reduced_form(f), 5)
            assert len(families) == 5
            tops = [max(len(w) for w in fam) for fam in families]
            assert tops == sorted(tops) and len(set(tops)) == 5
        # A non-admissible fixture whose reduced form has an even cycle:
        # the families are stable under the cover involution.
        rng = random.Random(97)
        hit = False
        for _ in range(80):
            f = random_fbg(rng, require_orbifold=True, max_edges=6)
            if f.is_admissible()[0]:
                continue
            red = reduced_form(f)
            if cycle_census(red.graph).at_most_one_odd_no_even:
                continue
            assert not tilting_discrete(f)[0]
            families = even_cycle_witnesses(red, 5)
            assert len(families) == 5 and red.phi is not None
            hit = True
            break
        assert hit, "no non-admissible even-cycle fixture found"


def test_two_silt_specialization():
    with timed("multiplicity-one silting specialization", 30.0):
        count, result = two_silt_count_m_ge_1(brauer_path(3))
        assert count == 20 and not result.truncated
        a, _ = two_silt_count_m_ge_1(cycle_graph(3), max_len=6)
        b, _ = two_silt_count_m_ge_1(cycle_graph(3), max_len=8)
        assert a == b, "odd-cycle count must stabilize"
        a, _ = two_silt_count_m_ge_1(even_cycle(2), max_len=4)
        b, _ = two_silt_count_m_ge_1(even_cycle(2), max_len=8)
        assert a < b, "even-cycle count must grow"
        with pytest.raises(PreconditionFailed):
            two_silt_count_m_ge_1(triangle_nakayama())
        assert tilting_discrete(triangle_nakayama())[0]


def test_skew_group_quiver_comparison():
    with timed("skew group quiver against the skew presentation", 10.0):
        fixtures = [example1_preproj_a3()]
        rng = random.Random(307)
        while len(fixtures) < 13:
            f = random_fbg(rng, require_orbifold=True, max_edges=8)
            if not f.is_admissible()[0]:
                fixtures.append(f)
        for f in fixtures:
            q = skew_group_quiver(f)
            og = orbit_graph(f)
            skew, _ = build_skew_quiver(og.graph, og.degree)
            assert quiver_isomorphic(q, skew) is not None
