from fractions import Fraction
from itertools import product

import pytest

from latmin.errors import (
    InvalidWeights,
    MixedProfile,
    NotAmplePolytope,
    NotAVertex,
    SingularVertex,
)
from latmin.gon import lattice_width
from latmin.generate import SplitMix64, instance_stream
from latmin.polytope import convex_hull
from latmin.toric import (
    EpsBracket,
    EpsExact,
    EpsProfile,
    MomentPolytope,
    ProductOfP1,
    ProjectiveSpace,
    eps_at_invariant_point,
    eps_bracket_general,
    exact_eps_family,
    toric_volume,
    verify_m2m,
    vertex_cone,
)

F = Fraction


def box_mp(*sides):
    d = len(sides)
    corners = [tuple(s if bit else 0 for s, bit in zip(sides, bits))
               for bits in product((0, 1), repeat=d)]
    return MomentPolytope.from_points(corners, d)


def simplex_mp(d, w=1):
    pts = [tuple(0 for _ in range(d))]
    for i in range(d):
        pts.append(tuple(w if j == i else 0 for j in range(d)))
    return MomentPolytope.from_points(pts, d)


def random_mp(seed, index, dim, bound):
    rng = instance_stream(seed, index)
    while True:
        pts = [tuple(rng.int_in(-bound, bound) for _ in range(dim))
               for _ in range(dim + 4)]
        P = convex_hull(pts, dim)
        if P.is_full_dimensional:
            return MomentPolytope(P)


class TestVertexCone:
    def test_box_origin(self):
        cone = vertex_cone(box_mp(3, 2), (0, 0))
        assert cone.edge_generators == ((0, 1), (1, 0))
        assert cone.smooth

    def test_dilated_simplex_far_vertex(self):
        cone = vertex_cone(simplex_mp(2, 2), (2, 0))
        assert set(cone.edge_generators) == {(-1, 0), (-1, 1)}
        assert cone.smooth

    def test_simplex_origin(self):
        cone = vertex_cone(simplex_mp(2, 2), (0, 0))
        assert set(cone.edge_generators) == {(1, 0), (0, 1)}
        assert cone.smooth

    def test_not_a_vertex(self):
        with pytest.raises(NotAVertex):
            vertex_cone(box_mp(3, 2), (1, 1))

    def test_singular_vertex_flagged(self):
        mp = MomentPolytope.from_points([(0, 0), (1, 0), (1, 2)], 2)
        cone = vertex_cone(mp, (0, 0))
        assert set(cone.edge_generators) == {(1, 0), (1, 2)}
        assert not cone.smooth

    def test_nonsimple_vertex_rejected(self):
        pyramid = MomentPolytope.from_points(
            [(0, 0, 0), (2, 0, 0), (0, 2, 0), (2, 2, 0), (1, 1, 1)], 3)
        with pytest.raises(NotAmplePolytope):
            vertex_cone(pyramid, (1, 1, 1))


class TestEpsAtInvariantPoint:
    def test_box_32(self):
        prof = eps_at_invariant_point(box_mp(3, 2), (0, 0))
        assert [e.value for e in prof.entries] == [5, 2]
        assert all(e.provenance == "invariant_point" for e in prof.entries)

    def test_simplex_constant(self):
        for d, w in [(2, 1), (2, 3), (3, 2)]:
            prof = eps_at_invariant_point(simplex_mp(d, w), tuple([0] * d))
            assert [e.value for e in prof.entries] == [w] * d

    def test_box_321(self):
        prof = eps_at_invariant_point(box_mp(3, 2, 1), (0, 0, 0))
        assert [e.value for e in prof.entries] == [6, 3, 1]

    def test_singular_vertex_raises(self):
        mp = MomentPolytope.from_points([(0, 0), (1, 0), (1, 2)], 2)
        with pytest.raises(SingularVertex):
            eps_at_invariant_point(mp, (0, 0))

    def test_nonsimple_polytope_raises(self):
        pyramid = MomentPolytope.from_points(
            [(0, 0, 0), (2, 0, 0), (0, 2, 0), (2, 2, 0), (1, 1, 1)], 3)
        with pytest.raises(NotAmplePolytope):
            eps_at_invariant_point(pyramid, (0, 0, 0))

    def test_every_vertex_agrees_with_family(self):
        prof, mp = exact_eps_family(ProductOfP1((3, 2)))
        expect = [e.value for e in prof.entries]
        for v in mp.vertices_int:
            got = [e.value for e in eps_at_invariant_point(mp, v).entries]
            assert got == expect
        prof, mp = exact_eps_family(ProjectiveSpace(3, 2))
        expect = [e.value for e in prof.entries]
        for v in mp.vertices_int:
            assert [e.value for e in eps_at_invariant_point(mp, v).entries] == expect

    def test_scaling(self):
        base = eps_at_invariant_point(box_mp(3, 2), (0, 0))
        scaled = eps_at_invariant_point(box_mp(9, 6), (0, 0))
        assert [e.value for e in scaled.entries] == \
            [3 * e.value for e in base.entries]

    def test_unimodular_invariance(self):
        mp = box_mp(3, 2)
        base = [e.value for e in eps_at_invariant_point(mp, (0, 0)).entries]
        # apply (x, y) -> (x + y, y) and translate by (5, -1)
        moved = MomentPolytope.from_points(
            [(x + y + 5, y - 1) for x, y in mp.vertices_int], 2)
        got = [e.value for e in eps_at_invariant_point(moved, (5, -1)).entries]
        assert got == base

    def test_monotone_nonincreasing(self):
        for idx in range(6):
            mp = random_mp(101, idx, 2, 4)
            try:
                prof = eps_at_invariant_point(mp, mp.vertices_int[0])
            except (SingularVertex, NotAmplePolytope):
                continue
            vals = [e.value for e in prof.entries]
            assert all(a >= b for a, b in zip(vals, vals[1:]))


class TestEpsBracketGeneral:
    def test_unit_simplex(self):
        prof = eps_bracket_general(simplex_mp(2))
        assert [(e.lo, e.hi) for e in prof.entries] == [(1, 2), (1, 1)]

    def test_box_brackets(self):
        w = (4, 2)
        prof = eps_bracket_general(box_mp(*w))
        true_eps = [sum(w[i:]) for i in range(2)]
        for i, e in enumerate(prof.entries):
            assert e.lo == w[i]
            assert e.hi == (2 - i) * w[i]
            assert e.lo <= true_eps[i] <= e.hi

    def test_unit_cube(self):
        d = 3
        prof = eps_bracket_general(box_mp(1, 1, 1))
        for i, e in enumerate(prof.entries, start=1):
            assert e.lo == 1
            assert e.hi == d - i + 1

    def test_family_soundness(self):
        for fam in [ProjectiveSpace(2, 3), ProjectiveSpace(3, 1),
                    ProductOfP1((3, 2, 1)), ProductOfP1((5, 5))]:
            exact, mp = exact_eps_family(fam)
            brackets = eps_bracket_general(mp)
            for e, b in zip(exact.entries, brackets.entries):
                assert b.lo <= e.value <= b.hi

    def test_ew_sandwich_seeded(self):
        for idx in range(8):
            mp = random_mp(57, idx, 2, 4)
            prof = eps_bracket_general(mp)
            w = lattice_width(mp.polytope).width
            last = prof.entries[-1]
            assert F(w, mp.d) <= last.lo <= last.hi <= w

    def test_bracket_scaling(self):
        mp = box_mp(3, 2)
        base = eps_bracket_general(mp)
        tripled = eps_bracket_general(box_mp(9, 6))
        for b, t in zip(base.entries, tripled.entries):
            assert (t.lo, t.hi) == (3 * b.lo, 3 * b.hi)


class TestFamilies:
    def test_projective_space(self):
        prof, mp = exact_eps_family(ProjectiveSpace(3, 2))
        assert [e.value for e in prof.entries] == [2, 2, 2]
        assert toric_volume(mp) == 8

    def test_product_examples(self):
        prof, _ = exact_eps_family(ProductOfP1((3, 2, 1)))
        assert [e.value for e in prof.entries] == [6, 3, 1]
        prof, _ = exact_eps_family(ProductOfP1((1, 1)))
        assert [e.value for e in prof.entries] == [2, 1]

    def test_weights_sorted_internally(self):
        a, _ = exact_eps_family(ProductOfP1((1, 3, 2)))
        b, _ = exact_eps_family(ProductOfP1((3, 2, 1)))
        assert a == b

    def test_invalid_weights(self):
        with pytest.raises(InvalidWeights):
            exact_eps_family(ProductOfP1((2, 0)))
        with pytest.raises(InvalidWeights):
            exact_eps_family(ProjectiveSpace(2, 0))


class TestToricVolume:
    def test_examples(self):
        assert toric_volume(simplex_mp(2)) == 1
        assert toric_volume(box_mp(3, 2, 1)) == 36
        for d, w in [(2, 3), (3, 2)]:
            assert toric_volume(simplex_mp(d, w)) == w ** d


class TestVerifyM2m:
    def test_product_321(self):
        prof, mp = exact_eps_family(ProductOfP1((3, 2, 1)))
        rep = verify_m2m(mp, prof)
        assert rep.holds
        assert rep.quantities["vol"] == "36"
        assert rep.quantities["ratio"] == "2"

    def test_p2_o2_lower_equality(self):
        prof, mp = exact_eps_family(ProjectiveSpace(2, 2))
        rep = verify_m2m(mp, prof)
        assert rep.holds
        assert rep.quantities["ratio"] == "1"

    def test_near_sharp_upper(self):
        prof, mp = exact_eps_family(ProductOfP1((100, 1)))
        rep = verify_m2m(mp, prof)
        assert rep.holds
        assert F(rep.quantities["ratio"]) == F(200, 101)

    def test_bracket_mode(self):
        mp = box_mp(4, 2)
        rep = verify_m2m(mp, eps_bracket_general(mp))
        assert rep.holds
        assert "prod_lo" in rep.quantities

    def test_mixed_profile_rejected(self):
        mp = simplex_mp(2)
        mixed = EpsProfile([EpsExact(F(1), "family_formula"), EpsBracket(F(1), F(2))])
        with pytest.raises(MixedProfile):
            verify_m2m(mp, mixed)

    def test_bracket_seeded(self):
        for idx in range(6):
            mp = random_mp(73, idx, 3, 3)
            rep = verify_m2m(mp, eps_bracket_general(mp))
            assert rep.holds


class TestEpsProfileValidation:
    def test_rejects_increasing_exact(self):
        with pytest.raises(ValueError):
            EpsProfile([EpsExact(F(1), "family_formula"), EpsExact(F(2), "family_formula")])

    def test_rejects_empty_bracket(self):
        with pytest.raises(ValueError):
            EpsProfile([EpsBracket(F(2), F(1))])

    def test_json(self):
        prof = EpsProfile([EpsExact(F(5), "invariant_point"), EpsBracket(F(1), F(2))])
        assert prof.to_json() == {"eps": [
            {"exact": "5", "provenance": "invariant_point"},
            {"lo": "1", "hi": "2"},
        ]}


def test_moment_polytope_rejects_fractional_vertices():
    with pytest.raises(ValueError):
        MomentPolytope(convex_hull([(0, 0), (1, 0), (0, F(1, 2))], 2))


def test_splitmix_reference_stream():
    # first outputs for seed 0 must match the published SplitMix64 sequence
    rng = SplitMix64(0)
    assert rng.next_u64() == 0xE220A8397B1DCDAF
    assert rng.next_u64() == 0x6E789E6AA1B965F4
