import math
from fractions import Fraction
from itertools import product

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from latmin.errors import NegativeParameter
from latmin.postulation import (
    box_count,
    box_volume,
    box_volume_closed_form,
    check_vol_bound,
    flag_h0,
)

F = Fraction

rats = st.fractions(min_value=0, max_value=6, max_denominator=4)


def box_count_by_grid(t):
    """Oracle: scan the integer grid up to max(t) and test all suffix sums."""
    t = [F(x) for x in t]
    d = len(t)
    top = math.floor(max(t))
    n = 0
    for x in product(range(top + 1), repeat=d):
        if all(sum(x[i:]) <= t[i] for i in range(d)):
            n += 1
    return n


class TestBoxCount:
    def test_example_21(self):
        assert box_count([2, 1]) == 5
        assert box_count_by_grid([2, 1]) == 5

    def test_interval(self):
        for t1 in [0, 3, F(7, 2)]:
            assert box_count([t1]) == math.floor(t1) + 1

    def test_floor_identity(self):
        assert box_count([F(5, 2), 1]) == box_count([2, 1])
        assert box_count([F(10, 3), F(7, 2), F(1, 2)]) == box_count([3, 3, 0])

    def test_negative_rejected(self):
        with pytest.raises(NegativeParameter):
            box_count([2, -1])

    @given(st.lists(rats, min_size=1, max_size=3))
    @settings(max_examples=40, deadline=None)
    def test_against_grid_oracle(self, t):
        assert box_count(t) == box_count_by_grid(t)

    @given(st.lists(rats, min_size=2, max_size=3))
    @settings(max_examples=30, deadline=None)
    def test_suffix_recursion(self, t):
        total = 0
        for x1 in range(math.floor(t[0]) + 1):
            tail = [min(t[1], t[0] - x1)] + list(t[2:])
            if tail[0] < 0:
                continue
            total += box_count(tail)
        assert total == box_count(t)


class TestBoxVolume:
    def test_examples(self):
        assert box_volume([2, 1]) == F(3, 2)
        assert box_volume([F(7, 3)]) == F(7, 3)
        assert box_volume([3, 2, 1]) == F(8, 3)

    def test_closed_forms(self):
        assert box_volume_closed_form([2, 1]) == F(3, 2)
        assert box_volume_closed_form([3, 2, 1]) == F(8, 3)
        with pytest.raises(ValueError):
            box_volume_closed_form([1, 2])

    def test_degenerate(self):
        assert box_volume([3, 0]) == 0
        assert box_volume([0, 0, 0]) == 0

    def test_unsorted_input_allowed(self):
        # with t1 <= t2 the deeper cap is inactive: region is the t1-simplex
        assert box_volume([1, 2]) == F(1, 2)
        assert box_volume([1, 2]) == box_volume([1, 1])

    @given(st.lists(rats, min_size=1, max_size=3))
    @settings(max_examples=30, deadline=None)
    def test_closed_form_matches_triangulation(self, t):
        t = sorted(t, reverse=True)
        assert box_volume(t) == box_volume_closed_form(t)

    def test_d4_frozen_values(self):
        # equal parameters collapse to a simplex: vol = t^4/4!
        assert box_volume([2, 2, 2, 2]) == F(16, 24)
        # (10,2,2,2): integral of (10 - s) over the 2-simplex in 3 vars,
        # = 10 * 8/6 - 3 * 2^4/24 = 40/3 - 2 = 34/3
        assert box_volume([10, 2, 2, 2]) == F(34, 3)


class TestVolBound:
    def test_example(self):
        rep = check_vol_bound([2, 1])
        assert rep.holds
        assert rep.quantities == {"vol": "3/2", "bound": "2"}

    def test_degenerate_equality(self):
        rep = check_vol_bound([5, 0, 0])
        assert rep.holds
        assert rep.quantities["vol"] == rep.quantities["bound"] == "0"

    @given(st.lists(rats, min_size=1, max_size=4))
    @settings(max_examples=40, deadline=None)
    def test_random_tuples(self, t):
        assert check_vol_bound(t).holds


class TestFlagH0:
    def test_dimension_one(self):
        for p, q in [(0, 4), (2, 7), (5, 5)]:
            assert flag_h0(1, (p,), q) == q - p + 1
        assert flag_h0(1, (4,), 2) == 0

    def test_conics_with_flag(self):
        assert flag_h0(2, (1, 1), 2) == 3
        assert flag_h0(2, (0, 0), 2) == 6

    def test_full_space_binomial(self):
        for d, q in [(1, 5), (2, 4), (3, 3)]:
            assert flag_h0(d, tuple([0] * d), q) == math.comb(q + d, d)

    def test_monotonicity(self):
        for q in range(6):
            assert flag_h0(2, (1, 1), q) <= flag_h0(2, (1, 1), q + 1)
        for p1 in range(4):
            assert flag_h0(2, (p1 + 1, 0), 5) <= flag_h0(2, (p1, 0), 5)

    def test_telescoping(self):
        # the difference identity kicks in once q reaches the deepest
        # multiplicity; below it both differenced counts vanish
        for d in (2, 3):
            for p in [tuple(range(1, d + 1)), tuple([2] * d), (3,) + (0,) * (d - 1)]:
                for q in range(1, 9):
                    lhs = flag_h0(d, p, q) - flag_h0(d, p, q - 1)
                    if q >= p[-1]:
                        assert lhs == flag_h0(d - 1, p[:-1], q)
                    else:
                        assert lhs == 0
