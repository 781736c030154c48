"""Global function: route agreement, diagonal values, memo table hygiene."""

from __future__ import annotations

from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from crossweave.weave import WovenFunction

probe = st.fractions(min_value=Fraction(-6), max_value=Fraction(6), max_denominator=16)


@pytest.fixture(scope="module")
def woven():
    instance = WovenFunction()
    instance.build_to(47)
    return instance


class TestWorkedValues:
    def test_level_zero_column(self, woven):
        assert woven.value(Fraction(0), Fraction(0)) == 1
        assert woven.value(Fraction(0), Fraction(1, 2)) == Fraction(1, 2)

    def test_level_one_values(self, woven):
        assert woven.value(Fraction(1), Fraction(3, 4)) == Fraction(3, 8)
        assert woven.value(Fraction(1), Fraction(1, 2)) == 0
        assert woven.value(Fraction(1), Fraction(1)) == 1

    def test_row_route_agrees_on_worked_points(self, woven):
        assert woven.value_via_row(Fraction(0), Fraction(0)) == 1
        assert woven.value_via_row(Fraction(1, 2), Fraction(0)) == Fraction(1, 2)
        assert woven.value_via_row(Fraction(1), Fraction(1, 2)) == 0

    def test_first_parameter_tables(self, woven):
        assert woven.column_params[1] == (Fraction(0),)
        assert woven.row_params[1] == (Fraction(0),)
        assert woven.column_params[2] == (Fraction(1, 2), Fraction(0))
        assert woven.row_params[2] == (Fraction(1, 2), Fraction(0))

    def test_lipschitz_records(self, woven):
        assert woven.lipschitz_of_level(0) == 1
        assert woven.lipschitz_of_level(1) == 3
        assert all(woven.lipschitz_of_level(k) >= 1 for k in range(48))


class TestStructuralInvariants:
    def test_parameter_counts(self, woven):
        for k in range(20):
            assert len(woven.column_params[k]) == k
            assert len(woven.row_params[k]) == k

    def test_diagonal_is_always_one(self, woven):
        for n in range(48):
            x, y = woven.pairing.pairs[n]
            assert woven.value(x, y) == 1

    def test_parameters_stay_in_the_half_open_interval(self, woven):
        for k in range(48):
            for value in (*woven.column_params[k], *woven.row_params[k]):
                assert 0 <= value < 1

    def test_route_agreement_on_the_grid(self, woven):
        for m in range(24):
            x = woven.pairing.x_coordinate(m)
            for n in range(24):
                y = woven.pairing.y_coordinate(n)
                assert woven.value(x, y) == woven.value_via_row(x, y)

    @given(st.integers(min_value=0, max_value=47), probe)
    @settings(max_examples=80, deadline=None)
    def test_value_is_the_column_interpolant(self, woven, level, y):
        """The public route equals the level's own interpolant on its column."""
        x = woven.pairing.x_coordinate(level)
        assert woven.value(x, y) == woven.cross(level).value_at((x, y))

    @given(st.integers(min_value=0, max_value=47), probe)
    @settings(max_examples=80, deadline=None)
    def test_purity(self, woven, level, y):
        """Evaluating twice gives the identical exact value."""
        x = woven.pairing.x_coordinate(level)
        assert woven.value(x, y) == woven.value(x, y)


class TestLifecycle:
    def test_out_of_order_build_rejected(self):
        fresh = WovenFunction()
        with pytest.raises(RuntimeError):
            fresh.build_level(5)

    def test_unbuilt_level_queries_rejected(self):
        fresh = WovenFunction()
        with pytest.raises(RuntimeError):
            fresh.lipschitz_of_level(0)

    def test_freeze_blocks_growth_but_not_reads(self):
        frozen = WovenFunction()
        frozen.freeze(6)
        assert frozen.built_levels == 6
        assert frozen.value(Fraction(1), Fraction(3, 4)) == Fraction(3, 8)
        with pytest.raises(RuntimeError):
            frozen.build_level(6)
        with pytest.raises(RuntimeError):
            frozen.value(Fraction(17, 5), Fraction(0))

    def test_freeze_requires_a_level(self):
        with pytest.raises(ValueError):
            WovenFunction().freeze(0)

    def test_rebuild_reproduces_tables_exactly(self):
        one, two = WovenFunction(), WovenFunction()
        one.build_to(63)
        two.build_to(63)
        assert one.column_params == two.column_params
        assert one.row_params == two.row_params
        assert one.pairing.pairs == two.pairing.pairs

    def test_level_cap_refusal(self):
        fresh = WovenFunction()
        with pytest.raises(RuntimeError):
            fresh.value(Fraction(63, 64), Fraction(0), max_level=64)
