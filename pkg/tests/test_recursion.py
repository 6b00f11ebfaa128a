"""Recursion ladders as evaluators and the half-integer link tables."""

import io
import math

import pytest

from zrc.errors import SingularityError
from zrc.identities import LadderIndex
from zrc.recursion import (
    TABLE_CSV_COLUMNS,
    export_table,
    half_integer_table,
    ratio_eq315,
    ratio_eq320,
    zeta_ladder_eq300,
    zeta_via_eq30,
)

PI = math.pi
FOUR_PI_SQ = 4.0 * PI * PI


class TestEq30:
    def test_reproduces_reflection_constant(self, engine):
        got = zeta_via_eq30(-0.5, engine) / engine.zeta_value(1.5)
        assert abs(got - (-1.0 / (4.0 * PI))) < 1e-10

    def test_agrees_with_engine(self, engine):
        s = 0.3 + 2.0j
        want = engine.zeta_value(s)
        assert abs(zeta_via_eq30(s, engine) - want) < 1e-9 * abs(want)

    def test_denominator_zero_raises(self, engine):
        with pytest.raises(SingularityError):
            zeta_via_eq30(3.0, engine)  # zeta(-4) in the denominator


class TestLadder300:
    def test_n0_is_same_code_path(self, engine):
        s = 0.4 + 1.0j
        assert zeta_ladder_eq300(s, 0, engine) == zeta_via_eq30(s, engine)

    @pytest.mark.parametrize("n", [1, 2, 3, 4])
    def test_matches_direct(self, engine, n):
        s = 0.4
        want = engine.zeta_value(s)
        got = zeta_ladder_eq300(s, n, engine)
        assert abs(got - want) < 1e-9 * abs(want)

    def test_log_space_rungs(self, engine):
        # past eight prefactor terms the product runs in log space
        s = 0.35 + 0.7j
        want = engine.zeta_value(s)
        got = zeta_ladder_eq300(s, 5, engine)
        assert abs(got - want) < 1e-8 * abs(want)

    def test_half_point_collapses_to_link(self, engine):
        got = zeta_ladder_eq300(0.5, 3, engine)
        want = engine.zeta_value(0.5)
        assert abs(got - want) < 1e-9 * abs(want)

    def test_index_consistency_one_rung_expansion(self, engine):
        # one ladder step equals the base recursion applied to its own
        # zeta(s+2) argument
        s = 0.4 + 1.0j
        manual = (
            -s
            * (s + 1.0)
            * engine.zeta_value(1.0 - s)
            * zeta_via_eq30(s + 2.0, engine)
            / (FOUR_PI_SQ * engine.zeta_value(-1.0 - s))
        )
        got = zeta_ladder_eq300(s, 1, engine)
        assert abs(got - manual) < 1e-9 * abs(manual)

    def test_vanishing_prefactor_raises(self, engine):
        with pytest.raises(SingularityError):
            zeta_ladder_eq300(-3.0, 2, engine)

    def test_grid_agreement_invariant(self, engine):
        for n in range(5):
            for s in (0.35 + 1.7j, -0.45 + 3.2j, 1.15 - 2.6j):
                want = engine.zeta_value(s)
                got = zeta_ladder_eq300(s, n, engine)
                assert abs(got - want) < 1e-8 * abs(want), (s, n)


class TestRatio315:
    def lhs(self, engine, s):
        return engine.zeta_value(s + 2.0) / engine.zeta_value(-1.0 - s)

    @pytest.mark.parametrize("m", [0, 1, 2, 3])
    def test_matches_engine_ratio(self, engine, m):
        s = 0.3 + 0.7j
        want = self.lhs(engine, s)
        assert abs(ratio_eq315(s, m, engine) - want) < 1e-9 * abs(want)

    def test_m0_is_base_recursion_rearranged(self, engine):
        s = 0.3
        want = -FOUR_PI_SQ * engine.zeta_value(s) / (
            engine.zeta_value(1.0 - s) * s * (s + 1.0)
        )
        assert abs(ratio_eq315(s, 0, engine) - want) < 1e-12 * abs(want)

    def test_m1_expanded_form(self, engine):
        # re-derived two-fold collapse:
        # (4 pi^2)^2 zeta(s-2) / (zeta(3-s) s(s+1)(s-1)(s-2))
        s = 0.3 + 0.7j
        hand = (
            FOUR_PI_SQ**2
            * engine.zeta_value(s - 2.0)
            / (engine.zeta_value(3.0 - s) * s * (s + 1.0) * (s - 1.0) * (s - 2.0))
        )
        assert abs(ratio_eq315(s, 1, engine) - hand) < 1e-12 * abs(hand)

    @pytest.mark.parametrize("m", [1, 2, 3])
    def test_reproduces_half_link_at_special_point(self, engine, m):
        # at s = -3/2 both zeta arguments coincide, the ratio is 1
        got = ratio_eq315(-1.5, m, engine)
        assert abs(got - 1.0) < 1e-9

    def test_bracket_zero_raises(self, engine):
        with pytest.raises(SingularityError):
            ratio_eq315(1.0, 1, engine)  # bracket factor s-1


class TestRatio320:
    @pytest.mark.parametrize("n", [0, 1, 2, 3, 4])
    def test_matches_engine_ratio(self, engine, n):
        s = 0.3 + 0.7j
        want = engine.zeta_value(s) / engine.zeta_value(1.0 - s)
        assert abs(ratio_eq320(s, n, engine) - want) < 1e-9 * abs(want)

    def test_half_point_feeds_dense_link(self, engine):
        # at s = 1/2 the left side is 1, so the n = 2 rung encodes
        # zeta(-5/2) = (1/2)(3/2)(5/2) zeta(7/2) / (2 pi)^3
        got = ratio_eq320(0.5, 2, engine)
        assert abs(got - 1.0) < 1e-9
        direct = engine.zeta_value(-2.5)
        link = 0.5 * 1.5 * 2.5 * engine.zeta_value(3.5) / (2.0 * PI) ** 3
        assert abs(direct - link) < 1e-9 * abs(direct)


class TestHalfIntegerTables:
    def test_eq310_rows(self, engine):
        rows = half_integer_table("eq310", 6, engine)
        assert [r.index for r in rows] == list(range(7))
        for r in rows:
            assert r.target_arg == -1.5 - 2.0 * r.index
            assert r.rel_diff < 1e-9

    def test_eq310_first_rows_closed_form(self, engine):
        rows = half_integer_table("eq310", 1, engine)
        want0 = -(0.5 * 1.5) * engine.zeta_value(2.5) / FOUR_PI_SQ
        want1 = (0.5 * 1.5 * 2.5 * 3.5) * engine.zeta_value(4.5) / FOUR_PI_SQ**2
        assert abs(rows[0].ladder_value - want0) < 1e-15
        assert abs(rows[1].ladder_value - want1) < 1e-15

    def test_eq335_rows_and_signs(self, engine):
        rows = half_integer_table("eq335", 12, engine)
        for r in rows:
            assert r.target_arg == -0.5 - r.index
            assert r.rel_diff < 1e-9
        signs = [r.direct_value.real > 0 for r in rows[:4]]
        assert signs == [False, False, True, True]  # -, -, +, +

    def test_eq335_n2_closed_form(self, engine):
        rows = half_integer_table("eq335", 2, engine)
        want = 0.5 * 1.5 * 2.5 * engine.zeta_value(3.5) / (2.0 * PI) ** 3
        assert abs(rows[2].ladder_value - want) < 1e-15

    def test_cross_density(self, engine):
        # the dense table at odd indices covers the sparse table's targets
        sparse = half_integer_table("eq310", 5, engine)
        dense = half_integer_table("eq335", 11, engine)
        for k, row in enumerate(sparse):
            partner = dense[2 * k + 1]
            assert partner.target_arg == row.target_arg
            assert abs(partner.ladder_value - row.ladder_value) < 1e-9 * abs(
                row.ladder_value
            )

    def test_guards(self, engine):
        with pytest.raises(OverflowError):
            half_integer_table("eq310", 21, engine)
        with pytest.raises(ValueError):
            half_integer_table("eq999", 3, engine)

    def test_csv_export(self, engine):
        rows = half_integer_table("eq310", 2, engine)
        buf = io.StringIO()
        export_table("eq310", rows, buf)
        lines = buf.getvalue().strip().split("\n")
        assert lines[0] == TABLE_CSV_COLUMNS
        assert len(lines) == 4
        assert all(len(line.split(",")) == 8 for line in lines)


class TestLadderIndexGuard:
    def test_bounds(self):
        with pytest.raises(Exception):
            LadderIndex(65, 0)
        with pytest.raises(Exception):
            LadderIndex(0, -1)
