"""Fixture generator: determinism, schema, closed forms, zero location."""

import json
import math

import mpmath as mp
import pytest

from zrc_oracle.generate import (
    default_points_spec,
    first_zero_ordinate,
    generate,
    render,
)


@pytest.fixture(scope="session")
def document():
    return generate(default_points_spec())


@pytest.fixture(scope="session")
def entries(document):
    return document["entries"]


def find(entries, kind, re_txt, im_txt="0.0"):
    for e in entries:
        if e["kind"] == kind and float(e["arg"][0]) == float(re_txt) and float(
            e["arg"][1]
        ) == float(im_txt):
            return e
    raise AssertionError(f"{kind}({re_txt},{im_txt}) missing")


class TestDeterminism:
    def test_regeneration_is_byte_identical(self, document):
        again = generate(default_points_spec())
        assert render(document) == render(again)

    def test_sorted_by_kind_and_argument(self, entries):
        keys = [
            (e["kind"], float(e["arg"][0]), float(e["arg"][1]), e["note"])
            for e in entries
        ]
        assert keys == sorted(keys)


class TestSchema:
    def test_version_and_kinds(self, document, entries):
        assert document["schema_version"] == 1
        assert {e["kind"] for e in entries} == {"zeta", "gamma", "constant"}

    def test_value_precision(self, entries):
        for e in entries:
            mantissa = e["value"][0].lstrip("-").replace(".", "").split("e")[0]
            digits = len(mantissa.lstrip("0"))
            if float(e["value"][0]) != 0.0:
                assert digits >= 30, e

    def test_required_reference_points_present(self, entries):
        for re_txt in ("2", "0", "3", "-2"):
            find(entries, "zeta", re_txt)
        for re_txt in ("-0.5", "-1.5", "-2.5", "-3.5", "-4.5", "1.5", "2.5", "3.5", "4.5"):
            find(entries, "zeta", re_txt)
        for corner in (("-5.75", "-10.25"), ("-5.75", "10.25"), ("6.25", "-10.25"), ("6.25", "10.25")):
            find(entries, "zeta", *corner)
        find(entries, "gamma", "0.5")

    def test_round_trip_text(self, document):
        blob = render(document)
        assert json.loads(blob) == document

    def test_rejects_low_precision(self):
        spec = dict(default_points_spec())
        spec["digits"] = 30
        with pytest.raises(ValueError):
            generate(spec)


class TestValues:
    def test_gamma_half_is_sqrt_pi(self, entries):
        e = find(entries, "gamma", "0.5")
        with mp.workdps(50):
            want = mp.nstr(mp.sqrt(mp.pi), 33)
        assert e["value"][0] == want

    def test_zeta_minus_two_is_exactly_zero(self, entries):
        e = find(entries, "zeta", "-2")
        assert float(e["value"][0]) == 0.0
        assert float(e["value"][1]) == 0.0

    def test_zeta_two_is_pi_squared_over_six(self, entries):
        e = find(entries, "zeta", "2")
        with mp.workdps(50):
            want = mp.nstr(mp.pi**2 / 6, 33)
        assert e["value"][0] == want

    def test_reflection_constant(self, entries):
        a = float(find(entries, "zeta", "-0.5")["value"][0])
        b = float(find(entries, "zeta", "1.5")["value"][0])
        assert abs(a / b - (-1.0 / (4.0 * math.pi))) < 1e-14


class TestZeroLocation:
    def test_ordinate_brackets_and_converges(self):
        with mp.workdps(60):
            t = first_zero_ordinate()
            assert mp.mpf("14.134725") < t < mp.mpf("14.134726")

    def test_zero_point_magnitude(self, entries):
        zero_entries = [
            e for e in entries if e["kind"] == "zeta" and float(e["arg"][0]) == 0.5
            and abs(float(e["arg"][1]) - 14.134725141734694) < 1e-6
        ]
        assert zero_entries, "first-zero fixture point missing"
        e = zero_entries[0]
        mag = math.hypot(float(e["value"][0]), float(e["value"][1]))
        assert mag < 1e-25
