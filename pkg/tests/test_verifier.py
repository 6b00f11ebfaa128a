"""Grid scanning, verdicts, and deterministic exports."""

import io
import json

import pytest

from zrc.errors import ConfigError
from zrc.identities import LadderIndex, singular_distance
from zrc.verifier import (
    CSV_COLUMNS,
    GridSpec,
    export,
    report_from_dict,
    scan,
    standard_grid,
    verdict_all,
)

SMALL_GRID = GridSpec(-2.0, 2.0, 1.0, -3.0, 3.0, 1.5, offset=0.25)


class TestGridSpec:
    def test_standard_grid_lattice(self):
        g = standard_grid()
        res = g.re_points()
        ims = g.im_points()
        assert res[0] == -5.75 and res[-1] == 6.25 and len(res) == 25
        assert ims[0] == -10.25 and len(ims) == 14
        assert all(abs(i) > 0.2 for i in ims)  # offset keeps Im off zero

    def test_points_row_major(self):
        g = GridSpec(0.0, 1.0, 1.0, 0.0, 1.0, 1.0)
        assert g.points() == (0j, 1j, 1 + 0j, 1 + 1j)

    @pytest.mark.parametrize(
        "kwargs",
        [
            dict(re_min=0, re_max=1, re_step=0, im_min=0, im_max=1, im_step=1),
            dict(re_min=0, re_max=1, re_step=1, im_min=2, im_max=1, im_step=1),
            dict(re_min=0, re_max=1e6, re_step=0.5, im_min=0, im_max=1, im_step=1),
        ],
    )
    def test_rejects_malformed(self, kwargs):
        with pytest.raises(ConfigError):
            GridSpec(**kwargs)


class TestScan:
    def test_holds_verdict(self, engine):
        report = scan("EQ70", SMALL_GRID, engine=engine)
        assert report.verdict == "HOLDS"
        assert report.max_rel < 1e-8
        assert report.samples_evaluated + report.samples_skipped == len(
            SMALL_GRID.points()
        )

    def test_fails_verdict(self, engine):
        report = scan("EQ16_FALSE", SMALL_GRID, engine=engine)
        assert report.verdict == "FAILS"
        assert report.median_rel > 1e-3

    def test_all_skipped_is_inconclusive(self, engine):
        # every lattice point sits on a denominator trivial zero
        g = GridSpec(3.0, 5.0, 2.0, 0.0, 0.0, 1.0)
        assert g.points() == (3 + 0j, 5 + 0j)
        report = scan("EQ70", g, engine=engine)
        assert report.verdict == "INCONCLUSIVE"
        assert report.samples_evaluated == 0
        assert report.samples_skipped == 2

    def test_skip_soundness(self, engine):
        g = GridSpec(0.0, 4.0, 0.5, -0.5, 0.5, 0.5)  # touches integer lattice
        radius = 0.25
        report = scan("EQ30", g, exclusion_radius=radius, engine=engine)
        assert report.samples_skipped > 0
        for rec in report.samples:
            d = singular_distance("EQ30", rec.s)
            if not rec.skipped:
                assert d > radius
                assert rec.residual_rel is not None
            else:
                assert rec.residual_rel is None

    def test_parallel_serial_equivalence(self, engine):
        serial = scan("EQ110", SMALL_GRID, engine=engine, workers=1)
        parallel = scan("EQ110", SMALL_GRID, engine=engine, workers=4)
        assert serial == parallel

    def test_verdict_monotone_under_shrinking(self, engine):
        big = scan("EQ70", SMALL_GRID, engine=engine)
        sub = scan(
            "EQ70",
            GridSpec(-1.0, 1.0, 1.0, -1.5, 1.5, 1.5, offset=0.25),
            engine=engine,
        )
        assert big.verdict == "HOLDS"
        assert sub.verdict in ("HOLDS", "INCONCLUSIVE")
        assert sub.verdict != "FAILS"

    def test_bad_tolerances(self, engine):
        with pytest.raises(ConfigError):
            scan("EQ70", SMALL_GRID, hold_tol=1e-3, fail_tol=1e-8, engine=engine)
        with pytest.raises(ConfigError):
            scan("EQ120", SMALL_GRID, alphas=(), engine=engine)

    def test_alpha_and_index_combos_counted(self, engine):
        alphas = (0.7 + 0j, 1.3 + 0.4j)
        report = scan("EQ120", SMALL_GRID, alphas=alphas, engine=engine)
        total = len(SMALL_GRID.points()) * len(alphas)
        assert report.samples_evaluated + report.samples_skipped == total

        indices = tuple(LadderIndex(k, k) for k in range(3))
        report = scan("EQ300", SMALL_GRID, indices=indices, engine=engine)
        total = len(SMALL_GRID.points()) * len(indices)
        assert report.samples_evaluated + report.samples_skipped == total


class TestExport:
    def _report(self, engine):
        return scan("EQ610", GridSpec(0.3, 0.3, 1.0, 0.7, 0.7, 1.0), engine=engine)

    def test_csv_contract(self, engine):
        report = self._report(engine)
        buf = io.StringIO()
        export(report, "csv", buf)
        lines = buf.getvalue().strip().split("\n")
        assert lines[0] == CSV_COLUMNS
        assert len(lines) == 2  # header + one sample
        assert all(len(line.split(",")) == 11 for line in lines)

    def test_csv_skipped_rows_have_empty_residuals(self, engine):
        g = GridSpec(3.0, 3.0, 1.0, 0.0, 0.0, 1.0)
        report = scan("EQ70", g, engine=engine)
        buf = io.StringIO()
        export(report, "csv", buf)
        row = buf.getvalue().strip().split("\n")[1].split(",")
        assert row[-1] == "true"
        assert row[7] == row[8] == row[9] == ""

    def test_determinism(self, engine):
        bufs = []
        for _ in range(2):
            report = scan("EQ110", SMALL_GRID, engine=engine)
            buf = io.StringIO()
            export(report, "csv", buf)
            buf2 = io.StringIO()
            export(report, "json", buf2)
            bufs.append((buf.getvalue(), buf2.getvalue()))
        assert bufs[0] == bufs[1]

    def test_json_round_trip(self, engine):
        report = scan("EQ120", SMALL_GRID, engine=engine)
        buf = io.StringIO()
        export(report, "json", buf)
        restored = report_from_dict(json.loads(buf.getvalue()))
        assert restored == report

    def test_unknown_format(self, engine):
        with pytest.raises(ConfigError):
            export(self._report(engine), "xml", io.StringIO())


class TestVerdictAll:
    def test_subset_rows(self, engine):
        rows = verdict_all(engine=engine, identities=("EQ610", "EQ16_FALSE"))
        by_id = {r.identity: r for r in rows}
        assert by_id["EQ610"].verdict == "HOLDS"
        assert by_id["EQ16_FALSE"].verdict == "FAILS"
        assert all(r.matches for r in rows)
