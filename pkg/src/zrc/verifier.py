"""Grid scanning and verdict assignment.

A scan walks a complex-plane lattice, evaluates one identity's residual
at every (point, parameter) combination, skips singular configurations,
and classifies the result:

    HOLDS         max relative residual < hold_tol
    FAILS         median relative residual > fail_tol
    INCONCLUSIVE  anything else (including an all-skipped scan)

Exports are deterministic: floats are serialized with 17 significant
digits (which round-trips binary64 exactly), samples are emitted in
row-major (re, im, param) order, and repeated runs produce identical
bytes.
"""

from __future__ import annotations

import math
import statistics
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass, replace
from typing import IO, Iterable, Sequence

from .errors import ConfigError, SingularityError
from .identities import (
    Identity,
    LadderIndex,
    catalogue,
    get_identity,
    residual,
    singular_distance,
)
from .zeta import ZetaEngine, default_engine

DEFAULT_HOLD_TOL = 1e-8
DEFAULT_FAIL_TOL = 1e-3
DEFAULT_EXCLUSION_RADIUS = 0.25

#: lattice of the standard verdict run: Re in [-5.75, 6.25] step 0.5,
#: Im in [-10.25, 10.25] step 1.5, every point offset 0.25 off the
#: integer lattice so no zeta argument lands on a pole or trivial zero
STANDARD_GRID_FIELDS = dict(
    re_min=-6.0,
    re_max=6.25,
    re_step=0.5,
    im_min=-10.5,
    im_max=10.25,
    im_step=1.5,
    offset=0.25,
)
STANDARD_ALPHAS = (complex(0.7, 0.0), complex(1.3, 0.4), complex(0.001, -1.0))
STANDARD_INDICES = tuple(LadderIndex(k, k) for k in range(4))


@dataclass(frozen=True)
class GridSpec:
    """Rectangular lattice: points min + offset + k*step, up to max."""

    re_min: float
    re_max: float
    re_step: float
    im_min: float
    im_max: float
    im_step: float
    offset: float = 0.0

    def __post_init__(self) -> None:
        for name in ("re", "im"):
            lo = getattr(self, f"{name}_min")
            hi = getattr(self, f"{name}_max")
            step = getattr(self, f"{name}_step")
            if not (math.isfinite(lo) and math.isfinite(hi) and math.isfinite(step)):
                raise ConfigError("grid bounds and steps must be finite")
            if step <= 0:
                raise ConfigError(f"{name}_step must be > 0, got {step}")
            if hi < lo:
                raise ConfigError(f"{name}_max below {name}_min")
            if (hi - lo) / step > 1e4:
                raise ConfigError(f"more than 1e4 lattice points on the {name} axis")

    @staticmethod
    def _axis(lo: float, hi: float, step: float, offset: float) -> tuple[float, ...]:
        out = []
        k = 0
        while True:
            v = lo + offset + k * step
            if v > hi + 1e-12:
                break
            out.append(v)
            k += 1
        return tuple(out)

    def re_points(self) -> tuple[float, ...]:
        return self._axis(self.re_min, self.re_max, self.re_step, self.offset)

    def im_points(self) -> tuple[float, ...]:
        return self._axis(self.im_min, self.im_max, self.im_step, self.offset)

    def points(self) -> tuple[complex, ...]:
        """Lattice in row-major (re outer, im inner) order."""
        ims = self.im_points()
        return tuple(complex(r, i) for r in self.re_points() for i in ims)


def standard_grid() -> GridSpec:
    return GridSpec(**STANDARD_GRID_FIELDS)


@dataclass(frozen=True)
class SampleRecord:
    """One lattice cell of a scan; residual fields are None when skipped."""

    s: complex
    alpha: complex | None
    index: LadderIndex | None
    skipped: bool
    residual_abs: float | None
    residual_rel: float | None
    scale: float | None


@dataclass(frozen=True)
class ScanReport:
    identity: str
    grid: GridSpec
    alphas: tuple[complex, ...]
    indices: tuple[LadderIndex, ...]
    samples_evaluated: int
    samples_skipped: int
    max_rel: float | None
    median_rel: float | None
    mean_rel: float | None
    verdict: str
    samples: tuple[SampleRecord, ...]


def _param_combos(
    ident: Identity,
    alphas: Sequence[complex],
    indices: Sequence[LadderIndex],
) -> tuple[tuple[complex | None, LadderIndex | None], ...]:
    if ident.param_kind == "alpha":
        if not alphas:
            raise ConfigError(f"{ident.id} needs at least one alpha")
        return tuple((complex(a), None) for a in alphas)
    if ident.param_kind == "index":
        if not indices:
            raise ConfigError(f"{ident.id} needs at least one ladder index")
        return tuple((None, idx) for idx in indices)
    return ((None, None),)


def _evaluate_cell(
    ident: Identity,
    s: complex,
    alpha: complex | None,
    idx: LadderIndex | None,
    exclusion_radius: float,
    engine: ZetaEngine,
) -> SampleRecord:
    if singular_distance(ident, s, alpha, idx) <= exclusion_radius:
        return SampleRecord(s, alpha, idx, True, None, None, None)
    try:
        r = residual(ident, s, alpha, idx, engine)
    except SingularityError:
        return SampleRecord(s, alpha, idx, True, None, None, None)
    return SampleRecord(s, alpha, idx, False, r.residual_abs, r.residual_rel, r.scale)


def scan(
    identity: str | Identity,
    grid: GridSpec,
    alphas: Sequence[complex] = STANDARD_ALPHAS,
    indices: Sequence[LadderIndex] = STANDARD_INDICES,
    hold_tol: float = DEFAULT_HOLD_TOL,
    fail_tol: float = DEFAULT_FAIL_TOL,
    exclusion_radius: float = DEFAULT_EXCLUSION_RADIUS,
    engine: ZetaEngine | None = None,
    workers: int = 1,
) -> ScanReport:
    """Residual statistics for one identity over a lattice.

    Cells may be evaluated concurrently (``workers`` > 1); the sample
    order and therefore the statistics and exports are imposed at
    aggregation, so concurrency never changes the report.
    """
    ident = get_identity(identity)
    if not 0.0 < hold_tol < fail_tol:
        raise ConfigError("tolerances must satisfy 0 < hold_tol < fail_tol")
    if exclusion_radius < 0.0:
        raise ConfigError("exclusion radius must be >= 0")
    points = grid.points()
    if not points:
        raise ConfigError("grid is empty")
    engine = engine if engine is not None else default_engine()
    combos = _param_combos(ident, alphas, indices)

    cells = [(s, a, idx) for s in points for a, idx in combos]
    if workers > 1:
        with ThreadPoolExecutor(max_workers=workers) as pool:
            samples = list(
                pool.map(
                    lambda c: _evaluate_cell(ident, c[0], c[1], c[2], exclusion_radius, engine),
                    cells,
                )
            )
    else:
        samples = [
            _evaluate_cell(ident, s, a, idx, exclusion_radius, engine)
            for s, a, idx in cells
        ]

    rels = [rec.residual_rel for rec in samples if not rec.skipped]
    evaluated = len(rels)
    skipped = len(samples) - evaluated
    if evaluated:
        max_rel = max(rels)
        median_rel = statistics.median(rels)
        mean_rel = math.fsum(rels) / evaluated
        if max_rel < hold_tol:
            verdict = "HOLDS"
        elif median_rel > fail_tol:
            verdict = "FAILS"
        else:
            verdict = "INCONCLUSIVE"
    else:
        max_rel = median_rel = mean_rel = None
        verdict = "INCONCLUSIVE"

    return ScanReport(
        identity=ident.id,
        grid=grid,
        alphas=tuple(complex(a) for a in alphas),
        indices=tuple(indices),
        samples_evaluated=evaluated,
        samples_skipped=skipped,
        max_rel=max_rel,
        median_rel=median_rel,
        mean_rel=mean_rel,
        verdict=verdict,
        samples=tuple(samples),
    )


@dataclass(frozen=True)
class VerdictRow:
    identity: str
    expected: str
    verdict: str
    max_rel: float | None
    median_rel: float | None
    samples_evaluated: int
    samples_skipped: int

    @property
    def matches(self) -> bool:
        return self.verdict == self.expected


def verdict_all(
    engine: ZetaEngine | None = None,
    hold_tol: float = DEFAULT_HOLD_TOL,
    fail_tol: float = DEFAULT_FAIL_TOL,
    exclusion_radius: float = DEFAULT_EXCLUSION_RADIUS,
    identities: Sequence[str] | None = None,
    workers: int = 1,
) -> list[VerdictRow]:
    """Scan every catalogued identity over the standard grid and
    parameter sets; one row per identity, catalogue order."""
    engine = engine if engine is not None else default_engine()
    grid = standard_grid()
    selected = (
        catalogue()
        if identities is None
        else [get_identity(i) for i in identities]
    )
    rows = []
    for ident in selected:
        report = scan(
            ident,
            grid,
            STANDARD_ALPHAS,
            STANDARD_INDICES,
            hold_tol,
            fail_tol,
            exclusion_radius,
            engine,
            workers=workers,
        )
        rows.append(
            VerdictRow(
                identity=ident.id,
                expected=ident.expected_verdict,
                verdict=report.verdict,
                max_rel=report.max_rel,
                median_rel=report.median_rel,
                samples_evaluated=report.samples_evaluated,
                samples_skipped=report.samples_skipped,
            )
        )
    return rows


# --------------------------------------------------------------------------
# deterministic serialization (17 significant digits round-trips binary64)
# --------------------------------------------------------------------------

def format_float(x: float) -> str:
    return format(float(x), ".17g")


def json_17g(obj) -> str:
    """Minimal JSON emitter with fixed float formatting and key order."""
    if obj is None:
        return "null"
    if obj is True:
        return "true"
    if obj is False:
        return "false"
    if isinstance(obj, str):
        return '"' + obj.replace("\\", "\\\\").replace('"', '\\"') + '"'
    if isinstance(obj, int):
        return str(obj)
    if isinstance(obj, float):
        return format_float(obj)
    if isinstance(obj, dict):
        inner = ",".join(f"{json_17g(str(k))}:{json_17g(v)}" for k, v in obj.items())
        return "{" + inner + "}"
    if isinstance(obj, (list, tuple)):
        return "[" + ",".join(json_17g(v) for v in obj) + "]"
    raise TypeError(f"cannot serialize {type(obj)!r}")


def _cplx(z: complex | None):
    return None if z is None else [z.real, z.imag]


def report_to_dict(report: ScanReport) -> dict:
    g = report.grid
    return {
        "identity": report.identity,
        "grid": {
            "re_min": g.re_min,
            "re_max": g.re_max,
            "re_step": g.re_step,
            "im_min": g.im_min,
            "im_max": g.im_max,
            "im_step": g.im_step,
            "offset": g.offset,
        },
        "alphas": [_cplx(a) for a in report.alphas],
        "indices": [[idx.n, idx.m] for idx in report.indices],
        "samples_evaluated": report.samples_evaluated,
        "samples_skipped": report.samples_skipped,
        "max_rel": report.max_rel,
        "median_rel": report.median_rel,
        "mean_rel": report.mean_rel,
        "verdict": report.verdict,
        "samples": [
            {
                "s": _cplx(rec.s),
                "alpha": _cplx(rec.alpha),
                "index": None if rec.index is None else [rec.index.n, rec.index.m],
                "skipped": rec.skipped,
                "residual_abs": rec.residual_abs,
                "residual_rel": rec.residual_rel,
                "scale": rec.scale,
            }
            for rec in report.samples
        ],
    }


def report_from_dict(d: dict) -> ScanReport:
    grid = GridSpec(**d["grid"])

    def cplx(v):
        return None if v is None else complex(v[0], v[1])

    samples = tuple(
        SampleRecord(
            s=cplx(rec["s"]),
            alpha=cplx(rec["alpha"]),
            index=None if rec["index"] is None else LadderIndex(*rec["index"]),
            skipped=rec["skipped"],
            residual_abs=rec["residual_abs"],
            residual_rel=rec["residual_rel"],
            scale=rec["scale"],
        )
        for rec in d["samples"]
    )
    return ScanReport(
        identity=d["identity"],
        grid=grid,
        alphas=tuple(cplx(a) for a in d["alphas"]),
        indices=tuple(LadderIndex(*i) for i in d["indices"]),
        samples_evaluated=d["samples_evaluated"],
        samples_skipped=d["samples_skipped"],
        max_rel=d["max_rel"],
        median_rel=d["median_rel"],
        mean_rel=d["mean_rel"],
        verdict=d["verdict"],
        samples=samples,
    )


CSV_COLUMNS = (
    "identity,re_s,im_s,re_alpha,im_alpha,index_n,index_m,"
    "residual_abs,residual_rel,scale,skipped"
)


def export(report: ScanReport, format: str, destination: IO[str]) -> None:
    """Write a scan either as per-sample CSV detail or as a JSON report.

    CSV rows follow the sample order of the report (row-major by
    re, im, param); skipped rows carry empty residual fields.
    """
    if format == "csv":
        destination.write(CSV_COLUMNS + "\n")
        for rec in report.samples:
            fields = [
                report.identity,
                format_float(rec.s.real),
                format_float(rec.s.imag),
                "" if rec.alpha is None else format_float(rec.alpha.real),
                "" if rec.alpha is None else format_float(rec.alpha.imag),
                "" if rec.index is None else str(rec.index.n),
                "" if rec.index is None else str(rec.index.m),
                "" if rec.residual_abs is None else format_float(rec.residual_abs),
                "" if rec.residual_rel is None else format_float(rec.residual_rel),
                "" if rec.scale is None else format_float(rec.scale),
                "true" if rec.skipped else "false",
            ]
            destination.write(",".join(fields) + "\n")
    elif format == "json":
        destination.write(json_17g(report_to_dict(report)) + "\n")
    else:
        raise ConfigError(f"unknown export format {format!r}")
