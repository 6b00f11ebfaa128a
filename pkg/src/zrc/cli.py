"""Command-line front end.

Subcommands: eval, check, scan, verdict, table, list.  Exit codes: 0 on
success, 2 on usage errors, 1 when a verdict run finds an identity whose
verdict differs from its expected one (or a fixture comparison fails),
which makes ``zrc verdict --all`` usable as a CI gate.

Data output is byte-deterministic: no timestamps unless ``--stamp`` is
given, floats with 17 significant digits.
"""

from __future__ import annotations

import argparse
import datetime
import json
import math
import os
import sys
from dataclasses import dataclass
from typing import IO, Sequence

from .errors import ZrcError
from .identities import (
    LadderIndex,
    catalogue_metadata,
    get_identity,
    residual,
)
from .recursion import export_table, half_integer_table
from .special_functions import cgamma
from .verifier import (
    DEFAULT_EXCLUSION_RADIUS,
    DEFAULT_FAIL_TOL,
    DEFAULT_HOLD_TOL,
    STANDARD_ALPHAS,
    GridSpec,
    export,
    format_float,
    json_17g,
    scan,
    standard_grid,
    verdict_all,
)
from .zeta import default_engine

#: fixture comparison tolerances (cross-validation against the
#: high-precision golden file)
FIXTURE_REL_TOL = 1e-12
FIXTURE_ZERO_ABS_TOL = 1e-9
FIXTURE_IM_CAP = 60.0

_DEFAULT_CHECK_POINT = complex(0.3, 1.2)
_DEFAULT_ALPHA = complex(0.7, 0.0)


@dataclass(frozen=True)
class CliConfig:
    command: str
    s: complex | None
    alpha: complex | None
    ns: tuple[int, ...]
    ms: tuple[int, ...]
    grid: GridSpec | None
    format: str
    out: str | None
    hold_tol: float
    fail_tol: float
    exclusion: float
    fixtures: str | None
    max_n: int
    stamp: bool


def parse_complex(text: str) -> complex:
    """Parse 're' or 're,im'."""
    parts = text.split(",")
    if len(parts) == 1:
        return complex(float(parts[0]), 0.0)
    if len(parts) == 2:
        return complex(float(parts[0]), float(parts[1]))
    raise argparse.ArgumentTypeError(f"cannot parse complex value {text!r}")


def parse_grid(text: str) -> tuple[float, ...]:
    parts = text.split(":")
    if len(parts) != 6:
        raise argparse.ArgumentTypeError(
            "grid must be RE0:RE1:STEP:IM0:IM1:STEP"
        )
    return tuple(float(p) for p in parts)


def _cplx_pair(z: complex | None):
    return None if z is None else [z.real, z.imag]


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="zrc",
        description="zeta functional-relation toolkit: evaluate, check, scan, certify",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def common(p: argparse.ArgumentParser, with_point=False, with_grid=False) -> None:
        if with_point:
            p.add_argument("--s", type=parse_complex, help="point, RE or RE,IM")
            p.add_argument("--alpha", type=parse_complex, action="append", default=None,
                           help="increment parameter, RE or RE,IM (repeatable)")
            p.add_argument("--n", type=int, action="append", default=None,
                           help="ladder index n (repeatable)")
            p.add_argument("--m", type=int, action="append", default=None,
                           help="ladder index m (repeatable)")
        if with_grid:
            p.add_argument("--grid", type=parse_grid, default=None,
                           help="RE0:RE1:STEP:IM0:IM1:STEP")
            p.add_argument("--offset", type=float, default=None,
                           help="lattice shift off the integers (default 0.25)")
            p.add_argument("--hold-tol", type=float, default=DEFAULT_HOLD_TOL)
            p.add_argument("--fail-tol", type=float, default=DEFAULT_FAIL_TOL)
            p.add_argument("--exclusion", type=float, default=DEFAULT_EXCLUSION_RADIUS)
        p.add_argument("--format", choices=("text", "json", "csv"), default="text")
        p.add_argument("--out", default=None, help="write output to a file")
        p.add_argument("--stamp", action="store_true",
                       help="include a generation timestamp in the output")

    p_eval = sub.add_parser("eval", help="evaluate zeta at a point with an error bound")
    common(p_eval, with_point=True)

    p_check = sub.add_parser("check", help="residual of one identity at one point")
    p_check.add_argument("identity")
    common(p_check, with_point=True)

    p_scan = sub.add_parser("scan", help="residual scan of one identity over a grid")
    p_scan.add_argument("identity")
    common(p_scan, with_point=True, with_grid=True)

    p_verdict = sub.add_parser("verdict", help="certify identities over the standard grid")
    p_verdict.add_argument("identities", nargs="*", help="identity ids (or use --all)")
    p_verdict.add_argument("--all", action="store_true", dest="all_ids")
    p_verdict.add_argument("--fixtures", default=None,
                           help="optional golden-fixture file for cross-validation")
    common(p_verdict, with_grid=True)

    p_table = sub.add_parser("table", help="half-integer link tables")
    p_table.add_argument("--kind", choices=("eq310", "eq335"), required=True)
    p_table.add_argument("--max-n", type=int, default=6, dest="max_n")
    common(p_table)

    p_list = sub.add_parser("list", help="catalogue metadata")
    common(p_list)

    return parser


def _open_out(path: str | None):
    if path is None:
        return sys.stdout, False
    return open(path, "w", encoding="utf-8"), True


def _emit(text: str, out: str | None) -> None:
    stream, close = _open_out(out)
    try:
        stream.write(text)
        if not text.endswith("\n"):
            stream.write("\n")
    finally:
        if close:
            stream.close()


def _stamp_dict(enabled: bool) -> dict:
    if not enabled:
        return {}
    return {"generated_at": datetime.datetime.now(datetime.timezone.utc).isoformat()}


def _grid_from_args(args) -> GridSpec:
    if args.grid is None:
        g = standard_grid()
        if args.offset is not None:
            g = GridSpec(
                re_min=g.re_min, re_max=g.re_max, re_step=g.re_step,
                im_min=g.im_min, im_max=g.im_max, im_step=g.im_step,
                offset=args.offset,
            )
        return g
    re0, re1, re_step, im0, im1, im_step = args.grid
    return GridSpec(
        re_min=re0, re_max=re1, re_step=re_step,
        im_min=im0, im_max=im1, im_step=im_step,
        offset=args.offset if args.offset is not None else 0.0,
    )


def _indices_from_args(args) -> tuple[LadderIndex, ...]:
    values = []
    if args.n:
        values.extend(args.n)
    if args.m:
        values.extend(v for v in args.m if v not in values)
    if not values:
        return tuple(LadderIndex(k, k) for k in range(4))
    return tuple(LadderIndex(v, v) for v in values)


# --------------------------------------------------------------------------
# commands
# --------------------------------------------------------------------------

def _cmd_eval(args) -> int:
    if args.s is None:
        raise ZrcError("eval needs --s")
    engine = default_engine()
    r = engine.zeta(args.s)
    payload = {
        **_stamp_dict(args.stamp),
        "s": _cplx_pair(args.s),
        "value": _cplx_pair(r.value),
        "abs_error_bound": r.abs_error_bound,
        "near_pole": r.near_pole,
        "near_trivial_zero": r.near_trivial_zero,
        "small_magnitude": r.small_magnitude,
        "method": r.method,
    }
    if args.format == "json":
        _emit(json_17g(payload), args.out)
    else:
        lines = []
        if args.stamp:
            lines.append(f"generated_at: {payload['generated_at']}")
        lines.append(
            f"zeta({format_float(args.s.real)}{args.s.imag:+.17g}i) = "
            f"{format_float(r.value.real)} {r.value.imag:+.17g}i"
        )
        lines.append(f"abs error bound: {format_float(r.abs_error_bound)}")
        lines.append(f"method: {r.method}")
        flags = [
            name
            for name, on in (
                ("near-pole", r.near_pole),
                ("near-trivial-zero", r.near_trivial_zero),
                ("small-magnitude", r.small_magnitude),
            )
            if on
        ]
        lines.append("flags: " + (", ".join(flags) if flags else "none"))
        _emit("\n".join(lines), args.out)
    return 0


def _point_params(args, ident):
    alpha = None
    idx = None
    if ident.param_kind == "alpha":
        alpha = args.alpha[0] if args.alpha else _DEFAULT_ALPHA
    if ident.param_kind == "index":
        values = args.n if ident.index_field == "n" else args.m
        v = values[0] if values else 1
        idx = LadderIndex(v, v)
    return alpha, idx


def _cmd_check(args) -> int:
    ident = get_identity(args.identity)
    s = args.s if args.s is not None else _DEFAULT_CHECK_POINT
    alpha, idx = _point_params(args, ident)
    sample = residual(ident, s, alpha, idx, default_engine())
    payload = {
        **_stamp_dict(args.stamp),
        "identity": ident.id,
        "expected_verdict": ident.expected_verdict,
        "s": _cplx_pair(sample.s),
        "alpha": _cplx_pair(sample.alpha),
        "index": None if sample.index is None else [sample.index.n, sample.index.m],
        "lhs": _cplx_pair(sample.lhs_value),
        "rhs": _cplx_pair(sample.rhs_value),
        "residual_abs": sample.residual_abs,
        "residual_rel": sample.residual_rel,
        "scale": sample.scale,
    }
    if args.format == "json":
        _emit(json_17g(payload), args.out)
    else:
        lines = []
        if args.stamp:
            lines.append(f"generated_at: {payload['generated_at']}")
        lines.append(f"{ident.id}: {ident.description}")
        lines.append(f"at s = {sample.s}" + (f", alpha = {sample.alpha}" if sample.alpha is not None else "") + (f", n = {sample.index.n}, m = {sample.index.m}" if sample.index is not None else ""))
        lines.append(f"lhs = {format_float(sample.lhs_value.real)} {sample.lhs_value.imag:+.17g}i")
        lines.append(f"rhs = {format_float(sample.rhs_value.real)} {sample.rhs_value.imag:+.17g}i")
        lines.append(f"residual: abs = {format_float(sample.residual_abs)}, rel = {format_float(sample.residual_rel)}, scale = {format_float(sample.scale)}")
        _emit("\n".join(lines), args.out)
    return 0


def _cmd_scan(args) -> int:
    ident = get_identity(args.identity)
    grid = _grid_from_args(args)
    alphas = tuple(args.alpha) if args.alpha else STANDARD_ALPHAS
    indices = _indices_from_args(args)
    report = scan(
        ident,
        grid,
        alphas,
        indices,
        hold_tol=args.hold_tol,
        fail_tol=args.fail_tol,
        exclusion_radius=args.exclusion,
        engine=default_engine(),
    )
    stream, close = _open_out(args.out)
    try:
        if args.format in ("csv", "json"):
            export(report, args.format, stream)
        else:
            if args.stamp:
                stream.write(f"generated_at: {_stamp_dict(True)['generated_at']}\n")
            stream.write(f"{report.identity}: verdict {report.verdict}\n")
            stream.write(
                f"evaluated {report.samples_evaluated}, skipped {report.samples_skipped}\n"
            )
            if report.max_rel is not None:
                stream.write(
                    "residual rel: max = {}, median = {}, mean = {}\n".format(
                        format_float(report.max_rel),
                        format_float(report.median_rel),
                        format_float(report.mean_rel),
                    )
                )
    finally:
        if close:
            stream.close()
    return 0


def _load_fixtures(path: str) -> dict | None:
    if not os.path.exists(path):
        return None
    with open(path, "r", encoding="utf-8") as fh:
        return json.load(fh)


_KNOWN_CONSTANTS = {
    "pi": math.pi,
    "sqrt_pi": math.sqrt(math.pi),
    "neg_inv_4pi": -1.0 / (4.0 * math.pi),
}


def compare_fixtures(path: str) -> dict | None:
    """Cross-validate the engine against a golden fixture file.

    Entries with |value| below 1e-6 (exact and near zeros) are checked
    absolutely at 1e-9; everything else relatively at 1e-12.  Returns
    None when the file is absent (graceful degradation).
    """
    data = _load_fixtures(path)
    if data is None:
        return None
    engine = default_engine()
    checked = 0
    skipped = 0
    worst_rel = 0.0
    worst_point = None
    failures = []
    for entry in data.get("entries", []):
        kind = entry["kind"]
        arg = complex(float(entry["arg"][0]), float(entry["arg"][1]))
        value = complex(float(entry["value"][0]), float(entry["value"][1]))
        if abs(arg.imag) > FIXTURE_IM_CAP:
            skipped += 1
            continue
        if kind == "zeta":
            got = engine.zeta_value(arg)
        elif kind == "gamma":
            got = cgamma(arg)
        elif kind == "constant":
            name = entry.get("note", "")
            if name not in _KNOWN_CONSTANTS:
                skipped += 1
                continue
            got = complex(_KNOWN_CONSTANTS[name])
        else:
            skipped += 1
            continue
        checked += 1
        if abs(value) < 1e-6:
            if abs(got) >= FIXTURE_ZERO_ABS_TOL:
                failures.append(
                    f"{kind}({arg}): |engine| = {abs(got):.3e} >= {FIXTURE_ZERO_ABS_TOL:g}"
                )
            continue
        rel = abs(got - value) / abs(value)
        if rel > worst_rel:
            worst_rel = rel
            worst_point = f"{kind}({format_float(arg.real)},{format_float(arg.imag)})"
        if rel > FIXTURE_REL_TOL:
            failures.append(f"{kind}({arg}): rel diff {rel:.3e} > {FIXTURE_REL_TOL:g}")
    return {
        "fixture_file": path,
        "checked": checked,
        "skipped": skipped,
        "max_rel": worst_rel,
        "worst_point": worst_point,
        "failures": failures,
        "passed": not failures,
    }


def _cmd_verdict(args) -> int:
    ids = None
    if not args.all_ids:
        if args.identities:
            ids = args.identities
        elif args.fixtures is None:
            raise ZrcError("verdict needs identity ids, --all, or --fixtures")

    rows = []
    if args.all_ids or ids is not None:
        rows = verdict_all(
            hold_tol=args.hold_tol,
            fail_tol=args.fail_tol,
            exclusion_radius=args.exclusion,
            identities=ids,
        )
    mismatches = [r for r in rows if not r.matches]

    fixture_result = None
    if args.fixtures is not None:
        fixture_result = compare_fixtures(args.fixtures)

    payload = {
        **_stamp_dict(args.stamp),
        "rows": [
            {
                "identity": r.identity,
                "expected": r.expected,
                "verdict": r.verdict,
                "max_rel": r.max_rel,
                "median_rel": r.median_rel,
                "samples_evaluated": r.samples_evaluated,
                "samples_skipped": r.samples_skipped,
                "matches": r.matches,
            }
            for r in rows
        ],
        "mismatches": len(mismatches),
        "fixtures": fixture_result,
    }

    if args.format == "json":
        _emit(json_17g(payload), args.out)
    elif args.format == "csv":
        lines = ["identity,expected,verdict,max_rel,median_rel,evaluated,skipped,matches"]
        for r in rows:
            lines.append(
                ",".join(
                    (
                        r.identity,
                        r.expected,
                        r.verdict,
                        "" if r.max_rel is None else format_float(r.max_rel),
                        "" if r.median_rel is None else format_float(r.median_rel),
                        str(r.samples_evaluated),
                        str(r.samples_skipped),
                        "true" if r.matches else "false",
                    )
                )
            )
        _emit("\n".join(lines), args.out)
    else:
        lines = []
        if args.stamp:
            lines.append(f"generated_at: {payload['generated_at']}")
        if rows:
            lines.append(f"{'identity':14s} {'expected':8s} {'verdict':12s} {'max_rel':>10s} {'median_rel':>10s} {'eval':>5s} {'skip':>5s}")
            for r in rows:
                mr = "-" if r.max_rel is None else f"{r.max_rel:.2e}"
                md = "-" if r.median_rel is None else f"{r.median_rel:.2e}"
                mark = "" if r.matches else "  MISMATCH"
                lines.append(
                    f"{r.identity:14s} {r.expected:8s} {r.verdict:12s} {mr:>10s} {md:>10s} "
                    f"{r.samples_evaluated:5d} {r.samples_skipped:5d}{mark}"
                )
            lines.append(
                f"{len(rows)} identities, {len(mismatches)} mismatching verdicts"
            )
        if args.fixtures is not None:
            if fixture_result is None:
                lines.append(f"fixtures: {args.fixtures} not found, comparison skipped")
            else:
                status = "PASS" if fixture_result["passed"] else "FAIL"
                lines.append(
                    f"fixtures: {status}, {fixture_result['checked']} entries checked, "
                    f"max rel diff {fixture_result['max_rel']:.3e}"
                )
                for f in fixture_result["failures"]:
                    lines.append(f"  {f}")
        _emit("\n".join(lines), args.out)

    if mismatches:
        return 1
    if fixture_result is not None and not fixture_result["passed"]:
        return 1
    return 0


def _cmd_table(args) -> int:
    rows = half_integer_table(args.kind, args.max_n, default_engine())
    stream, close = _open_out(args.out)
    try:
        if args.format == "csv":
            export_table(args.kind, rows, stream)
        elif args.format == "json":
            payload = {
                **_stamp_dict(args.stamp),
                "kind": args.kind,
                "rows": [
                    {
                        "n": r.index,
                        "target_arg": r.target_arg,
                        "ladder": _cplx_pair(r.ladder_value),
                        "direct": _cplx_pair(r.direct_value),
                        "rel_diff": r.rel_diff,
                    }
                    for r in rows
                ],
            }
            stream.write(json_17g(payload) + "\n")
        else:
            if args.stamp:
                stream.write(f"generated_at: {_stamp_dict(True)['generated_at']}\n")
            stream.write(f"{'n':>3s} {'arg':>7s} {'ladder':>24s} {'direct':>24s} {'rel_diff':>10s}\n")
            for r in rows:
                stream.write(
                    f"{r.index:3d} {r.target_arg:7.1f} {r.ladder_value.real:24.16e} "
                    f"{r.direct_value.real:24.16e} {r.rel_diff:10.2e}\n"
                )
    finally:
        if close:
            stream.close()
    return 0


def _cmd_list(args) -> int:
    meta = catalogue_metadata()
    if args.format == "json":
        _emit(json_17g({**_stamp_dict(args.stamp), "identities": meta}), args.out)
    else:
        lines = []
        if args.stamp:
            lines.append(f"generated_at: {_stamp_dict(True)['generated_at']}")
        for e in meta:
            lines.append(
                f"{e['id']:14s} eq{e['equation_number']:<4d} {e['param_kind']:6s} "
                f"{e['expected_verdict']:6s} terms={e['num_terms']:<3d} {e['description']}"
            )
        _emit("\n".join(lines), args.out)
    return 0


_COMMANDS = {
    "eval": _cmd_eval,
    "check": _cmd_check,
    "scan": _cmd_scan,
    "verdict": _cmd_verdict,
    "table": _cmd_table,
    "list": _cmd_list,
}


def run(argv: Sequence[str] | None = None) -> int:
    parser = _build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    try:
        return _COMMANDS[args.command](args)
    except ZrcError as exc:
        print(f"zrc: {exc}", file=sys.stderr)
        return 2
    except OSError as exc:
        print(f"zrc: {exc}", file=sys.stderr)
        return 1


def main() -> None:
    sys.exit(run())


if __name__ == "__main__":
    main()
