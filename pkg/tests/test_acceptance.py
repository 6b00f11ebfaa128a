"""Acceptance suite: every criterion at its stated tolerance, one
pass/fail line per criterion (run with ``pytest -s`` to see them all)."""

import math
import time

import pytest

from zrc.errors import SingularityError
from zrc.identities import residual
from zrc.recursion import half_integer_table, zeta_via_eq30
from zrc.verifier import standard_grid, verdict_all
from zrc.zeta import ZetaEngine

PI = math.pi

TRUE_IDS = {
    "EQ10", "EQ11", "EQ14", "EQ17", "EQ20", "EQ30", "EQ40", "EQ50", "EQ60",
    "EQ70", "EQ80", "EQ90_CORRECTED", "EQ100", "EQ110", "EQ120", "EQ300",
    "EQ310", "EQ315", "EQ320", "EQ335", "EQ380", "EQ600", "EQ610",
}
FALSE_IDS = {"EQ16_FALSE", "EQ90_PRINTED"}


def _report(num: int, description: str, ok: bool, detail: str = "") -> None:
    status = "PASS" if ok else "FAIL"
    line = f"[{status}] criterion {num}: {description}"
    if detail:
        line += f" ({detail})"
    print(line)


def _grid_points():
    return standard_grid().points()


def test_criterion_1_verdict_suite():
    t0 = time.perf_counter()
    rows = verdict_all(engine=ZetaEngine())  # cold cache: honest timing
    elapsed = time.perf_counter() - t0

    by_id = {r.identity: r for r in rows}
    ok_time = elapsed < 60.0
    ok_true = all(
        by_id[i].verdict == "HOLDS" and by_id[i].max_rel < 1e-8 for i in TRUE_IDS
    )
    ok_false = all(
        by_id[i].verdict == "FAILS" and by_id[i].median_rel > 1e-3 for i in FALSE_IDS
    )
    ok = ok_time and ok_true and ok_false and len(rows) == 25
    _report(
        1,
        "verdict suite: 23 HOLDS below 1e-8, 2 FAILS above 1e-3, under 60 s",
        ok,
        f"{elapsed:.1f}s, worst true max_rel "
        f"{max(by_id[i].max_rel for i in TRUE_IDS):.2e}",
    )
    assert ok_time, f"verdict run took {elapsed:.1f}s"
    assert ok_true and ok_false and len(rows) == 25


def test_criterion_2_identities_follow_from_reflection():
    # every left-half-plane value strictly from the reflection formula,
    # so residuals certify algebraic consequence, not coincidence
    engine = ZetaEngine(mode="reflect")
    points = [s for s in _grid_points() if 0.2 < abs(s) and abs(s - 1.0) > 0.5][:20]
    worst = 0.0
    checked = 0
    for s in points:
        for ident, kwargs in (
            ("EQ30", {}),
            ("EQ70", {}),
            ("EQ120", {"alpha": 0.7 + 0.0j}),
            ("EQ120", {"alpha": 1.3 + 0.4j}),
        ):
            try:
                r = residual(ident, s, engine=engine, **kwargs)
            except SingularityError:
                continue
            worst = max(worst, r.residual_rel)
            checked += 1
    ok = worst < 1e-8 and checked >= 40
    _report(
        2,
        "EQ30/EQ70/EQ120 hold with reflection-only evaluation",
        ok,
        f"{checked} residuals, worst {worst:.2e}",
    )
    assert ok


def test_criterion_3_alpha_degeneration(engine):
    # alpha -> -i turns the second-difference relation into the pure
    # recursion shifted one step
    count = 0
    worst = 0.0
    for s in _grid_points():
        if count >= 50:
            break
        try:
            r120 = residual("EQ120", s, alpha=-1j, engine=engine)
            r70 = residual("EQ70", s + 1.0, engine=engine)
        except SingularityError:
            continue
        worst = max(worst, abs(r120.residual_abs - r70.residual_abs))
        count += 1
    ok = count == 50 and worst < 1e-9
    _report(
        3,
        "alpha=-i degeneration matches the pure recursion at 50 points",
        ok,
        f"worst |delta| {worst:.2e}",
    )
    assert ok


def test_criterion_4_half_integer_tables(engine):
    rows310 = half_integer_table("eq310", 6, engine)
    rows335 = half_integer_table("eq335", 12, engine)
    worst = max(r.rel_diff for r in rows310 + rows335)
    signs = [r.direct_value.real < 0 for r in rows335[:4]]
    ok = worst < 1e-9 and signs == [True, True, False, False]
    _report(
        4,
        "half-integer ladders match direct evaluation, signs -,-,+,+",
        ok,
        f"worst rel_diff {worst:.2e}",
    )
    assert ok


def test_criterion_5_reflection_constant(engine):
    got = zeta_via_eq30(-0.5, engine) / engine.zeta_value(1.5)
    want = -1.0 / (4.0 * PI)
    rel = abs(got - want) / abs(want)
    ok = rel < 1e-10 and got.real < 0
    _report(
        5,
        "zeta(-1/2)/zeta(3/2) = -1/(4 pi), negative sign",
        ok,
        f"rel {rel:.2e}",
    )
    assert ok


def test_criterion_6_misprint_forensics(engine):
    # the printed quadratic relation misses by exactly
    # 4 a^4 - 4(2s+1) i a^3 - 8(s^2+s) a^2
    samples = []
    alphas = (0.7 + 0.0j, 1.3 + 0.4j, 0.9 - 0.3j, -0.6 + 0.8j)
    for i, s in enumerate(p for p in _grid_points() if abs(p) > 0.6):
        if len(samples) >= 20:
            break
        samples.append((s, alphas[i % len(alphas)]))
    worst = 0.0
    for s, a in samples:
        try:
            r = residual("EQ90_PRINTED", s, alpha=a, engine=engine)
        except SingularityError:
            continue
        remainder = 4.0 * a**4 - 4.0 * (2.0 * s + 1.0) * 1j * a**3 - 8.0 * (s * s + s) * a * a
        worst = max(worst, abs((r.lhs_value - r.rhs_value) + remainder) / abs(remainder))
    ok = worst < 1e-6 and len(samples) == 20
    _report(
        6,
        "misprinted relation residual equals the derived remainder polynomial",
        ok,
        f"20 samples, worst rel {worst:.2e}",
    )
    assert ok


def test_criterion_7_engine_invariants(engine):
    # conjugate symmetry
    conj_ok = True
    for s in (0.35 + 2.2j, 2.6 - 7.3j, -1.45 + 4.1j, -4.25 - 9.25j):
        a = engine.zeta_value(s.conjugate())
        b = engine.zeta_value(s).conjugate()
        conj_ok = conj_ok and abs(a - b) <= 1e-12 * abs(b)

    # reflection self-consistency within combined bounds
    from zrc.zeta import EmParameters, em_error_bound, zeta_em_raw

    p = EmParameters(24, 8)
    refl_ok = True
    for re in (-3.6, -1.3, 0.35):
        for im in (-4.3, 2.7):
            s = complex(re, im)
            r = engine.zeta(s)
            direct = zeta_em_raw(s, p)
            noise = 6e-16 * p.cutoff ** max(0.0, 1.0 - s.real)
            tol = r.abs_error_bound + em_error_bound(s, p) + noise + 1e-13 * abs(direct)
            refl_ok = refl_ok and abs(r.value - direct) <= tol

    zeros_ok = all(engine.zeta(complex(-2.0 * n, 0.0)).value == 0 for n in range(1, 21))

    xi_ok = True
    for s in (0.3 + 2.0j, -1.25 + 4.5j, 2.75 - 3.1j, 0.5 + 9.25j):
        a = engine.xi(s)
        b = engine.xi(1.0 - s)
        xi_ok = xi_ok and abs(a - b) <= 1e-10 * abs(a)

    ok = conj_ok and refl_ok and zeros_ok and xi_ok
    _report(
        7,
        "engine invariants: conjugacy, reflection consistency, exact "
        "trivial zeros, completed-function symmetry",
        ok,
        f"conj={conj_ok} refl={refl_ok} zeros={zeros_ok} xi={xi_ok}",
    )
    assert ok
