"""The catalogued recursions used as computational devices.

These evaluate zeta at a target point from engine values at the
recursion-linked points, and build the half-integer tables that tie
negative half-fractional arguments to positive ones.  Direct
Euler-Maclaurin evaluation is strictly better for production use; the
point here is cross-checking the ladders against it.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import IO

from .errors import SingularityError
from .identities import (
    FOUR_PI_SQ,
    TWO_PI,
    LadderIndex,
    alpha_coeff,
    residual,
    singular_distance,
    trivial_zero_distance,
    _signed_product,
)
from .verifier import DEFAULT_EXCLUSION_RADIUS, format_float
from .zeta import ZetaEngine, default_engine

#: half-integer tables stop here; beyond it the positive-axis factor is
#: 1 + 2^(-large) and the link carries no new content
TABLE_N_MAX = 20


def _engine(engine: ZetaEngine | None) -> ZetaEngine:
    return engine if engine is not None else default_engine()


def _guard_args(args: tuple[complex, ...], denominators: tuple[complex, ...]) -> None:
    for v in args:
        if abs(v - 1.0) <= 1e-6:
            raise SingularityError(f"zeta argument {v} hits the pole at 1")
    for v in denominators:
        if trivial_zero_distance(v) <= 1e-6:
            raise SingularityError(f"denominator argument {v} hits a trivial zero")


def _denom_value(engine: ZetaEngine, v: complex) -> complex:
    zv = engine.zeta_value(v)
    if abs(zv) < 1e-8:
        raise SingularityError(f"denominator zeta({v}) = {zv:.3e} too small")
    return zv


def zeta_via_eq30(s: complex, engine: ZetaEngine | None = None) -> complex:
    """zeta(s) = -s(s+1) zeta(1-s) zeta(s+2) / (4 pi^2 zeta(-1-s))."""
    s = complex(s)
    engine = _engine(engine)
    if singular_distance("EQ30", s) <= 1e-9:
        raise SingularityError(f"EQ30 is singular at s = {s}")
    _guard_args((s + 2.0, 1.0 - s, -1.0 - s), (-1.0 - s,))
    denom = _denom_value(engine, -1.0 - s)
    return (
        -s
        * (s + 1.0)
        * engine.zeta_value(1.0 - s)
        * engine.zeta_value(s + 2.0)
        / (FOUR_PI_SQ * denom)
    )


def zeta_ladder_eq300(
    s: complex, n: LadderIndex | int, engine: ZetaEngine | None = None
) -> complex:
    """Even-step ladder:

        zeta(s) = (-1)^(n+1) s(s+1)...(s+2n+1) zeta(1-s) zeta(s+2n+2)
                  / ((4 pi^2)^(n+1) zeta(-s-2n-1))

    with the rising product in log space past 8 factors.  At n = 0 this
    is the same code path as :func:`zeta_via_eq30` up to the shared
    prefactor arithmetic.
    """
    s = complex(s)
    idx = n if isinstance(n, LadderIndex) else LadderIndex(n=n)
    engine = _engine(engine)
    nn = idx.n
    if nn == 0:
        return zeta_via_eq30(s, engine)
    for j in range(2 * nn + 2):
        if abs(s + j) <= 1e-9:
            raise SingularityError(f"ladder factor s+{j} vanishes at s = {s}")
    args = (1.0 - s, s + 2.0 * nn + 2.0, -s - 2.0 * nn - 1.0)
    _guard_args(args, (-s - 2.0 * nn - 1.0,))
    sign = -1.0 if nn % 2 == 0 else 1.0
    prefactor = sign * _signed_product(
        (s + j for j in range(2 * nn + 2)), -(nn + 1) * math.log(FOUR_PI_SQ)
    )
    denom = _denom_value(engine, -s - 2.0 * nn - 1.0)
    return (
        prefactor
        * engine.zeta_value(1.0 - s)
        * engine.zeta_value(s + 2.0 * nn + 2.0)
        / denom
    )


def ratio_eq315(
    s: complex, m: LadderIndex | int, engine: ZetaEngine | None = None
) -> complex:
    """Backward ladder for the ratio zeta(s+2)/zeta(-1-s):

        (-1)^(m+1) (4 pi^2)^(m+1) zeta(s-2m)
        / (zeta(2m+1-s) s(s+1) (s-1)(s-2)...(s-2m))

    with the empty bracket at m = 0.
    """
    s = complex(s)
    idx = m if isinstance(m, LadderIndex) else LadderIndex(m=m)
    engine = _engine(engine)
    mm = idx.m
    bracket = [s, s + 1.0] + [s - j for j in range(1, 2 * mm + 1)]
    for f in bracket:
        if abs(f) <= 1e-9:
            raise SingularityError(f"bracket factor vanishes at s = {s}")
    args = (s - 2.0 * mm, 2.0 * mm + 1.0 - s)
    _guard_args(args, (2.0 * mm + 1.0 - s,))
    sign = -1.0 if mm % 2 == 0 else 1.0
    inv_prefactor = _signed_product(bracket, -(mm + 1) * math.log(FOUR_PI_SQ))
    denom = _denom_value(engine, 2.0 * mm + 1.0 - s)
    return sign * engine.zeta_value(s - 2.0 * mm) / (denom * inv_prefactor)


def ratio_eq320(
    s: complex, n: LadderIndex | int, engine: ZetaEngine | None = None
) -> complex:
    """Single-step ladder for the ratio zeta(s)/zeta(1-s):

        s(s+1)...(s+n) zeta(n+1+s) alpha_n(s) / ((2 pi)^(n+1) zeta(-s-n))
    """
    s = complex(s)
    idx = n if isinstance(n, LadderIndex) else LadderIndex(n=n)
    engine = _engine(engine)
    nn = idx.n
    for j in range(nn + 1):
        if abs(s + j) <= 1e-9:
            raise SingularityError(f"ladder factor s+{j} vanishes at s = {s}")
    args = (nn + 1.0 + s, -s - nn)
    _guard_args(args, (-s - float(nn),))
    coeff = alpha_coeff(nn, s)  # PoleError surfaces for even n at tan poles
    prefactor = _signed_product(
        (s + j for j in range(nn + 1)), -(nn + 1) * math.log(TWO_PI)
    )
    denom = _denom_value(engine, -s - float(nn))
    return prefactor * coeff * engine.zeta_value(nn + 1.0 + s) / denom


@dataclass(frozen=True)
class HalfIntegerRow:
    """One table row: the ladder value against direct evaluation."""

    index: int
    target_arg: float
    ladder_value: complex
    direct_value: complex
    rel_diff: float


def half_integer_table(
    kind: str, n_max: int, engine: ZetaEngine | None = None
) -> list[HalfIntegerRow]:
    """Link tables between negative and positive half-integer arguments.

    ``eq310`` rows: zeta(-3/2 - 2n) from zeta(5/2 + 2n), step two.
    ``eq335`` rows: zeta(-1/2 - n) from zeta(3/2 + n), twice as dense.
    """
    if kind not in ("eq310", "eq335"):
        raise ValueError(f"unknown table kind {kind!r}")
    if n_max < 0:
        raise ValueError("n_max must be >= 0")
    if n_max > TABLE_N_MAX:
        raise OverflowError(f"n_max capped at {TABLE_N_MAX} to stay in range")
    engine = _engine(engine)

    rows = []
    for n in range(n_max + 1):
        if kind == "eq310":
            target = -1.5 - 2.0 * n
            sign = -1.0 if n % 2 == 0 else 1.0
            coeff = sign * _signed_product(
                (0.5 + j for j in range(2 * n + 2)),
                -(n + 1) * math.log(FOUR_PI_SQ),
            )
            ladder = coeff * engine.zeta_value(2.5 + 2.0 * n)
        else:
            target = -0.5 - float(n)
            coeff = alpha_coeff(n, 0.5) * _signed_product(
                (0.5 + j for j in range(n + 1)), -(n + 1) * math.log(TWO_PI)
            )
            ladder = coeff * engine.zeta_value(1.5 + float(n))
        direct = engine.zeta_value(target)
        rows.append(
            HalfIntegerRow(
                index=n,
                target_arg=target,
                ladder_value=ladder,
                direct_value=direct,
                rel_diff=abs(ladder - direct) / abs(direct),
            )
        )
    return rows


TABLE_CSV_COLUMNS = "kind,n,target_arg,ladder_re,ladder_im,direct_re,direct_im,rel_diff"


def export_table(kind: str, rows: list[HalfIntegerRow], destination: IO[str]) -> None:
    destination.write(TABLE_CSV_COLUMNS + "\n")
    for row in rows:
        destination.write(
            ",".join(
                (
                    kind,
                    str(row.index),
                    format_float(row.target_arg),
                    format_float(row.ladder_value.real),
                    format_float(row.ladder_value.imag),
                    format_float(row.direct_value.real),
                    format_float(row.direct_value.imag),
                    format_float(row.rel_diff),
                )
            )
            + "\n"
        )
