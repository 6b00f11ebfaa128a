"""Machine-readable catalogue of the zeta functional equations and
recursion relations, with residual evaluation.

Every catalogued relation is decomposed into terms of the form

    sign * coefficient(s, alpha) * prod_k zeta(arg_k)^(+-1)

where each zeta argument is affine: const + (+-s) + (+-i*alpha).  The
coefficient is a pure scalar function (rationals, powers of pi and i,
polynomial factors, trig/gamma factors); it never evaluates zeta.  A
residual at a point is |sum(lhs) - sum(rhs)|, reported both absolutely
and relative to the summed term magnitudes.

Two catalogue entries are expected to fail by construction: EQ16_FALSE
(a published misprint kept verbatim) and EQ90_PRINTED, whose terms leave
the polynomial remainder 4a^4 - 4(2s+1)i a^3 - 8(s^2+s) a^2 when the
four-point ratio collapse (EQ610) is substituted in.  EQ90_CORRECTED
negates both 8 pi^2 a^2 terms, which cancels that remainder exactly.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from typing import Callable, Iterable, Optional

from .errors import ParamError, PoleError, SingularityError
from .special_functions import (
    PI,
    cgamma,
    cos_pi_half,
    cpow,
    sin_pi_half,
    tan_pi_half,
    tanh_pi_half,
)
from .zeta import ZetaEngine, default_engine

TWO_PI = 2.0 * PI
FOUR_PI_SQ = 4.0 * PI * PI
SIXTEEN_PI_4 = 16.0 * PI**4

#: zeta arguments this close to 1 (any position) or to a trivial zero
#: (denominator position) raise SingularityError
SINGULAR_RADIUS = 1e-6
#: denominators with |zeta| below this raise SingularityError
DENOM_ZETA_MIN = 1e-8

Coefficient = Callable[[complex, Optional[complex]], complex]


@dataclass(frozen=True)
class LadderIndex:
    """Iteration indices for the laddered relations (n for the even-step
    ladders, m for the backward one).  Capped so (4 pi^2)^(n+1)-type
    factors stay within log-space range."""

    n: int = 0
    m: int = 0

    def __post_init__(self) -> None:
        if not 0 <= self.n <= 64:
            raise ParamError(f"ladder index n must be in 0..64, got {self.n}")
        if not 0 <= self.m <= 64:
            raise ParamError(f"ladder index m must be in 0..64, got {self.m}")


@dataclass(frozen=True)
class AffineArg:
    """A zeta argument const + s_coeff*s + ia_coeff*(i*alpha)."""

    const: float
    s_coeff: int = 0
    ia_coeff: int = 0

    def __post_init__(self) -> None:
        if self.s_coeff not in (-1, 0, 1) or self.ia_coeff not in (-1, 0, 1):
            raise ParamError("affine coefficients must be in {-1, 0, +1}")

    def value(self, s: complex, ia: complex | None) -> complex:
        v = complex(self.const)
        if self.s_coeff:
            v += s if self.s_coeff > 0 else -s
        if self.ia_coeff:
            if ia is None:
                raise ParamError("this argument needs the alpha parameter")
            v += ia if self.ia_coeff > 0 else -ia
        return v

    def __str__(self) -> str:
        parts = []
        if self.const or not (self.s_coeff or self.ia_coeff):
            parts.append(f"{self.const:g}")
        if self.s_coeff:
            parts.append("+s" if self.s_coeff > 0 else "-s")
        if self.ia_coeff:
            parts.append("+ia" if self.ia_coeff > 0 else "-ia")
        return "".join(parts).lstrip("+")


@dataclass(frozen=True)
class TermSpec:
    """One additive term: sign * coefficient * prod zeta(arg)^exp."""

    sign: int
    coefficient: Coefficient
    zeta_factors: tuple[tuple[AffineArg, int], ...]

    def __post_init__(self) -> None:
        if self.sign not in (-1, 1):
            raise ParamError("term sign must be +-1")
        for _, exp in self.zeta_factors:
            if exp not in (-1, 1):
                raise ParamError("zeta factor exponents must be +-1")


TermBuilder = Callable[[Optional[LadderIndex]], tuple[TermSpec, ...]]
PoleDistance = Callable[[complex, Optional[complex], Optional[LadderIndex]], float]


@dataclass(frozen=True, eq=False)
class Identity:
    id: str
    equation_number: int
    description: str
    param_kind: str  # "none" | "alpha" | "index"
    expected_verdict: str  # "HOLDS" | "FAILS"
    lhs_builder: TermBuilder
    rhs_builder: TermBuilder
    coeff_pole_distance: PoleDistance
    index_field: str = "n"  # which LadderIndex component drives the terms
    _terms_cache: dict = field(default_factory=dict, repr=False)

    def _key(self, idx: LadderIndex | None) -> tuple[int, int] | None:
        return (idx.n, idx.m) if idx is not None else None

    def lhs_terms(self, idx: LadderIndex | None = None) -> tuple[TermSpec, ...]:
        key = ("lhs", self._key(idx))
        if key not in self._terms_cache:
            self._terms_cache[key] = self.lhs_builder(idx)
        return self._terms_cache[key]

    def rhs_terms(self, idx: LadderIndex | None = None) -> tuple[TermSpec, ...]:
        key = ("rhs", self._key(idx))
        if key not in self._terms_cache:
            self._terms_cache[key] = self.rhs_builder(idx)
        return self._terms_cache[key]

    def all_terms(self, idx: LadderIndex | None = None) -> tuple[TermSpec, ...]:
        return self.lhs_terms(idx) + self.rhs_terms(idx)

    def zeta_args(self, idx: LadderIndex | None = None) -> tuple[AffineArg, ...]:
        seen: dict[AffineArg, None] = {}
        for term in self.all_terms(idx):
            for arg, _ in term.zeta_factors:
                seen.setdefault(arg, None)
        return tuple(seen)

    def denominator_args(self, idx: LadderIndex | None = None) -> tuple[AffineArg, ...]:
        seen: dict[AffineArg, None] = {}
        for term in self.all_terms(idx):
            for arg, exp in term.zeta_factors:
                if exp < 0:
                    seen.setdefault(arg, None)
        return tuple(seen)

    @property
    def num_terms(self) -> int:
        base = LadderIndex(0, 0) if self.param_kind == "index" else None
        return len(self.lhs_terms(base)) + len(self.rhs_terms(base))


@dataclass(frozen=True)
class ResidualSample:
    """One residual measurement of an identity at a point."""

    identity: str
    s: complex
    alpha: complex | None
    index: LadderIndex | None
    lhs_value: complex
    rhs_value: complex
    residual_abs: float
    residual_rel: float
    scale: float


# --------------------------------------------------------------------------
# coefficient helpers
# --------------------------------------------------------------------------

def _const(value: complex) -> Coefficient:
    c = complex(value)
    return lambda s, a: c


_ONE = _const(1.0)

_I_POW = (1 + 0j, 1j, -1 + 0j, -1j)


def alpha_coeff(n: int, s: complex) -> complex:
    """Iteration coefficient of the single-step ladder:

        (1/2) [ i^n tan(pi s/2) ((-1)^(n+1) - 1)  +  i^(n+3) ((-1)^n - 1) ]

    which collapses to -i^n tan(pi s/2) for even n and to -i^(n+3) for
    odd n (so n = 0 and n = 1 reproduce EQ20 and EQ30 respectively)."""
    if n < 0:
        raise ParamError("ladder coefficient index must be non-negative")
    if n % 2 == 0:
        return -_I_POW[n % 4] * tan_pi_half(s)
    return -_I_POW[(n + 3) % 4]


def _signed_product(factors: Iterable[complex], log_scale: float) -> complex:
    """prod(factors) * exp(log_scale); log-space for long products.

    Keeps (4 pi^2)^(n+1)-type prefactors finite for ladder indices up to
    the LadderIndex cap.  Raises OverflowError past binary64 range.
    """
    fs = [complex(f) for f in factors]
    if len(fs) <= 8:
        prod = complex(1.0)
        for f in fs:
            prod *= f
        return prod * math.exp(log_scale)
    log_mag = log_scale
    phase = 0.0
    for f in fs:
        mag2 = f.real * f.real + f.imag * f.imag
        if mag2 == 0.0:
            return complex(0.0)
        log_mag += 0.5 * math.log(mag2)
        phase += math.atan2(f.imag, f.real)
    if log_mag > 709.0:
        raise OverflowError("ladder prefactor exceeds binary64 range")
    mag = math.exp(log_mag)
    return complex(mag * math.cos(phase), mag * math.sin(phase))


# --------------------------------------------------------------------------
# term-shape helpers
# --------------------------------------------------------------------------

def _arg(const: float, s_coeff: int = 0, ia_coeff: int = 0) -> AffineArg:
    return AffineArg(const, s_coeff, ia_coeff)


def _ratio_factors(shift: float, ia: int) -> tuple[tuple[AffineArg, int], ...]:
    """Factors of zeta(x) zeta(-1-x) / (zeta(1-x) zeta(x+2)) at
    x = s + shift + ia*(i*alpha) -- the four-point combination that
    collapses to -x(x+1)/(4 pi^2)."""
    return (
        (_arg(shift, 1, ia), 1),
        (_arg(-1.0 - shift, -1, -ia), 1),
        (_arg(1.0 - shift, -1, -ia), -1),
        (_arg(2.0 + shift, 1, ia), -1),
    )


def _ratio_term(shift: float, ia: int, sign: int, coeff: Coefficient) -> TermSpec:
    return TermSpec(sign, coeff, _ratio_factors(shift, ia))


def _static(*terms: TermSpec) -> TermBuilder:
    tup = tuple(terms)
    return lambda idx: tup


_EMPTY: TermBuilder = lambda idx: ()


# --------------------------------------------------------------------------
# coefficient-pole distances
# --------------------------------------------------------------------------

def _dist_int_ge(z: complex, k0: float) -> float:
    k = max(k0, math.floor(z.real + 0.5))
    return math.hypot(z.real - k, z.imag)


def _dist_int_le(z: complex, k0: float) -> float:
    k = min(k0, math.floor(z.real + 0.5))
    return math.hypot(z.real - k, z.imag)


def _dist_odd(z: complex, at_least: float | None = None) -> float:
    k = 2.0 * math.floor(0.5 * (z.real - 1.0) + 0.5) + 1.0
    if at_least is not None:
        k = max(k, at_least)
    return math.hypot(z.real - k, z.imag)


def _dist_even(z: complex, at_most: float | None = None) -> float:
    k = 2.0 * math.floor(0.5 * z.real + 0.5)
    if at_most is not None:
        k = min(k, at_most)
    return math.hypot(z.real - k, z.imag)


def _no_poles(s: complex, a: complex | None, idx: LadderIndex | None) -> float:
    return math.inf


def _tanh_pole_dist(a: complex) -> float:
    # tanh(pi a/2) poles at a = i * odd; rotate onto the odd lattice
    return _dist_odd(complex(-a.imag, a.real))


# --------------------------------------------------------------------------
# the catalogue
# --------------------------------------------------------------------------

def _chi_reflection(s: complex, a: complex | None) -> complex:
    return cpow(2.0, s) * cpow(PI, s - 1.0) * sin_pi_half(s) * cgamma(1.0 - s)


def _build_catalogue() -> tuple[Identity, ...]:
    entries: list[Identity] = []

    def add(
        id_: str,
        eq: int,
        description: str,
        param_kind: str,
        expected: str,
        lhs: TermBuilder,
        rhs: TermBuilder,
        pole_dist: PoleDistance = _no_poles,
        index_field: str = "n",
    ) -> None:
        entries.append(
            Identity(
                id=id_,
                equation_number=eq,
                description=description,
                param_kind=param_kind,
                expected_verdict=expected,
                lhs_builder=lhs,
                rhs_builder=rhs,
                coeff_pole_distance=pole_dist,
                index_field=index_field,
            )
        )

    # -- reflection family ---------------------------------------------------

    add(
        "EQ10",
        10,
        "reflection formula: zeta(s) = 2^s pi^(s-1) sin(pi s/2) Gamma(1-s) zeta(1-s)",
        "none",
        "HOLDS",
        _static(TermSpec(1, _ONE, ((_arg(0, 1), 1),))),
        _static(TermSpec(1, _chi_reflection, ((_arg(1, -1), 1),))),
        lambda s, a, idx: _dist_int_ge(s, 1.0),  # Gamma(1-s) poles
    )

    add(
        "EQ11",
        11,
        "inverse reflection: zeta(1-s) = 2 (2 pi)^(-s) cos(pi s/2) Gamma(s) zeta(s)",
        "none",
        "HOLDS",
        _static(TermSpec(1, _ONE, ((_arg(1, -1), 1),))),
        _static(
            TermSpec(
                1,
                lambda s, a: 2.0 * cpow(TWO_PI, -s) * cos_pi_half(s) * cgamma(s),
                ((_arg(0, 1), 1),),
            )
        ),
        lambda s, a, idx: _dist_int_le(s, 0.0),  # Gamma(s) poles
    )

    def _xi_weight_s(s: complex, a: complex | None) -> complex:
        # (1/2) s (s-1) pi^(-s/2) Gamma(s/2) with s/2 absorbed into Gamma
        return (s - 1.0) * cpow(PI, -0.5 * s) * cgamma(0.5 * s + 1.0)

    def _xi_weight_1ms(s: complex, a: complex | None) -> complex:
        return (-s) * cpow(PI, -0.5 * (1.0 - s)) * cgamma(0.5 * (1.0 - s) + 1.0)

    add(
        "EQ14",
        14,
        "symmetry of the completed combination: xi(s) = xi(1-s)",
        "none",
        "HOLDS",
        _static(TermSpec(1, _xi_weight_s, ((_arg(0, 1), 1),))),
        _static(TermSpec(1, _xi_weight_1ms, ((_arg(1, -1), 1),))),
        lambda s, a, idx: min(_dist_even(s, -2.0), _dist_odd(s, 3.0)),
    )

    add(
        "EQ16_FALSE",
        16,
        "published-false symmetry variant with Gamma(s/2 - 1) factors, kept verbatim",
        "none",
        "FAILS",
        _static(
            TermSpec(
                1,
                lambda s, a: cgamma(0.5 * s - 1.0) * cpow(PI, -0.5 * s),
                ((_arg(0, 1), 1),),
            )
        ),
        _static(
            TermSpec(
                1,
                lambda s, a: cgamma(0.5 * (1.0 - s) - 1.0) * cpow(PI, -0.5 * (1.0 - s)),
                ((_arg(1, -1), 1),),
            )
        ),
        lambda s, a, idx: min(_dist_even(s, 2.0), _dist_odd(s, -1.0)),
    )

    add(
        "EQ17",
        17,
        "completed-function symmetry: Gamma(s/2) zeta(s) = Gamma((1-s)/2) pi^(s-1/2) zeta(1-s)",
        "none",
        "HOLDS",
        _static(TermSpec(1, lambda s, a: cgamma(0.5 * s), ((_arg(0, 1), 1),))),
        _static(
            TermSpec(
                1,
                lambda s, a: cgamma(0.5 * (1.0 - s)) * cpow(PI, s - 0.5),
                ((_arg(1, -1), 1),),
            )
        ),
        lambda s, a, idx: min(_dist_even(s, 0.0), _dist_odd(s, 1.0)),
    )

    # -- real-increment recursions -------------------------------------------

    add(
        "EQ20",
        20,
        "tangent ratio form: zeta(s)/zeta(1-s) = -s tan(pi s/2) zeta(1+s) / (2 pi zeta(-s))",
        "none",
        "HOLDS",
        _static(TermSpec(1, _ONE, ((_arg(0, 1), 1), (_arg(1, -1), -1)))),
        _static(
            TermSpec(
                1,
                lambda s, a: -s * tan_pi_half(s) / TWO_PI,
                ((_arg(1, 1), 1), (_arg(0, -1), -1)),
            )
        ),
        lambda s, a, idx: _dist_odd(s),
    )

    add(
        "EQ30",
        30,
        "tangent-free recursion: zeta(s) = -s(s+1) zeta(1-s) zeta(s+2) / (4 pi^2 zeta(-1-s))",
        "none",
        "HOLDS",
        _static(TermSpec(1, _ONE, ((_arg(0, 1), 1),))),
        _static(
            TermSpec(
                1,
                lambda s, a: -s * (s + 1.0) / FOUR_PI_SQ,
                ((_arg(1, -1), 1), (_arg(2, 1), 1), (_arg(-1, -1), -1)),
            )
        ),
    )

    add(
        "EQ40",
        40,
        "2 s^2 from the four-point ratios at s and s-1",
        "none",
        "HOLDS",
        _static(TermSpec(1, lambda s, a: 2.0 * s * s, ())),
        _static(
            _ratio_term(0.0, 0, -1, _const(FOUR_PI_SQ)),
            _ratio_term(-1.0, 0, -1, _const(FOUR_PI_SQ)),
        ),
    )

    add(
        "EQ50",
        50,
        "2 s as the difference of the four-point ratios at s and s-1",
        "none",
        "HOLDS",
        _static(TermSpec(1, lambda s, a: 2.0 * s, ())),
        _static(
            _ratio_term(0.0, 0, -1, _const(FOUR_PI_SQ)),
            _ratio_term(-1.0, 0, 1, _const(FOUR_PI_SQ)),
        ),
    )

    add(
        "EQ60",
        60,
        "constant 1/(2 pi^2) from the ratios at s, s+1 and s-1",
        "none",
        "HOLDS",
        _static(TermSpec(1, _const(1.0 / (2.0 * PI * PI)), ())),
        _static(
            _ratio_term(0.0, 0, 1, _const(2.0)),
            _ratio_term(1.0, 0, -1, _ONE),
            _ratio_term(-1.0, 0, -1, _ONE),
        ),
    )

    add(
        "EQ70",
        70,
        "pure recursion: 0 = -3 R(s) + 3 R(s+1) + R(s-1) - R(s+2) with the four-point ratio R",
        "none",
        "HOLDS",
        _EMPTY,
        _static(
            _ratio_term(0.0, 0, -1, _const(3.0)),
            _ratio_term(1.0, 0, 1, _const(3.0)),
            _ratio_term(-1.0, 0, 1, _ONE),
            _ratio_term(2.0, 0, -1, _ONE),
        ),
    )

    # -- imaginary-increment relations ---------------------------------------

    # Cross-multiplied form of the bracketed-fraction relation, so every
    # term is a flat product (the printed fraction groups each bracket
    # with its adjacent zeta pair; cross-multiplying preserves it).
    add(
        "EQ80",
        80,
        "imaginary-increment relation with tanh(pi alpha/2) weights (cross-multiplied form)",
        "alpha",
        "HOLDS",
        _static(
            TermSpec(
                -1,
                lambda s, a: FOUR_PI_SQ * 1j * tanh_pi_half(a),
                (
                    (_arg(0, 1), 1),
                    (_arg(0, -1), 1),
                    (_arg(0, 1, 1), 1),
                    (_arg(0, -1, -1), 1),
                ),
            ),
            TermSpec(
                1,
                lambda s, a: TWO_PI * (s + 1j * a),
                (
                    (_arg(0, 1), 1),
                    (_arg(0, -1), 1),
                    (_arg(1, 1, 1), 1),
                    (_arg(1, -1, -1), 1),
                ),
            ),
        ),
        _static(
            TermSpec(
                1,
                lambda s, a: 1j * s * (s + 1j * a) * tanh_pi_half(a),
                (
                    (_arg(1, -1), 1),
                    (_arg(1, 1), 1),
                    (_arg(1, -1, -1), 1),
                    (_arg(1, 1, 1), 1),
                ),
            ),
            TermSpec(
                1,
                lambda s, a: TWO_PI * s,
                (
                    (_arg(1, -1), 1),
                    (_arg(1, 1), 1),
                    (_arg(0, 1, 1), 1),
                    (_arg(0, -1, -1), 1),
                ),
            ),
        ),
        lambda s, a, idx: _tanh_pole_dist(a) if a is not None else math.inf,
    )

    def _sq_ratio_factors(ia: int) -> tuple[tuple[AffineArg, int], ...]:
        base = _ratio_factors(0.0, ia)
        return base + base  # exponent-2 encoded by repeating each +-1 factor

    def _eq90_terms(corrected: bool) -> TermBuilder:
        flip = -1 if corrected else 1
        return _static(
            TermSpec(1, _const(SIXTEEN_PI_4), _sq_ratio_factors(1)),
            TermSpec(1, _const(SIXTEEN_PI_4), _sq_ratio_factors(0)),
            TermSpec(
                -1, _const(2.0 * SIXTEEN_PI_4), _ratio_factors(0.0, 1) + _ratio_factors(0.0, 0)
            ),
            TermSpec(
                flip,
                lambda s, a: 8.0 * PI * PI * a * a,
                _ratio_factors(0.0, 1),
            ),
            TermSpec(1, lambda s, a: a**4, ()),
            TermSpec(1, lambda s, a: a * a, ()),
            TermSpec(
                flip,
                lambda s, a: 8.0 * PI * PI * a * a,
                _ratio_factors(0.0, 0),
            ),
        )

    add(
        "EQ90_PRINTED",
        90,
        "quadratic-in-ratio increment relation exactly as printed (leaves a polynomial remainder)",
        "alpha",
        "FAILS",
        _EMPTY,
        _eq90_terms(corrected=False),
    )

    add(
        "EQ90_CORRECTED",
        90,
        "quadratic-in-ratio increment relation with both 8 pi^2 alpha^2 terms negated",
        "alpha",
        "HOLDS",
        _EMPTY,
        _eq90_terms(corrected=True),
    )

    add(
        "EQ100",
        100,
        "solves zeta(s+ia) from the undisplaced ratio with an affine alpha correction",
        "alpha",
        "HOLDS",
        _static(TermSpec(1, _ONE, ((_arg(0, 1, 1), 1),))),
        _static(
            TermSpec(
                1,
                _ONE,
                (
                    (_arg(1, -1, -1), 1),
                    (_arg(2, 1, 1), 1),
                    (_arg(0, 1), 1),
                    (_arg(-1, -1), 1),
                    (_arg(-1, -1, -1), -1),
                    (_arg(1, -1), -1),
                    (_arg(2, 1), -1),
                ),
            ),
            TermSpec(
                -1,
                lambda s, a: ((2.0 * s + 1.0) * 1j * a - a * a) / FOUR_PI_SQ,
                (
                    (_arg(1, -1, -1), 1),
                    (_arg(2, 1, 1), 1),
                    (_arg(-1, -1, -1), -1),
                ),
            ),
        ),
    )

    add(
        "EQ110",
        110,
        "alpha first difference of the four-point ratio equals -i alpha / (2 pi^2)",
        "alpha",
        "HOLDS",
        _static(TermSpec(1, lambda s, a: -1j * a / (2.0 * PI * PI), ())),
        _static(
            _ratio_term(1.0, 1, 1, _ONE),
            _ratio_term(1.0, 0, -1, _ONE),
            _ratio_term(0.0, 1, -1, _ONE),
            _ratio_term(0.0, 0, 1, _ONE),
        ),
    )

    add(
        "EQ120",
        120,
        "alpha second difference of the four-point ratio: coefficients +1,-1,-2,+2,+1,-1",
        "alpha",
        "HOLDS",
        _EMPTY,
        _static(
            _ratio_term(2.0, 1, 1, _ONE),
            _ratio_term(2.0, 0, -1, _ONE),
            _ratio_term(1.0, 1, -1, _const(2.0)),
            _ratio_term(1.0, 0, 1, _const(2.0)),
            _ratio_term(0.0, 1, 1, _ONE),
            _ratio_term(0.0, 0, -1, _ONE),
        ),
    )

    # -- iterated ladders ------------------------------------------------------

    def _eq300_rhs(idx: LadderIndex | None) -> tuple[TermSpec, ...]:
        n = idx.n if idx is not None else 0
        count = 2 * n + 2
        log_scale = -(n + 1) * math.log(FOUR_PI_SQ)
        sign = -1 if n % 2 == 0 else 1  # (-1)^(n+1)

        def coeff(s: complex, a: complex | None, _c=count, _ls=log_scale, _sg=sign) -> complex:
            return _sg * _signed_product((s + j for j in range(_c)), _ls)

        return (
            TermSpec(
                1,
                coeff,
                (
                    (_arg(1, -1), 1),
                    (_arg(2 * n + 2, 1), 1),
                    (_arg(-2 * n - 1, -1), -1),
                ),
            ),
        )

    add(
        "EQ300",
        300,
        "even-step ladder: zeta(s) from zeta(1-s), zeta(s+2n+2) and zeta(-s-2n-1)",
        "index",
        "HOLDS",
        lambda idx: (TermSpec(1, _ONE, ((_arg(0, 1), 1),)),),
        _eq300_rhs,
        lambda s, a, idx: min(
            abs(s + j) for j in range(2 * (idx.n if idx else 0) + 2)
        ),
        index_field="n",
    )

    def _eq310_rhs(idx: LadderIndex | None) -> tuple[TermSpec, ...]:
        n = idx.n if idx is not None else 0
        factors = [0.5 + j for j in range(2 * n + 2)]
        sign = -1.0 if n % 2 == 0 else 1.0
        c = sign * _signed_product(factors, -(n + 1) * math.log(FOUR_PI_SQ))
        return (TermSpec(1, _const(c), ((_arg(2.5 + 2 * n), 1),)),)

    add(
        "EQ310",
        310,
        "half-integer link at s=1/2: zeta(-3/2-2n) from zeta(5/2+2n)",
        "index",
        "HOLDS",
        lambda idx: (
            TermSpec(1, _ONE, ((_arg(-1.5 - 2 * (idx.n if idx else 0)), 1),)),
        ),
        _eq310_rhs,
        index_field="n",
    )

    def _eq315_rhs(idx: LadderIndex | None) -> tuple[TermSpec, ...]:
        m = idx.m if idx is not None else 0
        log_scale = (m + 1) * math.log(FOUR_PI_SQ)
        sign = -1 if m % 2 == 0 else 1  # (-1)^(m+1)

        def coeff(s: complex, a: complex | None, _m=m, _ls=log_scale, _sg=sign) -> complex:
            # bracket (s-1)(s-2)...(s-2m) is the empty product at m = 0
            denom = [s, s + 1.0] + [s - j for j in range(1, 2 * _m + 1)]
            inv = _signed_product(denom, -_ls)
            if inv == 0.0:
                raise SingularityError("ladder bracket factor vanished")
            return _sg / inv

        return (
            TermSpec(
                1,
                coeff,
                ((_arg(-2 * m, 1), 1), (_arg(2 * m + 1, -1), -1)),
            ),
        )

    add(
        "EQ315",
        315,
        "backward ladder for zeta(s+2)/zeta(-1-s) with bracket (s-1)...(s-2m)",
        "index",
        "HOLDS",
        lambda idx: (
            TermSpec(1, _ONE, ((_arg(2, 1), 1), (_arg(-1, -1), -1))),
        ),
        _eq315_rhs,
        lambda s, a, idx: min(
            abs(s - j) for j in range(-1, 2 * (idx.m if idx else 0) + 1)
        ),
        index_field="m",
    )

    def _eq320_rhs(idx: LadderIndex | None) -> tuple[TermSpec, ...]:
        n = idx.n if idx is not None else 0
        log_scale = -(n + 1) * math.log(TWO_PI)

        def coeff(s: complex, a: complex | None, _n=n, _ls=log_scale) -> complex:
            return alpha_coeff(_n, s) * _signed_product(
                (s + j for j in range(_n + 1)), _ls
            )

        return (
            TermSpec(
                1,
                coeff,
                ((_arg(n + 1, 1), 1), (_arg(-n, -1), -1)),
            ),
        )

    def _eq320_pole_dist(s: complex, a: complex | None, idx: LadderIndex | None) -> float:
        n = idx.n if idx else 0
        d = min(abs(s + j) for j in range(n + 1))
        if n % 2 == 0:
            d = min(d, _dist_odd(s))  # tan factor in alpha_coeff
        return d

    add(
        "EQ320",
        320,
        "single-step ladder for zeta(s)/zeta(1-s) with coefficient alpha_n(s)",
        "index",
        "HOLDS",
        lambda idx: (
            TermSpec(1, _ONE, ((_arg(0, 1), 1), (_arg(1, -1), -1))),
        ),
        _eq320_rhs,
        _eq320_pole_dist,
        index_field="n",
    )

    def _eq335_rhs(idx: LadderIndex | None) -> tuple[TermSpec, ...]:
        n = idx.n if idx is not None else 0
        factors = [0.5 + j for j in range(n + 1)]
        c = alpha_coeff(n, 0.5) * _signed_product(factors, -(n + 1) * math.log(TWO_PI))
        return (TermSpec(1, _const(c), ((_arg(1.5 + n), 1),)),)

    add(
        "EQ335",
        335,
        "dense half-integer link at s=1/2: zeta(-1/2-n) from zeta(3/2+n)",
        "index",
        "HOLDS",
        lambda idx: (
            TermSpec(1, _ONE, ((_arg(-0.5 - (idx.n if idx else 0)), 1),)),
        ),
        _eq335_rhs,
        index_field="n",
    )

    # -- spot values and summary forms -----------------------------------------

    add(
        "EQ380",
        380,
        "constant ratio zeta(-1/2)/zeta(3/2) = -1/(4 pi); the negative sign is the valid one",
        "none",
        "HOLDS",
        _static(TermSpec(1, _ONE, ((_arg(-0.5), 1), (_arg(1.5), -1)))),
        _static(TermSpec(1, _const(-1.0 / (4.0 * PI)), ())),
    )

    add(
        "EQ600",
        600,
        "ratio rearrangement: zeta(s)/zeta(1-s) = -s(s+1) zeta(s+2) / (4 pi^2 zeta(-1-s))",
        "none",
        "HOLDS",
        _static(TermSpec(1, _ONE, ((_arg(0, 1), 1), (_arg(1, -1), -1)))),
        _static(
            TermSpec(
                1,
                lambda s, a: -s * (s + 1.0) / FOUR_PI_SQ,
                ((_arg(2, 1), 1), (_arg(-1, -1), -1)),
            )
        ),
    )

    add(
        "EQ610",
        610,
        "four-point ratio collapse: zeta(s) zeta(-1-s) / (zeta(1-s) zeta(s+2)) = -s(s+1)/(4 pi^2)",
        "none",
        "HOLDS",
        _static(_ratio_term(0.0, 0, 1, _ONE)),
        _static(TermSpec(1, lambda s, a: -s * (s + 1.0) / FOUR_PI_SQ, ())),
    )

    entries.sort(key=lambda e: (e.equation_number, e.id != "EQ90_PRINTED"))
    return tuple(entries)


_CATALOGUE: tuple[Identity, ...] = _build_catalogue()
_BY_ID: dict[str, Identity] = {e.id: e for e in _CATALOGUE}


def catalogue() -> tuple[Identity, ...]:
    """All catalogued relations in equation-number order (25 entries)."""
    return _CATALOGUE


def identity_ids() -> tuple[str, ...]:
    return tuple(e.id for e in _CATALOGUE)


def get_identity(identity: str | Identity) -> Identity:
    if isinstance(identity, Identity):
        return identity
    try:
        return _BY_ID[identity]
    except KeyError:
        raise ParamError(f"unknown identity {identity!r}") from None


def catalogue_metadata() -> list[dict]:
    """JSON-ready registry: one record per catalogued relation."""
    return [
        {
            "id": e.id,
            "equation_number": e.equation_number,
            "description": e.description,
            "param_kind": e.param_kind,
            "expected_verdict": e.expected_verdict,
            "num_terms": e.num_terms,
        }
        for e in _CATALOGUE
    ]


# --------------------------------------------------------------------------
# residual evaluation
# --------------------------------------------------------------------------

def _check_arity(ident: Identity, alpha, idx) -> None:
    if ident.param_kind == "alpha":
        if alpha is None:
            raise ParamError(f"{ident.id} needs an alpha parameter")
    elif alpha is not None:
        raise ParamError(f"{ident.id} takes no alpha parameter")
    if ident.param_kind == "index":
        if idx is None:
            raise ParamError(f"{ident.id} needs a ladder index")
    elif idx is not None:
        raise ParamError(f"{ident.id} takes no ladder index")


def trivial_zero_distance(z: complex) -> float:
    """Distance from z to the nearest trivial zero -2, -4, -6, ..."""
    if z.real > -1.0:
        return abs(z - (-2.0))
    k = -2.0 * max(1.0, math.floor(-0.5 * z.real + 0.5))
    return math.hypot(z.real - k, z.imag)


def singular_distance(
    identity: str | Identity,
    s: complex,
    alpha: complex | None = None,
    idx: LadderIndex | None = None,
) -> float:
    """Distance from a sample point to the identity's singular set:
    zeta-pole hits for every argument, trivial-zero hits for denominator
    arguments, and poles/degeneracies of the coefficient functions.

    The dynamic condition |zeta(denominator)| < 1e-8 (nontrivial zeros)
    is not geometric; it surfaces as SingularityError during residual
    evaluation instead.
    """
    ident = get_identity(identity)
    _check_arity(ident, alpha, idx)
    s = complex(s)
    ia = 1j * complex(alpha) if alpha is not None else None

    dist = math.inf
    for arg in ident.zeta_args(idx):
        dist = min(dist, abs(arg.value(s, ia) - 1.0))
    for arg in ident.denominator_args(idx):
        dist = min(dist, trivial_zero_distance(arg.value(s, ia)))
    dist = min(dist, ident.coeff_pole_distance(s, complex(alpha) if alpha is not None else None, idx))
    return dist


def _term_value(
    term: TermSpec,
    s: complex,
    alpha: complex | None,
    ia: complex | None,
    engine: ZetaEngine,
) -> complex:
    try:
        value = complex(term.sign) * term.coefficient(s, alpha)
    except PoleError as exc:
        raise SingularityError(f"coefficient pole: {exc}") from exc
    for arg, exp in term.zeta_factors:
        zv = engine.zeta_value(arg.value(s, ia))
        if exp > 0:
            value *= zv
        else:
            if abs(zv) < DENOM_ZETA_MIN:
                raise SingularityError(
                    f"denominator zeta({arg}) = {zv:.3e} below {DENOM_ZETA_MIN:g}"
                )
            value /= zv
    return value


def residual(
    identity: str | Identity,
    s: complex,
    alpha: complex | None = None,
    idx: LadderIndex | None = None,
    engine: ZetaEngine | None = None,
) -> ResidualSample:
    """Evaluate LHS - RHS of a catalogued relation at one point.

    The relative residual is normalized by the sum of all term
    magnitudes, which stays stable when terms nearly cancel.
    """
    ident = get_identity(identity)
    _check_arity(ident, alpha, idx)
    engine = engine if engine is not None else default_engine()
    s = complex(s)
    alpha_c = complex(alpha) if alpha is not None else None
    ia = 1j * alpha_c if alpha_c is not None else None

    for arg in ident.zeta_args(idx):
        v = arg.value(s, ia)
        if abs(v - 1.0) <= SINGULAR_RADIUS:
            raise SingularityError(f"zeta argument {arg} hits the pole at 1")
    for arg in ident.denominator_args(idx):
        v = arg.value(s, ia)
        if trivial_zero_distance(v) <= SINGULAR_RADIUS:
            raise SingularityError(f"denominator argument {arg} hits a trivial zero")

    try:
        lhs_parts = [_term_value(t, s, alpha_c, ia, engine) for t in ident.lhs_terms(idx)]
        rhs_parts = [_term_value(t, s, alpha_c, ia, engine) for t in ident.rhs_terms(idx)]
    except PoleError as exc:
        raise SingularityError(str(exc)) from exc

    lhs = sum(lhs_parts, complex(0.0))
    rhs = sum(rhs_parts, complex(0.0))
    scale = math.fsum(abs(p) for p in lhs_parts) + math.fsum(abs(p) for p in rhs_parts)
    res_abs = abs(lhs - rhs)
    return ResidualSample(
        identity=ident.id,
        s=s,
        alpha=alpha_c,
        index=idx,
        lhs_value=lhs,
        rhs_value=rhs,
        residual_abs=res_abs,
        residual_rel=res_abs / (scale + 1e-300),
        scale=scale,
    )
