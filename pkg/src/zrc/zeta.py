"""Direct zeta evaluation anywhere in the complex plane.

Euler-Maclaurin summation carries the right half-plane; the left
half-plane reflects through

    zeta(s) = 2^s pi^(s-1) sin(pi s/2) Gamma(1-s) zeta(1-s)

whose sine factor is exactly zero at the negative even integers, so the
trivial zeros come out exact.  Every result carries an honest absolute
error bound (first omitted correction term, doubled, plus a rounding
floor).
"""

from __future__ import annotations

import cmath
import math
from dataclasses import dataclass

from . import _kernel
from ._kernel.tables import B_OVER_FACT, MAX_ORDER
from .errors import DomainError, PoleError, PrecisionError
from .special_functions import LN_2, LN_PI, clog_gamma, cpow, cgamma, sin_pi_half

#: zeta is refused within this radius of the pole at s = 1.
POLE_EXCLUSION = 1e-6
#: proximity band reported through EvalResult flags
NEAR_BAND = 1e-2
#: |value| below this sets the small-magnitude flag
SMALL_MAGNITUDE = 1e-6

EM_MAX_CUTOFF = 10**6
#: relative rounding floor folded into every reported bound
_NOISE_REL = 2e-14
#: strictly positive floor so bounds stay > 0 even for exact zeros
_BOUND_FLOOR = 1e-300
#: below this |s| the engine sums directly even though Re s < 1/2
#: (reflection would need zeta(1-s) next to the pole)
_DIRECT_DISK = 0.3


@dataclass(frozen=True)
class EmParameters:
    """Euler-Maclaurin truncation: ``cutoff`` direct terms (N) and
    ``order`` Bernoulli corrections (M)."""

    cutoff: int
    order: int

    def __post_init__(self) -> None:
        if self.cutoff < 2:
            raise ValueError(f"cutoff must be >= 2, got {self.cutoff}")
        if not 1 <= self.order <= MAX_ORDER:
            raise ValueError(f"order must be in 1..{MAX_ORDER}, got {self.order}")


@dataclass(frozen=True)
class EvalResult:
    """A zeta value with its certified absolute error bound."""

    value: complex
    abs_error_bound: float
    near_pole: bool
    near_trivial_zero: bool
    small_magnitude: bool
    method: str  # "direct_em" | "reflected"


def _check_em_domain(s: complex, order: int) -> None:
    if s.real <= -(2 * order - 1):
        raise DomainError(
            f"Euler-Maclaurin order {order} requires Re s > {-(2 * order - 1)}, got {s}"
        )
    if abs(s - 1.0) < 1e-12:
        raise DomainError("Euler-Maclaurin sum is undefined at the pole s = 1")


def zeta_em_raw(s: complex, p: EmParameters) -> complex:
    """Euler-Maclaurin partial value (no error handling beyond domain
    checks); exposed so parameter-selection behaviour can be tested."""
    s = complex(s)
    _check_em_domain(s, p.order)
    return _kernel.em_partial(s.real, s.imag, p.cutoff, p.order)


def _log_rising_abs(s: complex, count: int) -> float:
    """log |s (s+1) ... (s+count-1)|; -inf when a factor vanishes."""
    im2 = s.imag**2
    prod = 1.0
    total = 0.0
    for i in range(count):
        mag2 = (s.real + i) ** 2 + im2
        if mag2 == 0.0:
            return -math.inf
        prod *= mag2
        if not 1e-300 < prod < 1e300:  # drain to the log accumulator
            total += 0.5 * math.log(prod)
            prod = 1.0
    return total + 0.5 * math.log(prod)


def em_error_bound(s: complex, p: EmParameters) -> float:
    """Remainder bound for :func:`zeta_em_raw`: twice the magnitude of the
    first omitted Bernoulli correction.  Monotone non-increasing in the
    cutoff at fixed order throughout the validity half-plane."""
    s = complex(s)
    _check_em_domain(s, p.order)
    log_term = math.log(2.0 * abs(B_OVER_FACT[p.order]))
    log_term += _log_rising_abs(s, 2 * p.order + 1)
    if log_term == -math.inf:
        return 0.0  # a rising factor vanished: every correction term is 0
    log_term -= (s.real + 2 * p.order + 1) * math.log(p.cutoff)
    if log_term > 700.0:
        return math.inf
    return math.exp(log_term)


def choose_parameters(s: complex, target_rel_err: float) -> EmParameters:
    """Deterministic truncation choice meeting the remainder bound.

    The cutoff is floored at |Im s|/2 so the correction terms decay from
    the first one, which keeps the doubled-first-omitted-term error model
    honest; that floor makes N grow linearly with the height.
    """
    s = complex(s)
    target = float(target_rel_err)
    if not target > 0.0:
        raise ValueError("target_rel_err must be > 0")
    floor_n = max(2, math.ceil(0.5 * abs(s.imag)))
    log_target = math.log(target)

    best: tuple[float, EmParameters] | None = None
    for order in range(1, MAX_ORDER + 1):
        if s.real <= -(2 * order - 1):
            continue
        log_c = math.log(2.0 * abs(B_OVER_FACT[order]))
        log_c += _log_rising_abs(s, 2 * order + 1)
        k = s.real + 2 * order + 1
        ln_n = (log_c - log_target) / k if log_c > -math.inf else 0.0
        n = max(floor_n, math.ceil(math.exp(ln_n)) if ln_n > 0 else 2)
        if n > EM_MAX_CUTOFF:
            continue
        while em_error_bound(s, EmParameters(n, order)) > target:
            n = math.ceil(n * 1.25) + 1  # closed form can undershoot by rounding
            if n > EM_MAX_CUTOFF:
                break
        if n > EM_MAX_CUTOFF:
            continue
        cost = n + 6.0 * order
        if best is None or cost < best[0]:
            best = (cost, EmParameters(n, order))
    if best is None:
        raise PrecisionError(
            f"no Euler-Maclaurin parameters reach {target_rel_err:g} at s = {s}"
        )
    return best[1]


def _trivial_zero_distance(s: complex) -> float:
    if s.real > -1.0:
        return abs(s - (-2.0))
    k = -2.0 * max(1.0, math.floor(-0.5 * s.real + 0.5))
    return math.hypot(s.real - k, s.imag)


class ZetaEngine:
    """Evaluation service with a per-instance cache.

    ``mode`` selects where values come from:

    * ``"auto"``    - reflect for Re s < 1/2, except inside a small disk
      around the origin where the direct sum is used (reflection there
      would evaluate zeta next to its pole).
    * ``"reflect"`` - strict reflection for every Re s < 1/2; used to
      certify that identities hold as consequences of the reflection
      formula rather than of evaluation coincidences.
    * ``"em"``      - direct Euler-Maclaurin everywhere it is valid.

    All evaluation is pure; the cache is keyed by the exact binary64
    argument, so results are reproducible within a process.
    """

    def __init__(self, target_rel_err: float = 1e-13, mode: str = "auto") -> None:
        if mode not in ("auto", "reflect", "em"):
            raise ValueError(f"unknown engine mode {mode!r}")
        if not 0.0 < target_rel_err < 1.0:
            raise ValueError("target_rel_err must be in (0, 1)")
        self.target_rel_err = float(target_rel_err)
        self.mode = mode
        self._cache: dict[complex, EvalResult] = {}
        self._params_cache: dict[tuple[float, float, float], EmParameters] = {}

    # -- public surface ----------------------------------------------------

    def zeta(self, s: complex, target_rel_err: float | None = None) -> EvalResult:
        s = complex(s)
        if target_rel_err is not None and target_rel_err != self.target_rel_err:
            return self._eval(s, float(target_rel_err))
        hit = self._cache.get(s)
        if hit is None:
            hit = self._eval(s, self.target_rel_err)
            self._cache[s] = hit
        return hit

    def zeta_value(self, s: complex) -> complex:
        return self.zeta(s).value

    def xi(self, s: complex) -> complex:
        """Completed combination (s-1) pi^(-s/2) Gamma(s/2+1) zeta(s).

        The Gamma(s/2+1) form absorbs the s/2 prefactor, so s = 0 is a
        regular point (xi(0) = 1/2 with zeta(0) = -1/2 exact).  The pole
        disk at s = 1 and the negative even integers (gamma pole against
        an exact zeta zero) stay excluded.
        """
        s = complex(s)
        return (
            (s - 1.0)
            * cpow(math.pi, -0.5 * s)
            * cgamma(0.5 * s + 1.0)
            * self.zeta(s).value
        )

    def clear_cache(self) -> None:
        self._cache.clear()

    # -- internals ----------------------------------------------------------

    def _eval(self, s: complex, target: float) -> EvalResult:
        dist_pole = abs(s - 1.0)
        if dist_pole <= POLE_EXCLUSION:
            raise PoleError(f"zeta pole at s = 1 (|s-1| = {dist_pole:.3g})")
        near_pole = dist_pole < NEAR_BAND
        near_zero = _trivial_zero_distance(s) < NEAR_BAND

        if s.real >= 0.5 or (self.mode != "reflect" and abs(s) <= _DIRECT_DISK):
            value, bound = self._direct(s, target)
            method = "direct_em"
        elif self.mode == "em":
            value, bound = self._direct(s, target)
            method = "direct_em"
        else:
            value, bound = self._reflect(s, target)
            method = "reflected"

        if bound > 1e-6 * max(abs(value), 1e-3):
            raise PrecisionError(
                f"error bound {bound:.3g} cannot certify 1e-6 relative at s = {s}"
            )
        return EvalResult(
            value=value,
            abs_error_bound=max(bound, _BOUND_FLOOR),
            near_pole=near_pole,
            near_trivial_zero=near_zero,
            small_magnitude=abs(value) < SMALL_MAGNITUDE,
            method=method,
        )

    def _params_for(self, s: complex, target: float) -> EmParameters:
        """Truncation parameters from a quantized cache.

        The cache key is the conservative corner of a half-unit bucket
        (lowest Re, largest |Im|), so a hit is valid for every point in
        the bucket and the mapping does not depend on evaluation order.
        """
        key = (
            0.5 * math.floor(2.0 * s.real),
            0.5 * math.ceil(2.0 * abs(s.imag)),
            target,
        )
        p = self._params_cache.get(key)
        if p is None:
            p = choose_parameters(complex(key[0], key[1]), target)
            self._params_cache[key] = p
        return p

    def _direct(self, s: complex, target: float) -> tuple[complex, float]:
        p = self._params_for(s, target)
        value = _kernel.em_partial(s.real, s.imag, p.cutoff, p.order)
        bound = em_error_bound(s, p)
        # escalate if the bucket corner was optimistic for this exact point
        # or the relative goal missed (small |zeta| etc.)
        attempts = 0
        while bound > max(target, target * abs(value)) and attempts < 3:
            n2 = min(EM_MAX_CUTOFF, 2 * p.cutoff)
            if n2 <= p.cutoff:
                break
            p = EmParameters(n2, p.order)
            value = _kernel.em_partial(s.real, s.imag, p.cutoff, p.order)
            bound = em_error_bound(s, p)
            attempts += 1
        # rounding floor: below Re s = 1 the direct terms grow like
        # N^(1-Re s) and cancel, so the summation noise scales with the
        # largest intermediate, not with the result
        cancel = (
            4e-16
            * p.cutoff ** max(0.0, 1.0 - s.real)
            / max(abs(s - 1.0), 1.0)
        )
        return value, bound + cancel + _NOISE_REL * abs(value)

    def _reflect(self, s: complex, target: float) -> tuple[complex, float]:
        sine = sin_pi_half(s)
        if sine == 0.0:
            if s == 0.0:  # sin factor vanishes against the zeta(1) pole
                raise PoleError("reflection at s = 0 evaluates zeta at its pole")
            return complex(0.0, 0.0), _BOUND_FLOOR  # exact trivial zero
        w = 1.0 - s  # Re w > 1/2 here
        inner_value, inner_bound = self._direct(w, target)
        prefactor = cmath.exp(s * LN_2 + (s - 1.0) * LN_PI + clog_gamma(w)) * sine
        value = prefactor * inner_value
        bound = abs(prefactor) * inner_bound + _NOISE_REL * abs(value)
        return value, bound


_default_engine: ZetaEngine | None = None


def default_engine() -> ZetaEngine:
    """Shared process-wide engine (pure reads; safe to share)."""
    global _default_engine
    if _default_engine is None:
        _default_engine = ZetaEngine()
    return _default_engine


def zeta(s: complex, target_rel_err: float = 1e-13) -> EvalResult:
    """Module-level convenience over the shared engine."""
    return default_engine().zeta(s, target_rel_err)


def xi(s: complex) -> complex:
    return default_engine().xi(s)
