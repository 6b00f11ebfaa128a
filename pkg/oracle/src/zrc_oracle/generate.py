"""Golden-fixture generation.

Reads a points spec (JSON), evaluates every requested zeta/gamma point
with mpmath at >= 50 working digits, locates the first nontrivial zero
ordinate by bisecting sign changes of the completed function on the
critical line, and writes a fixture file of 30+ significant-digit
decimal text.  Regeneration from the same spec is byte-identical.

Fixture schema (consumed by ``zrc verdict --fixtures``):

    {
      "schema_version": 1,
      "entries": [
        {"kind": "zeta"|"gamma"|"constant",
         "arg":   ["<re>", "<im>"],
         "value": ["<re>", "<im>"],
         "note":  "<text>"},
        ...
      ]
    }
"""

from __future__ import annotations

import argparse
import json
import sys
from dataclasses import dataclass
from importlib import resources

import mpmath as mp

SCHEMA_VERSION = 1
VALUE_DIGITS = 33  # > 30 significant digits in the emitted text
MIN_WORKING_DPS = 50


@dataclass(frozen=True)
class FixtureEntry:
    kind: str
    arg: tuple[str, str]
    value: tuple[str, str]
    note: str

    def as_dict(self) -> dict:
        return {
            "kind": self.kind,
            "arg": list(self.arg),
            "value": list(self.value),
            "note": self.note,
        }


def _fmt(x) -> str:
    # strip_zeros=False keeps exact values (1, 14.25, ...) at full width
    return mp.nstr(mp.mpf(x), VALUE_DIGITS, strip_zeros=False)


def _fmt_pair(z) -> tuple[str, str]:
    z = mp.mpc(z)
    return (_fmt(z.real), _fmt(z.imag))


def _completed(s):
    # (1/2) s (s-1) pi^(-s/2) Gamma(s/2) zeta(s): real on the critical line
    return 0.5 * s * (s - 1) * mp.power(mp.pi, -s / 2) * mp.gamma(s / 2) * mp.zeta(s)


def first_zero_ordinate(lo: str = "14.0", hi: str = "14.2", iterations: int = 130):
    """Ordinate of the first nontrivial zero, located by the oracle
    itself: fixed-count bisection on the sign of the completed function
    along the critical line (deterministic for a given precision)."""
    a, b = mp.mpf(lo), mp.mpf(hi)
    fa = mp.re(_completed(mp.mpc(mp.mpf("0.5"), a)))
    fb = mp.re(_completed(mp.mpc(mp.mpf("0.5"), b)))
    if mp.sign(fa) == mp.sign(fb):
        raise ValueError("no sign change in the bracketing interval")
    for _ in range(iterations):
        mid = (a + b) / 2
        fm = mp.re(_completed(mp.mpc(mp.mpf("0.5"), mid)))
        if mp.sign(fm) == mp.sign(fa):
            a, fa = mid, fm
        else:
            b, fb = mid, fm
    return (a + b) / 2


def _entry_sort_key(e: FixtureEntry):
    return (e.kind, mp.mpf(e.arg[0]), mp.mpf(e.arg[1]), e.note)


_CONSTANTS = {
    "pi": lambda: mp.pi,
    "sqrt_pi": lambda: mp.sqrt(mp.pi),
    "neg_inv_4pi": lambda: -1 / (4 * mp.pi),
}


def generate(points_spec: dict) -> dict:
    """Build the fixture document from a points spec.

    Spec keys: ``digits`` (working precision, >= 50), ``zeta_points``
    and ``gamma_points`` (lists of [re, im] decimal text), ``constants``
    (names from pi/sqrt_pi/neg_inv_4pi), and
    ``include_first_nontrivial_zero``.
    """
    digits = int(points_spec.get("digits", MIN_WORKING_DPS))
    if digits < MIN_WORKING_DPS:
        raise ValueError(
            f"working precision must be >= {MIN_WORKING_DPS} digits, got {digits}"
        )
    entries: list[FixtureEntry] = []
    with mp.workdps(digits):
        for re_txt, im_txt in points_spec.get("zeta_points", ()):
            s = mp.mpc(mp.mpf(str(re_txt)), mp.mpf(str(im_txt)))
            value = mp.zeta(s)
            entries.append(
                FixtureEntry("zeta", _fmt_pair(s), _fmt_pair(value), "zeta value")
            )
        for re_txt, im_txt in points_spec.get("gamma_points", ()):
            z = mp.mpc(mp.mpf(str(re_txt)), mp.mpf(str(im_txt)))
            value = mp.gamma(z)
            entries.append(
                FixtureEntry("gamma", _fmt_pair(z), _fmt_pair(value), "gamma value")
            )
        for name in points_spec.get("constants", ()):
            if name not in _CONSTANTS:
                raise ValueError(f"unknown constant {name!r}")
            entries.append(
                FixtureEntry(
                    "constant", ("0.0", "0.0"), _fmt_pair(_CONSTANTS[name]()), name
                )
            )
        if points_spec.get("include_first_nontrivial_zero", False):
            t = first_zero_ordinate()
            s = mp.mpc(mp.mpf("0.5"), t)
            entries.append(
                FixtureEntry(
                    "zeta",
                    _fmt_pair(s),
                    _fmt_pair(mp.zeta(s)),
                    "first nontrivial zero (ordinate located by bisection)",
                )
            )
            entries.append(
                FixtureEntry(
                    "constant", ("0.0", "0.0"), (_fmt(t), "0.0"), "first_zero_ordinate"
                )
            )
        entries.sort(key=_entry_sort_key)
    return {
        "schema_version": SCHEMA_VERSION,
        "entries": [e.as_dict() for e in entries],
    }


def render(document: dict) -> str:
    return json.dumps(document, indent=1, sort_keys=False) + "\n"


def default_points_spec() -> dict:
    text = resources.files("zrc_oracle").joinpath("default_points.json").read_text()
    return json.loads(text)


def main(argv=None) -> int:
    parser = argparse.ArgumentParser(
        prog="zrc-oracle",
        description="generate high-precision golden fixtures for the zrc engine",
    )
    parser.add_argument("--points", default=None, help="points spec JSON (default: built-in)")
    parser.add_argument("--out", default=None, help="output path (default: stdout)")
    parser.add_argument("--digits", type=int, default=None, help="working precision override")
    args = parser.parse_args(argv)

    if args.points is None:
        spec = default_points_spec()
    else:
        with open(args.points, "r", encoding="utf-8") as fh:
            spec = json.load(fh)
    if args.digits is not None:
        spec["digits"] = args.digits

    try:
        document = generate(spec)
    except ValueError as exc:
        print(f"zrc-oracle: {exc}", file=sys.stderr)
        return 2

    text = render(document)
    if args.out is None:
        sys.stdout.write(text)
    else:
        with open(args.out, "w", encoding="utf-8") as fh:
            fh.write(text)
    return 0


if __name__ == "__main__":
    sys.exit(main())
