"""Independent golden-value generator.

Computes zeta and gamma reference values at 30+ significant digits with
mpmath, entirely separate from the production engine, so agreement
between the two is evidence rather than tautology.
"""

from .generate import FixtureEntry, first_zero_ordinate, generate, main

__all__ = ["FixtureEntry", "first_zero_ordinate", "generate", "main"]
