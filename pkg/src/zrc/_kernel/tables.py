"""Even-index Bernoulli numbers as exact rationals, plus the derived
float coefficients B_{2j}/(2j)! used by the Euler-Maclaurin correction sum.

The table stops at B_32: correction orders run to M = 15 and the error
model needs one extra coefficient for the first omitted term.  Beyond
that the coefficients grow fast enough that binary64 correction terms
stop being useful anyway.
"""

from __future__ import annotations

import math
from fractions import Fraction

# B_2, B_4, ..., B_32 (numerator, denominator)
_BERNOULLI_EVEN: tuple[tuple[int, int], ...] = (
    (1, 6),
    (-1, 30),
    (1, 42),
    (-1, 30),
    (5, 66),
    (-691, 2730),
    (7, 6),
    (-3617, 510),
    (43867, 798),
    (-174611, 330),
    (854513, 138),
    (-236364091, 2730),
    (8553103, 6),
    (-23749461029, 870),
    (8615841276005, 14322),
    (-7709321041217, 510),
)

BERNOULLI_EVEN: tuple[Fraction, ...] = tuple(Fraction(n, d) for n, d in _BERNOULLI_EVEN)

# B_OVER_FACT[j-1] == float(B_{2j} / (2j)!) for j = 1..16, correctly rounded.
B_OVER_FACT: tuple[float, ...] = tuple(
    float(BERNOULLI_EVEN[j - 1] / math.factorial(2 * j)) for j in range(1, 17)
)

MAX_ORDER = 15  # largest usable correction order M; index M is the first omitted term
