"""Pure-Python Euler-Maclaurin kernel.

Mirrors the compiled backend operation for operation (same libm calls in
the same order) so that the two backends agree to a few ulps and either
one can back the engine.
"""

from __future__ import annotations

import math

from .tables import B_OVER_FACT

BACKEND_NAME = "pure"


def em_partial(sre: float, sim: float, n_cut: int, m_order: int) -> complex:
    """Euler-Maclaurin partial value at s = sre + i*sim:

        sum_{k=1}^{N-1} k^{-s}  +  N^{1-s}/(s-1)  +  N^{-s}/2
          +  sum_{j=1}^{M} B_{2j}/(2j)! * s(s+1)...(s+2j-2) * N^{1-s-2j}

    with N = n_cut, M = m_order.  No validity checks here; callers own
    the domain guard Re s > -(2M-1) and s != 1.
    """
    acc_re = 1.0 if n_cut >= 2 else 0.0  # k = 1 term
    acc_im = 0.0
    for k in range(2, n_cut):
        lnk = math.log(k)
        mag = math.exp(-sre * lnk)
        ang = -sim * lnk
        acc_re += mag * math.cos(ang)
        acc_im += mag * math.sin(ang)

    s = complex(sre, sim)
    lnn = math.log(n_cut)
    mag = math.exp(-sre * lnn)
    ang = -sim * lnn
    npow = complex(mag * math.cos(ang), mag * math.sin(ang))  # N^{-s}

    total = complex(acc_re, acc_im)
    total += (n_cut * npow) / (s - 1.0)  # N^{1-s}/(s-1)
    total += 0.5 * npow

    rising = s                      # s(s+1)...(s+2j-2), one factor at j=1
    npow_j = npow / n_cut           # N^{-s-1} == N^{1-s-2j} at j=1
    inv_n2 = 1.0 / (float(n_cut) * float(n_cut))
    for j in range(1, m_order + 1):
        total += B_OVER_FACT[j - 1] * rising * npow_j
        if j < m_order:
            rising *= (s + (2 * j - 1)) * (s + 2 * j)
            npow_j *= inv_n2
    return total
