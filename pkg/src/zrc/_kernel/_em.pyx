# cython: language_level=3, boundscheck=False, wraparound=False, cdivision=True
"""Compiled Euler-Maclaurin kernel.

Same arithmetic as zrc._kernel.pure, with the k^{-s} loop running on C
doubles.  This loop dominates the runtime of grid scans.
"""

from libc.math cimport log, exp, cos, sin

from .tables import B_OVER_FACT

cdef double _B[16]
cdef int _i
for _i in range(16):
    _B[_i] = B_OVER_FACT[_i]

BACKEND_NAME = "cython"


def em_partial(double sre, double sim, long n_cut, int m_order):
    cdef double acc_re = 1.0 if n_cut >= 2 else 0.0
    cdef double acc_im = 0.0
    cdef double lnk, mag, ang
    cdef long k
    for k in range(2, n_cut):
        lnk = log(<double> k)
        mag = exp(-sre * lnk)
        ang = -sim * lnk
        acc_re += mag * cos(ang)
        acc_im += mag * sin(ang)

    cdef double complex s = sre + 1j * sim
    cdef double lnn = log(<double> n_cut)
    mag = exp(-sre * lnn)
    ang = -sim * lnn
    cdef double complex npow = mag * cos(ang) + 1j * (mag * sin(ang))

    cdef double complex total = acc_re + 1j * acc_im
    total = total + (n_cut * npow) / (s - 1.0)
    total = total + 0.5 * npow

    cdef double complex rising = s
    cdef double complex npow_j = npow / n_cut
    cdef double inv_n2 = 1.0 / ((<double> n_cut) * (<double> n_cut))
    cdef int j
    for j in range(1, m_order + 1):
        total = total + _B[j - 1] * rising * npow_j
        if j < m_order:
            rising = rising * (s + (2 * j - 1)) * (s + 2 * j)
            npow_j = npow_j * inv_n2
    return total
