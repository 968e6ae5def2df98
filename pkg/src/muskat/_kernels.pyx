# cython: language_level=3, boundscheck=False, cdivision=True
"""Scalar special-function kernels, compiled backend.

Mirrors ``muskat._kernels_py`` exactly; see that module for documentation.
"""

from libc.math cimport atan2, ceil, cos, fabs, pi, sin, sqrt

cdef extern from "complex.h" nogil:
    double complex csqrt(double complex)
    double complex csin(double complex)
    double complex ccos(double complex)
    double cabs(double complex)
    double creal(double complex)
    double complex conj(double complex)

RF_TOL = 1e-14
SERIES_TOL = 1e-16
AGM_TOL = 5e-16

cdef double _RF_TOL = 1e-14
cdef double _SERIES_TOL = 1e-16
cdef double _AGM_TOL = 5e-16


cdef double complex _rf(double complex x, double complex y, double complex z) nogil:
    cdef double complex xt = x, yt = y, zt = z
    cdef double complex av = (xt + yt + zt) / 3.0
    cdef double complex sx, sy, sz, lam, dx, dy, dz, e2, e3, s
    cdef double spread
    cdef int i
    for i in range(120):
        if cabs(av) > 0.0:
            spread = cabs(av - xt)
            if cabs(av - yt) > spread:
                spread = cabs(av - yt)
            if cabs(av - zt) > spread:
                spread = cabs(av - zt)
            if spread <= _RF_TOL * cabs(av):
                break
        sx = csqrt(xt)
        sy = csqrt(yt)
        sz = csqrt(zt)
        lam = sx * sy + sy * sz + sz * sx
        xt = 0.25 * (xt + lam)
        yt = 0.25 * (yt + lam)
        zt = 0.25 * (zt + lam)
        av = (xt + yt + zt) / 3.0
    dx = (av - xt) / av
    dy = (av - yt) / av
    dz = -dx - dy
    e2 = dx * dy - dz * dz
    e3 = dx * dy * dz
    s = 1.0 - e2 / 10.0 + e3 / 14.0 + e2 * e2 / 24.0 - 3.0 * e2 * e3 / 44.0
    return s / csqrt(av)


def rf(x, y, z):
    """Carlson symmetric integral R_F(x, y, z) by duplication."""
    return _rf(x, y, z)


cdef double _agm(double a, double b) nogil:
    cdef double an, bn
    cdef int i
    for i in range(64):
        if fabs(a - b) <= _AGM_TOL * fabs(a):
            break
        an = 0.5 * (a + b)
        bn = sqrt(a * b)
        a = an
        b = bn
    return 0.5 * (a + b)


def agm(a, b):
    """Arithmetic-geometric mean of two positive reals."""
    return _agm(a, b)


cdef double _ellipk_agm(double k) nogil:
    return pi / (2.0 * _agm(1.0, sqrt((1.0 - k) * (1.0 + k))))


def ellipk_agm(k):
    """Complete elliptic integral K(k), modulus convention, via the AGM."""
    return _ellipk_agm(k)


def hyp2f1_half_series(double x):
    """Power series for 2F1(1/2, 1/2; 1; x); practical for x <= 0.7."""
    cdef double term = 1.0
    cdef double total = 1.0
    cdef double r
    cdef long n = 0
    while n < 100000:
        n += 1
        r = (2.0 * n - 1.0) / (2.0 * n)
        term *= r * r * x
        total += term
        if term < _SERIES_TOL * total:
            break
    return total


def ellip_f_strip(phi, double k):
    """Incomplete F(phi, k) for complex phi with Re(phi) in [-pi/2, pi/2]."""
    cdef double complex p = phi
    cdef double complex s = csin(p)
    cdef double complex c = ccos(p)
    return s * _rf(c * c, 1.0 - (k * s) * (k * s), 1.0 + 0.0j)


cdef double _ellip_f_real(double alpha, double k) nogil:
    cdef double n = ceil((alpha - pi / 2.0) / pi - 1e-15)
    cdef double a0 = alpha - n * pi
    cdef double s = sin(a0)
    cdef double c = cos(a0)
    cdef double f = creal(
        s * _rf(c * c + 0.0j, (1.0 - (k * s) * (k * s)) + 0.0j, 1.0 + 0.0j)
    )
    if n == 0.0:
        return f
    return f + 2.0 * n * _ellipk_agm(k)


def ellip_f_real(double alpha, double k):
    """F(alpha, k) for real alpha, using F(phi + n*pi) = F(phi) + 2nK."""
    return _ellip_f_real(alpha, k)


def cassini_alpha(z, double b, double ksq):
    """Real elliptic amplitude of the oval field's conjugate-pair sum."""
    cdef double complex zz = z
    cdef double complex w = b / zz
    cdef double complex sn = csqrt(1.0 - w * w)
    cdef double complex dn = csqrt(1.0 - ksq * sn * sn)
    cdef double m2 = creal(sn * conj(sn))
    cdef double den = 1.0 - ksq * m2 * m2
    cdef double s_raw = 2.0 * creal(sn * conj(w * dn))
    cdef double c_raw = creal(w * conj(w)) - m2 * creal(dn * conj(dn))
    if den < 0.0:
        s_raw = -s_raw
        c_raw = -c_raw
    if s_raw == 0.0:
        s_raw = fabs(s_raw)
    return atan2(s_raw, c_raw)
