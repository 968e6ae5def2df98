"""Scalar special-function kernels, pure-Python backend.

These are the innermost loops of the package (every Cassini pressure sample
ends up here).  ``muskat._kernels`` is a compiled twin of this module; the
active backend is chosen in ``muskat._backend``.  Keep the two files in
algorithmic lockstep -- the test suite compares them value by value.

No argument validation happens here; the public wrappers in
``muskat.specfun`` own the error contracts.
"""

import cmath
import math

RF_TOL = 1e-14      # duplication stops at this relative spread about the mean
SERIES_TOL = 1e-16  # power series stops when term < tol * partial sum
AGM_TOL = 5e-16

_PI = math.pi


def rf(x, y, z):
    """Carlson symmetric integral R_F(x, y, z) by duplication.

    Arguments may be complex but must stay off the negative real axis; at
    most one may be zero.
    """
    xt = complex(x)
    yt = complex(y)
    zt = complex(z)
    av = (xt + yt + zt) / 3.0
    for _ in range(120):
        if abs(av) > 0.0 and max(
            abs(av - xt), abs(av - yt), abs(av - zt)
        ) <= RF_TOL * abs(av):
            break
        sx = cmath.sqrt(xt)
        sy = cmath.sqrt(yt)
        sz = cmath.sqrt(zt)
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
    return s / cmath.sqrt(av)


def agm(a, b):
    """Arithmetic-geometric mean of two positive reals."""
    a = float(a)
    b = float(b)
    for _ in range(64):
        if abs(a - b) <= AGM_TOL * abs(a):
            break
        a, b = 0.5 * (a + b), math.sqrt(a * b)
    return 0.5 * (a + b)


def ellipk_agm(k):
    """Complete elliptic integral K(k), modulus convention, via the AGM."""
    return _PI / (2.0 * agm(1.0, math.sqrt((1.0 - k) * (1.0 + k))))


def hyp2f1_half_series(x):
    """Power series for 2F1(1/2, 1/2; 1; x); practical for x <= 0.7."""
    term = 1.0
    total = 1.0
    n = 0
    while n < 100000:
        n += 1
        r = (2.0 * n - 1.0) / (2.0 * n)
        term *= r * r * x
        total += term
        if term < SERIES_TOL * total:
            break
    return total


def ellip_f_strip(phi, k):
    """Incomplete F(phi, k) for complex phi with Re(phi) in [-pi/2, pi/2]."""
    phi = complex(phi)
    s = cmath.sin(phi)
    c = cmath.cos(phi)
    return s * rf(c * c, 1.0 - (k * s) * (k * s), 1.0)


def ellip_f_real(alpha, k):
    """F(alpha, k) for real alpha, using F(phi + n*pi) = F(phi) + 2nK."""
    n = math.ceil((alpha - _PI / 2.0) / _PI - 1e-15)
    a0 = alpha - n * _PI
    s = math.sin(a0)
    c = math.cos(a0)
    f = (s * rf(complex(c * c, 0.0), complex(1.0 - (k * s) ** 2, 0.0), 1.0 + 0.0j)).real
    if n == 0:
        return f
    return f + 2.0 * n * ellipk_agm(k)


def cassini_alpha(z, b, ksq):
    """Real elliptic amplitude of the oval field's conjugate-pair sum.

    For z in the closed right half-plane returns alpha such that
    F(xi,k) + F(conj(xi),k) = F(alpha,k) with xi = arccos(b/z); the pair
    (sin alpha, cos alpha) is built from the Jacobi addition formulas, which
    keeps alpha real and removes the arcsin sign ambiguity.
    """
    z = complex(z)
    w = b / z
    sn = cmath.sqrt(1.0 - w * w)
    dn = cmath.sqrt(1.0 - ksq * sn * sn)
    m2 = (sn * sn.conjugate()).real
    den = 1.0 - ksq * m2 * m2
    s_raw = 2.0 * (sn * (w * dn).conjugate()).real
    c_raw = (w * w.conjugate()).real - m2 * (dn * dn.conjugate()).real
    if den < 0.0:
        s_raw = -s_raw
        c_raw = -c_raw
    if s_raw == 0.0:
        s_raw = abs(s_raw)
    return math.atan2(s_raw, c_raw)
