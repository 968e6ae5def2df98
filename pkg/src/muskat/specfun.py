"""Special functions for the elliptic-integral pressure fields.

Carlson's symmetric R_F is the numerical backbone; incomplete elliptic
integrals of the first kind (for complex amplitude) and the hypergeometric
value 2F1(1/2, 1/2; 1; x) are built on top of it.  The arithmetic-geometric
mean gives an independent route to the complete integral and is used as the
cross-check throughout the tests.

The actual inner loops live in the kernel backend (compiled when available);
this module owns argument validation and the branch bookkeeping.
"""

from __future__ import annotations

import cmath
import math
from dataclasses import dataclass

from ._backend import kernels as _k
from .errors import BranchError, DomainError, ModulusError, ReductionError

_HALF_PI = 0.5 * math.pi


@dataclass(frozen=True)
class EllipticModulus:
    """Modulus k with its parameter m = k^2 stored alongside."""

    k: float
    m: float

    @classmethod
    def from_k(cls, k: float) -> "EllipticModulus":
        if not 0.0 <= k < 1.0:
            raise ModulusError(f"modulus must lie in [0, 1), got {k}")
        return cls(k, k * k)


def carlson_rf(x: complex, y: complex, z: complex) -> complex:
    """Carlson symmetric integral R_F(x, y, z) to relative 1e-12.

    At most one argument may be zero, and all must stay off the negative
    real axis (Carlson's domain of analyticity).
    """
    args = (complex(x), complex(y), complex(z))
    zeros = sum(1 for v in args if v == 0)
    if zeros > 1:
        raise DomainError("at most one R_F argument may be zero")
    for v in args:
        if not (math.isfinite(v.real) and math.isfinite(v.imag)):
            raise DomainError(f"non-finite R_F argument {v}")
        if v.real < 0.0 and v.imag == 0.0:
            raise DomainError(f"R_F argument {v} lies on the negative real cut")
    return _k.rf(*args)


def agm(a: float, b: float) -> float:
    """Arithmetic-geometric mean of two positive reals."""
    if not (a > 0.0 and b > 0.0):
        raise DomainError(f"AGM needs positive arguments, got {a}, {b}")
    return _k.agm(a, b)


def complete_elliptic_k(k: float) -> float:
    """Complete integral K(k) via the AGM (independent of the R_F route)."""
    if not 0.0 <= k < 1.0:
        raise ModulusError(f"modulus must lie in [0, 1), got {k}")
    return _k.ellipk_agm(k)


def _reduce_count(re_phi: float) -> int:
    # smallest n with Re(phi) - n*pi in (-pi/2, pi/2]; exact at the edges
    return math.ceil((re_phi - _HALF_PI) / math.pi - 1e-15)


def ellip_f(phi: complex, k: float) -> complex:
    """Incomplete elliptic integral F(phi, k) for complex amplitude.

    Re(phi) is reduced into (-pi/2, pi/2] with F(phi + pi) = F(phi) + 2K(k),
    then the Carlson form F = sin(phi) R_F(cos^2 phi, 1 - k^2 sin^2 phi, 1)
    applies.  Satisfies conj(F(phi, k)) = F(conj(phi), k).
    """
    if not 0.0 <= k < 1.0:
        raise ModulusError(f"modulus must lie in [0, 1), got {k}")
    phi = complex(phi)
    if abs(phi.imag) > 700.0:
        raise ReductionError("amplitude too far from the real axis to reduce")
    n = _reduce_count(phi.real)
    phi0 = phi - n * math.pi
    f = _k.ellip_f_strip(phi0, k)
    if n == 0:
        return f
    return f + 2.0 * n * complete_elliptic_k(k)


def jacobi_sum_amplitude(sn: complex, cn: complex, dn: complex, k: float) -> float:
    """Real amplitude alpha of F(u) + F(conj(u)) from Jacobi data of u.

    For a conjugate pair the addition formulas give real sin(alpha) and
    cos(alpha); atan2 of the pair removes the arcsin sign ambiguity.
    """
    m2 = (sn * sn.conjugate()).real
    den = 1.0 - (k * k) * m2 * m2
    s_raw = 2.0 * (sn * (cn * dn).conjugate()).real
    c_raw = (cn * cn.conjugate()).real - m2 * (dn * dn.conjugate()).real
    if den < 0.0:
        s_raw = -s_raw
        c_raw = -c_raw
    if s_raw == 0.0:
        s_raw = abs(s_raw)
    if abs(s_raw) < 1e-300 and abs(c_raw) < 1e-300:
        raise BranchError("degenerate amplitude (evaluation at a branch point)")
    return math.atan2(s_raw, c_raw)


def ellip_f_sum_amplitude(xi: complex, k: float) -> float:
    """Combined amplitude alpha with F(xi, k) + F(conj(xi), k) = F(alpha, k).

    Valid for amplitudes in the closed principal strip |Re(xi)| <= pi/2 (for
    the oval's field, xi = arccos(b/z) with z in the right half-plane).
    Outside the strip the sum formula needs a different sheet, which is
    flagged rather than guessed.
    """
    if not 0.0 <= k < 1.0:
        raise ModulusError(f"modulus must lie in [0, 1), got {k}")
    xi = complex(xi)
    if abs(xi.real) > _HALF_PI * (1.0 + 1e-12):
        raise BranchError(
            f"amplitude Re(xi) = {xi.real} lies outside the principal strip"
        )
    sn = cmath.sin(xi)
    cn = cmath.cos(xi)
    dn = cmath.sqrt(1.0 - (k * sn) * (k * sn))
    return jacobi_sum_amplitude(sn, cn, dn, k)


def hyp2f1_half(x: float) -> float:
    """Gauss value 2F1(1/2, 1/2; 1; x) for x in [0, 1), to relative 1e-12.

    Series for x <= 1/2; the identity 2F1 = (2/pi) K(sqrt(x)) evaluated by
    the AGM takes over beyond.  The two paths agree on the overlap, which
    the tests pin down.
    """
    if not 0.0 <= x < 1.0:
        raise DomainError(f"2F1(1/2,1/2;1;x) needs x in [0, 1), got {x}")
    if x <= 0.5:
        return _k.hyp2f1_half_series(x)
    return 1.0 / _k.agm(1.0, math.sqrt(1.0 - x))
