"""Pressure and velocity fields in both fluids for each family.

All zero-gauge families share one structure: there is a reduced complex
potential w(z) with k_j W_j = w, so

    p_j(z) = Re[w(z) - w(Gamma)] / k_j,        v_j(z) = conj(dS/dt) / 2,

the velocity following from dW_j/dz = -dS/dt / (2 k_j) and v = -k_j grad p.
Both fluids see the same velocity field, each restricted to its own domain.

Branch handling: the logarithmic families only ever take Re log = ln|.|,
which is single-valued; the Cassini field evaluates its elliptic amplitude
through the conjugate-pair Jacobi addition (``specfun.jacobi_sum_amplitude``)
and exploits the field's evenness in x to stay in the right half-plane,
where that amplitude is single-valued.  The left-half continuation of the
raw arcsin formula lands on another sheet, so the mirror is not a shortcut
but the continuation itself.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

from ._backend import kernels as _k
from .errors import (
    BranchCutError,
    FamilyError,
    OnSupportError,
    PoleError,
    WrongSideError,
)
from .curves import (
    BOUNDARY_RTOL,
    CassiniOval,
    Circle,
    Ellipse,
    Mobility,
    NeumannOval,
    Shape,
    ShapeRates,
    boundary_distance,
    check_rates,
    is_inside,
    schwarz_dot,
    sqrt_segment_cut,
    sqrt_vertical_cuts,
)


@dataclass(frozen=True)
class FieldSample:
    z: complex
    fluid: int
    pressure: float
    velocity: tuple[float, float]


# Points closer than this (times the shape scale) to a point sink/source are
# rejected: the field diverges there.
POINT_SUPPORT_RTOL = 1e-9


def point_singularities(shape: Shape) -> list[complex]:
    """Locations where the pressure itself diverges (log poles)."""
    if isinstance(shape, Circle):
        return [0j]
    if isinstance(shape, NeumannOval):
        half_d = 0.5 * shape.d
        return [complex(half_d, 0.0), complex(-half_d, 0.0)]
    return []


def _validate_point(shape: Shape, fluid: int, z: complex) -> None:
    if fluid not in (1, 2):
        raise ValueError(f"fluid index must be 1 or 2, got {fluid}")
    tol = POINT_SUPPORT_RTOL * shape.scale
    for zp in point_singularities(shape):
        if abs(z - zp) < tol:
            raise OnSupportError(f"pressure diverges at the point support {zp}")
    if boundary_distance(shape, z) <= BOUNDARY_RTOL * shape.scale:
        return  # on Gamma: in the closure of both domains
    inside = is_inside(shape, z)
    if fluid == 2 and not inside:
        raise WrongSideError(f"{z} lies in the exterior domain, not fluid 2")
    if fluid == 1 and inside:
        raise WrongSideError(f"{z} lies in the interior domain, not fluid 1")


def cassini_field_sum(shape: CassiniOval, z: complex) -> float:
    """Continuous value of F(xi,k) + F(conj(xi),k) for the oval field.

    Evaluated in the right half-plane (the field is even in x) through the
    real amplitude pair; continuous off the mother-body supports, with the
    density kink across them.
    """
    x = abs(z.real)
    eps = 1e-13 * shape.a
    if x < eps:
        x = eps
    k = shape.modulus
    alpha = _k.cassini_alpha(complex(x, z.imag), shape.b, k * k)
    return _k.ellip_f_real(alpha, k)


def _cassini_gauge(shape: CassiniOval) -> float:
    # F(pi/2, k) through the same R_F route as the field, so the interface
    # value cancels to round-off.
    return _k.ellip_f_real(0.5 * math.pi, shape.modulus)


def gauge_potential(
    shape: Shape,
    rates: ShapeRates,
    z: complex,
    flip_exterior: bool = False,
    flip_interior: bool = False,
) -> float:
    """Re[k_j W_j] with the interface gauge already subtracted.

    The flip flags evaluate the other branch of the multi-valued potential
    (exterior-type radical or interior-type radical); the difference of the
    two branches is the variation var_l p_j used to locate cuts.
    """
    z = complex(z)
    ad = rates.a_dot
    if isinstance(shape, Circle):
        return -shape.a * ad * (math.log(abs(z)) - math.log(shape.a))
    if isinstance(shape, Ellipse):
        m = rates.a_dot * shape.b + shape.a * rates.b_dot  # d(ab)/dt
        w = sqrt_segment_cut(z, shape.d)
        if flip_interior:
            w = -w
        return -0.5 * m * (math.log(abs(z + w)) - math.log(shape.a + shape.b))
    if isinstance(shape, NeumannOval):
        a, b, d = shape.a, shape.b, shape.d
        g = d * sqrt_vertical_cuts(z, a * b / d)
        if flip_exterior:
            g = -g
        num = a * a + b * b + 2.0 * g
        den = 4.0 * z * z - d * d
        return 0.5 * a * ad * (math.log(abs(num)) - math.log(abs(den)))
    if isinstance(shape, CassiniOval):
        v = cassini_field_sum(shape, z)
        kc = _cassini_gauge(shape)
        if flip_interior:
            v = -v
        if flip_exterior:
            v = 4.0 * kc - v
        return -0.5 * shape.a * ad * (v - kc)
    raise TypeError(f"unknown shape {shape!r}")


def pressure(
    shape: Shape, rates: ShapeRates, mob: Mobility, fluid: int, z: complex
) -> float:
    """Zero-gauge pressure p_j(z): vanishes on Gamma for every family."""
    check_rates(shape, rates)
    z = complex(z)
    _validate_point(shape, fluid, z)
    return gauge_potential(shape, rates, z) / mob.of(fluid)


def velocity(
    shape: Shape, rates: ShapeRates, mob: Mobility, fluid: int, z: complex
) -> tuple[float, float]:
    """Fluid velocity -k_j grad p_j = conj(dS/dt)/2 (same in both fluids)."""
    check_rates(shape, rates)
    z = complex(z)
    _validate_point(shape, fluid, z)
    try:
        v = 0.5 * schwarz_dot(shape, rates, z).conjugate()
    except (BranchCutError, PoleError) as exc:
        raise OnSupportError(str(exc)) from exc
    return (v.real, v.imag)


def sample(
    shape: Shape, rates: ShapeRates, mob: Mobility, fluid: int, z: complex
) -> FieldSample:
    return FieldSample(
        z=complex(z),
        fluid=fluid,
        pressure=pressure(shape, rates, mob, fluid, z),
        velocity=velocity(shape, rates, mob, fluid, z),
    )


# ---------------------------------------------------------------------------
# circle with surface tension


def pressure_circle_surface_tension(
    shape, a_dot: float, gamma: float, mob: Mobility, fluid: int, z: complex
) -> float:
    """Circle pressures when p1 - p2 = gamma * kappa replaces continuity.

    p2 keeps the zero gauge; p1 is shifted by gamma/a (kappa = 1/a), so the
    jump on Gamma equals gamma times the curvature.
    """
    if isinstance(shape, (Ellipse, NeumannOval, CassiniOval)):
        raise FamilyError("surface-tension variant exists for the circle only")
    circle = shape if isinstance(shape, Circle) else Circle(float(shape))
    if gamma < 0.0:
        raise ValueError(f"surface tension must be nonnegative, got {gamma}")
    rates = ShapeRates(a_dot, 0.0)
    p = pressure(circle, rates, mob, fluid, z)
    if fluid == 1:
        p += gamma / circle.a
    return p


# ---------------------------------------------------------------------------
# constant-area (linear far-field flow) ellipse variant


def _crowdy_terms(shape: Ellipse, a_dot: float) -> tuple[float, float, float]:
    a, b = shape.a, shape.b
    d2 = a * a - b * b
    b_dot = -b * a_dot / a                      # ab = const
    dd = 2.0 * a * a_dot - 2.0 * b * b_dot      # d(d^2)/dt, nonzero here
    p = (2.0 * a * a_dot + 2.0 * b * b_dot) / d2 - (a * a + b * b) * dd / (d2 * d2)
    r = -dd / (d2 * d2)                         # d(1/d^2)/dt
    return p, r, d2


def pressure_ellipse_constant_area(
    shape: Ellipse, a_dot: float, mob: Mobility, fluid: int, z: complex
) -> float:
    """Ellipse evolving with constant area ab and a linear far-field flow.

    The signed interfocal density integrates to zero, so no point at
    infinity is involved; the pressures are continuous across Gamma (and
    this gauge happens to vanish there as well).
    """
    if not isinstance(shape, Ellipse):
        raise FamilyError("constant-area variant exists for the ellipse only")
    z = complex(z)
    _validate_point(shape, fluid, z)
    p, r, d2 = _crowdy_terms(shape, a_dot)
    a, b = shape.a, shape.b
    w = sqrt_segment_cut(z, shape.d)
    val = (-0.25 * z * z * p + 0.5 * a * b * z * w * r).real
    const = -b * b * a * a_dot / d2
    return (val + const) / mob.of(fluid)


def velocity_ellipse_constant_area(
    shape: Ellipse, a_dot: float, mob: Mobility, fluid: int, z: complex
) -> tuple[float, float]:
    """Velocity of the constant-area variant, -conj(dw/dz)."""
    if not isinstance(shape, Ellipse):
        raise FamilyError("constant-area variant exists for the ellipse only")
    z = complex(z)
    _validate_point(shape, fluid, z)
    p, r, _ = _crowdy_terms(shape, a_dot)
    a, b = shape.a, shape.b
    w = sqrt_segment_cut(z, shape.d)
    dw = -0.5 * z * p + 0.5 * a * b * r * (w + z * z / w)
    v = -dw.conjugate()
    return (v.real, v.imag)


def crowdy_segment_density(shape: Ellipse, a_dot: float, x: float) -> float:
    """Signed interfocal density mu of the constant-area variant (times k2)."""
    p_, r, d2 = _crowdy_terms(shape, a_dot)
    del p_
    dd = -r * d2 * d2
    d = shape.d
    return (
        shape.a * shape.b * dd / (d2 * d2) * (2.0 * x * x - d * d)
        / math.sqrt((d - x) * (d + x))
    )


# ---------------------------------------------------------------------------
# multivalued variation (cut location diagnostics)


def pressure_variation(
    shape: Shape,
    rates: ShapeRates,
    mob: Mobility,
    fluid: int,
    z: complex,
    which: str,
) -> float:
    """var_l p_j at z: difference of the two branch values of Re W_j.

    ``which`` selects the radical that flips ("exterior" for the branch
    points in Omega_1, "interior" for those in Omega_2).  Vanishes exactly
    on the correctly chosen cuts; the circle has none, so its variation is
    identically zero.
    """
    if which not in ("exterior", "interior"):
        raise ValueError(f"which must be 'exterior' or 'interior', got {which!r}")
    if isinstance(shape, Circle):
        return 0.0
    if isinstance(shape, Ellipse) and which == "exterior":
        raise ValueError("the ellipse has no exterior branch points")
    if isinstance(shape, NeumannOval) and which == "interior":
        raise ValueError("the Neumann interior singularities are poles, not cuts")
    flips = {"flip_exterior": which == "exterior", "flip_interior": which == "interior"}
    base = gauge_potential(shape, rates, z)
    other = gauge_potential(shape, rates, z, **flips)
    return (other - base) / mob.of(fluid)


# ---------------------------------------------------------------------------
# far field


def farfield_log_fit(
    shape: Shape,
    rates: ShapeRates,
    mob: Mobility,
    radii: tuple[float, float, float] = (1e5, 2e5, 4e5),
    n_angles: int = 64,
) -> tuple[float, float]:
    """Fit mean_{|z|=R} p1 = c_log * ln R + c0 + c1/R and return (c_log, c0).

    The circle average kills every decaying angular harmonic, so the basis
    captures the exact asymptotics; the 1/R term absorbs the tail of ray
    supports crossing the circle (Neumann, Cassini).
    """
    import numpy as np

    rs = [r * shape.scale for r in radii]
    means = []
    for r in rs:
        acc = 0.0
        for j in range(n_angles):
            th = 2.0 * math.pi * j / n_angles
            zz = complex(r * math.cos(th), r * math.sin(th))
            acc += pressure(shape, rates, mob, 1, zz)
        means.append(acc / n_angles)
    mat = np.array([[math.log(r), 1.0, 1.0 / r] for r in rs])
    sol = np.linalg.solve(mat, np.array(means))
    return float(sol[0]), float(sol[1])
