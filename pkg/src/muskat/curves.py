"""The four interface families and their Schwarz functions.

Each family is a closed algebraic curve Gamma(t) = {g(x,y,t) = 0} whose
Schwarz function S(z,t) (the analytic continuation of z-bar off the curve)
has a small, known set of poles and branch points.  Branch conventions are
chosen once and used consistently by every module:

* ``sqrt(z^2 - c^2)`` is cut exactly on the real segment [-c, c] and is
  asymptotic to ``z`` at infinity (``z * principal_sqrt(1 - c^2/z^2)``).
* ``sqrt(z^2 + y0^2)``-type radicals are cut on the vertical rays
  ``{iy : |y| >= y0}`` and are positive on the real axis (product of two
  principal square roots, one per branch point).

The cuts therefore coincide with the sink/source supports built in
``muskat.motherbody``, which keeps every pressure field single-valued off
the supports.
"""

from __future__ import annotations

import cmath
import math
from dataclasses import dataclass

from .errors import (
    AdmissibilityError,
    BranchCutError,
    InvalidCount,
    NotOnBoundaryError,
    PoleError,
)

TWO_PI = 2.0 * math.pi

# Relative tolerance used to snap points onto cuts/poles.
_SING_TOL = 1e-12
# Boundary-membership tolerance, scaled by the characteristic length a.
BOUNDARY_RTOL = 1e-9


# ---------------------------------------------------------------------------
# shapes


@dataclass(frozen=True)
class Circle:
    a: float

    def __post_init__(self):
        if not self.a > 0.0:
            raise ValueError(f"circle radius a must be positive, got a={self.a}")

    @property
    def scale(self) -> float:
        return self.a


@dataclass(frozen=True)
class Ellipse:
    a: float
    b: float

    def __post_init__(self):
        if not self.a > self.b > 0.0:
            raise ValueError(f"ellipse needs a > b > 0, got a={self.a}, b={self.b}")

    @property
    def d(self) -> float:
        """Half the interfocal distance."""
        return math.sqrt(self.a * self.a - self.b * self.b)

    @property
    def scale(self) -> float:
        return self.a


@dataclass(frozen=True)
class NeumannOval:
    """Quartic (x^2+y^2)^2 = a^2 x^2 + b^2 y^2, one loop for a > b > 0."""

    a: float
    b: float

    def __post_init__(self):
        if not self.a > self.b > 0.0:
            raise ValueError(
                f"Neumann oval needs a > b > 0, got a={self.a}, b={self.b}"
            )

    @property
    def d(self) -> float:
        return math.sqrt(self.a * self.a - self.b * self.b)

    @property
    def scale(self) -> float:
        return self.a


@dataclass(frozen=True)
class CassiniOval:
    """Quartic (x^2+y^2)^2 - 2 b^2 (x^2-y^2) = a^4 - b^4, one loop for a > b."""

    a: float
    b: float

    def __post_init__(self):
        if not self.a > self.b > 0.0:
            raise ValueError(
                f"Cassini oval needs a > b > 0 (a = b is the lemniscate), "
                f"got a={self.a}, b={self.b}"
            )

    @property
    def branch_y(self) -> float:
        """Height of the exterior branch points +-i sqrt(a^4-b^4)/b."""
        return math.sqrt(self.a**4 - self.b**4) / self.b

    @property
    def modulus(self) -> float:
        """Elliptic modulus k = sqrt(a^4-b^4)/a^2 of the oval's field."""
        return math.sqrt(self.a**4 - self.b**4) / self.a**2

    @property
    def scale(self) -> float:
        return self.a


Shape = Circle | Ellipse | NeumannOval | CassiniOval


@dataclass(frozen=True)
class ShapeRates:
    a_dot: float
    b_dot: float = 0.0


@dataclass(frozen=True)
class Mobility:
    """Darcy mobilities k_j = h^2/(12 nu_j); fluid 1 outside, fluid 2 inside."""

    k1: float
    k2: float

    def __post_init__(self):
        if not (self.k1 > 0.0 and self.k2 > 0.0):
            raise ValueError(f"mobilities must be positive, got {self.k1}, {self.k2}")

    def of(self, fluid: int) -> float:
        if fluid == 1:
            return self.k1
        if fluid == 2:
            return self.k2
        raise ValueError(f"fluid index must be 1 or 2, got {fluid}")


def check_rates(shape: Shape, rates: ShapeRates) -> None:
    """Raise AdmissibilityError unless the rates keep the family invariant.

    Circle: b_dot = 0.  Ellipse: constant eccentricity (a_dot*b = b_dot*a).
    Neumann: constant d (a*a_dot = b*b_dot).  Cassini: b_dot = 0.
    """
    ad, bd = rates.a_dot, rates.b_dot
    if isinstance(shape, Circle):
        if abs(bd) > 1e-12 * max(1.0, abs(ad)):
            raise AdmissibilityError("circle rates must have b_dot = 0")
    elif isinstance(shape, Ellipse):
        res = abs(bd * shape.a - ad * shape.b)
        if res > 1e-9 * shape.a * (abs(ad) + abs(bd)):
            raise AdmissibilityError(
                "ellipse rates must preserve eccentricity (b_dot*a = a_dot*b)"
            )
    elif isinstance(shape, NeumannOval):
        res = abs(shape.a * ad - shape.b * bd)
        if res > 1e-9 * (shape.a * abs(ad) + shape.b * abs(bd)):
            raise AdmissibilityError(
                "Neumann rates must keep d constant (a*a_dot = b*b_dot)"
            )
    elif isinstance(shape, CassiniOval):
        if abs(bd) > 1e-12 * max(1.0, abs(ad)):
            raise AdmissibilityError("Cassini rates must have b_dot = 0")
    else:
        raise TypeError(f"unknown shape {shape!r}")


def rates_for(shape: Shape, a_dot: float) -> ShapeRates:
    """Admissible rates with the given a_dot (b_dot fixed by the family)."""
    if isinstance(shape, Circle) or isinstance(shape, CassiniOval):
        return ShapeRates(a_dot, 0.0)
    if isinstance(shape, Ellipse):
        return ShapeRates(a_dot, a_dot * shape.b / shape.a)
    if isinstance(shape, NeumannOval):
        return ShapeRates(a_dot, shape.a * a_dot / shape.b)
    raise TypeError(f"unknown shape {shape!r}")


# ---------------------------------------------------------------------------
# branch-managed radicals shared with fields/motherbody


def sqrt_segment_cut(z: complex, c: float) -> complex:
    """sqrt(z^2 - c^2), cut on [-c, c], asymptotic to z at infinity."""
    if z == 0:
        return complex(0.0, c)  # upper-side limit; Re(z * .) -> 0 anyway
    w = c / z
    return z * cmath.sqrt(1.0 - w * w)


def sqrt_vertical_cuts(z: complex, y0: float) -> complex:
    """sqrt(z^2 + y0^2), cut on the rays {iy: |y| >= y0}, positive on R."""
    return cmath.sqrt(1j * (z - 1j * y0)) * cmath.sqrt(-1j * (z + 1j * y0))


# ---------------------------------------------------------------------------
# implicit equation


def implicit_eval(shape: Shape, x: float, y: float) -> float:
    """g(x, y, t): zero on Gamma, negative strictly inside Omega_2.

    The Neumann quartic also vanishes at the origin (an isolated point of
    the real zero set that lies strictly inside the oval).
    """
    r2 = x * x + y * y
    if isinstance(shape, Circle):
        return r2 - shape.a**2
    if isinstance(shape, Ellipse):
        return (x / shape.a) ** 2 + (y / shape.b) ** 2 - 1.0
    if isinstance(shape, NeumannOval):
        return r2 * r2 - shape.a**2 * x * x - shape.b**2 * y * y
    if isinstance(shape, CassiniOval):
        b2 = shape.b**2
        return r2 * r2 - 2.0 * b2 * (x * x - y * y) - (shape.a**4 - b2 * b2)
    raise TypeError(f"unknown shape {shape!r}")


def implicit_grad(shape: Shape, x: float, y: float) -> tuple[float, float]:
    """Gradient of g; points outward along Gamma."""
    r2 = x * x + y * y
    if isinstance(shape, Circle):
        return 2.0 * x, 2.0 * y
    if isinstance(shape, Ellipse):
        return 2.0 * x / shape.a**2, 2.0 * y / shape.b**2
    if isinstance(shape, NeumannOval):
        return (
            4.0 * x * r2 - 2.0 * shape.a**2 * x,
            4.0 * y * r2 - 2.0 * shape.b**2 * y,
        )
    if isinstance(shape, CassiniOval):
        b2 = shape.b**2
        return 4.0 * x * r2 - 4.0 * b2 * x, 4.0 * y * r2 + 4.0 * b2 * y
    raise TypeError(f"unknown shape {shape!r}")


def implicit_dt(shape: Shape, rates: ShapeRates, x: float, y: float) -> float:
    """Time derivative of g at fixed (x, y) under the given rates."""
    ad, bd = rates.a_dot, rates.b_dot
    if isinstance(shape, Circle):
        return -2.0 * shape.a * ad
    if isinstance(shape, Ellipse):
        return -2.0 * x * x * ad / shape.a**3 - 2.0 * y * y * bd / shape.b**3
    if isinstance(shape, NeumannOval):
        return -2.0 * shape.a * ad * x * x - 2.0 * shape.b * bd * y * y
    if isinstance(shape, CassiniOval):
        return -4.0 * shape.b * bd * (x * x - y * y) - (
            4.0 * shape.a**3 * ad - 4.0 * shape.b**3 * bd
        )
    raise TypeError(f"unknown shape {shape!r}")


def boundary_distance(shape: Shape, z: complex) -> float:
    """First-order estimate |g| / |grad g| of the distance from z to Gamma."""
    g = implicit_eval(shape, z.real, z.imag)
    gx, gy = implicit_grad(shape, z.real, z.imag)
    n = math.hypot(gx, gy)
    if n == 0.0:
        return abs(g) ** 0.25 if g != 0.0 else 0.0
    return abs(g) / n


def is_inside(shape: Shape, z: complex) -> bool:
    """True when z lies in the closed interior domain Omega_2."""
    if isinstance(shape, NeumannOval):
        # g = 0 at the isolated origin; classify by the polar radius instead.
        r2 = z.real**2 + z.imag**2
        if r2 == 0.0:
            return True
        c2 = z.real**2 / r2
        return r2 <= shape.a**2 * c2 + shape.b**2 * (1.0 - c2)
    return implicit_eval(shape, z.real, z.imag) <= 0.0


# ---------------------------------------------------------------------------
# Schwarz function and derivatives


def _check_singular(shape: Shape, z: complex) -> None:
    tol = _SING_TOL * shape.scale
    if isinstance(shape, Circle):
        if abs(z) <= tol:
            raise PoleError("circle Schwarz function has a pole at z = 0")
    elif isinstance(shape, Ellipse):
        if abs(z.imag) <= tol and abs(z.real) <= shape.d + tol:
            raise BranchCutError("on the interfocal cut [-d, d]")
    elif isinstance(shape, NeumannOval):
        half_d = 0.5 * shape.d
        if abs(z - half_d) <= tol or abs(z + half_d) <= tol:
            raise PoleError("Neumann Schwarz function has poles at z = +-d/2")
        y0 = shape.a * shape.b / shape.d
        if abs(z.real) <= tol and abs(z.imag) >= y0 - tol:
            raise BranchCutError("on the vertical cuts beyond +-i a b / d")
    elif isinstance(shape, CassiniOval):
        if abs(z.imag) <= tol and abs(z.real) <= shape.b + tol:
            raise BranchCutError("on the segment cut [-b, b]")
        if abs(z.real) <= tol and abs(z.imag) >= shape.branch_y - tol:
            raise BranchCutError("on the vertical cuts beyond the branch points")
    else:
        raise TypeError(f"unknown shape {shape!r}")


def schwarz(shape: Shape, z: complex) -> complex:
    """S(z, t) on the branch with S(z) = conj(z) for every z on Gamma."""
    z = complex(z)
    _check_singular(shape, z)
    if isinstance(shape, Circle):
        return shape.a**2 / z
    if isinstance(shape, Ellipse):
        a, b, d = shape.a, shape.b, shape.d
        w = sqrt_segment_cut(z, d)
        return ((a * a + b * b) * z - 2.0 * a * b * w) / (d * d)
    if isinstance(shape, NeumannOval):
        a, b, d = shape.a, shape.b, shape.d
        g = d * sqrt_vertical_cuts(z, a * b / d)
        return (z * (a * a + b * b) + 2.0 * z * g) / (4.0 * z * z - d * d)
    if isinstance(shape, CassiniOval):
        g = shape.b * sqrt_vertical_cuts(z, shape.branch_y)
        f = sqrt_segment_cut(z, shape.b)
        return g / f
    raise TypeError(f"unknown shape {shape!r}")


def schwarz_dz(shape: Shape, z: complex) -> complex:
    """Exact dS/dz on the same branch as ``schwarz``."""
    z = complex(z)
    _check_singular(shape, z)
    if isinstance(shape, Circle):
        return -shape.a**2 / (z * z)
    if isinstance(shape, Ellipse):
        a, b, d = shape.a, shape.b, shape.d
        w = sqrt_segment_cut(z, d)
        return ((a * a + b * b) - 2.0 * a * b * z / w) / (d * d)
    if isinstance(shape, NeumannOval):
        a, b, d = shape.a, shape.b, shape.d
        g = d * sqrt_vertical_cuts(z, a * b / d)
        den = 4.0 * z * z - d * d
        s = (z * (a * a + b * b) + 2.0 * z * g) / den
        num_dz = (a * a + b * b) + 2.0 * g + 2.0 * z * (d * d * z / g)
        return num_dz / den - 8.0 * z * s / den
    if isinstance(shape, CassiniOval):
        g = shape.b * sqrt_vertical_cuts(z, shape.branch_y)
        f = sqrt_segment_cut(z, shape.b)
        return -shape.a**4 * z / (g * f * (z * z - shape.b**2))
    raise TypeError(f"unknown shape {shape!r}")


def schwarz_dot(shape: Shape, rates: ShapeRates, z: complex) -> complex:
    """dS/dt at fixed z under admissible parameter motion."""
    check_rates(shape, rates)
    z = complex(z)
    _check_singular(shape, z)
    ad, bd = rates.a_dot, rates.b_dot
    if isinstance(shape, Circle):
        return 2.0 * shape.a * ad / z
    if isinstance(shape, Ellipse):
        a, b, d = shape.a, shape.b, shape.d
        d2 = d * d
        p = 2.0 * a * ad + 2.0 * b * bd          # d(a^2+b^2)/dt
        m = ad * b + a * bd                      # d(ab)/dt
        dd = 2.0 * a * ad - 2.0 * b * bd         # d(d^2)/dt
        w = sqrt_segment_cut(z, d)
        s = ((a * a + b * b) * z - 2.0 * a * b * w) / d2
        # product rule on ((a^2+b^2) z - 2ab w)/d^2 with dw/dt = -dd/(2w)
        return (p * z - 2.0 * m * w + a * b * dd / w) / d2 - s * dd / d2
    if isinstance(shape, NeumannOval):
        a, b, d = shape.a, shape.b, shape.d
        p = 2.0 * a * ad + 2.0 * b * bd                      # d(a^2+b^2)/dt
        q = 2.0 * a * ad * b * b + 2.0 * a * a * b * bd      # d(a^2 b^2)/dt
        g = d * sqrt_vertical_cuts(z, a * b / d)
        den = 4.0 * z * z - d * d
        return p * z / den + q * z / (den * g)
    if isinstance(shape, CassiniOval):
        g = shape.b * sqrt_vertical_cuts(z, shape.branch_y)
        f = sqrt_segment_cut(z, shape.b)
        return 2.0 * shape.a**3 * ad / (g * f)
    raise TypeError(f"unknown shape {shape!r}")


# ---------------------------------------------------------------------------
# boundary parameterization, area, normal velocity


def boundary_radius(shape: Shape, theta: float) -> float:
    """Polar radius r(theta) of Gamma for the four families."""
    c = math.cos(theta)
    s = math.sin(theta)
    if isinstance(shape, Circle):
        return shape.a
    if isinstance(shape, Ellipse):
        return 1.0 / math.hypot(c / shape.a, s / shape.b)
    if isinstance(shape, NeumannOval):
        return math.sqrt(shape.a**2 * c * c + shape.b**2 * s * s)
    if isinstance(shape, CassiniOval):
        b2 = shape.b**2
        c2t = math.cos(2.0 * theta)
        r2 = b2 * c2t + math.sqrt(b2 * b2 * c2t * c2t + shape.a**4 - b2 * b2)
        return math.sqrt(r2)
    raise TypeError(f"unknown shape {shape!r}")


def boundary_point(shape: Shape, theta: float) -> complex:
    if isinstance(shape, Ellipse):
        # standard trig parameterization; theta is not the polar angle here
        return complex(shape.a * math.cos(theta), shape.b * math.sin(theta))
    r = boundary_radius(shape, theta)
    return complex(r * math.cos(theta), r * math.sin(theta))


def boundary_points(shape: Shape, n: int) -> list[complex]:
    """n points on Gamma(t), counterclockwise from the positive real axis."""
    if n < 3:
        raise InvalidCount(f"need at least 3 boundary points, got {n}")
    return [boundary_point(shape, TWO_PI * j / n) for j in range(n)]


def area(shape: Shape) -> float:
    """Area of the interior domain Omega_2.

    Closed forms exist for all but the Cassini oval, which is integrated by
    Green's theorem in polar form, A = (1/2) Int r(theta)^2 dtheta, with the
    periodic trapezoid rule refined to relative 1e-12.
    """
    if isinstance(shape, Circle):
        return math.pi * shape.a**2
    if isinstance(shape, Ellipse):
        return math.pi * shape.a * shape.b
    if isinstance(shape, NeumannOval):
        return 0.5 * math.pi * (shape.a**2 + shape.b**2)
    if isinstance(shape, CassiniOval):
        n = 512
        prev = _polar_area(shape, n)
        for _ in range(8):
            n *= 2
            cur = _polar_area(shape, n)
            if abs(cur - prev) <= 1e-12 * abs(cur):
                return cur
            prev = cur
        return prev
    raise TypeError(f"unknown shape {shape!r}")


def _polar_area(shape: Shape, n: int) -> float:
    acc = 0.0
    for j in range(n):
        r = boundary_radius(shape, TWO_PI * j / n)
        acc += r * r
    return 0.5 * acc * TWO_PI / n


def require_on_boundary(shape: Shape, z: complex) -> None:
    tol = BOUNDARY_RTOL * shape.scale
    if boundary_distance(shape, z) > tol:
        raise NotOnBoundaryError(
            f"point {z} is {boundary_distance(shape, z):.3e} from Gamma "
            f"(tolerance {tol:.3e})"
        )


def normal_velocity(shape: Shape, rates: ShapeRates, z: complex) -> float:
    """Outward normal velocity v_n = -i dS/dt / sqrt(4 dS/dz) on Gamma.

    Positive where the interior domain locally expands.  The square-root
    sign is fixed by matching 1/sqrt(S_z) against the counterclockwise
    tangent (i.e. against the outward normal computed from grad g).
    """
    z = complex(z)
    require_on_boundary(shape, z)
    sdot = schwarz_dot(shape, rates, z)
    sz = schwarz_dz(shape, z)
    tangent = 1.0 / cmath.sqrt(sz)
    gx, gy = implicit_grad(shape, z.real, z.imag)
    ccw = complex(-gy, gx)  # i * (gx + i gy)
    if tangent.real * ccw.real + tangent.imag * ccw.imag < 0.0:
        tangent = -tangent
    return (-0.5j * sdot * tangent).real


def normal_velocity_levelset(shape: Shape, rates: ShapeRates, z: complex) -> float:
    """Level-set identity v_n = -g_t / |grad g|; independent of the Schwarz
    route and used as its oracle."""
    z = complex(z)
    gt = implicit_dt(shape, rates, z.real, z.imag)
    gx, gy = implicit_grad(shape, z.real, z.imag)
    return -gt / math.hypot(gx, gy)
