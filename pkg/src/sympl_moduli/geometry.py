"""Geometry of the symplectization R x (S^1 x S^2).

Coordinates are (s, t, theta, phi): s runs along the R factor, t along
the S^1 factor, and (theta, phi) are spherical angles on S^2.  The
contact form is

    alpha = -(1 - 3 cos^2 theta) dt - sqrt(6) cos(theta) sin^2(theta) dphi

and the symplectic form is omega = d(e^{-sqrt(6) s} alpha), which in
terms of the auxiliary functions

    f = e^{-sqrt(6) s} (1 - 3 cos^2 theta)
    h = sqrt(6) e^{-sqrt(6) s} cos(theta) sin^2(theta)

reads omega = dt ^ df + dphi ^ dh.  The almost complex structure J is
fixed by J d/dt = g d/df and J d/dphi = g sin^2(theta) d/dh with
g = sqrt(6) e^{-sqrt(6) s} (1 + 3 cos^4 theta)^{1/2}; the bilinear form
g^{-1} omega(., J.) is then the round product metric
ds^2 + dt^2 + dtheta^2 + sin^2(theta) dphi^2.

The ratio h/f depends on theta alone,

    lambda(theta) = sqrt(6) cos(theta) sin^2(theta) / (1 - 3 cos^2 theta),

and is strictly decreasing on each of the three components of (0, pi)
cut out by cos^2(theta) = 1/3; inverting it on a chosen component is
the basic root-finding primitive used by the invariant-curve code.
"""

from __future__ import annotations

import enum
import math
from dataclasses import dataclass

from .errors import PoleError, RangeError

SQRT6 = math.sqrt(6.0)

#: The angle with cos(theta) = 1/sqrt(3); together with pi - THETA_C it
#: bounds the three monotonicity components of lambda(theta).
THETA_C = math.acos(1.0 / math.sqrt(3.0))

_TWO_PI = 2.0 * math.pi


def _reduce_angle(x: float) -> float:
    """Reduce to [0, 2*pi)."""
    r = math.fmod(x, _TWO_PI)
    return r + _TWO_PI if r < 0.0 else r


@dataclass(frozen=True)
class Point4:
    """A point of R x (S^1 x S^2); t and phi are stored in [0, 2*pi)."""

    s: float
    t: float
    theta: float
    phi: float

    def __post_init__(self):
        if not 0.0 <= self.theta <= math.pi:
            raise ValueError(f"theta = {self.theta} outside [0, pi]")
        object.__setattr__(self, "t", _reduce_angle(self.t))
        object.__setattr__(self, "phi", _reduce_angle(self.phi))

    @property
    def at_pole(self) -> bool:
        return self.theta == 0.0 or self.theta == math.pi


@dataclass(frozen=True)
class Tangent4:
    """Coefficients on the coordinate frame (d/ds, d/dt, d/dtheta, d/dphi)."""

    v_s: float = 0.0
    v_t: float = 0.0
    v_theta: float = 0.0
    v_phi: float = 0.0

    def check_at(self, p: Point4) -> None:
        """The d/dphi direction degenerates at the poles."""
        if p.at_pole and self.v_phi != 0.0:
            raise ValueError("v_phi must vanish at theta in {0, pi}")


class BranchId(enum.Enum):
    """Monotonicity components of lambda(theta) on (0, pi).

    A: theta in (0, THETA_C), lambda ranges over (-inf, 0);
    B: theta in (THETA_C, pi - THETA_C), lambda ranges over all of R;
    C: theta in (pi - THETA_C, pi), lambda ranges over (0, +inf).
    """

    A = "A"
    B = "B"
    C = "C"


_BRANCH_INTERVAL = {
    BranchId.A: (0.0, THETA_C),
    BranchId.B: (THETA_C, math.pi - THETA_C),
    BranchId.C: (math.pi - THETA_C, math.pi),
}


def coord_functions(p: Point4) -> tuple[float, float, float]:
    """Return (f, h, g) at p.

    f = e^{-sqrt6 s}(1 - 3 cos^2 theta), h = sqrt6 e^{-sqrt6 s} cos sin^2,
    g = sqrt6 e^{-sqrt6 s}(1 + 3 cos^4 theta)^{1/2} > 0.
    """
    c = math.cos(p.theta)
    s2 = math.sin(p.theta) ** 2
    e = math.exp(-SQRT6 * p.s)
    f = e * (1.0 - 3.0 * c * c)
    h = SQRT6 * e * c * s2
    g = SQRT6 * e * math.sqrt(1.0 + 3.0 * c ** 4)
    return f, h, g


def contact_eval(p: Point4, v: Tangent4) -> float:
    """Evaluate the contact form: alpha(v) = -(1-3c^2) v_t - sqrt6 c sin^2 v_phi."""
    v.check_at(p)
    c = math.cos(p.theta)
    s2 = math.sin(p.theta) ** 2
    return -(1.0 - 3.0 * c * c) * v.v_t - SQRT6 * c * s2 * v.v_phi


def _fh_jacobian(p: Point4) -> tuple[float, float, float, float]:
    """Partials (f_s, f_theta, h_s, h_theta) of (f, h) in (s, theta)."""
    c = math.cos(p.theta)
    sn = math.sin(p.theta)
    e = math.exp(-SQRT6 * p.s)
    f_s = -SQRT6 * e * (1.0 - 3.0 * c * c)
    f_th = 6.0 * e * c * sn
    h_s = -6.0 * e * c * sn * sn
    h_th = SQRT6 * e * sn * (3.0 * c * c - 1.0)
    return f_s, f_th, h_s, h_th


def omega_eval(p: Point4, v: Tangent4, w: Tangent4) -> float:
    """Evaluate omega = dt ^ df + dphi ^ dh on the pair (v, w)."""
    v.check_at(p)
    w.check_at(p)
    f_s, f_th, h_s, h_th = _fh_jacobian(p)
    df_v = f_s * v.v_s + f_th * v.v_theta
    df_w = f_s * w.v_s + f_th * w.v_theta
    dh_v = h_s * v.v_s + h_th * v.v_theta
    dh_w = h_s * w.v_s + h_th * w.v_theta
    return v.v_t * df_w - df_v * w.v_t + v.v_phi * dh_w - dh_v * w.v_phi


def reeb_vector(p: Point4) -> Tangent4:
    """The Reeb vector field: alpha(v) = 1 and dalpha(v, .) = 0.

    Solving those two conditions in the coordinate frame gives

        v = -(1 + 3 cos^4 theta)^{-1} [(1 - 3 cos^2 theta) d/dt
                                       + sqrt(6) cos(theta) d/dphi],

    which is independent of s, as a Reeb field must be.  At the poles
    the degenerate d/dphi coefficient is dropped.
    """
    c = math.cos(p.theta)
    n = 1.0 + 3.0 * c ** 4
    v_t = -(1.0 - 3.0 * c * c) / n
    v_phi = -SQRT6 * c / n
    if p.at_pole:
        v_phi = 0.0
    return Tangent4(v_t=v_t, v_phi=v_phi)


def apply_J(p: Point4, v: Tangent4) -> Tangent4:
    """Apply the almost complex structure J to v at p.

    J is defined on the (t, f, phi, h) frame by J d/dt = g d/df and
    J d/dphi = g sin^2(theta) d/dh (hence J d/df = -g^{-1} d/dt and
    J d/dh = -(g sin^2 theta)^{-1} d/dphi); converting d/df, d/dh to the
    (s, theta) frame means inverting the 2x2 Jacobian of (f, h) with
    respect to (s, theta).  That Jacobian is singular on the theta in
    {0, pi} locus, where this chart-level J is refused.
    """
    if p.at_pole:
        raise PoleError("J is not defined in these coordinates at theta in {0, pi}")
    v.check_at(p)
    c = math.cos(p.theta)
    s2 = math.sin(p.theta) ** 2
    e = math.exp(-SQRT6 * p.s)
    g = SQRT6 * e * math.sqrt(1.0 + 3.0 * c ** 4)
    f_s, f_th, h_s, h_th = _fh_jacobian(p)
    det = f_s * h_th - f_th * h_s

    # (t, phi) components are rotated into the (s, theta) plane.
    a_f = g * v.v_t            # coefficient on d/df
    a_h = g * s2 * v.v_phi     # coefficient on d/dh
    out_s = (h_th * a_f - f_th * a_h) / det
    out_th = (-h_s * a_f + f_s * a_h) / det

    # (s, theta) components are rotated into the (t, phi) plane.
    b_f = f_s * v.v_s + f_th * v.v_theta
    b_h = h_s * v.v_s + h_th * v.v_theta
    out_t = -b_f / g
    out_phi = -b_h / (g * s2)

    return Tangent4(v_s=out_s, v_t=out_t, v_theta=out_th, v_phi=out_phi)


def lambda_of_theta(theta: float) -> float:
    """The ratio h/f = sqrt6 cos(theta) sin^2(theta)/(1 - 3 cos^2 theta)."""
    c = math.cos(theta)
    return SQRT6 * c * math.sin(theta) ** 2 / (1.0 - 3.0 * c * c)


def theta_from_lambda(lam: float, branch: BranchId,
                      max_iter: int = 200) -> float:
    """Invert lambda(theta) on the given branch by bisection.

    Valid because lambda is strictly decreasing on each branch (its
    theta-derivative is -sqrt6 sin(theta)(1+3cos^4)(1-3cos^2)^{-2} < 0).
    The returned angle is accurate to well below 1e-12: the bracketing
    interval is halved max_iter times, ending below 1e-13.
    """
    if not math.isfinite(lam):
        raise RangeError(f"lambda = {lam} is not finite")
    if branch is BranchId.A and not lam < 0.0:
        raise RangeError(f"branch A needs lambda < 0, got {lam}")
    if branch is BranchId.C and not lam > 0.0:
        raise RangeError(f"branch C needs lambda > 0, got {lam}")

    lo, hi = _BRANCH_INTERVAL[branch]
    for _ in range(max_iter):
        if hi - lo < 1e-14:
            break
        mid = 0.5 * (lo + hi)
        if lambda_of_theta(mid) > lam:
            lo = mid        # decreasing: the root is to the right
        else:
            hi = mid
    return 0.5 * (lo + hi)
