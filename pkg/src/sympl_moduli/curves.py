"""The explicit torus-invariant subvarieties and their profile curves.

Seven families of cylinders, planes and orbit cylinders are invariant
under a one-parameter subgroup of the torus acting on S^1 x S^2.  The
static families have closed-form parameterizations; the genuinely
one-parameter families (both labeled by a coprime pair (p, p') with
p > 0) satisfy, in the parameterization (t = tau, f = u,
phi = phi0 + (p'/p) tau, h = h(u)), the profile equation

    dh/du = (p'/p) sin^2(theta),

where theta is recovered from h/f = lambda(theta).  For fixed label the
angle theta is strictly monotone along a profile and confined to one of
the ranges cut out by the constant solutions {0, theta0, theta0_bar,
pi}; on any such range s = s(theta) is an antiderivative of

    - (1 - 3 cos^2 th + sqrt6 a cos th sin^2 th)
      / ((sqrt6 cos th - a (1 - 3 cos^2 th)) sin th),     a = p'/p,

which this module integrates by adaptive quadrature, recovering
u = f = e^{-sqrt6 s}(1 - 3 cos^2 theta) algebraically afterwards.  That
avoids the stiffness of the u-parameterized equation near the fixed
angles, where s diverges.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Optional

from scipy.integrate import quad

from .errors import (BranchError, DomainError, InvalidLabel, WrongExample)
from .geometry import SQRT6, BranchId, Point4, theta_from_lambda
from .reeb import ReebOrbit, OrbitKind, classify_pair, solve_theta0, solve_theta0_bar

_TWO_PI = 2.0 * math.pi

#: Default clipping of a theta range away from its fixed-angle endpoints.
DEFAULT_CLIP = 1e-4

#: Default absolute quadrature tolerance per subinterval.
DEFAULT_QUAD_TOL = 1e-10


@dataclass(frozen=True)
class ThetaRange:
    """One monotonicity range of theta for a profile family."""

    lo: float
    hi: float
    lo_label: str   # "pole0" | "theta0" | "theta0_bar" | "polePi"
    hi_label: str


def classify_branches(p: int, p_prime: int) -> list[ThetaRange]:
    """The theta ranges available to the (p, p') profile family.

    For 2 p'^2 < 3 p^2 there are two ranges, (0, theta0) and
    (theta0, pi).  Otherwise there are three, with theta0_bar between
    theta0 and the pole on the side of p' (the order of theta0 and
    theta0_bar mirrors with the sign of p').
    """
    if p <= 0:
        raise ValueError("profile families need p > 0")
    ok, why = classify_pair(p, p_prime)
    if not ok:
        raise InvalidLabel(f"({p}, {p_prime}): {why}")
    th0 = solve_theta0(p, p_prime)
    if 2 * p_prime * p_prime < 3 * p * p:
        return [ThetaRange(0.0, th0, "pole0", "theta0"),
                ThetaRange(th0, math.pi, "theta0", "polePi")]
    thb = solve_theta0_bar(p, p_prime)
    if p_prime > 0:
        return [ThetaRange(0.0, th0, "pole0", "theta0"),
                ThetaRange(th0, thb, "theta0", "theta0_bar"),
                ThetaRange(thb, math.pi, "theta0_bar", "polePi")]
    return [ThetaRange(0.0, thb, "pole0", "theta0_bar"),
            ThetaRange(thb, th0, "theta0_bar", "theta0"),
            ThetaRange(th0, math.pi, "theta0", "polePi")]


def profile_ds_dtheta(p: int, p_prime: int, theta: float) -> float:
    """ds/dtheta along a profile, away from the fixed angles."""
    a = p_prime / p
    c = math.cos(theta)
    sn = math.sin(theta)
    num = 1.0 - 3.0 * c * c + SQRT6 * a * c * sn * sn
    den = (SQRT6 * c - a * (1.0 - 3.0 * c * c)) * sn
    return -num / den


def _fixed_angles(p: int, p_prime: int) -> list[float]:
    out = [0.0, math.pi, solve_theta0(p, p_prime)]
    if 2 * p_prime * p_prime > 3 * p * p:
        out.append(solve_theta0_bar(p, p_prime))
    return sorted(out)


def _common_range(p: int, p_prime: int, a: float, b: float) -> None:
    """Raise unless [a, b] sits strictly inside one fixed-angle-free range."""
    lo, hi = min(a, b), max(a, b)
    angles = _fixed_angles(p, p_prime)
    for left, right in zip(angles, angles[1:]):
        if left < lo and hi < right:
            return
    raise BranchError(
        f"[{lo}, {hi}] is not strictly inside a fixed-angle-free range of "
        f"({p}, {p_prime}); fixed angles: {angles}")


def s_of_theta(p: int, p_prime: int, theta_ref: float, s_ref: float,
               theta: float, quad_tol: float = DEFAULT_QUAD_TOL) -> float:
    """Integrate ds/dtheta from theta_ref to theta, starting at s_ref.

    Both angles must lie strictly inside the same fixed-angle-free
    range; the integrand is smooth there and the adaptive quadrature is
    run at absolute tolerance quad_tol.
    """
    if theta == theta_ref:
        return s_ref
    _common_range(p, p_prime, theta_ref, theta)
    val = quad(lambda th: profile_ds_dtheta(p, p_prime, th),
               theta_ref, theta, epsabs=quad_tol, epsrel=1e-12,
               limit=200, full_output=1)[0]
    return s_ref + val


@dataclass(frozen=True)
class CurveSpec:
    """Parameters of one invariant subvariety.

    example_id 1: an orbit cylinder R x gamma (orbit field set);
    2: the plane t = t0, f = -kappa < 0 (sign_p_prime picks the pole);
    3: the cylinder t = t0, f = kappa > 0;
    4: the cylinder phi = phi0, h = kappa != 0;
    5/6/7: a profile family member, labeled by p > 0 coprime to p',
    the angle range index from classify_branches, the torus phase phi0
    and the anchor value of s.
    """

    example_id: int
    orbit: Optional[ReebOrbit] = None
    t0: float = 0.0
    kappa: float = 0.0
    sign_p_prime: int = 1
    phi0: float = 0.0
    p: int = 0
    p_prime: int = 0
    range_id: int = 0
    s_anchor: float = 0.0
    theta_anchor: Optional[float] = None

    @classmethod
    def example1(cls, orbit: ReebOrbit) -> "CurveSpec":
        return cls(example_id=1, orbit=orbit)

    @classmethod
    def example2(cls, t0: float, kappa: float, sign_p_prime: int) -> "CurveSpec":
        if kappa <= 0:
            raise ValueError("the plane family needs kappa > 0")
        if sign_p_prime not in (-1, 1):
            raise ValueError("sign_p_prime is +-1")
        return cls(example_id=2, t0=t0, kappa=kappa, sign_p_prime=sign_p_prime)

    @classmethod
    def example3(cls, t0: float, kappa: float) -> "CurveSpec":
        if kappa <= 0:
            raise ValueError("this cylinder family needs kappa > 0")
        return cls(example_id=3, t0=t0, kappa=kappa)

    @classmethod
    def example4(cls, phi0: float, kappa: float) -> "CurveSpec":
        if kappa == 0:
            raise ValueError("this cylinder family needs kappa != 0")
        return cls(example_id=4, phi0=phi0, kappa=kappa)

    @classmethod
    def profile(cls, p: int, p_prime: int, range_id: int, phi0: float = 0.0,
                s_anchor: float = 0.0,
                theta_anchor: Optional[float] = None) -> "CurveSpec":
        ranges = classify_branches(p, p_prime)
        if not 0 <= range_id < len(ranges):
            raise ValueError(f"range_id {range_id} out of range")
        rid = ranges[range_id]
        endpoint_labels = {rid.lo_label, rid.hi_label}
        if endpoint_labels == {"theta0", "theta0_bar"}:
            example_id = 6
        elif "theta0_bar" in endpoint_labels:
            example_id = 7
        else:
            example_id = 5
        return cls(example_id=example_id, p=p, p_prime=p_prime,
                   range_id=range_id, phi0=phi0, s_anchor=s_anchor,
                   theta_anchor=theta_anchor)

    def theta_range(self) -> ThetaRange:
        if self.example_id not in (5, 6, 7):
            raise WrongExample("only profile families carry a theta range")
        return classify_branches(self.p, self.p_prime)[self.range_id]

    def anchor_angle(self) -> float:
        rng = self.theta_range()
        if self.theta_anchor is not None:
            if not rng.lo < self.theta_anchor < rng.hi:
                raise BranchError("theta_anchor outside the range")
            return self.theta_anchor
        return 0.5 * (rng.lo + rng.hi)


@dataclass(frozen=True)
class TraceSample:
    s: float
    t: float
    theta: float
    phi: float
    f: float
    h: float


@dataclass(frozen=True)
class Trace:
    spec: CurveSpec
    samples: tuple[TraceSample, ...]

    def write_csv(self, path) -> None:
        with open(path, "w", newline="") as fp:
            fp.write("s,t,theta,phi,f,h\n")
            for r in self.samples:
                fp.write(",".join(f"{x:.12g}" for x in
                                  (r.s, r.t, r.theta, r.phi, r.f, r.h)) + "\n")


def _sample(s: float, theta: float, t: float, phi: float) -> TraceSample:
    c = math.cos(theta)
    e = math.exp(-SQRT6 * s)
    return TraceSample(s=s, t=t % _TWO_PI, theta=theta, phi=phi % _TWO_PI,
                       f=e * (1.0 - 3.0 * c * c),
                       h=SQRT6 * e * c * math.sin(theta) ** 2)


def integrate_profile(p: int, p_prime: int, range_id: int,
                      s_anchor: float = 0.0, n_samples: int = 1000,
                      phi0: float = 0.0, clip: float = DEFAULT_CLIP,
                      quad_tol: float = DEFAULT_QUAD_TOL,
                      theta_anchor: Optional[float] = None) -> Trace:
    """Trace one profile cylinder across a theta range.

    Samples theta uniformly on [lo + clip, hi - clip] (s diverges at the
    fixed angles), accumulates s by per-subinterval quadrature from the
    anchor angle (the range midpoint unless theta_anchor is given,
    where s = s_anchor), and recovers f and h algebraically.  Rows come
    out in increasing theta order, so theta is strictly monotone.
    """
    if n_samples < 2:
        raise ValueError("need at least two samples")
    spec = CurveSpec.profile(p, p_prime, range_id, phi0=phi0,
                             s_anchor=s_anchor, theta_anchor=theta_anchor)
    rng = spec.theta_range()
    lo, hi = rng.lo + clip, rng.hi - clip
    if not lo < hi:
        raise BranchError("clip swallowed the whole range")
    anchor = spec.anchor_angle()
    thetas = [lo + (hi - lo) * i / (n_samples - 1) for i in range(n_samples)]

    # Accumulate s across neighbouring samples, seeding from the anchor.
    i_anchor = min(range(n_samples), key=lambda i: abs(thetas[i] - anchor))
    s_vals = [0.0] * n_samples
    s_vals[i_anchor] = s_of_theta(p, p_prime, anchor, s_anchor,
                                  thetas[i_anchor], quad_tol=quad_tol)
    for i in range(i_anchor + 1, n_samples):
        step = quad(lambda th: profile_ds_dtheta(p, p_prime, th),
                    thetas[i - 1], thetas[i], epsabs=quad_tol,
                    epsrel=1e-12, limit=200, full_output=1)[0]
        s_vals[i] = s_vals[i - 1] + step
    for i in range(i_anchor - 1, -1, -1):
        step = quad(lambda th: profile_ds_dtheta(p, p_prime, th),
                    thetas[i], thetas[i + 1], epsabs=quad_tol,
                    epsrel=1e-12, limit=200, full_output=1)[0]
        s_vals[i] = s_vals[i + 1] - step

    samples = tuple(_sample(s_vals[i], thetas[i], 0.0, phi0)
                    for i in range(n_samples))
    return Trace(spec=spec, samples=samples)


def profile_ode_residual(spec: CurveSpec, theta: float,
                         s_at_theta: Optional[float] = None,
                         rel_step: float = 3e-4,
                         quad_tol: float = DEFAULT_QUAD_TOL) -> float:
    """|dh/du - (p'/p) sin^2 theta| at one point of a profile curve.

    dh/du is a central finite difference of h with respect to u along
    the curve, with the theta step scaled to the distance from the
    nearest fixed angle (h and u grow like a power of that distance, so
    a fixed step would measure resolution, not the curve).  Passing the
    already-known s(theta) skips the anchor integral.
    """
    rng = spec.theta_range()
    dist = min(theta - rng.lo, rng.hi - theta)
    if dist <= 0:
        raise BranchError("theta outside the open range")
    if s_at_theta is None:
        s_at_theta = s_of_theta(spec.p, spec.p_prime, spec.anchor_angle(),
                                spec.s_anchor, theta, quad_tol=quad_tol)
    step = rel_step * dist
    vals = []
    for th in (theta - step, theta + step):
        s = s_of_theta(spec.p, spec.p_prime, theta, s_at_theta, th,
                       quad_tol=quad_tol)
        c = math.cos(th)
        e = math.exp(-SQRT6 * s)
        vals.append((e * (1.0 - 3.0 * c * c),
                     SQRT6 * e * c * math.sin(th) ** 2))
    (u_m, h_m), (u_p, h_p) = vals
    fd = (h_p - h_m) / (u_p - u_m)
    return abs(fd - (spec.p_prime / spec.p) * math.sin(theta) ** 2)


def s_max(spec: CurveSpec) -> float:
    """The maximum of s on the cylinder or plane, in closed form.

    Plane family (2): -ln(kappa/2)/sqrt6, attained at the pole point.
    Cylinder family (3): -ln(kappa)/sqrt6, attained where theta = pi/2
    (f = kappa with 1 - 3 cos^2 theta = 1 there).
    Cylinder family (4): -ln(3|kappa|/(2 sqrt2))/sqrt6, attained where
    cos^2 theta = 1/3.
    """
    if spec.example_id == 2:
        return -math.log(spec.kappa / 2.0) / SQRT6
    if spec.example_id == 3:
        return -math.log(spec.kappa) / SQRT6
    if spec.example_id == 4:
        return -math.log(3.0 * abs(spec.kappa) / (2.0 * math.sqrt(2.0))) / SQRT6
    raise WrongExample(f"no closed-form s_max for example {spec.example_id}")


def _example1_point(spec: CurveSpec, tau: float, u: float) -> Point4:
    orbit = spec.orbit
    if orbit is None:
        raise ValueError("example 1 needs an orbit")
    if orbit.kind is not OrbitKind.GENERIC:
        # theta constant at a pole: (t = -tau, f = -u), u > 0, and
        # s = -ln(u/2)/sqrt6.
        if u <= 0:
            raise DomainError("pole cylinders need u > 0")
        theta = 0.0 if orbit.kind is OrbitKind.POLE_PLUS else math.pi
        return Point4(s=-math.log(u / 2.0) / SQRT6, t=-tau, theta=theta, phi=0.0)
    assert orbit.pair is not None and orbit.theta0 is not None
    p, pp = orbit.pair.m, orbit.pair.m_prime
    th = orbit.theta0
    c = math.cos(th)
    if p == 0:
        if u * pp <= 0:
            raise DomainError("sign(u) must equal sign(p')")
        # h = u on the f = 0 cylinder.
        hconst = SQRT6 * c * math.sin(th) ** 2
        s = -math.log(u / hconst) / SQRT6
        return Point4(s=s, t=orbit.upsilon / pp, theta=th, phi=tau)
    if u == 0 or (u > 0) != (p > 0):
        raise DomainError("sign(u) must equal sign(p)")
    fconst = 1.0 - 3.0 * c * c
    s = -math.log(u / fconst) / SQRT6
    phi0 = -orbit.upsilon / p
    return Point4(s=s, t=tau, theta=th, phi=phi0 + tau * pp / p)


def _example2_point(spec: CurveSpec, tau: float, u: float) -> Point4:
    if u < 0:
        raise DomainError("the plane is parameterized by u >= 0")
    sg = spec.sign_p_prime
    if u == 0:
        theta = 0.0 if sg > 0 else math.pi
    else:
        lam = -sg * u / spec.kappa
        branch = BranchId.A if sg > 0 else BranchId.C
        theta = theta_from_lambda(lam, branch)
    c = math.cos(theta)
    s = -math.log(spec.kappa / (3.0 * c * c - 1.0)) / SQRT6
    return Point4(s=s, t=spec.t0, theta=theta, phi=(sg * tau) if u else 0.0)


def _example3_point(spec: CurveSpec, tau: float, u: float) -> Point4:
    theta = theta_from_lambda(u / spec.kappa, BranchId.B)
    c = math.cos(theta)
    s = -math.log(spec.kappa / (1.0 - 3.0 * c * c)) / SQRT6
    return Point4(s=s, t=spec.t0, theta=theta, phi=tau)


def _example4_point(spec: CurveSpec, tau: float, u: float) -> Point4:
    kappa = spec.kappa
    if u == 0:
        theta = math.acos(math.copysign(1.0, kappa) / math.sqrt(3.0))
    else:
        lam = kappa / u
        if kappa > 0:
            branch = BranchId.B if u > 0 else BranchId.A
        else:
            branch = BranchId.B if u > 0 else BranchId.C
        theta = theta_from_lambda(lam, branch)
    c = math.cos(theta)
    s = -math.log(kappa / (SQRT6 * c * math.sin(theta) ** 2)) / SQRT6
    return Point4(s=s, t=tau, theta=theta, phi=spec.phi0)


def _profile_point(spec: CurveSpec, tau: float, u: float,
                   clip: float, quad_tol: float) -> Point4:
    rng = spec.theta_range()
    lo, hi = rng.lo + clip, rng.hi - clip
    anchor = spec.anchor_angle()

    def u_of(theta: float) -> float:
        s = s_of_theta(spec.p, spec.p_prime, anchor, spec.s_anchor, theta,
                       quad_tol=quad_tol)
        c = math.cos(theta)
        return math.exp(-SQRT6 * s) * (1.0 - 3.0 * c * c)

    u_lo, u_hi = u_of(lo), u_of(hi)
    sign = 1.0 if u_hi > u_lo else -1.0
    if not min(u_lo, u_hi) <= u <= max(u_lo, u_hi):
        raise DomainError(
            f"u = {u} outside [{min(u_lo, u_hi)}, {max(u_lo, u_hi)}] "
            f"reachable on the clipped range")
    a, b = lo, hi
    for _ in range(200):            # u_of is strictly monotone on the range
        if b - a < 1e-13:
            break
        mid = 0.5 * (a + b)
        if sign * (u_of(mid) - u) < 0.0:
            a = mid
        else:
            b = mid
    theta = 0.5 * (a + b)
    s = s_of_theta(spec.p, spec.p_prime, anchor, spec.s_anchor, theta,
                   quad_tol=quad_tol)
    return Point4(s=s, t=tau, theta=theta,
                  phi=spec.phi0 + tau * spec.p_prime / spec.p)


def eval_invariant_curve(spec: CurveSpec, tau: float, u: float,
                         clip: float = 1e-9,
                         quad_tol: float = DEFAULT_QUAD_TOL) -> Point4:
    """Evaluate the parameterized subvariety at (tau, u).

    The static families are closed-form; for the profile families the
    angle solving u = e^{-sqrt6 s(theta)}(1 - 3 cos^2 theta) is found by
    bisection on the clipped range (u is strictly monotone in theta
    along a profile).
    """
    if spec.example_id == 1:
        return _example1_point(spec, tau, u)
    if spec.example_id == 2:
        return _example2_point(spec, tau, u)
    if spec.example_id == 3:
        return _example3_point(spec, tau, u)
    if spec.example_id == 4:
        return _example4_point(spec, tau, u)
    if spec.example_id in (5, 6, 7):
        return _profile_point(spec, tau, u, clip, quad_tol)
    raise WrongExample(f"unknown example id {spec.example_id}")
