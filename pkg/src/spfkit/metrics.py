"""Metric identities and inequalities for fractions on the real line.

For poles in the open upper half-plane the imaginary part mu = Im rho is
strictly positive on R, the Blaschke product B(x) = prod (x-z_k)/(x-conj z_k)
has strictly increasing continuous argument, and the 2n roots of
B^2(x) = e^(i phi) (notch points) carry an exact quadrature for the L2 norm.
On top of these identities sit two-sided norm inequalities, subordination of
the sup norm to L_r norms, and Markov-Bernstein type derivative bounds on
the line, on circles, and on the segment.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np
from numpy.polynomial.legendre import leggauss
from scipy.optimize import brentq

from .core import SimpleFraction
from .numkit import sup_norm

__all__ = [
    "HalfPlanePoles",
    "NotchSet",
    "MetricCheck",
    "blaschke",
    "blaschke_argument",
    "notch_points",
    "l2_quadrature",
    "lp_norm_real_line",
    "sup_norm_real_line",
    "lp_norm_segment",
    "inequality_suite",
    "derivative_suite",
]


def _pole_array(obj) -> np.ndarray:
    if isinstance(obj, HalfPlanePoles):
        return np.asarray(obj.poles, dtype=complex)
    if isinstance(obj, SimpleFraction):
        return obj.pole_array
    return np.atleast_1d(np.asarray(obj, dtype=complex))


@dataclass(frozen=True)
class HalfPlanePoles:
    """Pole set confined to the open upper half-plane."""

    poles: tuple

    @staticmethod
    def make(poles) -> "HalfPlanePoles":
        arr = _pole_array(poles)
        if arr.size == 0:
            raise ValueError("need at least one pole")
        if np.any(arr.imag <= 0):
            raise ValueError("all poles must have strictly positive imaginary part")
        return HalfPlanePoles(tuple(arr))

    @property
    def n(self) -> int:
        return len(self.poles)

    @property
    def spf(self) -> SimpleFraction:
        return SimpleFraction(self.poles)

    def mu(self, x):
        """Im rho(x) = sum y_k / |x - z_k|^2, positive on the whole line."""
        z = np.asarray(self.poles)
        x = np.asarray(x, dtype=float)
        return (z.imag / ((x[..., None] - z.real) ** 2 + z.imag**2)).sum(axis=-1)

    def nu(self, x):
        z = np.asarray(self.poles)
        x = np.asarray(x, dtype=float)
        return ((x[..., None] - z.real) / ((x[..., None] - z.real) ** 2 + z.imag**2)).sum(axis=-1)


def blaschke(hp: HalfPlanePoles, x):
    """B(x) = prod (x - z_k)/(x - conj z_k), unimodular on the real line."""
    z = np.asarray(hp.poles)
    x = np.asarray(x, dtype=complex)
    return ((x[..., None] - z) / (x[..., None] - np.conj(z))).prod(axis=-1)


def blaschke_argument(hp: HalfPlanePoles, x):
    """Continuous argument of B on R: sum of -2 atan2(y_k, x - x_k).

    Increases strictly from -2 pi n to 0, with derivative 2 mu(x).
    """
    z = np.asarray(hp.poles)
    x = np.asarray(x, dtype=float)
    return -2.0 * np.arctan2(z.imag, x[..., None] - z.real).sum(axis=-1)


@dataclass(frozen=True)
class NotchSet:
    """The 2n increasing solutions of B^2(t) = e^(i phi)."""

    phi: float
    points: tuple


def notch_points(hp: HalfPlanePoles, phi: float) -> NotchSet:
    """Solve B^2(t) = e^(i phi) on the branches arg B = phi/2 - pi j, j = 1..2n.

    Existence and simplicity follow from strict monotonicity of the
    argument; each bisection result is polished by Newton using
    (arg B)' = 2 mu.
    """
    if not 0.0 < phi < 2.0 * np.pi:
        raise ValueError("phi must lie in (0, 2 pi)")
    z = np.asarray(hp.poles)
    n = z.size
    lo0 = float(z.real.min())
    hi0 = float(z.real.max())
    w = (hi0 - lo0) + float(z.imag.max()) + 1.0
    points = []
    for j in range(1, 2 * n + 1):
        target = 0.5 * phi - np.pi * j

        def g(x):
            return blaschke_argument(hp, x) - target

        lo, hi = lo0 - w, hi0 + w
        step = w
        while g(lo) > 0:
            lo -= step
            step *= 2.0
        step = w
        while g(hi) < 0:
            hi += step
            step *= 2.0
        t = brentq(g, lo, hi, xtol=1e-13)
        for _ in range(3):
            t -= g(t) / (2.0 * hp.mu(t))
        points.append(float(t))
    points.sort()
    return NotchSet(float(phi), tuple(points))


def l2_quadrature(hp: HalfPlanePoles, phi: float = np.pi, form: str = "mu") -> float:
    """Exact L2(R) norm squared of rho via the notch points of any phi.

    form "mu" gives pi sum mu(t_s); form "nu" the companion
    pi sum nu^2(t_s)/mu(t_s).  Both equal the integral of |rho|^2 and twice
    the squared L2 norm of mu.
    """
    ts = np.asarray(notch_points(hp, phi).points)
    if form == "mu":
        return float(np.pi * hp.mu(ts).sum())
    if form == "nu":
        return float(np.pi * (hp.nu(ts) ** 2 / hp.mu(ts)).sum())
    raise ValueError("form must be 'mu' or 'nu'")


_GL_NODES, _GL_WEIGHTS = leggauss(80)


def _gl_integrate(fun, breaks: np.ndarray) -> float:
    """Composite 80-point Gauss-Legendre over consecutive break intervals."""
    a = breaks[:-1]
    h = np.diff(breaks)
    x = a[:, None] + 0.5 * h[:, None] * (_GL_NODES[None, :] + 1.0)
    v = fun(x.ravel()).reshape(x.shape)
    return float(((v * _GL_WEIGHTS[None, :]).sum(axis=1) * 0.5 * h).sum())


def _pole_refined_breaks(poles: np.ndarray, a: float, b: float) -> np.ndarray:
    """Breakpoints on [a,b] geometrically refined toward each pole's real part.

    Piece length stays comparable to the distance from the nearest pole, so
    fixed-order Gauss-Legendre is uniformly superconvergent on every piece.
    """
    pts = [a, b]
    for z in poles:
        y = abs(z.imag)
        off = 0.5 * y
        while True:
            l_, r_ = z.real - off, z.real + off
            if l_ > a:
                pts.append(l_)
            if r_ < b:
                pts.append(r_)
            if l_ <= a and r_ >= b:
                break
            off *= 2.0
    pts = np.unique(np.clip(np.asarray(pts), a, b))
    keep = np.concatenate([[True], np.diff(pts) > 1e-12 * max(1.0, b - a)])
    return pts[keep]


def lp_norm_real_line(spf_or_poles, p: float, tail_rel: float = 1e-12) -> float:
    """||rho||_{L_p(R)} for p > 1 with poles off the real line.

    Pole-refined Gauss-Legendre composite on a core window, geometrically
    widening tail pieces until the analytic remainder bound
    int (n/dist)^p dx falls below tail_rel of the accumulated integral.
    """
    if p <= 1:
        raise ValueError("the integral diverges for p <= 1; need p > 1")
    z = _pole_array(spf_or_poles)
    if z.size == 0:
        return 0.0
    if np.any(z.imag == 0):
        raise ValueError("pole on the real axis; norm divergent")
    spf = SimpleFraction(tuple(z))
    n = z.size

    def f(x):
        return np.abs(spf(np.asarray(x, dtype=complex))) ** p

    lo, hi = float(z.real.min()), float(z.real.max())
    w = (hi - lo) + float(np.abs(z.imag).max()) + 1.0
    a, b = lo - 64.0 * w, hi + 64.0 * w
    total = _gl_integrate(f, _pole_refined_breaks(z, a, b))
    length = 64.0 * w
    for _ in range(200):
        bound = n**p * ((b - hi) ** (1 - p) + (lo - a) ** (1 - p)) / (p - 1)
        if bound <= tail_rel * total:
            break
        total += _gl_integrate(f, np.array([b, b + length]))
        total += _gl_integrate(f, np.array([a - length, a]))
        a, b = a - length, b + length
        length *= 2.0
    return float(total ** (1.0 / p))


def sup_norm_real_line(spf_or_poles, fun=None, grid: int = 16385) -> float:
    """sup over R of |rho| (or of |fun| decaying like the fraction).

    Dense search on a core window around the poles; outside, |rho| <= n/W
    once every pole is at distance W, and the window grows until that bound
    is dominated.  fun defaults to the fraction itself.
    """
    z = _pole_array(spf_or_poles)
    if z.size == 0:
        return 0.0
    spf = SimpleFraction(tuple(z))
    if fun is None:
        def fun(x):
            return spf(np.asarray(x, dtype=complex))
    n = z.size
    lo, hi = float(z.real.min()), float(z.real.max())
    w0 = (hi - lo) + float(np.abs(z.imag).max()) + 1.0
    value, _ = sup_norm(fun, lo - w0, hi + w0, grid=grid)
    w = w0
    for _ in range(60):
        if n / w <= value:
            return float(value)
        left, _ = sup_norm(fun, lo - 2.0 * w, lo - w)
        right, _ = sup_norm(fun, hi + w, hi + 2.0 * w)
        value = max(value, left, right)
        w *= 2.0
    return float(value)


def lp_norm_segment(spf_or_poles, p: float, interval=(-1.0, 1.0)) -> float:
    """||rho||_{L_p[a,b]} with poles off the segment."""
    if p <= 0:
        raise ValueError("p must be positive")
    z = _pole_array(spf_or_poles)
    spf = SimpleFraction(tuple(z))
    a, b = float(interval[0]), float(interval[1])
    on_segment = (np.abs(z.imag) < 1e-14) & (z.real >= a) & (z.real <= b)
    if np.any(on_segment):
        raise ValueError("pole on the segment; norm divergent")

    def f(x):
        return np.abs(spf(np.asarray(x, dtype=complex))) ** p

    near = z[(z.real > a - 1) & (z.real < b + 1)]
    breaks = _pole_refined_breaks(near, a, b) if near.size else np.array([a, b])
    if breaks.size < 9:
        breaks = np.unique(np.concatenate([breaks, np.linspace(a, b, 9)]))
    return float(_gl_integrate(f, breaks) ** (1.0 / p))


@dataclass(frozen=True)
class MetricCheck:
    """One verified (or observed) relation: passed is None when the relation
    is observational or its hypotheses were not met."""

    name: str
    left: float
    right: float
    passed: bool | None
    note: str = ""


def _conjugate_symmetric(z: np.ndarray) -> bool:
    if z.size == 0:
        return True
    s1 = np.sort_complex(np.round(z, 10))
    s2 = np.sort_complex(np.round(np.conj(z), 10))
    return bool(np.allclose(s1, s2, atol=1e-9))


_INEQ_CHECKS = ("two_sided_lower", "two_sided_upper", "sup_from_lr", "lp_from_lr", "segment_sup_from_lr")


def inequality_suite(spf_or_poles, checks=None, r: float = 2.0, p: float = 4.0):
    """Norm inequalities with per-check hypotheses.

    two_sided_lower / two_sided_upper: (2n)^-1 ||rho||_2^2 < pi ||rho||_inf
    < 2 ||rho||_2^2, poles in the upper half-plane.  sup_from_lr:
    ||rho||_inf <= 2r sin(pi/r)^-s ||rho||_r^s with 1/r + 1/s = 1.
    lp_from_lr: ||rho||_p^q against ||rho||_r^s, sharp constant unknown, so
    only the two sides are reported.  segment_sup_from_lr: sup on [-1,1]
    against 64 n^(2/r) ||rho||_{L_r[-1,1]} for real-valued fractions, also
    observational (valid for n large against the weighted norm).
    """
    if checks is None:
        checks = _INEQ_CHECKS
    z = _pole_array(spf_or_poles)
    n = z.size
    out = []
    upper = bool(n and np.all(z.imag > 0))
    need_norms = {c for c in checks if c in _INEQ_CHECKS[:4]}
    l2 = sup_r = None
    if upper and need_norms:
        sup_r = sup_norm_real_line(z)
    for name in checks:
        if name in _INEQ_CHECKS[:4] and not upper:
            out.append(MetricCheck(name, np.nan, np.nan, None, "skipped: poles not in the upper half-plane"))
            continue
        if name == "two_sided_lower":
            if l2 is None:
                l2 = lp_norm_real_line(z, 2.0)
            out.append(MetricCheck(name, l2**2 / (2.0 * n), np.pi * sup_r,
                                   bool(l2**2 / (2.0 * n) < np.pi * sup_r)))
        elif name == "two_sided_upper":
            if l2 is None:
                l2 = lp_norm_real_line(z, 2.0)
            out.append(MetricCheck(name, np.pi * sup_r, 2.0 * l2**2,
                                   bool(np.pi * sup_r < 2.0 * l2**2)))
        elif name == "sup_from_lr":
            s = r / (r - 1.0)
            lr = lp_norm_real_line(z, r)
            rhs = 2.0 * r * np.sin(np.pi / r) ** (-s) * lr**s
            out.append(MetricCheck(name, sup_r, float(rhs), bool(sup_r <= rhs),
                                   "r=%g" % r))
        elif name == "lp_from_lr":
            if not 1.0 < r < p:
                out.append(MetricCheck(name, np.nan, np.nan, None, "skipped: need 1 < r < p"))
                continue
            q = p / (p - 1.0)
            s = r / (r - 1.0)
            left = lp_norm_real_line(z, p) ** q
            right = lp_norm_real_line(z, r) ** s
            out.append(MetricCheck(name, float(left), float(right), None,
                                   "observational, p=%g r=%g; sharp constant open" % (p, r)))
        elif name == "segment_sup_from_lr":
            on_seg = (np.abs(z.imag) < 1e-14) & (np.abs(z.real) <= 1.0)
            if not _conjugate_symmetric(z) or np.any(on_seg) or n == 0:
                out.append(MetricCheck(name, np.nan, np.nan, None,
                                       "skipped: needs a real-valued fraction with poles off [-1,1]"))
                continue
            seg_sup, _ = sup_norm(lambda x: SimpleFraction(tuple(z))(np.asarray(x, dtype=complex)), -1.0, 1.0)
            right = 64.0 * n ** (2.0 / r) * lp_norm_segment(z, r)
            out.append(MetricCheck(name, float(seg_sup), float(right), None,
                                   "observational, r=%g; requires n large relative to the weighted norm" % r))
        else:
            raise ValueError("unknown check %r" % name)
    return tuple(out)


_DERIV_CHECKS = ("derivative_imag_bound", "derivative_sum_bound", "circle_bound", "segment_weighted")


def derivative_suite(spf_or_poles, checks=None, r: float = 1.0,
                     x_window: float = 50.0, samples: int = 2001):
    """Markov-Bernstein type derivative bounds.

    derivative_imag_bound / derivative_sum_bound need upper half-plane
    poles: with chi = (|nu| + ||nu||_inf) mu, |mu'| <= chi and
    |rho'| + |mu'| <= 2 chi on a sample grid; the second is an identity for
    n = 1 and is reported with its maximal discrepancy then.  circle_bound:
    poles outside |z| = r give ||rho'|| <= ||rho|| (n/r + 2||rho||) on the
    circle.  segment_weighted reports max sqrt(1-x^2)|rho'|/n on [-1,1] for
    real-valued fractions (observational; sharp only asymptotically).
    """
    if checks is None:
        checks = _DERIV_CHECKS
    z = _pole_array(spf_or_poles)
    spf = SimpleFraction(tuple(z))
    n = z.size
    out = []
    upper = bool(n and np.all(z.imag > 0))
    chi = dmu = drho = None
    if upper and ("derivative_imag_bound" in checks or "derivative_sum_bound" in checks):
        hp = HalfPlanePoles(tuple(z))
        xs = np.linspace(-x_window, x_window, samples)
        nu_sup = sup_norm_real_line(z, fun=lambda x: np.real(spf(np.asarray(x, dtype=complex))))
        chi = (np.abs(hp.nu(xs)) + nu_sup) * hp.mu(xs)
        d1 = spf(xs.astype(complex), 1)
        dmu = np.abs(d1.imag)
        drho = np.abs(d1)
    for name in checks:
        if name == "derivative_imag_bound":
            if not upper:
                out.append(MetricCheck(name, np.nan, np.nan, None, "skipped: poles not in the upper half-plane"))
                continue
            out.append(MetricCheck(name, float(dmu.max()), float(chi.max()),
                                   bool(np.all(dmu <= chi * (1 + 1e-9) + 1e-15))))
        elif name == "derivative_sum_bound":
            if not upper:
                out.append(MetricCheck(name, np.nan, np.nan, None, "skipped: poles not in the upper half-plane"))
                continue
            lhs = drho + dmu
            ok = bool(np.all(lhs <= 2 * chi * (1 + 1e-9) + 1e-15))
            note = ""
            if n == 1:
                note = "identity for order 1; max discrepancy %.3e" % float(np.abs(lhs - 2 * chi).max())
            out.append(MetricCheck(name, float(lhs.max()), float(2 * chi.max()), ok, note))
        elif name == "circle_bound":
            if n == 0 or np.any(np.abs(z) <= r * (1 + 1e-12)):
                out.append(MetricCheck(name, np.nan, np.nan, None, "skipped: poles must lie outside the circle"))
                continue
            nr, _ = sup_norm(lambda t: spf(r * np.exp(1j * t)), 0.0, 2.0 * np.pi)
            nd, _ = sup_norm(lambda t: spf(r * np.exp(1j * t), 1), 0.0, 2.0 * np.pi)
            rhs = nr * (n / r + 2.0 * nr)
            out.append(MetricCheck(name, float(nd), float(rhs), bool(nd <= rhs * (1 + 1e-10)),
                                   "r=%g" % r))
        elif name == "segment_weighted":
            on_seg = (np.abs(z.imag) < 1e-14) & (np.abs(z.real) <= 1.0)
            if n == 0 or not _conjugate_symmetric(z) or np.any(on_seg):
                out.append(MetricCheck(name, np.nan, np.nan, None,
                                       "skipped: needs a real-valued fraction with poles off [-1,1]"))
                continue
            wval, _ = sup_norm(
                lambda x: np.sqrt(np.maximum(1.0 - x * x, 0.0)) * np.abs(spf(np.asarray(x, dtype=complex), 1)),
                -1.0, 1.0,
            )
            mval, _ = sup_norm(lambda x: spf(np.asarray(x, dtype=complex)), -1.0, 1.0)
            out.append(MetricCheck(name, float(wval / n), float(mval), None,
                                   "observational: left = max sqrt(1-x^2)|rho'|/n, right = sup|rho| context"))
        else:
            raise ValueError("unknown check %r" % name)
    return tuple(out)
