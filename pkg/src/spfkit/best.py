"""Best uniform approximation by simple partial fractions on [-1, 1].

The constant-target problem has a working exchange algorithm: nodes of the
constant interpolant are moved until the n+1 interval norms of rho - c
equalize, which forces a Chebyshev alternance.  Around it sit the
verification tools (alternance detection, the sufficiency criterion, a
Vallee-Poussin lower bound), the explicit extremal fractions on the segment,
and the counterexamples that keep the general theory honest: a family where
the best approximant is not unique, and one where the alternance is as short
as the theory permits.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np
from numpy.polynomial import chebyshev as np_cheb
from scipy.optimize import brentq, minimize_scalar

from .core import SimpleFraction
from .interp import constant_generating_polynomial, interpolate_constant
from .numkit import PoleOnIntervalError, find_roots

__all__ = [
    "AlternanceReport",
    "RemezResult",
    "ExtremalFraction",
    "CounterexampleReport",
    "BorchardtReport",
    "alternance_detect",
    "remez_constant",
    "alternance_criterion",
    "vallee_poussin_bound",
    "extremal_fraction",
    "omega_from_delta",
    "counterexample_2n_alternance",
    "borchardt_identity",
    "nonuniqueness_fraction",
    "nonuniqueness_lambda_star",
]

_INVPHI = (np.sqrt(5.0) - 1.0) / 2.0


def _residual_fun(f, spf, residual):
    """Real residual callable e(x) = f(x) - rho(x), vector-safe."""
    if residual is not None:
        fun = residual
    else:
        def fun(x):
            fv = f(x) if callable(f) else f
            return np.asarray(fv) - spf(x)

    def wrapped(x):
        x = np.asarray(x, dtype=float)
        v = np.asarray(fun(x))
        if v.shape != x.shape:
            v = np.array([fun(xi) for xi in np.atleast_1d(x)]).reshape(x.shape)
        return np.real(v)

    return wrapped


def _signed_extrema(e, a: float, b: float, grid: int):
    """Local maxima of |e| on [a,b], golden-refined; returns (x, e(x), deviation)."""
    mid, half = 0.5 * (a + b), 0.5 * (b - a)
    xs = mid + half * np.cos(np.linspace(np.pi, 0.0, grid))
    vals = e(xs)
    if not np.all(np.isfinite(vals)):
        raise PoleOnIntervalError("residual not finite on the interval")
    mags = np.abs(vals)
    mask = np.zeros(grid, dtype=bool)
    mask[0] = mags[0] >= mags[1]
    mask[-1] = mags[-1] >= mags[-2]
    mask[1:-1] = (mags[1:-1] >= mags[:-2]) & (mags[1:-1] >= mags[2:])
    idx = np.nonzero(mask)[0]
    lo = xs[np.maximum(idx - 1, 0)]
    hi = xs[np.minimum(idx + 1, grid - 1)]
    x1 = hi - _INVPHI * (hi - lo)
    x2 = lo + _INVPHI * (hi - lo)
    f1 = np.abs(e(x1))
    f2 = np.abs(e(x2))
    for _ in range(60):
        left = f1 > f2
        hi = np.where(left, x2, hi)
        lo = np.where(left, lo, x1)
        x1 = hi - _INVPHI * (hi - lo)
        x2 = lo + _INVPHI * (hi - lo)
        f1 = np.abs(e(x1))
        f2 = np.abs(e(x2))
    centers = 0.5 * (lo + hi)
    e_ref = e(centers)
    if not np.all(np.isfinite(e_ref)):
        raise PoleOnIntervalError("residual not finite during refinement")
    # keep whichever of grid sample / refined point is larger in magnitude
    worse = np.abs(e_ref) < mags[idx]
    centers[worse] = xs[idx][worse]
    e_ref[worse] = vals[idx][worse]
    order = np.argsort(centers)
    centers, e_ref = centers[order], e_ref[order]
    return centers, e_ref, float(np.abs(e_ref).max())


@dataclass(frozen=True)
class AlternanceReport:
    """Longest sign-alternating run of near-extremal residual points."""

    points: tuple
    residuals: tuple
    deviation: float
    count: int
    equalization: float


def alternance_detect(f, spf, interval=(-1.0, 1.0), tol: float = 1e-6,
                      residual=None, grid: int = 4097) -> AlternanceReport:
    """Alternance of e = f - rho on the interval.

    Extrema qualify at |e| >= (1-tol) * deviation; among qualified extrema
    the longest alternating subsequence is kept (within a same-sign run, the
    largest).  f may be a constant; residual, when given, replaces f - rho
    and should be exact where cancellation matters.
    """
    a, b = float(interval[0]), float(interval[1])
    if not b > a:
        raise ValueError("interval must be increasing")
    e = _residual_fun(f, spf, residual)
    xs, es, deviation = _signed_extrema(e, a, b, grid)
    if deviation == 0:
        return AlternanceReport((), (), 0.0, 0, 0.0)
    qual = np.abs(es) >= (1.0 - tol) * deviation
    pts: list = []
    res: list = []
    for x, v in zip(xs[qual], es[qual]):
        s = 1.0 if v > 0 else -1.0
        if not pts or s * res[-1] < 0:
            pts.append(float(x))
            res.append(float(v))
        elif abs(v) > abs(res[-1]):
            pts[-1], res[-1] = float(x), float(v)
    mags = np.abs(res)
    equal = float((mags.max() - mags.min()) / mags.max())
    return AlternanceReport(tuple(pts), tuple(res), deviation, len(pts), equal)


_REMEZ_TEMPLATE = 0.5 * (1.0 - np.cos(np.linspace(0.0, np.pi, 65)))  # [0,1] Chebyshev spacing


def _interval_norms(c: float, nodes: np.ndarray):
    """Sup of |rho - c| = |c Pi / Q| on each of the n+1 node-gap intervals."""
    Q, Pi = constant_generating_polynomial(c, nodes)
    qd, pd = Q.array[::-1], Pi.array[::-1]

    def eabs(x):
        return np.abs(c * np.polyval(pd, x) / np.polyval(qd, x))

    bounds = np.concatenate([[-1.0], nodes, [1.0]])
    starts, widths = bounds[:-1], np.diff(bounds)
    X = starts[:, None] + widths[:, None] * _REMEZ_TEMPLATE[None, :]
    V = eabs(X)
    k = np.argmax(V, axis=1)
    rows = np.arange(X.shape[0])
    lo = X[rows, np.maximum(k - 1, 0)]
    hi = X[rows, np.minimum(k + 1, X.shape[1] - 1)]
    x1 = hi - _INVPHI * (hi - lo)
    x2 = lo + _INVPHI * (hi - lo)
    f1, f2 = eabs(x1), eabs(x2)
    for _ in range(60):
        left = f1 > f2
        hi = np.where(left, x2, hi)
        lo = np.where(left, lo, x1)
        x1 = hi - _INVPHI * (hi - lo)
        x2 = lo + _INVPHI * (hi - lo)
        f1, f2 = eabs(x1), eabs(x2)
    refined = eabs(0.5 * (lo + hi))
    return np.maximum(refined, V[rows, k]), eabs


@dataclass(frozen=True)
class RemezResult:
    """Best-approximation run: unpacks as (spf, report)."""

    spf: SimpleFraction
    report: AlternanceReport
    nodes: tuple
    deviation: float
    iterations: int
    converged: bool
    in_guarantee_regime: bool  # |c| <= n/8, where the deviation window is assured

    def __iter__(self):
        return iter((self.spf, self.report))


def remez_constant(c: float, n: int, tol: float = 1e-8, max_iter: int = 2000) -> RemezResult:
    """Best uniform approximation of the constant c by order-n fractions.

    Nodes start at the Chebyshev points; each step widens the interval whose
    residual norm is smallest by pushing its bounding nodes apart by eps
    (endpoint intervals move the single interior bound), with eps halved
    whenever the overall norm fails to improve.  Convergence is declared when
    the n+1 interval norms agree to relative tol.
    """
    if c == 0:
        raise ValueError("constant must be nonzero")
    if n < 1:
        raise ValueError("order must be at least 1")
    c = float(c)
    nodes = np.cos((2.0 * np.arange(n, 0, -1) - 1.0) * np.pi / (2.0 * n))
    norms, _ = _interval_norms(c, nodes)
    best = norms.max()
    gaps = np.diff(np.concatenate([[-1.0], nodes, [1.0]]))
    eps = 0.5 * gaps.min()
    iterations = 0
    converged = False
    while iterations < max_iter:
        spread = (norms.max() - norms.min()) / norms.max()
        if spread <= tol:
            converged = True
            break
        if eps < 1e-14:
            break
        iterations += 1
        k = int(np.argmin(norms))
        trial = nodes.copy()
        if k == 0:
            trial[0] += eps
        elif k == n:
            trial[-1] -= eps
        else:
            trial[k - 1] -= eps
            trial[k] += eps
        gaps = np.diff(np.concatenate([[-1.0], trial, [1.0]]))
        if gaps.min() <= 1e-13:
            eps *= 0.5
            continue
        trial_norms, _ = _interval_norms(c, trial)
        if trial_norms.max() <= best * (1.0 + 1e-12):
            nodes, norms, best = trial, trial_norms, trial_norms.max()
        else:
            eps *= 0.5
    solution = interpolate_constant(c, nodes)
    _, eabs = _interval_norms(c, nodes)
    Q, Pi = constant_generating_polynomial(c, nodes)
    qd, pd = Q.array[::-1], Pi.array[::-1]
    report = alternance_detect(
        c, solution.spf,
        residual=lambda x: np.real(c * np.polyval(pd, x) / np.polyval(qd, x)),
    )
    return RemezResult(
        solution.spf, report, tuple(float(x) for x in nodes), float(best),
        iterations, converged, abs(c) <= n / 8.0,
    )


def alternance_criterion(f, spf: SimpleFraction, n: int | None = None, tol: float = 1e-6,
                         interval=(-1.0, 1.0), residual=None) -> str:
    """Sufficiency verdict for best approximation among fractions of order n.

    "certified-best" needs order exactly n, every pole strictly outside the
    closed unit disk, and an (n+1)-point alternance.  Poles on or inside the
    circle make the criterion silent ("not-applicable"); anything else
    "fails".
    """
    if n is None:
        n = spf.order
    if spf.order and np.any(np.abs(spf.pole_array) <= 1.0 + 1e-9):
        return "not-applicable"
    if spf.order != n:
        return "fails"
    report = alternance_detect(f, spf, interval=interval, tol=tol, residual=residual)
    return "certified-best" if report.count >= n + 1 else "fails"


def vallee_poussin_bound(f, spf: SimpleFraction, points, residual=None) -> float:
    """min_j |f(t_j) - rho(t_j)| over points with alternating residual signs.

    With the poles outside the closed unit disk this is a lower bound on the
    least deviation achievable by any order-n fraction.
    """
    pts = np.sort(np.asarray(points, dtype=float))
    if pts.size < 2:
        raise ValueError("need at least two points")
    e = _residual_fun(f, spf, residual)
    vals = e(pts)
    if np.any(vals == 0) or np.any(vals[1:] * vals[:-1] > 0):
        raise ValueError("residual signs must strictly alternate along the points")
    return float(np.abs(vals).min())


def omega_from_delta(delta: float, n: int) -> float:
    """omega with pole-ellipse clearance delta: 2(1+delta) = omega^(1/n) + omega^(-1/n)."""
    if delta <= 0:
        raise ValueError("delta must be positive")
    a = 1.0 + delta + np.sqrt(delta * (delta + 2.0))
    return float(a**n)


@dataclass(frozen=True)
class ExtremalFraction:
    """Order-n fraction with poles at the Joukowski images of the n-th roots of omega.

    Smallest weighted deviation sqrt(1-x^2)|rho| among fractions with poles
    outside the ellipse through its own; the weighted profile equioscillates.
    """

    omega: float
    n: int
    poles: tuple
    delta: float

    @property
    def spf(self) -> SimpleFraction:
        return SimpleFraction(self.poles)

    def _cheb_pair(self):
        q = np.zeros(self.n + 1)
        q[self.n] = 2.0 ** (1 - self.n)
        q[0] = -(2.0 ** (1 - self.n)) * 0.5 * (self.omega + 1.0 / self.omega)
        return np_cheb.chebder(q), q

    def closed_form(self, x):
        """rho(x) as Q'/Q with Q = 2^(1-n) (T_n(x) - (omega + 1/omega)/2).

        Chebyshev-basis evaluation, stable for large n where the power basis
        is not.
        """
        dq, q = self._cheb_pair()
        return np_cheb.chebval(x, dq) / np_cheb.chebval(x, q)

    def pole_sum(self, x):
        return self.spf(x)

    def weighted_profile(self, phi):
        """sqrt(1-x^2) rho(x) at x = cos(phi), in closed trigonometric form."""
        w = self.omega
        return -2.0 * self.n * w * np.sin(self.n * np.asarray(phi)) / (
            w * w + 1.0 - 2.0 * w * np.cos(self.n * np.asarray(phi))
        )

    def weighted_norm(self) -> float:
        """sup of |sqrt(1-x^2) rho| on [-1,1]: exactly 2 n omega / (omega^2 - 1)."""
        w = self.omega
        return 2.0 * self.n * w / (w * w - 1.0)

    def norm_star(self) -> float:
        """Same norm by the Chebyshev-polynomial route n / sqrt(T_n(1+delta)^2 - 1)."""
        t = np.cosh(self.n * np.arccosh(1.0 + self.delta))
        return float(self.n / np.sqrt(t * t - 1.0))

    def equioscillation_phis(self) -> np.ndarray:
        """All phi in [0, pi] where the weighted profile hits +-its norm."""
        w = self.omega
        base = np.arccos(2.0 * w / (w * w + 1.0))
        ks = np.arange(0, self.n + 1)
        cand = np.concatenate([(base + 2 * np.pi * ks) / self.n, (-base + 2 * np.pi * ks) / self.n])
        cand = cand[(cand >= 0.0) & (cand <= np.pi)]
        return np.sort(cand)

    def ellipse_residual(self) -> float:
        """Worst deviation of the poles from the ellipse with semi-axes
        ((a + 1/a)/2, (a - 1/a)/2), a = omega^(1/n)."""
        a = self.omega ** (1.0 / self.n)
        A = 0.5 * (a + 1.0 / a)
        B = 0.5 * (a - 1.0 / a)
        z = np.asarray(self.poles)
        return float(np.abs((z.real / A) ** 2 + (z.imag / B) ** 2 - 1.0).max())


def extremal_fraction(omega: float, n: int) -> ExtremalFraction:
    """Extremal fraction for the weighted sup-norm on [-1,1]; omega > 1."""
    if omega <= 1:
        raise ValueError("omega must exceed 1")
    if n < 1:
        raise ValueError("order must be at least 1")
    a = omega ** (1.0 / n)
    w = a * np.exp(2j * np.pi * np.arange(n) / n)
    poles = 0.5 * (w + 1.0 / w)
    delta = 0.5 * (a + 1.0 / a) - 1.0
    return ExtremalFraction(float(omega), int(n), tuple(poles), float(delta))


@dataclass(frozen=True)
class CounterexampleReport:
    """Zero set of P'Q - Q'P, the sign-change points of the two fractions' difference."""

    zeros: tuple
    epsilon: float
    count: int
    target: int
    achieved: bool


def counterexample_2n_alternance(m: int, epsilon: float = 1e-4) -> CounterexampleReport:
    """Order n = 2m fraction pair whose difference changes sign only 2n-2 times.

    P = eps + prod (x + 2^-k)^2 and Q = eps + prod (x - 2^-k)^2; for small
    eps the Wronskian-like combination P'Q - Q'P has exactly 2n-2 simple
    zeros inside (-1,1).  eps is halved (floor 1e-12) until the count is
    achieved.
    """
    if m < 1:
        raise ValueError("m must be at least 1")
    n = 2 * m
    target = 2 * n - 2
    base = np.array([1.0 + 0.0j])
    for k in range(1, m + 1):
        lin = np.array([2.0**-k, 1.0])
        base = np.convolve(base, np.convolve(lin, lin))
    # base = prod (x + 2^-k)^2 ascending; mirroring x -> -x gives the Q product
    mirror = base * (-1.0) ** np.arange(base.size)

    eps = float(epsilon)
    zeros: np.ndarray = np.array([])
    while True:
        P = base.copy()
        P[0] += eps
        Qp = mirror.copy()
        Qp[0] += eps
        dP = P[1:] * np.arange(1, P.size)
        dQ = Qp[1:] * np.arange(1, Qp.size)
        W = np.convolve(dP, Qp) - np.convolve(dQ, P)
        rs = find_roots(W)
        r = np.asarray(rs.roots)
        real = r[np.abs(r.imag) <= 1e-8 * (1.0 + np.abs(r.real))].real
        real = np.sort(real[(real > -1.0) & (real < 1.0)])
        distinct = real[np.concatenate([[True], np.diff(real) > 1e-9])]
        if distinct.size == target and rs.converged:
            zeros = distinct
            return CounterexampleReport(tuple(zeros), eps, int(distinct.size), target, True)
        if eps <= 1e-12:
            return CounterexampleReport(tuple(distinct), eps, int(distinct.size), target, False)
        eps *= 0.5


def _ryser_permanent(M: np.ndarray) -> complex:
    n = M.shape[0]
    if n > 12:
        raise ValueError("permanent limited to n <= 12")
    total = 0.0 + 0.0j
    for bits in range(1, 1 << n):
        cols = [j for j in range(n) if bits >> j & 1]
        prod = M[:, cols].sum(axis=1).prod()
        total += prod if (n - len(cols)) % 2 == 0 else -prod
    return complex(total)


@dataclass(frozen=True)
class BorchardtReport:
    det_squared: complex
    det_single: complex
    permanent: complex
    cauchy_det: complex
    identity_error: float
    cauchy_error: float


def borchardt_identity(nodes, poles) -> BorchardtReport:
    """det(1/(xi_l - z_j)^2) = det(1/(xi_l - z_j)) * perm(1/(xi_l - z_j)).

    The single determinant is cross-checked against the Cauchy product
    formula.  Works for any square configuration with xi_l != z_j.
    """
    xi = np.atleast_1d(np.asarray(nodes, dtype=complex))
    z = np.atleast_1d(np.asarray(poles, dtype=complex))
    if xi.size != z.size:
        raise ValueError("need as many nodes as poles")
    diff = xi[:, None] - z[None, :]
    if np.any(diff == 0):
        raise ZeroDivisionError("node equals pole")
    C = 1.0 / diff
    det2 = complex(np.linalg.det(C * C))
    det1 = complex(np.linalg.det(C))
    perm = _ryser_permanent(C)
    k = xi.size
    num = 1.0 + 0.0j
    for l in range(k):
        for j in range(l + 1, k):
            num *= (xi[j] - xi[l]) * (z[l] - z[j])
    cauchy = num / diff.prod()
    scale = max(abs(det2), abs(det1 * perm), 1e-300)
    id_err = abs(det2 - det1 * perm) / scale
    c_err = abs(det1 - cauchy) / max(abs(cauchy), 1e-300)
    return BorchardtReport(det2, det1, perm, cauchy, float(id_err), float(c_err))


def nonuniqueness_fraction(lam: float) -> SimpleFraction:
    """Member of the family (2x + lam)/(x^2 + lam x + 1); for 1 <= lam <= lambda*
    every member is a best order-2 approximation to x + 1 on [-1,1]."""
    if not -2.0 < lam < 2.0:
        raise ValueError("need |lam| < 2 for a conjugate pole pair")
    d = np.sqrt(4.0 - lam * lam)
    return SimpleFraction.make([(-lam + 1j * d) / 2.0, (-lam - 1j * d) / 2.0])


def _residual_floor(lam: float) -> float:
    """min over [-1,1] of (x + 1) - (2x + lam)/(x^2 + lam x + 1), plus one."""

    def e(x):
        return (x + 1.0) - (2.0 * x + lam) / (x * x + lam * x + 1.0)

    xs = np.linspace(-1.0, 1.0, 2001)
    vals = e(xs)
    k = int(np.argmin(vals))
    lo, hi = xs[max(k - 1, 0)], xs[min(k + 1, xs.size - 1)]
    r = minimize_scalar(e, bounds=(lo, hi), method="bounded",
                        options={"xatol": 1e-14})
    return float(min(vals[k], r.fun) + 1.0)


def nonuniqueness_lambda_star(bracket=(1.60, 1.65)) -> float:
    """Largest lam with deviation still 1: the residual just touches -1 and a
    third alternance point appears."""
    return float(brentq(_residual_floor, bracket[0], bracket[1], xtol=1e-13))
