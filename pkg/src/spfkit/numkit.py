"""Shared numerical substrate.

Complex polynomials with a simultaneous root finder, Newton-identity
conversion between power sums and monic polynomials, truncated power series
arithmetic, linear nullspaces, and a sup-norm engine for real intervals.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

__all__ = [
    "ComplexPolynomial",
    "PowerSeries",
    "RootSet",
    "PoleOnIntervalError",
    "RootFindingError",
    "find_roots",
    "poly_from_power_sums",
    "power_sums",
    "series_exp",
    "series_integrate",
    "series_multiply",
    "nullspace",
    "sup_norm",
]

NEG_INF = float("-inf")

_INVPHI = (np.sqrt(5.0) - 1.0) / 2.0


class PoleOnIntervalError(ValueError):
    """A function handed to sup_norm produced a non-finite sample."""


class RootFindingError(RuntimeError):
    """Root iteration failed to converge; .partial holds the best iterate."""

    def __init__(self, message, partial=None):
        super().__init__(message)
        self.partial = partial


def _ascending(coeffs) -> np.ndarray:
    a = np.atleast_1d(np.asarray(coeffs, dtype=complex))
    if a.ndim != 1 or a.size == 0:
        raise ValueError("coefficient array must be 1-d and nonempty")
    return a


def _trim(a: np.ndarray) -> np.ndarray:
    nz = np.nonzero(a)[0]
    if nz.size == 0:
        return a[:1] * 0.0
    return a[: nz[-1] + 1]


@dataclass(frozen=True)
class ComplexPolynomial:
    """Dense polynomial with ascending complex coefficients.

    The trailing stored coefficient is nonzero unless the polynomial is
    identically zero; ``degree`` is -inf for the zero polynomial.
    """

    coeffs: tuple

    @staticmethod
    def make(coeffs) -> "ComplexPolynomial":
        return ComplexPolynomial(tuple(_trim(_ascending(coeffs))))

    @property
    def degree(self):
        if len(self.coeffs) == 1 and self.coeffs[0] == 0:
            return NEG_INF
        return len(self.coeffs) - 1

    @property
    def array(self) -> np.ndarray:
        return np.asarray(self.coeffs, dtype=complex)

    def __call__(self, z):
        return np.polyval(self.array[::-1], z)

    def derivative(self) -> "ComplexPolynomial":
        a = self.array
        if a.size == 1:
            return ComplexPolynomial.make([0.0])
        return ComplexPolynomial.make(a[1:] * np.arange(1, a.size))

    def monic(self) -> "ComplexPolynomial":
        a = self.array
        if a[-1] == 0:
            raise ValueError("zero polynomial has no monic form")
        return ComplexPolynomial.make(a / a[-1])


@dataclass(frozen=True)
class RootSet:
    """Roots with multiplicity, plus the worst residual |p(root)|."""

    roots: tuple
    residual: float
    converged: bool = True

    def __iter__(self):
        return iter(self.roots)

    def __len__(self):
        return len(self.roots)


@dataclass(frozen=True)
class PowerSeries:
    """Truncated Maclaurin series c_0..c_{order-1}.

    Arithmetic never reads beyond the stored coefficients; binary results
    carry the shorter of the two orders.
    """

    coeffs: tuple

    @staticmethod
    def make(coeffs) -> "PowerSeries":
        return PowerSeries(tuple(_ascending(coeffs)))

    @property
    def order(self) -> int:
        return len(self.coeffs)

    @property
    def array(self) -> np.ndarray:
        return np.asarray(self.coeffs, dtype=complex)

    def __call__(self, z):
        return np.polyval(self.array[::-1], z)

    def truncate(self, order: int) -> "PowerSeries":
        if order < 1:
            raise ValueError("order must be at least 1")
        return PowerSeries(self.coeffs[:order])


def _as_series(f) -> PowerSeries:
    return f if isinstance(f, PowerSeries) else PowerSeries.make(f)


def _as_poly_array(p) -> np.ndarray:
    if isinstance(p, ComplexPolynomial):
        return p.array
    return _trim(_ascending(p))


def _aberth(monic: np.ndarray, max_iter: int = 500) -> np.ndarray:
    """Simultaneous (Aberth-Ehrlich) iteration on a monic polynomial.

    Initial guesses sit on a circle of radius 1 + max|coeff| with a fixed
    angular offset so no guess starts on a symmetry axis.
    """
    n = monic.size - 1
    rev = monic[::-1]
    drev = (monic[1:] * np.arange(1, monic.size))[::-1]
    radius = 1.0 + np.abs(monic).max()
    angles = 2.0 * np.pi * (np.arange(n) + 0.25) / n + 0.5 / n
    x = radius * np.exp(1j * angles)
    stale = 0
    best_step = np.inf
    for _ in range(max_iter):
        px = np.polyval(rev, x)
        dpx = np.polyval(drev, x)
        dpx = np.where(dpx == 0, 1e-300, dpx)
        newton = px / dpx
        diff = x[:, None] - x[None, :]
        np.fill_diagonal(diff, 1.0)
        diff[diff == 0] = 1e-300  # coincident iterates (multiple roots at the noise floor)
        inv = 1.0 / diff
        np.fill_diagonal(inv, 0.0)
        denom = 1.0 - newton * inv.sum(axis=1)
        denom = np.where(denom == 0, 1e-300, denom)
        w = newton / denom
        x = x - w
        step = np.abs(w).max()
        if step <= 1e-14 * (1.0 + np.abs(x).max()):
            break
        # multiple roots stall at the noise floor; bail once steps stop shrinking
        if step < best_step * 0.75:
            best_step = step
            stale = 0
        else:
            stale += 1
            if stale > 24:
                break
    return x


def _components(roots: np.ndarray, radius: float) -> list:
    """Connected components of the proximity graph at the given radius."""
    n = roots.size
    adj = np.abs(roots[:, None] - roots[None, :]) <= radius
    seen = np.zeros(n, dtype=bool)
    comps = []
    for i in range(n):
        if seen[i]:
            continue
        stack = [i]
        seen[i] = True
        comp = [i]
        while stack:
            j = stack.pop()
            for k in np.nonzero(adj[j] & ~seen)[0]:
                seen[k] = True
                comp.append(int(k))
                stack.append(int(k))
        comps.append(np.array(comp))
    return comps


def _newton_polish(coeffs_desc: np.ndarray, x: complex, steps: int = 40) -> complex:
    d_desc = np.polyder(coeffs_desc)
    for _ in range(steps):
        fx = np.polyval(coeffs_desc, x)
        dfx = np.polyval(d_desc, x)
        if dfx == 0:
            break
        step = fx / dfx
        x = x - step
        if abs(step) <= 1e-15 * (1.0 + abs(x)):
            break
    return x


def find_roots(p, tol: float = 1e-10) -> RootSet:
    """All roots of ``p`` with multiplicity.

    Exact zero roots are deflated first and the rest comes from the
    Aberth-Ehrlich iteration on the monic normalization.  An m-fold root
    scatters the iterates like eps^(1/m), so near-coincident results are
    merged over an escalating radius ladder; each candidate cluster center is
    polished by Newton on the (m-1)-th derivative, where the multiple root is
    simple.  A merge is adopted only when it strictly improves the worst
    residual, which keeps genuinely distinct close roots apart.

    Every returned root r satisfies
    |p(r)| <= tol * max|coeffs| * (1 + |r|)^degree; if no configuration
    reaches that, the RootSet comes back with converged=False and the best
    roots kept.
    """
    if tol <= 0:
        raise ValueError("tol must be positive")
    a = _as_poly_array(p)
    degree = a.size - 1
    if degree < 1:
        raise ValueError("degree must be at least 1")
    scale = np.abs(a).max()
    nz = np.nonzero(a)[0]
    n_zero = nz[0]  # exact zero roots
    reduced = a[n_zero:]
    if reduced.size > 1:
        monic = reduced / reduced[-1]
        found = _aberth(monic)
    else:
        found = np.empty(0, dtype=complex)
    raw = np.concatenate([np.zeros(n_zero, dtype=complex), found])

    a_desc = a[::-1]
    derivs = [a_desc]  # descending-coefficient derivatives, extended on demand

    def residual_of(roots: np.ndarray) -> float:
        return float(np.abs(np.polyval(a_desc, roots)).max(initial=0.0))

    best = raw
    best_res = residual_of(raw)
    for radius in (np.sqrt(tol), tol ** (1 / 3), tol**0.25, tol ** (1 / 6), tol**0.125):
        comps = _components(raw, radius)
        if all(c.size == 1 for c in comps):
            continue
        merged = np.empty_like(raw)
        pos = 0
        for comp in comps:
            m = comp.size
            center = raw[comp].mean()
            if m > 1:
                while len(derivs) < m:
                    derivs.append(np.polyder(derivs[-1]))
                polished = _newton_polish(derivs[m - 1], center)
                if abs(np.polyval(a_desc, polished)) < abs(np.polyval(a_desc, center)):
                    center = polished
            merged[pos : pos + m] = center
            pos += m
        res = residual_of(merged)
        if res < 0.5 * best_res:
            best, best_res = merged, res

    roots = best[np.lexsort((best.imag, best.real))]
    bound = tol * scale * (1.0 + np.abs(roots)) ** degree
    ok = bool(np.all(np.abs(np.polyval(a_desc, roots)) <= bound))
    return RootSet(tuple(roots), best_res, ok)


def poly_from_power_sums(S) -> ComplexPolynomial:
    """Monic polynomial whose roots have the prescribed power sums S_1..S_n.

    Newton's identities: e_m = (1/m) * sum_{i=1..m} (-1)^(i-1) e_{m-i} S_i,
    coefficients c_{n-m} = (-1)^m e_m.
    """
    S = np.atleast_1d(np.asarray(S, dtype=complex))
    n = S.size
    if n < 1:
        raise ValueError("need at least one power sum")
    e = np.zeros(n + 1, dtype=complex)
    e[0] = 1.0
    for m in range(1, n + 1):
        acc = 0.0 + 0.0j
        for i in range(1, m + 1):
            acc += (-1) ** (i - 1) * e[m - i] * S[i - 1]
        e[m] = acc / m
    coeffs = np.empty(n + 1, dtype=complex)
    for m in range(n + 1):
        coeffs[n - m] = (-1) ** m * e[m]
    return ComplexPolynomial(tuple(coeffs))


def power_sums(roots, M: int) -> np.ndarray:
    """S_m = sum_k roots_k^m for m = 1..M."""
    if M < 1:
        raise ValueError("M must be at least 1")
    r = np.atleast_1d(np.asarray(roots, dtype=complex))
    if r.size == 0:
        return np.zeros(M, dtype=complex)
    return (r[None, :] ** np.arange(1, M + 1)[:, None]).sum(axis=1)


def series_exp(a) -> PowerSeries:
    """exp of a truncated series: c_0 = e^{a_0}, c_k = (1/k) sum j a_j c_{k-j}."""
    a = _as_series(a).array
    n = a.size
    c = np.zeros(n, dtype=complex)
    c[0] = np.exp(a[0])
    for k in range(1, n):
        acc = 0.0 + 0.0j
        for j in range(1, k + 1):
            acc += j * a[j] * c[k - j]
        c[k] = acc / k
    return PowerSeries(tuple(c))


def series_integrate(a) -> PowerSeries:
    """Termwise integral from 0; the constant term is zero."""
    a = _as_series(a).array
    out = np.zeros(a.size + 1, dtype=complex)
    out[1:] = a / np.arange(1, a.size + 1)
    return PowerSeries(tuple(out))


def series_multiply(a, b) -> PowerSeries:
    """Cauchy product truncated to the shorter input order."""
    a = _as_series(a)
    b = _as_series(b)
    order = min(a.order, b.order)
    full = np.convolve(a.array, b.array)[:order]
    return PowerSeries(tuple(full))


def nullspace(A, tol: float = 1e-12) -> np.ndarray:
    """Orthonormal basis (rows) of the numerical nullspace of A.

    A vector qualifies when ||A v|| <= tol * ||A|| * ||v||, which for the SVD
    means singular values at or below tol * sigma_max.  Full column rank
    yields an empty (0, ncols) array.
    """
    A = np.atleast_2d(np.asarray(A, dtype=complex))
    _, s, Vh = np.linalg.svd(A)
    smax = s[0] if s.size else 0.0
    ncols = A.shape[1]
    n_small = ncols - s.size  # columns beyond the singular spectrum
    keep = int(np.sum(s <= tol * smax)) + n_small if smax > 0 else ncols
    if keep == 0:
        return np.empty((0, ncols), dtype=complex)
    return np.conj(Vh[ncols - keep :])


def _eval_abs(g, x: np.ndarray) -> np.ndarray:
    with np.errstate(divide="ignore", invalid="ignore", over="ignore"):
        v = g(x)
        v = np.asarray(v)
        if v.shape != x.shape:
            v = np.array([g(xi) for xi in x])
    return np.abs(v)


def sup_norm(g, a: float, b: float, tol: float = 1e-10, grid: int = 4097):
    """Maximum of |g| over [a, b], returned as (value, argmax).

    Dense Chebyshev-Lobatto grid (default 4097 points) followed by a
    vectorized golden-section refinement around every local grid maximum.
    Raises PoleOnIntervalError on non-finite samples; the caller guarantees
    continuity.
    """
    if not b > a:
        raise ValueError("need b > a")
    mid = 0.5 * (a + b)
    half = 0.5 * (b - a)
    xs = mid + half * np.cos(np.linspace(np.pi, 0.0, grid))
    vals = _eval_abs(g, xs)
    if not np.all(np.isfinite(vals)):
        raise PoleOnIntervalError("non-finite sample; pole on interval?")
    inner = np.zeros(grid, dtype=bool)
    inner[0] = vals[0] >= vals[1]
    inner[-1] = vals[-1] >= vals[-2]
    inner[1:-1] = (vals[1:-1] >= vals[:-2]) & (vals[1:-1] >= vals[2:])
    idx = np.nonzero(inner)[0]
    lo = xs[np.maximum(idx - 1, 0)]
    hi = xs[np.minimum(idx + 1, grid - 1)]
    x1 = hi - _INVPHI * (hi - lo)
    x2 = lo + _INVPHI * (hi - lo)
    f1 = _eval_abs(g, x1)
    f2 = _eval_abs(g, x2)
    for _ in range(72):
        take_left = f1 > f2
        hi = np.where(take_left, x2, hi)
        lo = np.where(take_left, lo, x1)
        x1 = hi - _INVPHI * (hi - lo)
        x2 = lo + _INVPHI * (hi - lo)
        f1 = _eval_abs(g, x1)
        f2 = _eval_abs(g, x2)
    center = 0.5 * (lo + hi)
    fc = _eval_abs(g, center)
    if not np.all(np.isfinite(fc)):
        raise PoleOnIntervalError("non-finite sample during refinement")
    k_grid = int(np.argmax(vals))
    k_ref = int(np.argmax(fc))
    if fc[k_ref] >= vals[k_grid]:
        return float(fc[k_ref]), float(np.real(center[k_ref]))
    return float(vals[k_grid]), float(np.real(xs[k_grid]))
