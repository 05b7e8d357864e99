"""h-sums, amplitude-frequency sums, and discrete moment machinery.

An h-sum H(z) = sum_k lambda_k h(lambda_k z) built on a power series h is
determined by its frequencies; matching the first n Maclaurin coefficients
of a target series turns into prescribed power sums of the frequencies.
Amplitude-frequency sums sum_k mu_k h(lambda_k z) add free amplitudes and
are recovered from 2n discrete moments by the Prony method.  On top of the
solver sit node systems exact for differentiation, integration, and
extrapolation on polynomials, and their regularized variants whose
frequencies contract into a disk controlled by the regularization size.
"""

from __future__ import annotations

import logging
from dataclasses import dataclass
from functools import reduce

import numpy as np

from .numkit import (
    ComplexPolynomial,
    PowerSeries,
    find_roots,
    poly_from_power_sums,
    power_sums,
)

__all__ = [
    "HSum",
    "AFSum",
    "PronySolution",
    "RegExtrapReport",
    "hsum_pade",
    "diff_nodes",
    "int_nodes",
    "extrap_freqs",
    "extrapolate",
    "prony_solve",
    "gauss_quadrature",
    "reg_diff",
    "reg_diff_generating",
    "reg_extrap",
]

logger = logging.getLogger(__name__)

HANKEL_CONDITION_LIMIT = 1e12
FREQ_SEPARATION_REL = 1e-7
TUPLE_SUM_LIMIT = 1_000_000


def _as_series(f) -> PowerSeries:
    return f if isinstance(f, PowerSeries) else PowerSeries.make(f)


@dataclass(frozen=True)
class HSum:
    """H(z) = sum_k lambda_k h(lambda_k z)."""

    freqs: tuple
    base: PowerSeries

    @property
    def n(self) -> int:
        return len(self.freqs)

    def __call__(self, z):
        lam = np.asarray(self.freqs, dtype=complex)
        z = np.asarray(z, dtype=complex)
        return (lam * self.base(np.multiply.outer(z, lam))).sum(axis=-1)

    def maclaurin(self, terms: int) -> np.ndarray:
        """Coefficients h_m S_{m+1}, m = 0..terms-1."""
        lam = np.asarray(self.freqs, dtype=complex)
        h = np.zeros(terms, dtype=complex)
        h[: min(terms, self.base.order)] = self.base.array[:terms]
        if lam.size == 0:
            return np.zeros(terms, dtype=complex)
        return h * power_sums(lam, terms)


@dataclass(frozen=True)
class AFSum:
    """sum_k mu_k h(lambda_k z); the base may be attached later via apply."""

    amps: tuple
    freqs: tuple
    base: PowerSeries | None = None

    @property
    def n(self) -> int:
        return len(self.freqs)

    def moments(self, count: int) -> np.ndarray:
        """sum_k mu_k lambda_k^m for m = 0..count-1."""
        mu = np.asarray(self.amps, dtype=complex)
        lam = np.asarray(self.freqs, dtype=complex)
        return (mu * lam[None, :] ** np.arange(count)[:, None]).sum(axis=1)

    def apply(self, h, z):
        """Evaluate with an explicit base, any callable of a complex array."""
        mu = np.asarray(self.amps, dtype=complex)
        lam = np.asarray(self.freqs, dtype=complex)
        z = np.asarray(z, dtype=complex)
        return (mu * h(np.multiply.outer(z, lam))).sum(axis=-1)

    def __call__(self, z):
        if self.base is None:
            raise ValueError("no base series attached; use apply(h, z)")
        return self.apply(self.base, z)

    def maclaurin(self, terms: int) -> np.ndarray:
        if self.base is None:
            raise ValueError("no base series attached")
        h = np.zeros(terms, dtype=complex)
        h[: min(terms, self.base.order)] = self.base.array[:terms]
        return h * self.moments(terms)


def hsum_pade(f, h, n: int) -> HSum:
    """Frequencies matching f to O(z^n): power sums S_{m+1} = f_m / h_m.

    Both coefficients zero leaves the moment free and it is set to zero;
    a vanishing base coefficient against a nonzero target one makes the
    moment undefined.
    """
    if n < 1:
        raise ValueError("n must be at least 1")
    f = _as_series(f)
    h = _as_series(h)
    s = np.zeros(n, dtype=complex)
    for m in range(n):
        fm = f.coeffs[m] if m < f.order else 0.0
        hm = h.coeffs[m] if m < h.order else 0.0
        if hm == 0:
            if fm != 0:
                raise ValueError(
                    "moment undefined: base coefficient %d vanishes while the target's does not" % m
                )
            continue
        s[m] = fm / hm
    rs = find_roots(poly_from_power_sums(s))
    return HSum(tuple(rs.roots), h)


def _recurrence_generating(kind: int, n: int) -> ComplexPolynomial:
    # literal recurrences kept for comparison; their sign convention clashes
    # with the exactness property, see diff_nodes
    v = np.zeros(n + 1)
    v[1] = -1.0
    for k in range(2, n + 1):
        j = np.arange(1, k)
        if kind == 1:
            v[k] = 1.0 + ((1.0 - j / k) * v[1:k]).sum()
        else:
            v[k] = 1.0 / k**2 + (v[1:k] / (k * (k - j))).sum()
    coeffs = np.zeros(1, dtype=complex)
    coeffs[0] = 1.0
    for k in range(1, n + 1):
        nxt = np.zeros(k + 1, dtype=complex)
        nxt[1:] = coeffs
        nxt[0] -= v[k]
        coeffs = nxt
    return ComplexPolynomial.make(coeffs)


def _node_system(S: np.ndarray, kind: int, method: str) -> np.ndarray:
    target = poly_from_power_sums(S)
    if method == "power-sums":
        gen = target
    elif method == "recurrence":
        gen = _recurrence_generating(kind, S.size)
        gap = np.abs(gen.array - target.array).max()
        logger.info(
            "recurrence generating polynomial deviates from the power-sum one by %.3e", gap
        )
    else:
        raise ValueError("method must be 'power-sums' or 'recurrence'")
    return np.asarray(find_roots(gen).roots)


def diff_nodes(n: int, method: str = "power-sums") -> np.ndarray:
    """Nodes with power sums S_j = j, making
    z h'(z) = -h(z) + sum_k lambda_k h(lambda_k z) exact for polynomials of
    degree < n.  The recurrence variant is available as
    method="recurrence" for comparison; it deviates from the exactness
    requirement and the gap is logged.
    """
    if n < 1:
        raise ValueError("n must be at least 1")
    return _node_system(np.arange(1, n + 1, dtype=complex), 1, method)


def int_nodes(n: int, method: str = "power-sums") -> np.ndarray:
    """Nodes with power sums S_j = 1/j, making
    int_0^z h = z sum_k lambda_k h(lambda_k z) exact for polynomials of
    degree < n.  Repeated nodes are legitimate (n = 2 gives a double 1/2).
    """
    if n < 1:
        raise ValueError("n must be at least 1")
    return _node_system(1.0 / np.arange(1, n + 1, dtype=complex), 2, method)


def extrap_freqs(a: float, n: int) -> np.ndarray:
    """Nodes with power sums S_m = a^(m-1); all lie within |z| <= a - (a-1)/n."""
    if a <= 1:
        raise ValueError("a must exceed 1")
    if n < 1:
        raise ValueError("n must be at least 1")
    S = np.asarray(a, dtype=complex) ** np.arange(n)
    return np.asarray(find_roots(poly_from_power_sums(S)).roots)


def extrapolate(h, a: float, n: int, mu: int, z) -> complex:
    """mu-fold extrapolation sum over frequency tuples.

    Returns sum over (k_1..k_mu) of lambda_{k_1}..lambda_{k_mu}
    h(lambda_{k_1}..lambda_{k_mu} z / a^mu); exact on polynomials of degree
    < n, with coefficientwise remainder h_m (1 - (S_{m+1}/a^m)^mu) beyond.
    """
    if mu < 1:
        raise ValueError("iteration depth must be at least 1")
    if n**mu > TUPLE_SUM_LIMIT:
        raise ValueError("tuple-count overflow: n^mu exceeds %d" % TUPLE_SUM_LIMIT)
    h = _as_series(h)
    lam = extrap_freqs(a, n)
    prod = reduce(np.multiply.outer, [lam] * mu).ravel() if mu > 1 else lam
    return complex((prod * h(prod * z / a**mu)).sum())


def _lu_full_pivot_solve(A: np.ndarray, b: np.ndarray):
    """Dense LU with full pivoting; returns (x, pivot condition estimate)."""
    A = np.array(A, dtype=complex)
    b = np.array(b, dtype=complex)
    n = A.shape[0]
    col_perm = np.arange(n)
    pivots = np.empty(n)
    for k in range(n):
        sub = np.abs(A[k:, k:])
        i, j = np.unravel_index(np.argmax(sub), sub.shape)
        i += k
        j += k
        if i != k:
            A[[k, i]] = A[[i, k]]
            b[[k, i]] = b[[i, k]]
        if j != k:
            A[:, [k, j]] = A[:, [j, k]]
            col_perm[[k, j]] = col_perm[[j, k]]
        pivots[k] = np.abs(A[k, k])
        if pivots[k] == 0:
            return None, np.inf
        m = A[k + 1 :, k] / A[k, k]
        A[k + 1 :, k + 1 :] -= np.outer(m, A[k, k + 1 :])
        b[k + 1 :] -= m * b[k]
    y = np.zeros(n, dtype=complex)
    for k in range(n - 1, -1, -1):
        y[k] = (b[k] - A[k, k + 1 :] @ y[k + 1 :]) / A[k, k]
    x = np.zeros(n, dtype=complex)
    x[col_perm] = y
    return x, float(pivots.max() / pivots.min())


@dataclass(frozen=True)
class PronySolution:
    """Amplitudes and frequencies recovered from 2n discrete moments."""

    moments: tuple
    generating: ComplexPolynomial
    freqs: tuple
    amps: tuple
    regular: bool
    condition: float
    moment_residual: float
    note: str = ""


def prony_solve(s) -> PronySolution:
    """Recover (mu_k, lambda_k) with sum mu_k lambda_k^m = s_m, m = 0..2n-1.

    The monic generating polynomial is solved from the Hankel system
    sum_i s_{m+i} g_i = -s_{m+n}; its roots are the frequencies and the
    amplitudes come from the first n moment equations.  The solution is
    regular when the pivot condition stays below 1e12, the frequencies are
    pairwise separated relative to their magnitude, and no amplitude
    vanishes; nothing is asserted otherwise.
    """
    s = np.atleast_1d(np.asarray(s, dtype=complex))
    if s.size % 2 or s.size == 0:
        raise ValueError("need an even, positive number of moments")
    n = s.size // 2
    H = np.empty((n, n), dtype=complex)
    for m in range(n):
        H[m] = s[m : m + n]
    rhs = -s[n : 2 * n]
    g, cond = _lu_full_pivot_solve(H, rhs)
    note = ""
    if g is None:
        g, *_ = np.linalg.lstsq(H, rhs, rcond=None)
        note = "hankel system singular; least-squares candidate"
    coeffs = np.concatenate([g, [1.0]])
    generating = ComplexPolynomial.make(coeffs)
    rs = find_roots(generating)
    lam = np.asarray(rs.roots)
    if not rs.converged:
        note = (note + "; " if note else "") + "root finding did not converge"
    V = lam[None, :] ** np.arange(n)[:, None]
    amps, vcond = _lu_full_pivot_solve(V, s[:n])
    if amps is None:
        amps, *_ = np.linalg.lstsq(V, s[:n], rcond=None)
    recon = (amps * lam[None, :] ** np.arange(2 * n)[:, None]).sum(axis=1)
    residual = float(np.abs(recon - s).max() / (1.0 + np.abs(s).max()))
    lam_scale = np.abs(lam).max() if lam.size else 0.0
    if n > 1:
        diffs = np.abs(lam[:, None] - lam[None, :])[np.triu_indices(n, 1)]
        separated = bool(diffs.min() > FREQ_SEPARATION_REL * lam_scale)
    else:
        separated = True
    amps_ok = bool(np.abs(amps).min() > 1e-12 * (1.0 + np.abs(amps).max()))
    regular = bool(cond < HANKEL_CONDITION_LIMIT and separated and amps_ok and rs.converged)
    if not separated:
        note = (note + "; " if note else "") + "frequency collision"
    if not amps_ok:
        note = (note + "; " if note else "") + "vanishing amplitude"
    if cond >= HANKEL_CONDITION_LIMIT:
        note = (note + "; " if note else "") + "ill-conditioned hankel system"
    return PronySolution(
        tuple(s), generating, tuple(lam), tuple(amps), regular, cond, residual, note
    )


def gauss_quadrature(h, n: int) -> AFSum:
    """Amplitude-frequency form of (1/x) int_{-x}^{x} h(t) dt.

    Moments (1 + (-1)^m)/(m + 1) are those of the uniform measure on
    [-1,1]; the recovered nodes are real, distinct, inside (-1,1), with
    positive weights summing to 2, and the sum matches to O(x^{2n}).
    """
    if n < 1:
        raise ValueError("n must be at least 1")
    m = np.arange(2 * n)
    sol = prony_solve((1.0 + (-1.0) ** m) / (m + 1.0))
    lam = np.asarray(sol.freqs)
    mu = np.asarray(sol.amps)
    if not sol.regular:
        raise RuntimeError("moment system unexpectedly irregular: " + sol.note)
    if np.abs(lam.imag).max() > 1e-9 or np.abs(mu.imag).max() > 1e-9:
        raise RuntimeError("quadrature nodes drifted off the real axis")
    lam, mu = lam.real, mu.real
    if np.abs(lam).max() >= 1.0 or mu.min() <= 0.0:
        raise RuntimeError("quadrature nodes or weights out of range")
    order = np.argsort(lam)
    return AFSum(tuple(mu[order]), tuple(lam[order]), _as_series(h))


def reg_diff(n: int, p: float = 1.0):
    """Regularized differentiation nodes: returns (p_used, q, AFSum) with
    z h'(z) = -p h_{n-1} z^{n-1} - q h_{2n-1} z^{2n-1}
              + sum_k mu_k h(lambda_k z)
    exact for every polynomial h of degree < 2n.

    Moments m = 0..2n-1 are m itself, with p added at m = n-1 and the
    matched correction q(p) = -2p(3p + n^2 - 1)/((n-1)(n-2)) at m = 2n-1.
    Should the moment system come out irregular, p is nudged by relative
    amounts 2^-j until it is regular.
    """
    if n < 3:
        raise ValueError("n must be at least 3")
    if p == 0:
        raise ValueError("regularization size must be nonzero")

    def q_of(pp):
        return -2.0 * pp * (3.0 * pp + n * n - 1.0) / ((n - 1.0) * (n - 2.0))

    trial = float(p)
    for j in range(41):
        s = np.arange(2 * n, dtype=complex)
        s[n - 1] += trial
        s[2 * n - 1] += q_of(trial)
        sol = prony_solve(s)
        if sol.regular:
            closed = reg_diff_generating(n, trial)
            gap = np.abs(sol.generating.array - closed.array).max()
            if gap > 1e-6 * (1.0 + np.abs(closed.array).max()):
                logger.warning("generating polynomial deviates from closed form by %.3e", gap)
            return trial, q_of(trial), AFSum(sol.amps, sol.freqs)
        trial = float(p) * (1.0 + 2.0 ** -(j + 1))
    raise RuntimeError("no regular regularization size found near p=%g" % p)


def reg_diff_generating(n: int, p: float) -> ComplexPolynomial:
    """Closed form of the monic generating polynomial behind reg_diff:
    unit leading and zero lambda^(n-1) coefficients, then
    -6(n-1-j)/((n-1)(n-2)) at lambda^j for 1 <= j <= n-2 and
    2 + 6p/((n-1)(n-2)) at the constant term."""
    if n < 3:
        raise ValueError("n must be at least 3")
    c = np.zeros(n + 1, dtype=complex)
    c[n] = 1.0
    c[0] = 2.0 + 6.0 * p / ((n - 1.0) * (n - 2.0))
    j = np.arange(1, n - 1)
    c[1 : n - 1] = -6.0 * (n - 1.0 - j) / ((n - 1.0) * (n - 2.0))
    return ComplexPolynomial.make(c)


@dataclass(frozen=True)
class RegExtrapReport:
    """Frequency bound certificate for regularized extrapolation."""

    delta: float
    radius: float
    max_freq: float
    bound_holds: bool
    collision: bool
    generating_error: float


def reg_extrap(a: float, n: int, p: float):
    """Regularized extrapolation: returns (AFSum, RegExtrapReport) with
    h(az) = -p h_{n-1} z^{n-1} + sum_k mu_k h(lambda_k z)
    exact for polynomials of degree < 2n.

    Moments a^m with p > 0 added at m = n-1.  The generating polynomial is
    lambda^n - a^n/(n a^{n-1} + p) * sum_j a^{n-1-j} lambda^j, every
    frequency stays strictly inside |z| < delta*a with
    delta = (1 + p/(n a^{n-1}))^(-1/n), and growing p contracts the disk.
    """
    if a <= 0 or p <= 0:
        raise ValueError("need a > 0 and p > 0")
    if n < 1:
        raise ValueError("n must be at least 1")
    s = np.asarray(a, dtype=complex) ** np.arange(2 * n)
    s[n - 1] += p
    sol = prony_solve(s)
    closed = np.zeros(n + 1, dtype=complex)
    closed[n] = 1.0
    closed[:n] = -(a**n / (n * a ** (n - 1.0) + p)) * a ** (n - 1.0 - np.arange(n))
    gen_err = float(np.abs(sol.generating.array - closed).max())
    delta = float((1.0 + p / (n * a ** (n - 1.0))) ** (-1.0 / n))
    lam = np.asarray(sol.freqs)
    max_freq = float(np.abs(lam).max())
    if n > 1:
        gaps = np.abs(lam[:, None] - lam[None, :])[np.triu_indices(n, 1)]
        collision = bool(gaps.min() <= FREQ_SEPARATION_REL * max_freq)
    else:
        collision = False
    report = RegExtrapReport(
        delta, delta * a, max_freq, bool(max_freq < delta * a), collision, gen_err
    )
    return AFSum(sol.amps, sol.freqs), report
