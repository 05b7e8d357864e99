"""Interpolation by simple partial fractions.

Covers Pade-type contact at the origin (two independent constructions plus a
remainder series and an a-priori error bound), interpolation of a constant
with an explicit generating polynomial, and the generalized multi-node
problem Q^(s+1)(xi_j) = h_{j,s} Q(xi_j), whose solutions form the nullspace
of a homogeneous linear system.  Nodes where a generalized solution vanishes
are singular: the fraction has a pole there and ordinary interpolation fails.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache

import numpy as np
from scipy.optimize import bisect

from .core import SimpleFraction, build_tower, reduce_values
from .numkit import (
    ComplexPolynomial,
    PowerSeries,
    RootFindingError,
    find_roots,
    nullspace,
    poly_from_power_sums,
    series_exp,
    series_integrate,
)

__all__ = [
    "InterpolationTable",
    "GeneralizedSolution",
    "InterpolationFamily",
    "pade_spf",
    "pade_spf_exp",
    "pade_remainder",
    "pade_error_bound",
    "contact_epsilon",
    "frequency_bound_check",
    "interpolate_constant",
    "constant_generating_polynomial",
    "generalized_interp_simple",
    "generalized_interp_multiple",
    "classify_nodes",
]

MAX_NODE_MULTIPLICITY = 12

_SEARCH_SEED = 181818
_N_RANDOM_COMBOS = 64


def _series(f) -> PowerSeries:
    return f if isinstance(f, PowerSeries) else PowerSeries.make(f)


def pade_spf(f, n: int, tol_zero: float = 1e-12) -> SimpleFraction:
    """Order <= n fraction whose Maclaurin series matches f_0..f_{n-1}.

    The poles are reciprocals of the roots of the monic polynomial whose
    power sums are S_m = -f_{m-1}; roots below tol_zero in modulus are poles
    at infinity and are dropped.
    """
    if n < 1:
        raise ValueError("contact order must be at least 1")
    f = _series(f)
    if f.order < n:
        raise ValueError("need at least %d series coefficients" % n)
    S = -f.array[:n]
    rs = find_roots(poly_from_power_sums(S))
    if not rs.converged:
        raise RootFindingError(
            "frequency polynomial roots did not converge (residual %.3e)" % rs.residual
        )
    lam = np.asarray(rs.roots)
    lam = lam[np.abs(lam) > tol_zero]
    return SimpleFraction(tuple(1.0 / lam))


def pade_spf_exp(f, n: int) -> SimpleFraction:
    """Same fraction as pade_spf, built as the logarithmic derivative of the
    degree-n partial sum of exp(integral of f)."""
    if n < 1:
        raise ValueError("contact order must be at least 1")
    f = _series(f)
    if f.order < n:
        raise ValueError("need at least %d series coefficients" % n)
    e = series_exp(series_integrate(f.truncate(n)))
    q = e.array[: n + 1]
    if np.abs(q).max() == 0:
        raise ValueError("degenerate partial sum")
    return SimpleFraction.from_polynomial(ComplexPolynomial.make(q))


def pade_remainder(f, fraction: SimpleFraction, z):
    """f(z) - rho(z) summed in closed form from the series tail.

    With Q the denominator of the fraction (coefficients q_0..q_nu) the
    difference equals (1/Q(z)) * sum_k z^k sum_m q_m f_{k-m}; the first
    nonzero term sits at k = n, so the truncation error is the neglected
    tail of f.  Fails when z is at (or numerically on top of) a pole.
    """
    f = _series(f)
    _, den = fraction.to_rational()
    q = den.array
    nu = q.size - 1
    coeffs = np.convolve(q, f.array)[: f.order]
    z_arr = np.asarray(z, dtype=complex)
    den_z = den(z_arr)
    scale = np.abs(q).max() * (1.0 + np.abs(z_arr)) ** nu
    if np.any(np.abs(den_z) <= 1e-12 * scale):
        raise ZeroDivisionError("evaluation point too close to a pole")
    tail = coeffs[nu:]
    value = z_arr**nu * np.polyval(tail[::-1], z_arr) / den_z
    return value if z_arr.ndim else complex(value)


@lru_cache(maxsize=None)
def contact_epsilon(n: int) -> float:
    """Unique root in (0,1) of eps^2 = (1-eps)^(n+1)."""
    if n < 1:
        raise ValueError("n must be at least 1")
    return float(
        bisect(lambda e: e * e - (1.0 - e) ** (n + 1), 1e-300, 1.0 - 1e-16, xtol=1e-16)
    )


def pade_error_bound(a: float, n: int, z, r: float) -> float:
    """Uniform bound on |f(z) - rho(z)| valid whenever |f_{m-1}| <= a^m.

    Requires |z| < r < (1 - eps_n)/a with eps_n = contact_epsilon(n).
    """
    if a <= 0:
        raise ValueError("coefficient bound a must be positive")
    eps = contact_epsilon(n)
    az = abs(z)
    if not az < r < (1.0 - eps) / a:
        raise ValueError("need |z| < r < (1 - eps_n)/a")
    lead = a / (1.0 - a * az)
    decay = (az / r) ** n
    growth = ((1.0 - eps + a * r) / (1.0 - eps - a * r)) ** n
    log_factor = np.log(np.e * r / (r - az))
    return float(lead * decay * growth * log_factor)


def frequency_bound_check(S, n: int | None = None, a: float | None = None) -> bool:
    """True iff the roots of the power-sum polynomial stay below (1-eps_n)^(-1) a.

    When a is omitted it is taken as the smallest admissible bound
    max_m |S_m|^(1/m).
    """
    S = np.atleast_1d(np.asarray(S, dtype=complex))
    if n is None:
        n = S.size
    if not 1 <= n <= S.size:
        raise ValueError("n must index into the power sums")
    S = S[:n]
    mags = np.abs(S)
    if a is None:
        a = float(np.max(mags ** (1.0 / np.arange(1, n + 1))))
    elif np.any(mags > np.asarray(a, dtype=float) ** np.arange(1, n + 1) * (1 + 1e-12)):
        raise ValueError("power sums violate |S_m| <= a^m")
    roots = np.asarray(find_roots(poly_from_power_sums(S)).roots)
    if a == 0:
        return bool(np.all(np.abs(roots) <= 1e-12))
    return bool(np.all(np.abs(roots) < a / (1.0 - contact_epsilon(n))))


def _distinct(nodes: np.ndarray) -> None:
    if nodes.size > 1:
        diff = np.abs(nodes[:, None] - nodes[None, :])
        np.fill_diagonal(diff, np.inf)
        if diff.min() == 0:
            raise ValueError("nodes must be pairwise distinct")


def constant_generating_polynomial(c, nodes):
    """(Q, Pi) with Pi = prod (z - xi_j) and Q = sum_k c^(-k) Pi^(k).

    Q is monic of degree exactly n and satisfies rho - c = -c Pi / Q for
    rho = Q'/Q.
    """
    if c == 0:
        raise ValueError("constant must be nonzero")
    nodes = np.atleast_1d(np.asarray(nodes, dtype=complex))
    _distinct(nodes)
    pi = np.array([1.0 + 0.0j])
    for x in nodes:
        pi = np.convolve(pi, np.array([-x, 1.0 + 0.0j]))
    n = nodes.size
    q = np.zeros(n + 1, dtype=complex)
    term = pi
    factor = 1.0 + 0.0j
    for _ in range(n + 1):
        q[: term.size] += factor * term
        factor /= c
        term = term[1:] * np.arange(1, term.size)
    return ComplexPolynomial(tuple(q)), ComplexPolynomial(tuple(pi))


def interpolate_constant(c, nodes, tol: float = 1e-8) -> "GeneralizedSolution":
    """Generalized interpolation of the constant value c at the given nodes.

    Always exists, is unique up to scale, and has order exactly n; a node is
    singular exactly when the fraction keeps a pole there.
    """
    Q, _ = constant_generating_polynomial(c, nodes)
    spf = SimpleFraction.from_polynomial(Q)
    return GeneralizedSolution(Q, spf, classify_nodes(Q, nodes, tol))


@dataclass(frozen=True)
class InterpolationTable:
    """Nodes with multiplicities and the prescribed derivative values.

    values[j] lists b_{j,0}..b_{j,m_j-1}, the required rho(xi_j), ...,
    rho^(m_j-1)(xi_j); M is the total number of conditions.
    """

    nodes: tuple
    multiplicities: tuple
    values: tuple

    def __post_init__(self):
        nodes = np.atleast_1d(np.asarray(self.nodes, dtype=complex))
        _distinct(nodes)
        if not (len(self.nodes) == len(self.multiplicities) == len(self.values)):
            raise ValueError("nodes, multiplicities and values must align")
        for m, vals in zip(self.multiplicities, self.values):
            if m < 1:
                raise ValueError("multiplicities must be at least 1")
            if len(vals) != m:
                raise ValueError("need exactly m_j values at each node")

    @staticmethod
    def make(nodes, values) -> "InterpolationTable":
        """Multiplicities inferred from the per-node value lists."""
        vals = tuple(tuple(complex(v) for v in np.atleast_1d(vj)) for vj in values)
        return InterpolationTable(
            tuple(complex(x) for x in np.atleast_1d(nodes)),
            tuple(len(vj) for vj in vals),
            vals,
        )

    @property
    def M(self) -> int:
        return int(sum(self.multiplicities))


@dataclass(frozen=True)
class GeneralizedSolution:
    """One generating polynomial Q, its fraction Q'/Q, and per-node flags."""

    Q: ComplexPolynomial
    spf: SimpleFraction
    node_status: tuple

    @property
    def all_regular(self) -> bool:
        return all(s == "regular" for s in self.node_status)


@dataclass(frozen=True)
class InterpolationFamily:
    """Solution family of a generalized interpolation problem.

    basis spans the full solution set; ordinary is an all-regular member when
    one was found.  ordinary_status is "found", "unsolvable" (every solution
    vanishes at some fixed node, certified on the basis), or "not_found"
    (heuristic search exhausted without a certificate).
    """

    basis: tuple
    ordinary: GeneralizedSolution | None
    ordinary_status: str

    @property
    def solutions(self) -> tuple:
        if self.ordinary is not None:
            return (self.ordinary,) + self.basis
        return self.basis

    def __iter__(self):
        return iter(self.solutions)

    def __len__(self):
        return len(self.solutions)

    def __getitem__(self, i):
        return self.solutions[i]


def _poly_of(q) -> ComplexPolynomial:
    if isinstance(q, ComplexPolynomial):
        return q
    return ComplexPolynomial.make(q)


def classify_nodes(Q, nodes, tol: float = 1e-8) -> tuple:
    """Per-node "regular"/"singular" flags; singular means |Q(xi_j)| is below
    tol relative to the coefficient scale."""
    Q = _poly_of(Q)
    if isinstance(nodes, InterpolationTable):
        nodes = nodes.nodes
    nodes = np.atleast_1d(np.asarray(nodes, dtype=complex))
    coeffs = Q.array
    scale = np.abs(coeffs).max()
    if scale == 0:
        raise ValueError("zero polynomial cannot be classified")
    deg = coeffs.size - 1
    vals = np.abs(Q(nodes))
    small = vals <= tol * scale * (1.0 + np.abs(nodes)) ** deg
    return tuple("singular" if s else "regular" for s in small)


def _trim_trailing(v: np.ndarray, rtol: float = 1e-12) -> np.ndarray:
    # nullspace vectors carry rounding noise in their top coefficients;
    # treat those as born from a lower-degree solution
    keep = np.nonzero(np.abs(v) > rtol * np.abs(v).max())[0]
    return v[: keep[-1] + 1]


def _vector_regular(v: np.ndarray, nodes: np.ndarray, tol: float) -> bool:
    q = _trim_trailing(v)
    vals = np.abs(np.polyval(q[::-1], nodes))
    bound = tol * np.abs(q).max() * (1.0 + np.abs(nodes)) ** (q.size - 1)
    return bool(np.all(vals > bound))


def _solution_from_vector(v: np.ndarray, nodes: np.ndarray, tol: float) -> GeneralizedSolution:
    q = _trim_trailing(v)
    q = q / np.abs(q).max()
    Q = ComplexPolynomial.make(q)
    spf = SimpleFraction.from_polynomial(Q)
    return GeneralizedSolution(Q, spf, classify_nodes(Q, nodes, tol))


def _solve_family(A: np.ndarray, nodes: np.ndarray, tol: float) -> InterpolationFamily:
    """Nullspace basis plus the search for an all-regular member.

    A node kills the ordinary task exactly when evaluation at it vanishes on
    the whole nullspace; checking that on a basis is an exact certificate.
    Otherwise all-regular members are generic, and the search tries basis
    vectors, seeded random combinations, and combinations that zero out one
    node's value at a time.
    """
    ns = nullspace(A)
    dim = ns.shape[0]
    if dim == 0:
        raise RuntimeError("empty solution family; the system should be underdetermined")
    node_vals = np.polynomial.polynomial.polyval(nodes, ns.T)  # (dim, k) values Q_b(xi_j)
    if nodes.size:
        basis_scale = np.abs(ns).max(axis=1)[:, None] * (1.0 + np.abs(nodes)[None, :]) ** (
            A.shape[1] - 1
        )
        dead = np.all(np.abs(node_vals) <= tol * basis_scale, axis=0)
    else:
        dead = np.zeros(0, dtype=bool)

    candidates = [ns[i] for i in range(dim)]
    rng = np.random.default_rng(_SEARCH_SEED)
    w = rng.standard_normal((_N_RANDOM_COMBOS, dim, 2))
    combos = (w[..., 0] + 1j * w[..., 1]) @ ns
    candidates.extend(combos)
    for j in range(nodes.size):
        if dim < 2:
            break
        extra = nullspace(node_vals[:, j][None, :])
        candidates.extend(extra @ ns)

    ordinary = None
    if not np.any(dead):
        for v in candidates:
            if _vector_regular(v, nodes, tol):
                ordinary = _solution_from_vector(v, nodes, tol)
                break
        status = "found" if ordinary is not None else "not_found"
    else:
        status = "unsolvable"
    basis = tuple(_solution_from_vector(ns[i], nodes, tol) for i in range(dim))
    return InterpolationFamily(basis, ordinary, status)


def generalized_interp_simple(nodes, values, n: int | None = None, tol: float = 1e-8) -> InterpolationFamily:
    """All order <= n fractions with Q'(xi_j) = b_j Q(xi_j) at simple nodes.

    The system is k x (n+1), so the family is never empty; ordinary
    interpolation rho(xi_j) = b_j holds at exactly the regular nodes.
    """
    nodes = np.atleast_1d(np.asarray(nodes, dtype=complex))
    values = np.atleast_1d(np.asarray(values, dtype=complex))
    if nodes.size != values.size:
        raise ValueError("one value per node")
    _distinct(nodes)
    if n is None:
        n = nodes.size
    if n < 1:
        raise ValueError("order bound must be at least 1")
    i = np.arange(n + 1)
    powers = nodes[:, None] ** i[None, :]
    dpow = np.zeros_like(powers)
    dpow[:, 1:] = i[1:] * nodes[:, None] ** (i[1:] - 1)[None, :]
    A = dpow - values[:, None] * powers
    return _solve_family(A, nodes, tol)


def generalized_interp_multiple(table: InterpolationTable, n: int | None = None, tol: float = 1e-8) -> InterpolationFamily:
    """Multi-node problem Q^(s+1)(xi_j) = h_{j,s} Q(xi_j), s < m_j.

    The right-hand factors h_{j,s} come from the differential tower applied
    to the prescribed values, so a regular node carries ordinary Hermite
    contact rho^(s)(xi_j) = b_{j,s}.
    """
    if n is None:
        n = table.M
    if n < 1:
        raise ValueError("order bound must be at least 1")
    m_max = max(table.multiplicities)
    if m_max > MAX_NODE_MULTIPLICITY:
        raise ValueError("node multiplicity %d exceeds the supported %d" % (m_max, MAX_NODE_MULTIPLICITY))
    tower = build_tower(m_max - 1)
    nodes = np.asarray(table.nodes, dtype=complex)
    i = np.arange(n + 1)
    rows = []
    for xi, m, vals in zip(nodes, table.multiplicities, table.values):
        h = reduce_values(tower, vals)
        powers = xi**i
        for s in range(m):
            fall = np.ones(n + 1)
            for t in range(s + 1):
                fall *= i - t
            dpow = np.zeros(n + 1, dtype=complex)
            dpow[s + 1 :] = fall[s + 1 :] * xi ** np.arange(n - s)
            rows.append(dpow - h[s] * powers)
    A = np.vstack(rows)
    return _solve_family(A, nodes, tol)
