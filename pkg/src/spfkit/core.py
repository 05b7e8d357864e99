"""Simple partial fractions and the differential tower they satisfy.

A simple partial fraction of order n is the logarithmic derivative of a
degree-n polynomial: rho(z) = sum_k 1/(z - z_k) with Q(z) = prod_k (z - z_k).
The empty pole set gives the zero fraction.  Alongside the fraction itself
this module builds the universal polynomials F_s in rho, rho', ..., rho^(s)
with F_s = Q^(s+1)/Q, whose vanishing at s = n is the autonomous ODE
satisfied by every fraction of order at most n.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .numkit import ComplexPolynomial, RootFindingError, find_roots

__all__ = [
    "SimpleFraction",
    "DiffOperatorTower",
    "build_tower",
    "reduce_values",
    "ode_residual",
]

# Monomial count of F_s is the partition count p(s+1); depth 12 means 101
# terms, still cheap, while the growth beyond that is of no practical use.
MAX_TOWER_DEPTH = 12


@dataclass(frozen=True)
class SimpleFraction:
    """sum_k 1/(z - poles[k]); order = number of poles, multiplicity counts."""

    poles: tuple

    @staticmethod
    def make(poles) -> "SimpleFraction":
        arr = np.atleast_1d(np.asarray(poles, dtype=complex))
        if arr.ndim != 1:
            raise ValueError("poles must form a 1-d sequence")
        return SimpleFraction(tuple(arr))

    @property
    def order(self) -> int:
        return len(self.poles)

    @property
    def pole_array(self) -> np.ndarray:
        return np.asarray(self.poles, dtype=complex)

    def __call__(self, z, s: int = 0):
        """Value of the s-th derivative: sum_k (-1)^s s! (z - z_k)^(-s-1)."""
        if s < 0:
            raise ValueError("derivative order must be nonnegative")
        z_arr = np.asarray(z, dtype=complex)
        if self.order == 0:
            out = np.zeros_like(z_arr)
            return out if z_arr.ndim else complex(out)
        diff = z_arr[..., None] - self.pole_array
        if np.any(diff == 0):
            raise ZeroDivisionError("evaluation at a pole")
        total = ((-1) ** s * math.factorial(s)) * (diff ** (-s - 1)).sum(axis=-1)
        return total if z_arr.ndim else complex(total)

    @staticmethod
    def from_polynomial(q, tol: float = 1e-10) -> "SimpleFraction":
        """Logarithmic derivative Q'/Q of a nonzero polynomial.

        Constants map to the zero fraction.  Raises RootFindingError when the
        root finder cannot certify the pole set.
        """
        if not isinstance(q, ComplexPolynomial):
            q = ComplexPolynomial.make(q)
        if q.degree == float("-inf"):
            raise ValueError("the zero polynomial has no logarithmic derivative")
        if q.degree == 0:
            return SimpleFraction(())
        rs = find_roots(q, tol=tol)
        if not rs.converged:
            raise RootFindingError(
                "pole extraction did not converge (residual %.3e)" % rs.residual,
                partial=SimpleFraction(rs.roots),
            )
        return SimpleFraction(rs.roots)

    def to_rational(self):
        """(Q', Q) with Q monic built from the poles by exact convolution."""
        q = np.array([1.0 + 0.0j])
        for zk in self.poles:
            q = np.convolve(q, np.array([-zk, 1.0 + 0.0j]))
        den = ComplexPolynomial(tuple(q))
        return den.derivative(), den

    def maclaurin(self, terms: int) -> np.ndarray:
        """First ``terms`` Maclaurin coefficients; every pole must be nonzero.

        With lambda_k = 1/z_k the coefficient of z^m is -sum_k lambda_k^(m+1).
        """
        if terms < 1:
            raise ValueError("terms must be at least 1")
        if self.order == 0:
            return np.zeros(terms, dtype=complex)
        if np.any(self.pole_array == 0):
            raise ZeroDivisionError("Maclaurin expansion needs poles away from 0")
        lam = 1.0 / self.pole_array
        powers = lam[None, :] ** (np.arange(1, terms + 1)[:, None])
        return -powers.sum(axis=1)


@dataclass(frozen=True)
class DiffOperatorTower:
    """Polynomials F_0..F_depth in w_0, w_1, ... with F_s(rho, rho', ...) = Q^(s+1)/Q.

    Each level is a dict mapping an exponent tuple (a_0, a_1, ...) to its
    integer coefficient; trailing zero exponents are trimmed.
    """

    levels: tuple

    @property
    def depth(self) -> int:
        return len(self.levels) - 1

    def evaluate(self, s: int, values):
        """F_s with w_i := values[i]; values may hold scalars or arrays."""
        if not 0 <= s <= self.depth:
            raise ValueError("level %d outside tower of depth %d" % (s, self.depth))
        vals = list(values)
        if len(vals) < s + 1:
            raise ValueError("level %d needs %d values, got %d" % (s, s + 1, len(vals)))
        total = 0
        for exps, coeff in self.levels[s].items():
            term = coeff
            for i, a in enumerate(exps):
                if a:
                    term = term * vals[i] ** a
            total = total + term
        return total


def _bump_w0(exps: tuple) -> tuple:
    return (exps[0] + 1,) + exps[1:]


def _shift(exps: tuple, i: int) -> tuple:
    # differentiate one w_i factor: w_i -> w_{i+1}
    lst = list(exps)
    lst[i] -= 1
    if i + 1 == len(lst):
        lst.append(0)
    lst[i + 1] += 1
    while len(lst) > 1 and lst[-1] == 0:
        lst.pop()
    return tuple(lst)


def build_tower(depth: int) -> DiffOperatorTower:
    """Tower F_0 = w_0, F_{s+1} = w_0 F_s + D F_s with D w_i = w_{i+1}.

    Exact integer coefficients throughout; depth is capped at
    MAX_TOWER_DEPTH because the term count is the partition number p(depth+1).
    """
    if depth < 0:
        raise ValueError("depth must be nonnegative")
    if depth > MAX_TOWER_DEPTH:
        raise ValueError("depth %d exceeds the supported maximum %d" % (depth, MAX_TOWER_DEPTH))
    levels = [{(1,): 1}]
    for _ in range(depth):
        nxt: dict = {}
        for exps, coeff in levels[-1].items():
            key = _bump_w0(exps)
            nxt[key] = nxt.get(key, 0) + coeff
            for i, a in enumerate(exps):
                if a:
                    key = _shift(exps, i)
                    nxt[key] = nxt.get(key, 0) + coeff * a
        levels.append(nxt)
    return DiffOperatorTower(tuple(levels))


def reduce_values(tower: DiffOperatorTower, b):
    """h_s = F_s(w_i := b_i) for s = 0..len(b)-1."""
    vals = list(np.asarray(b, dtype=complex))
    if not vals:
        raise ValueError("need at least one prescribed value")
    if len(vals) - 1 > tower.depth:
        raise ValueError("tower too shallow for %d values" % len(vals))
    return np.array([tower.evaluate(s, vals) for s in range(len(vals))])


def ode_residual(fraction: SimpleFraction, n: int, z) -> np.ndarray:
    """F_n(rho, rho', ..., rho^(n)) at z; zero whenever fraction.order <= n."""
    if n < 0:
        raise ValueError("n must be nonnegative")
    tower = build_tower(n)
    z_arr = np.atleast_1d(np.asarray(z, dtype=complex))
    values = [fraction(z_arr, s) for s in range(n + 1)]
    return np.asarray(tower.evaluate(n, values))
