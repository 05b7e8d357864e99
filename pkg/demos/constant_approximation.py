"""
Approximating a constant on [-1, 1]
===================================

A constant c is interpolated exactly at n Chebyshev nodes by a fraction
whose generating polynomial is the explicit sum Q = sum c^-k Pi^(k); the
residual c - rho has the closed form c Pi / Q.  Equalizing the residual
over the node-gap intervals then yields the best approximation, whose
deviation must land inside a two-sided factorial-decay box.
"""

import math

import numpy as np

from spfkit import (
    alternance_criterion,
    constant_generating_polynomial,
    interpolate_constant,
    remez_constant,
    vallee_poussin_bound,
)

c, n = 0.3, 5

# interpolation step: exact hits at the Chebyshev points
nodes = np.cos((2 * np.arange(n, 0, -1) - 1) * np.pi / (2 * n))
sol = interpolate_constant(c, nodes)
print("interpolation residual at the nodes: %.2e" % np.abs(sol.spf(nodes) - c).max())

Q, Pi = constant_generating_polynomial(c, nodes)
xs = np.linspace(-1, 1, 4001)
sup = np.abs(np.real(c * Pi(xs) / Q(xs))).max()
bound = c * (1 - c) / ((1 - 2 * c) * 2 ** (2 * n - 1) * math.factorial(n))
print("sup residual %.3e  vs  node bound %.3e" % (sup, bound))

# best approximation: equalize the interval norms
res = remez_constant(c, n, tol=1e-8)
print("deviation %.6e after %d iterations (converged: %s)"
      % (res.deviation, res.iterations, res.converged))
print("alternance points (%d):" % res.report.count,
      np.round(res.report.points, 6))

# the deviation sits inside the two-sided box, and the de la Vallee Poussin
# minimum over the alternance points pins it from below
fact = math.factorial(n)
lower = c ** (n + 1) * math.exp(-2 * c) / (2 ** (n - 1) * fact * (1 + 2 * c * math.exp(c)))
upper = 2 * (1 + c) * math.exp(2 * c) * c ** (n + 1) / (2 ** (n - 1) * fact)
print("box [%.3e, %.3e]" % (lower, upper))
print("lower bound from the alternance: %.6e"
      % vallee_poussin_bound(c, res.spf, res.report.points))
print("criterion verdict:", alternance_criterion(c, res.spf, n=n))
