"""
Generalized multi-node interpolation
====================================

rho(xi_j) = v_j always has polynomial-family solutions Q with rho = Q'/Q,
but an individual node can be singular: Q(xi_j) = 0 makes the fraction
keep a pole there instead of taking the value.  Some node systems are
unsolvable outright, certified when every basis solution vanishes at one
fixed node.
"""

import math

import numpy as np

from spfkit import classify_nodes, generalized_interp_simple

# two nodes, two values: the solution family is two dimensional
fam = generalized_interp_simple([-1.0, 1.0], [-1.0, 1.0], n=2)
print("solution space dimension:", len(fam.basis))
print("ordinary solution status:", fam.ordinary_status)
print("ordinary Q coefficients:", np.round(fam.ordinary.Q.array, 10))
x = 0.37
print("check rho(0.37) = 1/0.37:", fam.ordinary.spf(x), 1 / x)

# inside the family Q_alpha = z^2 + alpha z + 1 every alpha solves the
# equations, but alpha = +-2 puts a root on a node
for alpha in (0.0, 1.0, 2.0, -2.0, 3.5):
    status = classify_nodes([1.0, alpha, 1.0], [-1.0, 1.0])
    print("alpha = %+.1f ->" % alpha, status)

# a five-node system with no ordinary solution at all: every member of the
# two-dimensional family vanishes at the node 0
r2, r3 = math.sqrt(2.0), math.sqrt(3.0)
fam5 = generalized_interp_simple(
    [r2, -r2, 1 / r3, -1 / r3, 0.0],
    [3 * r2, -3 * r2, r3, -r3, 1.0],
    n=5,
)
print("five-node status:", fam5.ordinary_status)
for k, sol in enumerate(fam5.basis):
    print("  basis %d: |Q(0)| = %.2e, flags %s" % (k, abs(sol.Q.array[0]), sol.node_status))
