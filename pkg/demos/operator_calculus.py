"""
Sums of dilated functions as operators
======================================

H(z) = sum lambda_k h(lambda_k z) has Maclaurin coefficients h_m S_{m+1},
so prescribing the power sums S of the frequencies turns dilation sums
into differentiation, integration, or extrapolation formulas that are
exact on low-degree polynomials.  Adding amplitudes (Prony's problem in
reverse) buys regularization: a small moment perturbation keeps every
frequency in a strictly smaller disk.
"""

import numpy as np

from spfkit import (
    diff_nodes,
    extrap_freqs,
    extrapolate,
    gauss_quadrature,
    int_nodes,
    prony_solve,
    reg_diff,
    reg_extrap,
)
from spfkit.numkit import PowerSeries, power_sums

z = 0.7 + 0.3j
n = 6

# differentiation: S_j = j makes z h' = -h + sum lambda h(lambda z) exact
lam = diff_nodes(n)
h = PowerSeries.make(np.array([1.0, -0.5, 0.3, 0.1, -0.2, 0.05]))
dh = np.polyval((h.array[1:] * np.arange(1, n))[::-1], z)
print("diff identity residual: %.2e"
      % abs(z * dh - (-h(z) + (lam * h(lam * z)).sum())))

# integration: S_j = 1/j; note the double node at 1/2 for n = 2
print("int nodes, n=2:", np.round(np.sort(int_nodes(2).real), 12))

# extrapolation reads h at z/a-scale points and recovers h(z); all
# frequencies stay inside |z| <= a - (a-1)/n
a = 2.0
lam = extrap_freqs(a, n)
print("max|lambda| = %.6f  vs bound %.6f" % (np.abs(lam).max(), a - (a - 1) / n))
print("extrapolation residual (degree < n): %.2e"
      % abs(extrapolate(h, a, n, 2, z) - h(z)))

# Prony: moments -> amplitude/frequency pairs, with regularity flags
sol = prony_solve([4.0, -1.0, 7.0, 5.0])
print("freqs", np.round(sol.freqs, 10), "amps", np.round(sol.amps, 10),
      "regular:", sol.regular)

# the moments of the uniform measure give Gauss-Legendre nodes and weights
af = gauss_quadrature([1.0], 3)
print("gauss n=3 nodes:", np.round(af.freqs, 12))
print("gauss n=3 weights:", np.round(af.amps, 12))

# regularized differentiation: perturbing moments n-1 and 2n-1 by p and
# q(p) keeps the formula exact to degree < 2n
p_used, q, af = reg_diff(4, 1.0)
print("reg diff n=4: p = %g, matched q = %.6f" % (p_used, q))

# regularized extrapolation contracts the frequency disk as p grows
for p in (0.5, 1.0, 2.0):
    af, rep = reg_extrap(2.0, 3, p)
    print("p = %.1f: max freq %.6f < radius %.6f (holds: %s)"
          % (p, rep.max_freq, rep.radius, rep.bound_holds))
