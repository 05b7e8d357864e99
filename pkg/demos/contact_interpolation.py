"""
Contact interpolation at the origin
===================================

Build a logarithmic-derivative fraction rho(z) = sum 1/(z - z_k) whose
Maclaurin series matches that of the exponential to order n, two
independent ways, and compare the actual remainder with the a-priori
bound on a disk.
"""

import math

import numpy as np

from spfkit import contact_epsilon, pade_error_bound, pade_remainder, pade_spf, pade_spf_exp

# target: f = e^z, coefficients 1/m!; they satisfy |f_{m-1}| <= a^m with a = 1
n = 6
f = np.array([1.0 / math.factorial(m) for m in range(24)])

def _paired(z):
    # lexicographic sort with rounded keys so conjugate pairs whose real
    # parts differ only in the last bit line up across the two routes
    z = np.asarray(z)
    return z[np.lexsort((z.imag.round(9), z.real.round(9)))]


frac = pade_spf(f, n)
print("poles:", np.round(_paired(frac.pole_array), 6))

# the same fraction through the exponential of the integrated series;
# the generating polynomial there is a partial sum of exp(int f)
frac_exp = pade_spf_exp(f, n)
gap = np.abs(_paired(frac.pole_array) - _paired(frac_exp.pole_array)).max()
print("route disagreement: %.2e" % gap)

# contact: the first n series coefficients agree
print("coefficient residual: %.2e" % np.abs(frac.maclaurin(n) - f[:n]).max())

# the bound needs |z| < r < (1 - eps_n)/a; print the admissible radius first
a = 1.0
print("eps_%d = %.6f, so r may go up to %.4f" % (n, contact_epsilon(n), (1 - contact_epsilon(n)) / a))
r = 0.65
for z in (0.1, 0.3, 0.2 + 0.25j):
    actual = abs(pade_remainder(f, frac, z))
    bound = pade_error_bound(a, n, z, r)
    print("z = %-12s remainder %.3e  bound %.3e" % (z, actual, bound))
