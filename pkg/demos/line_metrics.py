"""
Exact identities on the real line
=================================

For poles in the open upper half-plane the Blaschke product of the pole
set has strictly increasing argument on R.  Fixing any angle phi gives 2n
notch points, and the imaginary part mu = Im rho sampled there integrates
|rho|^2 exactly: pi * sum mu(t_s) = ||rho||_2^2, independent of phi.
"""

import numpy as np

from spfkit import (
    HalfPlanePoles,
    derivative_suite,
    inequality_suite,
    l2_quadrature,
    lp_norm_real_line,
    notch_points,
    sup_norm_real_line,
)

hp = HalfPlanePoles.make([1j, 2.0 + 0.5j, -1.5 + 1.2j])

# the quadrature value does not move as phi sweeps the circle
closed = float(np.real((2j * np.pi / (
    np.asarray(hp.poles)[:, None] - np.conj(hp.poles)[None, :])).sum()))
print("closed-form ||rho||_2^2 =", closed)
for phi in (0.4, np.pi, 5.5):
    notch = notch_points(hp, phi)
    print("phi = %.2f: %d notch points, quadrature %.15f"
          % (phi, len(notch.points), l2_quadrature(hp, phi)))

# direct numerical norms agree and satisfy the two-sided inequality
l2 = lp_norm_real_line(hp.poles, 2.0)
sup = sup_norm_real_line(hp.poles)
n = hp.n
print("L2 %.6f  sup %.6f" % (l2, sup))
print("(2n)^-1 ||rho||_2^2 < pi ||rho||_inf < 2 ||rho||_2^2:",
      l2**2 / (2 * n) < np.pi * sup < 2 * l2**2)

for check in inequality_suite(hp.poles):
    flag = {True: "holds", False: "VIOLATED", None: "observed"}[check.passed]
    print("%-22s %-9s left %.4e  right %.4e  %s"
          % (check.name, flag, check.left, check.right, check.note))

# derivative bounds: |mu'| <= chi and |rho'| + |mu'| <= 2 chi pointwise,
# with chi = (|nu| + ||nu||_inf) mu; equality for a single pole
for check in derivative_suite(hp.poles):
    flag = {True: "holds", False: "VIOLATED", None: "observed"}[check.passed]
    print("%-22s %-9s left %.4e  right %.4e  %s"
          % (check.name, flag, check.left, check.right, check.note))
