"""
The derivative tower and the order ODE
======================================

Writing w_0 = rho, w_1 = rho', ... there are universal integer-coefficient
polynomials F_s with F_s(w_0, ..., w_s) = Q^(s+1)/Q for rho = Q'/Q.  They
obey F_{s+1} = w_0 F_s + D F_s, their term counts are the partition numbers,
and F_n vanishes identically on every fraction of order at most n: a single
differential equation characterizing the class.
"""

import numpy as np

from spfkit import SimpleFraction, build_tower, ode_residual

tower = build_tower(6)
print("terms per level:", [len(lv) for lv in tower.levels])  # partition numbers

# F_1 = w_0^2 + w_1, F_2 = w_0^3 + 3 w_0 w_1 + w_2, printed from the stored maps
for s in (1, 2, 3):
    terms = sorted(tower.levels[s].items())
    pretty = " + ".join(
        ("%d " % c if c != 1 else "") + " ".join("w%d^%d" % (i, a) if a > 1 else "w%d" % i
                                                 for i, a in enumerate(e) if a)
        for e, c in terms)
    print("F_%d = %s" % (s, pretty))

# evaluating the tower on an order-3 fraction: F_3 vanishes on the nose,
# while lower levels reproduce Q''''/Q etc.
frac = SimpleFraction.make([1.5 + 0.5j, -0.7 + 1.0j, 2.0 - 0.3j])
pts = np.array([0.3, -1.2 + 0.4j, 0.8j])
print("F_3 residual on an order-3 fraction: %.2e"
      % np.abs(ode_residual(frac, 3, pts)).max())
print("F_6 residual (order 3 <= 6 still annihilates): %.2e"
      % np.abs(ode_residual(frac, 6, pts)).max())

# an order-4 fraction does not satisfy the order-3 equation
frac4 = SimpleFraction.make([1.5 + 0.5j, -0.7 + 1.0j, 2.0 - 0.3j, -2.0 - 1.0j])
print("F_3 on an order-4 fraction: %.3f" % np.abs(ode_residual(frac4, 3, pts)).max())
