"""
Extremal fractions and alternance pathologies
=============================================

Among order-n fractions with poles outside a fixed ellipse, the smallest
weighted deviation sqrt(1-x^2)|rho| on [-1,1] is reached by poles sitting
at the Joukowski images of the n-th roots of omega.  Its weighted profile
equioscillates, yet for fractions alternance behaves unlike polynomials:
a difference of two order-n fractions can change sign fewer than 2n times,
and a best approximation need not be unique.
"""

import numpy as np

from spfkit import (
    counterexample_2n_alternance,
    extremal_fraction,
    nonuniqueness_fraction,
    nonuniqueness_lambda_star,
    omega_from_delta,
)

# clearance delta = 0.5, order 8
n = 8
ex = extremal_fraction(omega_from_delta(0.5, n), n)
print("omega = %.6f, poles on the ellipse to %.1e"
      % (ex.omega, ex.ellipse_residual()))
print("weighted norm, two routes: %.12e vs %.12e"
      % (ex.weighted_norm(), ex.norm_star()))

phis = ex.equioscillation_phis()
vals = ex.weighted_profile(phis)
print("equioscillation at %d angles, signs %s"
      % (len(phis), "".join("+" if v > 0 else "-" for v in vals)))

# pushing omega to n^2 keeps the endpoint value of the unweighted fraction
# bounded: rho(1) = -2 n^2 omega/(omega-1)^2, under 3 in magnitude
for nn in (5, 10, 20):
    exn = extremal_fraction(float(nn * nn), nn)
    print("n = %2d: rho(1) = %.6f" % (nn, np.real(exn.pole_sum(1.0))))

# the alternance counterexample: P'Q - Q'P for the paired products has only
# 2n - 2 sign changes inside (-1, 1) once the shift is small enough
for m in (1, 2):
    rep = counterexample_2n_alternance(m)
    print("m = %d (order %d): %d sign changes (target %d), eps = %.1e"
          % (m, 2 * m, rep.count, rep.target, rep.epsilon))
    print("  zeros:", np.round(rep.zeros, 8))

# non-uniqueness: every member of a one-parameter family best-approximates
# x + 1 until the parameter crosses lambda*
lam_star = nonuniqueness_lambda_star()
print("lambda* = %.12f" % lam_star)
xs = np.linspace(-1, 1, 20001)
for lam in (1.0, 1.4, lam_star, 1.63):
    frac = nonuniqueness_fraction(lam)
    dev = np.abs((xs + 1) - frac(xs.astype(complex)).real).max()
    print("lam = %.6f: deviation %.9f" % (lam, dev))
