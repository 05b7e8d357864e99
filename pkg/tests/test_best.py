import math

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from spfkit.best import (
    alternance_criterion,
    alternance_detect,
    borchardt_identity,
    counterexample_2n_alternance,
    extremal_fraction,
    nonuniqueness_fraction,
    nonuniqueness_lambda_star,
    omega_from_delta,
    remez_constant,
    vallee_poussin_bound,
)
from spfkit.core import SimpleFraction
from spfkit.numkit import sup_norm


# ------------------------------------------------------------------ remez


def test_remez_reference_run():
    res = remez_constant(0.3, 5, tol=1e-8)
    assert res.converged
    assert res.in_guarantee_regime  # 0.3 <= 5/8
    assert res.deviation == pytest.approx(3.784088e-7, rel=1e-4)
    assert res.report.count == 6
    assert res.report.equalization < 1e-6


def test_remez_deviation_in_two_sided_box():
    for c, n in ((0.3, 5), (0.2, 4), (0.45, 6)):
        res = remez_constant(c, n, tol=1e-8)
        fact = math.factorial(n)
        lower = c ** (n + 1) * math.exp(-2 * c) / (
            2 ** (n - 1) * fact * (1 + 2 * c * math.exp(c)))
        upper = 2 * (1 + c) * math.exp(2 * c) * c ** (n + 1) / (2 ** (n - 1) * fact)
        assert lower <= res.deviation <= upper


def test_remez_validates_input():
    with pytest.raises(ValueError):
        remez_constant(0.0, 4)
    with pytest.raises(ValueError):
        remez_constant(0.3, 0)


def test_remez_result_unpacks():
    spf, report = remez_constant(0.25, 3)
    assert isinstance(spf, SimpleFraction)
    assert report.count >= 4


def test_vallee_poussin_sandwich():
    res = remez_constant(0.3, 4, tol=1e-8)
    lower = vallee_poussin_bound(0.3, res.spf, res.report.points)
    assert lower <= res.deviation * (1 + 1e-9)
    assert lower >= res.deviation * (1 - 1e-4)  # nearly equalized


def test_vallee_poussin_rejects_same_signs():
    frac = SimpleFraction.make([3.0])
    with pytest.raises(ValueError):
        vallee_poussin_bound(0.0, frac, [0.1, 0.2])  # residual keeps one sign


def test_alternance_detect_chebyshev():
    # e(x) = T_4(x) equioscillates 5 times; feed it as an explicit residual
    frac = SimpleFraction.make([10.0])  # placeholder, residual overrides it

    def t4(x):
        return np.polyval([8, 0, -8, 0, 1], x)

    rep = alternance_detect(0.0, frac, residual=t4)
    assert rep.count == 5
    assert rep.deviation == pytest.approx(1.0, abs=1e-9)
    assert np.allclose(rep.points, np.cos(np.pi * np.arange(4, -1, -1) / 4), atol=1e-6)
    assert rep.equalization < 1e-9


def test_alternance_criterion_verdicts():
    res = remez_constant(0.3, 3, tol=1e-8)
    assert alternance_criterion(0.3, res.spf, n=3) == "certified-best"
    # a pole inside the unit disk silences the criterion
    assert alternance_criterion(0.3, SimpleFraction.make([0.5]), n=1) == "not-applicable"
    # too few alternance points fails
    assert alternance_criterion(0.3, SimpleFraction.make([5.0]), n=1) == "fails"


# --------------------------------------------------------------- extremal


def test_extremal_two_norm_routes_agree():
    for delta in (0.3, 0.5, 0.8):
        for n in (1, 2, 5, 12, 25):
            ex = extremal_fraction(omega_from_delta(delta, n), n)
            assert ex.weighted_norm() == pytest.approx(ex.norm_star(), rel=1e-12)
            assert ex.delta == pytest.approx(delta, rel=1e-12)


def test_extremal_profile_equioscillates():
    ex = extremal_fraction(omega_from_delta(0.5, 6), 6)
    phis = ex.equioscillation_phis()
    assert phis.size == ex.n
    vals = ex.weighted_profile(phis)
    assert np.allclose(np.abs(vals), ex.weighted_norm(), rtol=1e-10)
    signs = np.sign(vals)
    assert np.all(signs[1:] * signs[:-1] < 0)


def test_extremal_profile_sup_matches_norm():
    ex = extremal_fraction(omega_from_delta(0.8, 25), 25)
    val, _ = sup_norm(lambda phi: np.abs(ex.weighted_profile(phi)), 0.0, np.pi)
    assert val == pytest.approx(ex.norm_star(), rel=1e-9)


def test_extremal_endpoint_value():
    # at omega = n^2 the right endpoint of the segment sees
    # rho(1) = -2 n^2 omega / (omega - 1)^2, below 3 in magnitude
    for n in (5, 10, 40):
        omega = float(n * n)
        ex = extremal_fraction(omega, n)
        expect = -2.0 * n * n * omega / (omega - 1.0) ** 2
        assert ex.pole_sum(1.0) == pytest.approx(expect, rel=1e-9)
        assert abs(expect) < 3.0
    assert abs(extremal_fraction(25.0, 5).pole_sum(1.0)) == pytest.approx(
        2.170139, abs=1e-6)


def test_extremal_poles_on_ellipse():
    ex = extremal_fraction(7.0, 4)
    assert ex.ellipse_residual() < 1e-12
    # closed form and pole sum agree away from the poles
    xs = np.linspace(-0.9, 0.9, 30)
    assert np.abs(ex.closed_form(xs) - ex.pole_sum(xs)).max() < 1e-9


def test_omega_from_delta_inverts():
    for n in (1, 3, 9):
        omega = omega_from_delta(0.4, n)
        a = omega ** (1.0 / n)
        assert a + 1.0 / a == pytest.approx(2 * 1.4, rel=1e-13)
    with pytest.raises(ValueError):
        omega_from_delta(0.0, 3)
    with pytest.raises(ValueError):
        extremal_fraction(0.9, 3)


# ----------------------------------------------------- counterexample, etc.


def test_counterexample_zero_counts():
    for m in (1, 2, 3):
        n = 2 * m
        rep = counterexample_2n_alternance(m)
        assert rep.achieved
        assert rep.count == 2 * n - 2
        zeros = np.asarray(rep.zeros)
        assert np.all((zeros > -1) & (zeros < 1))
        # symmetric construction, antisymmetric zero set
        assert np.allclose(np.sort(-zeros), zeros, atol=1e-8)


def test_counterexample_frozen_zeros():
    rep = counterexample_2n_alternance(1)
    assert np.allclose(np.abs(rep.zeros), 0.50009999, atol=1e-6)
    rep = counterexample_2n_alternance(2)
    mags = np.sort(np.unique(np.round(np.abs(rep.zeros), 8)))
    assert np.allclose(mags, [0.25577607, 0.34420102, 0.50359136], atol=1e-6)


def test_nonuniqueness_threshold():
    lam = nonuniqueness_lambda_star()
    assert lam == pytest.approx(1.6175223329386696, abs=1e-9)

    def dev(l):
        xs = np.linspace(-1, 1, 20001)
        return np.abs((xs + 1) - (2 * xs + l) / (xs * xs + l * xs + 1)).max()

    # every member up to lambda* keeps deviation 1; beyond it grows
    assert dev(1.0) == pytest.approx(1.0, abs=1e-9)
    assert dev(1.3) == pytest.approx(1.0, abs=1e-9)
    assert dev(lam - 1e-3) == pytest.approx(1.0, abs=1e-9)
    assert dev(lam + 0.02) > 1.0 + 1e-5


def test_nonuniqueness_fraction_family():
    frac = nonuniqueness_fraction(1.2)
    x = 0.4
    assert frac(x) == pytest.approx((2 * x + 1.2) / (x * x + 1.2 * x + 1), abs=1e-12)
    with pytest.raises(ValueError):
        nonuniqueness_fraction(2.0)


# ------------------------------------------------------------- borchardt


def test_borchardt_identity_fixed():
    rep = borchardt_identity([0.0, 1.0, 2.0], [5.0, 6.0, 7.0])
    assert rep.identity_error < 1e-12
    assert rep.cauchy_error < 1e-12


def test_borchardt_identity_complex():
    rng = np.random.default_rng(5)
    for n in (1, 2, 4, 6):
        pts = rng.standard_normal(2 * n) + 1j * rng.standard_normal(2 * n)
        rep = borchardt_identity(pts[:n], pts[n:])
        assert rep.identity_error < 1e-9
        assert rep.cauchy_error < 1e-9


def test_borchardt_validates():
    with pytest.raises(ValueError):
        borchardt_identity([1.0, 2.0], [3.0])
    with pytest.raises(ZeroDivisionError):
        borchardt_identity([1.0], [1.0])


@settings(max_examples=25, deadline=None)
@given(st.integers(min_value=1, max_value=5), st.integers(min_value=0, max_value=10**6))
def test_borchardt_identity_random(n, seed):
    rng = np.random.default_rng(seed)
    xi = rng.uniform(-2, 2, n) + 1j * rng.uniform(0.5, 2, n)
    z = rng.uniform(-2, 2, n) - 1j * rng.uniform(0.5, 2, n)
    rep = borchardt_identity(xi, z)
    assert rep.identity_error < 1e-8
    assert rep.cauchy_error < 1e-8
