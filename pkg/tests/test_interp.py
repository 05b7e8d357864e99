import math

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from spfkit.core import SimpleFraction
from spfkit.interp import (
    InterpolationTable,
    classify_nodes,
    constant_generating_polynomial,
    contact_epsilon,
    frequency_bound_check,
    generalized_interp_multiple,
    generalized_interp_simple,
    interpolate_constant,
    pade_error_bound,
    pade_remainder,
    pade_spf,
    pade_spf_exp,
)


def _sorted(z):
    z = np.asarray(z)
    return z[np.lexsort((z.imag, z.real))]


# ---------------------------------------------------------------- contact


def test_pade_matches_series_coefficients():
    f = [1.0, -0.5, 0.3, 0.1, -0.2, 0.05]
    for n in (1, 2, 3, 4, 5):
        frac = pade_spf(f, n)
        assert np.allclose(frac.maclaurin(n), f[:n], atol=1e-10)


def test_pade_known_geometric():
    # f_m = -a^(m+1) is the series of rho(z) = 1/(z - 1/a)
    a = 0.7
    f = [-(a ** (m + 1)) for m in range(6)]
    frac = pade_spf(f, 1)
    assert frac.order == 1
    assert frac.pole_array[0] == pytest.approx(1.0 / a, abs=1e-10)
    # higher contact keeps the true pole and the coefficient match even
    # though the power-sum polynomial picks up a near-zero root cluster
    frac4 = pade_spf(f, 4)
    assert np.abs(frac4.pole_array - 1.0 / a).min() < 1e-9
    assert np.allclose(frac4.maclaurin(4), f[:4], atol=1e-9)


def test_pade_two_routes_agree():
    rng = np.random.default_rng(7)
    for n in (2, 3, 5, 8):
        f = 0.4 * (rng.standard_normal(n) + 1j * rng.standard_normal(n))
        p1 = _sorted(pade_spf(f, n).pole_array)
        p2 = _sorted(pade_spf_exp(f, n).pole_array)
        assert p1.size == p2.size
        assert np.abs(p1 - p2).max() < 1e-7


def test_pade_order_drop():
    # identically zero series: order-0 fraction, no poles
    frac = pade_spf([0.0, 0.0, 0.0], 3)
    assert frac.order == 0
    assert frac(1.7) == 0


def test_pade_remainder_consistency():
    # target is itself a fraction with poles 2 and -3; a low-order contact
    # leaves a remainder equal to the function difference
    true = SimpleFraction.make([2.0, -3.0])
    m = np.arange(40)
    f = -(2.0 ** -(m + 1)) + (-1.0) ** m * 3.0 ** -(m + 1)
    frac = pade_spf(f, 1)
    z = 0.3 + 0.2j
    assert pade_remainder(f, frac, z) == pytest.approx(true(z) - frac(z), abs=1e-12)


def test_pade_remainder_rejects_pole():
    frac = pade_spf([0.5, 0.25, 0.125], 2)
    pole = frac.pole_array[0]
    with pytest.raises(ZeroDivisionError):
        pade_remainder([0.5, 0.25, 0.125], frac, pole)


def test_contact_epsilon_frozen_values():
    assert contact_epsilon(4) == pytest.approx(0.3459548158482419, abs=1e-12)
    assert contact_epsilon(8) == pytest.approx(0.2592044937298474, abs=1e-12)
    assert contact_epsilon(16) == pytest.approx(0.18175821616387086, abs=1e-12)


def test_contact_epsilon_defining_equation():
    for n in (1, 3, 7, 20):
        e = contact_epsilon(n)
        assert 0 < e < 1
        assert e * e == pytest.approx((1 - e) ** (n + 1), rel=1e-10)


def test_contact_epsilon_decreasing():
    vals = [contact_epsilon(n) for n in range(1, 24)]
    assert all(a > b for a, b in zip(vals, vals[1:]))


def test_error_bound_value():
    a, n, z, r = 1.0, 8, 0.2, 0.5
    eps = contact_epsilon(n)
    expect = (
        a / (1 - a * abs(z))
        * (abs(z) / r) ** n
        * ((1 - eps + a * r) / (1 - eps - a * r)) ** n
        * math.log(math.e * r / (r - abs(z)))
    )
    assert pade_error_bound(a, n, z, r) == pytest.approx(expect, rel=1e-14)


def test_error_bound_domain():
    with pytest.raises(ValueError):
        pade_error_bound(1.0, 8, 0.6, 0.5)  # |z| >= r
    with pytest.raises(ValueError):
        pade_error_bound(1.0, 8, 0.2, 0.9)  # r too close to 1/a
    with pytest.raises(ValueError):
        pade_error_bound(-1.0, 8, 0.2, 0.5)


def test_error_bound_covers_actual_error():
    rng = np.random.default_rng(11)
    n, r = 8, 0.5
    for _ in range(25):
        f = rng.uniform(-1, 1, 40) * rng.uniform(0, 1, 40)  # |f_m| <= 1
        frac = pade_spf(f, n)
        for z in rng.uniform(-0.4, 0.4, 5):
            err = abs(np.polyval(f[::-1], z) - frac(z))
            assert err <= pade_error_bound(1.0, n, z, r) * (1 + 1e-12)


def test_frequency_bound_check():
    # geometric sums S_m = (1/2)^m satisfy the bound with a = 1/2
    S = [0.5**m for m in range(1, 7)]
    assert frequency_bound_check(S, a=0.5)
    assert frequency_bound_check(S)
    with pytest.raises(ValueError):
        frequency_bound_check([2.0, 0.1], a=1.0)  # S_1 > a
    assert frequency_bound_check([0.0, 0.0], a=0.0)


# ---------------------------------------------------------------- constant


def test_constant_generating_polynomial_monic():
    c = 0.4
    nodes = np.array([-0.5, 0.1, 0.7])
    Q, Pi = constant_generating_polynomial(c, nodes)
    assert Q.degree == 3
    assert Q.array[-1] == pytest.approx(1.0)
    assert np.allclose(Pi(nodes), 0.0, atol=1e-14)


def test_constant_residual_identity():
    # c - Q'/Q = c Pi / Q pointwise away from the poles
    c = 0.35
    nodes = np.cos((2 * np.arange(4, 0, -1) - 1) * np.pi / 8)
    Q, Pi = constant_generating_polynomial(c, nodes)
    sol = interpolate_constant(c, nodes)
    xs = np.linspace(-1, 1, 101)
    lhs = c - sol.spf(xs)
    rhs = c * Pi(xs) / Q(xs)
    assert np.abs(lhs - rhs).max() < 1e-10


def test_constant_interpolation_hits_nodes():
    c = 0.25
    nodes = np.array([-0.8, -0.2, 0.3, 0.9])
    sol = interpolate_constant(c, nodes)
    assert np.abs(sol.spf(nodes) - c).max() < 1e-10
    assert sol.node_status == ("regular",) * 4


def test_constant_sup_bound_on_segment():
    # nodes at Chebyshev points: residual below c(1-c) / ((1-2c) 2^(2n-1) n!)
    for c in (0.2, 0.4):
        for n in (3, 5, 8):
            nodes = np.cos((2 * np.arange(n, 0, -1) - 1) * np.pi / (2 * n))
            Q, Pi = constant_generating_polynomial(c, nodes)
            xs = np.linspace(-1, 1, 4001)
            sup = np.abs(np.real(c * Pi(xs) / Q(xs))).max()
            bound = c * (1 - c) / ((1 - 2 * c) * 2 ** (2 * n - 1) * math.factorial(n))
            assert sup <= bound
            poles = SimpleFraction.from_polynomial(Q).pole_array
            assert np.abs(poles).min() > 1.0


@settings(max_examples=30, deadline=None)
@given(st.floats(min_value=0.05, max_value=0.45), st.integers(min_value=1, max_value=9))
def test_constant_interpolation_exact_at_random_orders(c, n):
    nodes = np.cos((2 * np.arange(n, 0, -1) - 1) * np.pi / (2 * n))
    sol = interpolate_constant(c, nodes)
    assert sol.spf.order == n
    assert np.abs(sol.spf(nodes) - c).max() < 1e-9


def test_distinct_nodes_required():
    with pytest.raises(ValueError):
        interpolate_constant(0.3, [0.5, 0.5])
    with pytest.raises(ValueError):
        constant_generating_polynomial(0.0, [0.1, 0.2])


# ------------------------------------------------------------- generalized


def test_two_node_family():
    fam = generalized_interp_simple([-1.0, 1.0], [-1.0, 1.0], n=2)
    assert len(fam.basis) == 2
    assert fam.ordinary_status == "found"
    # the ordinary representative is Q = z up to scale
    q = fam.ordinary.Q.array
    assert abs(q[0]) < 1e-10 * abs(q[1])
    x = 0.37
    assert fam.ordinary.spf(x) == pytest.approx(1.0 / x, abs=1e-10)


def test_two_node_singular_parameters():
    # Q = z^2 + alpha z + 1 solves the system for every alpha; the fraction
    # interpolates iff no node is a root, which fails exactly at alpha = +-2
    for alpha in (0.0, 1.0, -3.7, 0.5):
        status = classify_nodes([1.0, alpha, 1.0], [-1.0, 1.0])
        assert status == ("regular", "regular")
    assert "singular" in classify_nodes([1.0, 2.0, 1.0], [-1.0, 1.0])
    assert "singular" in classify_nodes([1.0, -2.0, 1.0], [-1.0, 1.0])


def test_five_node_unsolvable_system():
    r2, r3 = math.sqrt(2.0), math.sqrt(3.0)
    fam = generalized_interp_simple(
        [r2, -r2, 1 / r3, -1 / r3, 0.0],
        [3 * r2, -3 * r2, r3, -r3, 1.0],
        n=5,
    )
    assert fam.ordinary_status == "unsolvable"
    assert fam.ordinary is None
    assert len(fam.basis) == 2
    # every solution vanishes at the node 0, so none interpolates there
    for sol in fam.basis:
        scale = 1.0 + np.abs(sol.Q.array).max()
        assert abs(sol.Q.array[0]) < 1e-10 * scale


def test_generalized_matches_values_when_ordinary():
    rng = np.random.default_rng(3)
    for _ in range(10):
        nodes = np.sort(rng.uniform(-1, 1, 3))
        if np.diff(nodes).min() < 0.2:
            continue
        values = rng.uniform(-2, 2, 3)
        fam = generalized_interp_simple(nodes, values, n=3)
        if fam.ordinary is None:
            continue
        assert np.abs(fam.ordinary.spf(nodes) - values).max() < 1e-8


def test_multiple_node_table():
    # double node: match value and derivative of rho(z) = 1/(z-2) at 0
    table = InterpolationTable.make([0.0], [[-0.5, -0.25]])
    fam = generalized_interp_multiple(table, n=1)
    assert fam.ordinary is not None
    sol = fam.ordinary
    assert sol.spf(0.0) == pytest.approx(-0.5, abs=1e-10)
    assert sol.spf(0.0, s=1) == pytest.approx(-0.25, abs=1e-10)
