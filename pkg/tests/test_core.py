import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from spfkit.core import (
    MAX_TOWER_DEPTH,
    SimpleFraction,
    build_tower,
    ode_residual,
    reduce_values,
)
from spfkit.numkit import ComplexPolynomial


def test_eval_and_derivatives():
    f = SimpleFraction.make([1j, -1j])
    assert f(2.0) == pytest.approx(0.8)
    # d/dz [2z/(z^2+1)] at 2 is (2*5 - 2*2*4)/25
    assert f(2.0, 1) == pytest.approx(-6 / 25)
    h = 1e-6
    fd = (f(2.0 + h) - f(2.0 - h)) / (2 * h)
    assert f(2.0, 1) == pytest.approx(fd, abs=1e-8)


def test_zero_fraction():
    f = SimpleFraction(())
    assert f.order == 0
    assert f(0.3) == 0
    assert np.all(f(np.linspace(-1, 1, 5)) == 0)


def test_eval_at_pole_raises():
    f = SimpleFraction.make([2.0])
    with pytest.raises(ZeroDivisionError):
        f(2.0)


def test_from_polynomial():
    f = SimpleFraction.from_polynomial([1, 0, 1])  # z^2 + 1
    assert sorted(p.imag for p in f.poles) == pytest.approx([-1, 1])
    assert SimpleFraction.from_polynomial([7.0]).order == 0
    with pytest.raises(ValueError):
        SimpleFraction.from_polynomial([0.0])


def test_to_rational_round_trip():
    poles = np.array([0.5 + 1j, -2.0, 3.0 - 0.25j])
    f = SimpleFraction.make(poles)
    num, den = f.to_rational()
    assert den.degree == 3
    assert den.coeffs[-1] == 1
    for z in [0.1, 1j, -2.5 + 0.3j]:
        assert num(z) / den(z) == pytest.approx(f(z))
    back = SimpleFraction.from_polynomial(den)
    assert np.allclose(sorted(back.poles, key=np.angle), sorted(poles, key=np.angle))


def test_maclaurin_single_pole():
    f = SimpleFraction.make([2.0])
    # 1/(z-2) = -sum z^m / 2^(m+1)
    assert np.allclose(f.maclaurin(6), [-(0.5 ** (m + 1)) for m in range(6)])
    with pytest.raises(ZeroDivisionError):
        SimpleFraction.make([0.0]).maclaurin(3)


def test_tower_first_levels():
    t = build_tower(2)
    assert t.levels[0] == {(1,): 1}
    assert t.levels[1] == {(2,): 1, (0, 1): 1}
    assert t.levels[2] == {(3,): 1, (1, 1): 3, (0, 0, 1): 1}


def test_tower_term_counts_are_partition_numbers():
    partitions = [1, 2, 3, 5, 7, 11, 15, 22, 30, 42, 56, 77, 101]
    t = build_tower(MAX_TOWER_DEPTH)
    assert [len(level) for level in t.levels] == partitions


def test_tower_depth_cap():
    with pytest.raises(ValueError):
        build_tower(MAX_TOWER_DEPTH + 1)


@settings(max_examples=40, deadline=None)
@given(
    st.lists(
        st.complex_numbers(max_magnitude=2.0, allow_nan=False, allow_infinity=False),
        min_size=1,
        max_size=4,
    )
)
def test_tower_reproduces_polynomial_derivatives(poles):
    # F_s at (rho, rho', ..., rho^(s)) must equal Q^(s+1)/Q
    f = SimpleFraction.make(poles)
    _, den = f.to_rational()
    z = 3.0 + 2.5j  # outside the pole disk, Q(z) well away from zero
    t = build_tower(4)
    values = [f(z, s) for s in range(5)]
    q = ComplexPolynomial.make(den.coeffs)
    qz = q(z)
    for s in range(5):
        q = q.derivative()
        expect = q(z) / qz
        got = t.evaluate(s, values)
        assert got == pytest.approx(expect, abs=1e-9 * (1 + abs(expect)))


def test_reduce_values_known():
    t = build_tower(2)
    assert np.allclose(reduce_values(t, [1, 0]), [1, 1])
    assert np.allclose(reduce_values(t, [0, 1, 0]), [0, 1, 0])
    with pytest.raises(ValueError):
        reduce_values(t, [1, 2, 3, 4])


def test_ode_residual_vanishes_at_order():
    rng = np.random.default_rng(7)
    for n in range(1, 5):
        poles = rng.normal(size=n) + 1j * rng.normal(size=n)
        f = SimpleFraction.make(poles)
        z = rng.normal(size=6) + 1j * (rng.normal(size=6) + 4.0)
        res = ode_residual(f, n, z)
        wmax = max(np.abs(f(z, s)).max() for s in range(n + 1))
        assert np.abs(res).max() <= 1e-10 * (1 + wmax) ** (n + 1)


def test_ode_residual_nonzero_above_order():
    f = SimpleFraction.make([1.0, -1.0, 1j])
    res = ode_residual(f, 2, [0.5 + 0.5j])
    assert np.abs(res).max() > 1e-3


def test_ode_residual_first_orders_match_closed_forms():
    f = SimpleFraction.make([2.0, -1.5])
    z = np.array([0.3, 0.1 + 1j])
    y, dy, d2y = f(z), f(z, 1), f(z, 2)
    assert np.allclose(ode_residual(f, 1, z), dy + y**2)
    assert np.allclose(ode_residual(f, 2, z), d2y + 3 * y * dy + y**3)
