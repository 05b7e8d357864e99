import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from spfkit.hsums import (
    AFSum,
    HSum,
    diff_nodes,
    extrap_freqs,
    extrapolate,
    gauss_quadrature,
    hsum_pade,
    int_nodes,
    prony_solve,
    reg_diff,
    reg_diff_generating,
    reg_extrap,
)
from spfkit.numkit import PowerSeries, power_sums


def _lex(z):
    z = np.asarray(z)
    return z[np.lexsort((z.imag, z.real))]


def _monic_from_roots(roots):
    c = np.array([1.0 + 0.0j])
    for r in roots:
        c = np.convolve(c, [-r, 1.0])
    return c


# ------------------------------------------------------------------ sums


def test_hsum_maclaurin_and_call():
    h = PowerSeries.make([1.0, 0.5, 0.25, 0.125])
    hs = HSum((0.5, -0.5), h)
    S = power_sums([0.5, -0.5], 4)
    assert np.allclose(hs.maclaurin(4), h.array * S)
    z = 0.3 + 0.1j
    assert hs(z) == pytest.approx(0.5 * h(0.5 * z) - 0.5 * h(-0.5 * z), abs=1e-14)


def test_afsum_moments_and_apply():
    af = AFSum((2.0, 1.0), (1.0, -1.0))
    assert np.allclose(af.moments(4), [3.0, 1.0, 3.0, 1.0])
    val = af.apply(np.exp, 0.5)
    assert val == pytest.approx(2 * np.exp(0.5) + np.exp(-0.5), abs=1e-12)
    with pytest.raises(ValueError):
        af(0.5)  # no base attached


def test_hsum_pade_contact():
    f = [0.9, 0.4, 0.2, 0.1]
    h = [1.0, 0.5, 0.25, 0.125]
    hs = hsum_pade(f, h, 4)
    assert np.allclose(hs.maclaurin(4), f, atol=1e-10)


def test_hsum_pade_zero_handling():
    # matching zero against zero leaves the moment free (set to zero)
    hs = hsum_pade([1.0, 0.0, 0.5], [1.0, 0.0, 1.0], 3)
    assert np.allclose(hs.maclaurin(3), [1.0, 0.0, 0.5], atol=1e-10)
    with pytest.raises(ValueError):
        hsum_pade([1.0, 0.3], [1.0, 0.0], 2)  # undefined moment


# ------------------------------------------------------------------ nodes


def test_diff_nodes_power_sums():
    for n in (1, 2, 5, 12):
        lam = diff_nodes(n)
        assert np.allclose(power_sums(lam, n), np.arange(1, n + 1), atol=1e-9 * n)


def test_diff_nodes_identity_on_polynomials():
    z = 0.7 + 0.3j
    for n in (1, 3, 6, 12):
        lam = diff_nodes(n)
        for m in range(n):
            lhs = m * z**m
            rhs = -(z**m) + (lam * (lam * z) ** m).sum()
            assert abs(lhs - rhs) < 1e-10 * (1 + abs(lhs))


def test_int_nodes_identity_on_polynomials():
    z = 0.7 + 0.3j
    for n in (1, 2, 4, 9):
        lam = int_nodes(n)
        for m in range(n):
            lhs = z ** (m + 1) / (m + 1)
            rhs = z * (lam * (lam * z) ** m).sum()
            assert abs(lhs - rhs) < 1e-10 * (1 + abs(lhs))


def test_int_nodes_double_root():
    lam = np.sort(int_nodes(2).real)
    assert np.allclose(lam, [0.5, 0.5], atol=1e-7)


def test_recurrence_variant_generating_polynomials():
    # the recurrence route reproduces its own polynomials exactly, sign
    # conventions and all; they differ from the power-sum ones
    lam = diff_nodes(2, method="recurrence")
    assert np.allclose(_monic_from_roots(lam), [-0.5, 1.0, 1.0], atol=1e-9)
    lam = diff_nodes(3, method="recurrence")
    assert np.allclose(_monic_from_roots(_lex(lam)), [-0.5, -0.5, 1.0, 1.0], atol=1e-9)
    lam = int_nodes(2, method="recurrence")
    assert np.allclose(_monic_from_roots(lam), [0.25, 1.0, 1.0], atol=1e-9)
    lam = int_nodes(3, method="recurrence")
    assert np.allclose(_monic_from_roots(_lex(lam)), [5.0 / 36.0, 0.25, 1.0, 1.0], atol=1e-9)
    with pytest.raises(ValueError):
        diff_nodes(3, method="nonsense")


def test_extrap_freq_bound():
    for a in (1.5, 2.0, 3.0):
        for n in (1, 2, 7, 20):
            lam = extrap_freqs(a, n)
            S = power_sums(lam, n)
            target = a ** np.arange(n)
            assert np.abs(S - target).max() / (1 + target.max()) < 1e-9
            assert np.abs(lam).max() <= a - (a - 1) / n + 1e-12
    # n = 1 attains the bound exactly: the single frequency is 1
    assert extrap_freqs(2.0, 1)[0] == pytest.approx(1.0, abs=1e-14)
    with pytest.raises(ValueError):
        extrap_freqs(1.0, 3)


# ------------------------------------------------------------ extrapolate


def test_extrapolate_exact_low_degree():
    rng = np.random.default_rng(17)
    z = 1.3 + 0.7j
    for n, mu in ((4, 1), (4, 2), (3, 3)):
        c = rng.standard_normal(n) + 1j * rng.standard_normal(n)
        h = PowerSeries.make(c)
        assert extrapolate(h, 2.0, n, mu, z) == pytest.approx(h(z), abs=1e-10)


def test_extrapolate_monomial_remainder():
    # a degree-m monomial comes back scaled by (S_{m+1}/a^m)^mu
    a, n = 2.0, 3
    lam = extrap_freqs(a, n)
    z = 0.9 - 0.4j
    for mu in (1, 2):
        for m in range(n, n + 3):
            coeffs = np.zeros(m + 1)
            coeffs[m] = 1.0
            S = power_sums(lam, m + 1)[m]
            expect = (S / a**m) ** mu * z**m
            got = extrapolate(coeffs, a, n, mu, z)
            assert abs(got - expect) < 1e-9 * (1 + abs(expect))


def test_extrapolate_guards():
    with pytest.raises(ValueError):
        extrapolate([1.0], 2.0, 3, 0, 0.5)
    with pytest.raises(ValueError):
        extrapolate([1.0], 2.0, 101, 3, 0.5)  # tuple-count overflow


# ------------------------------------------------------------------ prony


def test_prony_single_pair():
    sol = prony_solve([2.0, 2.0])
    assert sol.regular
    assert sol.freqs[0] == pytest.approx(1.0, abs=1e-12)
    assert sol.amps[0] == pytest.approx(2.0, abs=1e-12)


def test_prony_reference_pairs():
    sol = prony_solve([4.0, -1.0, 7.0, 5.0])
    assert sol.regular
    lam = _lex(sol.freqs)
    mu = np.asarray(sol.amps)[np.lexsort((np.imag(sol.freqs), np.real(sol.freqs)))]
    assert np.allclose(lam, [-1.0, 2.0], atol=1e-9)
    assert np.allclose(mu, [3.0, 1.0], atol=1e-9)
    assert sol.moment_residual < 1e-12

    sol = prony_solve([2.0, 0.0, 2.0 / 3.0, 0.0])
    lam = np.sort(np.real(sol.freqs))
    assert np.allclose(lam, [-1 / np.sqrt(3), 1 / np.sqrt(3)], atol=1e-10)
    assert np.allclose(sol.amps, [1.0, 1.0], atol=1e-10)


def test_prony_flags_degeneracies():
    # coincident frequencies: the Hankel matrix is singular
    s = [2.0, 2.0, 2.0, 2.0]  # mu = 2 at lambda = 1, only n = 1 worth of data
    sol = prony_solve(s)
    assert not sol.regular
    assert sol.note != ""
    with pytest.raises(ValueError):
        prony_solve([1.0, 2.0, 3.0])
    with pytest.raises(ValueError):
        prony_solve([])


def test_prony_residual_matches_reconstruction():
    rng = np.random.default_rng(23)
    lam = np.array([0.8, -0.5, 1.2]) + 1j * np.array([0.1, 0.4, -0.2])
    mu = rng.uniform(0.5, 2.0, 3) * np.exp(1j * rng.uniform(0, 2 * np.pi, 3))
    s = (mu * lam[None, :] ** np.arange(6)[:, None]).sum(axis=1)
    sol = prony_solve(s)
    assert sol.regular
    assert sol.moment_residual < 1e-10
    assert np.abs(_lex(sol.freqs) - _lex(lam)).max() < 1e-7


@settings(max_examples=30, deadline=None)
@given(st.integers(min_value=0, max_value=10**6), st.integers(min_value=1, max_value=5))
def test_prony_roundtrip_random(seed, n):
    rng = np.random.default_rng(seed)
    lam = rng.uniform(-2, 2, n) + 1j * rng.uniform(-2, 2, n)
    if n > 1:
        gaps = np.abs(lam[:, None] - lam[None, :])[np.triu_indices(n, 1)]
        if gaps.min() < 0.2:
            return
    mu = rng.uniform(0.3, 2.0, n) * np.exp(1j * rng.uniform(0, 2 * np.pi, n))
    s = (mu * lam[None, :] ** np.arange(2 * n)[:, None]).sum(axis=1)
    sol = prony_solve(s)
    if not sol.regular:
        return
    assert np.abs(_lex(sol.freqs) - _lex(lam)).max() < 1e-6


# ------------------------------------------------------------- quadrature


def test_gauss_quadrature_matches_legendre():
    from numpy.polynomial.legendre import leggauss

    af = gauss_quadrature([1.0], 2)
    x, w = leggauss(2)
    assert np.abs(np.asarray(af.freqs) - x).max() < 1e-10
    assert np.abs(np.asarray(af.amps) - w).max() < 1e-10


def test_gauss_quadrature_three_point():
    af = gauss_quadrature([1.0], 3)
    assert np.allclose(af.freqs, [-np.sqrt(0.6), 0.0, np.sqrt(0.6)], atol=1e-9)
    assert np.allclose(af.amps, [5 / 9, 8 / 9, 5 / 9], atol=1e-9)
    assert np.asarray(af.amps).sum() == pytest.approx(2.0, abs=1e-12)


def test_gauss_quadrature_evaluates_mean():
    # (1/x) int_{-x}^{x} (1 + t^2) dt = 2 + 2 x^2 / 3, degree < 2n exact
    af = gauss_quadrature([1.0, 0.0, 1.0], 2)
    x = 0.7
    assert af(x) == pytest.approx(2 + 2 * x * x / 3, abs=1e-12)
    with pytest.raises(ValueError):
        gauss_quadrature([1.0], 0)


# ------------------------------------------------------------ regularized


def test_reg_diff_reference():
    p_used, q, af = reg_diff(3, 1.0)
    assert p_used == 1.0
    assert q == pytest.approx(-11.0, abs=1e-12)
    closed = reg_diff_generating(3, 1.0)
    assert np.allclose(closed.array, [5.0, -3.0, 0.0, 1.0], atol=1e-12)
    assert np.allclose(_monic_from_roots(af.freqs), closed.array, atol=1e-8)


def test_reg_diff_identity():
    # z h' + p h_{n-1} z^{n-1} + q h_{2n-1} z^{2n-1} = sum mu_k h(lambda_k z)
    rng = np.random.default_rng(31)
    z = 0.43 + 0.29j
    for n in (3, 4, 5):
        p_used, q, af = reg_diff(n, 1.0)
        c = rng.standard_normal(2 * n)
        h = PowerSeries.make(c)
        dh = np.polyval((c[1:] * np.arange(1, 2 * n))[::-1], z)
        lhs = z * dh + p_used * c[n - 1] * z ** (n - 1) + q * c[2 * n - 1] * z ** (2 * n - 1)
        rhs = af.apply(h, z)
        assert abs(lhs - rhs) < 1e-8 * (1 + abs(lhs))


def test_reg_diff_validation():
    with pytest.raises(ValueError):
        reg_diff(2, 1.0)
    with pytest.raises(ValueError):
        reg_diff(4, 0.0)
    with pytest.raises(ValueError):
        reg_diff_generating(2, 1.0)


def test_reg_extrap_reference():
    af, rep = reg_extrap(2.0, 2, 1.0)
    lam = np.sort(np.real(af.freqs))
    assert lam[1] == pytest.approx(1.7266499161421598, abs=1e-10)
    assert lam[0] == pytest.approx(-0.9266499161421598, abs=1e-8)
    assert rep.delta == pytest.approx(0.8944271909999159, abs=1e-12)
    assert rep.radius == pytest.approx(1.7888543819998317, abs=1e-12)
    assert rep.bound_holds
    assert not rep.collision
    assert rep.generating_error < 1e-12


def test_reg_extrap_identity():
    # h(az) + p h_{n-1} z^{n-1} = sum mu_k h(lambda_k z), degree < 2n
    rng = np.random.default_rng(37)
    z = 0.6 - 0.2j
    for a, n, p in ((2.0, 2, 1.0), (1.5, 3, 0.7), (3.0, 4, 2.0)):
        af, rep = reg_extrap(a, n, p)
        c = rng.standard_normal(2 * n)
        h = PowerSeries.make(c)
        lhs = h(a * z) + p * c[n - 1] * z ** (n - 1)
        rhs = af.apply(h, z)
        assert abs(lhs - rhs) < 1e-8 * (1 + abs(lhs))
        assert rep.max_freq < rep.radius


def test_reg_extrap_contracts_with_p():
    freqs = [reg_extrap(2.0, 3, p)[1].max_freq for p in (0.5, 1.0, 2.0, 4.0)]
    assert all(a > b for a, b in zip(freqs, freqs[1:]))


def test_reg_extrap_validation():
    with pytest.raises(ValueError):
        reg_extrap(0.0, 2, 1.0)
    with pytest.raises(ValueError):
        reg_extrap(2.0, 2, 0.0)
    with pytest.raises(ValueError):
        reg_extrap(2.0, 0, 1.0)
