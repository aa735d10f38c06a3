import math
from fractions import Fraction

import pytest

from pencilorbits import densities as D


def test_mu_p_examples_and_sums():
    dist = D.mu_p_distribution(2, 2)
    assert dist[1] == Fraction(1, 2) and dist[2] == Fraction(3, 8)
    for n, p in [(2, 2), (2, 3), (4, 2), (4, 3), (4, 5), (6, 2)]:
        dist = D.mu_p_distribution(n, p)
        assert sum(dist) == 1 - Fraction(1, p ** (n + 1))
        assert dist[0] == 0


def test_mu_p_enumeration_matches_combinatorial_count():
    for n, p in [(2, 2), (2, 3), (2, 5), (2, 7), (4, 2), (4, 3), (4, 5), (6, 2), (6, 3)]:
        enum = D.mu_p_distribution(n, p, force_enumeration=True)
        counts = D.factor_count_distribution(n, p)
        dp = tuple(Fraction(c, p ** (n + 1)) for c in counts)
        assert enum == dp, (n, p)


def test_irreducible_form_count_calibration():
    for p in (3, 5, 7):
        cnt = D.irreducible_form_count(4, p)
        assert abs(cnt - p**5 / 4) <= 3 * p**4
        # m = 1 forms include irreducible ones and prime powers; the
        # irreducible count is exactly (p-1) * N_4(p)
        assert cnt == (p - 1) * D.monic_irreducible_count(4, p)


def test_mu_8_examples():
    for n in (2, 4):
        mu8 = D.mu_8_distribution(n)
        mu2 = D.mu_p_distribution(n, 2)
        assert mu8 == mu2
        assert sum(mu8) == 1 - Fraction(1, 2 ** (n + 1))
    assert D.mu_8(4, 4) == D.mu_8_distribution(4)[4]


def test_mu_real_partition_and_determinism():
    a = D.mu_real(4, 20000, 9)
    b = D.mu_real(4, 20000, 9)
    assert a.counts == b.counts
    assert sum(a.counts) == 20000
    assert sum(a.estimate(m) for m in range(3)) == 1


def test_mu_real_n2_against_quadrature():
    from scipy import integrate

    # P(f1^2 > 4 f0 f2) for iid uniform [-1/2, 1/2]: integrate the b-measure
    def inner(a, c):
        t = 4 * a * c
        if t <= 0:
            return 1.0
        r = 2 * math.sqrt(t)
        return max(0.0, 1.0 - r) if r <= 1 else 0.0

    val, err = integrate.dblquad(inner, -0.5, 0.5, lambda a: -0.5, lambda a: 0.5)
    mu = D.mu_real(2, 200000, 123)
    est = float(mu.estimate(1))
    se = mu.stderr(1)
    assert abs(est - val) <= 3 * se + err + 1e-3, (est, val, se)


def test_mu_real_conditional_two_real_roots():
    # any sample with f0*f2 < 0 has two real roots; verified via a filtered
    # rerun of the classifier
    import numpy as np

    from pencilorbits.realroots import count_real_roots_batch

    rng = np.random.default_rng(3)
    K = rng.integers(0, 1 << 12, size=(20000, 3), dtype=np.int64)
    C = 2 * K + 1 - (1 << 12)
    mask = C[:, 0] * C[:, 2] < 0
    counts = count_real_roots_batch(C[mask])
    assert (counts == 2).all()


def test_archimedean_factor_identities():
    af1 = D.archimedean_factor(1, 30000, 5)
    assert af1.value == 1
    af0 = D.archimedean_factor(0, 30000, 5)
    assert af0.value == 1
    af2 = D.archimedean_factor(2, 150000, 5)
    assert af2.value < 1
    mu = D.mu_real(6, 150000, 5)
    assert af2.value == 1 - Fraction(1, 4) * mu.estimate(3)


def test_two_adic_factor_monotone_shrink():
    vals = [float(D.two_adic_factor(2 * g + 2)) for g in range(1, 6)]
    assert all(v > 0 for v in vals)
    assert all(a > b for a, b in zip(vals, vals[1:]))


def test_finite_prime_factor_bounds():
    for n in (4, 8):
        for p in (3, 5, 7, 11, 97):
            fp = D.finite_prime_factor(n, p)
            assert 0 < fp <= 1
    # large primes contribute essentially 1 - p^-(n+1)
    assert D.finite_prime_factor(4, 257) == 1 - Fraction(1, 257**5)


def test_genus0_product():
    assert D.genus0_product(3) == Fraction(7, 9)
    assert D.genus0_product(5) == Fraction(7, 9) * Fraction(17, 25)
    prev = None
    for P in (3, 5, 7, 11, 13):
        val = D.genus0_product(P)
        if prev is not None:
            assert val < prev
        prev = val


def test_zeta_identity_gap():
    gaps = [D.zeta_identity_gap(2, P) for P in (100, 1000, 10000)]
    assert gaps[0] > gaps[1] > gaps[2]
    assert gaps[2] < 1e-3
    assert D.zeta_identity_gap(4, 10000) < 1e-2


def test_density_bound_structure():
    rep = D.density_bound(1, 50, 20000, 1)
    assert rep.bound > 0
    assert rep.bound_conservative >= rep.bound
    assert rep.two_adic_factor > 0
    assert all(0 < v <= 1 for v in rep.finite_factors.values())
    assert 2 not in rep.finite_factors
    d = rep.to_jsonable()
    assert d["genus"] == 1 and d["truncation_prime"] == 50


def test_mu_real_errors():
    with pytest.raises(ValueError):
        D.mu_real(3, 100, 0)
    with pytest.raises(ValueError):
        D.mu_real(4, 0, 0)
