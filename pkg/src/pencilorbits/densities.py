"""Local density factors and the assembled upper bound for the density of
hyperelliptic curves with a rational point.

Places are treated separately: the archimedean factor is a Monte Carlo
estimate over real root counts (exact classification of dyadic samples), the
factor at 2 works with factorization types mod 8 (determined by the mod-2
reduction), and each odd prime contributes a capped weighted sum over the
distribution of the number of distinct irreducible factors mod p.  The two
finite-place distributions are exact: small cases by enumeration, all cases
by a combinatorial count of binary forms by factorization type.
"""

import itertools
import math
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache

import numpy as np
from mpmath import mp, mpf, zeta

from . import gfpoly
from .finite_fields import sl_n_order
from .numutil import primes_upto
from .realroots import count_real_roots_batch

DYADIC_BITS = 12
ENUMERATION_BUDGET = 1_000_000


# ---------------------------------------------------------------------------
# Archimedean place: Monte Carlo over real root counts


@dataclass(frozen=True)
class MuRealEstimates:
    """One-pass estimates of mu(I(m)) for all m: the probability that a
    random polynomial with i.i.d. coefficients in [-1/2, 1/2] (dyadic grid
    midpoints, exact classification) has 2m real roots."""

    degree: int
    samples: int
    seed: int
    dyadic_bits: int
    counts: tuple[int, ...]

    def estimate(self, m: int) -> Fraction:
        return Fraction(self.counts[m], self.samples)

    def stderr(self, m: int) -> float:
        p = self.counts[m] / self.samples
        return math.sqrt(p * (1.0 - p) / self.samples)

    def weighted_sum(self, weights: list[Fraction]) -> Fraction:
        return sum((w * self.estimate(m) for m, w in enumerate(weights)), Fraction(0))

    def weighted_sum_stderr(self, weights: list[Fraction]) -> float:
        mean = float(self.weighted_sum(weights))
        second = sum(float(w) ** 2 * self.counts[m] / self.samples for m, w in enumerate(weights))
        var = max(second - mean * mean, 0.0) / self.samples
        return math.sqrt(var)


@dataclass(frozen=True)
class WeightedEstimate:
    value: Fraction
    stderr: float

    def __float__(self):
        return float(self.value)


MC_CHUNK = 100_000


def _mu_real_chunk(args) -> np.ndarray:
    """One fixed-size Monte Carlo chunk; seeded independently so that counts
    do not depend on how chunks are distributed across workers."""
    n, take, child_seed = args
    rng = np.random.default_rng(child_seed)
    K = rng.integers(0, 1 << DYADIC_BITS, size=(take, n + 1), dtype=np.int64)
    C = 2 * K + 1 - (1 << DYADIC_BITS)  # odd numerators: f0, fn never 0
    roots = count_real_roots_batch(C)
    m = (roots + 1) // 2  # even count generically; ceil on the null locus
    return np.bincount(m, minlength=n // 2 + 1)[: n // 2 + 1]


def mu_real(n: int, samples: int, seed: int, jobs: int = 1) -> MuRealEstimates:
    """Estimate mu(I(m)) for every m in one pass; the per-sample counts
    partition `samples` exactly, so the estimates sum to 1 exactly.

    Samples are drawn in fixed-size chunks with independently spawned seeds;
    merging is plain addition, so the result is identical for any `jobs`."""
    if n < 2 or n % 2:
        raise ValueError("degree must be even and >= 2")
    if samples <= 0:
        raise ValueError("need a positive sample count")
    sizes = [MC_CHUNK] * (samples // MC_CHUNK)
    if samples % MC_CHUNK:
        sizes.append(samples % MC_CHUNK)
    seeds = np.random.SeedSequence(seed).spawn(len(sizes))
    tasks = [(n, take, s) for take, s in zip(sizes, seeds)]
    counts = np.zeros(n // 2 + 1, np.int64)
    if jobs > 1 and len(tasks) > 1:
        import multiprocessing

        with multiprocessing.Pool(jobs) as pool:
            for part in pool.imap_unordered(_mu_real_chunk, tasks):
                counts += part
    else:
        for task in tasks:
            counts += _mu_real_chunk(task)
    return MuRealEstimates(n, samples, seed, DYADIC_BITS, tuple(int(c) for c in counts))


def mu_real_single(n: int, m: int, samples: int, seed: int) -> WeightedEstimate:
    """Estimate of a single mu(I(m)) (the whole distribution is computed in
    the same pass; use mu_real directly when several m are needed)."""
    mu = mu_real(n, samples, seed)
    return WeightedEstimate(mu.estimate(m), mu.stderr(m))


def archimedean_factor(
    g: int, samples: int, seed: int, mu: MuRealEstimates | None = None, jobs: int = 1
) -> WeightedEstimate:
    """sum_m (max(1, 2m)/2^m) mu(I(m)) for n = 2g+2; equals 1 identically for
    g <= 1, where every weight is 1 and the estimates partition the samples."""
    if g < 0:
        raise ValueError("genus must be >= 0")
    n = 2 * g + 2
    if mu is None:
        mu = mu_real(n, samples, seed, jobs=jobs)
    weights = [Fraction(max(1, 2 * m), 2**m) for m in range(n // 2 + 1)]
    return WeightedEstimate(mu.weighted_sum(weights), mu.weighted_sum_stderr(weights))


# ---------------------------------------------------------------------------
# Finite places: distribution of the number of distinct irreducible factors


def monic_irreducible_count(d: int, p: int) -> int:
    """Number of monic irreducible univariate polynomials of degree d."""
    total = 0
    for e in range(1, d + 1):
        if d % e == 0:
            total += _moebius(e) * p ** (d // e)
    return total // d


def _moebius(n: int) -> int:
    if n == 1:
        return 1
    m, cnt = n, 0
    d = 2
    while d * d <= m:
        if m % d == 0:
            m //= d
            if m % d == 0:
                return 0
            cnt += 1
        d += 1
    if m > 1:
        cnt += 1
    return -1 if cnt % 2 else 1


def irreducible_form_count(n: int, p: int) -> int:
    """Number of irreducible binary n-ic forms over F_p (degree-n irreducible
    with multiplicity one): (p-1) * (number of monic irreducible degree-n
    univariate polynomials)."""
    return (p - 1) * monic_irreducible_count(n, p)


@lru_cache(maxsize=4096)
def factor_count_distribution(n: int, p: int) -> tuple[int, ...]:
    """|I_p(m)| for m = 0..n: nonzero binary n-ic forms over F_p with m
    distinct irreducible binary factors.  Exact multiset count: choose
    distinct irreducibles per degree with multiplicities."""
    A = {1: p + 1}
    for d in range(2, n + 1):
        A[d] = monic_irreducible_count(d, p)
    dp = [[0] * (n + 1) for _ in range(n + 1)]  # dp[t][m]
    dp[0][0] = 1
    for d in range(1, n + 1):
        new = [row[:] for row in dp]
        for t in range(n + 1):
            row = dp[t]
            for m in range(t + 1):
                v = row[m]
                if not v:
                    continue
                for tp in range(d, n - t + 1, d):
                    s = tp // d
                    for j in range(1, s + 1):
                        w = math.comb(A[d], j) * math.comb(s - 1, j - 1)
                        new[t + tp][m + j] += v * w
        dp = new
    return tuple((p - 1) * dp[n][m] for m in range(n + 1))


def _distinct_count_table(n: int, p: int) -> list[int]:
    """m for every coefficient vector (enumeration oracle); index is the
    base-p encoding of (f0..fn), zero form keeps -1."""
    out = [-1] * p ** (n + 1)
    for idx, vec in enumerate(itertools.product(range(p), repeat=n + 1)):
        if not any(vec):
            continue
        reduced = gfpoly.normalize(list(vec), p)
        m = 1 if len(reduced) - 1 < n else 0
        if len(reduced) > 1:
            m += gfpoly.distinct_factor_count(reduced, p)
        out[idx] = m
    return out


def mu_p_distribution(n: int, p: int, force_enumeration: bool = False) -> tuple[Fraction, ...]:
    """(mu(I_p(m)))_m = |I_p(m)|/p^(n+1); the zero form belongs to no I_p(m),
    so the values sum to 1 - p^-(n+1).  Exact either way: enumeration inside
    the budget, the combinatorial count outside it."""
    total = p ** (n + 1)
    if force_enumeration or total <= ENUMERATION_BUDGET:
        counts = [0] * (n + 1)
        for m in _distinct_count_table(n, p):
            if m >= 0:
                counts[m] += 1
        counts = tuple(counts)
    else:
        counts = factor_count_distribution(n, p)
    return tuple(Fraction(c, total) for c in counts)


def mu_p(n: int, m: int, p: int) -> Fraction:
    return mu_p_distribution(n, p)[m]


def mu_8_distribution(n: int) -> tuple[Fraction, ...]:
    """(mu(I_8(m)))_m: binary forms mod 8 whose mod-2 reduction has m distinct
    irreducible factors; forms vanishing mod 2 carry no type.  The type
    depends only on f mod 2 and lifts are uniform, so |I_8(m)| =
    |I_2(m)| * 4^(n+1); for n <= 4 this is verified by direct enumeration."""
    if n <= 4:
        counts = [0] * (n + 1)
        table = _distinct_count_table(n, 2)
        for vec in itertools.product(range(8), repeat=n + 1):
            idx = 0
            for c in vec:
                idx = idx * 2 + (c & 1)
            m = table[idx]
            if m >= 0:
                counts[m] += 1
        return tuple(Fraction(c, 8 ** (n + 1)) for c in counts)
    counts = factor_count_distribution(n, 2)
    return tuple(Fraction(c, 2 ** (n + 1)) for c in counts)


def mu_8(n: int, m: int) -> Fraction:
    return mu_8_distribution(n)[m]


# ---------------------------------------------------------------------------
# Assembled bound


@dataclass
class DensityReport:
    genus: int
    degree: int
    truncation_prime: int
    samples: int
    seed: int
    dyadic_bits: int
    archimedean_factor: float
    archimedean_stderr: float
    two_adic_factor: float
    finite_factors: dict[int, float]
    bound: float
    bound_conservative: float

    def to_jsonable(self) -> dict:
        return {
            "genus": self.genus,
            "degree": self.degree,
            "truncation_prime": self.truncation_prime,
            "samples": self.samples,
            "seed": self.seed,
            "dyadic_bits": self.dyadic_bits,
            "archimedean_factor": self.archimedean_factor,
            "archimedean_stderr": self.archimedean_stderr,
            "two_adic_factor": self.two_adic_factor,
            "finite_factors": {str(p): v for p, v in sorted(self.finite_factors.items())},
            "bound": self.bound,
            "bound_conservative": self.bound_conservative,
        }


def two_adic_factor(n: int) -> Fraction:
    """(1/2^n) * sum_m min(1, 12/2^(m-1)) mu(I_8(m)); exact."""
    mu8 = mu_8_distribution(n)
    acc = Fraction(0)
    for m in range(1, n + 1):
        acc += min(Fraction(1), Fraction(12, 2 ** (m - 1))) * mu8[m]
    return acc / 2**n


def finite_prime_factor(n: int, p: int) -> Fraction:
    """sum_m min(1, (p+1)/2^(m-1)) mu(I_p(m)), clamped to <= 1; exact."""
    mup = factor_count_distribution(n, p)
    total = p ** (n + 1)
    acc = Fraction(0)
    for m in range(1, n + 1):
        acc += min(Fraction(1), Fraction(p + 1, 2 ** (m - 1))) * Fraction(mup[m], total)
    return min(acc, Fraction(1))


def density_bound(
    g: int,
    truncation_prime: int,
    samples: int,
    seed: int,
    mu: MuRealEstimates | None = None,
    jobs: int = 1,
) -> DensityReport:
    """Upper bound for the density of genus-g curves with a rational point:

        2^(g+1) * sum_m (max(1,2m)/2^m) mu(I(m))
          * (1/2^n) * sum_m min(1, 12/2^(m-1)) mu(I_8(m))
          * prod_(2 < p <= P) sum_m min(1, (p+1)/2^(m-1)) mu(I_p(m))

    Omitted Euler factors are <= 1, so truncation at P only weakens the
    bound. The conservative value inflates the Monte Carlo factor by three
    standard errors.
    """
    if g < 0:
        raise ValueError("genus must be >= 0")
    n = 2 * g + 2
    arch = archimedean_factor(g, samples, seed, mu=mu, jobs=jobs)
    arch_value = float(arch.value) * 2 ** (g + 1)
    arch_sigma = arch.stderr * 2 ** (g + 1)
    f2 = two_adic_factor(n)
    finite: dict[int, float] = {}
    prod = Fraction(1)
    for p in primes_upto(truncation_prime):
        if p == 2:
            continue
        fp = finite_prime_factor(n, p)
        finite[p] = float(fp)
        prod *= fp
    tail = float(f2 * prod)
    return DensityReport(
        genus=g,
        degree=n,
        truncation_prime=truncation_prime,
        samples=samples,
        seed=seed,
        dyadic_bits=DYADIC_BITS,
        archimedean_factor=arch_value,
        archimedean_stderr=arch_sigma,
        two_adic_factor=float(f2),
        finite_factors=finite,
        bound=arch_value * tail,
        bound_conservative=(arch_value + 3 * arch_sigma) * tail,
    )


def genus0_product(truncation_prime: int) -> Fraction:
    """prod_(2 < p <= P) (1 - (p-1)^2 / (2 p^2)), exact."""
    if truncation_prime < 3:
        raise ValueError("need P >= 3")
    acc = Fraction(1)
    for p in primes_upto(truncation_prime):
        if p == 2:
            continue
        acc *= 1 - Fraction((p - 1) ** 2, 2 * p * p)
    return acc


def zeta_identity_gap(n: int, truncation_prime: int) -> float:
    """|zeta(2)...zeta(n) * prod_(p<=P) #SL_n(F_p)/p^(n^2-1) - 1|."""
    if n < 2:
        raise ValueError("need n >= 2")
    mp.dps = 40
    acc = mpf(1)
    for k in range(2, n + 1):
        acc *= zeta(k)
    for p in primes_upto(truncation_prime):
        acc *= mpf(sl_n_order(n, p)) / mpf(p) ** (n * n - 1)
    return float(abs(acc - 1))
