"""Integral binary n-ic forms: invariants, SL2(Z) action, real and mod-p root
statistics, and seeded random sampling."""

import json
import random
from dataclasses import dataclass
from math import comb

from . import gfpoly, intpoly


class ZeroFormError(ValueError):
    """Raised when a reduction mod p is identically zero."""


@dataclass(frozen=True)
class BinaryForm:
    """A binary form f0*x^n + f1*x^(n-1)*y + ... + fn*y^n with integer
    coefficients and even degree n >= 2."""

    coeffs: tuple[int, ...]

    def __post_init__(self):
        if len(self.coeffs) < 3 or (len(self.coeffs) - 1) % 2 != 0:
            raise ValueError("need n+1 coefficients with n even and >= 2")
        object.__setattr__(self, "coeffs", tuple(int(c) for c in self.coeffs))

    @property
    def degree(self) -> int:
        return len(self.coeffs) - 1

    @property
    def genus(self) -> int:
        return self.degree // 2 - 1

    def univariate(self) -> list[int]:
        """f(x, 1) as a descending coefficient list (not stripped)."""
        return list(self.coeffs)

    def to_json(self) -> str:
        return json.dumps([str(c) for c in self.coeffs])

    @classmethod
    def from_json(cls, s: str) -> "BinaryForm":
        return cls(tuple(int(c) for c in json.loads(s)))

    def __str__(self):
        n = self.degree

        def power(sym, k):
            return "" if k == 0 else (sym if k == 1 else f"{sym}^{k}")

        terms = []
        for i, c in enumerate(self.coeffs):
            if c == 0:
                continue
            mono = "*".join(t for t in (power("x", n - i), power("y", i)) if t)
            terms.append(f"{c}*{mono}" if mono else str(c))
        return " + ".join(terms) if terms else "0"


@dataclass(frozen=True)
class UnimodularMatrix2:
    """An element of SL2(Z): rows (a, b), (c, d) with ad - bc = 1."""

    a: int
    b: int
    c: int
    d: int

    def __post_init__(self):
        if self.a * self.d - self.b * self.c != 1:
            raise ValueError("determinant must be 1")

    def inverse(self) -> "UnimodularMatrix2":
        return UnimodularMatrix2(self.d, -self.b, -self.c, self.a)

    def __matmul__(self, other: "UnimodularMatrix2") -> "UnimodularMatrix2":
        return UnimodularMatrix2(
            self.a * other.a + self.b * other.c,
            self.a * other.b + self.b * other.d,
            self.c * other.a + self.d * other.c,
            self.c * other.b + self.d * other.d,
        )


IDENTITY2 = UnimodularMatrix2(1, 0, 0, 1)


@dataclass(frozen=True)
class FactorizationType:
    """Multiset of (degree, multiplicity) pairs of the distinct irreducible
    binary factors of f over F_p; m is the number of distinct factors."""

    parts: tuple[tuple[int, int], ...]

    @property
    def m(self) -> int:
        return len(self.parts)

    def total_degree(self) -> int:
        return sum(d * e for d, e in self.parts)


def evaluate(f: BinaryForm, x: int, y: int) -> int:
    return intpoly.evaluate_binary(list(f.coeffs), x, y)


def height(f: BinaryForm) -> int:
    return max(abs(c) for c in f.coeffs)


def discriminant(f: BinaryForm) -> int:
    """Disc(f), normalized so n = 2 gives f1^2 - 4*f0*f2.

    Disc(f) = (-1)^(n(n-1)/2) * Res(f(x,1), f'(x,1)) / f0 for f0 != 0;
    for f0 = 0 the form is shifted by a small deterministic SL2(Z) element
    first (Disc is invariant).
    """
    n = f.degree
    if f.coeffs[0] == 0:
        if all(c == 0 for c in f.coeffs):
            return 0
        for k in range(1, n + 2):
            # new leading coefficient is f(1, k), nonzero for some k <= n+1
            shifted = sl2_act(UnimodularMatrix2(1, k, 0, 1), f)
            if shifted.coeffs[0] != 0:
                return discriminant(shifted)
        raise ValueError("could not move to nonzero leading coefficient")
    p = f.univariate()
    res = intpoly.resultant(p, intpoly.derivative(p))
    sign = -1 if (n * (n - 1) // 2) % 2 else 1
    disc, rem = divmod(sign * res, f.coeffs[0])
    assert rem == 0
    return disc


def sl2_act(g: UnimodularMatrix2, f: BinaryForm) -> BinaryForm:
    """f'(x, y) = f((x, y) * g) = f(a*x + c*y, b*x + d*y)."""
    n = f.degree
    out = [0] * (n + 1)
    # expand sum_i f_i (ax+cy)^(n-i) (bx+dy)^i
    for i, fi in enumerate(f.coeffs):
        if fi == 0:
            continue
        first = _binom_pow(g.a, g.c, n - i)
        second = _binom_pow(g.b, g.d, i)
        for j1, c1 in enumerate(first):
            for j2, c2 in enumerate(second):
                out[j1 + j2] += fi * c1 * c2
    return BinaryForm(tuple(out))


def _binom_pow(u: int, v: int, k: int) -> list[int]:
    """Coefficients of (u*x + v*y)^k by ascending power of y."""
    return [comb(k, j) * u ** (k - j) * v**j for j in range(k + 1)]


def real_root_count(f: BinaryForm) -> int:
    """Number of roots of f in P^1(R); a simple root at (1:0) is counted when
    f0 = 0.  Exact (Sturm); requires Disc(f) != 0."""
    coeffs = intpoly.strip(f.univariate())
    if not coeffs:
        raise ValueError("zero form")
    at_infinity = 1 if f.coeffs[0] == 0 else 0
    if f.coeffs[0] == 0 and f.coeffs[1] == 0:
        raise ValueError("degenerate form: multiple root at infinity")
    if len(coeffs) == 1:
        return at_infinity
    count = intpoly.real_root_count_squarefree(coeffs)
    if count is None:
        raise ValueError("degenerate form: Disc(f) = 0")
    return count + at_infinity


def factorization_type_mod_p(f: BinaryForm, p: int, seed: int = 0) -> FactorizationType:
    """Factorization type of f over F_p as a binary form: the factor y^v with
    v = n - deg(f(x,1) mod p) accounts for leading-coefficient vanishing."""
    n = f.degree
    reduced = gfpoly.normalize(f.univariate(), p)
    if not reduced:
        raise ZeroFormError(f"form vanishes identically mod {p}")
    parts = []
    v = n - (len(reduced) - 1)
    if v > 0:
        parts.append((1, v))
    if len(reduced) > 1:
        _, factors = gfpoly.factor(reduced, p, seed=seed)
        parts.extend((len(irr) - 1, mult) for irr, mult in factors)
    parts.sort()
    return FactorizationType(tuple(parts))


def distinct_factor_count_mod_p(f: BinaryForm, p: int) -> int:
    """m = number of distinct irreducible binary factors of f mod p (cheap:
    no equal-degree splitting)."""
    n = f.degree
    reduced = gfpoly.normalize(f.univariate(), p)
    if not reduced:
        raise ZeroFormError(f"form vanishes identically mod {p}")
    m = 1 if len(reduced) - 1 < n else 0
    if len(reduced) > 1:
        m += gfpoly.distinct_factor_count(reduced, p)
    return m


def is_separable_mod_p(f: BinaryForm, p: int) -> bool:
    """True when f mod p is a nonzero binary form with n distinct projective
    roots (including multiplicity at (1:0))."""
    n = f.degree
    reduced = gfpoly.normalize(f.univariate(), p)
    if not reduced:
        return False
    v = n - (len(reduced) - 1)
    if v > 1:
        return False
    if len(reduced) == 1:
        return True
    d = gfpoly.gf_gcd(reduced, gfpoly.gf_derivative(reduced, p), p)
    return len(d) - 1 == 0


def random_form(n: int, X: int, seed: int) -> BinaryForm:
    """Coefficients i.i.d. uniform on {-X, ..., X}; deterministic per seed."""
    if n < 2 or n % 2:
        raise ValueError("degree must be even and >= 2")
    rng = random.Random(seed)
    return BinaryForm(tuple(rng.randint(-X, X) for _ in range(n + 1)))


def random_nondegenerate_form(n: int, X: int, rng: random.Random) -> BinaryForm:
    """Resample until Disc != 0 (the degenerate locus has tiny mass)."""
    while True:
        f = BinaryForm(tuple(rng.randint(-X, X) for _ in range(n + 1)))
        if any(f.coeffs) and discriminant(f) != 0:
            return f
