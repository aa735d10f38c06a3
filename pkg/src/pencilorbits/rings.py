"""The rank-n ring R_f attached to a binary form, its based ideals, element
arithmetic in K_f = Q[x]/(f(x,1)), norms, and square-class testing.

Basis conventions.  Elements of K_f carry power-basis coordinates
(1, theta, ..., theta^(n-1)) as Fractions.  R_f has the integral basis
(1, zeta_1, ..., zeta_(n-1)) with zeta_k = f0*theta^k + ... + f_(k-1)*theta;
the two are related by an integer triangular transition with diagonal
(1, f0, ..., f0), so conversions are exact.  Based ideals store an ordered
basis; their norm is the (positive, by convention) determinant of the
transition to the R_f basis.
"""

import enum
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from math import gcd, lcm

from . import gfpoly, intpoly
from .forms import BinaryForm, discriminant
from .numutil import hnf_rows, primes_upto


class SquareClassVerdict(enum.Enum):
    EQUAL = "equal"
    DISTINCT = "distinct"
    INCONCLUSIVE = "inconclusive"


_PRIME_CACHE: dict[int, list[int]] = {}


def _odd_primes(bound: int) -> list[int]:
    # grown lazily; square-class witnesses rarely need more than small primes
    for b in (10_000, 100_000, 1_000_000):
        if bound <= b:
            bound = b
            break
    if bound not in _PRIME_CACHE:
        _PRIME_CACHE[bound] = primes_upto(bound)[1:]
    return _PRIME_CACHE[bound]


@dataclass(frozen=True)
class AlgebraElement:
    """Element of K_f in power-basis coordinates (length n, Fractions)."""

    form: BinaryForm
    coords: tuple[Fraction, ...]

    def __post_init__(self):
        n = self.form.degree
        if len(self.coords) != n:
            raise ValueError(f"need {n} coordinates")
        object.__setattr__(self, "coords", tuple(Fraction(c) for c in self.coords))

    def __add__(self, other):
        other = _coerce(self.form, other)
        return AlgebraElement(self.form, tuple(a + b for a, b in zip(self.coords, other.coords)))

    def __sub__(self, other):
        other = _coerce(self.form, other)
        return AlgebraElement(self.form, tuple(a - b for a, b in zip(self.coords, other.coords)))

    def __neg__(self):
        return AlgebraElement(self.form, tuple(-a for a in self.coords))

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            return AlgebraElement(self.form, tuple(a * other for a in self.coords))
        return algebra_mul(self, other)

    __rmul__ = __mul__

    def __eq__(self, other):
        return isinstance(other, AlgebraElement) and self.form == other.form and self.coords == other.coords

    def __hash__(self):
        return hash((self.form.coeffs, self.coords))

    def is_zero(self) -> bool:
        return all(c == 0 for c in self.coords)

    def as_poly(self) -> list[Fraction]:
        """Descending coefficient list of the representing polynomial in theta."""
        return intpoly.strip(list(reversed(self.coords)))

    def numerator_poly(self) -> tuple[list[int], int]:
        """(integer polynomial G descending, positive D) with self = G(theta)/D."""
        den = lcm(*[c.denominator for c in self.coords]) if self.coords else 1
        poly = [int(c * den) for c in reversed(self.coords)]
        return intpoly.strip(poly), den

    def norm(self) -> Fraction:
        return algebra_norm(self)

    def inverse(self) -> "AlgebraElement":
        return algebra_inverse(self)


def _coerce(form: BinaryForm, x) -> AlgebraElement:
    if isinstance(x, AlgebraElement):
        if x.form != form:
            raise ValueError("elements belong to different algebras")
        return x
    n = form.degree
    return AlgebraElement(form, (Fraction(x),) + (Fraction(0),) * (n - 1))


def element_one(f: BinaryForm) -> AlgebraElement:
    return _coerce(f, 1)


def element_theta(f: BinaryForm) -> AlgebraElement:
    n = f.degree
    coords = [Fraction(0)] * n
    coords[1] = Fraction(1)
    return AlgebraElement(f, tuple(coords))


def linear_element(f: BinaryForm, a, b) -> AlgebraElement:
    """a*theta + b."""
    n = f.degree
    coords = [Fraction(0)] * n
    coords[0] = Fraction(b)
    coords[1] = Fraction(a)
    return AlgebraElement(f, tuple(coords))


@lru_cache(maxsize=256)
def _theta_power_table(coeffs: tuple[int, ...]) -> tuple[tuple[Fraction, ...], ...]:
    """Power-basis coordinates of theta^k for k = 0 .. 2n-2."""
    n = len(coeffs) - 1
    f0 = coeffs[0]
    if f0 == 0:
        raise ValueError("K_f requires a nonzero leading coefficient")
    rows: list[tuple[Fraction, ...]] = []
    cur = [Fraction(0)] * n
    cur[0] = Fraction(1)
    rows.append(tuple(cur))
    for _ in range(2 * n - 2):
        # multiply by theta: shift, then reduce theta^n = -(f1 theta^(n-1)+...+fn)/f0
        top = cur[n - 1]
        cur = [Fraction(0)] + cur[: n - 1]
        if top:
            for j in range(n):
                cur[j] -= top * Fraction(coeffs[n - j], f0)
        rows.append(tuple(cur))
    return tuple(rows)


def algebra_mul(u: AlgebraElement, v: AlgebraElement) -> AlgebraElement:
    if u.form != v.form:
        raise ValueError("elements belong to different algebras")
    n = u.form.degree
    table = _theta_power_table(u.form.coeffs)
    conv = [Fraction(0)] * (2 * n - 1)
    for i, a in enumerate(u.coords):
        if a:
            for j, b in enumerate(v.coords):
                if b:
                    conv[i + j] += a * b
    out = [Fraction(0)] * n
    for k, c in enumerate(conv):
        if c:
            row = table[k]
            for j in range(n):
                if row[j]:
                    out[j] += c * row[j]
    return AlgebraElement(u.form, tuple(out))


def algebra_norm(u: AlgebraElement) -> Fraction:
    """Norm via Res(f(x,1), G(x))/(f0^deg(G) * D^n) for u = G(theta)/D."""
    f = u.form
    G, D = u.numerator_poly()
    if not G:
        return Fraction(0)
    f0 = f.coeffs[0]
    res = intpoly.resultant(f.univariate(), G)
    return Fraction(res, f0 ** (len(G) - 1) * D**f.degree)


def algebra_inverse(u: AlgebraElement) -> AlgebraElement:
    """Inverse in K_f by the extended Euclidean algorithm (needs Disc != 0
    only to the extent that gcd(G, f) = 1)."""
    f = u.form
    G, D = u.numerator_poly()
    if not G:
        raise ZeroDivisionError("zero element")
    fpoly = [Fraction(c) for c in f.univariate()]
    gpoly = [Fraction(c) for c in G]
    # extended gcd: s*g + t*f = r (constant)
    r0, r1 = fpoly, gpoly
    s0, s1 = [], [Fraction(1)]
    while len(r1) - 1 > 0:
        q, r = intpoly.divmod_exact(r0, r1)
        s_new = _poly_sub(s0, _poly_mul(q, s1))
        r0, s0, r1, s1 = r1, s1, r, s_new
        if not r1:
            raise ZeroDivisionError("element is a zero divisor")
    c = r1[0]
    inv_poly = [x / c * D for x in s1]
    # reduce mod f and convert ascending coords
    _, rem = intpoly.divmod_exact(inv_poly, fpoly)
    n = f.degree
    coords = [Fraction(0)] * n
    for i, coeff in enumerate(reversed(rem)):
        coords[i] = Fraction(coeff)
    return AlgebraElement(f, tuple(coords))


def _poly_mul(p, q):
    if not p or not q:
        return []
    out = [Fraction(0)] * (len(p) + len(q) - 1)
    for i, a in enumerate(p):
        if a:
            for j, b in enumerate(q):
                out[i + j] += a * b
    return out


def _poly_sub(p, q):
    if len(p) < len(q):
        p = [Fraction(0)] * (len(q) - len(p)) + list(p)
    else:
        q = [Fraction(0)] * (len(p) - len(q)) + list(q)
    return intpoly.strip([a - b for a, b in zip(p, q)])


# ---------------------------------------------------------------------------
# The ring R_f and its zeta basis


@lru_cache(maxsize=256)
def _zeta_matrix(coeffs: tuple[int, ...]) -> tuple[tuple[int, ...], ...]:
    """Columns = power-basis coordinates of (1, zeta_1, ..., zeta_(n-1));
    entry [j][k] is the theta^j coefficient of basis element k."""
    n = len(coeffs) - 1
    Z = [[0] * n for _ in range(n)]
    Z[0][0] = 1
    for k in range(1, n):
        # zeta_k = f0 theta^k + f1 theta^(k-1) + ... + f_(k-1) theta
        for j in range(1, k + 1):
            Z[j][k] = coeffs[k - j]
    return tuple(tuple(row) for row in Z)


def zeta_element(f: BinaryForm, k: int) -> AlgebraElement:
    """zeta_k as an element (zeta_0 := 1; zeta_n would be the scalar -f_n)."""
    n = f.degree
    if k == 0:
        return element_one(f)
    if not 1 <= k <= n - 1:
        raise ValueError("zeta index out of range")
    Z = _zeta_matrix(f.coeffs)
    return AlgebraElement(f, tuple(Fraction(Z[j][k]) for j in range(n)))


def to_zeta_coords(u: AlgebraElement) -> tuple[Fraction, ...]:
    """Coordinates of u on (1, zeta_1, ..., zeta_(n-1)); exact triangular solve."""
    f = u.form
    n = f.degree
    f0 = f.coeffs[0]
    Z = _zeta_matrix(f.coeffs)
    coords = list(u.coords)
    out = [Fraction(0)] * n
    for k in range(n - 1, 0, -1):
        out[k] = coords[k] / f0
        if out[k]:
            for j in range(1, k + 1):
                coords[j] -= out[k] * Z[j][k]
    out[0] = coords[0]
    return tuple(out)


def from_zeta_coords(f: BinaryForm, zc) -> AlgebraElement:
    n = f.degree
    Z = _zeta_matrix(f.coeffs)
    coords = [Fraction(0)] * n
    for k, c in enumerate(zc):
        if c:
            for j in range(n):
                if Z[j][k]:
                    coords[j] += Fraction(c) * Z[j][k]
    return AlgebraElement(f, tuple(coords))


@dataclass(frozen=True)
class RankNRing:
    """R_f with basis (1, zeta_1, ..., zeta_(n-1)) and its integer structure
    constants: table[(i, j)] = coordinates of zeta_i * zeta_j, 1 <= i <= j."""

    form: BinaryForm
    table: tuple[tuple[tuple[int, ...], ...], ...]

    def product(self, i: int, j: int) -> tuple[int, ...]:
        if i > j:
            i, j = j, i
        return self.table[i - 1][j - i]

    def to_json(self) -> str:
        import json

        return json.dumps(
            {
                "form": [str(c) for c in self.form.coeffs],
                "structure_constants": [[list(v) for v in row] for row in self.table],
            }
        )

    @classmethod
    def from_json(cls, s: str) -> "RankNRing":
        import json

        d = json.loads(s)
        form = BinaryForm(tuple(int(c) for c in d["form"]))
        table = tuple(tuple(tuple(v) for v in row) for row in d["structure_constants"])
        return cls(form, table)


def ring_from_form(f: BinaryForm, verify: bool = True) -> RankNRing:
    """Structure constants from the closed multiplication law, with the
    boundary convention zeta_n := -f_n (a scalar).

    For Disc(f) != 0 and verify=True the table is checked entry by entry
    against multiplication in K_f.
    """
    n = f.degree
    if f.coeffs[0] == 0:
        raise ValueError("nonzero leading coefficient required")
    c = f.coeffs
    table = []
    for i in range(1, n):
        row = []
        for j in range(i, n):
            vec = [0] * n  # coords on (1, zeta_1, .., zeta_(n-1))
            for k in range(j + 1, min(i + j, n) + 1):
                coeff = c[i + j - k]
                if k == n:
                    vec[0] += coeff * (-c[n])
                else:
                    vec[k] += coeff
            for k in range(max(i + j - n, 1), i + 1):
                vec[k] -= c[i + j - k]
            row.append(tuple(vec))
        table.append(tuple(row))
    ring = RankNRing(f, tuple(table))
    if verify and discriminant(f) != 0:
        for i in range(1, n):
            for j in range(i, n):
                prod = algebra_mul(zeta_element(f, i), zeta_element(f, j))
                zc = to_zeta_coords(prod)
                if tuple(zc) != tuple(Fraction(x) for x in ring.product(i, j)):
                    raise ArithmeticError(f"structure constant mismatch at ({i},{j})")
    return ring


def ring_multiply(R: RankNRing, u, v) -> tuple:
    """Product of two elements given by integer coordinates on
    (1, zeta_1, ..., zeta_(n-1)), using only the structure constants."""
    n = R.form.degree
    out = [0] * n
    out[0] += u[0] * v[0]
    for k in range(1, n):
        out[k] += u[0] * v[k] + v[0] * u[k]
    for i in range(1, n):
        if not u[i]:
            continue
        for j in range(1, n):
            if not v[j]:
                continue
            coeff = u[i] * v[j]
            prod = R.product(i, j)
            for k in range(n):
                if prod[k]:
                    out[k] += coeff * prod[k]
    return tuple(out)


def ring_discriminant(R: RankNRing) -> int:
    """Determinant of the trace pairing Tr(b_i b_j) on (1, zeta_1, ...)."""
    f = R.form
    n = f.degree
    s = _power_sums(f.coeffs, 2 * n - 2)
    Z = _zeta_matrix(f.coeffs)
    # T = Z^t S Z with S the Hankel matrix of power sums
    T = [[Fraction(0)] * n for _ in range(n)]
    for a in range(n):
        for b in range(a, n):
            acc = Fraction(0)
            for i in range(n):
                if Z[i][a]:
                    for j in range(n):
                        if Z[j][b]:
                            acc += Z[i][a] * Z[j][b] * s[i + j]
            T[a][b] = T[b][a] = acc
    det = _det_fraction(T)
    assert det.denominator == 1
    return int(det)


def _power_sums(coeffs: tuple[int, ...], upto: int) -> list[Fraction]:
    """Newton power sums s_k of the roots of f(x,1), k = 0..upto."""
    n = len(coeffs) - 1
    f0 = coeffs[0]
    s = [Fraction(n)]
    for k in range(1, upto + 1):
        acc = Fraction(0)
        for i in range(1, min(k - 1, n) + 1):
            acc += coeffs[i] * s[k - i]
        if k <= n:
            acc += Fraction(k * coeffs[k])
        s.append(-acc / f0)
    return s


def _det_fraction(M) -> Fraction:
    n = len(M)
    A = [row[:] for row in M]
    det = Fraction(1)
    for col in range(n):
        piv = next((r for r in range(col, n) if A[r][col] != 0), None)
        if piv is None:
            return Fraction(0)
        if piv != col:
            A[col], A[piv] = A[piv], A[col]
            det = -det
        det *= A[col][col]
        inv = 1 / A[col][col]
        for r in range(col + 1, n):
            if A[r][col]:
                fac = A[r][col] * inv
                for cc in range(col, n):
                    A[r][cc] -= fac * A[col][cc]
    return det


# ---------------------------------------------------------------------------
# Based ideals


@dataclass(frozen=True)
class BasedIdeal:
    """A fractional R_f-ideal with an ordered Z-basis of n elements."""

    form: BinaryForm
    basis: tuple[AlgebraElement, ...]

    def __post_init__(self):
        if len(self.basis) != self.form.degree:
            raise ValueError("basis must have n elements")

    def scaled(self, kappa) -> "BasedIdeal":
        if isinstance(kappa, (int, Fraction)):
            kappa = _coerce(self.form, kappa)
        return BasedIdeal(self.form, tuple(algebra_mul(kappa, b) for b in self.basis))

    def to_json(self) -> str:
        """n x n matrix of string-encoded fractions: row i = power-basis
        coordinates of the i-th basis element."""
        import json

        return json.dumps(
            {
                "form": [str(c) for c in self.form.coeffs],
                "basis": [[str(c) for c in b.coords] for b in self.basis],
            }
        )

    @classmethod
    def from_json(cls, s: str) -> "BasedIdeal":
        import json

        d = json.loads(s)
        form = BinaryForm(tuple(int(c) for c in d["form"]))
        basis = tuple(
            AlgebraElement(form, tuple(Fraction(c) for c in row)) for row in d["basis"]
        )
        return cls(form, basis)


def ideal_power_basis(f: BinaryForm, k: int) -> BasedIdeal:
    """I_f(k) = <1, theta, ..., theta^k, zeta_(k+1), ..., zeta_(n-1)> for
    0 <= k <= n-1; I_f(0) = R_f."""
    n = f.degree
    if not 0 <= k <= n - 1:
        raise ValueError("k out of range")
    if f.coeffs[0] == 0:
        raise ValueError("nonzero leading coefficient required")
    table = _theta_power_table(f.coeffs)
    basis = []
    for j in range(k + 1):
        basis.append(AlgebraElement(f, table[j]))
    for j in range(k + 1, n):
        basis.append(zeta_element(f, j))
    return BasedIdeal(f, tuple(basis))


def ideal_inverse_power(f: BinaryForm) -> BasedIdeal:
    """I_f^(-1), with the graded basis xi_j = zeta_j + f_j (so xi_0 = f0);
    satisfies theta * xi_j = zeta_(j+1) and N(I_f^(-1)) = f0."""
    n = f.degree
    basis = [_coerce(f, f.coeffs[0])]
    for j in range(1, n):
        basis.append(zeta_element(f, j) + _coerce(f, f.coeffs[j]))
    return BasedIdeal(f, tuple(basis))


def ideal_power(f: BinaryForm, k: int) -> BasedIdeal:
    """I_f^k for k >= -1 (the only powers the constructions need)."""
    if k >= 0:
        return ideal_power_basis(f, k) if k <= f.degree - 1 else _ideal_product_power(f, k)
    if k == -1:
        return ideal_inverse_power(f)
    raise ValueError("only powers >= -1 are supported")


def _ideal_product_power(f: BinaryForm, k: int) -> BasedIdeal:
    base = ideal_power_basis(f, f.degree - 1)
    acc = base
    for _ in range(k - (f.degree - 1)):
        acc = ideal_mul(acc, ideal_power_basis(f, 1))
    return acc


def ideal_norm(I: BasedIdeal) -> Fraction:
    """|det| of the transition matrix from the ideal basis to the R_f basis."""
    rows = [to_zeta_coords(b) for b in I.basis]
    det = _det_fraction([list(r) for r in rows])
    if det == 0:
        raise ValueError("basis is linearly dependent")
    return abs(det)


def _span_canonical(f: BinaryForm, elements) -> tuple:
    """Canonical form of the Z-span of the given elements (HNF over Z after
    clearing denominators), for span comparisons."""
    rows = [to_zeta_coords(e) for e in elements]
    den = 1
    for r in rows:
        for c in r:
            den = lcm(den, c.denominator)
    mat = [[int(c * den) for c in r] for r in rows]
    H = hnf_rows(mat)
    g = den
    for row in H:
        for c in row:
            g = gcd(g, c)
    g = g or 1
    return (den // g, tuple(tuple(c // g for c in row) for row in H))


def ideal_mul(I: BasedIdeal, J: BasedIdeal) -> BasedIdeal:
    """Product module spanned by pairwise products, with an HNF basis."""
    if I.form != J.form:
        raise ValueError("ideals over different rings")
    f = I.form
    prods = [algebra_mul(a, b) for a in I.basis for b in J.basis]
    den, H = _span_canonical(f, prods)
    if len(H) != f.degree:
        raise ValueError("product span has deficient rank")
    basis = tuple(from_zeta_coords(f, [Fraction(c, den) for c in row]) for row in H)
    return BasedIdeal(f, basis)


def spans_equal(f: BinaryForm, elems_a, elems_b) -> bool:
    return _span_canonical(f, elems_a) == _span_canonical(f, elems_b)


def expansion_in_basis(I: BasedIdeal, u: AlgebraElement) -> tuple[Fraction, ...]:
    """Coordinates of u on the ordered basis of I (exact solve)."""
    f = I.form
    n = f.degree
    cols = [to_zeta_coords(b) for b in I.basis]
    target = list(to_zeta_coords(u))
    A = [[cols[c][r] for c in range(n)] for r in range(n)]
    return tuple(_solve_fraction(A, target))


def _solve_fraction(A, b):
    n = len(b)
    M = [row[:] + [b[i]] for i, row in enumerate(A)]
    for col in range(n):
        piv = next((r for r in range(col, n) if M[r][col] != 0), None)
        if piv is None:
            raise ValueError("singular system")
        M[col], M[piv] = M[piv], M[col]
        inv = 1 / M[col][col]
        M[col] = [x * inv for x in M[col]]
        for r in range(n):
            if r != col and M[r][col]:
                fac = M[r][col]
                M[r] = [x - fac * y for x, y in zip(M[r], M[col])]
    return [M[r][n] for r in range(n)]


# ---------------------------------------------------------------------------
# Norms of linear elements and square classes


def norm_linear(f: BinaryForm, a: int, b: int) -> Fraction:
    """N(a*theta + b) = f(-b, a)/f0."""
    if f.coeffs[0] == 0:
        raise ValueError("nonzero leading coefficient required")
    val = intpoly.evaluate_binary(list(f.coeffs), -b, a)
    if val == 0:
        raise ValueError("a*theta + b is a zero divisor (f has a rational root)")
    return Fraction(val, f.coeffs[0])


def same_square_class(
    alpha: AlgebraElement,
    beta: AlgebraElement,
    trials: int = 50,
    seed: int = 0,
    prime_bound: int = 1_000_000,
) -> SquareClassVerdict:
    """One-sided probabilistic square-class test of alpha and beta in K_f^x.

    DISTINCT is certain: witnessed by a real-embedding sign mismatch or a
    non-square image in a residue field of good reduction.  EQUAL after
    `trials` consistent prime witnesses is heuristic.  Deterministic for a
    fixed seed.
    """
    f = alpha.form
    if beta.form != f:
        raise ValueError("elements belong to different algebras")
    gamma = algebra_mul(alpha, beta)  # square iff classes agree
    G, D = gamma.numerator_poly()
    if not G:
        raise ZeroDivisionError("elements must be invertible")
    disc = discriminant(f)
    if disc == 0:
        raise ValueError("Disc(f) = 0")
    funiv = f.univariate()
    res = intpoly.resultant(funiv, G)
    if res == 0:
        raise ZeroDivisionError("elements must be invertible")

    # real witnesses: gamma must be positive at every real root of f(x,1)
    chain = intpoly.sturm_chain(intpoly.strip(funiv))
    for interval in intpoly.isolate_real_roots(intpoly.strip(funiv)):
        if intpoly.sign_at_root(funiv, chain, interval, G) < 0:
            return SquareClassVerdict.DISTINCT

    bad = abs(f.coeffs[0] * disc * D * res)
    used = 0
    for p in _odd_primes(prime_bound):
        if used >= trials:
            break
        if bad % p == 0:
            continue
        used += 1
        reduced = gfpoly.normalize(funiv, p)
        _, factors = gfpoly.factor(reduced, p, seed=seed)
        gmod = gfpoly.normalize(G, p)
        dinv = pow(D % p, -1, p)
        gmod = [c * dinv % p for c in gmod]
        for h, mult in factors:
            assert mult == 1
            d = len(h) - 1
            w = gfpoly.gf_mod(gmod, h, p)
            e = (p**d - 1) // 2
            t = gfpoly.gf_powmod(w, e, h, p)
            if t != [1]:
                return SquareClassVerdict.DISTINCT
    if used == 0:
        if trials > 0:
            raise RuntimeError("no prime of good reduction below the internal bound")
        return SquareClassVerdict.INCONCLUSIVE
    return SquareClassVerdict.EQUAL
