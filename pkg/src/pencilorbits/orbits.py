"""Pairs of integral symmetric matrices: invariant binary form, group
actions, the point-to-pair construction, the ideal-to-pair map, and the
x - T square-class map."""

import json
from dataclasses import dataclass
from fractions import Fraction
from math import gcd

from . import rings
from .forms import BinaryForm, UnimodularMatrix2, discriminant, evaluate, sl2_act
from .rings import AlgebraElement, BasedIdeal


@dataclass(frozen=True)
class SymmetricPair:
    """(A, B): two symmetric n x n integer matrices."""

    A: tuple[tuple[int, ...], ...]
    B: tuple[tuple[int, ...], ...]

    def __post_init__(self):
        for M in (self.A, self.B):
            n = len(M)
            if any(len(row) != n for row in M):
                raise ValueError("matrices must be square")
            if any(M[i][j] != M[j][i] for i in range(n) for j in range(n)):
                raise ValueError("matrices must be symmetric")
        if len(self.A) != len(self.B):
            raise ValueError("matrices must have equal size")

    @property
    def n(self) -> int:
        return len(self.A)

    def to_json(self) -> str:
        return json.dumps({"A": [list(r) for r in self.A], "B": [list(r) for r in self.B]})

    @classmethod
    def from_json(cls, s: str) -> "SymmetricPair":
        d = json.loads(s)
        return cls(tuple(tuple(r) for r in d["A"]), tuple(tuple(r) for r in d["B"]))


@dataclass(frozen=True)
class CurvePoint:
    """Integral point (x0, y0, z0) with gcd(x0, y0) = 1 and z0^2 = f(x0, y0);
    the curve constraint is checked against a form at use sites."""

    x0: int
    y0: int
    z0: int

    def __post_init__(self):
        if gcd(self.x0, self.y0) != 1:
            raise ValueError("x0, y0 must be coprime")

    def on_curve(self, f: BinaryForm) -> bool:
        return self.z0**2 == evaluate(f, self.x0, self.y0)


def _det_int(M: list[list[int]]) -> int:
    """Fraction-free Bareiss determinant."""
    n = len(M)
    A = [row[:] for row in M]
    sign = 1
    prev = 1
    for k in range(n - 1):
        if A[k][k] == 0:
            piv = next((r for r in range(k + 1, n) if A[r][k] != 0), None)
            if piv is None:
                return 0
            A[k], A[piv] = A[piv], A[k]
            sign = -sign
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                A[i][j] = (A[i][j] * A[k][k] - A[i][k] * A[k][j]) // prev
            A[i][k] = 0
        prev = A[k][k]
    return sign * A[n - 1][n - 1]


def invariant_form(v: SymmetricPair) -> BinaryForm:
    """f_v(x, y) = (-1)^(n/2) det(A x - B y), computed exactly by
    interpolation of det(A t - B) at t = 0..n."""
    n = v.n
    vals = []
    for t in range(n + 1):
        M = [[v.A[i][j] * t - v.B[i][j] for j in range(n)] for i in range(n)]
        vals.append(_det_int(M))
    coeffs = _interpolate_integer(vals)  # coeffs[k] multiplies t^k
    sign = -1 if (n // 2) % 2 else 1
    # det(Ax - By) = sum_k coeffs[k] x^k y^(n-k); binary form index i = n - k
    out = [sign * coeffs[n - i] for i in range(n + 1)]
    return BinaryForm(tuple(out))


def _interpolate_integer(vals: list[int]) -> list[int]:
    """Coefficients (ascending) of the degree <= n polynomial with
    p(t) = vals[t] for t = 0..n; exact, result must be integral."""
    n = len(vals) - 1
    coeffs = [Fraction(0)] * (n + 1)
    for t, val in enumerate(vals):
        if val == 0:
            continue
        num = [Fraction(val)]
        den = 1
        for s in range(n + 1):
            if s == t:
                continue
            num = _mul_linear(num, -s)  # multiply by (x - s)
            den *= t - s
        for k in range(len(num)):
            coeffs[k] += num[k] / den
    out = []
    for c in coeffs:
        assert c.denominator == 1
        out.append(int(c))
    return out


def _mul_linear(poly: list[Fraction], c: int) -> list[Fraction]:
    """poly (ascending) times (x + c)."""
    out = [Fraction(0)] * (len(poly) + 1)
    for i, a in enumerate(poly):
        out[i] += a * c
        out[i + 1] += a
    return out


def gl_act(g: list[list[int]], v: SymmetricPair) -> SymmetricPair:
    """(g A g^t, g B g^t) for g with determinant +-1."""
    d = _det_int([list(r) for r in g])
    if d not in (1, -1):
        raise ValueError("matrix must be unimodular (det +-1)")
    A = _congruence(g, v.A)
    B = _congruence(g, v.B)
    return SymmetricPair(A, B)


def _congruence(g, M):
    n = len(M)
    gM = [[sum(g[i][k] * M[k][j] for k in range(n)) for j in range(n)] for i in range(n)]
    out = [[sum(gM[i][k] * g[j][k] for k in range(n)) for j in range(n)] for i in range(n)]
    return tuple(tuple(r) for r in out)


def sl2_act_on_pair(delta: UnimodularMatrix2, v: SymmetricPair) -> SymmetricPair:
    """The pencil-slot action compatible with sl2_act on the invariant form:
    A' = a A - b B, B' = d B - c A for delta = (a b; c d)."""
    a, b, c, d = delta.a, delta.b, delta.c, delta.d
    n = v.n
    A = tuple(tuple(a * v.A[i][j] - b * v.B[i][j] for j in range(n)) for i in range(n))
    B = tuple(tuple(d * v.B[i][j] - c * v.A[i][j] for j in range(n)) for i in range(n))
    return SymmetricPair(A, B)


def template_pair(f: BinaryForm, c: int) -> SymmetricPair:
    """The explicit pair for the point (0, 1, c) on z^2 = f(x, y), which
    requires f_n = c^2.  Block pattern: corner -1 / c entries, anti-diagonal
    1 blocks, and a Hankel band of the coefficients."""
    n = f.degree
    if f.coeffs[n] != c * c:
        raise ValueError("template requires f_n = c^2")
    fc = f.coeffs
    A = [[0] * n for _ in range(n)]
    B = [[0] * n for _ in range(n)]
    A[0][0] = -1
    for i in range(1, n // 2):
        A[i][n - i] = A[n - i][i] = 1
    for i in range(n // 2, n):
        for j in range(n // 2, n):
            A[i][j] = fc[i + j - n]
    B[0][n - 1] = B[n - 1][0] = c
    B[n - 1][n - 1] = -fc[n - 1]
    for i in range(1, n // 2):
        B[i][n - 1 - i] = B[n - 1 - i][i] = 1
    for i in range(n // 2, n - 1):
        for j in range(n // 2, n - 1):
            B[i][j] = fc[i + j - n + 1]
    return SymmetricPair(tuple(tuple(r) for r in A), tuple(tuple(r) for r in B))


def pair_from_point(f: BinaryForm, P: CurvePoint) -> SymmetricPair:
    """Integral pair with invariant form exactly f, from a point on
    z^2 = f(x, y): move the point to (0, 1) by gamma in SL2(Z), instantiate
    the template there, and pull back through the pencil action."""
    if discriminant(f) == 0:
        raise ValueError("Disc(f) = 0")
    if not P.on_curve(f):
        raise ValueError("point does not lie on z^2 = f(x, y)")
    x0, y0 = P.x0, P.y0
    r, s = _bezout(x0, y0)
    gamma = UnimodularMatrix2(s, -r, x0, y0)
    fprime = sl2_act(gamma, f)
    v = template_pair(fprime, P.z0)
    result = sl2_act_on_pair(gamma.inverse(), v)
    assert invariant_form(result) == f
    return result


def _bezout(x0: int, y0: int) -> tuple[int, int]:
    """(r, s) with r*x0 + s*y0 = 1."""
    old_r, rr = x0, y0
    old_s, ss = 1, 0
    old_t, tt = 0, 1
    while rr:
        q = old_r // rr
        old_r, rr = rr, old_r - q * rr
        old_s, ss = ss, old_s - q * ss
        old_t, tt = tt, old_t - q * tt
    if old_r == -1:
        old_s, old_t = -old_s, -old_t
        old_r = 1
    assert old_r == 1
    return old_s, old_t


def construction_ideal(f: BinaryForm, c: int) -> tuple[BasedIdeal, AlgebraElement]:
    """The pair (I, alpha) attached to the point (0, 1, c): alpha = theta and
    I = <c, theta * I_f^((n-4)/2)>, with the graded basis
    (c, theta, ..., theta^((n-2)/2), zeta_(n/2), ..., zeta_(n-1)) for n >= 4
    and (c, zeta_1) for n = 2."""
    n = f.degree
    if f.coeffs[n] != c * c:
        raise ValueError("construction requires f_n = c^2")
    if c == 0:
        raise ValueError("Weierstrass point: the ideal construction needs c != 0")
    alpha = rings.element_theta(f)
    basis = [rings._coerce(f, c)]
    if n == 2:
        basis.append(rings.zeta_element(f, 1))
    else:
        table = rings._theta_power_table(f.coeffs)
        for j in range(1, (n - 2) // 2 + 1):
            basis.append(AlgebraElement(f, table[j]))
        for j in range(n // 2, n):
            basis.append(rings.zeta_element(f, j))
    return BasedIdeal(f, tuple(basis)), alpha


def _target_module_basis(f: BinaryForm) -> list[AlgebraElement]:
    """Natural graded basis of I_f^(n-3): (1, theta, ..., theta^(n-3),
    zeta_(n-2), zeta_(n-1)) for n >= 4, and the xi-basis of I_f^(-1) for
    n = 2.  The last two slots carry zeta_(n-1) and zeta_(n-2)."""
    n = f.degree
    if n == 2:
        return list(rings.ideal_inverse_power(f).basis)
    return list(rings.ideal_power_basis(f, n - 3).basis)


def verify_pair_data(I: BasedIdeal, alpha: AlgebraElement) -> tuple[bool, list[str]]:
    """Check the pair-data conditions: I^2 inside alpha*I_f^(n-3) (every
    b_i b_j / alpha integral on the natural basis) and the norm equation
    N(I)^2 = N(alpha) N(I_f^(n-3)) up to sign."""
    f = I.form
    n = f.degree
    diagnostics: list[str] = []
    if discriminant(f) == 0:
        return False, ["Disc(f) = 0"]
    target = _target_module_basis(f)
    target_ideal = BasedIdeal(f, tuple(target))
    alpha_inv = alpha.inverse()
    ok = True
    for i, bi in enumerate(I.basis):
        for j in range(i, n):
            prod = rings.algebra_mul(rings.algebra_mul(bi, I.basis[j]), alpha_inv)
            coords = rings.expansion_in_basis(target_ideal, prod)
            if any(c.denominator != 1 for c in coords):
                ok = False
                diagnostics.append(f"b_{i} b_{j} / alpha is not integral on the I_f^(n-3) basis")
    nI = rings.ideal_norm(I)
    nalpha = rings.algebra_norm(alpha)
    ntarget = Fraction(1, f.coeffs[0] ** (n - 3)) if n >= 4 else Fraction(f.coeffs[0])
    ntarget = abs(ntarget)
    if nI**2 != abs(nalpha) * ntarget:
        ok = False
        diagnostics.append(f"norm equation fails: N(I)^2 = {nI**2}, |N(alpha) N(I^(n-3))| = {abs(nalpha) * ntarget}")
    return ok, diagnostics


def pair_from_ideal(I: BasedIdeal, alpha: AlgebraElement) -> SymmetricPair:
    """Symmetric pair from valid pair data: expand b_i b_j / alpha on the
    natural I_f^(n-3) basis and read off the two top coefficient matrices;
    the (A, B) assignment and signs are fixed by the determinant identity."""
    f = I.form
    n = f.degree
    ok, diag = verify_pair_data(I, alpha)
    if not ok:
        raise ValueError("invalid pair data: " + "; ".join(diag))
    target = BasedIdeal(f, tuple(_target_module_basis(f)))
    alpha_inv = alpha.inverse()
    P = [[0] * n for _ in range(n)]  # zeta_(n-2) slot
    Q = [[0] * n for _ in range(n)]  # zeta_(n-1) slot
    for i in range(n):
        for j in range(i, n):
            prod = rings.algebra_mul(rings.algebra_mul(I.basis[i], I.basis[j]), alpha_inv)
            coords = rings.expansion_in_basis(target, prod)
            P[i][j] = P[j][i] = int(coords[n - 2])
            Q[i][j] = Q[j][i] = int(coords[n - 1])
    Pt = tuple(tuple(r) for r in P)
    Qt = tuple(tuple(r) for r in Q)
    negP = tuple(tuple(-x for x in r) for r in Pt)
    negQ = tuple(tuple(-x for x in r) for r in Qt)
    candidates = [
        (Pt, Qt), (Qt, Pt), (Pt, negQ), (Qt, negP),
        (negP, Qt), (negQ, Pt), (negP, negQ), (negQ, negP),
    ]
    for A, B in candidates:
        v = SymmetricPair(A, B)
        if invariant_form(v) == f:
            return v
    raise ArithmeticError("no assignment of the coefficient matrices satisfies the determinant identity")


def x_minus_T(f: BinaryForm, P: CurvePoint) -> AlgebraElement:
    """The square-class representative y0*theta - x0 attached to a point;
    N(y0 theta - x0) * f0 = z0^2.  Weierstrass points (z0 = 0) are rejected."""
    if P.z0 == 0:
        raise ValueError("Weierstrass point: the x - T class is not defined here")
    if not P.on_curve(f):
        raise ValueError("point does not lie on z^2 = f(x, y)")
    return rings.linear_element(f, P.y0, -P.x0)


def transported_construction_class(f: BinaryForm, P: CurvePoint) -> AlgebraElement:
    """The class of the construction data for P, transported back to K_f:
    theta' = (y0 theta - x0)/(r theta + s) followed by the module
    identification multiplies the class by (r theta + s)^-(n-3), giving
    (y0 theta - x0) * (r theta + s)^-(n-2) exactly."""
    n = f.degree
    r, s = _bezout(P.x0, P.y0)
    # (r, s) may be shifted along (y0, -x0); pick a representative for which
    # r*theta + s is invertible (at most n shifts can fail since (x0:y0) is
    # not a root of f)
    for t in range(n + 1):
        rr, ss = r + t * P.y0, s - t * P.x0
        if evaluate(f, -ss, rr) != 0:
            break
    num = rings.linear_element(f, P.y0, -P.x0)
    den = rings.linear_element(f, rr, ss)
    acc = num
    den_inv = den.inverse()
    for _ in range(n - 2):
        acc = rings.algebra_mul(acc, den_inv)
    return acc


def random_unimodular(n: int, rng, steps: int = 12, bound: int = 2) -> list[list[int]]:
    """Random product of elementary matrices with det +-1 and bounded entries."""
    g = [[1 if i == j else 0 for j in range(n)] for i in range(n)]
    for _ in range(steps):
        kind = rng.randrange(3)
        i = rng.randrange(n)
        j = rng.randrange(n)
        if kind == 0 and i != j:
            c = rng.randint(-bound, bound)
            for col in range(n):
                g[i][col] += c * g[j][col]
        elif kind == 1 and i != j:
            g[i], g[j] = g[j], g[i]
        elif kind == 2:
            for col in range(n):
                g[i][col] = -g[i][col]
    return g
