"""Rational point search of bounded height and local solubility testing for
z^2 = f(x, y).

Local solubility at an odd prime runs a residue-disk descent: a disk is
decided as soon as its values have constant valuation and unit class
(Hensel), and only the residues where the reduction vanishes are refined.
The number of such residues is bounded by the degree, so the descent stays
narrow even at very large primes dividing the discriminant; existence of a
nonzero square value on the generic disks is checked by scanning when p is
small and is guaranteed by the Weil bound when p exceeds (n + 2)^2.  At
p = 2 a disk is decided once its values are constant modulo 8 times the
valuation part.
"""

import math
import random
from dataclasses import dataclass

from . import gfpoly
from .forms import BinaryForm, discriminant, evaluate, real_root_count
from .numutil import factorize, isqrt_exact
from .orbits import CurvePoint


class DescentBudgetError(RuntimeError):
    """Descent exceeded its depth budget (reported, never silently wrong)."""


def rational_point_search(f: BinaryForm, B: int) -> CurvePoint | None:
    """Smallest primitive point (x0, y0, z0) with |x0|, |y0| <= B on
    z^2 = f(x, y), if any; the points at infinity (1, 0, +-z) are included
    when f0 is a perfect square.  Exact integer square testing throughout."""
    if discriminant(f) == 0:
        raise ValueError("Disc(f) = 0")
    z = isqrt_exact(f.coeffs[0])
    if z is not None:
        return CurvePoint(1, 0, z)
    for h in range(1, B + 1):
        # primitive pairs with max(|x|, |y|) = h, y > 0 half (points are
        # projective and n is even, so (x, y) ~ (-x, -y))
        for x, y in _height_ring(h):
            if math.gcd(x, y) != 1:
                continue
            z = isqrt_exact(evaluate(f, x, y))
            if z is not None:
                return CurvePoint(x, y, z)
    return None


def _height_ring(h: int):
    # x fanned out from 0 so (0, 1) is the first candidate at height 1
    yield 0, h
    for x in range(1, h + 1):
        yield x, h
        yield -x, h
    for y in range(h - 1, 0, -1):
        yield h, y
        yield -h, y
    yield h, 0  # primitive only when h = 1; the gcd filter handles it


def locally_soluble_R(f: BinaryForm) -> bool:
    """True iff f is not negative definite (exact, via real root count)."""
    if f.coeffs[0] == 0:
        return True  # (1:0) is a real root
    if f.coeffs[0] > 0:
        return True
    return real_root_count(f) > 0


_SQUARE_SCAN_BOUND = 1024


def locally_soluble_p(f: BinaryForm, p: int, depth_budget: int | None = None) -> bool:
    """Existence of a primitive Z_p-point on z^2 = f(x, y); Disc(f) != 0.

    Odd p of good reduction above the Hasse-Weil threshold return True
    immediately; otherwise the residue-disk descent decides exactly."""
    disc = discriminant(f)
    if disc == 0:
        raise ValueError("Disc(f) = 0")
    g = f.genus
    if p % 2 == 1 and disc % p != 0 and p > 4 * g * g + 4:
        # good reduction; enough smooth points once p + 1 - 2g*sqrt(p) > n
        if p + 1 - 2 * g * (math.isqrt(p) + 1) - f.degree >= 1:
            return True
    if depth_budget is None:
        vdisc = 0
        d = abs(disc)
        while d % p == 0:
            d //= p
            vdisc += 1
        depth_budget = vdisc + (2 if p == 2 else 0) + f.degree + 4
    affine = [int(c) for c in f.coeffs]  # f(t, 1)
    infinity = _subst_scaled(list(reversed(f.coeffs)), p)  # f(1, p t)
    if p == 2:
        return _decide_2(affine, 0, depth_budget) or _decide_2(infinity, 0, depth_budget)
    return _decide_odd(affine, p, 0, depth_budget) or _decide_odd(infinity, p, 0, depth_budget)


def _subst_scaled(coeffs: list[int], p: int) -> list[int]:
    """g(p * t) for g given by descending coefficients."""
    n = len(coeffs) - 1
    return [c * p ** (n - i) for i, c in enumerate(coeffs)]


def _subst_shift_scale(coeffs: list[int], t0: int, p: int) -> list[int]:
    """g(t0 + p*t), descending coefficients; exact Taylor shift then scale."""
    n = len(coeffs) - 1
    shifted = list(coeffs)
    for k in range(n):
        for j in range(1, n + 1 - k):
            shifted[j] += t0 * shifted[j - 1]
    return [c * p ** (n - i) for i, c in enumerate(shifted)]


def _content_valuation(coeffs: list[int], p: int) -> int:
    v = None
    for c in coeffs:
        if c == 0:
            continue
        w = 0
        while c % p == 0:
            c //= p
            w += 1
        v = w if v is None else min(v, w)
        if v == 0:
            return 0
    return 0 if v is None else v


def _decide_odd(g: list[int], p: int, depth: int, budget: int) -> bool:
    """Does g(t) take a square value (in Z_p) for some t in Z_p? p odd."""
    if all(c == 0 for c in g):
        return True
    e = _content_valuation(g, p)
    h = [c // p**e for c in g]
    hbar = gfpoly.normalize(h, p)
    even = e % 2 == 0
    if even and _takes_unit_square_value(hbar, p):
        return True
    # refinement only at the residues where hbar vanishes
    roots = _fp_roots(hbar, p)
    if roots and depth >= budget:
        raise DescentBudgetError(f"descent at p={p} exceeded depth {budget}")
    for t0 in roots:
        if _decide_odd(_subst_shift_scale(g, t0, p), p, depth + 1, budget):
            return True
    return False


def _takes_unit_square_value(hbar: list[int], p: int) -> bool:
    """Is h(t) a nonzero square mod p for some t in F_p?"""
    if len(hbar) - 1 == 0:
        return _is_qr(hbar[0], p)
    if p <= _SQUARE_SCAN_BOUND:
        squares = {(x * x) % p for x in range(1, (p + 1) // 2 + 1)}
        for t in range(p):
            if _eval_mod(hbar, t, p) in squares:
                return True
        return False
    # large p: split off the square part; h = c * (odd-multiplicity part) * G^2
    c, parts = _unit_and_squarefree(hbar, p)
    odd_deg = sum(len(s) - 1 for s, j in parts if j % 2 == 1)
    if odd_deg >= 1:
        # z^2 = c * (odd-multiplicity part) is a curve with more than 2*deg
        # points once p > (deg + 2)^2 (Weil), so a nonzero square value exists
        assert p > (len(hbar) + 1) ** 2
        return True
    return _is_qr(c, p)


def _unit_and_squarefree(hbar: list[int], p: int):
    unit = hbar[0]
    parts = gfpoly.squarefree_decomposition(hbar, p)
    return unit, parts


def _fp_roots(hbar: list[int], p: int) -> list[int]:
    """Roots of hbar in F_p (distinct), via gcd with x^p - x and splitting."""
    if len(hbar) - 1 == 0:
        return []
    if p <= 64:
        return [t for t in range(p) if _eval_mod(hbar, t, p) == 0]
    x = [1, 0]
    xp = gfpoly.gf_powmod(x, p, hbar, p)
    lin = gfpoly.gf_gcd(gfpoly.add_mod(xp, [p - 1, 0], p), hbar, p)
    if len(lin) - 1 <= 0:
        return []
    rng = random.Random(0x5EED)
    factors = gfpoly.equal_degree_split(lin, 1, p, rng)
    return sorted((-fac[1]) % p for fac in factors)


def _eval_mod(coeffs: list[int], t: int, p: int) -> int:
    acc = 0
    for c in coeffs:
        acc = (acc * t + c) % p
    return acc


def _is_qr(a: int, p: int) -> bool:
    a %= p
    if a == 0:
        return False
    return pow(a, (p - 1) // 2, p) == 1


def _decide_2(g: list[int], depth: int, budget: int) -> bool:
    """Does g(t) take a square value in Z_2 for some t in Z_2?"""
    ec = _content_valuation(g, 2)
    if ec >= 2:
        # dividing by an even power of 2 preserves squareness
        g = [c >> (2 * (ec // 2)) for c in g]
    v = g[-1]  # center value g(0)
    if v == 0:
        return True
    e0 = _val2(v)
    d1 = g[-2] if len(g) >= 2 else 0
    if d1 != 0 and e0 > 2 * _val2(d1):
        # Hensel: a simple root of g lies in this disk, and any disk with a
        # simple root realizes every unit class at every large even valuation
        return True
    tail = min((_val2(c) for c in g[:-1] if c != 0), default=1 << 60)
    if tail >= e0 + 3:
        # value class constant on the whole disk
        return e0 % 2 == 0 and ((v >> e0) & 7) == 1
    if depth >= budget:
        raise DescentBudgetError(f"descent at p=2 exceeded depth {budget}")
    return _decide_2(_subst_shift_scale(g, 0, 2), depth + 1, budget) or _decide_2(
        _subst_shift_scale(g, 1, 2), depth + 1, budget
    )


def _val2(c: int) -> int:
    return (c & -c).bit_length() - 1


def locally_soluble_everywhere(f: BinaryForm) -> tuple[bool, dict[str, bool]]:
    """Verdicts at the real place, p = 2, every odd p <= 4g^2 + 4, and every
    odd prime dividing Disc(f)."""
    disc = discriminant(f)
    if disc == 0:
        raise ValueError("Disc(f) = 0")
    g = f.genus
    verdicts: dict[str, bool] = {"real": locally_soluble_R(f)}
    ps = {2}
    ps.update(q for q in range(3, 4 * g * g + 5) if _is_prime_small(q))
    ps.update(q for q in factorize(disc) if q > 2)
    for p in sorted(ps):
        verdicts[str(p)] = locally_soluble_p(f, p)
    return all(verdicts.values()), verdicts


def _is_prime_small(q: int) -> bool:
    if q < 2:
        return False
    for d in range(2, math.isqrt(q) + 1):
        if q % d == 0:
            return False
    return True


@dataclass
class SurveyRecord:
    coeffs: tuple[int, ...]
    genus: int
    locally_soluble_overall: bool
    verdicts: dict[str, bool]
    point: tuple[int, int, int] | None
    search_bound: int

    def to_jsonable(self) -> dict:
        return {
            "coeffs": [str(c) for c in self.coeffs],
            "genus": self.genus,
            "locally_soluble": self.locally_soluble_overall,
            "verdicts": self.verdicts,
            "point": list(self.point) if self.point else None,
            "search_bound": self.search_bound,
        }


@dataclass
class SurveyAggregate:
    count: int
    locally_soluble: int
    with_point: int

    def to_jsonable(self) -> dict:
        return {
            "count": self.count,
            "locally_soluble": self.locally_soluble,
            "with_point": self.with_point,
            "locally_soluble_fraction": self.locally_soluble / self.count if self.count else None,
            "with_point_fraction": self.with_point / self.count if self.count else None,
        }


def _survey_one(args) -> SurveyRecord:
    coeffs, B = args
    f = BinaryForm(coeffs)
    soluble, verdicts = locally_soluble_everywhere(f)
    pt = rational_point_search(f, B)
    return SurveyRecord(
        coeffs=f.coeffs,
        genus=f.genus,
        locally_soluble_overall=soluble,
        verdicts=verdicts,
        point=(pt.x0, pt.y0, pt.z0) if pt else None,
        search_bound=B,
    )


def survey(n: int, X: int, B: int, count: int, seed: int, jobs: int = 1):
    """Sample `count` squarefree forms of height <= X; report local
    solubility and small points.  Sampling happens up front, so records are
    deterministic per seed and independent of the worker count."""
    rng = random.Random(seed)
    forms = [_random_squarefree(n, X, rng).coeffs for _ in range(count)]
    tasks = [(coeffs, B) for coeffs in forms]
    if jobs > 1 and count > 1:
        import multiprocessing

        with multiprocessing.Pool(jobs) as pool:
            records = pool.map(_survey_one, tasks)
    else:
        records = [_survey_one(t) for t in tasks]
    agg = SurveyAggregate(
        count=len(records),
        locally_soluble=sum(r.locally_soluble_overall for r in records),
        with_point=sum(r.point is not None for r in records),
    )
    return records, agg


def _random_squarefree(n: int, X: int, rng: random.Random) -> BinaryForm:
    while True:
        f = BinaryForm(tuple(rng.randint(-X, X) for _ in range(n + 1)))
        if any(f.coeffs) and discriminant(f) != 0:
            return f


def soluble_by_exhaustion(f: BinaryForm, p: int, start_level: int = 3, max_level: int = 24) -> bool:
    """Independent oracle for locally_soluble_p: flat enumeration of the
    residue classes of P^1(Z/p^k) starting at k = start_level.

    A class {x = x0 + p^k s, y = 1} (or {x = 1, y = y0 + p^k s} on the
    infinity side) has all values congruent to v = f(x0, y0) mod p^k, so it
    is decided once v_p(v) <= k - 1 (k - 3 at p = 2): soluble iff the
    valuation is even and the unit part is a square.  Undecided classes are
    re-enumerated one level deeper."""
    need = 3 if p == 2 else 1
    k = start_level
    pending = [(a, 1, True) for a in range(p**k)]
    pending += [(1, b * p, False) for b in range(p ** (k - 1))]
    while pending:
        if k > max_level:
            raise DescentBudgetError("exhaustive oracle exceeded its depth cap")
        nxt = []
        for x0, y0, affine in pending:
            v = evaluate(f, x0, y0)
            if v == 0:
                return True
            e = 0
            while v % p == 0:
                v //= p
                e += 1
            if e + need <= k:
                if e % 2 == 0 and _unit_is_square(v, p, need):
                    return True
                continue
            for s in range(p):
                if affine:
                    nxt.append((x0 + s * p**k, 1, True))
                else:
                    nxt.append((1, y0 + s * p**k, False))
        pending = nxt
        k += 1
    return False


def _unit_is_square(u: int, p: int, need: int) -> bool:
    if p == 2:
        return u % 8 == 1
    return pow(u % p, (p - 1) // 2, p) == 1
