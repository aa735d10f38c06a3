import random
from fractions import Fraction

from pencilorbits import intpoly


def sylvester_resultant(p, q):
    """Oracle: resultant via the Sylvester matrix over Q."""
    m, n = len(p) - 1, len(q) - 1
    size = m + n
    M = [[Fraction(0)] * size for _ in range(size)]
    for i in range(n):
        for j, c in enumerate(p):
            M[i][i + j] = Fraction(c)
    for i in range(m):
        for j, c in enumerate(q):
            M[n + i][i + j] = Fraction(c)
    det = Fraction(1)
    A = M
    for col in range(size):
        piv = next((r for r in range(col, size) if A[r][col] != 0), None)
        if piv is None:
            return Fraction(0)
        if piv != col:
            A[col], A[piv] = A[piv], A[col]
            det = -det
        det *= A[col][col]
        inv = 1 / A[col][col]
        for r in range(col + 1, size):
            if A[r][col]:
                fac = A[r][col] * inv
                for cc in range(col, size):
                    A[r][cc] -= fac * A[col][cc]
    return det


def reference_sturm_count(coeffs):
    """Oracle: classical Sturm chain with Fractions, variations at +-inf."""
    chain = [list(map(Fraction, coeffs))]
    n = len(coeffs) - 1
    chain.append([Fraction((n - i) * coeffs[i]) for i in range(n)])
    while len(chain[-1]) > 1:
        a, b = chain[-2], chain[-1]
        r = list(a)
        while len(r) >= len(b):
            if r[0] != 0:
                c = r[0] / b[0]
                for j in range(1, len(b)):
                    r[j] -= c * b[j]
            r = r[1:]
        while r and r[0] == 0:
            r = r[1:]
        if not r:
            return None
        chain.append([-x for x in r])

    def var(signs):
        s = [x for x in signs if x != 0]
        return sum(1 for i in range(len(s) - 1) if (s[i] > 0) != (s[i + 1] > 0))

    plus = [c[0] for c in chain]
    minus = [c[0] if (len(c) - 1) % 2 == 0 else -c[0] for c in chain]
    return var(minus) - var(plus)


def test_resultant_matches_sylvester():
    rnd = random.Random(1)
    for _ in range(120):
        dp = rnd.randint(1, 6)
        dq = rnd.randint(1, 6)
        p = [rnd.randint(-9, 9) for _ in range(dp + 1)]
        q = [rnd.randint(-9, 9) for _ in range(dq + 1)]
        if p[0] == 0 or q[0] == 0:
            continue
        got = intpoly.resultant(p, q)
        want = sylvester_resultant(p, q)
        assert want.denominator == 1 and got == int(want), (p, q)


def test_real_root_count_matches_reference():
    rnd = random.Random(2)
    for n in (2, 3, 4, 6, 8, 11):
        for _ in range(60):
            p = [rnd.randint(-50, 50) for _ in range(n + 1)]
            if p[0] == 0:
                p[0] = 1
            assert intpoly.real_root_count_squarefree(p) == reference_sturm_count(p), p


def test_real_root_count_on_split_products():
    rnd = random.Random(3)
    for _ in range(40):
        roots = sorted(rnd.sample(range(-12, 12), rnd.randint(1, 5)))
        c = [1]
        for r in roots:
            c = intpoly.mul(c, [1, -r])
        extra = rnd.randint(0, 2)
        ks = rnd.sample(range(1, 30), extra)
        for k in ks:
            c = intpoly.mul(c, [1, 0, k])  # positive definite, pairwise distinct
        assert intpoly.real_root_count_squarefree(c) == len(roots)


def test_nonsquarefree_detected():
    p = intpoly.mul([1, -3], [1, -3])
    p = intpoly.mul(p, [1, 1])
    assert intpoly.real_root_count_squarefree(p) is None
    assert intpoly.squarefree_part(p) in ([1, -2, -3], [-1, 2, 3])


def test_isolation_and_sign_at_root():
    # f = (x - 1)(x + 2)(x - 5)
    f = intpoly.mul(intpoly.mul([1, -1], [1, 2]), [1, -5])
    ivs = intpoly.isolate_real_roots(f)
    assert len(ivs) == 3
    chain = intpoly.sturm_chain(f)
    roots = [-2, 1, 5]
    for iv, r in zip(ivs, roots):
        assert iv[0] < r <= iv[1]
        # sign of q = x - 0.5 at each root
        expected = 1 if r > 0.5 else -1
        assert intpoly.sign_at_root(f, chain, iv, [2, -1]) == expected


def test_poly_gcd():
    a = intpoly.mul([1, -1], [2, 3])
    b = intpoly.mul([1, -1], [1, 7])
    g = intpoly.poly_gcd(a, b)
    assert g == [1, -1]
    assert intpoly.poly_gcd([1, 0, 1], [1, 1]) == [1]


def test_sturm_chain_with_degree_drops():
    # chains where the remainder drops more than one degree at a time
    assert intpoly.real_root_count_squarefree([1, 0, 0, 0, 1]) == 0  # x^4 + 1
    assert intpoly.real_root_count_squarefree([1, 0, 0, 0, 0, 0, -1]) == 2  # x^6 - 1
    assert intpoly.real_root_count_squarefree([1, 0, 0, -2]) == 1  # x^3 - 2
    assert intpoly.resultant([1, 0, 0, 0, 1], [4, 0, 0, 0]) == 256  # f, f'
