"""Dense univariate polynomial arithmetic and factorization over F_p.

Coefficient lists are in descending order with entries reduced mod p and a
nonzero leading coefficient ([] is the zero polynomial).  Factorization is
squarefree decomposition + distinct-degree + Cantor-Zassenhaus equal-degree
splitting; the equal-degree stage is randomized but fully seeded.
"""

import random


def normalize(p: list[int], mod: int) -> list[int]:
    q = [c % mod for c in p]
    i = 0
    while i < len(q) and q[i] == 0:
        i += 1
    return q[i:]


def gf_mul(a, b, mod):
    if not a or not b:
        return []
    out = [0] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        if x:
            for j, y in enumerate(b):
                out[i + j] = (out[i + j] + x * y) % mod
    return normalize(out, mod)


def gf_divmod(a, b, mod):
    if not b:
        raise ZeroDivisionError
    r = list(a)
    db = len(b) - 1
    inv = pow(b[0], -1, mod)
    quo = []
    while len(r) - 1 >= db and r:
        c = r[0] * inv % mod
        quo.append(c)
        tail = r[1:]
        if c:
            for j in range(1, db + 1):
                tail[j - 1] = (tail[j - 1] - c * b[j]) % mod
        r = tail
    i = 0
    while i < len(r) and r[i] == 0:
        i += 1
    return quo, r[i:]


def gf_mod(a, b, mod):
    return gf_divmod(a, b, mod)[1]


def gf_gcd(a, b, mod):
    a, b = normalize(a, mod), normalize(b, mod)
    while b:
        a, b = b, gf_mod(a, b, mod)
    if a:
        inv = pow(a[0], -1, mod)
        a = [c * inv % mod for c in a]
    return a


def gf_powmod(base, e, modulus, mod):
    result = [1]
    base = gf_mod(base, modulus, mod)
    while e:
        if e & 1:
            result = gf_mod(gf_mul(result, base, mod), modulus, mod)
        base = gf_mod(gf_mul(base, base, mod), modulus, mod)
        e >>= 1
    return result


def gf_monic(a, mod):
    if not a:
        return a
    inv = pow(a[0], -1, mod)
    return [c * inv % mod for c in a]


def gf_derivative(a, mod):
    n = len(a) - 1
    return normalize([(n - i) * a[i] for i in range(n)], mod)


def squarefree_decomposition(f, mod):
    """Char-p squarefree decomposition: list of (factor, multiplicity) with
    factors monic, squarefree, pairwise coprime, and product f up to unit."""
    f = gf_monic(normalize(f, mod), mod)
    out: list[tuple[list[int], int]] = []
    if len(f) <= 1:
        return out
    df = gf_derivative(f, mod)
    if not df:
        # f = g(x^p) = (p-th root of g)^p over F_p
        for fac, mult in squarefree_decomposition(_pth_root(f, mod), mod):
            out.append((fac, mult * mod))
        return _merge(out)
    t = gf_gcd(f, df, mod)
    v, _ = gf_divmod(f, t, mod)
    k = 0
    while len(v) > 1:
        k += 1
        w = gf_gcd(t, v, mod)
        u, _ = gf_divmod(v, w, mod)  # factors of multiplicity exactly k
        if len(u) > 1:
            out.append((gf_monic(u, mod), k))
        v = w
        t, _ = gf_divmod(t, w, mod)
    if len(t) > 1:
        # remaining multiplicities all divisible by p
        for fac, mult in squarefree_decomposition(_pth_root(t, mod), mod):
            out.append((fac, mult * mod))
    return _merge(out)


def _merge(pairs):
    acc: dict[tuple, int] = {}
    for fac, m in pairs:
        key = tuple(fac)
        acc[key] = acc.get(key, 0) + m
    return [(list(k), m) for k, m in acc.items()]


def _pth_root(f, mod):
    # f(x) = g(x^p) over F_p; g coefficients are the p-th roots = themselves
    n = len(f) - 1
    assert n % mod == 0
    g = []
    for i in range(0, n + 1, mod):
        g.append(f[i])
    return g


def distinct_degree_factorization(f, mod):
    """[(d, product of all monic irreducible factors of degree d)] for a
    monic squarefree f."""
    out = []
    h = [1, 0]  # x
    v = list(f)
    d = 0
    while len(v) - 1 >= 2 * (d + 1):
        d += 1
        h = gf_powmod(h, mod, v, mod)
        g = gf_gcd(add_mod(h, [mod - 1, 0], mod), v, mod)
        if len(g) > 1:
            out.append((d, g))
            v, _ = gf_divmod(v, g, mod)
            h = gf_mod(h, v, mod)
    if len(v) > 1:
        out.append((len(v) - 1, v))
    return out


def add_mod(a, b, mod):
    if len(a) < len(b):
        a, b = b, a
    out = list(a)
    off = len(a) - len(b)
    for i, c in enumerate(b):
        out[off + i] = (out[off + i] + c) % mod
    return normalize(out, mod)


def equal_degree_split(f, d, mod, rng: random.Random):
    """Cantor-Zassenhaus: split monic squarefree f, all of whose irreducible
    factors have degree d, into the list of its irreducible factors."""
    n = len(f) - 1
    if n == d:
        return [list(f)]
    if mod == 2:
        return _edf_gf2(f, d, rng)
    factors = [list(f)]
    out = []
    e = (mod**d - 1) // 2
    while factors:
        g = factors.pop()
        if len(g) - 1 == d:
            out.append(g)
            continue
        while True:
            a = [rng.randrange(mod) for _ in range(len(g) - 1)]
            a = normalize(a, mod)
            if len(a) < 1:
                continue
            b = gf_powmod(a, e, g, mod)
            b = add_mod(b, [mod - 1], mod)
            h = gf_gcd(b, g, mod)
            if 0 < len(h) - 1 < len(g) - 1:
                q, _ = gf_divmod(g, h, mod)
                factors.append(gf_monic(h, mod))
                factors.append(gf_monic(q, mod))
                break
    return out


def _edf_gf2(f, d, rng):
    # trace-map splitting for p = 2
    factors = [list(f)]
    out = []
    while factors:
        g = factors.pop()
        if len(g) - 1 == d:
            out.append(g)
            continue
        while True:
            a = normalize([rng.randrange(2) for _ in range(len(g) - 1)], 2)
            if not a:
                continue
            t = list(a)
            tr = list(a)
            for _ in range(d - 1):
                t = gf_powmod(t, 2, g, 2)
                tr = add_mod(tr, t, 2)
            h = gf_gcd(tr, g, 2)
            if 0 < len(h) - 1 < len(g) - 1:
                q, _ = gf_divmod(g, h, 2)
                factors.append(h)
                factors.append(q)
                break
    return out


def factor(f, mod, seed: int = 0):
    """Full factorization of f over F_p: (unit, [(irreducible, multiplicity)]).

    Deterministic for a fixed seed; irreducible factors are monic and the
    list is sorted for reproducibility.
    """
    f = normalize(f, mod)
    if not f:
        raise ValueError("cannot factor the zero polynomial")
    unit = f[0]
    f = gf_monic(f, mod)
    rng = random.Random((seed, mod, tuple(f)).__hash__() & 0x7FFFFFFF)
    out = []
    for sqf, mult in squarefree_decomposition(f, mod):
        for d, prod in distinct_degree_factorization(sqf, mod):
            for irr in equal_degree_split(prod, d, mod, rng):
                out.append((irr, mult))
    out.sort(key=lambda t: (len(t[0]), t[0]))
    return unit, out


def distinct_factor_count(f, mod) -> int:
    """Number of distinct monic irreducible factors of f (no splitting needed:
    squarefree decomposition + DDF degree bookkeeping)."""
    total = 0
    seen: list[list[int]] = []
    for sqf, _ in squarefree_decomposition(normalize(f, mod), mod):
        seen.append(sqf)
    # squarefree parts of distinct multiplicity are pairwise coprime
    for sqf in seen:
        for d, prod in distinct_degree_factorization(sqf, mod):
            total += (len(prod) - 1) // d
    return total


def is_irreducible(f, mod) -> bool:
    f = gf_monic(normalize(f, mod), mod)
    n = len(f) - 1
    if n <= 0:
        return False
    if n == 1:
        return True
    x = [1, 0]
    h = gf_powmod(x, mod**n, f, mod)
    if normalize(add_mod(h, [mod - 1, 0], mod), mod):
        return False
    from .numutil import factorize

    for q in factorize(n):
        h = gf_powmod(x, mod ** (n // q), f, mod)
        g = gf_gcd(add_mod(h, [mod - 1, 0], mod), f, mod)
        if len(g) - 1 != 0:
            return False
    return True
