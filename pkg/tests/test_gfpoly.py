import itertools
import random

from pencilorbits import gfpoly


def test_factor_reconstructs_product():
    rnd = random.Random(4)
    for p in (2, 3, 5, 7, 13):
        for _ in range(40):
            deg = rnd.randint(1, 9)
            f = [rnd.randrange(p) for _ in range(deg + 1)]
            f = gfpoly.normalize(f, p)
            if len(f) - 1 < 1:
                continue
            unit, factors = gfpoly.factor(f, p)
            prod = [unit]
            for irr, mult in factors:
                assert gfpoly.is_irreducible(irr, p), (p, irr)
                for _ in range(mult):
                    prod = gfpoly.gf_mul(prod, irr, p)
            assert prod == f, (p, f, factors)
            assert len({tuple(i) for i, _ in factors}) == len(factors)


def test_distinct_factor_count_matches_factor():
    rnd = random.Random(5)
    for p in (2, 3, 5, 7):
        for _ in range(60):
            deg = rnd.randint(1, 8)
            f = gfpoly.normalize([rnd.randrange(p) for _ in range(deg + 1)], p)
            if len(f) - 1 < 1:
                continue
            _, factors = gfpoly.factor(f, p)
            assert gfpoly.distinct_factor_count(f, p) == len(factors)


def test_squarefree_decomposition_on_constructed_powers():
    rnd = random.Random(6)
    for p in (2, 3, 5):
        for _ in range(30):
            # product of distinct irreducibles with assorted multiplicities,
            # including multiples of p
            irrs = []
            for d in (1, 1, 2, 3):
                while True:
                    cand = gfpoly.gf_monic(
                        gfpoly.normalize([1] + [rnd.randrange(p) for _ in range(d)], p), p
                    )
                    if gfpoly.is_irreducible(cand, p) and cand not in irrs:
                        irrs.append(cand)
                        break
            mults = [rnd.choice([1, 2, 3, p, p + 1, 2 * p]) for _ in irrs]
            f = [1]
            for irr, m in zip(irrs, mults):
                for _ in range(m):
                    f = gfpoly.gf_mul(f, irr, p)
            got = {}
            for part, mult in gfpoly.squarefree_decomposition(f, p):
                _, facs = gfpoly.factor(part, p)
                for irr, e in facs:
                    assert e == 1
                    got[tuple(irr)] = mult
            want = {tuple(i): m for i, m in zip(irrs, mults)}
            assert got == want


def test_is_irreducible_brute_force():
    for p in (2, 3):
        for deg in (2, 3, 4):
            for vec in itertools.product(range(p), repeat=deg):
                f = [1] + list(vec)
                reducible = False
                for d in range(1, deg // 2 + 1):
                    for gv in itertools.product(range(p), repeat=d):
                        g = [1] + list(gv)
                        if gfpoly.gf_divmod(f, g, p)[1] == []:
                            reducible = True
                            break
                    if reducible:
                        break
                assert gfpoly.is_irreducible(f, p) == (not reducible), (p, f)
