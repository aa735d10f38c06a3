import random

import pytest

from pencilorbits.forms import BinaryForm, UnimodularMatrix2, discriminant


def random_nondegenerate(n: int, X: int, rng: random.Random) -> BinaryForm:
    while True:
        f = BinaryForm(tuple(rng.randint(-X, X) for _ in range(n + 1)))
        if any(f.coeffs) and discriminant(f) != 0:
            return f


def random_form_with_point(n: int, rng: random.Random, cmax: int = 5, nonzero_lead: bool = False):
    """(f, c) with f_n = c^2 and Disc != 0: the point (0, 1, c) lies on f."""
    while True:
        coeffs = [rng.randint(-6, 6) for _ in range(n)]
        c = rng.randint(1, cmax)
        f = BinaryForm(tuple(coeffs + [c * c]))
        if nonzero_lead and coeffs[0] == 0:
            continue
        if discriminant(f) != 0:
            return f, c


def random_sl2(rng: random.Random, size: int = 3) -> UnimodularMatrix2:
    g = UnimodularMatrix2(1, 0, 0, 1)
    for _ in range(3):
        g = g @ UnimodularMatrix2(1, rng.randint(-size, size), 0, 1)
        g = g @ UnimodularMatrix2(1, 0, rng.randint(-size, size), 1)
    return g


@pytest.fixture
def rng():
    return random.Random(0xC0FFEE)
