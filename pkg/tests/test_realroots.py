import numpy as np

from pencilorbits import intpoly
from pencilorbits.realroots import _float_sturm_batch, count_real_roots_batch


def test_batch_matches_exact_small_degrees():
    rng = np.random.default_rng(10)
    for n in (2, 4, 6, 8):
        K = rng.integers(-(1 << 12), 1 << 12, size=(3000, n + 1))
        C = 2 * K + 1  # odd: leading coefficient nonzero
        got = count_real_roots_batch(C)
        for i in range(0, 3000, 17):
            row = [int(c) for c in C[i]]
            assert got[i] == intpoly.real_root_count_squarefree(row), row


def test_batch_matches_exact_high_degree():
    rng = np.random.default_rng(11)
    n = 18
    K = rng.integers(-(1 << 12), 1 << 12, size=(120, n + 1))
    C = 2 * K + 1
    got = count_real_roots_batch(C)
    for i in range(120):
        row = [int(c) for c in C[i]]
        assert got[i] == intpoly.real_root_count_squarefree(row)


def test_certified_rows_agree_with_exact():
    rng = np.random.default_rng(12)
    for n in (6, 12, 14):
        K = rng.integers(-(1 << 12), 1 << 12, size=(800, n + 1))
        C = (2 * K + 1).astype(np.float64)
        counts, ok = _float_sturm_batch(C)
        checked = 0
        for i in range(800):
            if not ok[i]:
                continue
            row = [int(c) for c in C[i]]
            assert counts[i] == intpoly.real_root_count_squarefree(row)
            checked += 1
        assert checked > 400  # the filter certifies most rows at these degrees


def test_nonsquarefree_rows_fall_back():
    # (x - 1)^2 (x + 3): not squarefree; counted by the squarefree part
    row = intpoly.mul(intpoly.mul([1, -1], [1, -1]), [1, 3])
    got = count_real_roots_batch(np.array([row] * 70, dtype=np.int64))
    assert (got == 2).all()
