import itertools

import pytest

from pencilorbits.forms import BinaryForm, is_separable_mod_p
from pencilorbits.finite_fields import (
    BudgetExceededError,
    count_pairs_with_form,
    orbit_statistics_prediction,
    pair_census_n2,
    sl_n_order,
    square_value_count,
)


def test_sl_n_order_examples():
    assert sl_n_order(1, 7) == 1
    assert sl_n_order(2, 3) == 24
    assert sl_n_order(4, 2) == 20160  # = #GL_4(F_2) = 15*14*12*8


def test_sl2_order_by_enumeration():
    for p in (2, 3):
        cnt = 0
        for a, b, c, d in itertools.product(range(p), repeat=4):
            if (a * d - b * c) % p == 1:
                cnt += 1
        assert cnt == sl_n_order(2, p)


def test_count_pairs_n2_examples():
    st = count_pairs_with_form(BinaryForm((1, 1, 1)), 2)
    assert st.total_elements == 6 == sl_n_order(2, 2)
    assert st.orbit_count == 1 and st.stabilizer_sizes == (1,)
    st = count_pairs_with_form(BinaryForm((1, 0, -1)), 3)  # split separable, m = 2
    assert st.total_elements == 24
    assert st.orbit_count == 2 and st.stabilizer_sizes == (4, 4)


def test_count_pairs_matches_predictions_all_separable_p3():
    p = 3
    group_order = 2 * sl_n_order(2, p)
    for coeffs in itertools.product(range(p), repeat=3):
        f0 = coeffs[0] if coeffs[0] else p  # keep representative in range
        form = BinaryForm((coeffs[0], coeffs[1], coeffs[2]))
        if not any(coeffs) or not is_separable_mod_p(form, p):
            continue
        stats = count_pairs_with_form(form, p)
        pred = orbit_statistics_prediction(form, p)
        assert stats.total_elements == pred.total_elements == sl_n_order(2, p)
        assert stats.orbit_count == pred.orbit_count
        assert stats.stabilizer_sizes == pred.stabilizer_sizes
        assert stats.consistent(group_order)


def test_count_pairs_n4_p2():
    st = count_pairs_with_form(BinaryForm((1, 1, 0, 0, 1)), 2)
    assert st.total_elements == 20160
    with pytest.raises(BudgetExceededError):
        count_pairs_with_form(BinaryForm((1, 1, 0, 0, 1)), 3)


def test_census_total():
    census = pair_census_n2(3)
    assert sum(len(v) for v in census.values()) == 3**6


def test_square_value_count_examples():
    assert square_value_count(BinaryForm((0, 1, 0)), 3) == 3
    assert square_value_count(BinaryForm((1, 0, 0)), 3) == 4


def test_square_value_complementarity(rng):
    # not both f and uf (u a nonresidue) take square values at a point
    for p in (3, 5, 7):
        nonres = next(u for u in range(2, p) if pow(u, (p - 1) // 2, p) == p - 1)
        for _ in range(10):
            f = BinaryForm(tuple(rng.randint(0, p - 1) for _ in range(5)))
            if not any(c % p for c in f.coeffs):
                continue
            k = square_value_count(f, p)
            k2 = square_value_count(BinaryForm(tuple(nonres * c for c in f.coeffs)), p)
            assert k <= p + 1 and k2 <= p + 1
            assert k + k2 >= p + 1  # zeros of f count as squares on both sides


def test_prediction_examples(rng):
    # m = 1, p = 5 -> 1 orbit, stabilizer 2
    f = BinaryForm((1, 0, 2))  # x^2 + 2 y^2 irreducible mod 5 (-2 nonresidue)
    pred = orbit_statistics_prediction(f, 5)
    assert pred.orbit_count == 1 and pred.stabilizer_sizes == (2,)
    # p = 2 separable: 1 orbit, trivial stabilizer
    pred = orbit_statistics_prediction(BinaryForm((1, 1, 1)), 2)
    assert pred.orbit_count == 1 and pred.stabilizer_sizes == (1,)
    with pytest.raises(ValueError):
        orbit_statistics_prediction(BinaryForm((1, 2, 1)), 2)
