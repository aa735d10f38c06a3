"""Orbit statistics over F_p: exhaustive pair counts against the closed-form
predictions (totals #SL_n(F_p); 2^(m-1) orbits with stabilizers of size 2^m
at odd p)."""

from pencilorbits import BinaryForm, count_pairs_with_form, orbit_statistics_prediction, sl_n_order
from pencilorbits.forms import factorization_type_mod_p, is_separable_mod_p

print("n = 2, p = 5: every separable binary quadratic has #SL_2(F_5) =",
      sl_n_order(2, 5), "pairs\n")

for coeffs in [(1, 0, 2), (1, 0, 4), (1, 1, 1), (2, 3, 1)]:
    form = BinaryForm(coeffs)
    if not is_separable_mod_p(form, 5):
        continue
    ft = factorization_type_mod_p(form, 5)
    stats = count_pairs_with_form(form, 5)
    pred = orbit_statistics_prediction(form, 5)
    print(f"f = {form}  (m = {ft.m} distinct factors)")
    print(f"   counted: total {stats.total_elements}, orbits {stats.orbit_count}, stabilizers {stats.stabilizer_sizes}")
    print(f"   predicted: orbits {pred.orbit_count}, stabilizers {pred.stabilizer_sizes}")
    print(f"   square values on P^1: k = {stats.square_point_count} (<= p + 1 = 6)\n")

# n = 4, p = 2: all 2^20 pairs enumerated once by five-point determinant keys
f = BinaryForm((1, 1, 0, 0, 1))
stats = count_pairs_with_form(f, 2)
print("n = 4, p = 2, f =", f)
print("   total over 2^20 pairs:", stats.total_elements, "== #SL_4(F_2) =", sl_n_order(4, 2))
