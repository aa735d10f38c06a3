"""From a rational point on z^2 = f(x, y) to an integral pair of symmetric
matrices with invariant binary form exactly f."""

from pencilorbits import (
    BinaryForm,
    CurvePoint,
    construction_ideal,
    invariant_form,
    pair_from_ideal,
    pair_from_point,
    verify_pair_data,
    x_minus_T,
)
from pencilorbits.rings import algebra_norm

# the genus-1 curve z^2 = x^4 + 2x^3 y - 3x^2 y^2 + x y^3 + 9 y^4 has the
# obvious point (0, 1, 3) since f(0, 1) = 9
f = BinaryForm((1, 2, -3, 1, 9))
P = CurvePoint(0, 1, 3)
print("curve: z^2 =", f)
print("point:", (P.x0, P.y0, P.z0))

v = pair_from_point(f, P)
print("\nA =")
for row in v.A:
    print("   ", row)
print("B =")
for row in v.B:
    print("   ", row)
print("invariant form:", invariant_form(v))
assert invariant_form(v) == f

# the same orbit comes from the based-ideal data (I, alpha): alpha = theta and
# I = <c, theta, zeta_2, zeta_3> inside K_f
I, alpha = construction_ideal(f, 3)
ok, diagnostics = verify_pair_data(I, alpha)
print("\npair data valid:", ok)
w = pair_from_ideal(I, alpha)
print("ideal route invariant form matches:", invariant_form(w) == f)

# the x - T class of the point and its norm identity N * f0 = z0^2
el = x_minus_T(f, P)
print("\nx - T element coords (power basis):", el.coords)
print("N(y0*theta - x0) * f0 =", algebra_norm(el) * f.coeffs[0], "= z0^2 =", P.z0**2)

# a transported point: apply an SL2(Z) change of variable and pull the
# construction back
from pencilorbits import UnimodularMatrix2, sl2_act

g = UnimodularMatrix2(2, 1, 1, 1)
fp = sl2_act(g, f)
Q = CurvePoint(-g.c, g.a, 3)  # (0, 1) * g^-1
print("\ntransported curve: z^2 =", fp)
print("transported point on curve:", Q.on_curve(fp))
vq = pair_from_point(fp, Q)
print("det identity after transport:", invariant_form(vq) == fp)
