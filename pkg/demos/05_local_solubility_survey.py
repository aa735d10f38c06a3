"""Local solubility of z^2 = f(x, y) and a small survey: the residue-disk
descent at finite primes, the everywhere-insoluble family at odd p, and the
locally-soluble fraction of random genus-1 curves."""

from pencilorbits import BinaryForm, locally_soluble_R, locally_soluble_p, rational_point_search, survey

# a curve insoluble at 3: 2 is a nonresidue, f = 2x^2 + 3(x + 2y)y
f = BinaryForm((2, 3, 6))
print(f, " soluble over Q_3:", locally_soluble_p(f, 3))
print("negative definite curve soluble over R:", locally_soluble_R(BinaryForm((-1, 0, 0, 0, -2))))

# Hensel lifting decides good-reduction primes instantly
g = BinaryForm((1, 2, -3, 1, 9))
print(g, " soluble over Q_7:", locally_soluble_p(g, 7))
print("   small point:", rational_point_search(g, 8))

# survey: fraction of genus-1 curves locally soluble everywhere
records, agg = survey(n=4, X=200, B=12, count=400, seed=1)
print("\nsurvey of 400 genus-1 curves of height <= 200:")
print("   locally soluble: %.1f%%" % (100 * agg.locally_soluble / agg.count))
print("   with a point of height <= 12: %.1f%%" % (100 * agg.with_point / agg.count))
insoluble_places = {}
for r in records:
    for place, verdict in r.verdicts.items():
        if not verdict:
            insoluble_places[place] = insoluble_places.get(place, 0) + 1
print("   obstructions by place:", dict(sorted(insoluble_places.items(), key=lambda kv: -kv[1])))
