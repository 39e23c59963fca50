"""A spectrally symmetric gain graph that is not sign-symmetric.

The Sylvester double [A, A + zI; A + conj(z) I, -A] always has a symmetric
spectrum. For the 5-vertex sixth-root example below it is nevertheless not
switching isomorphic to its negation: the nine-cycle census is lopsided.
"""
import math
from fractions import Fraction

from gainsym import (
    ComplexUnit, cycle_census, example2_fixture, is_sign_symmetric, is_spectrally_symmetric,
    sylvester_double,
)
from gainsym.equivalence import census_obstruction

g = example2_fixture()
print("base graph:", g.n, "vertices,", g.m, "edges")

z = ComplexUnit(turns=Fraction(1, 10))   # exp(i pi / 5), kept exact
d = sylvester_double(g, z)
print("double:", d.n, "vertices,", d.m, "edges")
print("symmetric spectrum:", bool(is_spectrally_symmetric(d)))

# the odd-order census is where the asymmetry shows
census = cycle_census(d, 9)
mu = 0.5 * (math.sqrt(3) * z.im + z.re)
print(f"nine-cycles: {census.total}, Re = -{mu:.10f}: {census.count_near(-mu)}, "
      f"Re = +{mu:.10f}: {census.count_near(mu)}")

res = is_sign_symmetric(d)
print("sign-symmetric:", bool(res), "-", res.reason)

# a handful of other z off the fourth roots of unity behave the same way
for t in (Fraction(1, 7), Fraction(2, 9), Fraction(3, 11)):
    c = census_obstruction(sylvester_double(g, ComplexUnit(turns=t)))
    print(f"z = exp(2 pi i {t}):", "census mismatch at k=%d" % c.k if c else "no census mismatch")
