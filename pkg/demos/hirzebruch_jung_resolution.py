"""Hirzebruch-Jung continued fractions and cyclic-quotient resolution.

The digits of the descending continued fraction m/k = a1 - 1/(a2 - ...)
drive the minimal resolution of the cone over (0,1), (m,-k): one inserted
ray per digit, every resulting cone smooth.  Quadratic irrational slopes
have eventually periodic digits; truncating gives a partial resolution
with a single non-rational cone left over.
"""

from fractions import Fraction

from nctoric.fan import Cone, cone_classify
from nctoric.hj import hj_evaluate, hj_expand, resolve_cone
from nctoric.scalars import Scalar

for x in (Fraction(7, 5), Fraction(5, 3), Fraction(12, 7)):
    e = hj_expand(x)
    print("%s -> digits %s -> back to %s" %
          (x, list(e.digits), hj_evaluate(e.digits)))

sigma = Cone([[0, 1], [5, -3]])
F, inserted, _ = resolve_cone(sigma)
print("resolving (0,1),(5,-3): inserted rays",
      [[str(x) for x in r] for r in inserted])
print("all cones smooth:",
      all(cone_classify(t) == "Smooth" for t in F.maximal_cones()))

r2 = Scalar.sqrt_int(2)
e = hj_expand(r2, depth=8)
print("sqrt(2): digits %s, preperiod %d, period %s"
      % (list(e.digits), e.preperiod_len, list(e.period)))
F, inserted, _ = resolve_cone(Cone([[0, 1], [r2, Scalar(-1)]]), depth=4)
classes = sorted(cone_classify(t) for t in F.maximal_cones())
print("truncated irrational resolution:", classes)
