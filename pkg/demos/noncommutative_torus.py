"""Kronecker foliations and Morita classes of non-commutative tori.

Rational slopes give closed leaves; irrational slopes give dense leaves
and a non-commutative torus T^2_theta.  Two irrational parameters are
Morita equivalent exactly when their regular continued fractions share a
tail, and the witness is an explicit SL(2,Z) matrix.
"""

from fractions import Fraction

from nctoric.nctorus import (cf_expand, kronecker_classify, mobius_apply,
                             morita_equivalent)
from nctoric.scalars import Scalar

R2 = Scalar.sqrt_int(2)
PHI = (Scalar(1) + Scalar.sqrt_int(5)) / Scalar(2)

print("slope 2/3:", kronecker_classify(Fraction(2, 3)))
print("slope sqrt(2):", kronecker_classify(R2))

for theta, name in ((R2, "sqrt(2)"), (PHI, "phi"),
                    (Scalar.sqrt_int(3), "sqrt(3)")):
    e = cf_expand(theta)
    print("cf(%s): preperiod %s, period %s"
          % (name, list(e.preperiod), list(e.period)))

pairs = [(PHI, PHI + Scalar(1)), (R2, Scalar(2) - R2.inverse()),
         (R2, Scalar.sqrt_int(3))]
for t1, t2 in pairs:
    res = morita_equivalent(t1, t2)
    print("morita(%s, %s): %s" % (t1, t2, res))
    if res["witness"]:
        W = res["witness"]
        assert mobius_apply(W, t1) == t2
