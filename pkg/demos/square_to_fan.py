"""From a simple polytope to its normal fan and torus-quotient data.

The unit square is cut out by four inward half-planes.  Its normal fan
has nine cones (origin, four rays, four quadrants), and the quotient
presentation recovers the product-of-projective-lines picture: two
forbidden coordinate strata and a rank-2 kernel lattice.
"""

from nctoric import fan, polytope
from nctoric.quotient import quotient_data

P = polytope.SimplePolytope([([1, 0], 0), ([-1, 0], -1),
                             ([0, 1], 0), ([0, -1], -1)])

print("classification:", polytope.classify_delzant(P))
print("vertices:", [[str(x) for x in v] for v in P.vertices])
print("f-vector:", polytope.face_counts(P))

F = fan.normal_fan(P)
print("normal fan: %d cones, %d maximal, rays %s"
      % (len(F), len(F.maximal_cones()),
         [[str(x) for x in r] for r in F.rays]))

# a 3x1 rectangle has the same normal fan: fans see shape, not size
R = polytope.SimplePolytope([([1, 0], 0), ([-1, 0], -3),
                             ([0, 1], 0), ([0, -1], -1)])
print("rectangle fan equals square fan:", fan.normal_fan(R) == F)

q = quotient_data(P)
print("forbidden strata:", sorted(sorted(s) for s in q.forbidden_strata))
print("kernel basis:", q.kernel_basis)
print("moment vector nu_P:", [str(x) for x in q.nu_P])
