"""A five-vector configuration in C and its Gale-dual square.

The configuration (1, i, i, 1, -2-2i) satisfies the Siegel and weak
hyperbolicity conditions; its solution space is two-dimensional, the Gale
transform cuts out a square with one redundant inequality, and the
canonical foliation has compact torus leaves of Kronecker slope 1.
Replacing the first entry by sqrt(2) breaks rationality: condition (K)
fails, the leaves become dense, and the slope becomes sqrt(2).
"""

from nctoric import lvm
from nctoric.scalars import Scalar

R2 = Scalar.sqrt_int(2)


def show(cfg, label):
    print("--", label)
    print("admissible:", lvm.check_admissible(cfg))
    print("condition (K):", lvm.condition_K(cfg))
    print("dichotomy:", lvm.leaf_dichotomy(cfg))
    rep = lvm.generic_fiber(cfg)
    print("fiber: torus rank %d, rational %s, slope %s"
          % (rep.torus_rank, rep.rational, rep.slope))


rational = lvm.Configuration([[(1, 0)], [(0, 1)], [(0, 1)], [(1, 0)],
                              [(-2, -2)]])
show(rational, "rational configuration")

g = lvm.gale_transform(rational)
print("gale vectors:", [[str(x) for x in v] for v in g.vectors])
P = lvm.polytope_from_gale(g)
print("gale polytope vertices:",
      sorted(tuple(str(x) for x in v) for v in P.vertices))
print("redundant facets:", P.redundant)
print("minimal forbidden zero-sets:",
      [sorted(s) for s in lvm.minimal_forbidden_zero_sets(rational)])

perturbed = lvm.Configuration([[(R2, 0)], [(0, 1)], [(0, 1)], [(1, 0)],
                               [(-2, -2)]])
show(perturbed, "irrational perturbation")
