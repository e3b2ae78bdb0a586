"""Teardrop and football orbifolds from four-vector configurations.

The family (1, i, p, -1-i) has a one-dimensional Gale dual: a segment
whose endpoints carry finite isotropy.  For p = 3l+1 a single endpoint is
singular of order 2l+1 (a teardrop); other p give two distinct orders (a
football).  The fiber slope of the canonical foliation equals p.
"""

from nctoric import lvm


def teardrop(p):
    return lvm.Configuration([[(1, 0)], [(0, 1)], [(p, 0)], [(-1, -1)]])


for p in (2, 3, 4, 5, 7):
    cfg = teardrop(p)
    weights = lvm.orbifold_weights_1d(cfg)
    rep = lvm.generic_fiber(cfg)
    print("p=%d: endpoint weights %s, fiber slope %s"
          % (p, weights, rep.slope))
