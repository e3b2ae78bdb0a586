"""Cones and fans: normal fans, smoothness/orbifold classification, 2D dual
cones with semigroup generators, and refinement checking."""

from __future__ import annotations

from itertools import combinations
from math import gcd

from .errors import (DimensionMismatch, InputError, NonRational,
                     NotSimplicial, WrongDimension)
from .linalg import int_det
from .polytope import SimplePolytope, rational_direction
from .scalars import Scalar

SMOOTH = "Smooth"
NON_RATIONAL = "NonRational"


def canonical_ray(v):
    """Canonical representative of the ray through v: the primitive integer
    vector when the direction is rational, else v scaled so its first
    nonzero entry has absolute value 1."""
    v = [Scalar._coerce(x) for x in v]
    r = rational_direction(v)
    if r is not None:
        return tuple(Scalar(x) for x in r)
    nz = next(x for x in v if not x.is_zero())
    scale = abs(nz).inverse()
    return tuple(x * scale for x in v)


class Cone:
    """Strictly convex polyhedral cone given by its extreme rays."""

    def __init__(self, rays, ambient_dim=None):
        rays = [canonical_ray(r) for r in rays]
        if rays:
            ambient_dim = len(rays[0])
        elif ambient_dim is None:
            raise InputError("empty cone needs an explicit ambient dimension")
        if any(len(r) != ambient_dim for r in rays):
            raise InputError("rays of mixed dimension")
        self.ambient_dim = ambient_dim
        self.rays = tuple(sorted(set(rays), key=_ray_key))
        if self._contains_line():
            raise InputError("cone contains a line (not strictly convex)")

    def _contains_line(self):
        if self.ambient_dim == 1:
            return len({r[0].sign() for r in self.rays}) == 2
        if self.ambient_dim == 2:
            # a 2D cone contains a line iff two rays are opposite or some
            # ray lies strictly between two rays spanning more than a halfplane
            for u, w in combinations(self.rays, 2):
                if _cross(u, w).is_zero() and _dot(u, w).sign() < 0:
                    return True
            if len(self.rays) >= 3:
                # angular span > pi detection: sort and check gaps
                return _angular_span_exceeds_pi(self.rays)
            return False
        # higher dimensions: only cones built from simple polytope data are
        # constructed; check no ray is the negative of a combination of others
        # via the crude opposite-pair test
        for u, w in combinations(self.rays, 2):
            if all((a + b).is_zero() for a, b in zip(u, w)):
                return True
        return False

    def __eq__(self, other):
        return isinstance(other, Cone) and self.rays == other.rays \
            and self.ambient_dim == other.ambient_dim

    def __hash__(self):
        return hash((self.ambient_dim, self.rays))

    def __repr__(self):
        rays = ", ".join("(" + ",".join(map(str, r)) + ")" for r in self.rays)
        return f"Cone[{rays}]"

    @property
    def dim(self):
        from .linalg import scalar_rank
        return scalar_rank([list(r) for r in self.rays])

    def is_rational(self):
        return all(all(x.is_rational for x in r) for r in self.rays)

    def contains(self, v) -> bool:
        """Exact membership for 1D/2D cones (all this library needs)."""
        v = [Scalar._coerce(x) for x in v]
        if all(x.is_zero() for x in v):
            return True
        if self.ambient_dim == 1:
            return any(r[0].sign() == v[0].sign() for r in self.rays)
        if self.ambient_dim == 2:
            if not self.rays:
                return False
            if len(self.rays) == 1:
                r = self.rays[0]
                return _cross(r, v).is_zero() and _dot(r, v).sign() > 0
            for u, w in combinations(self.rays, 2):
                # v in cone(u, w) iff cross products have matching signs
                cuw = _cross(u, w)
                if cuw.is_zero():
                    continue
                s = cuw.sign()
                if (_cross(u, v) * Scalar(s)).sign() >= 0 and \
                   (_cross(v, w) * Scalar(s)).sign() >= 0:
                    return True
            return False
        raise WrongDimension("membership implemented for ambient dim <= 2")


def _ray_key(r):
    return tuple((float(x), str(x)) for x in r)


def _dot(u, w):
    return sum((a * b for a, b in zip(u, w)), Scalar(0))


def _cross(u, w):
    return u[0] * w[1] - u[1] * w[0]


def _angular_span_exceeds_pi(rays):
    import math
    angs = sorted(math.atan2(float(r[1]), float(r[0])) for r in rays)
    gaps = [b - a for a, b in zip(angs, angs[1:])]
    gaps.append(2 * math.pi - (angs[-1] - angs[0]))
    return max(gaps) < math.pi  # float heuristic backed by pairwise exact test


class Fan:
    """Finite fan; faces of member cones are filled in automatically."""

    def __init__(self, cones, ambient_dim=None):
        cones = list(cones)
        if cones:
            ambient_dim = cones[0].ambient_dim
        elif ambient_dim is None:
            raise InputError("empty fan needs an ambient dimension")
        full = set()
        for c in cones:
            full.add(c)
            for k in range(len(c.rays)):
                for sub in combinations(c.rays, k):
                    face = Cone(list(sub), ambient_dim)
                    full.add(face)
        self.ambient_dim = ambient_dim
        self.cones = frozenset(full)

    def __eq__(self, other):
        return isinstance(other, Fan) and self.cones == other.cones

    def __hash__(self):
        return hash(self.cones)

    def __len__(self):
        return len(self.cones)

    @property
    def rays(self):
        return sorted({r for c in self.cones for r in c.rays}, key=_ray_key)

    def maximal_cones(self):
        out = []
        for c in self.cones:
            if not any(set(c.rays) < set(d.rays) for d in self.cones if d is not c):
                out.append(c)
        return out


def normal_fan(P: SimplePolytope) -> Fan:
    """Fan with one cone per member of F, generated by the outward facet
    normals (negated inward rows), so the unit square yields the four
    coordinate quadrants."""
    outward = [[-x for x in nrm] for nrm, _ in P.facets]
    cones = [Cone([], P.dim)]
    for I in P.incidence:
        if I:
            cones.append(Cone([outward[i] for i in I], P.dim))
    return Fan(cones, P.dim)


def cone_classify(sigma: Cone):
    """"Smooth", ("Orbifold", index) or "NonRational" for a full-dimensional
    simplicial cone."""
    n = sigma.ambient_dim
    if len(sigma.rays) != n or sigma.dim != n:
        raise NotSimplicial(f"expected {n} independent rays")
    if not sigma.is_rational():
        return NON_RATIONAL
    M = [[int(x.a) for x in r] for r in sigma.rays]
    idx = abs(int_det(M))
    return SMOOTH if idx == 1 else ("Orbifold", idx)


def dual_cone_2d(sigma: Cone):
    """Dual cone rays and the Hilbert basis of sigma-dual intersect Z^2."""
    if sigma.ambient_dim != 2 or len(sigma.rays) != 2:
        raise WrongDimension("dual cone computed for full 2D cones only")
    if not sigma.is_rational():
        raise NonRational("dual cone needs a rational cone")
    (u, w) = sigma.rays
    ui = [int(x.a) for x in u]
    wi = [int(x.a) for x in w]
    if _cross(u, w).sign() < 0:
        ui, wi = wi, ui
    # with u -> w counterclockwise, the dual's extreme rays are u rotated
    # by +90 and w rotated by -90
    d1 = (-ui[1], ui[0])
    d2 = (wi[1], -wi[0])
    dual_rays = [d1, d2]
    basis = _hilbert_basis_2d(d1, d2)
    return [list(r) for r in dual_rays], basis


def _hilbert_basis_2d(d1, d2):
    """Minimal generating set of the semigroup of lattice points of
    cone(d1, d2): enumerate lattice points of the fundamental parallelogram
    {s d1 + t d2 : 0 <= s, t <= 1} and drop reducible ones."""
    pts = set()
    det = d1[0] * d2[1] - d1[1] * d2[0]
    if det == 0:
        raise WrongDimension("dual cone degenerate")
    span = abs(det)
    for x in range(min(0, d1[0] + d2[0]) - span, max(0, d1[0] + d2[0]) + span + 1):
        for y in range(min(0, d1[1] + d2[1]) - span, max(0, d1[1] + d2[1]) + span + 1):
            if (x, y) == (0, 0):
                continue
            # barycentric: (x,y) = s d1 + t d2 with s,t in [0,1]
            s_num = x * d2[1] - y * d2[0]
            t_num = y * d1[0] - x * d1[1]
            if det < 0:
                s_num, t_num = -s_num, -t_num
            if 0 <= s_num <= span and 0 <= t_num <= span:
                pts.add((x, y))
    basis = []
    for p in sorted(pts):
        reducible = False
        for q in pts:
            r = (p[0] - q[0], p[1] - q[1])
            if q != p and r in pts:
                reducible = True
                break
        if not reducible:
            basis.append(list(p))
    return sorted(basis)


def is_refinement(fine: Fan, coarse: Fan) -> bool:
    """True iff every cone of `coarse` is the union of the cones of `fine`
    contained in it.  Exact in ambient dimension 1 and 2."""
    if fine.ambient_dim != coarse.ambient_dim:
        raise DimensionMismatch("fans live in different dimensions")
    n = fine.ambient_dim
    if n > 2:
        raise WrongDimension("refinement test implemented for dim <= 2")
    for sigma in coarse.cones:
        if len(sigma.rays) <= 1:
            # points and rays must appear among cones of the fine fan
            if not any(_cone_inside(sigma, tau) and _cone_inside(tau, sigma)
                       for tau in fine.cones):
                return False
            continue
        if n == 1:
            if not any(set(tau.rays) == set(sigma.rays) for tau in fine.cones):
                return False
            continue
        # 2D sector: the full-dimensional fine cones inside sigma must tile it
        inside = [tau for tau in fine.cones
                  if len(tau.rays) == 2 and _cone_inside(tau, sigma)]
        if not _tiles_sector(inside, sigma):
            return False
    return True


def _cone_inside(tau: Cone, sigma: Cone) -> bool:
    return all(sigma.contains(list(r)) for r in tau.rays) if tau.rays else True


def _tiles_sector(parts, sigma: Cone) -> bool:
    if not parts:
        return False
    (a, b) = sigma.rays
    if (_cross(a, b)).sign() < 0:
        a, b = b, a
    # orient each part counterclockwise and chain from a to b
    edges = []
    for tau in parts:
        (u, w) = tau.rays
        if _cross(u, w).sign() < 0:
            u, w = w, u
        edges.append((u, w))
    cur = a
    used = set()
    while True:
        if cur == b and used:
            return len(used) == len(edges)
        nxt = None
        for k, (u, w) in enumerate(edges):
            if k not in used and u == cur:
                nxt = (k, w)
                break
        if nxt is None:
            return False
        used.add(nxt[0])
        cur = nxt[1]


def fan_to_json(F: Fan) -> dict:
    cones = []
    for c in sorted(F.cones, key=lambda c: (len(c.rays), [_ray_key(r) for r in c.rays])):
        cones.append({"rays": [[x.to_json() for x in r] for r in c.rays]})
    return {"dim": F.ambient_dim, "cones": cones}


def fan_from_json(obj) -> Fan:
    try:
        cones = [Cone([[Scalar.from_json(x) for x in r] for r in c["rays"]],
                      obj["dim"])
                 for c in obj["cones"]]
    except (KeyError, TypeError) as e:
        raise InputError(f"bad fan JSON: {e}") from e
    return Fan(cones, obj["dim"])
