"""Simple convex polytopes from facet halfspaces.

The halfspace convention is <x, normal> >= offset (inward-pointing
normals).  Vertices, the facet-incidence family F, edge directions and
the Delzant classification are derived eagerly at construction; the
object is immutable afterwards.
"""

from __future__ import annotations

from fractions import Fraction
from itertools import combinations
from math import gcd

from .errors import (Empty, InputError, IrrationalNormals, NotSimple,
                     Unbounded)
from .linalg import scalar_kernel_basis, solve_exact
from .scalars import Scalar, common_field

IRRATIONAL = "Irrational"
RATIONAL_DELZANT = "RationalDelzant"
INTEGRAL_DELZANT = "IntegralDelzant"


def _as_scalars(vec):
    return [Scalar._coerce(x) for x in vec]


def rational_direction(v) -> list | None:
    """Shortest integer vector along direction v, or None if v is not a
    scalar multiple of a rational vector."""
    nz = next((x for x in v if not x.is_zero()), None)
    if nz is None:
        return None
    scaled = [x / nz for x in v]
    if any(not x.is_rational for x in scaled):
        return None
    den = 1
    for x in scaled:
        den = den * x.a.denominator // gcd(den, x.a.denominator)
    ints = [int(x.a * den) for x in scaled]
    g = 0
    for x in ints:
        g = gcd(g, abs(x))
    ints = [x // g for x in ints]
    # orient along the original direction
    if nz.sign() < 0:
        ints = [-x for x in ints]
    return ints


class SimplePolytope:
    """Bounded full-dimensional simple polytope {x : <x, n_i> >= c_i}."""

    def __init__(self, facets):
        """facets: list of (normal, offset) with Scalar-coercible entries."""
        if not facets:
            raise InputError("no facets")
        self.facets = [( _as_scalars(n), Scalar._coerce(c)) for n, c in facets]
        self.dim = len(self.facets[0][0])
        if any(len(n) != self.dim for n, _ in self.facets):
            raise InputError("facet normals of mixed dimension")
        common_field([x for n, c in self.facets for x in n + [c]])
        self.N = len(self.facets)
        self._compute()

    # -- construction-time derivation ------------------------------------

    def _compute(self):
        n = self.dim
        if self._unbounded():
            raise Unbounded("recession cone is nontrivial")
        verts = {}
        for I in combinations(range(self.N), n):
            rows = [self.facets[i][0] for i in I]
            rhs = [self.facets[i][1] for i in I]
            res = solve_exact(rows, rhs)
            if res[0] != "unique":
                continue
            x = res[1]
            if self._feasible(x):
                verts.setdefault(tuple(x), set()).update(I)
        if not verts:
            raise Empty("no vertices: empty or unbounded halfspace data")
        # tighten active sets to all facets through the vertex
        self.vertices = []
        self.vertex_facets = []
        for vx in sorted(verts, key=lambda t: [ (float(s), str(s)) for s in t ]):
            x = list(vx)
            active = frozenset(i for i in range(self.N)
                               if (self._eval(i, x) - self.facets[i][1]).is_zero())
            self.vertices.append(x)
            self.vertex_facets.append(active)
        self.redundant = self._redundancy_flags()
        for active in self.vertex_facets:
            essential = [i for i in active if not self.redundant[i]]
            if len(essential) != n:
                raise NotSimple(f"vertex on {len(essential)} facets in dimension {n}")
        self.incidence = self._family()
        self.edge_directions = [self._edges_at(k) for k in range(len(self.vertices))]
        self.delzant_class = self._classify()

    def _eval(self, i, x):
        nrm, _ = self.facets[i]
        s = Scalar(0)
        for a, b in zip(nrm, x):
            s = s + a * b
        return s

    def _feasible(self, x) -> bool:
        return all((self._eval(i, x) - self.facets[i][1]).sign() >= 0
                   for i in range(self.N))

    def _redundancy_flags(self):
        """A facet is flagged redundant when it is tight at no vertex, is a
        zero row, or duplicates an earlier facet's halfspace."""
        flags = [False] * self.N
        seen = {}
        tight_counts = [0] * self.N
        for active in self.vertex_facets:
            for i in active:
                tight_counts[i] += 1
        for i, (nrm, c) in enumerate(self.facets):
            if all(x.is_zero() for x in nrm):
                flags[i] = True
                continue
            key = self._facet_key(i)
            if key in seen:
                flags[i] = True
                continue
            seen[key] = i
            if tight_counts[i] == 0:
                flags[i] = True
        return flags

    def _facet_key(self, i):
        nrm, c = self.facets[i]
        nz = next(x for x in nrm if not x.is_zero())
        scale = nz.inverse()
        return (tuple(x * scale for x in nrm), c * scale)

    def _unbounded(self) -> bool:
        """Exact recession-cone test: {y : <y, n_i> >= 0 for all i} != {0}.

        Candidate extreme rays lie on dim-1 of the constraint hyperplanes."""
        n = self.dim
        normals = [nrm for nrm, _ in self.facets]
        if n == 1:
            signs = {x[0].sign() for x in normals if not x[0].is_zero()}
            return signs != {1, -1}
        for J in combinations(range(self.N), n - 1):
            rows = [normals[j] for j in J]
            for y in scalar_kernel_basis(rows, n):
                for cand in (y, [ -e for e in y ]):
                    if any(not e.is_zero() for e in cand) and \
                       all(sum((a * b for a, b in zip(nrm, cand)), Scalar(0)).sign() >= 0
                           for nrm in normals):
                        return True
        return False

    def _family(self):
        fam = {frozenset()}
        for active in self.vertex_facets:
            ess = [i for i in active if not self.redundant[i]]
            for k in range(1, len(ess) + 1):
                for sub in combinations(ess, k):
                    fam.add(frozenset(sub))
        return fam

    def _edges_at(self, k):
        """Edge directions at vertex k: drop one active facet, walk along
        the intersection of the rest, oriented into the polytope."""
        n = self.dim
        active = sorted(i for i in self.vertex_facets[k] if not self.redundant[i])
        dirs = []
        for drop in active:
            rows = [self.facets[i][0] for i in active if i != drop]
            kern = scalar_kernel_basis(rows, n)
            if len(kern) != 1:
                raise NotSimple("degenerate edge at vertex")
            w = kern[0]
            # orient so the dropped inequality increases
            s = sum((a * b for a, b in zip(self.facets[drop][0], w)), Scalar(0))
            if s.sign() < 0:
                w = [-e for e in w]
            dirs.append(w)
        return dirs

    def _classify(self):
        integral = True
        for dirs in self.edge_directions:
            ints = []
            for w in dirs:
                r = rational_direction(w)
                if r is None:
                    return IRRATIONAL
                ints.append(r)
            from .linalg import int_det
            if abs(int_det(ints)) != 1:
                integral = False
        return INTEGRAL_DELZANT if integral else RATIONAL_DELZANT


def vertices_and_incidence(P: SimplePolytope):
    """Vertices and the subset-closed facet-incidence family F."""
    return P.vertices, P.incidence


def classify_delzant(P: SimplePolytope) -> str:
    return P.delzant_class


def normal_data(P: SimplePolytope):
    """Primitive inward integer normals rho (N x n) and exact offsets.

    Row i and offset i are scaled together so that P = {x : <x, rho_i> >=
    lambda_i} still holds verbatim."""
    if P.delzant_class == IRRATIONAL:
        raise IrrationalNormals("polytope has irrational facet normals")
    rho = []
    lam = []
    for nrm, c in P.facets:
        r = rational_direction(nrm)
        if r is None:
            if all(x.is_zero() for x in nrm):
                rho.append([0] * P.dim)
                lam.append(c)
                continue
            raise IrrationalNormals("irrational facet normal")
        # scale factor t with nrm = t * r; offsets scale identically
        j = next(i for i, x in enumerate(r) if x != 0)
        t = nrm[j] / Scalar(r[j])
        if not t.is_rational:
            raise IrrationalNormals("irrational facet normal scale")
        rho.append(r)
        lam.append(c / t)
    return rho, lam


def face_counts(P: SimplePolytope):
    """f-vector (f_-1=1, f_0, ..., f_{d-1}) of the dual simplicial polytope:
    f_i counts the (d-1-i)-dimensional faces of P, read off from F."""
    d = P.dim
    by_size = [0] * (d + 1)
    for I in P.incidence:
        by_size[len(I)] += 1
    # size-k members of F are (d-k)-faces of P, i.e. (k-1)-faces of the dual
    return [1] + [by_size[k] for k in range(1, d + 1)]


# -- convenience constructors ------------------------------------------------


def cube(d: int, side=1) -> SimplePolytope:
    facets = []
    for i in range(d):
        e = [0] * d
        e[i] = 1
        facets.append((list(e), 0))
        facets.append(([-x for x in e], -Fraction(side)))
    return SimplePolytope(facets)


def simplex(d: int) -> SimplePolytope:
    """Standard simplex x_i >= 0, sum x_i <= 1."""
    facets = []
    for i in range(d):
        e = [0] * d
        e[i] = 1
        facets.append((list(e), 0))
    facets.append(([-1] * d, -1))
    return SimplePolytope(facets)


def from_json(obj) -> SimplePolytope:
    try:
        facets = [([Scalar.from_json(x) for x in f["normal"]],
                   Scalar.from_json(f["offset"])) for f in obj["facets"]]
    except (KeyError, TypeError) as e:
        raise InputError(f"bad polytope JSON: {e}") from e
    return SimplePolytope(facets)


def to_json(P: SimplePolytope) -> dict:
    return {"dim": P.dim,
            "facets": [{"normal": [x.to_json() for x in nrm],
                        "offset": c.to_json()} for nrm, c in P.facets]}
