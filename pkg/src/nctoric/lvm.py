"""LVM configurations: admissibility, the linear system coupling the
configuration, its Gale transform, polytope reconstruction, the
compact-tori/dense-leaves dichotomy, and generic moment-fiber data.

A configuration is n vectors in C^m (n > 2m) with exact (re, im) Scalar
entries.  The attached homogeneous system asks for real n-vectors s with
sum_i s_i Lambda_i = 0 and sum_i s_i = 0; its solution space (dimension
n - 2m - 1 in the nondegenerate case) drives everything else.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations

from .errors import (DegenerateFoliation, DegenerateSystem, InputError,
                     IrrationalWeights, WrongDimension)
from .linalg import (_independent, primitive, rational_subspace_dim,
                     scalar_kernel_basis, solve_exact)
from .polytope import SimplePolytope, rational_direction
from .scalars import Scalar, common_field

COMPACT_TORI = "CompactTori"
DENSE_LEAVES = "DenseLeaves"


class Configuration:
    """n exact complex vectors in C^m with n > 2m."""

    def __init__(self, lambdas, m: int | None = None):
        self.lambdas = []
        for lam in lambdas:
            vec = []
            for z in lam if isinstance(lam, (list, tuple)) else [lam]:
                if isinstance(z, tuple):
                    re, im = z
                else:
                    re, im = z, 0
                vec.append((Scalar._coerce(re), Scalar._coerce(im)))
            self.lambdas.append(vec)
        self.n = len(self.lambdas)
        self.m = m if m is not None else (len(self.lambdas[0]) if self.lambdas else 0)
        if any(len(v) != self.m for v in self.lambdas):
            raise InputError("vectors of mixed dimension")
        if self.n <= 2 * self.m:
            raise InputError(f"need n > 2m, got n={self.n}, m={self.m}")
        common_field([x for v in self.lambdas for z in v for x in z])

    def real_points(self):
        """Lambda_i as points of R^{2m} (re_1, im_1, ..., re_m, im_m)."""
        return [[x for z in v for x in z] for v in self.lambdas]


def configuration_to_json(cfg: Configuration) -> dict:
    return {"m": cfg.m,
            "lambdas": [[{"re": re.to_json(), "im": im.to_json()}
                         for re, im in v] for v in cfg.lambdas]}


def configuration_from_json(obj) -> Configuration:
    try:
        lambdas = [[(Scalar.from_json(z["re"]), Scalar.from_json(z["im"]))
                    for z in v] for v in obj["lambdas"]]
        return Configuration(lambdas, obj.get("m"))
    except (KeyError, TypeError) as e:
        raise InputError(f"bad configuration JSON: {e}") from e


def _zero_in_hull(points, dim) -> bool:
    """Exact test for 0 in conv(points) in R^dim via Caratheodory: check
    barycentric feasibility over all subsets of size <= dim + 1."""
    for k in range(1, min(len(points), dim + 1) + 1):
        for sub in combinations(points, k):
            # solve sum t_i p_i = 0, sum t_i = 1, t_i >= 0
            rows = [[Scalar._coerce(p[j]) for p in sub] for j in range(dim)]
            rows.append([Scalar(1)] * k)
            rhs = [Scalar(0)] * dim + [Scalar(1)]
            res = solve_exact(rows, rhs)
            if res[0] == "unique":
                if all(t.sign() >= 0 for t in res[1]):
                    return True
            elif res[0] == "affine":
                if _nonneg_in_affine(res[1], res[2]):
                    return True
    return False


def _nonneg_in_affine(part, kernel) -> bool:
    """Does the affine family part + span(kernel) meet the nonnegative
    orthant?  Vertex enumeration over the (tiny) parameter space."""
    k = len(kernel)
    nvar = len(part)
    if k == 0:
        return all(t.sign() >= 0 for t in part)
    # candidate basic solutions: force k coordinates to zero
    for zeros in combinations(range(nvar), k):
        rows = [[kernel[j][i] for j in range(k)] for i in zeros]
        rhs = [-part[i] for i in zeros]
        res = solve_exact(rows, rhs)
        cands = []
        if res[0] == "unique":
            cands = [res[1]]
        elif res[0] == "affine":
            cands = [res[1]]
        for c in cands:
            t = [part[i] + sum((kernel[j][i] * c[j] for j in range(k)), Scalar(0))
                 for i in range(nvar)]
            if all(x.sign() >= 0 for x in t):
                return True
    return False


def check_admissible(cfg: Configuration) -> dict:
    """Siegel: 0 in conv(Lambda); weak hyperbolicity: no 2m-subset's hull
    contains 0."""
    pts = cfg.real_points()
    dim = 2 * cfg.m
    siegel = _zero_in_hull(pts, dim)
    weak = all(not _zero_in_hull(list(sub), dim)
               for sub in combinations(pts, 2 * cfg.m))
    return {"siegel": siegel, "weak_hyperbolic": weak}


def _system_rows(cfg: Configuration):
    """Coefficient rows of the homogeneous system: 2m hull equations plus
    the sum-zero equation, as an (2m+1) x n Scalar matrix."""
    rows = []
    for j in range(cfg.m):
        rows.append([v[j][0] for v in cfg.lambdas])
        rows.append([v[j][1] for v in cfg.lambdas])
    rows.append([Scalar(1)] * cfg.n)
    return rows


def solution_basis(cfg: Configuration):
    """Basis of the solution space; must have dimension n - 2m - 1."""
    basis = scalar_kernel_basis(_system_rows(cfg), cfg.n)
    expected = cfg.n - 2 * cfg.m - 1
    if len(basis) != expected:
        raise DegenerateSystem(
            f"solution space has dimension {len(basis)}, expected {expected}")
    return basis


def condition_K(cfg: Configuration) -> bool:
    """True iff the solution space is defined over Q (equivalently admits
    an integer basis).  Over Q(sqrt d) this is decided by computing the
    rational subspace and comparing dimensions; a Galois-stable subspace
    is exactly one with full rational part."""
    basis = solution_basis(cfg)
    if not basis:
        return True
    dim_q, _ = rational_subspace_dim(basis, cfg.n)
    return dim_q == len(basis)


def leaf_dichotomy(cfg: Configuration) -> str:
    return COMPACT_TORI if condition_K(cfg) else DENSE_LEAVES


@dataclass
class GaleData:
    vectors: list        # n rows, each of length n - 2m - 1
    epsilons: list       # Scalar vector of length n
    cfg: Configuration = None


def gale_transform(cfg: Configuration, epsilons=None) -> GaleData:
    """Row i lists the i-th coordinates of the chosen solution basis, so
    that solutions are exactly x_i = <v_i, u>."""
    basis = solution_basis(cfg)
    k = len(basis)
    vectors = [[basis[j][i] for j in range(k)] for i in range(cfg.n)]
    if epsilons is None:
        epsilons = [Scalar(1)] * cfg.n
    else:
        epsilons = [Scalar._coerce(e) for e in epsilons]
        if len(epsilons) != cfg.n:
            raise InputError("need one epsilon per vector")
    return GaleData(vectors=vectors, epsilons=epsilons, cfg=cfg)


def polytope_from_gale(g: GaleData) -> SimplePolytope:
    """P = {u : <v_i, u> >= -eps_i}; zero rows are retained (and flagged
    redundant by the polytope itself)."""
    if not g.vectors or not g.vectors[0]:
        raise WrongDimension("empty Gale data defines no polytope")
    facets = [(list(v), -e) for v, e in zip(g.vectors, g.epsilons)]
    return SimplePolytope(facets)


def siegel_index_family(cfg: Configuration):
    """All index sets whose sub-configuration avoids 0 in its hull, plus
    the minimal forbidden zero-sets (complements), mirroring the removed
    coordinate subspaces."""
    pts = cfg.real_points()
    dim = 2 * cfg.m
    avoid = []
    for k in range(1, cfg.n + 1):
        for I in combinations(range(cfg.n), k):
            if not _zero_in_hull([pts[i] for i in I], dim):
                avoid.append(frozenset(I))
    return avoid


def minimal_forbidden_zero_sets(cfg: Configuration):
    """Inclusion-minimal zero-sets J such that every point vanishing on J
    lies outside the union of admissible leaves (0 not in the hull of the
    complementary sub-configuration)."""
    pts = cfg.real_points()
    dim = 2 * cfg.m
    allidx = set(range(cfg.n))
    minimal = []
    for k in range(1, cfg.n + 1):
        for J in combinations(range(cfg.n), k):
            s = frozenset(J)
            if any(m0 <= s for m0 in minimal):
                continue
            rest = [pts[i] for i in sorted(allidx - s)]
            if not rest or not _zero_in_hull(rest, dim):
                minimal.append(s)
    return sorted(minimal, key=lambda s: (len(s), sorted(s)))


@dataclass
class FiberReport:
    torus_rank: int
    foliation_subspace: list     # basis vectors in R^n (mod the diagonal)
    rational: bool
    slope: Scalar | None = None
    slopes: list = None          # all coordinate-pair reduced slopes found


def generic_fiber(cfg: Configuration) -> FiberReport:
    """Foliation data of the fiber torus T^{n-1}: the span of the phase
    directions (Re and Im of each coordinate row of Lambda) modulo the
    diagonal circle.

    Slope extraction follows the exhibited reductions: project the phase
    plane onto coordinate pairs; pairs where the projection is a line off
    the axes carry a Kronecker slope.  The irrational slope is reported
    when one exists, else the rational one."""
    n, m = cfg.n, cfg.m
    rows = []
    for j in range(m):
        rows.append([cfg.lambdas[i][j][0] for i in range(n)])
        rows.append([cfg.lambdas[i][j][1] for i in range(n)])
    diag = [Scalar(1)] * n
    rank_with, _ = _independent(rows + [diag], n)
    rank_diag = 1
    dim_mod_diag = rank_with - rank_diag
    if dim_mod_diag < 2 * m:
        raise DegenerateFoliation(
            f"phase directions span only {dim_mod_diag} dims mod the diagonal")
    _, span = _independent(rows + [diag], n)
    dim_q, _ = rational_subspace_dim(span, n)
    rational = dim_q == len(span)
    slopes = []
    for i, j in combinations(range(n), 2):
        proj = [[r[i], r[j]] for r in rows]
        rk, ind = _independent(proj, 2)
        if rk != 1:
            continue
        a, b = ind[0]
        if a.is_zero() or b.is_zero():
            continue
        slopes.append(b / a if abs(b / a) >= Scalar(1) else a / b)
    slope = None
    irr = [s for s in slopes if not s.is_rational]
    if irr:
        slope = irr[0]
    elif slopes:
        slope = slopes[0]
    return FiberReport(torus_rank=n - 1, foliation_subspace=rows,
                       rational=rational, slope=slope, slopes=slopes)


def canonical_moment_interval(cfg: Configuration):
    """For n - 2m - 1 = 1: the canonical moment polytope
    {x >= 0 : sum x_i = 1, sum x_i Lambda_i = 0} as a segment in x-space.

    Returns (endpoints, active_sets): the two endpoint x-vectors and the
    facet indices active (x_i = 0) at each."""
    if cfg.n - 2 * cfg.m - 1 != 1:
        raise WrongDimension("canonical interval needs n - 2m - 1 = 1")
    rows = _system_rows(cfg)
    rhs = [Scalar(0)] * (2 * cfg.m) + [Scalar(1)]
    res = solve_exact(rows, rhs)
    if res[0] != "affine" or len(res[2]) != 1:
        raise DegenerateSystem("canonical moment fiber is not a segment")
    part, (direction,) = res[1], res[2]
    # move along the line until coordinates hit zero: t range intersection
    lo, hi = None, None
    for p, d in zip(part, direction):
        if d.is_zero():
            if p.sign() < 0:
                raise DegenerateSystem("canonical slice misses the orthant")
            continue
        bound = -p / d
        if d.sign() > 0:
            lo = bound if lo is None or bound > lo else lo
        else:
            hi = bound if hi is None or bound < hi else hi
    if lo is None or hi is None or lo > hi:
        raise DegenerateSystem("canonical slice unbounded or empty")
    endpoints = []
    active_sets = []
    for t in (lo, hi):
        x = [p + d * t for p, d in zip(part, direction)]
        endpoints.append(x)
        active_sets.append(frozenset(i for i, xi in enumerate(x) if xi.is_zero()))
    return endpoints, active_sets


def orbifold_weights_1d(cfg: Configuration):
    """Orbifold orders at the two endpoints of the 1D moment polytope: the
    absolute integer solution-vector weights active at each endpoint of the
    canonical moment segment."""
    if not condition_K(cfg):
        raise IrrationalWeights("rationality condition fails; no integer weights")
    basis = solution_basis(cfg)
    if len(basis) != 1:
        raise WrongDimension("endpoint weights need n - 2m - 1 = 1")
    _, rat = rational_subspace_dim(basis, cfg.n)
    v = rational_direction(rat[0])
    if v is None:
        raise IrrationalWeights("solution vector not rationalizable")
    v = primitive(v)
    _, active_sets = canonical_moment_interval(cfg)
    orders = []
    for act in active_sets:
        weights = sorted(abs(v[i]) for i in act)
        orders.append(weights)
    return orders
