"""Hirzebruch-Jung continued fractions and resolution of 2D cone
singularities.

The descending fraction a1 - 1/(a2 - 1/(...)) of m/k drives the minimal
smooth subdivision of the cone ((0,1), (m,-k)); quadratic-irrational
slopes give an eventually periodic digit stream that is truncated at a
requested depth.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import gcd

from .errors import (DivisionByZero, NotNormalizable, OutOfRange,
                     PeriodNotFound)
from .fan import Cone, Fan
from .scalars import Scalar

#: safety valve for period detection on quadratic irrationals
PERIOD_SEARCH_LIMIT = 10_000


@dataclass(frozen=True)
class HJExpansion:
    digits: tuple          # digits actually produced (finite prefix)
    source: Scalar
    finite: bool           # True iff the expansion terminates (rational source)
    preperiod_len: int = 0  # irrational case: digits before the cycle
    period: tuple = ()      # irrational case: repeating digit block


def hj_expand(x, depth: int | None = None) -> HJExpansion:
    """Digits a_i >= 2 with a_i = ceil(x_i), x_{i+1} = 1/(a_i - x_i).

    Rational x > 1 terminates; quadratic-irrational x yields `depth` digits
    together with the detected (preperiod, period) structure."""
    x = Scalar._coerce(x)
    if x <= Scalar(1):
        raise OutOfRange("expansion needs x > 1")
    if x.is_rational:
        digits = []
        cur = x
        while True:
            a = cur.ceil()
            digits.append(a)
            rem = Scalar(a) - cur
            if rem.is_zero():
                break
            cur = rem.inverse()
        return HJExpansion(tuple(digits), x, True)
    if depth is None:
        depth = 12
    digits = []
    states = {x: 0}
    cur = x
    preperiod_len = None
    period = ()
    for i in range(max(depth, PERIOD_SEARCH_LIMIT)):
        a = cur.ceil()
        if Scalar(a) == cur:  # cannot happen for irrational cur
            raise PeriodNotFound("irrational state became integral")
        digits.append(a)
        cur = (Scalar(a) - cur).inverse()
        if cur in states:
            preperiod_len = states[cur]
            period = tuple(digits[preperiod_len:])
            break
        states[cur] = len(digits)
        if len(digits) >= depth and len(digits) >= PERIOD_SEARCH_LIMIT:
            raise PeriodNotFound(
                f"no state repetition within {PERIOD_SEARCH_LIMIT} steps")
    if preperiod_len is None:
        raise PeriodNotFound(
            f"no state repetition within {PERIOD_SEARCH_LIMIT} steps")
    # extend or trim the digit list to the requested depth
    out = list(digits[:preperiod_len])
    while len(out) < depth:
        out.append(period[(len(out) - preperiod_len) % len(period)])
    return HJExpansion(tuple(out[:depth]), x, False, preperiod_len, period)


def hj_evaluate(digits) -> Scalar:
    """Exact value of the descending fraction a1 - 1/(a2 - ...)."""
    val = None
    for a in reversed(list(digits)):
        if val is None:
            val = Fraction(a)
        else:
            if val == 0:
                raise DivisionByZero("malformed digit list (zero tail)")
            val = a - Fraction(1, 1) / val
    if val is None:
        raise DivisionByZero("empty digit list")
    return Scalar(val)


def _normalize_cone(sigma: Cone):
    """Unimodular map sending sigma to cone((0,1), slope form).

    Returns (M, v1_img) with M integral, |det M| = 1, M*r2 = (0,1) and
    M*r1 = (m, -k)-like (second coordinate strictly between -first and 0,
    after an extra shear), plus the slope Scalar m/k > 1."""
    if sigma.ambient_dim != 2 or len(sigma.rays) != 2:
        raise NotNormalizable("need a full-dimensional 2D cone")
    r1, r2 = sigma.rays
    # prefer a rational ray as the one mapped to (0,1)
    candidates = [(r1, r2), (r2, r1)]
    for v1, v2 in candidates:
        if all(x.is_rational for x in v2):
            p, q = int(v2[0].a), int(v2[1].a)
            if gcd(abs(p), abs(q)) != 1:
                continue
            # unimodular M with M (p,q) = (0,1): rows (y, -x) and (s, t)
            # where s p + t q = 1
            s, t = _bezout(p, q)
            M = [[q, -p], [s, t]]
            w = _apply(M, v1)
            if w[0].sign() < 0:
                # flip the first axis to land in the right halfplane
                M = [[-q, p], [s, t]]
                w = _apply(M, v1)
            if w[0].sign() <= 0:
                continue
            # shear (1,0;t,1) fixes (0,1); arrange -x < y' <= 0
            c = w[1] / w[0]
            sh = -(c.floor()) - 1
            if (c - Scalar(c.floor())).is_zero():
                sh = -c.floor()  # y'/x = integer: shear to exactly 0
            M = [[M[0][0], M[0][1]], [M[1][0] + sh * M[0][0], M[1][1] + sh * M[0][1]]]
            w = _apply(M, v1)
            return M, w
    raise NotNormalizable("no rational primitive ray to normalize")


def _bezout(p, q):
    # s p + t q = 1 for coprime p, q
    old_r, r = p, q
    old_s, s = 1, 0
    old_t, t = 0, 1
    while r != 0:
        qq = old_r // r
        old_r, r = r, old_r - qq * r
        old_s, s = s, old_s - qq * s
        old_t, t = t, old_t - qq * t
    if old_r < 0:
        old_s, old_t = -old_s, -old_t
    return old_s, old_t


def _apply(M, v):
    return [Scalar._coerce(M[0][0]) * v[0] + Scalar._coerce(M[0][1]) * v[1],
            Scalar._coerce(M[1][0]) * v[0] + Scalar._coerce(M[1][1]) * v[1]]


def resolve_cone(sigma: Cone, depth: int | None = None):
    """Subdivide a 2D cone along the Hirzebruch-Jung rays.

    Rational slope: the full smooth resolution (r inserted rays, every
    adjacent pair unimodular).  Irrational slope: `depth` rays from the
    truncated expansion; only the final wedge containing the irrational
    ray stays non-smooth.

    Returns (fan, inserted_rays, M) where M is the normalizing unimodular
    map used (for traceability)."""
    M, w = _normalize_cone(sigma)
    # w = image of the non-normalized ray: (x, -y) with 0 <= y < x
    x, y = w[0], -w[1]
    rational = x.is_rational and y.is_rational
    if rational and y.is_zero():
        # already smooth: w is (m, 0) with m = 1 by primitivity
        return Fan([sigma]), [], M
    slope = x / y
    if not slope.is_rational and depth is None:
        depth = 5
    exp = hj_expand(slope, depth=depth)
    digits = list(exp.digits)
    # u_{j+1} = a_j u_j - u_{j-1}, u_0 = (0,1), u_1 = (1,0); the inserted
    # rays are u_1..u_r (the last digit would close the sweep at w itself)
    u_prev = [Scalar(0), Scalar(1)]
    u_cur = [Scalar(1), Scalar(0)]
    inserted_std = [u_cur]
    for a in digits[:-1]:
        u_nxt = [Scalar(a) * u_cur[0] - u_prev[0],
                 Scalar(a) * u_cur[1] - u_prev[1]]
        inserted_std.append(u_nxt)
        u_prev, u_cur = u_cur, u_nxt
    # map the inserted rays back through M^{-1}
    a, b, c, d = M[0][0], M[0][1], M[1][0], M[1][1]
    det = a * d - b * c  # +-1
    Minv = [[d * det, -b * det], [-c * det, a * det]]
    inserted = [_apply(Minv, u) for u in inserted_std]
    # boundary rays in the original frame, ordered (0,1)-side first
    r2 = next(r for r in sigma.rays
              if all(e.is_rational for e in r)
              and _same_ray(_apply(M, list(r)), [Scalar(0), Scalar(1)]))
    r1 = next(r for r in sigma.rays if r != r2)
    chain = [list(r2)] + inserted + [list(r1)]
    cones = [Cone([chain[i], chain[i + 1]]) for i in range(len(chain) - 1)]
    return Fan(cones), inserted, M


def _same_ray(u, v):
    from .fan import canonical_ray
    return canonical_ray(u) == canonical_ray(v)
