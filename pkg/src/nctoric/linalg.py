"""Exact integer and quadratic-field linear algebra.

Matrices are plain row-major lists of lists: ``IntMatrix`` holds Python
ints, ``ScalarMatrix`` holds :class:`~nctoric.scalars.Scalar` entries
sharing one quadratic field.  Everything here is total and exact; there
is no floating point anywhere.
"""

from __future__ import annotations

from fractions import Fraction
from math import gcd

from .errors import DimensionMismatch, FieldMismatch
from .scalars import Scalar, common_field

IntMatrix = list  # list[list[int]]
ScalarMatrix = list  # list[list[Scalar]]


def identity(n: int) -> IntMatrix:
    return [[1 if i == j else 0 for j in range(n)] for i in range(n)]


def mat_mul(A: IntMatrix, B: IntMatrix) -> IntMatrix:
    if not A:
        return []
    if len(A[0]) != len(B):
        raise DimensionMismatch("matrix product shape mismatch")
    cols = len(B[0]) if B else 0
    return [[sum(A[i][k] * B[k][j] for k in range(len(B))) for j in range(cols)]
            for i in range(len(A))]


def mat_vec(A, v):
    return [sum(row[j] * v[j] for j in range(len(v))) for row in A]


def transpose(A):
    return [list(col) for col in zip(*A)] if A else []


def int_det(A: IntMatrix) -> int:
    """Determinant by fraction-free (Bareiss) elimination."""
    n = len(A)
    if n == 0:
        return 1
    M = [row[:] for row in A]
    sign = 1
    prev = 1
    for k in range(n - 1):
        if M[k][k] == 0:
            for i in range(k + 1, n):
                if M[i][k] != 0:
                    M[k], M[i] = M[i], M[k]
                    sign = -sign
                    break
            else:
                return 0
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                M[i][j] = (M[i][j] * M[k][k] - M[i][k] * M[k][j]) // prev
            M[i][k] = 0
        prev = M[k][k]
    return sign * M[n - 1][n - 1]


def smith_normal_form(A: IntMatrix):
    """Return (U, S, V) with U*A*V = S, U, V unimodular, S diagonal with
    non-negative invariant factors d_i | d_{i+1}.

    Elementary row/column reduction with smallest-pivot selection; fine for
    the small matrices this library meets (performance past ~50x50 is a
    non-goal).
    """
    m = len(A)
    n = len(A[0]) if m else 0
    S = [row[:] for row in A]
    U = identity(m)
    V = identity(n)

    def swap_rows(i, j):
        S[i], S[j] = S[j], S[i]
        U[i], U[j] = U[j], U[i]

    def swap_cols(i, j):
        for row in S:
            row[i], row[j] = row[j], row[i]
        for row in V:
            row[i], row[j] = row[j], row[i]

    def add_row(dst, src, c):  # row dst += c * row src
        S[dst] = [x + c * y for x, y in zip(S[dst], S[src])]
        U[dst] = [x + c * y for x, y in zip(U[dst], U[src])]

    def add_col(dst, src, c):
        for row in S:
            row[dst] += c * row[src]
        for row in V:
            row[dst] += c * row[src]

    def diagonalize(start=0):
        t = start
        while t < min(m, n):
            # nonzero entry of smallest magnitude in the trailing block
            pivot = None
            for i in range(t, m):
                for j in range(t, n):
                    if S[i][j] != 0 and (pivot is None
                                         or abs(S[i][j]) < abs(S[pivot[0]][pivot[1]])):
                        pivot = (i, j)
            if pivot is None:
                break
            swap_rows(t, pivot[0])
            swap_cols(t, pivot[1])
            while True:
                done = True
                for i in range(t + 1, m):
                    if S[i][t] != 0:
                        q = S[i][t] // S[t][t]
                        add_row(i, t, -q)
                        if S[i][t] != 0:
                            swap_rows(t, i)
                            done = False
                for j in range(t + 1, n):
                    if S[t][j] != 0:
                        q = S[t][j] // S[t][t]
                        add_col(j, t, -q)
                        if S[t][j] != 0:
                            swap_cols(t, j)
                            done = False
                if done:
                    break
            if S[t][t] < 0:
                add_row(t, t, -2)  # negate row
            t += 1
        return t

    r = diagonalize()
    # enforce the divisibility chain d_i | d_{i+1} by coupling offending
    # pairs and re-diagonalizing the trailing block
    while True:
        bad = next((i for i in range(r - 1) if S[i + 1][i + 1] % S[i][i] != 0), None)
        if bad is None:
            break
        add_col(bad, bad + 1, 1)
        diagonalize(bad)
    return U, S, V


def int_rank(A: IntMatrix) -> int:
    _, S, _ = smith_normal_form(A)
    return sum(1 for i in range(min(len(S), len(S[0]) if S else 0)) if S[i][i] != 0)


def integer_kernel_basis(A: IntMatrix) -> list:
    """Z-basis of the saturated lattice {v in Z^cols : A v = 0}.

    With U A V = S diagonal, the kernel is spanned by the columns of V at
    the zero invariant factors; those columns are part of a basis of Z^n,
    so the lattice returned is automatically saturated.
    """
    m = len(A)
    n = len(A[0]) if m else 0
    if n == 0:
        return []
    if m == 0:
        return [row[:] for row in identity(n)]
    U, S, V = smith_normal_form(A)
    basis = []
    for j in range(n):
        if j >= m or S[j][j] == 0:
            basis.append([V[i][j] for i in range(n)])
    return basis


def primitive(v):
    """Divide an integer vector by the gcd of its entries (canonical sign:
    first nonzero entry positive is NOT enforced; direction is preserved)."""
    g = 0
    for x in v:
        g = gcd(g, abs(x))
    if g == 0:
        return list(v)
    return [x // g for x in v]


def solve_exact(A: ScalarMatrix, b):
    """Exact Gaussian elimination over Q or Q(sqrt(d)).

    Returns one of
      ("unique", x)
      ("affine", particular, kernel_basis)
      ("infeasible",)
    """
    m = len(A)
    n = len(A[0]) if m else 0
    common_field([e for row in A for e in row] + list(b))  # raises FieldMismatch
    if len(b) != m:
        raise DimensionMismatch("rhs length != row count")
    M = [[Scalar._coerce(e) for e in row] + [Scalar._coerce(b[i])]
         for i, row in enumerate(A)]
    pivots = []  # (row, col)
    r = 0
    for c in range(n):
        pr = None
        for i in range(r, m):
            if not M[i][c].is_zero():
                pr = i
                break
        if pr is None:
            continue
        M[r], M[pr] = M[pr], M[r]
        inv = M[r][c].inverse()
        M[r] = [e * inv for e in M[r]]
        for i in range(m):
            if i != r and not M[i][c].is_zero():
                f = M[i][c]
                M[i] = [x - f * y for x, y in zip(M[i], M[r])]
        pivots.append((r, c))
        r += 1
        if r == m:
            break
    for i in range(r, m):
        if not M[i][n].is_zero():
            return ("infeasible",)
    part = [Scalar(0)] * n
    pivot_cols = {c for _, c in pivots}
    for row, c in pivots:
        part[c] = M[row][n]
    free_cols = [c for c in range(n) if c not in pivot_cols]
    if not free_cols:
        return ("unique", part)
    kernel = []
    for fc in free_cols:
        v = [Scalar(0)] * n
        v[fc] = Scalar(1)
        for row, c in pivots:
            v[c] = -M[row][fc]
        kernel.append(v)
    return ("affine", part, kernel)


def scalar_kernel_basis(A: ScalarMatrix, n: int) -> list:
    """Kernel basis of an m x n ScalarMatrix (n passed for the m = 0 case)."""
    if not A:
        return [[Scalar(1 if i == j else 0) for j in range(n)] for i in range(n)]
    res = solve_exact(A, [Scalar(0)] * len(A))
    if res[0] == "unique":
        return []
    return res[2]


def rational_subspace_dim(basis: list, n: int) -> tuple[int, list]:
    """Dimension and basis of the rational vectors inside span(basis).

    The span lives in Q(sqrt(d))^n; a vector sum c_i w_i (c_i in the field)
    is rational iff its sqrt(d)-part vanishes.  Writing c_i = x_i + y_i
    sqrt(d) and w_i = p_i + q_i sqrt(d) turns that into a rational linear
    system in (x, y); the rational vectors are the resulting p-part images.
    """
    k = len(basis)
    if k == 0:
        return 0, []
    d = common_field([e for w in basis for e in w])
    if d == 0:
        return k, [list(w) for w in basis]
    # unknowns: x_1..x_k, y_1..y_k; conditions: for each coordinate j,
    # irrational part sum_i (x_i q_ij + y_i p_ij) == 0
    rows = []
    for j in range(n):
        row = [Scalar(basis[i][j].b) for i in range(k)] + \
              [Scalar(basis[i][j].a) for i in range(k)]
        rows.append(row)
    sols = scalar_kernel_basis(rows, 2 * k)  # rational system, rational solutions
    vecs = []
    for s in sols:
        v = []
        for j in range(n):
            # (x + y sqrt d)(p + q sqrt d) has rational part x p + y q d
            acc = Fraction(0)
            for i in range(k):
                acc += s[i].a * basis[i][j].a + s[k + i].a * basis[i][j].b * d
            v.append(Scalar(acc))
        if any(not e.is_zero() for e in v):
            vecs.append(v)
    # the produced rational vectors may be dependent; row-reduce to a basis
    return _independent(vecs, n)


def _independent(vecs: list, n: int) -> tuple[int, list]:
    """Row-reduce Scalar vectors, returning (rank, independent subset)."""
    rows = []
    kept = []
    for v in vecs:
        w = list(v)
        for pivot_col, prow in rows:
            if not w[pivot_col].is_zero():
                f = w[pivot_col] / prow[pivot_col]
                w = [x - f * y for x, y in zip(w, prow)]
        pc = next((j for j in range(n) if not w[j].is_zero()), None)
        if pc is not None:
            rows.append((pc, w))
            kept.append(list(v))
    return len(rows), kept


def scalar_rank(A: ScalarMatrix) -> int:
    if not A:
        return 0
    return _independent([[Scalar._coerce(e) for e in row] for row in A], len(A[0]))[0]
