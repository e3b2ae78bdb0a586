import random
from fractions import Fraction

import pytest

from nctoric.errors import (ComplexTooLarge, DegreeZero, InputError,
                            InvalidAlgebra, InvalidGroupoid)
from nctoric.hochschild import (ChainElement, FinDimAlgebra, FiniteGroupoid,
                                connes_B, convolution_algebra, ground_field,
                                group_algebra_z2, hh_ranks, hochschild_boundary,
                                hp_truncated, matrix_algebra, pair_groupoid,
                                product_of_fields)


def dual_numbers():
    # basis (1, x) with x^2 = 0
    return FinDimAlgebra(2, [[[1, 0], [0, 1]], [[0, 1], [0, 0]]], [1, 0],
                         ["1", "x"])


def upper_triangular2():
    # basis (e11, e22, e12)
    c = [[[1, 0, 0], [0, 0, 0], [0, 0, 1]],
         [[0, 0, 0], [0, 1, 0], [0, 0, 0]],
         [[0, 0, 0], [0, 0, 1], [0, 0, 0]]]
    return FinDimAlgebra(3, c, [1, 1, 0], ["e11", "e22", "e12"])


def _mat_inv(P):
    n = len(P)
    M = [[Fraction(x) for x in row] + [Fraction(int(i == j))
                                       for j in range(n)]
         for i, row in enumerate(P)]
    for col in range(n):
        piv = next(r for r in range(col, n) if M[r][col] != 0)
        M[col], M[piv] = M[piv], M[col]
        f = M[col][col]
        M[col] = [x / f for x in M[col]]
        for r in range(n):
            if r != col and M[r][col] != 0:
                g = M[r][col]
                M[r] = [x - g * y for x, y in zip(M[r], M[col])]
    return [row[n:] for row in M]


def change_of_basis(A, P):
    """Same algebra in the basis f_i = sum_j P[i][j] e_j."""
    n = A.dim
    Pinv = _mat_inv(P)

    def to_new(v):
        return [sum(v[j] * Pinv[j][k] for j in range(n)) for k in range(n)]

    c = []
    for i in range(n):
        row = []
        for j in range(n):
            prod = A.mul_vec([Fraction(x) for x in P[i]],
                             [Fraction(x) for x in P[j]])
            row.append(to_new(prod))
        c.append(row)
    return FinDimAlgebra(n, c, to_new(A.unit))


def random_invertible(rng, n):
    while True:
        P = [[rng.randint(-2, 2) for _ in range(n)] for _ in range(n)]
        try:
            _mat_inv(P)
            return P
        except StopIteration:
            continue


def random_algebra(rng):
    base = rng.choice([ground_field(), product_of_fields(2),
                       product_of_fields(3), dual_numbers(),
                       group_algebra_z2(), upper_triangular2()])
    return change_of_basis(base, random_invertible(rng, base.dim))


def random_chain(rng, A, degree, reduced=True):
    x = ChainElement(A, degree, reduced=reduced)
    pool = list(range(A.dim))
    for _ in range(4):
        key = tuple(rng.choice(pool) for _ in range(degree + 1))
        x = x + ChainElement(A, degree, {key: Fraction(rng.randint(-3, 3))},
                             reduced=reduced)
    return x


def test_algebra_validation():
    with pytest.raises(InvalidAlgebra):
        # (g.g).1 = 1 but g.(g.1) = g
        FinDimAlgebra(2, [[[1, 0], [0, 1]], [[1, 0], [0, 1]]], [1, 0])
    with pytest.raises(InvalidAlgebra):
        FinDimAlgebra(2, [[[1, 0], [0, 1]], [[0, 1], [0, 0]]], [0, 1])
    with pytest.raises(InvalidAlgebra):
        FinDimAlgebra(2, [[[1, 0]]], [1, 0])


def test_algebra_json_roundtrip():
    A = upper_triangular2()
    B = FinDimAlgebra.from_json(A.to_json())
    assert B.c == A.c and B.unit == A.unit and B.labels == A.labels
    with pytest.raises(InputError):
        FinDimAlgebra.from_json({"dim": 2})


def test_boundary_small_cases():
    z2 = group_algebra_z2()
    # d(g x g) = g.g - g.g = 0
    assert hochschild_boundary(ChainElement(z2, 1, {(1, 1): 1})).is_zero()
    # d(1 x g x g) = g x g - 1 x 1 + g x g
    out = hochschild_boundary(ChainElement(z2, 2, {(0, 1, 1): 1}))
    assert out == ChainElement(z2, 1, {(1, 1): 2, (0, 0): -1})
    m2 = matrix_algebra(2)
    # d(e01 x e10) = e00 - e11
    out = hochschild_boundary(ChainElement(m2, 1, {(1, 2): 1}))
    assert out == ChainElement(m2, 0, {(0,): 1, (3,): -1})
    with pytest.raises(DegreeZero):
        hochschild_boundary(ChainElement(z2, 0, {(1,): 1}))


def test_connes_B_small_cases():
    z2 = group_algebra_z2()
    # B(a0) = 1 x a0
    out = connes_B(ChainElement(z2, 0, {(1,): 1}, reduced=True))
    assert out == ChainElement(z2, 1, {(0, 1): 1}, reduced=True)
    # B(g x g): the two rotations cancel by sign
    assert connes_B(ChainElement(z2, 1, {(1, 1): 1}, reduced=True)).is_zero()


def test_reduced_unit_rewrite():
    z2 = group_algebra_z2()
    # a unit in position >= 1 dies in the reduced complex
    x = ChainElement(z2, 1, {(1, 0): 1}, reduced=True)
    assert x.is_zero()
    # ... but position 0 is kept
    x = ChainElement(z2, 1, {(0, 1): 1}, reduced=True)
    assert not x.is_zero()


def test_complex_identities_random():
    rng = random.Random(7)
    for _ in range(20):
        A = random_algebra(rng)
        for k in (1, 2, 3):
            x = random_chain(rng, A, k, reduced=True)
            if k >= 2:
                assert hochschild_boundary(hochschild_boundary(x)).is_zero()
            assert connes_B(connes_B(x)).is_zero()
            assert (hochschild_boundary(connes_B(x))
                    + connes_B(hochschild_boundary(x))).is_zero()


def dense_rank(columns, nrows):
    M = [[Fraction(0)] * len(columns) for _ in range(nrows)]
    for c, col in enumerate(columns):
        for r, v in col.items():
            M[r][c] = v
    rank = 0
    for c in range(len(columns)):
        piv = next((r for r in range(rank, nrows) if M[r][c] != 0), None)
        if piv is None:
            continue
        M[rank], M[piv] = M[piv], M[rank]
        f = M[rank][c]
        M[rank] = [x / f for x in M[rank]]
        for r in range(nrows):
            if r != rank and M[r][c] != 0:
                g = M[r][c]
                M[r] = [x - g * y for x, y in zip(M[r], M[rank])]
        rank += 1
    return rank


def hh_ranks_dense(A, up_to):
    from nctoric.hochschild import _boundary_columns
    D = A.dim
    rank_d = [0]
    for k in range(1, up_to + 2):
        rank_d.append(dense_rank(_boundary_columns(A, k), D ** k))
    return [D ** (k + 1) - rank_d[k] - rank_d[k + 1] for k in range(up_to + 1)]


def commutator_hh0(A):
    """dim A - rank of span{e_i e_j - e_j e_i}."""
    cols = []
    for i in range(A.dim):
        for j in range(A.dim):
            v = [a - b for a, b in zip(A.mul_basis(i, j), A.mul_basis(j, i))]
            cols.append({r: x for r, x in enumerate(v) if x != 0})
    return A.dim - dense_rank(cols, A.dim)


def test_hh_ranks_known():
    assert hh_ranks(ground_field(), 3) == [1, 0, 0, 0]
    assert hh_ranks(product_of_fields(2), 3) == [2, 0, 0, 0]
    assert hh_ranks(group_algebra_z2(), 3) == [2, 0, 0, 0]
    assert hh_ranks(dual_numbers(), 3) == [2, 1, 1, 1]
    assert hh_ranks(upper_triangular2(), 2) == [2, 0, 0]
    assert hh_ranks(matrix_algebra(2), 3) == [1, 0, 0, 0]


def test_hh_ranks_dense_oracle_and_hh0():
    rng = random.Random(13)
    for _ in range(6):
        A = random_algebra(rng)
        up_to = 2 if A.dim <= 3 else 1
        assert hh_ranks(A, up_to) == hh_ranks_dense(A, up_to)
        assert hh_ranks(A, 0)[0] == commutator_hh0(A)


def test_hh_ranks_invariant_under_base_change():
    rng = random.Random(17)
    for base in (dual_numbers(), group_algebra_z2(), upper_triangular2()):
        A = change_of_basis(base, random_invertible(rng, base.dim))
        assert hh_ranks(A, 2) == hh_ranks(base, 2)


def test_hp_truncated_known():
    for N in (1, 2, 3):
        assert hp_truncated(ground_field(), N) == (1, 0)
        assert hp_truncated(group_algebra_z2(), N) == (2, 0)
        assert hp_truncated(product_of_fields(2), N) == (2, 0)
    with pytest.raises(InputError):
        hp_truncated(ground_field(), 0)


def test_size_and_degree_guards():
    with pytest.raises(ComplexTooLarge):
        hh_ranks(ground_field(), 7)
    with pytest.raises(ComplexTooLarge):
        hh_ranks(matrix_algebra(3), 6)
    with pytest.raises(ComplexTooLarge):
        hp_truncated(matrix_algebra(3), 4)


def test_pair_groupoid_is_matrix_algebra():
    A = convolution_algebra(pair_groupoid(2))
    M = matrix_algebra(2)
    assert A.dim == M.dim and A.unit == M.unit
    # arrows (a, b) in pair_groupoid order vs matrix units e_ab: identical
    # multiplication tables under the common lexicographic indexing
    assert A.c == M.c
    assert hh_ranks(A, 2) == [1, 0, 0]


def test_group_as_groupoid():
    G = FiniteGroupoid(["*"], ["e", "g"],
                       {"e": "*", "g": "*"}, {"e": "*", "g": "*"},
                       {("e", "e"): "e", ("e", "g"): "g",
                        ("g", "e"): "g", ("g", "g"): "e"})
    A = convolution_algebra(G)
    assert A.c == group_algebra_z2().c
    assert A.unit == group_algebra_z2().unit


def test_invalid_groupoids():
    with pytest.raises(InvalidGroupoid):
        FiniteGroupoid(["*"], ["e"], {"e": "x"}, {"e": "*"}, {("e", "e"): "e"})
    with pytest.raises(InvalidGroupoid):
        # missing composite of composable arrows
        FiniteGroupoid(["*"], ["e", "g"],
                       {"e": "*", "g": "*"}, {"e": "*", "g": "*"},
                       {("e", "e"): "e", ("e", "g"): "g", ("g", "e"): "g"})
    with pytest.raises(InvalidGroupoid):
        # no inverse for g (monoid, not groupoid)
        FiniteGroupoid(["*"], ["e", "g"],
                       {"e": "*", "g": "*"}, {"e": "*", "g": "*"},
                       {("e", "e"): "e", ("e", "g"): "g",
                        ("g", "e"): "g", ("g", "g"): "g"})
