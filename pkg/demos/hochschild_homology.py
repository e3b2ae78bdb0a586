"""Hochschild and truncated periodic homology of small algebras.

The ground field, the 2x2 matrix algebra, and the pair-groupoid
convolution algebra all share the homology of a point; a product of
fields counts its factors; the dual numbers have one-dimensional higher
Hochschild homology in every degree.
"""

from nctoric.hochschild import (FinDimAlgebra, convolution_algebra,
                                ground_field, group_algebra_z2, hh_ranks,
                                hp_truncated, matrix_algebra, pair_groupoid,
                                product_of_fields)

dual = FinDimAlgebra(2, [[[1, 0], [0, 1]], [[0, 1], [0, 0]]], [1, 0],
                     ["1", "x"])

cases = [("ground field", ground_field()),
         ("Q x Q", product_of_fields(2)),
         ("group algebra of Z/2", group_algebra_z2()),
         ("dual numbers Q[x]/x^2", dual),
         ("2x2 matrices", matrix_algebra(2)),
         ("pair groupoid on 2 points",
          convolution_algebra(pair_groupoid(2)))]

for name, A in cases:
    print("%-26s HH_0..HH_3 = %s, HP(N=3) = %s"
          % (name, hh_ranks(A, 3), hp_truncated(A, 3)))
