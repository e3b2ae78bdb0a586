"""Quotient-construction data for a rational simple polytope: forbidden
coordinate strata, the kernel lattice of the normal matrix, and the moment
vector in kernel coordinates.

The ambient torus moment map carries a factor of pi per coordinate; since
only zero-sets and linear identities are ever tested, that factor is
normalized away (MOMENT_SCALE below) so all arithmetic stays in Q.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from itertools import combinations

from .errors import CodimensionOne, RankDeficient
from .linalg import int_rank, integer_kernel_basis, transpose
from .polytope import SimplePolytope, normal_data

#: documented stand-in for the pi factor of the ambient moment map
MOMENT_SCALE = 1


def forbidden_strata(family, N: int):
    """Inclusion-minimal index sets outside the subset-closed family.

    These index the coordinate subspaces removed from C^N; their minimal
    size must be >= 2, otherwise the halfspace data is degenerate."""
    fam = {frozenset(I) for I in family}
    minimal = []
    for k in range(1, N + 1):
        for I in combinations(range(N), k):
            s = frozenset(I)
            if s in fam:
                continue
            if any(m <= s for m in minimal):
                continue
            minimal.append(s)
    if any(len(m) == 1 for m in minimal):
        raise CodimensionOne("a single facet index is already forbidden")
    return sorted(minimal, key=lambda s: (len(s), sorted(s)))


def kernel_lattice(rho):
    """Saturated Z-basis of ker(rho^T : Z^N -> Z^n) for full-rank rho."""
    n = len(rho[0]) if rho else 0
    A = transpose(rho)  # n x N, columns are the facet normals
    if int_rank(A) != n:
        raise RankDeficient("normal matrix does not have full rank")
    return integer_kernel_basis(A)


@dataclass(frozen=True)
class QuotientData:
    N: int
    forbidden_strata: list
    kernel_basis: list
    nu_P: list
    lambda_P: list = field(default=None)


def moment_vector(P: SimplePolytope):
    """nu_P = B^T (-lambda_P) where B's columns span ker(rho^T)."""
    rho, lam = normal_data(P)
    basis = kernel_lattice(rho)
    from .scalars import Scalar
    nu = [sum(((-lam[j]) * b[j] for j in range(len(lam))), Scalar(0))
          for b in basis]
    return nu, basis


def quotient_data(P: SimplePolytope) -> QuotientData:
    strata = forbidden_strata(P.incidence, P.N)
    nu, basis = moment_vector(P)
    rho, lam = normal_data(P)
    return QuotientData(N=P.N, forbidden_strata=strata, kernel_basis=basis,
                        nu_P=nu, lambda_P=lam)
