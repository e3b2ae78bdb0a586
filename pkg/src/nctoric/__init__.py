"""Exact-arithmetic toolkit for classical and non-commutative toric
geometry: quadratic-field scalars, integer linear algebra, simple
polytopes and fans, Gale/LVM configurations, Hirzebruch-Jung resolution,
non-commutative torus classification, face-vector calculus, and
Hochschild homology of small algebras."""

from .errors import NctoricError
from .scalars import Scalar, parse_scalar
from .polytope import SimplePolytope
from .fan import Cone, Fan, normal_fan
from .lvm import Configuration

__version__ = "0.1.0"

__all__ = [
    "Cone",
    "Configuration",
    "Fan",
    "NctoricError",
    "Scalar",
    "SimplePolytope",
    "normal_fan",
    "parse_scalar",
    "__version__",
]
