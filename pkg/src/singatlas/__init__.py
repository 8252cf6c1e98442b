"""singatlas: components of discriminant complements of simple real singularities.

Three independent routes to the component counts of Table-1 singularity
classes: combinatorial surgery closures of virtual morsifications (E types),
GF(2) homology of D-series discriminant resolutions, and closed-form
catalogs, cross-validated against each other.
"""

from . import catalog, dhomology, explore, lattice, oracle, vmorse
from .lattice import Family, SingularityClass, Variant

__version__ = "1.0.0"

__all__ = [
    "Family",
    "SingularityClass",
    "Variant",
    "catalog",
    "dhomology",
    "explore",
    "lattice",
    "oracle",
    "vmorse",
]
