"""Amenable category, vcd, topological complexity and homology gradients of
right-angled Artin groups, computed from the defining flag complex."""

from raagcat.complex import (
    Graph,
    SimplicialComplex,
    delete_simplex,
    flag_complex,
    from_facets,
    full_subcomplex,
    join,
    maximal_cliques,
)
from raagcat.errors import InputError, ResourceLimitError
from raagcat.homology import QQ, ZZ, PrimeField, reduced_betti, reduced_cohomology_nonzero, reduced_homology
from raagcat.invariants import (
    amenable_category_raag,
    cd_raag,
    fp_homology_gradient,
    full_report,
    minvolent_positive,
    tc_raag,
    vcd_racg,
)

__all__ = [
    "Graph",
    "SimplicialComplex",
    "flag_complex",
    "from_facets",
    "full_subcomplex",
    "delete_simplex",
    "join",
    "maximal_cliques",
    "InputError",
    "ResourceLimitError",
    "ZZ",
    "QQ",
    "PrimeField",
    "reduced_homology",
    "reduced_betti",
    "reduced_cohomology_nonzero",
    "vcd_racg",
    "cd_raag",
    "amenable_category_raag",
    "tc_raag",
    "minvolent_positive",
    "fp_homology_gradient",
    "full_report",
]
