"""Finite weakly dicomplemented lattices.

Carriers are table-driven bounded lattices on indices 0..n-1; a Wdl adds
two total unary complementation maps satisfying six exhaustively checked
axioms.  The subpackages cover axiom checking and classification (wdl),
normal filters (nfilters), congruence lattices and decision procedures
(congruence), constructions (construct), concept algebras (fca), the
.lat.json / .cxt file formats (latjson, fca) and an executable
structure-theorem suite (verify).
"""

from .congruence import (
    CongruenceLattice,
    Partition,
    all_congruences,
    detcon,
    is_congruence,
    is_regular,
    is_simple,
    is_subdirectly_irreducible,
    principal_congruence,
    theta_f,
)
from .construct import chain, power, product, quotient, subalgebra_generated
from .catalog import catalog, catalog_names, catalog_warnings
from .errors import WdlatError
from .fca import FormalContext, concept_algebra, concepts, parse_cxt
from .lattice import (
    BoundedLattice,
    covers,
    find_isomorphism,
    is_distributive,
    join_irreducibles,
    lattice_from_covers,
    meet_irreducibles,
    upset_enumerate,
    validate_lattice,
)
from .nfilters import (
    all_normal_filters,
    all_normal_ideals,
    classify_subset,
    nf_join,
    nf_lattice,
    normal_filter_generated,
    normal_ideal_generated,
)
from .wdl import (
    AxiomReport,
    Wdl,
    WdlClassification,
    build_wdl,
    center,
    check_axioms,
    classify,
    dual_skeleton,
    find_wdl_isomorphism,
    finer_than,
    skeleton,
    standard_dicomplementation,
    trivial_dicomplementation,
)

__all__ = [
    "AxiomReport", "BoundedLattice", "CongruenceLattice", "FormalContext",
    "Partition", "Wdl", "WdlClassification", "WdlatError",
    "all_congruences", "all_normal_filters", "all_normal_ideals",
    "build_wdl", "catalog", "catalog_names", "catalog_warnings", "center",
    "chain", "check_axioms", "classify", "classify_subset",
    "concept_algebra", "concepts", "covers", "detcon", "dual_skeleton",
    "find_isomorphism", "find_wdl_isomorphism", "finer_than",
    "is_congruence", "is_distributive", "is_regular", "is_simple",
    "is_subdirectly_irreducible", "join_irreducibles", "lattice_from_covers",
    "meet_irreducibles", "nf_join", "nf_lattice", "normal_filter_generated",
    "normal_ideal_generated", "parse_cxt", "power", "principal_congruence",
    "product", "quotient", "skeleton", "standard_dicomplementation",
    "subalgebra_generated", "theta_f", "trivial_dicomplementation",
    "upset_enumerate", "validate_lattice",
]

__version__ = "0.1.0"
