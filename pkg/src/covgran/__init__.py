"""Covering-based granulation over finite universes.

A covering of a finite universe induces granular worlds at several
abstraction levels: the star system, the point closure system and the core
system, characterized by the specialization preorder and the induced
tolerance. This package models those worlds and the transformations between
them, the tolerance-space machinery of classes, maximal blocks and kernels,
closure and interior operators generated by relations, and four pairs of
covering-based rough approximation operators with their axiomatic
characterizations and covering reconstructions. An exhaustive verifier
machine-checks every structural claim over complete enumerations of small
universes, and a CLI exposes the lot.
"""

from .approx import (
    OperatorKind,
    covering_lower,
    covering_upper,
    literal_lower,
    literal_upper,
    rel_lower,
    rel_upper,
)
from .axioms import AxiomReport, check_axioms, reconstruct
from .closure import (
    ClosureReport,
    check_closure_axioms,
    cl_from_relation,
    closure_table,
    int_from_relation,
    minimal_neighbourhood,
    neighbourhood,
    relation_from_table,
)
from .errors import AxiomPreconditionError, CovgranError, InputError, ParseError
from .granulation import (
    GranuleProfile,
    core,
    core_system,
    granule_profile,
    induced_tolerance,
    point_closure,
    point_closure_system,
    specialization_preorder,
    star,
    star_system,
)
from .model import (
    Covering,
    OperatorTable,
    Relation,
    Subset,
    SubsetFamily,
    Universe,
    family_complement,
    is_covering,
    refines,
)
from .tolerance import (
    Tolerance,
    blocks,
    cheng_condition,
    classes,
    kernel,
    kernel_system,
    kernel_via_blocks,
)
from .verify import (
    ClaimResult,
    covering_count,
    enumerate_coverings,
    enumerate_preorders,
    enumerate_relations,
    enumerate_tolerances,
    find_counterexample,
    run_suite,
    tolerance_count,
)

__version__ = "0.1.0"

__all__ = [
    "AxiomPreconditionError",
    "AxiomReport",
    "ClaimResult",
    "ClosureReport",
    "Covering",
    "CovgranError",
    "GranuleProfile",
    "InputError",
    "OperatorKind",
    "OperatorTable",
    "ParseError",
    "Relation",
    "Subset",
    "SubsetFamily",
    "Tolerance",
    "Universe",
    "blocks",
    "check_axioms",
    "check_closure_axioms",
    "cheng_condition",
    "cl_from_relation",
    "classes",
    "closure_table",
    "core",
    "core_system",
    "covering_count",
    "covering_lower",
    "covering_upper",
    "enumerate_coverings",
    "enumerate_preorders",
    "enumerate_relations",
    "enumerate_tolerances",
    "family_complement",
    "find_counterexample",
    "granule_profile",
    "induced_tolerance",
    "int_from_relation",
    "is_covering",
    "kernel",
    "kernel_system",
    "kernel_via_blocks",
    "literal_lower",
    "literal_upper",
    "minimal_neighbourhood",
    "neighbourhood",
    "point_closure",
    "point_closure_system",
    "reconstruct",
    "refines",
    "rel_lower",
    "rel_upper",
    "relation_from_table",
    "run_suite",
    "specialization_preorder",
    "star",
    "star_system",
    "tolerance_count",
]
