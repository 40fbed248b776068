"""Weight functions and the trivial perturbation class of bimodule fusion data."""
from .composition import Bicategory3, TheoremReport, cable, compose, generated_subsystem, verify_tpc_closure
from .fusion import (
    COMPLETE,
    Completeness,
    FusionObject,
    FusionSystem,
    HomAnswer,
    PrincipalGraphPair,
    TensorEntry,
    expand_word,
    generate_from_graph,
    hom_nonzero,
    pf_dimensions,
    principal_graphs,
    truncated,
    validate,
)
from .kernels import BACKEND
from .perturbation import (
    ConstituentDims,
    DimensionData,
    Modulus,
    PerturbationReport,
    is_spherical,
    min_index,
    modulus_of,
    normalize,
    perturb_dims,
    perturbation_report,
    scalar_perturb,
    sphericalizing_weight,
)
from .weights import (
    FULL,
    CentralElementCoefficients,
    LogConstraintSystem,
    Scope,
    TpcVerdict,
    WeightFunction,
    WeightSpaceBasis,
    assemble_constraints,
    central_element_coeffs,
    even_only,
    extend_even_weight,
    is_tpc,
    solve_weight_space,
    weight_of_word,
)

__version__ = "0.1.0"

__all__ = [
    "assemble_constraints",
    "BACKEND",
    "Bicategory3",
    "cable",
    "central_element_coeffs",
    "CentralElementCoefficients",
    "COMPLETE",
    "Completeness",
    "compose",
    "ConstituentDims",
    "DimensionData",
    "even_only",
    "expand_word",
    "extend_even_weight",
    "FULL",
    "FusionObject",
    "FusionSystem",
    "generate_from_graph",
    "generated_subsystem",
    "hom_nonzero",
    "HomAnswer",
    "is_spherical",
    "is_tpc",
    "LogConstraintSystem",
    "min_index",
    "Modulus",
    "modulus_of",
    "normalize",
    "perturb_dims",
    "perturbation_report",
    "PerturbationReport",
    "pf_dimensions",
    "principal_graphs",
    "PrincipalGraphPair",
    "scalar_perturb",
    "Scope",
    "solve_weight_space",
    "sphericalizing_weight",
    "TensorEntry",
    "TheoremReport",
    "TpcVerdict",
    "truncated",
    "validate",
    "verify_tpc_closure",
    "weight_of_word",
    "WeightFunction",
    "WeightSpaceBasis",
]
