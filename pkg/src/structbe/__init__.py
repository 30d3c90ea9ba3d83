"""Normwise structured backward errors for saddle-point linear systems with
circulant, Toeplitz, and symmetric-Toeplitz block structures."""

from .backward_error import (
    CLASSES,
    S0,
    S1,
    S2,
    S3,
    BEReport,
    PerturbationSet,
    Residual,
    SaddleSystem,
    VerifyResult,
    Weights,
    assemble_coefficient,
    compute_be,
    extract_perturbations,
    residual,
    rigal_gaches,
    verify_perturbation,
    weighted_triple_norm,
)
from .dense import (
    MinNormSolution,
    ShapeError,
    frob_norm,
    hadamard,
    kron,
    min_norm_solve,
    numerical_rank,
    sign_pattern,
    vec_col_major,
)
from .solvers import SingularMatrixError, SolveOutcome, gep, gmres
from .structured import (
    CIRCULANT,
    KINDS,
    SYM_TOEPLITZ,
    TOEPLITZ,
    StructuredGenerator,
    StructureViolationError,
    build_circulant,
    build_sym_toeplitz,
    build_toeplitz,
    scaling_for,
    vec_of_structure,
)
from .wrls import WRLSProblem, WRLSReport, compute_zeta, to_saddle, wrls_residual

__all__ = [
    "CLASSES",
    "S0",
    "S1",
    "S2",
    "S3",
    "BEReport",
    "PerturbationSet",
    "Residual",
    "SaddleSystem",
    "VerifyResult",
    "Weights",
    "assemble_coefficient",
    "compute_be",
    "extract_perturbations",
    "residual",
    "rigal_gaches",
    "verify_perturbation",
    "weighted_triple_norm",
    "MinNormSolution",
    "ShapeError",
    "frob_norm",
    "hadamard",
    "kron",
    "min_norm_solve",
    "numerical_rank",
    "sign_pattern",
    "vec_col_major",
    "SingularMatrixError",
    "SolveOutcome",
    "gep",
    "gmres",
    "CIRCULANT",
    "KINDS",
    "SYM_TOEPLITZ",
    "TOEPLITZ",
    "StructuredGenerator",
    "StructureViolationError",
    "build_circulant",
    "build_sym_toeplitz",
    "build_toeplitz",
    "scaling_for",
    "vec_of_structure",
    "WRLSProblem",
    "WRLSReport",
    "compute_zeta",
    "to_saddle",
    "wrls_residual",
]
