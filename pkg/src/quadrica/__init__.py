"""Quadrics through generic configurations of linear spaces.

Closed-form dimension counts for the degree-2 part of the ideal of a generic
union of linear subspaces of P^n, an exact finite-field oracle that checks
them, and the dual question of writing quadratic forms as sums of forms in
prescribed families of linear forms.
"""

from .apolarity import (
    DecompositionWitness,
    FormFamily,
    annihilator_configuration,
    annihilator_space,
    decompose_quadric,
    star_holds_d2,
)
from .arrangement import (
    Configuration,
    LinearSpace,
    WeightVector,
    configuration_from_json,
    intersection_dim,
    pairwise_vertex,
    project_from,
    random_configuration,
)
from .exactlinalg import DEFAULT_PRIME, kernel_basis, rank, solve
from .formula import (
    CaseLabel,
    Expectation,
    FiberReport,
    dim_DL,
    disjoint_dim,
    expected_dim_I2,
    fano_dim,
    fiber_deficiency,
    lemma_bound,
    max_plane_dim_on_rank_r,
    tau_v,
)
from .oracle import (
    OracleReport,
    QuadricCoeffs,
    constraint_matrix,
    dim_I2_exact,
    generic_dim_I2,
    kernel_quadrics,
)

__version__ = "0.1.0"

__all__ = [
    "CaseLabel", "Configuration", "DEFAULT_PRIME", "DecompositionWitness", "Expectation",
    "FiberReport", "FormFamily", "LinearSpace", "OracleReport", "QuadricCoeffs", "WeightVector",
    "annihilator_configuration", "annihilator_space", "configuration_from_json",
    "constraint_matrix", "decompose_quadric", "dim_DL", "dim_I2_exact", "disjoint_dim",
    "expected_dim_I2", "fano_dim", "fiber_deficiency", "generic_dim_I2", "intersection_dim",
    "kernel_basis", "kernel_quadrics", "lemma_bound", "max_plane_dim_on_rank_r",
    "pairwise_vertex", "project_from", "random_configuration", "rank", "solve",
    "star_holds_d2", "tau_v",
]
