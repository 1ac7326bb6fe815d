"""
Dense complex linear algebra: vectorization conventions, partial traces and
transposes, leg permutations, spectral decompositions and operator subspaces.
"""

from qmultigraph.tensor.leg_shape import LegShape
from qmultigraph.tensor.linalg import (
    adjoint,
    as_matrix,
    frobenius_norm,
    hermitian_deviation,
    hermitian_eig,
    hs_inner,
    inverse_permutation,
    kron,
    mat,
    min_eigenvalue,
    partial_trace,
    partial_transpose,
    psd_sqrt_factors,
    reorder_legs,
    vec,
)
from qmultigraph.tensor.operator_subspace import (
    OperatorSubspace,
    pairwise_products,
    subspace_adjoint,
    subspace_contains,
    subspace_equals,
    subspace_from_spanning,
    subspace_product,
    subspace_sum,
)

__all__ = [
    "LegShape",
    "OperatorSubspace",
    "adjoint",
    "as_matrix",
    "frobenius_norm",
    "hermitian_deviation",
    "hermitian_eig",
    "hs_inner",
    "inverse_permutation",
    "kron",
    "mat",
    "min_eigenvalue",
    "pairwise_products",
    "partial_trace",
    "partial_transpose",
    "psd_sqrt_factors",
    "reorder_legs",
    "subspace_adjoint",
    "subspace_contains",
    "subspace_equals",
    "subspace_from_spanning",
    "subspace_product",
    "subspace_sum",
    "vec",
]
