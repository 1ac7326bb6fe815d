"""
Adjacency operators of multi-relations.

Every adjacency operator is obtained from an indicator matrix ``Π`` on
``vec(B(H)) = H ⊗ H`` by the contraction ``𝒜_Π(x) = [tr_1(Π (x ⊗ 1))]^T``, where
``tr_1`` traces the first leg. The transpose undoes the transposed second leg of the
indicator. Maps are returned as :class:`AlgebraMap <qmultigraph.algebra.AlgebraMap>`
objects; their ``matrix`` is the matrix in the matrix-unit basis.
"""

from typing import Dict, Tuple

import numpy as np

from qmultigraph.algebra import AlgebraMap, BlockAlgebra, UnitKey
from qmultigraph.multirelation.indicators import (
    multi_edge_indicator,
    underlying_graph,
    weighted_edge_indicator,
)
from qmultigraph.multirelation.quantum_multirelation import QuantumMultiRelation
from qmultigraph.tolerances import current_tolerances


def contract(indicator: np.ndarray, x: np.ndarray) -> np.ndarray:
    """
    ``[tr_1(Π (x ⊗ 1))]^T`` for ``Π`` acting on ``C^d ⊗ C^d``.
    """
    d = x.shape[0]
    legs = np.asarray(indicator).reshape(d, d, d, d)
    return np.einsum("rsut,ur->st", legs, x).T


def adjacency_from_indicator(indicator: np.ndarray, alg: BlockAlgebra) -> AlgebraMap:
    """
    The map ``x ↦ 𝒜_Π(x)`` on ``alg``. The image of the unit with global indices
    ``(p, q)`` reduces to the slice ``Π[(q, ·), (p, ·)]`` transposed.
    """
    d = alg.total_dim
    legs = np.asarray(indicator, dtype=complex).reshape(d, d, d, d)
    images = {}
    for a, i, j in alg.unit_keys():
        p, q = alg.global_index(a, i), alg.global_index(a, j)
        images[(a, i, j)] = legs[q, :, p, :].T.copy()
    return AlgebraMap(alg, alg, images)


def adjacency_multi(v: QuantumMultiRelation) -> AlgebraMap:
    """
    Quantum multi-adjacency operator ``𝒜_{P_V}`` on ``M ⊗ N``.
    """
    return adjacency_from_indicator(
        multi_edge_indicator(v), v.m_alg.tensor(v.n_alg)
    )


def adjacency_weighted(v: QuantumMultiRelation) -> AlgebraMap:
    """
    Weighted adjacency operator ``𝒜_{S_V}`` on ``M``.
    """
    return adjacency_from_indicator(weighted_edge_indicator(v), v.m_alg)


def adjacency_underlying(v: QuantumMultiRelation) -> AlgebraMap:
    """
    Adjacency operator ``𝒜_{P_Ṽ}`` of the underlying single-edged graph, on ``M``.
    """
    return adjacency_from_indicator(underlying_graph(v).projector, v.m_alg)


def schur_defect(adjacency: AlgebraMap) -> float:
    """
    Largest Frobenius norm of ``𝒜(e_{ji}) - Σ_k 𝒜(e_{jk}) 𝒜(e_{ki})`` over the matrix
    units, i.e. the defect of ``m (𝒜 ⊗ 𝒜) m* = 𝒜``.
    """
    alg = adjacency.in_alg
    images = adjacency.images
    worst = 0.0
    for a, n in enumerate(alg.block_dims):
        for j in range(n):
            for i in range(n):
                square = sum(images[(a, j, k)] @ images[(a, k, i)] for k in range(n))
                worst = max(worst, float(np.linalg.norm(images[(a, j, i)] - square)))
    return worst


def schur_idempotent_check(adjacency: AlgebraMap) -> bool:
    scale = max(
        (float(np.linalg.norm(image)) for image in adjacency.images.values()),
        default=0.0,
    )
    tolerance = current_tolerances().reconstruction * max(scale, 1.0)
    return schur_defect(adjacency) <= tolerance


def product_unit_index(
    m_alg: BlockAlgebra, n_alg: BlockAlgebra
) -> Dict[Tuple[UnitKey, UnitKey], int]:
    """
    Position of the unit ``e^a_{ij} ⊗ f^b_{kl}`` among the units of ``M ⊗ N``.
    """
    product = m_alg.tensor(n_alg)
    positions = {key: n for n, key in enumerate(product.unit_keys())}
    index = {}
    for a, i, j in m_alg.unit_keys():
        for b, k, l in n_alg.unit_keys():
            m_b = n_alg.block_dims[b]
            key = (a * n_alg.num_blocks + b, i * m_b + k, j * m_b + l)
            index[((a, i, j), (b, k, l))] = positions[key]
    return index


def product_basis_matrix(
    adjacency: AlgebraMap, m_alg: BlockAlgebra, n_alg: BlockAlgebra
) -> np.ndarray:
    """
    Matrix of a map on ``M ⊗ N`` in the basis ``{e_u ⊗ f_w}`` of
    ``L²(M) ⊗ L²(N)``, with row and column index ``u * dim(N) + w``.
    """
    index = product_unit_index(m_alg, n_alg)
    order = [index[(u, w)] for u in m_alg.unit_keys() for w in n_alg.unit_keys()]
    return adjacency.matrix[np.ix_(order, order)]


def adjacency_trace_distance(v: QuantumMultiRelation) -> float:
    """
    Frobenius distance between ``(id ⊗ tr_{L²(N)})(𝒜_{P_V})`` and ``𝒜_{S_V}``.
    """
    dim_m, dim_n = v.m_alg.dimension, v.n_alg.dimension
    multi = product_basis_matrix(adjacency_multi(v), v.m_alg, v.n_alg)
    traced = np.trace(multi.reshape(dim_m, dim_n, dim_m, dim_n), axis1=1, axis2=3)
    return float(np.linalg.norm(traced - adjacency_weighted(v).matrix))


def adjacency_trace_relation(v: QuantumMultiRelation) -> bool:
    return adjacency_trace_distance(v) <= current_tolerances().reconstruction
