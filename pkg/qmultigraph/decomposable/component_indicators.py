from dataclasses import dataclass
from typing import Tuple

import numpy as np

from qmultigraph.algebra import AlgebraMap
from qmultigraph.decomposable.decomposition import BlockDecomposition, Decomposition
from qmultigraph.decomposable.sigma import SIGMA_PERMUTATION
from qmultigraph.errors import ConsistencyError
from qmultigraph.multirelation import adjacency_weighted, multi_edge_indicator
from qmultigraph.tensor import LegShape, frobenius_norm, kron, reorder_legs
from qmultigraph.tolerances import current_tolerances


@dataclass(frozen=True, eq=False)
class ComponentIndicators:
    """
    Projectors onto ``vec(V1)`` and ``vec(V2)``, per output block and summed.
    """

    per_block: Tuple[Tuple[np.ndarray, np.ndarray], ...]
    factorization_distance: float

    @property
    def p_v1(self) -> np.ndarray:
        return sum(p1 for p1, _ in self.per_block)

    @property
    def p_v2(self) -> np.ndarray:
        return sum(p2 for _, p2 in self.per_block)


def flip_indicators(p_v1: np.ndarray, p_v2: np.ndarray, n: int, m: int) -> np.ndarray:
    """
    ``σ'(P_V1 ⊗ P_V2)``: the Kronecker product on legs ``(h, k, k', h')`` reordered
    to the legs ``(h, k, h', k')`` of ``vec(B(H ⊗ K))``.
    """
    return reorder_legs(kron(p_v1, p_v2), LegShape.of(n, m, m, n), SIGMA_PERMUTATION)


def component_indicators(d: Decomposition) -> ComponentIndicators:
    """
    Component projectors of a decomposition, with the factorization
    ``Σ_b σ'(P_{V1_b} ⊗ P_{V2_b}) = P_V`` checked.

    Raises :class:`ConsistencyError <qmultigraph.errors.ConsistencyError>` when the
    factorization fails beyond the ``reconstruction`` tolerance.
    """
    n, m = d.relation.legs.dims
    per_block = tuple((b.v1.projector, b.v2.projector) for b in d.per_block)
    flipped = sum(flip_indicators(p1, p2, n, m) for p1, p2 in per_block)
    distance = frobenius_norm(flipped - multi_edge_indicator(d.relation))
    if distance > current_tolerances().reconstruction:
        raise ConsistencyError("indicator factorization", distance)
    return ComponentIndicators(per_block, distance)


def first_component_adjacency(block: BlockDecomposition, d: Decomposition) -> AlgebraMap:
    """
    ``𝒜_{P_V1}: M → N^op``, ``x ↦ tr_1(P_V1 (x ⊗ 1))``.
    """
    m_alg, n_alg = d.relation.m_alg, d.relation.n_alg
    n, m = d.relation.legs.dims
    legs = block.v1.projector.reshape(n, m, n, m)
    return AlgebraMap.from_function(
        m_alg, n_alg, lambda x: np.einsum("akbc,ba->kc", legs, x)
    )


def second_component_adjacency(
    block: BlockDecomposition, d: Decomposition
) -> AlgebraMap:
    """
    ``𝒜_{P_V2}: N^op → M``, ``y ↦ [tr_1(P_V2 (y^T ⊗ 1))]^T``.
    """
    m_alg, n_alg = d.relation.m_alg, d.relation.n_alg
    n, m = d.relation.legs.dims
    legs = block.v2.projector.reshape(m, n, m, n)
    return AlgebraMap.from_function(
        n_alg, m_alg, lambda y: np.einsum("khlg,lk->hg", legs, y.T).T
    )


def adjacency_composition_distance(d: Decomposition) -> float:
    """
    Largest distance between the unit images of ``𝒜_{S_V}`` and
    ``Σ_b 𝒜_{P_{V2_b}} ∘ 𝒜_{P_{V1_b}}``.
    """
    composed = None
    for block in d.per_block:
        term = second_component_adjacency(block, d).compose(
            first_component_adjacency(block, d)
        )
        composed = term if composed is None else composed + term
    return adjacency_weighted(d.relation).distance(composed)


def adjacency_composition_check(d: Decomposition) -> bool:
    return adjacency_composition_distance(d) <= current_tolerances().reconstruction
