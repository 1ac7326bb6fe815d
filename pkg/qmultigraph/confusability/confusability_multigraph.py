from dataclasses import dataclass
from typing import Iterator

import numpy as np

from qmultigraph.algebra import BlockAlgebra
from qmultigraph.channel import ChannelMap, choi, output_block_component
from qmultigraph.confusability.kraus_form import require_kraus_form
from qmultigraph.errors import UnsupportedCaseError
from qmultigraph.multirelation import QuantumMultiRelation
from qmultigraph.tensor import LegShape, OperatorSubspace, partial_trace
from qmultigraph.tolerances import current_tolerances


@dataclass(frozen=True, eq=False)
class ConfusabilityMultigraph:
    """
    Confusability multigraph ``S̃_Φ`` of a CP map, stored in the transpose picture as
    a subspace of ``B(H_in ⊗ H_out)``.
    """

    subspace: OperatorSubspace
    in_alg: BlockAlgebra
    out_alg: BlockAlgebra

    @property
    def legs(self) -> LegShape:
        return LegShape.of(self.in_alg.total_dim, self.out_alg.total_dim)

    @property
    def dim(self) -> int:
        return self.subspace.dim

    def as_multirelation(self) -> QuantumMultiRelation:
        """
        The multigraph as a multi-relation over ``(I, O)``; the transposed output
        algebra has the block structure of ``O``.
        """
        return QuantumMultiRelation(self.in_alg, self.out_alg, self.subspace)


def kraus_vectors(phi: ChannelMap) -> np.ndarray:
    """
    ``vec(E_k^†)`` for every Kraus operator, as rows.
    """
    size = phi.in_alg.total_dim * phi.out_alg.total_dim
    return np.conj(phi.kraus_matrices).transpose(0, 2, 1).reshape(phi.num_kraus, size)


def multigraph_generators(phi: ChannelMap) -> Iterator[np.ndarray]:
    """
    Yields, per output block ``b`` in order, the generators
    ``G_{bkl} = vec(E_{bk}^†) vec(E_{bl}^†)^†`` for the ordered Kraus pairs ``(k, l)``
    of that block. Entry ``((i, q), (j, r))`` of ``G_{bkl}`` is
    ``conj(E_{bk}[q, i]) E_{bl}[r, j]``.
    """
    vectors = kraus_vectors(phi)
    size = vectors.shape[1]
    for b in range(phi.out_alg.num_blocks):
        rows = vectors[[n for n, k in enumerate(phi.kraus) if k.out_block == b]]
        if len(rows):
            yield np.einsum("ka,lb->klab", rows, np.conj(rows)).reshape(-1, size, size)


def confusability_multigraph(phi: ChannelMap) -> ConfusabilityMultigraph:
    require_kraus_form(phi)
    size = phi.in_alg.total_dim * phi.out_alg.total_dim
    subspace = OperatorSubspace.from_batches(multigraph_generators(phi), (size, size))
    return ConfusabilityMultigraph(subspace, phi.in_alg, phi.out_alg)


def count_edges(multigraph: ConfusabilityMultigraph) -> OperatorSubspace:
    """
    ``(id ⊗ tr)(S̃_Φ)``: the partial trace over the output leg of every element.
    """
    h = multigraph.in_alg.total_dim
    return multigraph.subspace.map(
        lambda g: partial_trace(g, multigraph.legs, 1), (h, h), reference_norm=1.0
    )


def block_components(phi: ChannelMap) -> Iterator[ConfusabilityMultigraph]:
    for b in range(phi.out_alg.num_blocks):
        yield confusability_multigraph(output_block_component(phi, b))


def numerical_rank(matrix: np.ndarray) -> int:
    singular_values = np.linalg.svd(matrix, compute_uv=False)
    if singular_values.size == 0 or singular_values[0] == 0:
        return 0
    cutoff = current_tolerances().rank_cutoff * singular_values[0]
    return int(np.sum(singular_values > cutoff))


def multigraph_expected_dim(phi: ChannelMap) -> int:
    """
    ``rank(C_Φ)²``, the dimension of ``V ⊗ V̄`` for ``V`` the range of the Choi
    operator.

    Raises :class:`UnsupportedCaseError <qmultigraph.errors.UnsupportedCaseError>`
    unless both algebras are full matrix algebras.
    """
    if not (phi.in_alg.is_full and phi.out_alg.is_full):
        raise UnsupportedCaseError(
            "The dimension law is only available for full input and output algebras."
        )
    return numerical_rank(choi(phi).matrix) ** 2
