from dataclasses import dataclass
from typing import List, Tuple, Union

import numpy as np
import scipy.linalg

from qmultigraph.decomposable.sigma import sigma_embed, unsigma
from qmultigraph.multirelation import QuantumMultiRelation, is_transitive
from qmultigraph.multirelation.quantum_multirelation import center_images
from qmultigraph.tensor import OperatorSubspace
from qmultigraph.tolerances import current_tolerances


@dataclass(frozen=True, eq=False)
class BlockDecomposition:
    """
    Factorization ``V_b = σ(V1 ⊗ V2)`` of the part of a multi-relation in one output
    block.

    :param block: output block ``b``.
    :param component: ``V_b`` itself.
    :param v1: ``V1 ⊆ B(K̄, H)`` as ``dim(H) x dim(K)`` matrices supported on the
            columns of block ``b``.
    :param v2: ``V2 ⊆ B(H, K̄)`` as ``dim(K) x dim(H)`` matrices supported on the rows
            of block ``b``.
    """

    block: int
    component: OperatorSubspace
    v1: OperatorSubspace
    v2: OperatorSubspace

    @property
    def dim_v(self) -> int:
        return self.component.dim

    def is_symmetric(self) -> bool:
        return self.v1.equals(self.v2.adjoint())


@dataclass(frozen=True, eq=False)
class Decomposition:
    """
    Blockwise decomposition of a multi-relation; see :func:`try_decompose`.
    """

    relation: QuantumMultiRelation
    per_block: Tuple[BlockDecomposition, ...]

    @property
    def v1(self) -> OperatorSubspace:
        return _direct_sum([d.v1 for d in self.per_block])

    @property
    def v2(self) -> OperatorSubspace:
        return _direct_sum([d.v2 for d in self.per_block])

    def reconstructed(self) -> OperatorSubspace:
        """
        ``⊕_b σ(V1_b ⊗ V2_b)``, equal to the decomposed relation.
        """
        return _direct_sum([sigma_embed(d.v1, d.v2) for d in self.per_block])


@dataclass(frozen=True)
class NotDecomposable:
    """
    Outcome of :func:`try_decompose` for a multi-relation whose part in ``block`` is
    strictly smaller than the product of its marginals.
    """

    block: int
    dim_v: int
    dim_v1: int
    dim_v2: int


def block_component(v: QuantumMultiRelation, block: int) -> OperatorSubspace:
    """
    ``V_b = (1 ⊗ z_b) V`` for the central projector ``z_b`` of block ``b`` of ``N``.
    """
    v.n_alg.check_block(block)
    images = center_images(v.n_alg, v.legs, v.subspace.basis)
    per_block = images.reshape(v.n_alg.num_blocks, v.dim, v.size, v.size)[block]
    return OperatorSubspace.from_spanning(
        per_block, (v.size, v.size), reference_norm=1.0
    )


def try_decompose(v: QuantumMultiRelation) -> Union[Decomposition, NotDecomposable]:
    """
    Looks for ``V_b = σ(V1 ⊗ V2)`` in every output block ``b``.

    The basis of ``V_b`` is flipped back to ``(n m) x (m n)`` matrices. Their joint
    column space is the only candidate for ``V1`` and their joint row space the only
    candidate for ``V2``; since ``V_b ⊆ σ(V1 ⊗ V2)`` the block decomposes exactly when
    ``dim V_b = dim V1 · dim V2``.

    :return: a :class:`Decomposition`, or a :class:`NotDecomposable` naming the first
            offending block.
    """
    n, m = v.legs.dims
    cutoff = current_tolerances().rank_cutoff
    blocks = []
    for b in range(v.n_alg.num_blocks):
        component = block_component(v, b)
        if component.dim == 0:
            blocks.append(
                BlockDecomposition(
                    b,
                    component,
                    OperatorSubspace.zero(n, m),
                    OperatorSubspace.zero(m, n),
                )
            )
            continue
        flipped = [unsigma(g, n, m) for g in component.basis]
        columns = scipy.linalg.orth(np.hstack(flipped), rcond=cutoff)
        rows = scipy.linalg.orth(np.vstack(flipped).T, rcond=cutoff)
        if component.dim != columns.shape[1] * rows.shape[1]:
            return NotDecomposable(b, component.dim, columns.shape[1], rows.shape[1])
        v1 = OperatorSubspace.from_spanning(
            [c.reshape(n, m) for c in columns.T], (n, m)
        )
        v2 = OperatorSubspace.from_spanning([r.reshape(m, n) for r in rows.T], (m, n))
        blocks.append(BlockDecomposition(b, component, v1, v2))
    return Decomposition(v, tuple(blocks))


def is_symmetric_decomposition(d: Decomposition) -> bool:
    """
    Whether ``V1 = V2^*`` in every block, which is equivalent to ``V^* = V``.
    """
    return all(block.is_symmetric() for block in d.per_block)


def transitivity_check(v: QuantumMultiRelation) -> bool:
    """
    Whether ``V² ⊆ V``.
    """
    return is_transitive(v)


def _direct_sum(parts: List[OperatorSubspace]) -> OperatorSubspace:
    shape = parts[0].shape
    return OperatorSubspace.from_spanning(
        np.concatenate([p.basis for p in parts]), shape
    )
