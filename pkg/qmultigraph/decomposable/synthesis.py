import logging
from dataclasses import dataclass
from typing import List, Optional, Tuple

import numpy as np

from qmultigraph.algebra import BlockAlgebra
from qmultigraph.channel import ChannelMap, make_channel
from qmultigraph.confusability import confusability_multigraph
from qmultigraph.decomposable.decomposition import (
    Decomposition,
    NotDecomposable,
    is_symmetric_decomposition,
    try_decompose,
)
from qmultigraph.errors import PreconditionError, SynthesisError
from qmultigraph.multirelation import QuantumMultiRelation
from qmultigraph.tensor import hermitian_eig, mat
from qmultigraph.tolerances import current_tolerances


@dataclass(frozen=True)
class RoundtripReport:
    """
    Outcome of synthesizing a map from a multi-relation and recomputing its
    confusability multigraph.
    """

    passed: bool
    projector_distance: float
    dim_v: int
    dim_multigraph: int
    num_kraus: int


def _check_preconditions(
    v: QuantumMultiRelation,
    in_alg: Optional[BlockAlgebra],
    out_alg: Optional[BlockAlgebra],
) -> Decomposition:
    if in_alg is not None and in_alg != v.m_alg:
        raise PreconditionError("Input algebra differs from the relation's M.")
    if out_alg is not None and out_alg != v.n_alg:
        raise PreconditionError("Output algebra differs from the relation's N.")
    decomposition = try_decompose(v)
    if isinstance(decomposition, NotDecomposable):
        raise PreconditionError(
            f"Relation is not decomposable in output block {decomposition.block}:"
            f" dim {decomposition.dim_v} for marginals {decomposition.dim_v1} x"
            f" {decomposition.dim_v2}."
        )
    if not is_symmetric_decomposition(decomposition):
        raise PreconditionError("Relation is not symmetric.")
    return decomposition


def _block_kraus(
    v: QuantumMultiRelation, decomposition: Decomposition
) -> List[Tuple[int, np.ndarray]]:
    n, m = v.legs.dims
    cutoff = current_tolerances().rank_cutoff
    kraus = []
    for block in decomposition.per_block:
        if block.dim_v == 0:
            continue
        basis = block.component.basis
        gram = np.einsum("aij,akj->ik", basis, np.conj(basis))
        spectrum = hermitian_eig(gram)[0]
        threshold = cutoff * max(float(spectrum[0]), 1.0)
        total_rank = int(np.sum(spectrum > threshold))
        found = 0
        for support in v.m_alg.supports:
            indices = [h * m + k for h in support for k in v.n_alg.supports[block.block]]
            eigenvalues, eigenvectors = hermitian_eig(gram[np.ix_(indices, indices)])
            for column in eigenvectors[:, eigenvalues > threshold].T:
                vector = np.zeros(n * m, dtype=complex)
                vector[indices] = column
                kraus.append((block.block, np.conj(mat(vector, n, m)).T))
                found += 1
        if found != total_rank:
            raise SynthesisError(
                f"Range in output block {block.block} has rank {total_rank} but its"
                f" input sectors only account for {found}; the relation is not an"
                f" M'-bimodule."
            )
    return kraus


def assemble_channel(v: QuantumMultiRelation) -> ChannelMap:
    """
    Map ``Φ(x) = Σ F_{bk} x F_{bk}^†`` built from ``V`` without checking the
    result. Callers use :func:`synthesize_channel` or :func:`roundtrip_verify`.
    """
    decomposition = _check_preconditions(v, None, None)
    return make_channel(v.m_alg, v.n_alg, _block_kraus(v, decomposition))


def synthesize_channel(
    v: QuantumMultiRelation,
    in_alg: Optional[BlockAlgebra] = None,
    out_alg: Optional[BlockAlgebra] = None,
) -> ChannelMap:
    """
    Completely positive map whose confusability multigraph equals a symmetric
    decomposable multi-relation.

    In every output block ``b`` the range of ``Σ_α G_α G_α^†`` over a basis of
    ``V_b`` is ``span{vec(F_{bk}^†)}``. It is diagonalized separately on each input
    sector ``H_a ⊗ K_b`` so every ``F_{bk} = mat(u_k)^†`` is in block form.

    Raises :class:`PreconditionError <qmultigraph.errors.PreconditionError>` when
    ``V`` is not decomposable or not symmetric, and
    :class:`SynthesisError <qmultigraph.errors.SynthesisError>` when the recovered
    operators are not in block form or do not reproduce ``V``.

    :param v: multi-relation over ``(M, N)``.
    :param in_alg: (optional) input algebra, must equal ``M``. Defaults to ``M``.
    :param out_alg: (optional) output algebra, must equal ``N``. Defaults to ``N``.
    """
    decomposition = _check_preconditions(v, in_alg, out_alg)
    phi = make_channel(v.m_alg, v.n_alg, _block_kraus(v, decomposition))
    distance = confusability_multigraph(phi).subspace.distance(v.subspace)
    if distance >= v.subspace.equality_tolerance:
        raise SynthesisError(
            f"Synthesized map has a different multigraph: distance {distance:.3e}."
        )
    return phi


def roundtrip_verify(v: QuantumMultiRelation) -> RoundtripReport:
    """
    Synthesizes a map from ``V`` and compares its confusability multigraph with ``V``.
    Precondition failures propagate as
    :class:`PreconditionError <qmultigraph.errors.PreconditionError>`.
    """
    phi = assemble_channel(v)
    multigraph = confusability_multigraph(phi)
    distance = multigraph.subspace.distance(v.subspace)
    passed = distance < v.subspace.equality_tolerance
    if not passed:
        logging.warning(f"Round trip failed: projector distance {distance:.3e}.")
    return RoundtripReport(
        bool(passed), distance, v.dim, multigraph.dim, phi.num_kraus
    )
