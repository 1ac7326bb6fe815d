import logging
from dataclasses import dataclass
from typing import Iterator

import numpy as np

from qmultigraph.errors import ConsistencyError
from qmultigraph.multirelation.quantum_multirelation import QuantumMultiRelation
from qmultigraph.tensor import (
    OperatorSubspace,
    frobenius_norm,
    hermitian_eig,
    kron,
    min_eigenvalue,
    partial_trace,
)
from qmultigraph.tolerances import current_tolerances


@dataclass(frozen=True, eq=False)
class IndicatorSet:
    """
    Edge indicators of a multi-relation, as matrices on vectorized operator spaces.

    :param p_v: multi-edge indicator, the orthogonal projector onto ``vec(V)``.
    :param underlying: underlying single-edged graph ``Ṽ = (id ⊗ tr_K)(V)``.
    :param p_underlying: orthogonal projector onto ``vec(Ṽ)``.
    :param s_v: weighted edge indicator on ``vec(B(H))``.
    """

    p_v: np.ndarray
    underlying: OperatorSubspace
    p_underlying: np.ndarray
    s_v: np.ndarray


def multi_edge_indicator(v: QuantumMultiRelation) -> np.ndarray:
    """
    Projector ``P_V = Σ_α vec(G_α) vec(G_α)^†`` over an orthonormal basis of ``V``.

    Membership in ``M ⊗ M^op ⊗ N ⊗ N^op`` is certified by commutation with left and
    right multiplication by every block projector of ``M ⊗ N``, which span
    ``(M ⊗ N)'``.

    Raises :class:`ConsistencyError <qmultigraph.errors.ConsistencyError>` when a
    commutator is not zero, which happens only for subspaces that are not valid
    multi-relations.
    """
    projector = v.subspace.projector
    check_weaver_membership(v, projector)
    return projector


def commutant_superoperators(v: QuantumMultiRelation) -> Iterator[np.ndarray]:
    """
    Left and right multiplication on ``vec(B(H ⊗ K))`` by every block projector of
    ``M ⊗ N``, alternating left and right.
    """
    identity = np.eye(v.size)
    for c in v.m_alg.tensor(v.n_alg).block_projectors():
        yield kron(c, identity)
        yield kron(identity, c.T)


def check_weaver_membership(v: QuantumMultiRelation, projector: np.ndarray):
    tolerance = current_tolerances().axiom * max(frobenius_norm(projector), 1.0)
    for n, superoperator in enumerate(commutant_superoperators(v)):
        commutator = superoperator @ projector - projector @ superoperator
        distance = frobenius_norm(commutator)
        if distance > tolerance:
            side = "right" if n % 2 else "left"
            raise ConsistencyError(f"{side} commutant action", distance)


def underlying_graph(v: QuantumMultiRelation) -> OperatorSubspace:
    """
    ``Ṽ = (id ⊗ tr_K)(V)``, checked to be an ``M'``-``M'`` bimodule.
    """
    h = v.m_alg.total_dim
    underlying = v.subspace.map(
        lambda g: partial_trace(g, v.legs, 1), (h, h), reference_norm=1.0
    )
    tolerance = current_tolerances().axiom
    projectors = v.m_alg.block_projectors()
    images = np.array(
        [p @ b @ q for b in underlying.basis for p in projectors for q in projectors]
    ).reshape(-1, h, h)
    if images.size and underlying.residuals(images).max() > tolerance:
        raise ConsistencyError(
            "underlying graph bimodule", float(underlying.residuals(images).max())
        )
    return underlying


def traced_basis(v: QuantumMultiRelation) -> np.ndarray:
    """
    ``vec((id ⊗ tr_K)(G_α))`` for the orthonormal basis ``G_α`` of ``V``, as rows.
    """
    h = v.m_alg.total_dim
    traced = [partial_trace(g, v.legs, 1) for g in v.subspace.basis]
    return np.array(traced, dtype=complex).reshape(v.dim, h * h)


def weighted_edge_indicator(v: QuantumMultiRelation) -> np.ndarray:
    """
    Matrix on ``vec(B(H))`` of ``X ↦ (id ⊗ tr_K)(Proj_V(X ⊗ 1))``, i.e.
    ``J^† P_V J`` for ``J vec(X) = vec(X ⊗ 1)``. Equals
    ``Σ_α vec(A_α) vec(A_α)^†`` with ``A_α = (id ⊗ tr_K)(G_α)``.

    Raises :class:`ConsistencyError <qmultigraph.errors.ConsistencyError>` when the
    result is not positive semidefinite.
    """
    rows = traced_basis(v)
    s_v = rows.T @ np.conj(rows)
    tolerance = current_tolerances().psd * max(frobenius_norm(s_v), 1.0)
    smallest = min_eigenvalue(s_v)
    if smallest < -tolerance:
        raise ConsistencyError("weighted edge indicator positivity", -smallest)
    return s_v


def indicator_range(s_v: np.ndarray, h: int) -> OperatorSubspace:
    """
    Range of a positive semidefinite matrix on ``vec(B(H))`` as an operator subspace.
    """
    eigenvalues, eigenvectors = hermitian_eig(s_v)
    largest = max(float(eigenvalues.max(initial=0)), 1.0)
    cutoff = current_tolerances().rank_cutoff * largest
    kept = eigenvectors[:, eigenvalues > cutoff]
    return OperatorSubspace.from_spanning(
        [kept[:, i].reshape(h, h) for i in range(kept.shape[1])], (h, h)
    )


def compute_indicators(v: QuantumMultiRelation) -> IndicatorSet:
    """
    All indicators of ``V``, with the range of the weighted edge indicator checked
    against the underlying graph.
    """
    h = v.m_alg.total_dim
    p_v = multi_edge_indicator(v)
    underlying = underlying_graph(v)
    s_v = weighted_edge_indicator(v)
    distance = indicator_range(s_v, h).distance(underlying)
    if distance > underlying.equality_tolerance:
        raise ConsistencyError("weighted edge indicator range", distance)
    logging.debug(
        f"Indicators: dim V = {v.dim}, dim Ṽ = {underlying.dim}, range distance"
        f" {distance:.3e}."
    )
    return IndicatorSet(p_v, underlying, underlying.projector, s_v)
