from dataclasses import dataclass
from typing import Iterable, Optional, Union

import numpy as np

from qmultigraph.algebra import BlockAlgebra
from qmultigraph.errors import AxiomViolationError, DimensionError
from qmultigraph.tensor import LegShape, OperatorSubspace, pairwise_products
from qmultigraph.tolerances import current_tolerances

#: Axioms in the order they are checked
AXIOMS = ("containment", "bimodule", "center")


@dataclass(frozen=True, eq=False)
class QuantumMultiRelation:
    """
    Quantum multi-relation ``V ⊆ B(H) ⊗ N`` over a pair of block algebras ``(M, N)``
    acting on ``H`` and ``K``.

    Instances built with :func:`make_multirelation` are verified against the three
    axioms; the dataclass itself only checks dimensions.
    """

    m_alg: BlockAlgebra
    n_alg: BlockAlgebra
    subspace: OperatorSubspace

    def __post_init__(self):
        size = self.size
        if self.subspace.shape != (size, size):
            raise DimensionError(
                "QuantumMultiRelation", (size, size), self.subspace.shape
            )

    @property
    def legs(self) -> LegShape:
        return LegShape.of(self.m_alg.total_dim, self.n_alg.total_dim)

    @property
    def dim(self) -> int:
        return self.subspace.dim

    @property
    def size(self) -> int:
        return self.m_alg.total_dim * self.n_alg.total_dim


@dataclass(frozen=True, eq=False)
class VerificationReport:
    """
    Outcome of checking the multi-relation axioms.

    :param valid: whether every axiom holds.
    :param failed_axiom: first failing axiom, or None.
    :param dim: dimension of the spanned subspace.
    :param residual: (optional) residual of the witness. Defaults to 0.
    :param witness: (optional) generated element lying outside the subspace.
            Defaults to None.
    """

    valid: bool
    failed_axiom: Optional[str]
    dim: int
    residual: float = 0.0
    witness: Optional[np.ndarray] = None


def _as_tensors(legs: LegShape, mats: np.ndarray) -> np.ndarray:
    h, k = legs.dims
    return np.asarray(mats, dtype=complex).reshape(-1, h, k, h, k)


def _support_mask(alg: BlockAlgebra, block: int) -> np.ndarray:
    mask = np.zeros(alg.total_dim, dtype=bool)
    mask[list(alg.supports[block])] = True
    return mask


def containment_parts(n_alg: BlockAlgebra, legs: LegShape, mats) -> np.ndarray:
    """
    The part of each operator lying outside ``B(H) ⊗ N``.
    """
    tensors = _as_tensors(legs, mats)
    off_block = ~n_alg.block_mask
    return tensors * off_block[None, None, :, None, :]


def bimodule_images(m_alg: BlockAlgebra, legs: LegShape, mats) -> np.ndarray:
    """
    Every ``(1_a ⊗ 1) v (1_{a'} ⊗ 1)`` for the block projectors ``1_a`` of ``M``,
    which span the commutant ``M'``.
    """
    tensors = _as_tensors(legs, mats)
    masks = [_support_mask(m_alg, a) for a in range(m_alg.num_blocks)]
    images = [
        tensors * left[None, :, None, None, None] * right[None, None, None, :, None]
        for left in masks
        for right in masks
    ]
    return np.concatenate(images).reshape(-1, legs.size, legs.size)


def center_images(n_alg: BlockAlgebra, legs: LegShape, mats) -> np.ndarray:
    """
    Every ``(1 ⊗ z_b) v`` for the central block projectors ``z_b`` of ``N``.
    """
    tensors = _as_tensors(legs, mats)
    images = [
        tensors * _support_mask(n_alg, b)[None, None, :, None, None]
        for b in range(n_alg.num_blocks)
    ]
    return np.concatenate(images).reshape(-1, legs.size, legs.size)


def verify_multirelation(
    m_alg: BlockAlgebra,
    n_alg: BlockAlgebra,
    spanning: Union[OperatorSubspace, Iterable[np.ndarray]],
) -> VerificationReport:
    """
    Checks the multi-relation axioms on the span of ``spanning`` without raising.

    The axioms are checked in order on an orthonormal basis: containment in
    ``B(H) ⊗ N``, the ``M'`` bimodule property and stability under ``1 ⊗ Z(N)``. The
    residual of every generated element must stay below the ``axiom`` tolerance.
    """
    legs = LegShape.of(m_alg.total_dim, n_alg.total_dim)
    subspace = _as_subspace(legs, spanning)
    tolerance = current_tolerances().axiom
    if subspace.dim == 0:
        return VerificationReport(True, None, 0)
    outside = containment_parts(n_alg, legs, subspace.basis).reshape(subspace.dim, -1)
    norms = np.linalg.norm(outside, axis=1)
    if norms.max() > tolerance:
        worst = int(np.argmax(norms))
        return VerificationReport(
            False,
            "containment",
            subspace.dim,
            float(norms[worst]),
            subspace.basis[worst],
        )
    for axiom, images in (
        ("bimodule", bimodule_images(m_alg, legs, subspace.basis)),
        ("center", center_images(n_alg, legs, subspace.basis)),
    ):
        residuals = subspace.residuals(images)
        if residuals.size and residuals.max() > tolerance:
            worst = int(np.argmax(residuals))
            return VerificationReport(
                False, axiom, subspace.dim, float(residuals[worst]), images[worst]
            )
    return VerificationReport(True, None, subspace.dim)


def make_multirelation(
    m_alg: BlockAlgebra,
    n_alg: BlockAlgebra,
    spanning: Union[OperatorSubspace, Iterable[np.ndarray]],
) -> QuantumMultiRelation:
    """
    Builds a verified :class:`QuantumMultiRelation` spanned by ``spanning``.

    Raises :class:`AxiomViolationError <qmultigraph.errors.AxiomViolationError>`
    naming the first failing axiom together with a witness element.

    :param m_alg: algebra ``M`` on ``H``.
    :param n_alg: algebra ``N`` on ``K``.
    :param spanning: operators on ``H ⊗ K`` or an already built subspace.

    Usage::

      >>> import numpy as np
      >>> from qmultigraph.algebra import BlockAlgebra
      >>> from qmultigraph.multirelation import make_multirelation
      >>> m, n = BlockAlgebra.full(2), BlockAlgebra.full(2)
      >>> make_multirelation(m, n, [np.eye(4)]).dim
      1
    """
    legs = LegShape.of(m_alg.total_dim, n_alg.total_dim)
    subspace = _as_subspace(legs, spanning)
    report = verify_multirelation(m_alg, n_alg, subspace)
    if not report.valid:
        raise AxiomViolationError(report.failed_axiom, report.residual, report.witness)
    return QuantumMultiRelation(m_alg, n_alg, subspace)


def is_symmetric(v: QuantumMultiRelation) -> bool:
    return v.subspace.adjoint().equals(v.subspace)


def product_residual(v: QuantumMultiRelation) -> float:
    """
    Largest distance to ``V`` of a product of two orthonormal basis elements of
    ``V``; zero exactly when ``V² ⊆ V``.
    """
    worst = 0.0
    for products in pairwise_products(v.subspace.basis, v.subspace.basis):
        worst = max(worst, float(v.subspace.residuals(products).max()))
    return worst


def is_transitive(v: QuantumMultiRelation) -> bool:
    return product_residual(v) <= current_tolerances().axiom


def _as_subspace(legs: LegShape, spanning) -> OperatorSubspace:
    if isinstance(spanning, OperatorSubspace):
        if spanning.shape != (legs.size, legs.size):
            raise DimensionError(
                "make_multirelation", (legs.size, legs.size), spanning.shape
            )
        return spanning
    return OperatorSubspace.from_spanning(list(spanning), (legs.size, legs.size))
