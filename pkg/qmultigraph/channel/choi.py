import logging
from dataclasses import dataclass
from typing import List, Tuple, Union

import numpy as np

from qmultigraph.algebra import AlgebraMap, BlockAlgebra
from qmultigraph.channel.channel_map import ChannelMap, make_channel
from qmultigraph.errors import ConsistencyError, NotCompletelyPositiveError
from qmultigraph.tensor import (
    frobenius_norm,
    hermitian_deviation,
    kron,
    mat,
    min_eigenvalue,
    psd_sqrt_factors,
)
from qmultigraph.tolerances import current_tolerances

LinearMap = Union[ChannelMap, AlgebraMap]


@dataclass(frozen=True, eq=False)
class ChoiOperator:
    """
    Choi-type invariant ``Σ_{a,i,j} e^a_{ij} ⊗ Φ(e^a_{ji})^T`` of a map, an operator
    on ``H_in ⊗ H_out``. The second leg is the transpose picture of the opposite
    output algebra.
    """

    matrix: np.ndarray
    in_alg: BlockAlgebra
    out_alg: BlockAlgebra

    @property
    def leg_dims(self) -> Tuple[int, int]:
        return self.in_alg.total_dim, self.out_alg.total_dim

    def sector_indices(self, in_block: int, out_block: int) -> List[int]:
        """
        Indices of ``H^a_in ⊗ H^b_out`` inside ``H_in ⊗ H_out``.
        """
        dim_out = self.out_alg.total_dim
        return [
            p * dim_out + q
            for p in self.in_alg.supports[in_block]
            for q in self.out_alg.supports[out_block]
        ]


@dataclass(frozen=True)
class CPReport:
    """
    Outcome of a complete positivity check.

    :param cp: whether the map is completely positive.
    :param min_eigenvalue: smallest eigenvalue of the (Hermitian part of the) Choi
            operator.
    :param star_preserving: whether the Choi operator is Hermitian.
    """

    cp: bool
    min_eigenvalue: float
    star_preserving: bool


def choi(phi: LinearMap) -> ChoiOperator:
    """
    Choi-type invariant of a map. Maps in Kraus form use
    ``Σ_k vec(E_k^†) vec(E_k^†)^†``, which equals the matrix-unit expansion.
    """
    if isinstance(phi, ChannelMap):
        vectors = np.conj(phi.kraus_matrices).transpose(0, 2, 1).reshape(
            phi.num_kraus, -1
        )
        return ChoiOperator(vectors.T @ np.conj(vectors), phi.in_alg, phi.out_alg)
    return choi_from_unit_images(phi)


def choi_from_unit_images(phi: LinearMap) -> ChoiOperator:
    images = phi.unit_images if isinstance(phi, ChannelMap) else phi
    in_alg, out_alg = images.in_alg, images.out_alg
    size = in_alg.total_dim * out_alg.total_dim
    matrix = np.zeros((size, size), dtype=complex)
    for a, i, j in in_alg.unit_keys():
        matrix += kron(in_alg.matrix_unit(a, i, j), images.images[(a, j, i)].T)
    return ChoiOperator(matrix, in_alg, out_alg)


def check_cp(phi: LinearMap) -> CPReport:
    """
    Complete positivity test: the Choi operator must be positive semidefinite within
    the active ``psd`` tolerance, relative to its Frobenius norm. A non-Hermitian Choi
    operator means the map does not preserve adjoints and is reported as not CP.
    """
    tolerances = current_tolerances()
    c = choi(phi).matrix
    norm = frobenius_norm(c)
    star_preserving = hermitian_deviation(c) <= tolerances.hermitian
    if not star_preserving:
        logging.warning("Choi operator is not Hermitian: map is not adjoint-preserving.")
    smallest = min_eigenvalue(c)
    cp = star_preserving and smallest >= -tolerances.psd * max(norm, 1.0)
    return CPReport(bool(cp), smallest, bool(star_preserving))


def is_cp(phi: LinearMap) -> bool:
    return check_cp(phi).cp


def kraus_from_choi(c: ChoiOperator) -> List[Tuple[int, np.ndarray]]:
    """
    Kraus operators ``Λ_α = mat(√λ_α Γ_α)^†`` from the spectral decomposition of a
    Choi operator, computed sector by sector so every operator is in block form.

    Raises
    :class:`NotCompletelyPositiveError <qmultigraph.errors.NotCompletelyPositiveError>`
    when a sector has an eigenvalue below the ``psd`` tolerance, and
    :class:`ConsistencyError <qmultigraph.errors.ConsistencyError>` when the Kraus
    operators do not reproduce ``c``, e.g. for entries outside the block sectors.

    :return: pairs ``(out_block, matrix)`` with embedded
            ``dim(H_out) x dim(H_in)`` matrices, ready for :func:`make_channel`.
    """
    scale = max(frobenius_norm(c.matrix), 1.0)
    tolerance = current_tolerances().psd * scale
    dim_in, dim_out = c.leg_dims
    reconstructed = np.zeros_like(c.matrix, dtype=complex)
    kraus = []
    for a in range(c.in_alg.num_blocks):
        for b in range(c.out_alg.num_blocks):
            indices = c.sector_indices(a, b)
            sector = c.matrix[np.ix_(indices, indices)]
            smallest = min_eigenvalue(sector)
            if smallest < -tolerance:
                raise NotCompletelyPositiveError(smallest, tolerance)
            factors = psd_sqrt_factors(sector, tolerance)
            reconstructed[np.ix_(indices, indices)] += factors @ np.conj(factors).T
            for column in factors.T:
                vector = np.zeros(dim_in * dim_out, dtype=complex)
                vector[indices] = column
                kraus.append((b, np.conj(mat(vector, dim_in, dim_out)).T))
    distance = frobenius_norm(reconstructed - c.matrix)
    allowed = current_tolerances().reconstruction * scale
    if distance > allowed + tolerance * np.sqrt(len(c.matrix)):
        raise ConsistencyError("Choi reconstruction from Kraus operators", distance)
    return kraus


def channel_from_choi(c: ChoiOperator) -> ChannelMap:
    return make_channel(c.in_alg, c.out_alg, kraus_from_choi(c))
