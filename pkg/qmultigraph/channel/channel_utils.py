from typing import Dict, Tuple, Union

import numpy as np

from qmultigraph.algebra import AlgebraMap
from qmultigraph.channel.channel_map import ChannelMap, KrausOperator
from qmultigraph.errors import ArgumentError
from qmultigraph.tensor import OperatorSubspace
from qmultigraph.tolerances import current_tolerances


def is_trace_preserving(phi: Union[ChannelMap, AlgebraMap]) -> bool:
    """
    Whether ``Σ_k E_k^† E_k`` is the identity within the ``stochastic`` tolerance.
    Maps given by unit images are checked on ``tr Φ(e^a_{ij}) = δ_{ij}``.
    """
    tolerance = current_tolerances().stochastic
    if isinstance(phi, AlgebraMap):
        return all(
            abs(np.trace(image) - (i == j)) <= tolerance
            for (_, i, j), image in phi.images.items()
        )
    e = phi.kraus_matrices
    total = np.einsum("kpi,kpj->ij", np.conj(e), e)
    deviation = np.max(np.abs(total - np.eye(phi.in_alg.total_dim)), initial=0.0)
    return bool(deviation <= tolerance)


def adjoint_map(phi: ChannelMap) -> AlgebraMap:
    """
    Hilbert-Schmidt adjoint ``Φ*: O → I``, ``Φ*(y) = Σ e^a_{ij} tr(Φ(e^a_{ji}) y)``
    for adjoint-preserving ``Φ``.
    """
    return phi.unit_images.hs_adjoint()


def kraus_space(phi: ChannelMap) -> OperatorSubspace:
    """
    Span of the embedded Kraus operators in ``B(H_in, H_out)``.
    """
    shape = (phi.out_alg.total_dim, phi.in_alg.total_dim)
    return OperatorSubspace.from_spanning(phi.kraus_matrices, shape)


def output_block_component(phi: ChannelMap, out_block: int) -> ChannelMap:
    """
    The summand ``Φ_b`` of ``Φ`` keeping the Kraus operators of one output block.
    """
    phi.out_alg.check_block(out_block)
    return ChannelMap(phi.in_alg, phi.out_alg, tuple(phi.kraus_of_block(out_block)))


def kraus_sectors(phi: ChannelMap) -> Dict[Tuple[int, int], Tuple[KrausOperator, ...]]:
    """
    Kraus operators grouped by ``(in_block, out_block)``, in order of appearance.
    """
    sectors = {}
    for operator in phi.kraus:
        key = (operator.in_block, operator.out_block)
        sectors[key] = sectors.get(key, ()) + (operator,)
    return sectors


def mix_kraus(
    phi: ChannelMap, isometries: Dict[Tuple[int, int], np.ndarray]
) -> ChannelMap:
    """
    Re-parameterizes the environment: within every ``(in_block, out_block)`` sector
    with an isometry ``U`` the Kraus family becomes ``E'_j = Σ_k U_{jk} E_k``. The
    map itself is unchanged. Sectors without an isometry are kept as they are.

    Raises :class:`ArgumentError <qmultigraph.errors.ArgumentError>` when an
    isometry has the wrong number of columns or is not an isometry.
    """
    tolerance = current_tolerances().reconstruction
    operators = []
    for key, family in kraus_sectors(phi).items():
        if key not in isometries:
            operators.extend(family)
            continue
        u = np.asarray(isometries[key], dtype=complex)
        if u.ndim != 2 or u.shape[1] != len(family):
            raise ArgumentError(
                f"Isometry for sector {key} must have {len(family)} columns."
            )
        if np.linalg.norm(np.conj(u).T @ u - np.eye(len(family))) > tolerance:
            raise ArgumentError(f"Matrix for sector {key} is not an isometry.")
        stacked = np.stack([k.matrix for k in family])
        mixed = np.einsum("jk,kpi->jpi", u, stacked)
        operators.extend(
            KrausOperator(key[1], key[0], matrix)
            for matrix in mixed
            if np.max(np.abs(matrix)) >= current_tolerances().zero_kraus
        )
    return ChannelMap(phi.in_alg, phi.out_alg, tuple(operators))
