import logging
from dataclasses import dataclass
from typing import Iterable, List, Sequence, Tuple

import numpy as np
from cached_property import cached_property

from qmultigraph.algebra import AlgebraMap, BlockAlgebra
from qmultigraph.errors import ChannelValidationError
from qmultigraph.tolerances import current_tolerances


@dataclass(frozen=True, eq=False)
class KrausOperator:
    """
    Kraus operator ``E: H_in → H^b_out`` embedded in ``B(H_in, H_out)``.

    :param out_block: output block ``b`` the operator maps into.
    :param in_block: input block whose columns carry the operator.
    :param matrix: ``dim(H_out) x dim(H_in)`` matrix, zero outside the rows of block
            ``out_block`` and the columns of block ``in_block``.
    """

    out_block: int
    in_block: int
    matrix: np.ndarray


@dataclass(frozen=True, eq=False)
class ChannelMap:
    """
    Completely positive map ``Φ(x) = Σ_{b,k} E_{bk} x E_{bk}^†`` between block
    algebras, given in Kraus form.

    Instances are created with :func:`make_channel` or :func:`classical_channel`.
    Trace preservation is never enforced; see
    :func:`is_trace_preserving <qmultigraph.channel.is_trace_preserving>`.
    """

    in_alg: BlockAlgebra
    out_alg: BlockAlgebra
    kraus: Tuple[KrausOperator, ...]

    @property
    def num_kraus(self) -> int:
        return len(self.kraus)

    @cached_property
    def kraus_matrices(self) -> np.ndarray:
        shape = (self.num_kraus, self.out_alg.total_dim, self.in_alg.total_dim)
        if not self.kraus:
            return np.zeros(shape, dtype=complex)
        return np.stack([k.matrix for k in self.kraus]).reshape(shape)

    def kraus_of_block(self, out_block: int) -> List[KrausOperator]:
        return [k for k in self.kraus if k.out_block == out_block]

    def apply(self, x: np.ndarray) -> np.ndarray:
        x = np.asarray(x, dtype=complex)
        e = self.kraus_matrices
        return np.einsum("kpi,ij,kqj->pq", e, x, np.conj(e))

    def __call__(self, x: np.ndarray) -> np.ndarray:
        return self.apply(x)

    @cached_property
    def unit_images(self) -> AlgebraMap:
        """
        Images ``Φ(e^a_{ij}) = Σ_k E_k[:, p] E_k[:, q]^†`` of the matrix units, where
        ``p`` and ``q`` are the global indices of ``i`` and ``j``.
        """
        e = self.kraus_matrices
        images = {}
        for a, i, j in self.in_alg.unit_keys():
            p = self.in_alg.global_index(a, i)
            q = self.in_alg.global_index(a, j)
            images[(a, i, j)] = e[:, :, p].T @ np.conj(e[:, :, q])
        return AlgebraMap(self.in_alg, self.out_alg, images)

    def __add__(self, other: "ChannelMap") -> "ChannelMap":
        if other.in_alg != self.in_alg or other.out_alg != self.out_alg:
            raise ChannelValidationError("Cannot add maps with mismatched algebras.")
        return ChannelMap(self.in_alg, self.out_alg, self.kraus + other.kraus)


def make_channel(
    in_alg: BlockAlgebra,
    out_alg: BlockAlgebra,
    kraus: Iterable[Tuple[int, np.ndarray]],
) -> ChannelMap:
    """
    Builds a :class:`ChannelMap` from block-labelled Kraus operators.

    Each operator may be given either block-local, as an ``n_b x dim(H_in)`` matrix,
    or embedded, as a ``dim(H_out) x dim(H_in)`` matrix vanishing outside the rows of
    its output block. Operators whose entries are all below the ``zero_kraus``
    tolerance are dropped.

    Raises :class:`ChannelValidationError <qmultigraph.errors.ChannelValidationError>`
    when an operator has the wrong shape or is not in block form, i.e. when its
    nonzero columns are spread over more than one input block.

    :param in_alg: input algebra ``I``.
    :param out_alg: output algebra ``O``.
    :param kraus: pairs ``(out_block, matrix)``.

    Usage::

      >>> import numpy as np
      >>> from qmultigraph.algebra import BlockAlgebra
      >>> from qmultigraph.channel import make_channel
      >>> m2 = BlockAlgebra.full(2)
      >>> make_channel(m2, m2, [(0, np.eye(2))]).num_kraus
      1
    """
    tolerance = current_tolerances().zero_kraus
    operators = []
    for index, (out_block, matrix) in enumerate(kraus):
        embedded = _embed_rows(out_alg, int(out_block), matrix, index, in_alg)
        if np.max(np.abs(embedded), initial=0.0) < tolerance:
            logging.warning(f"Dropping Kraus operator {index}: all entries are zero.")
            continue
        in_block = _input_block(in_alg, embedded, index, tolerance)
        operators.append(KrausOperator(int(out_block), in_block, embedded))
    return ChannelMap(in_alg, out_alg, tuple(operators))


def _embed_rows(
    out_alg: BlockAlgebra,
    out_block: int,
    matrix,
    index: int,
    in_alg: BlockAlgebra,
) -> np.ndarray:
    if not 0 <= out_block < out_alg.num_blocks:
        raise ChannelValidationError(f"output block {out_block} does not exist", index)
    matrix = np.asarray(matrix, dtype=complex)
    support = list(out_alg.supports[out_block])
    total = out_alg.total_dim
    if matrix.ndim != 2 or matrix.shape[1] != in_alg.total_dim:
        raise ChannelValidationError(
            f"expected {in_alg.total_dim} columns, got shape {matrix.shape}", index
        )
    if matrix.shape[0] == total:
        outside = np.delete(matrix, support, axis=0)
        if np.max(np.abs(outside), initial=0.0) >= current_tolerances().zero_kraus:
            raise ChannelValidationError(
                f"rows outside output block {out_block} are not zero", index
            )
        embedded = np.zeros_like(matrix)
        embedded[support] = matrix[support]
        return embedded
    if matrix.shape[0] == len(support):
        embedded = np.zeros((total, in_alg.total_dim), dtype=complex)
        embedded[support] = matrix
        return embedded
    raise ChannelValidationError(
        f"expected {len(support)} or {total} rows, got {matrix.shape[0]}", index
    )


def _input_block(
    in_alg: BlockAlgebra, matrix: np.ndarray, index: int, tolerance: float
) -> int:
    column_norms = np.max(np.abs(matrix), axis=0)
    blocks = sorted(
        {in_alg.block_of(c) for c in np.flatnonzero(column_norms >= tolerance)}
    )
    if len(blocks) != 1:
        raise ChannelValidationError(
            f"not in block form: nonzero columns in input blocks {blocks}", index
        )
    return blocks[0]


def classical_channel(
    p: Sequence[Sequence[float]], *, allow_substochastic: bool = False
) -> ChannelMap:
    """
    Channel of a classical transition matrix ``p[y][x] = p(y|x)`` between diagonal
    algebras, with Kraus operators ``E_{xy} = √p(y|x) |f_y⟩⟨e_x|`` for every positive
    entry, ordered by ``x`` then ``y``.

    Raises :class:`ChannelValidationError <qmultigraph.errors.ChannelValidationError>`
    for negative entries, or for columns not summing to one unless
    ``allow_substochastic`` is set, in which case sums up to one are accepted.

    :param p: ``|Y| x |X|`` matrix of transition probabilities.
    :param allow_substochastic: (optional) accept columns summing to less than one.
            Defaults to False.
    """
    p = np.asarray(p, dtype=float)
    if p.ndim != 2 or p.size == 0:
        raise ChannelValidationError(f"expected a non-empty matrix, got shape {p.shape}")
    if np.any(p < 0):
        raise ChannelValidationError("transition probabilities must be non-negative")
    tolerance = current_tolerances().stochastic
    sums = p.sum(axis=0)
    if allow_substochastic:
        if np.any(sums > 1 + tolerance):
            raise ChannelValidationError("columns must sum to at most one")
    elif np.any(np.abs(sums - 1) > tolerance):
        raise ChannelValidationError(
            "columns must sum to one; pass allow_substochastic for CP-only use"
        )
    outputs, inputs = p.shape
    kraus = []
    for x in range(inputs):
        for y in range(outputs):
            if p[y, x] > 0:
                operator = np.zeros((1, inputs), dtype=complex)
                operator[0, x] = np.sqrt(p[y, x])
                kraus.append((y, operator))
    return make_channel(
        BlockAlgebra.diagonal(inputs), BlockAlgebra.diagonal(outputs), kraus
    )
