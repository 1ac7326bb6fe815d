from dataclasses import dataclass
from typing import Iterator, List, Optional, Tuple

import numpy as np
import scipy.linalg
from cached_property import cached_property

from qmultigraph.errors import ArgumentError, DimensionError
from qmultigraph.tensor import OperatorSubspace, kron
from qmultigraph.tolerances import current_tolerances

UnitKey = Tuple[int, int, int]


@dataclass(frozen=True)
class BlockAlgebra:
    """
    Finite direct sum of full matrix algebras ``⊕_a B(H_a)`` in its minimal
    (multiplicity one) representation on ``⊕_a H_a``.

    :param block_dims: dimension of every block, in order.
    :param supports: (optional) global indices spanned by each block, listed in the
            block's local order. Defaults to consecutive ranges, i.e. block ``a``
            occupies ``offsets[a], ..., offsets[a] + block_dims[a] - 1``.

    Usage::

      >>> from qmultigraph.algebra import BlockAlgebra
      >>> BlockAlgebra.of(2, 1).total_dim
      3
    """

    block_dims: Tuple[int, ...]
    supports: Optional[Tuple[Tuple[int, ...], ...]] = None

    def __post_init__(self):
        dims = tuple(int(d) for d in self.block_dims)
        if not dims or any(d < 1 for d in dims):
            raise ArgumentError(f"Block dimensions must be positive, got {dims}.")
        object.__setattr__(self, "block_dims", dims)
        if self.supports is None:
            offsets = np.concatenate([[0], np.cumsum(dims)[:-1]]).astype(int)
            supports = tuple(
                tuple(range(int(o), int(o) + d)) for o, d in zip(offsets, dims)
            )
        else:
            supports = tuple(tuple(int(i) for i in s) for s in self.supports)
            flat = sorted(i for s in supports for i in s)
            if tuple(len(s) for s in supports) != dims or flat != list(
                range(sum(dims))
            ):
                raise ArgumentError(
                    f"Supports {supports} do not partition the blocks {dims}."
                )
        object.__setattr__(self, "supports", supports)

    @classmethod
    def of(cls, *block_dims: int) -> "BlockAlgebra":
        return cls(tuple(block_dims))

    @classmethod
    def full(cls, n: int) -> "BlockAlgebra":
        return cls((n,))

    @classmethod
    def diagonal(cls, n: int) -> "BlockAlgebra":
        return cls((1,) * n)

    @property
    def total_dim(self) -> int:
        return sum(self.block_dims)

    @property
    def num_blocks(self) -> int:
        return len(self.block_dims)

    @property
    def offsets(self) -> Tuple[int, ...]:
        return tuple(s[0] for s in self.supports)

    @property
    def is_diagonal(self) -> bool:
        return all(d == 1 for d in self.block_dims)

    @property
    def is_full(self) -> bool:
        return self.num_blocks == 1

    @property
    def dimension(self) -> int:
        return sum(d * d for d in self.block_dims)

    def check_block(self, block: int) -> int:
        if not 0 <= block < self.num_blocks:
            raise ArgumentError(
                f"Block {block} out of range for an algebra with {self.num_blocks}"
                f" block(s)."
            )
        return block

    def unit_keys(self) -> Iterator[UnitKey]:
        """
        Yields every matrix unit ``(a, i, j)`` in lexicographic order.
        """
        for a, n in enumerate(self.block_dims):
            for i in range(n):
                for j in range(n):
                    yield a, i, j

    def global_index(self, block: int, i: int) -> int:
        return self.supports[block][i]

    def block_of(self, index: int) -> int:
        return self._index_blocks[index]

    @cached_property
    def _index_blocks(self) -> Tuple[int, ...]:
        owners = [0] * self.total_dim
        for a, support in enumerate(self.supports):
            for index in support:
                owners[index] = a
        return tuple(owners)

    def matrix_unit(self, block: int, i: int, j: int) -> np.ndarray:
        """
        The embedded matrix unit ``e^a_{ij}``.

        Raises :class:`ArgumentError <qmultigraph.errors.ArgumentError>` for
        out-of-range indices.
        """
        block = self.check_block(block)
        n = self.block_dims[block]
        if not (0 <= i < n and 0 <= j < n):
            raise ArgumentError(f"Unit ({i}, {j}) out of range for block of size {n}.")
        unit = np.zeros((self.total_dim, self.total_dim), dtype=complex)
        unit[self.supports[block][i], self.supports[block][j]] = 1
        return unit

    def block_projector(self, block: int) -> np.ndarray:
        block = self.check_block(block)
        projector = np.zeros((self.total_dim, self.total_dim), dtype=complex)
        support = list(self.supports[block])
        projector[support, support] = 1
        return projector

    def block_projectors(self) -> List[np.ndarray]:
        return [self.block_projector(a) for a in range(self.num_blocks)]

    def identity(self) -> np.ndarray:
        return np.eye(self.total_dim, dtype=complex)

    def compress(self, x: np.ndarray, block: int) -> np.ndarray:
        """
        The ``block`` component of ``x`` as an ``n_a x n_a`` matrix.
        """
        support = list(self.supports[self.check_block(block)])
        return np.asarray(x)[np.ix_(support, support)]

    def embed(self, x: np.ndarray, block: int) -> np.ndarray:
        support = list(self.supports[self.check_block(block)])
        embedded = np.zeros((self.total_dim, self.total_dim), dtype=complex)
        embedded[np.ix_(support, support)] = x
        return embedded

    def off_block_norm(self, x: np.ndarray) -> float:
        x = np.asarray(x)
        if x.shape != (self.total_dim, self.total_dim):
            raise DimensionError("off_block_norm", (self.total_dim,) * 2, x.shape)
        mask = self.block_mask
        return float(np.linalg.norm(x[~mask]))

    @cached_property
    def block_mask(self) -> np.ndarray:
        owners = np.array(self._index_blocks)
        return owners[:, None] == owners[None, :]

    def contains(self, x: np.ndarray) -> bool:
        norm = float(np.linalg.norm(np.asarray(x)))
        return self.off_block_norm(x) <= current_tolerances().axiom * max(norm, 1.0)

    def element(self, x: np.ndarray) -> "AlgebraElement":
        return AlgebraElement(self, x)

    def as_subspace(self) -> OperatorSubspace:
        units = np.stack([self.matrix_unit(*key) for key in self.unit_keys()])
        return OperatorSubspace(self.total_dim_shape, units)

    @property
    def total_dim_shape(self) -> Tuple[int, int]:
        return self.total_dim, self.total_dim

    def tensor(self, other: "BlockAlgebra") -> "BlockAlgebra":
        """
        The product algebra acting on ``H ⊗ K``. Block ``(a, b)`` comes at position
        ``a * other.num_blocks + b`` and its local index ``i * m_b + k`` corresponds to
        the global index of ``e_{h_i} ⊗ f_{k_k}``.
        """
        dims = []
        supports = []
        for a, support_a in enumerate(self.supports):
            for b, support_b in enumerate(other.supports):
                dims.append(self.block_dims[a] * other.block_dims[b])
                supports.append(
                    tuple(h * other.total_dim + k for h in support_a for k in support_b)
                )
        return BlockAlgebra(tuple(dims), tuple(supports))


@dataclass(frozen=True, eq=False)
class AlgebraElement:
    """
    Element of a :class:`BlockAlgebra`, given by its block-diagonal matrix on the
    total space.
    """

    parent: BlockAlgebra
    matrix: np.ndarray

    def __post_init__(self):
        matrix = np.asarray(self.matrix, dtype=complex)
        if not self.parent.contains(matrix):
            raise ArgumentError("Matrix has entries outside the blocks of the algebra.")
        object.__setattr__(self, "matrix", matrix)

    def __matmul__(self, other: "AlgebraElement") -> "AlgebraElement":
        return AlgebraElement(self.parent, self.matrix @ other.matrix)


def op_rep(x) -> np.ndarray:
    """
    Representation of the opposite algebra on the conjugate space: the transpose.
    """
    matrix = x.matrix if isinstance(x, AlgebraElement) else np.asarray(x)
    return matrix.T.copy()


def commutant(alg: BlockAlgebra) -> OperatorSubspace:
    """
    Commutant of the algebra in ``B(⊕_a H_a)``: the span of the block projectors.
    """
    return OperatorSubspace.from_spanning(alg.block_projectors(), alg.total_dim_shape)


def center(alg: BlockAlgebra) -> OperatorSubspace:
    return commutant(alg)


def numerical_commutant(alg: BlockAlgebra) -> OperatorSubspace:
    """
    Commutant computed as the common kernel of the commutator maps with every matrix
    unit. Intended for cross-checking :func:`commutant` on small algebras.
    """
    n = alg.total_dim
    identity = np.eye(n)
    commutators = np.vstack(
        [
            kron(unit, identity) - kron(identity, unit.T)
            for unit in (alg.matrix_unit(*key) for key in alg.unit_keys())
        ]
    )
    kernel = scipy.linalg.null_space(commutators)
    return OperatorSubspace.from_spanning(
        [kernel[:, i].reshape(n, n) for i in range(kernel.shape[1])], (n, n)
    )
