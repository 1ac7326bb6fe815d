from dataclasses import dataclass
from typing import FrozenSet, Iterable, Tuple

import numpy as np

from qmultigraph.algebra import BlockAlgebra
from qmultigraph.errors import ArgumentError, UnsupportedCaseError
from qmultigraph.multirelation.quantum_multirelation import QuantumMultiRelation
from qmultigraph.tensor import OperatorSubspace
from qmultigraph.tolerances import current_tolerances

Triple = Tuple[int, int, int]


@dataclass(frozen=True)
class ClassicalMultiRelation:
    """
    Labelled multigraph ``R ⊆ X × X × Y``: a triple ``(x1, x2, y)`` is an edge from
    ``x1`` to ``x2`` labelled ``y``. Indices are 0-based.
    """

    x_size: int
    y_size: int
    triples: FrozenSet[Triple]

    def __post_init__(self):
        triples = frozenset(tuple(int(i) for i in t) for t in self.triples)
        for x1, x2, y in triples:
            if not (0 <= x1 < self.x_size and 0 <= x2 < self.x_size):
                raise ArgumentError(f"Vertex out of range in edge {(x1, x2, y)}.")
            if not 0 <= y < self.y_size:
                raise ArgumentError(f"Label out of range in edge {(x1, x2, y)}.")
        object.__setattr__(self, "triples", triples)

    @classmethod
    def of(cls, x_size: int, y_size: int, triples: Iterable[Triple]):
        return cls(x_size, y_size, frozenset(triples))

    def sorted_triples(self) -> Tuple[Triple, ...]:
        return tuple(sorted(self.triples))

    def edge_counts(self) -> np.ndarray:
        """
        ``counts[x1, x2]``: number of labels ``y`` with ``(x1, x2, y)`` in ``R``.
        """
        counts = np.zeros((self.x_size, self.x_size), dtype=int)
        for x1, x2, _ in self.triples:
            counts[x1, x2] += 1
        return counts

    def __len__(self):
        return len(self.triples)


def from_classical(r: ClassicalMultiRelation) -> QuantumMultiRelation:
    """
    ``V_R = span{e_{x1 x2} ⊗ f_{yy} : (x1, x2, y) ∈ R}`` over diagonal algebras.
    """
    size = r.x_size * r.y_size
    units = np.zeros((len(r.triples), size, size), dtype=complex)
    for n, (x1, x2, y) in enumerate(r.sorted_triples()):
        units[n, x1 * r.y_size + y, x2 * r.y_size + y] = 1
    return QuantumMultiRelation(
        BlockAlgebra.diagonal(r.x_size),
        BlockAlgebra.diagonal(r.y_size),
        OperatorSubspace((size, size), units),
    )


def to_classical(v: QuantumMultiRelation) -> ClassicalMultiRelation:
    """
    ``R_V``: triples ``(x1, x2, y)`` such that some element of ``V`` has a nonzero
    entry at row ``(x1, y)`` and column ``(x2, y)``.

    Raises :class:`UnsupportedCaseError <qmultigraph.errors.UnsupportedCaseError>`
    unless both algebras are diagonal.
    """
    if not (v.m_alg.is_diagonal and v.n_alg.is_diagonal):
        raise UnsupportedCaseError(
            "Classical multi-relations need diagonal algebras on both sides."
        )
    x_size, y_size = v.m_alg.total_dim, v.n_alg.total_dim
    if v.dim == 0:
        return ClassicalMultiRelation(x_size, y_size, frozenset())
    tensors = v.subspace.basis.reshape(-1, x_size, y_size, x_size, y_size)
    entries = np.einsum("nayby->naby", tensors)
    present = np.max(np.abs(entries), axis=0) > current_tolerances().axiom
    triples = frozenset(
        (int(x1), int(x2), int(y)) for x1, x2, y in zip(*np.nonzero(present))
    )
    return ClassicalMultiRelation(x_size, y_size, triples)
