from typing import Sequence

import numpy as np

from qmultigraph.errors import ChannelValidationError
from qmultigraph.multirelation import ClassicalMultiRelation
from qmultigraph.tolerances import current_tolerances


def classical_confusability_multigraph(
    p: Sequence[Sequence[float]],
) -> ClassicalMultiRelation:
    """
    Triples ``(x1, x2, y)`` with ``p(y|x1) p(y|x2)`` above the ``classical_edge``
    tolerance, for ``p[y][x] = p(y|x)``. Indices are 0-based.

    Usage::

      >>> from qmultigraph.confusability import classical_confusability_multigraph
      >>> len(classical_confusability_multigraph([[1, 0.5], [0, 0.5]]))
      5
    """
    p = np.asarray(p, dtype=float)
    if p.ndim != 2:
        raise ChannelValidationError(f"expected a matrix, got shape {p.shape}")
    if np.any(p < 0):
        raise ChannelValidationError("transition probabilities must be non-negative")
    outputs, inputs = p.shape
    weights = np.einsum("ya,yb->aby", p, p)
    present = weights > current_tolerances().classical_edge
    triples = frozenset(
        (int(x1), int(x2), int(y)) for x1, x2, y in zip(*np.nonzero(present))
    )
    return ClassicalMultiRelation(inputs, outputs, triples)
