"""
Confusability graphs and confusability multigraphs of completely positive maps.
"""

from qmultigraph.confusability.classical import classical_confusability_multigraph
from qmultigraph.confusability.confusability_graph import (
    ConfusabilityGraph,
    confusability_graph,
)
from qmultigraph.confusability.confusability_multigraph import (
    ConfusabilityMultigraph,
    block_components,
    confusability_multigraph,
    count_edges,
    kraus_vectors,
    multigraph_expected_dim,
    multigraph_generators,
    numerical_rank,
)

__all__ = [
    "ConfusabilityGraph",
    "ConfusabilityMultigraph",
    "block_components",
    "classical_confusability_multigraph",
    "confusability_graph",
    "confusability_multigraph",
    "count_edges",
    "kraus_vectors",
    "multigraph_expected_dim",
    "multigraph_generators",
    "numerical_rank",
]
