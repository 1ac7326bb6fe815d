"""
This is qmultigraph's public API: completely positive maps between block algebras,
their confusability graphs and multigraphs, quantum multi-relations and the synthesis
of maps realizing symmetric decomposable multi-relations.
"""

from qmultigraph.algebra.algebra_map import AlgebraMap
from qmultigraph.algebra.block_algebra import BlockAlgebra
from qmultigraph.channel.channel_map import ChannelMap, classical_channel, make_channel
from qmultigraph.channel.choi import channel_from_choi, check_cp, choi, is_cp
from qmultigraph.confusability import (
    classical_confusability_multigraph,
    confusability_graph,
    confusability_multigraph,
    count_edges,
)
from qmultigraph.decomposable import (
    roundtrip_verify,
    synthesize_channel,
    try_decompose,
)
from qmultigraph.multirelation import (
    ClassicalMultiRelation,
    QuantumMultiRelation,
    compute_indicators,
    from_classical,
    make_multirelation,
    to_classical,
    verify_multirelation,
)
from qmultigraph.tensor.operator_subspace import OperatorSubspace
from qmultigraph.tolerances import current_tolerances, tolerance_overrides
from qmultigraph import errors
from qmultigraph import constants

__version__ = "0.1.0"

__all__ = [
    "AlgebraMap",
    "BlockAlgebra",
    "ChannelMap",
    "ClassicalMultiRelation",
    "OperatorSubspace",
    "QuantumMultiRelation",
    "channel_from_choi",
    "check_cp",
    "choi",
    "classical_channel",
    "classical_confusability_multigraph",
    "compute_indicators",
    "confusability_graph",
    "confusability_multigraph",
    "constants",
    "count_edges",
    "current_tolerances",
    "errors",
    "from_classical",
    "is_cp",
    "make_channel",
    "make_multirelation",
    "roundtrip_verify",
    "synthesize_channel",
    "to_classical",
    "tolerance_overrides",
    "try_decompose",
    "verify_multirelation",
]
