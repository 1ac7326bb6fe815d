"""
Decomposable multi-relations: the flip embedding, decomposition detection,
component indicators and adjacencies, and synthesis of completely positive maps.
"""

from qmultigraph.decomposable.component_indicators import (
    ComponentIndicators,
    adjacency_composition_check,
    adjacency_composition_distance,
    component_indicators,
    first_component_adjacency,
    flip_indicators,
    second_component_adjacency,
)
from qmultigraph.decomposable.decomposition import (
    BlockDecomposition,
    Decomposition,
    NotDecomposable,
    block_component,
    is_symmetric_decomposition,
    transitivity_check,
    try_decompose,
)
from qmultigraph.decomposable.sigma import (
    SIGMA_PERMUTATION,
    sigma,
    sigma_by_reordering,
    sigma_embed,
    unsigma,
)
from qmultigraph.decomposable.synthesis import (
    RoundtripReport,
    assemble_channel,
    roundtrip_verify,
    synthesize_channel,
)

__all__ = [
    "BlockDecomposition",
    "ComponentIndicators",
    "Decomposition",
    "NotDecomposable",
    "RoundtripReport",
    "SIGMA_PERMUTATION",
    "adjacency_composition_check",
    "adjacency_composition_distance",
    "assemble_channel",
    "block_component",
    "component_indicators",
    "first_component_adjacency",
    "flip_indicators",
    "is_symmetric_decomposition",
    "roundtrip_verify",
    "second_component_adjacency",
    "sigma",
    "sigma_by_reordering",
    "sigma_embed",
    "synthesize_channel",
    "transitivity_check",
    "try_decompose",
    "unsigma",
]
