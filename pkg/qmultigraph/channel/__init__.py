"""
Completely positive maps between block algebras: Kraus and classical constructions,
the Choi-type invariant, complete positivity and trace preservation checks, adjoints
and Kraus recovery.
"""

from qmultigraph.channel.channel_map import (
    ChannelMap,
    KrausOperator,
    classical_channel,
    make_channel,
)
from qmultigraph.channel.channel_utils import (
    adjoint_map,
    is_trace_preserving,
    kraus_sectors,
    kraus_space,
    mix_kraus,
    output_block_component,
)
from qmultigraph.channel.choi import (
    ChoiOperator,
    CPReport,
    channel_from_choi,
    check_cp,
    choi,
    choi_from_unit_images,
    is_cp,
    kraus_from_choi,
)

__all__ = [
    "CPReport",
    "ChannelMap",
    "ChoiOperator",
    "KrausOperator",
    "adjoint_map",
    "channel_from_choi",
    "check_cp",
    "choi",
    "choi_from_unit_images",
    "classical_channel",
    "is_cp",
    "is_trace_preserving",
    "kraus_from_choi",
    "kraus_sectors",
    "kraus_space",
    "make_channel",
    "mix_kraus",
    "output_block_component",
]
