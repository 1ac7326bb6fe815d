from dataclasses import dataclass

from qmultigraph.channel import ChannelMap, kraus_space
from qmultigraph.confusability.kraus_form import require_kraus_form
from qmultigraph.tensor import OperatorSubspace


@dataclass(frozen=True, eq=False)
class ConfusabilityGraph:
    """
    Single-edged confusability graph ``S_Φ = 𝒦^* 𝒦 ⊆ B(H_in)`` of a CP map.
    """

    subspace: OperatorSubspace
    channel: ChannelMap


def confusability_graph(phi: ChannelMap) -> ConfusabilityGraph:
    """
    ``S_Φ = span{E_k^† E_l}``, computed as the product of the adjoint Kraus space with
    the Kraus space.
    """
    require_kraus_form(phi)
    space = kraus_space(phi)
    return ConfusabilityGraph(space.adjoint().product(space), phi)
