from qmultigraph.channel import ChannelMap
from qmultigraph.errors import UnsupportedCaseError


def require_kraus_form(phi) -> ChannelMap:
    if not isinstance(phi, ChannelMap):
        raise UnsupportedCaseError(
            "This operation needs a map in Kraus form; recover one with"
            " channel_from_choi first."
        )
    return phi
