from typing import Optional


class ChannelValidationError(ValueError):
    """
    Error indicating a channel description is invalid: a Kraus operator that is not in
    block form, a shape mismatch with the declared algebras or a negative transition
    probability.

    :param reason: human readable description of the violation.
    :param kraus_index: (optional) index of the offending Kraus operator in the list
            given at construction. Defaults to None.
    """

    def __init__(self, reason: str, kraus_index: Optional[int] = None):
        self.reason = reason
        self.kraus_index = kraus_index
        message = reason
        if kraus_index is not None:
            message = f"Kraus operator {kraus_index}: {reason}"
        super().__init__(message)
