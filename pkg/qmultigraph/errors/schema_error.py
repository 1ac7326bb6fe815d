class SchemaError(ValueError):
    """
    Error indicating a JSON document does not follow the expected schema.

    :param path: location of the offending field, e.g. ``kraus[1].matrix``.
    :param reason: human readable description of the problem.
    """

    def __init__(self, path: str, reason: str):
        self.path = path
        self.reason = reason
        super().__init__(f"Invalid document at '{path}': {reason}")
