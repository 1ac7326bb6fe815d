class DimensionError(ValueError):
    """
    Error indicating operands have incompatible shapes.
    """

    def __init__(self, operation: str, expected, actual):
        self.operation = operation
        self.expected = expected
        self.actual = actual
        super().__init__(
            f"Shape mismatch in '{operation}': expected {expected}, got {actual}."
        )
