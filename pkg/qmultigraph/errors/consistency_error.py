class ConsistencyError(RuntimeError):
    """
    Error indicating an internal identity failed numerically. This signals either a
    convention bug or an input outside the routine's domain.
    """

    def __init__(self, check: str, distance: float):
        self.check = check
        self.distance = distance
        super().__init__(f"Consistency check '{check}' failed: distance {distance:.3e}.")
