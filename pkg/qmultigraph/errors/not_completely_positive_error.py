class NotCompletelyPositiveError(ValueError):
    """
    Error indicating a Choi operator has a negative eigenvalue beyond tolerance.
    """

    def __init__(self, min_eigenvalue: float, tolerance: float):
        self.min_eigenvalue = min_eigenvalue
        self.tolerance = tolerance
        super().__init__(
            f"Map is not completely positive: minimum Choi eigenvalue"
            f" {min_eigenvalue:.6e} is below -{tolerance:.3e}."
        )
