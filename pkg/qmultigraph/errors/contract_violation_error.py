class ContractViolationError(ValueError):
    """
    Error indicating an input violates the contract of the routine it was given to,
    e.g. a non-Hermitian matrix passed to a Hermitian eigensolver.
    """

    def __init__(self, contract: str, deviation: float):
        self.contract = contract
        self.deviation = deviation
        super().__init__(
            f"Input is not {contract}: relative deviation {deviation:.3e}."
        )
