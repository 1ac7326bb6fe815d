class UnsupportedCaseError(NotImplementedError):
    """
    Error indicating the requested computation is only defined for a narrower class of
    algebras than the ones given.
    """
