class ArgumentError(ValueError):
    """
    Error indicating an invalid argument such as an out-of-range leg index, a
    non-bijective permutation or an unknown tolerance name.
    """
