class PreconditionError(ValueError):
    """
    Error indicating an input does not meet the precondition of an operation, e.g. a
    synthesis request for a non-symmetric multi-relation.
    """
