class SynthesisError(RuntimeError):
    """
    Error indicating no completely positive map could be assembled from a
    multi-relation, or the assembled map does not reproduce it.
    """
