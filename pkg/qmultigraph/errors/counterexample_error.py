from typing import Any, Dict, Optional


class CounterexampleError(AssertionError):
    """
    Error indicating a self-test check found an input violating a property.

    :param check: name of the failed check.
    :param details: (optional) JSON-serializable description of the counterexample.
            Defaults to an empty dict.
    """

    def __init__(self, check: str, details: Optional[Dict[str, Any]] = None):
        self.check = check
        self.details = dict(details or {})
        super().__init__(f"Check '{check}' failed: {self.details}")
