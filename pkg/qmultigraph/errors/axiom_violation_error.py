from typing import Optional

import numpy as np


class AxiomViolationError(ValueError):
    """
    Error indicating a subspace fails one of the multi-relation axioms.

    :param axiom: name of the failed axiom, one of ``containment``, ``bimodule`` or
            ``center``.
    :param residual: relative residual of the witness.
    :param witness: (optional) element of the generated set lying outside the subspace.
    """

    def __init__(
        self, axiom: str, residual: float, witness: Optional[np.ndarray] = None
    ):
        self.axiom = axiom
        self.residual = residual
        self.witness = witness
        super().__init__(
            f"Multi-relation axiom '{axiom}' violated: relative residual"
            f" {residual:.3e}."
        )
