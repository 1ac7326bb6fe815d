"""
Numerical tolerances shared by every routine of the package.

The active tolerances are read with :func:`current_tolerances` and can be overridden
for a dynamic extent with :func:`tolerance_overrides`. Overrides are stored in a
context variable so concurrent runs never see each other's settings.
"""

from contextlib import contextmanager
from contextvars import ContextVar
from dataclasses import dataclass, fields, replace
from typing import Iterator

from qmultigraph import constants
from qmultigraph.errors import ArgumentError


@dataclass(frozen=True)
class Tolerances:
    """
    Immutable set of tolerances.

    :param rank_cutoff: (optional) relative singular-value cutoff for rank decisions.
            Defaults to :const:`qmultigraph.constants.RANK_CUTOFF`.
    :param subspace_equality: (optional) projector distance under which two
            subspaces are equal, scaled by the ambient dimension. Defaults to
            :const:`qmultigraph.constants.SUBSPACE_EQUALITY`.
    :param psd: (optional) relative tolerance for positive semidefiniteness. Defaults
            to :const:`qmultigraph.constants.PSD`.
    :param hermitian: (optional) relative Hermiticity tolerance. Defaults to
            :const:`qmultigraph.constants.HERMITIAN`.
    :param axiom: (optional) relative residual tolerance of multi-relation axioms.
            Defaults to :const:`qmultigraph.constants.AXIOM`.
    :param classical_edge: (optional) classical edge detection threshold. Defaults to
            :const:`qmultigraph.constants.CLASSICAL_EDGE`.
    :param zero_kraus: (optional) threshold for dropping zero Kraus operators.
            Defaults to :const:`qmultigraph.constants.ZERO_KRAUS`.
    :param reconstruction: (optional) tolerance on reconstructed maps. Defaults to
            :const:`qmultigraph.constants.RECONSTRUCTION`.
    :param stochastic: (optional) tolerance on stochastic column sums and on trace
            preservation. Defaults to
            :const:`qmultigraph.constants.STOCHASTIC`.
    """

    rank_cutoff: float = constants.RANK_CUTOFF
    subspace_equality: float = constants.SUBSPACE_EQUALITY
    psd: float = constants.PSD
    hermitian: float = constants.HERMITIAN
    axiom: float = constants.AXIOM
    classical_edge: float = constants.CLASSICAL_EDGE
    zero_kraus: float = constants.ZERO_KRAUS
    reconstruction: float = constants.RECONSTRUCTION
    stochastic: float = constants.STOCHASTIC

    @classmethod
    def names(cls) -> tuple:
        return tuple(f.name for f in fields(cls))

    def with_overrides(self, **overrides: float) -> "Tolerances":
        unknown = sorted(set(overrides) - set(self.names()))
        if unknown:
            raise ArgumentError(
                f"Unknown tolerance name(s): {', '.join(unknown)}."
                f" Known names are: {', '.join(self.names())}."
            )
        for name, value in overrides.items():
            if not value >= 0:
                raise ArgumentError(f"Tolerance '{name}' must be non-negative.")
        return replace(self, **{k: float(v) for k, v in overrides.items()})


_ACTIVE_TOLERANCES: ContextVar[Tolerances] = ContextVar(
    "qmultigraph_tolerances", default=Tolerances()
)


def current_tolerances() -> Tolerances:
    """
    Returns the tolerances active in the current context.
    """
    return _ACTIVE_TOLERANCES.get()


@contextmanager
def tolerance_overrides(**overrides: float) -> Iterator[Tolerances]:
    """
    Context manager overriding some tolerances for the duration of the block.

    Raises :class:`ArgumentError <qmultigraph.errors.ArgumentError>` for unknown names
    or negative values.

    Usage::

      >>> from qmultigraph.tolerances import tolerance_overrides, current_tolerances
      >>> with tolerance_overrides(psd=1e-12):
      ...     current_tolerances().psd
      1e-12
    """
    tolerances = current_tolerances().with_overrides(**overrides)
    token = _ACTIVE_TOLERANCES.set(tolerances)
    try:
        yield tolerances
    finally:
        _ACTIVE_TOLERANCES.reset(token)
