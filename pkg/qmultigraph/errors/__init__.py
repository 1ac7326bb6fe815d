"""
Custom exceptions raised by qmultigraph.
"""

from qmultigraph.errors.argument_error import ArgumentError
from qmultigraph.errors.axiom_violation_error import AxiomViolationError
from qmultigraph.errors.channel_validation_error import ChannelValidationError
from qmultigraph.errors.consistency_error import ConsistencyError
from qmultigraph.errors.contract_violation_error import ContractViolationError
from qmultigraph.errors.counterexample_error import CounterexampleError
from qmultigraph.errors.dimension_error import DimensionError
from qmultigraph.errors.not_completely_positive_error import (
    NotCompletelyPositiveError,
)
from qmultigraph.errors.precondition_error import PreconditionError
from qmultigraph.errors.schema_error import SchemaError
from qmultigraph.errors.synthesis_error import SynthesisError
from qmultigraph.errors.unsupported_case_error import UnsupportedCaseError

__all__ = [
    "ArgumentError",
    "AxiomViolationError",
    "ChannelValidationError",
    "ConsistencyError",
    "ContractViolationError",
    "CounterexampleError",
    "DimensionError",
    "NotCompletelyPositiveError",
    "PreconditionError",
    "SchemaError",
    "SynthesisError",
    "UnsupportedCaseError",
]
