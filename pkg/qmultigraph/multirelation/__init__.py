"""
Quantum multi-relations on pairs of block algebras: axioms, the classical
correspondence, edge indicators and adjacency operators.
"""

from qmultigraph.multirelation.adjacency import (
    adjacency_from_indicator,
    adjacency_multi,
    adjacency_trace_distance,
    adjacency_trace_relation,
    adjacency_underlying,
    adjacency_weighted,
    contract,
    product_basis_matrix,
    schur_defect,
    schur_idempotent_check,
)
from qmultigraph.multirelation.classical_multirelation import (
    ClassicalMultiRelation,
    Triple,
    from_classical,
    to_classical,
)
from qmultigraph.multirelation.indicators import (
    IndicatorSet,
    commutant_superoperators,
    compute_indicators,
    indicator_range,
    multi_edge_indicator,
    underlying_graph,
    weighted_edge_indicator,
)
from qmultigraph.multirelation.quantum_multirelation import (
    AXIOMS,
    QuantumMultiRelation,
    VerificationReport,
    is_symmetric,
    is_transitive,
    make_multirelation,
    product_residual,
    verify_multirelation,
)

__all__ = [
    "AXIOMS",
    "ClassicalMultiRelation",
    "IndicatorSet",
    "QuantumMultiRelation",
    "Triple",
    "VerificationReport",
    "adjacency_from_indicator",
    "adjacency_multi",
    "adjacency_trace_distance",
    "adjacency_trace_relation",
    "adjacency_underlying",
    "adjacency_weighted",
    "commutant_superoperators",
    "compute_indicators",
    "contract",
    "from_classical",
    "indicator_range",
    "is_symmetric",
    "is_transitive",
    "make_multirelation",
    "multi_edge_indicator",
    "product_basis_matrix",
    "product_residual",
    "schur_defect",
    "schur_idempotent_check",
    "to_classical",
    "underlying_graph",
    "verify_multirelation",
]
