"""
Finite-dimensional block algebras, their matrix units, commutants and centers, the
multiplication and comultiplication maps and linear maps between algebras.
"""

from qmultigraph.algebra.algebra_map import AlgebraMap
from qmultigraph.algebra.block_algebra import (
    AlgebraElement,
    BlockAlgebra,
    UnitKey,
    center,
    commutant,
    numerical_commutant,
    op_rep,
)
from qmultigraph.algebra.multiplication import comultiply, comultiply_unit, multiply

__all__ = [
    "AlgebraElement",
    "AlgebraMap",
    "BlockAlgebra",
    "UnitKey",
    "center",
    "commutant",
    "comultiply",
    "comultiply_unit",
    "multiply",
    "numerical_commutant",
    "op_rep",
]
