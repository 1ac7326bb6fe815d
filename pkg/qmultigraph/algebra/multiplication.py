import numpy as np

from qmultigraph.algebra.block_algebra import BlockAlgebra
from qmultigraph.errors import DimensionError
from qmultigraph.tensor import kron


def multiply(alg: BlockAlgebra, z: np.ndarray) -> np.ndarray:
    """
    The multiplication map ``m(x ⊗ y) = xy`` applied to an operator on ``H ⊗ H``.
    """
    n = alg.total_dim
    z = np.asarray(z, dtype=complex)
    if z.shape != (n * n, n * n):
        raise DimensionError("multiply", (n * n, n * n), z.shape)
    return np.einsum("ijjl->il", z.reshape(n, n, n, n))


def comultiply_unit(alg: BlockAlgebra, block: int, i: int, j: int) -> np.ndarray:
    """
    ``m*(e^a_{ij}) = Σ_k e^a_{ik} ⊗ e^a_{kj}``.
    """
    return sum(
        kron(alg.matrix_unit(block, i, k), alg.matrix_unit(block, k, j))
        for k in range(alg.block_dims[block])
    )


def comultiply(alg: BlockAlgebra, x: np.ndarray) -> np.ndarray:
    """
    The Hilbert-Schmidt adjoint of the multiplication map restricted to the algebra,
    expanded over the matrix units.
    """
    x = np.asarray(x, dtype=complex)
    n = alg.total_dim
    result = np.zeros((n * n, n * n), dtype=complex)
    for a, i, j in alg.unit_keys():
        coefficient = x[alg.global_index(a, i), alg.global_index(a, j)]
        if coefficient != 0:
            result += coefficient * comultiply_unit(alg, a, i, j)
    return result
