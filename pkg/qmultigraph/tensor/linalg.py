"""
Dense complex linear algebra on row-major vectorized operators.

The single convention every other module relies on is the row-major vectorization
``vec(A) = A.reshape(-1)``, for which ``vec(A @ X @ B.T) == kron(A, B) @ vec(X)``.
"""

import logging
from typing import Sequence, Tuple

import numpy as np

from qmultigraph.errors import (
    ArgumentError,
    ContractViolationError,
    DimensionError,
)
from qmultigraph.tensor.leg_shape import LegShape
from qmultigraph.tolerances import current_tolerances


def as_matrix(a) -> np.ndarray:
    matrix = np.asarray(a, dtype=complex)
    if matrix.ndim != 2:
        raise DimensionError("as_matrix", "a 2-dimensional array", matrix.shape)
    return matrix


def adjoint(a: np.ndarray) -> np.ndarray:
    return np.conj(np.asarray(a)).T


def frobenius_norm(a: np.ndarray) -> float:
    return float(np.linalg.norm(np.asarray(a).reshape(-1)))


def hs_inner(a: np.ndarray, b: np.ndarray) -> complex:
    """
    Hilbert-Schmidt inner product ``tr(a^† b)``, conjugate-linear in ``a``.

    Raises :class:`DimensionError <qmultigraph.errors.DimensionError>` when the
    shapes differ.
    """
    a = np.asarray(a)
    b = np.asarray(b)
    if a.shape != b.shape:
        raise DimensionError("hs_inner", a.shape, b.shape)
    return complex(np.vdot(a.reshape(-1), b.reshape(-1)))


def kron(a: np.ndarray, b: np.ndarray) -> np.ndarray:
    return np.kron(np.asarray(a, dtype=complex), np.asarray(b, dtype=complex))


def vec(a: np.ndarray) -> np.ndarray:
    """
    Row-major vectorization. ``vec`` of the rank-one operator ``ξη^†`` is
    ``kron(ξ, conj(η))``.
    """
    return np.asarray(a, dtype=complex).reshape(-1)


def mat(v: np.ndarray, rows: int, cols: int) -> np.ndarray:
    v = np.asarray(v, dtype=complex).reshape(-1)
    if v.size != rows * cols:
        raise ArgumentError(
            f"Cannot reshape a vector of length {v.size} to {rows}x{cols}."
        )
    return v.reshape(rows, cols)


def _check_square(operation: str, t: np.ndarray, shape: LegShape) -> np.ndarray:
    t = np.asarray(t)
    if t.shape != (shape.size, shape.size):
        raise DimensionError(operation, (shape.size, shape.size), t.shape)
    return t


def partial_trace(t: np.ndarray, shape, which: int) -> np.ndarray:
    """
    Traces out leg ``which`` (0-based) of a square operator on the legs of ``shape``.

    Usage::

      >>> import numpy as np
      >>> from qmultigraph.tensor import partial_trace
      >>> partial_trace(np.eye(4), (2, 2), 0)
      array([[2.+0.j, 0.+0.j],
             [0.+0.j, 2.+0.j]])
    """
    shape = LegShape.coerce(shape)
    which = shape.check_leg(which)
    t = _check_square("partial_trace", t, shape)
    legs = shape.legs
    traced = np.trace(
        np.asarray(t, dtype=complex).reshape(shape.dims + shape.dims),
        axis1=which,
        axis2=which + legs,
    )
    remaining = shape.size // shape.dims[which]
    return traced.reshape(remaining, remaining)


def partial_transpose(t: np.ndarray, shape, which: int) -> np.ndarray:
    shape = LegShape.coerce(shape)
    which = shape.check_leg(which)
    t = _check_square("partial_transpose", t, shape)
    tensor = np.asarray(t, dtype=complex).reshape(shape.dims + shape.dims)
    return np.swapaxes(tensor, which, which + shape.legs).reshape(t.shape)


def reorder_legs(t: np.ndarray, shape, perm: Sequence[int]) -> np.ndarray:
    """
    Relabels the tensor legs of a vector or of a square operator: leg ``i`` of the
    result is leg ``perm[i]`` of the input. Operators have their row and column legs
    permuted alike.

    Raises :class:`ArgumentError <qmultigraph.errors.ArgumentError>` when ``perm`` is
    not a bijection on the legs.
    """
    shape = LegShape.coerce(shape)
    perm = shape.check_permutation(perm)
    t = np.asarray(t, dtype=complex)
    if t.ndim == 1:
        if t.size != shape.size:
            raise DimensionError("reorder_legs", (shape.size,), t.shape)
        return t.reshape(shape.dims).transpose(perm).reshape(-1)
    _check_square("reorder_legs", t, shape)
    legs = shape.legs
    axes = perm + tuple(p + legs for p in perm)
    return t.reshape(shape.dims + shape.dims).transpose(axes).reshape(t.shape)


def inverse_permutation(perm: Sequence[int]) -> Tuple[int, ...]:
    return tuple(int(i) for i in np.argsort(perm))


def hermitian_deviation(a: np.ndarray) -> float:
    norm = frobenius_norm(a)
    if norm == 0:
        return 0.0
    return frobenius_norm(a - adjoint(a)) / norm


def hermitian_eig(a: np.ndarray) -> Tuple[np.ndarray, np.ndarray]:
    """
    Spectral decomposition of a Hermitian matrix with eigenvalues in descending order.

    Raises :class:`ContractViolationError <qmultigraph.errors.ContractViolationError>`
    when ``a`` is not Hermitian within the active ``hermitian`` tolerance.

    :return: a pair ``(eigenvalues, eigenvectors)`` where ``eigenvectors[:, i]``
            belongs to ``eigenvalues[i]``.
    """
    a = as_matrix(a)
    if a.shape[0] != a.shape[1]:
        raise DimensionError("hermitian_eig", "a square matrix", a.shape)
    deviation = hermitian_deviation(a)
    if deviation > current_tolerances().hermitian:
        raise ContractViolationError("Hermitian", deviation)
    eigenvalues, eigenvectors = np.linalg.eigh((a + adjoint(a)) / 2)
    order = np.argsort(-eigenvalues, kind="stable")
    return eigenvalues[order], eigenvectors[:, order]


def min_eigenvalue(a: np.ndarray) -> float:
    a = as_matrix(a)
    if a.size == 0:
        return 0.0
    return float(np.linalg.eigvalsh((a + adjoint(a)) / 2)[0])


def psd_sqrt_factors(a: np.ndarray, tolerance: float) -> np.ndarray:
    """
    Columns ``v_α = √λ_α u_α`` over the eigenvalues above ``tolerance`` so that
    ``a ≈ Σ v_α v_α^†``. Eigenvalues below ``-tolerance`` are not checked here.
    """
    eigenvalues, eigenvectors = hermitian_eig(a)
    keep = eigenvalues > tolerance
    clipped = eigenvalues[(eigenvalues < 0) & (eigenvalues >= -tolerance)]
    if clipped.size:
        logging.debug(f"Clipping {clipped.size} eigenvalue(s) within tolerance to 0.")
    return eigenvectors[:, keep] * np.sqrt(eigenvalues[keep])
