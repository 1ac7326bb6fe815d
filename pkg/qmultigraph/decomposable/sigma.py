"""
The flip ``σ: B(K̄, H) ⊗ B(H, K̄) → B(H ⊗ K̄)`` and its inverse on vectorized
operators.

For ``T1`` of shape ``(n, m)`` and ``T2`` of shape ``(m, n)``,
``σ(T1 ⊗ T2)[(h, k), (h', k')] = T1[h, k] T2[k', h']``, which sends
``θ_{ξ, η̄} ⊗ θ_{η̄', ξ'}`` to ``θ_{ξ, ξ'} ⊗ θ_{η, η'}``.
"""

import numpy as np

from qmultigraph.errors import ArgumentError
from qmultigraph.tensor import LegShape, OperatorSubspace, kron, reorder_legs

#: Leg permutation taking ``vec(T1) ⊗ vec(T2)`` on legs ``(h, k, k', h')`` to
#: ``vec(σ(T1 ⊗ T2))`` on legs ``(h, k, h', k')``
SIGMA_PERMUTATION = (0, 1, 3, 2)


def sigma(t1: np.ndarray, t2: np.ndarray) -> np.ndarray:
    t1 = np.asarray(t1, dtype=complex)
    t2 = np.asarray(t2, dtype=complex)
    n, m = t1.shape
    if t2.shape != (m, n):
        raise ArgumentError(
            f"Components of shapes {t1.shape} and {t2.shape} cannot be flipped."
        )
    return np.einsum("ab,dc->abcd", t1, t2).reshape(n * m, n * m)


def sigma_by_reordering(t1: np.ndarray, t2: np.ndarray) -> np.ndarray:
    """
    ``σ(T1 ⊗ T2)`` computed as a leg permutation of ``vec(T1) ⊗ vec(T2)``.
    """
    n, m = np.shape(t1)
    vector = kron(np.reshape(t1, (-1, 1)), np.reshape(t2, (-1, 1))).reshape(-1)
    flipped = reorder_legs(vector, LegShape.of(n, m, m, n), SIGMA_PERMUTATION)
    return flipped.reshape(n * m, n * m)


def unsigma(g: np.ndarray, n: int, m: int) -> np.ndarray:
    """
    Inverse flip: the ``(n m) x (m n)`` matrix ``R`` with ``R = vec(T1) vec(T2)^T``
    whenever ``g = σ(T1 ⊗ T2)``.
    """
    g = np.asarray(g, dtype=complex)
    return g.reshape(n, m, n, m).transpose(SIGMA_PERMUTATION).reshape(n * m, m * n)


def sigma_embed(v1: OperatorSubspace, v2: OperatorSubspace) -> OperatorSubspace:
    """
    ``σ(V1 ⊗ V2)``, spanned by the flips of all pairs of basis elements.

    Raises :class:`ArgumentError <qmultigraph.errors.ArgumentError>` when ``V1``
    holds ``n x m`` and ``V2`` does not hold ``m x n`` operators.
    """
    n, m = v1.shape
    if v2.shape != (m, n):
        raise ArgumentError(
            f"Cannot flip subspaces of shapes {v1.shape} and {v2.shape}."
        )
    flipped = np.einsum("iab,jdc->ijabcd", v1.basis, v2.basis)
    return OperatorSubspace.from_spanning(
        flipped.reshape(-1, n * m, n * m), (n * m, n * m)
    )
