import logging
from dataclasses import dataclass
from typing import Callable, Iterable, Optional, Tuple

import numpy as np
from cached_property import cached_property

from qmultigraph.errors import ArgumentError, DimensionError
from qmultigraph.tensor.linalg import adjoint
from qmultigraph.tolerances import current_tolerances

#: Number of spanning rows folded into the running decomposition at once
_CHUNK_ROWS = 512


@dataclass(frozen=True, eq=False)
class OperatorSubspace:
    """
    Linear subspace of the operators of a given shape, stored as a Hilbert-Schmidt
    orthonormal basis.

    Instances are built with :meth:`from_spanning` (or :meth:`zero`, :meth:`full`)
    rather than directly. The orthogonal projector on the vectorized space is
    computed on first access only.

    :param shape: ``(rows, cols)`` of the operators in the subspace.
    :param basis: array of shape ``(dim, rows, cols)`` holding an orthonormal basis.
    """

    shape: Tuple[int, int]
    basis: np.ndarray

    def __post_init__(self):
        basis = np.asarray(self.basis, dtype=complex)
        shape = (int(self.shape[0]), int(self.shape[1]))
        if basis.ndim != 3 or basis.shape[1:] != shape:
            raise DimensionError("OperatorSubspace", ("dim",) + shape, basis.shape)
        basis.setflags(write=False)
        object.__setattr__(self, "shape", shape)
        object.__setattr__(self, "basis", basis)

    @classmethod
    def zero(cls, rows: int, cols: Optional[int] = None) -> "OperatorSubspace":
        cols = rows if cols is None else cols
        return cls((rows, cols), np.zeros((0, rows, cols), dtype=complex))

    @classmethod
    def full(cls, rows: int, cols: Optional[int] = None) -> "OperatorSubspace":
        cols = rows if cols is None else cols
        units = np.eye(rows * cols, dtype=complex).reshape(rows * cols, rows, cols)
        return cls((rows, cols), units)

    @classmethod
    def from_spanning(
        cls,
        mats: Iterable[np.ndarray],
        shape: Optional[Tuple[int, int]] = None,
        *,
        tol: Optional[float] = None,
        reference_norm: Optional[float] = None,
    ) -> "OperatorSubspace":
        """
        Canonical orthonormal basis of the span of ``mats``.

        The basis comes from the right singular vectors of the matrix whose rows are
        ``vec(m)``; singular values at or below ``tol`` times the largest one are
        discarded. Large spanning families are folded in chunks so the full stack is
        never materialized.

        :param mats: operators, all of the same shape. May be empty.
        :param shape: (optional) operator shape; required when ``mats`` is empty.
                Defaults to the shape of the first operator.
        :param tol: (optional) relative singular value cutoff. Defaults to the active
                ``rank_cutoff`` tolerance.
        :param reference_norm: (optional) absolute floor for the largest singular
                value used by the cutoff. Useful when every candidate may be
                numerically zero. Defaults to None.

        Usage::

          >>> import numpy as np
          >>> from qmultigraph.tensor import OperatorSubspace
          >>> OperatorSubspace.from_spanning([np.eye(2), 2 * np.eye(2)]).dim
          1
        """
        if isinstance(mats, np.ndarray) and mats.ndim == 3:
            chunks = [mats]
        else:
            chunks = _batched(mats)
        return cls.from_batches(
            chunks, shape, tol=tol, reference_norm=reference_norm
        )

    @classmethod
    def from_batches(
        cls,
        batches: Iterable[np.ndarray],
        shape: Optional[Tuple[int, int]] = None,
        *,
        tol: Optional[float] = None,
        reference_norm: Optional[float] = None,
    ) -> "OperatorSubspace":
        """
        Same as :meth:`from_spanning` for an iterable of ``(count, rows, cols)``
        arrays of spanning operators.
        """
        tol = current_tolerances().rank_cutoff if tol is None else tol
        floor = 0.0 if reference_norm is None else float(reference_norm)
        sketch = None
        for batch in batches:
            batch = np.asarray(batch, dtype=complex)
            if batch.size == 0 and batch.ndim != 3:
                continue
            if shape is None:
                shape = batch.shape[1:]
            if batch.ndim != 3 or tuple(batch.shape[1:]) != tuple(shape):
                raise DimensionError("from_spanning", tuple(shape), batch.shape[1:])
            if batch.shape[0] == 0:
                continue
            rows = batch.reshape(batch.shape[0], shape[0] * shape[1])
            for start in range(0, rows.shape[0], _CHUNK_ROWS):
                block = rows[start : start + _CHUNK_ROWS]
                stacked = block if sketch is None else np.vstack([sketch, block])
                sketch = _truncated_sketch(stacked, tol, floor)
        if shape is None:
            raise ArgumentError("An empty spanning set needs an explicit shape.")
        shape = (int(shape[0]), int(shape[1]))
        if sketch is None or sketch.shape[0] == 0:
            return cls.zero(*shape)
        _, _, vh = np.linalg.svd(sketch, full_matrices=False)
        return cls(shape, vh.reshape(-1, *shape))

    @property
    def dim(self) -> int:
        return int(self.basis.shape[0])

    @property
    def ambient_dim(self) -> int:
        if self.shape[0] != self.shape[1]:
            raise DimensionError("ambient_dim", "square operators", self.shape)
        return self.shape[0]

    @property
    def vec_size(self) -> int:
        return self.shape[0] * self.shape[1]

    @cached_property
    def vec_basis(self) -> np.ndarray:
        return self.basis.reshape(self.dim, self.vec_size)

    @cached_property
    def projector(self) -> np.ndarray:
        rows = self.vec_basis
        return rows.T @ np.conj(rows)

    @property
    def equality_tolerance(self) -> float:
        return current_tolerances().subspace_equality * max(self.shape)

    def _check_compatible(self, other: "OperatorSubspace"):
        if self.shape != other.shape:
            raise ArgumentError(
                f"Subspaces live in different ambient spaces: {self.shape} and"
                f" {other.shape}."
            )

    def distance(self, other: "OperatorSubspace") -> float:
        """
        Frobenius distance between the orthogonal projectors of both subspaces.

        Computed as ``sqrt(‖(1 - P) Q‖² + ‖(1 - Q) P‖²)`` from basis residuals.
        """
        return float(
            np.hypot(self.containment_residual(other), other.containment_residual(self))
        )

    def containment_residual(self, other: "OperatorSubspace") -> float:
        """
        Frobenius norm of ``P_self P_other - P_other``, the residual of the basis of
        ``other`` outside ``self``.
        """
        self._check_compatible(other)
        if other.dim == 0:
            return 0.0
        return float(np.linalg.norm(self.residuals(other.basis)))

    def equals(self, other: "OperatorSubspace") -> bool:
        return self.distance(other) < self.equality_tolerance

    def contains(self, other: "OperatorSubspace") -> bool:
        return self.containment_residual(other) < self.equality_tolerance

    def project(self, mats: np.ndarray) -> np.ndarray:
        mats = np.asarray(mats, dtype=complex)
        rows = mats.reshape(-1, self.vec_size)
        if self.dim == 0:
            return np.zeros_like(mats)
        coefficients = rows @ np.conj(self.vec_basis).T
        return (coefficients @ self.vec_basis).reshape(mats.shape)

    def residuals(self, mats: np.ndarray) -> np.ndarray:
        """
        Frobenius distance of each operator in ``mats`` (shape ``(count, rows, cols)``)
        to the subspace.
        """
        mats = np.asarray(mats, dtype=complex).reshape(-1, *self.shape)
        outside = (mats - self.project(mats)).reshape(mats.shape[0], self.vec_size)
        return np.linalg.norm(outside, axis=1)

    def adjoint(self) -> "OperatorSubspace":
        return OperatorSubspace(
            (self.shape[1], self.shape[0]), np.conj(self.basis).transpose(0, 2, 1)
        )

    def sum(self, other: "OperatorSubspace") -> "OperatorSubspace":
        self._check_compatible(other)
        return OperatorSubspace.from_spanning(
            np.concatenate([self.basis, other.basis]), self.shape
        )

    def product(self, other: "OperatorSubspace") -> "OperatorSubspace":
        """
        Span of every product ``u @ w`` of basis elements.
        """
        if self.shape[1] != other.shape[0]:
            raise ArgumentError(
                f"Cannot multiply operators of shapes {self.shape} and {other.shape}."
            )
        shape = (self.shape[0], other.shape[1])
        return OperatorSubspace.from_batches(
            pairwise_products(self.basis, other.basis), shape
        )

    def map(
        self,
        fn: Callable[[np.ndarray], np.ndarray],
        shape: Tuple[int, int],
        *,
        reference_norm: Optional[float] = None,
    ) -> "OperatorSubspace":
        """
        Span of the images of the basis under a linear map ``fn``.
        """
        images = [fn(b) for b in self.basis]
        return OperatorSubspace.from_spanning(
            images, shape, reference_norm=reference_norm
        )

    def __repr__(self):
        return f"OperatorSubspace(shape={self.shape}, dim={self.dim})"


def pairwise_products(left: np.ndarray, right: np.ndarray) -> Iterable[np.ndarray]:
    """
    Yields batches of every product ``l @ r`` with ``l`` in ``left`` and ``r`` in
    ``right``, in ``(l, r)`` lexicographic order.
    """
    if len(left) == 0 or len(right) == 0:
        return
    rows, cols = left.shape[1], right.shape[2]
    per_left = max(1, (_CHUNK_ROWS * 4) // len(right))
    for start in range(0, len(left), per_left):
        products = np.einsum("iab,jbc->ijac", left[start : start + per_left], right)
        yield products.reshape(-1, rows, cols)


def subspace_equals(u: OperatorSubspace, w: OperatorSubspace) -> bool:
    return u.equals(w)


def subspace_contains(u: OperatorSubspace, w: OperatorSubspace) -> bool:
    return u.contains(w)


def subspace_product(u: OperatorSubspace, w: OperatorSubspace) -> OperatorSubspace:
    return u.product(w)


def subspace_adjoint(u: OperatorSubspace) -> OperatorSubspace:
    return u.adjoint()


def subspace_sum(u: OperatorSubspace, w: OperatorSubspace) -> OperatorSubspace:
    return u.sum(w)


def subspace_from_spanning(mats, tol: Optional[float] = None, shape=None):
    return OperatorSubspace.from_spanning(mats, shape, tol=tol)


def _batched(mats: Iterable[np.ndarray]) -> Iterable[np.ndarray]:
    batch = []
    for m in mats:
        m = np.asarray(m, dtype=complex)
        if batch and m.shape != batch[0].shape:
            raise DimensionError("from_spanning", batch[0].shape, m.shape)
        batch.append(m)
        if len(batch) == _CHUNK_ROWS:
            yield np.stack(batch)
            batch = []
    if batch:
        yield np.stack(batch)


def _truncated_sketch(rows: np.ndarray, tol: float, floor: float) -> np.ndarray:
    """
    ``diag(s) Vh`` restricted to the singular values above the cutoff. Its Gram
    matrix equals the one of ``rows`` up to the discarded directions.
    """
    _, s, vh = np.linalg.svd(rows, full_matrices=False)
    if s.size == 0:
        return rows[:0]
    cutoff = tol * max(float(s[0]), floor)
    keep = s > cutoff
    if not keep.all():
        dropped = int((~keep).sum())
        logging.debug(f"Discarding {dropped} direction(s) below {cutoff:.3e}.")
    return s[keep, None] * vh[keep]
