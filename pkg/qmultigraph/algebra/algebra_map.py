from dataclasses import dataclass
from typing import Callable, Dict

import numpy as np
from cached_property import cached_property

from qmultigraph.algebra.block_algebra import BlockAlgebra, UnitKey
from qmultigraph.errors import ArgumentError, DimensionError
from qmultigraph.tensor import hs_inner


@dataclass(frozen=True, eq=False)
class AlgebraMap:
    """
    Linear map between block algebras, given by the images of the matrix units of its
    domain.

    :param in_alg: domain algebra.
    :param out_alg: codomain algebra.
    :param images: image of every matrix unit ``(a, i, j)`` of ``in_alg``, as a
            matrix on the total space of ``out_alg``.
    """

    in_alg: BlockAlgebra
    out_alg: BlockAlgebra
    images: Dict[UnitKey, np.ndarray]

    def __post_init__(self):
        expected = set(self.in_alg.unit_keys())
        if set(self.images) != expected:
            missing = sorted(expected - set(self.images))
            extra = sorted(set(self.images) - expected)
            raise ArgumentError(
                f"Unit images do not match the domain: missing {missing}, extra {extra}."
            )
        shape = self.out_alg.total_dim_shape
        images = {}
        for key in self.in_alg.unit_keys():
            image = np.asarray(self.images[key], dtype=complex)
            if image.shape != shape:
                raise DimensionError(f"unit image {key}", shape, image.shape)
            images[key] = image
        object.__setattr__(self, "images", images)

    @classmethod
    def from_function(
        cls,
        in_alg: BlockAlgebra,
        out_alg: BlockAlgebra,
        fn: Callable[[np.ndarray], np.ndarray],
    ) -> "AlgebraMap":
        return cls(
            in_alg,
            out_alg,
            {key: fn(in_alg.matrix_unit(*key)) for key in in_alg.unit_keys()},
        )

    @classmethod
    def identity(cls, alg: BlockAlgebra) -> "AlgebraMap":
        return cls.from_function(alg, alg, lambda x: x)

    def apply(self, x: np.ndarray) -> np.ndarray:
        x = np.asarray(x, dtype=complex)
        result = np.zeros(self.out_alg.total_dim_shape, dtype=complex)
        for (a, i, j), image in self.images.items():
            p = self.in_alg.global_index(a, i)
            q = self.in_alg.global_index(a, j)
            coefficient = x[p, q]
            if coefficient != 0:
                result += coefficient * image
        return result

    def __call__(self, x: np.ndarray) -> np.ndarray:
        return self.apply(x)

    @cached_property
    def matrix(self) -> np.ndarray:
        """
        Matrix of the map in the matrix-unit bases, rows indexed by the units of
        ``out_alg`` and columns by the units of ``in_alg``, both in lexicographic
        order.
        """
        out_keys = list(self.out_alg.unit_keys())
        columns = []
        for key in self.in_alg.unit_keys():
            image = self.images[key]
            columns.append(
                [
                    image[
                        self.out_alg.global_index(b, k),
                        self.out_alg.global_index(b, l),
                    ]
                    for b, k, l in out_keys
                ]
            )
        return np.array(columns, dtype=complex).T.reshape(
            len(out_keys), self.in_alg.dimension
        )

    def compose(self, inner: "AlgebraMap") -> "AlgebraMap":
        """
        ``self ∘ inner``.
        """
        if inner.out_alg != self.in_alg:
            raise ArgumentError("Cannot compose maps with mismatched algebras.")
        return AlgebraMap.from_function(
            inner.in_alg, self.out_alg, lambda x: self.apply(inner.apply(x))
        )

    def hs_adjoint(self) -> "AlgebraMap":
        """
        The map ``Φ*`` with ``⟨Φ*(y), x⟩ = ⟨y, Φ(x)⟩`` for ``x`` in the domain and
        ``y`` in the codomain.
        """
        in_keys = list(self.in_alg.unit_keys())

        def adjoint_image(y: np.ndarray) -> np.ndarray:
            result = np.zeros(self.in_alg.total_dim_shape, dtype=complex)
            for key in in_keys:
                result += hs_inner(self.images[key], y) * self.in_alg.matrix_unit(*key)
            return result

        return AlgebraMap.from_function(self.out_alg, self.in_alg, adjoint_image)

    def distance(self, other: "AlgebraMap") -> float:
        """
        Largest Frobenius distance between the unit images of two maps.
        """
        if other.in_alg != self.in_alg or other.out_alg != self.out_alg:
            raise ArgumentError("Cannot compare maps with mismatched algebras.")
        return max(
            (
                float(np.linalg.norm(self.images[key] - other.images[key]))
                for key in self.images
            ),
            default=0.0,
        )

    def is_star_preserving(self, tolerance: float) -> bool:
        for a, i, j in self.in_alg.unit_keys():
            if (
                np.linalg.norm(self.images[(a, i, j)].conj().T - self.images[(a, j, i)])
                > tolerance
            ):
                return False
        return True

    def __add__(self, other: "AlgebraMap") -> "AlgebraMap":
        if other.in_alg != self.in_alg or other.out_alg != self.out_alg:
            raise ArgumentError("Cannot add maps with mismatched algebras.")
        return AlgebraMap(
            self.in_alg,
            self.out_alg,
            {key: self.images[key] + other.images[key] for key in self.images},
        )
