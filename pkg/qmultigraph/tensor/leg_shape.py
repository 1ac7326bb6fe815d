from dataclasses import dataclass
from typing import Sequence, Tuple

import numpy as np

from qmultigraph.errors import ArgumentError


@dataclass(frozen=True)
class LegShape:
    """
    Factorization of a vector space into an ordered list of tensor legs.

    :param dims: dimension of each leg, each at least one.

    Usage::

      >>> from qmultigraph.tensor import LegShape
      >>> LegShape.of(2, 3).size
      6
    """

    dims: Tuple[int, ...]

    def __post_init__(self):
        dims = tuple(int(d) for d in self.dims)
        if not dims or any(d < 1 for d in dims):
            raise ArgumentError(f"Leg dimensions must be positive, got {self.dims}.")
        object.__setattr__(self, "dims", dims)

    @classmethod
    def of(cls, *dims: int) -> "LegShape":
        return cls(tuple(dims))

    @classmethod
    def coerce(cls, shape) -> "LegShape":
        if isinstance(shape, LegShape):
            return shape
        return cls(tuple(shape))

    @property
    def size(self) -> int:
        return int(np.prod(self.dims))

    @property
    def legs(self) -> int:
        return len(self.dims)

    def check_leg(self, which: int) -> int:
        if not isinstance(which, (int, np.integer)) or not 0 <= which < self.legs:
            raise ArgumentError(
                f"Leg index {which} out of range for a {self.legs}-leg shape."
            )
        return int(which)

    def check_permutation(self, perm: Sequence[int]) -> Tuple[int, ...]:
        perm = tuple(int(p) for p in perm)
        if sorted(perm) != list(range(self.legs)):
            raise ArgumentError(
                f"{perm} is not a permutation of the {self.legs} legs of {self.dims}."
            )
        return perm

    def permuted(self, perm: Sequence[int]) -> "LegShape":
        perm = self.check_permutation(perm)
        return LegShape(tuple(self.dims[p] for p in perm))

    def without(self, which: int) -> "LegShape":
        which = self.check_leg(which)
        return LegShape(self.dims[:which] + self.dims[which + 1 :])
