from dataclasses import dataclass, field
from typing import Any, Callable

from cached_property import cached_property
from lazy_object_proxy import Proxy


@dataclass(frozen=True)
class Fixture:
    """
    Seeded family of inputs shared by several suites. The family is built on first
    use and at most once per fixture.

    :param builder: callable taking the seed and returning the family.
    :param name: name the builder was registered with.
    :param seed: seed handed to the builder.
    """

    builder: Callable[[int], Any] = field(compare=False)
    name: str
    seed: int

    @cached_property
    def value(self):
        return self.builder(self.seed)

    def get(self, *, lazy: bool = False):
        if lazy:
            return Proxy(lambda: self.value)
        return self.value
