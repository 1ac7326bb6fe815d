from typing import Any, Dict

import numpy as np

from qmultigraph.errors import CounterexampleError
from qmultigraph.selftest.fixture import Fixture
from qmultigraph.selftest.suite_registry import SuiteRegistry
from qmultigraph.testing.random_fixtures import generator


class SuiteContext:
    """
    What a running suite sees: the run seed, the shared fixtures and a counter of
    the checks performed.

    :param seed: seed of the run.
    :param fixtures: (optional) fixtures already built during the run, by name. The
            dict is shared between the contexts of one run. Defaults to a new dict.
    """

    def __init__(self, seed: int, fixtures: Dict[str, Fixture] = None):
        self.seed = seed
        self.fixtures = {} if fixtures is None else fixtures
        self.checks = 0

    def rng(self, *stream: int) -> np.random.Generator:
        return generator(self.seed, *stream)

    def fixture(self, name: str, *, lazy: bool = False) -> Any:
        """
        The family registered as ``name`` for this run's seed, built on first use.
        """
        if name not in self.fixtures:
            builder = SuiteRegistry.fixture_builder(name)
            self.fixtures[name] = Fixture(builder, name, self.seed)
        return self.fixtures[name].get(lazy=lazy)

    def check(self, condition: bool, check: str, **details: Any):
        """
        Counts a check and raises
        :class:`CounterexampleError <qmultigraph.errors.CounterexampleError>` carrying
        ``details`` when ``condition`` is false.
        """
        self.checks += 1
        if not condition:
            raise CounterexampleError(check, details)
