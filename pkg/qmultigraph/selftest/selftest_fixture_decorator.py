from typing import Callable, TypeVar

from qmultigraph.selftest.suite_registry import SuiteRegistry

T = TypeVar("T", bound=Callable)


def selftest_fixture(fn: T = None, *, name: str = None) -> T:
    """
    Function decorator registering a seeded fixture builder shared by self-test
    suites. The builder takes the run seed and returns the fixture family.

    :param fn: (cannot be explicitly passed) the decorated function.
    :param name: (optional) name of the fixture. Defaults to the function name.

    Usage::

      >>> from qmultigraph.selftest import selftest_fixture
      >>>
      >>> @selftest_fixture
      ... def small_channels(seed):
      ...     ...
    """

    def decorator(builder: T) -> T:
        SuiteRegistry.register_fixture(name or builder.__name__, builder)
        return builder

    return decorator(fn) if fn is not None else decorator
