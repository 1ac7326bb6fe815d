from typing import Callable, TypeVar

from qmultigraph.selftest.suite import Suite
from qmultigraph.selftest.suite_registry import SuiteRegistry

T = TypeVar("T", bound=Callable)


def selftest_suite(
    fn: T = None,
    *,
    name: str = None,
    group: str = "default",
    order: int = 0,
) -> T:
    """
    Function decorator registering a self-test suite in the
    :class:`SuiteRegistry <qmultigraph.selftest.SuiteRegistry>`.

    The decorated function receives a
    :class:`SuiteContext <qmultigraph.selftest.SuiteContext>` and fails by raising,
    usually through :meth:`SuiteContext.check`.

    :param fn: (cannot be explicitly passed) the decorated function.
    :param name: (optional) name of the suite. Defaults to the function name.
    :param group: (optional) group of the suite. Defaults to ``"default"``.
    :param order: (optional) position of the suite in a run. Defaults to 0.

    Usage::

      >>> from qmultigraph.selftest import selftest_suite
      >>>
      >>> @selftest_suite(group="channel")
      ... def identity_is_cp(context):
      ...     ...
    """

    def decorator(runner: T) -> T:
        SuiteRegistry.register_suite(
            Suite(runner, name or runner.__name__, group, order)
        )
        return runner

    return decorator(fn) if fn is not None else decorator
