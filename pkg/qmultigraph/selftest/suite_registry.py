import importlib
import logging
import sys
from typing import Any, Callable, Dict, Iterable, List, Optional

from qmultigraph.errors import ArgumentError
from qmultigraph.selftest.suite import Suite

#: Package whose import registers the built-in suites and fixtures
SUITES_PACKAGE = "qmultigraph.selftest.suites"


class SuiteRegistry:
    """
    SuiteRegistry globally keeps the registered self-test suites and the builders of
    the seeded fixtures they share.

    Suites and fixtures are registered through the
    :func:`selftest_suite <qmultigraph.selftest.selftest_suite>` and
    :func:`selftest_fixture <qmultigraph.selftest.selftest_fixture>` decorators. The
    built-in ones are registered when :meth:`load` imports their package.

    This class is not meant to be instantiated and will raise an error if
    instantiation is attempted.
    """

    SUITES: Dict[str, Suite] = {}
    FIXTURES: Dict[str, Callable[[int], Any]] = {}
    LOADED_PACKAGES: List[str] = []

    def __new__(cls):
        raise NotImplementedError("SuiteRegistry must not be instantiated")

    @classmethod
    def load(cls, package: str = SUITES_PACKAGE):
        """
        Imports the modules listed in the ``__all__`` of ``package`` so their
        decorators register suites and fixtures. Modules imported before are
        reloaded, which registers them again after :meth:`clear`. A package is
        loaded at most once until then.
        """
        if package in cls.LOADED_PACKAGES:
            return
        module = importlib.import_module(package)
        for name in getattr(module, "__all__", ()):
            qualified = f"{package}.{name}"
            if qualified in sys.modules:
                importlib.reload(sys.modules[qualified])
            else:
                importlib.import_module(qualified)
        cls.LOADED_PACKAGES.append(package)
        logging.debug(f"Loaded self-test suites from '{package}'.")

    @classmethod
    def register_suite(cls, suite: Suite):
        if suite.name in cls.SUITES and cls.SUITES[suite.name] != suite:
            logging.warning(f"Replacing the registered self-test suite '{suite.name}'.")
        cls.SUITES[suite.name] = suite

    @classmethod
    def register_fixture(cls, name: str, builder: Callable[[int], Any]):
        cls.FIXTURES[name] = builder

    @classmethod
    def fixture_builder(cls, name: str) -> Callable[[int], Any]:
        if name not in cls.FIXTURES:
            raise ArgumentError(f"No self-test fixture registered as '{name}'.")
        return cls.FIXTURES[name]

    @classmethod
    def suites(cls, groups: Optional[Iterable[str]] = None) -> List[Suite]:
        """
        Registered suites, in run order, optionally restricted to some groups.

        Raises :class:`ArgumentError <qmultigraph.errors.ArgumentError>` when a
        requested group has no suite.
        """
        suites = sorted(cls.SUITES.values(), key=lambda s: (s.order, s.name))
        if groups is None:
            return suites
        groups = list(groups)
        unknown = sorted(set(groups) - {s.group for s in suites})
        if unknown:
            raise ArgumentError(f"Unknown self-test group(s): {', '.join(unknown)}.")
        return [s for s in suites if s.group in groups]

    @classmethod
    def clear(cls):
        cls.SUITES = {}
        cls.FIXTURES = {}
        cls.LOADED_PACKAGES = []
