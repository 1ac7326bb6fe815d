"""
Seeded self-test campaign verifying the library's properties on random inputs.

Suites are functions decorated with :func:`selftest_suite`; they share seeded input
families declared with :func:`selftest_fixture`. :func:`run_selftest` runs the
registered suites and returns a :class:`SelftestReport`.
"""

from qmultigraph.selftest.fixture import Fixture
from qmultigraph.selftest.runner import (
    SelftestReport,
    SuiteResult,
    run_selftest,
    run_suite,
)
from qmultigraph.selftest.selftest_fixture_decorator import selftest_fixture
from qmultigraph.selftest.selftest_suite_decorator import selftest_suite
from qmultigraph.selftest.suite import Suite
from qmultigraph.selftest.suite_context import SuiteContext
from qmultigraph.selftest.suite_registry import SuiteRegistry

__all__ = [
    "Fixture",
    "SelftestReport",
    "Suite",
    "SuiteContext",
    "SuiteRegistry",
    "SuiteResult",
    "run_selftest",
    "run_suite",
    "selftest_fixture",
    "selftest_suite",
]
