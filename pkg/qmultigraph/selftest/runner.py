import logging
import time
from dataclasses import dataclass
from typing import Any, Dict, Iterable, Optional, Tuple

from parameters_validation import non_negative, validate_parameters

from qmultigraph.errors import CounterexampleError
from qmultigraph.selftest.suite import Suite
from qmultigraph.selftest.suite_context import SuiteContext
from qmultigraph.selftest.suite_registry import SuiteRegistry


@dataclass(frozen=True)
class SuiteResult:
    """
    Outcome of one suite.

    :param name: suite name.
    :param group: suite group.
    :param passed: whether every check passed.
    :param checks: number of checks performed before the suite ended.
    :param seconds: wall-clock duration, excluded from the report document.
    :param counterexample: (optional) description of the first failure. Defaults to
            None.
    """

    name: str
    group: str
    passed: bool
    checks: int
    seconds: float
    counterexample: Optional[Dict[str, Any]] = None

    def to_document(self) -> Dict[str, Any]:
        return {
            "name": self.name,
            "group": self.group,
            "passed": self.passed,
            "checks": self.checks,
        }


@dataclass(frozen=True)
class SelftestReport:
    """
    Outcome of a self-test run. Its document depends only on the seed, the suites
    and the active tolerances, never on timing.
    """

    seed: int
    results: Tuple[SuiteResult, ...]

    @property
    def passed(self) -> bool:
        return all(r.passed for r in self.results)

    @property
    def first_counterexample(self) -> Optional[Dict[str, Any]]:
        for result in self.results:
            if not result.passed:
                return result.counterexample
        return None

    def to_document(self) -> Dict[str, Any]:
        return {
            "seed": self.seed,
            "passed": self.passed,
            "suites": [r.to_document() for r in self.results],
            "counterexample": self.first_counterexample,
        }


def run_suite(suite: Suite, context: SuiteContext) -> SuiteResult:
    """
    Runs one suite. Any exception ends the suite as failed; counterexamples keep
    their details and other errors are described by type and message.
    """
    start = time.perf_counter()
    counterexample = None
    try:
        suite.runner(context)
    except CounterexampleError as e:
        counterexample = {"suite": suite.name, "check": e.check, "details": e.details}
    except Exception as e:
        counterexample = {
            "suite": suite.name,
            "check": "exception",
            "details": {"type": type(e).__name__, "message": str(e)},
        }
    seconds = time.perf_counter() - start
    passed = counterexample is None
    log = logging.info if passed else logging.warning
    log(
        f"Suite '{suite.name}' {'passed' if passed else 'FAILED'}:"
        f" {context.checks} check(s) in {seconds:.3f}s."
    )
    return SuiteResult(
        suite.name, suite.group, passed, context.checks, seconds, counterexample
    )


@validate_parameters
def run_selftest(
    seed: non_negative(int), groups: Optional[Iterable[str]] = None
) -> SelftestReport:
    """
    Runs the registered self-test suites with every fixture seeded by ``seed``.

    Raises :class:`ArgumentError <qmultigraph.errors.ArgumentError>` for unknown
    groups.

    :param seed: non-negative seed determining every random fixture.
    :param groups: (optional) groups to run. Defaults to all of them.

    Usage::

      >>> from qmultigraph.selftest import run_selftest
      >>> run_selftest(0, ["channel"]).passed
      True
    """
    SuiteRegistry.load()
    fixtures = {}
    results = tuple(
        run_suite(suite, SuiteContext(seed, fixtures))
        for suite in SuiteRegistry.suites(groups)
    )
    report = SelftestReport(seed, results)
    logging.info(
        f"Self-test with seed {seed}: {sum(r.passed for r in results)}/{len(results)}"
        f" suite(s) passed."
    )
    return report
