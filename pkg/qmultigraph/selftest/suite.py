from dataclasses import dataclass, field
from typing import Callable


@dataclass(frozen=True)
class Suite:
    """
    Suite is the container in which a registered self-test is stored in the
    :class:`SuiteRegistry <qmultigraph.selftest.SuiteRegistry>`.

    :param runner: callable receiving a
            :class:`SuiteContext <qmultigraph.selftest.SuiteContext>`. It returns
            nothing on success and raises on failure.
    :param name: unique name of the suite.
    :param group: group the suite belongs to, used to select suites.
    :param order: position of the suite in a run; suites run in increasing order.
    """

    runner: Callable = field(compare=False)
    name: str
    group: str
    order: int = 0
