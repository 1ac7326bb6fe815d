from unittest.mock import MagicMock

import numpy as np
import pytest

from qmultigraph.errors import CounterexampleError
from qmultigraph.selftest import Fixture, SuiteContext, SuiteRegistry
from qmultigraph.testing import reset_suite_registry


@pytest.fixture(autouse=True)
def empty_registry():
    reset_suite_registry()
    yield
    reset_suite_registry()


class TestFixture:
    def test__value__built_once(self):
        # given
        builder = MagicMock(return_value=[1, 2])
        fixture = Fixture(builder, "family", 7)

        # when
        fixture.value
        value = fixture.value

        # then
        assert value == [1, 2]
        builder.assert_called_once_with(7)

    def test__get__lazy(self):
        # given
        builder = MagicMock(return_value=[1, 2])
        fixture = Fixture(builder, "family", 7)

        # when
        proxy = fixture.get(lazy=True)

        # then
        assert not builder.called

        # and when
        length = len(proxy)

        # then
        assert length == 2
        builder.assert_called_once_with(7)


class TestSuiteContext:
    def test__check__counts_passing_checks(self):
        # given
        context = SuiteContext(0)

        # when
        context.check(True, "first")
        context.check(True, "second")

        # then
        assert context.checks == 2

    def test__check__raises_with_details(self):
        # given
        context = SuiteContext(0)

        # when
        with pytest.raises(CounterexampleError) as e:
            context.check(False, "failing", index=3)

        # then
        assert e.value.check == "failing"
        assert e.value.details == {"index": 3}
        assert context.checks == 1

    def test__fixture__shared_between_contexts(self):
        # given
        builder = MagicMock(side_effect=lambda seed: [seed])
        SuiteRegistry.register_fixture("family", builder)
        fixtures = {}

        # when
        first = SuiteContext(5, fixtures).fixture("family")
        second = SuiteContext(5, fixtures).fixture("family")

        # then
        assert first == second == [5]
        builder.assert_called_once_with(5)

    def test__fixture__lazy_until_iterated(self):
        # given
        builder = MagicMock(side_effect=lambda seed: [seed, seed + 1])
        SuiteRegistry.register_fixture("family", builder)
        context = SuiteContext(2)

        # when
        family = context.fixture("family", lazy=True)

        # then
        assert not builder.called

        # and when
        values = list(family)

        # then
        assert values == [2, 3]
        builder.assert_called_once_with(2)

    def test__rng__depends_on_seed_and_stream(self):
        # given
        context = SuiteContext(3)

        # then
        assert np.array_equal(context.rng(1).random(4), SuiteContext(3).rng(1).random(4))
        assert not np.array_equal(context.rng(1).random(4), context.rng(2).random(4))
