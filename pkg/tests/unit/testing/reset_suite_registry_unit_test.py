from qmultigraph.selftest import Suite, SuiteRegistry
from qmultigraph.testing import reset_suite_registry


class TestResetSuiteRegistry:
    def test__reset_suite_registry(self):
        # given
        SuiteRegistry.register_suite(Suite(lambda context: None, "a", "default"))
        SuiteRegistry.register_fixture("family", lambda seed: [seed])
        SuiteRegistry.LOADED_PACKAGES = ["some.package"]

        # when
        reset_suite_registry()

        # then
        assert SuiteRegistry.SUITES == {}
        assert SuiteRegistry.FIXTURES == {}
        assert SuiteRegistry.LOADED_PACKAGES == []
