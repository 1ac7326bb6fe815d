"""
Built-in self-test suites, one per verified property family. Importing a module
registers its suites and fixtures.
"""

__all__ = [
    "fixtures",
    "channel_suites",
    "confusability_suites",
    "multirelation_suites",
    "decomposable_suites",
]
