"""
Command line front end: reads channel and relation documents, runs a computation and
writes a deterministic JSON or DOT report.
"""

from qmultigraph.cli.commands import COMMANDS, RELATION_SUBCOMMANDS
from qmultigraph.cli.main import main
from qmultigraph.cli.run_config import RunConfig, parse_tolerance

__all__ = [
    "COMMANDS",
    "RELATION_SUBCOMMANDS",
    "RunConfig",
    "main",
    "parse_tolerance",
]
