"""
``qmultigraph`` command line.

Reports go to stdout (or ``--output``) as JSON with sorted keys, the classical
multigraph optionally as DOT. Logs and error messages go to stderr. Exit codes are 0
for a successful run, including negative results such as an invalid relation, 1 for
a failing self-test or an internal consistency failure and 2 for invalid input.

Usage::

  $ qmultigraph check-cp --input channel.json
  $ qmultigraph classical --input p.json --format dot
  $ qmultigraph relation check --input relation.json
  $ qmultigraph selftest --seed 42 --tol psd=1e-12
"""

import argparse
import json
import logging
import sys
from pathlib import Path
from typing import List, Optional

from qmultigraph.cli.commands import (
    COMMANDS,
    EXIT_FAILURE,
    EXIT_INPUT_ERROR,
    RELATION_SUBCOMMANDS,
)
from qmultigraph.cli.run_config import (
    OUTPUT_FORMATS,
    RunConfig,
    non_negative_int,
    parse_tolerance,
)
from qmultigraph.constants import DEFAULT_SEED
from qmultigraph.errors import ConsistencyError, SynthesisError, UnsupportedCaseError
from qmultigraph.tolerances import tolerance_overrides

HELP = {
    "check-cp": "complete positivity and trace preservation of a channel",
    "multigraph": "confusability multigraph of a channel",
    "classical": "classical confusability multigraph of a stochastic matrix",
    "relation": "verify a multi-relation, its indicators or its adjacency operators",
    "decompose": "decompose a multi-relation as sigma(V1 x V2)",
    "synthesize": "CP map realizing a symmetric decomposable multi-relation",
    "roundtrip": "synthesize a map and compare its multigraph with the relation",
    "selftest": "run the seeded self-test campaign",
}


def _common_arguments() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--input", type=Path, help="JSON document to read")
    common.add_argument(
        "--seed",
        type=non_negative_int,
        default=DEFAULT_SEED,
        help="seed of every randomized fixture",
    )
    common.add_argument(
        "--tol",
        action="append",
        type=parse_tolerance,
        metavar="NAME=VALUE",
        help="override a tolerance, repeatable",
    )
    common.add_argument("--format", choices=OUTPUT_FORMATS, default="json")
    common.add_argument("--output", type=Path, help="output file, stdout by default")
    common.add_argument("--verbose", action="store_true", help="log debug messages")
    return common


def _parse_args(argv: Optional[List[str]] = None) -> argparse.Namespace:
    parser = argparse.ArgumentParser(
        prog="qmultigraph",
        description="Confusability multigraphs of quantum channels.",
    )
    common = _common_arguments()
    commands = parser.add_subparsers(dest="command", metavar="COMMAND", required=True)
    for name in COMMANDS:
        command = commands.add_parser(name, parents=[common], help=HELP[name])
        if name == "relation":
            command.add_argument("subcommand", choices=tuple(RELATION_SUBCOMMANDS))
        if name == "selftest":
            command.add_argument(
                "--group", action="append", help="run only this group, repeatable"
            )
    return parser.parse_args(argv)


def _write_error(error: Exception):
    message = {"error": type(error).__name__, "message": str(error)}
    sys.stderr.write(json.dumps(message, sort_keys=True) + "\n")


def _write_output(config: RunConfig, text: str):
    if config.output_path is None:
        sys.stdout.write(text)
        sys.stdout.flush()
        return
    config.output_path.write_text(text, encoding="utf-8")
    logging.info(f"Wrote {config.command} output to '{config.output_path}'.")


def main(argv: Optional[List[str]] = None) -> int:
    config = RunConfig.from_namespace(_parse_args(argv))
    logging.basicConfig(
        stream=sys.stderr,
        level=logging.DEBUG if config.verbose else logging.INFO,
        format="%(levelname)s %(message)s",
    )
    try:
        with tolerance_overrides(**config.tolerance_overrides()):
            text, code = COMMANDS[config.command](config)
        _write_output(config, text)
    except (ConsistencyError, SynthesisError) as e:
        _write_error(e)
        return EXIT_FAILURE
    except (ValueError, OSError, UnsupportedCaseError) as e:
        _write_error(e)
        return EXIT_INPUT_ERROR
    return code


if __name__ == "__main__":
    raise SystemExit(main())
