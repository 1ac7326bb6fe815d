import argparse
from dataclasses import dataclass
from pathlib import Path
from typing import Dict, Optional, Tuple

from qmultigraph.constants import DEFAULT_SEED, TOLERANCE_OVERRIDE_SEPARATOR
from qmultigraph.tolerances import Tolerances

#: Output formats accepted by ``--format``
OUTPUT_FORMATS = ("json", "dot")


@dataclass(frozen=True)
class RunConfig:
    """
    Everything a command run depends on. Identical configurations and inputs give
    identical output bytes.

    :param command: command name, e.g. ``check-cp``.
    :param input_path: (optional) JSON document to read. Defaults to None.
    :param subcommand: (optional) subcommand of ``relation``. Defaults to None.
    :param seed: (optional) seed of the randomized fixtures. Defaults to
            :const:`qmultigraph.constants.DEFAULT_SEED`.
    :param tolerances: (optional) ``(name, value)`` overrides, sorted by name.
            Defaults to none.
    :param output_format: (optional) ``json`` or ``dot``. Defaults to ``json``.
    :param output_path: (optional) file receiving the output. Defaults to stdout.
    :param groups: (optional) self-test groups to run. Defaults to all of them.
    :param verbose: (optional) log debug messages. Defaults to False.
    """

    command: str
    input_path: Optional[Path] = None
    subcommand: Optional[str] = None
    seed: int = DEFAULT_SEED
    tolerances: Tuple[Tuple[str, float], ...] = ()
    output_format: str = "json"
    output_path: Optional[Path] = None
    groups: Optional[Tuple[str, ...]] = None
    verbose: bool = False

    def tolerance_overrides(self) -> Dict[str, float]:
        return dict(self.tolerances)

    @classmethod
    def from_namespace(cls, args: argparse.Namespace) -> "RunConfig":
        return cls(
            command=args.command,
            input_path=getattr(args, "input", None),
            subcommand=getattr(args, "subcommand", None),
            seed=args.seed,
            tolerances=tuple(sorted(dict(args.tol or []).items())),
            output_format=args.format,
            output_path=args.output,
            groups=tuple(args.group) if getattr(args, "group", None) else None,
            verbose=args.verbose,
        )


def parse_tolerance(text: str) -> Tuple[str, float]:
    """
    ``argparse`` type of ``--tol NAME=VALUE``.
    """
    name, separator, value = text.partition(TOLERANCE_OVERRIDE_SEPARATOR)
    name = name.strip().lower()
    if not separator:
        raise argparse.ArgumentTypeError(f"expected NAME=VALUE, got '{text}'")
    if name.startswith("tol_"):
        name = name[len("tol_"):]
    if name not in Tolerances.names():
        raise argparse.ArgumentTypeError(
            f"unknown tolerance '{name}', expected one of"
            f" {', '.join(Tolerances.names())}"
        )
    try:
        number = float(value)
    except ValueError:
        raise argparse.ArgumentTypeError(f"tolerance '{name}' needs a number")
    if not number >= 0:
        raise argparse.ArgumentTypeError(f"tolerance '{name}' must be non-negative")
    return name, number


def non_negative_int(text: str) -> int:
    try:
        number = int(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected an integer, got '{text}'")
    if number < 0:
        raise argparse.ArgumentTypeError("seed must be non-negative")
    return number
