"""Base class for CLI subcommands."""

import argparse
from abc import ABC, abstractmethod
from typing import TYPE_CHECKING

if TYPE_CHECKING:
    from cli.app import CliConfig

EXIT_OK = 0
EXIT_INEQUIVALENT = 1
EXIT_INPUT_ERROR = 2
EXIT_BUDGET = 3
EXIT_DISAGREEMENT = 4


class BaseCommand(ABC):
    """A subcommand: declares its arguments and runs against a CliConfig."""

    name: str = ""
    help: str = ""

    @abstractmethod
    def add_arguments(self, parser: argparse.ArgumentParser) -> None:
        """Add the subcommand's own arguments."""
        pass

    @abstractmethod
    def run(self, config: "CliConfig") -> int:
        """Execute the command and return its exit status."""
        pass
