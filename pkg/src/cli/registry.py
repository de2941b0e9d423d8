"""Register all CLI subcommands."""

from cli.commands.fmo import FmoCommand
from cli.commands.ham import HamCommand
from cli.commands.pq import PqCommand
from cli.commands.reduce import ReduceCommand
from cli.factory import CommandFactory


def register_commands():
    """Register all CLI subcommands, in the order they appear in the help text."""
    CommandFactory.register_command(PqCommand)
    CommandFactory.register_command(FmoCommand)
    CommandFactory.register_command(ReduceCommand)
    CommandFactory.register_command(HamCommand)
