"""Factory for looking up CLI subcommands."""

from typing import Dict, List, Type

from cli.base_command import BaseCommand


class CommandFactory:
    """Registry of subcommand classes keyed by name."""

    _commands: Dict[str, Type[BaseCommand]] = {}

    @classmethod
    def get_command(cls, name: str) -> BaseCommand:
        command_class = cls._commands.get(name)
        if command_class is None:
            raise ValueError(f"Unknown command {name!r}")
        return command_class()

    @classmethod
    def register_command(cls, command_class: Type[BaseCommand]) -> None:
        """Register a new subcommand."""
        cls._commands[command_class.name] = command_class

    @classmethod
    def commands(cls) -> List[BaseCommand]:
        return [cls._commands[name]() for name in cls._commands]
