"""``fmo``: count, enumerate or decide full multiset orderings."""

import argparse

from cli.base_command import EXIT_OK, BaseCommand
from cli.output import emit, emit_json, emit_lines, string_set_to_dict
from multiset.io import load_instance
from multiset.solver import count_fmo, is_c1p, solve_fmo


class FmoCommand(BaseCommand):
    name = "fmo"
    help = "Full multiset ordering: count, enum, decide"

    def add_arguments(self, parser: argparse.ArgumentParser) -> None:
        parser.add_argument("action", choices=["count", "enum", "decide"])
        parser.add_argument("instance", help="instance JSON file, '-' for stdin")

    def run(self, config) -> int:
        instance = load_instance(config.inputs[0])
        if config.action == "count":
            count = count_fmo(instance, config.engine, config.limit)
            if config.output_format == "json":
                emit_json({"count": count, "engine": config.engine})
            else:
                emit(str(count))
        elif config.action == "enum":
            solutions = solve_fmo(instance, config.engine, config.limit)
            if config.output_format == "json":
                emit_json(string_set_to_dict(solutions, "solutions"))
            else:
                emit_lines(solutions.lines())
        else:
            feasible = is_c1p(instance, config.engine, config.limit)
            if config.output_format == "json":
                emit_json({"feasible": feasible})
            else:
                emit("feasible" if feasible else "infeasible")
        return EXIT_OK
