"""``ham``: count Hamiltonian sequences by brute force or through a reduction."""

import argparse
import logging

from cli.base_command import EXIT_DISAGREEMENT, EXIT_OK, BaseCommand
from cli.output import emit, emit_json
from reduction.cross_validation import Budgets, cross_validate
from reduction.fmo_reduction import count_ham_via_fmo
from reduction.front_reduction import count_ham_via_front
from reduction.graph import load_graph_file
from reduction.hamiltonian import brute_force_ham
from utils.logging_config import clear_logs, get_logs

logger = logging.getLogger(__name__)


class HamCommand(BaseCommand):
    name = "ham"
    help = "Count Hamiltonian sequences: brute, front, fmo or all (cross-validation)"

    def add_arguments(self, parser: argparse.ArgumentParser) -> None:
        parser.add_argument("graph", help="graph file, '-' for stdin")
        parser.add_argument("--method", choices=["brute", "front", "fmo", "all"], default="all")

    def run(self, config) -> int:
        instance = load_graph_file(config.inputs[0])
        if config.method == "all":
            return self._cross_validate(config, instance)

        details = {}
        if config.method == "brute":
            count = brute_force_ham(instance)
        elif config.method == "front":
            result = count_ham_via_front(instance, config.limit)
            count, details = result.value, result.to_dict()
        else:
            result = count_ham_via_fmo(instance, config.engine, config.limit)
            count, details = result.value, result.to_dict()

        if config.output_format == "json":
            emit_json({"method": config.method, "count": count, **details})
        else:
            emit(str(count))
        return EXIT_OK

    def _cross_validate(self, config, instance) -> int:
        clear_logs()
        budgets = Budgets.from_config(limit=config.limit, engine=config.engine)
        report = cross_validate(instance, budgets)
        data = report.to_dict()
        data["warnings"] = [entry["message"] for entry in get_logs(logging.WARNING)]
        emit_json(data)
        return EXIT_OK if report.agree else EXIT_DISAGREEMENT
