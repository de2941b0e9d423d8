"""``pq``: count, enumerate, canonicalize and compare PQ-trees."""

import argparse
import logging

from cli.base_command import EXIT_INEQUIVALENT, EXIT_INPUT_ERROR, EXIT_OK, BaseCommand
from cli.output import emit, emit_json, emit_lines, string_set_to_dict
from core.exceptions import EnumerationBudgetExceeded
from pqtree.canonical import canonicalize
from pqtree.codec import format_tree, load_tree, node_to_dict, tree_to_json
from pqtree.equivalence import equivalent
from pqtree.frontier import count_frontiers, enumerate_frontiers

logger = logging.getLogger(__name__)


class PqCommand(BaseCommand):
    name = "pq"
    help = "PQ-tree operations: count, enum, canon, equiv"

    def add_arguments(self, parser: argparse.ArgumentParser) -> None:
        parser.add_argument("action", choices=["count", "enum", "canon", "equiv"])
        parser.add_argument("trees", nargs="+", help="tree files (s-expression or JSON), '-' for stdin")

    def run(self, config) -> int:
        expected = 2 if config.action == "equiv" else 1
        if len(config.inputs) != expected:
            logger.error(f"pq {config.action} takes {expected} tree file(s), got {len(config.inputs)}")
            return EXIT_INPUT_ERROR
        trees = [load_tree(path) for path in config.inputs]
        return getattr(self, f"_{config.action}")(config, *trees)

    def _count(self, config, tree) -> int:
        count, method = count_frontiers(canonicalize(tree), config.limit)
        if config.output_format == "json":
            emit_json({"count": count, "method": method})
        else:
            emit(str(count))
            emit(f"method: {method}")
        return EXIT_OK

    def _enum(self, config, tree) -> int:
        frontiers = enumerate_frontiers(canonicalize(tree), config.limit)
        if not frontiers.complete:
            raise EnumerationBudgetExceeded(config.limit, "frontier enumeration")
        if config.output_format == "json":
            emit_json(string_set_to_dict(frontiers, "frontiers"))
        else:
            emit_lines(frontiers.lines())
        return EXIT_OK

    def _canon(self, config, tree) -> int:
        canonical = canonicalize(tree)
        if config.output_format == "json":
            emit(tree_to_json(canonical))
        else:
            emit(format_tree(canonical))
        return EXIT_OK

    def _equiv(self, config, first, second) -> int:
        same = equivalent(first, second)
        if config.output_format == "json":
            emit_json({
                "equivalent": same,
                "canonical": [node_to_dict(canonicalize(first).root), node_to_dict(canonicalize(second).root)],
            })
        else:
            emit("equivalent" if same else "inequivalent")
        return EXIT_OK if same else EXIT_INEQUIVALENT
