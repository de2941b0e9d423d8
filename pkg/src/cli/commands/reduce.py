"""``reduce``: build the frontier trees or the ordering instance of a graph."""

import argparse
import logging
from pathlib import Path
from typing import Any, Dict

from cli.base_command import EXIT_OK, BaseCommand
from cli.output import emit, emit_json
from multiset.io import dumps_instance, save_instance
from pqtree.codec import format_tree, save_tree
from reduction.fmo_reduction import alpha_product, build_fmo_instance
from reduction.front_reduction import build_front_trees, build_raw_front_trees
from reduction.graph import load_graph_file

logger = logging.getLogger(__name__)


class ReduceCommand(BaseCommand):
    name = "reduce"
    help = "Build the front trees or the FMO instance of a graph file"

    def add_arguments(self, parser: argparse.ArgumentParser) -> None:
        parser.add_argument("route", choices=["front", "fmo"])
        parser.add_argument("graph", help="graph file, '-' for stdin")

    def run(self, config) -> int:
        instance = load_graph_file(config.inputs[0])
        graph = instance.graph
        summary: Dict[str, Any] = {
            "route": config.action,
            "n": graph.vertex_count,
            "m": len(graph.edges),
            "p": instance.excess,
        }
        if config.action == "front":
            reduction = build_front_trees(instance)
            raw = build_raw_front_trees(instance)
            summary["t_n_leaves"] = sorted(raw.t_n.root.leaf_labels(), key=int)
            summary["t_e_children"] = len(raw.t_e.root.children)
            summary["leaves"] = reduction.t_e.leaf_count
            if config.out:
                config.out.mkdir(parents=True, exist_ok=True)
                summary["files"] = [
                    str(save_tree(tree, Path(config.out) / f"{name}.pq"))
                    for name, tree in reduction.trees().items()
                ]
            elif config.output_format == "text":
                for name, tree in reduction.trees().items():
                    emit(f"{name}: {format_tree(tree)}")
        else:
            reduction = build_fmo_instance(instance)
            summary["universe_size"] = reduction.instance.universe.size
            summary["family_size"] = len(reduction.instance.family)
            summary["a"] = alpha_product(instance)
            if config.out:
                config.out.mkdir(parents=True, exist_ok=True)
                summary["files"] = [str(save_instance(reduction.instance, Path(config.out) / "instance.json"))]
            elif config.output_format == "text":
                emit(dumps_instance(reduction.instance))

        if config.output_format == "json":
            emit_json(summary)
        else:
            for key, value in summary.items():
                if isinstance(value, list):
                    value = " ".join(str(item) for item in value)
                emit(f"{key}: {value}")
        return EXIT_OK
