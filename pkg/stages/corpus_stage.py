"""
Corpus Stage - assembles the graph stream a verification run checks.
"""

import itertools
from pathlib import Path
from typing import Any, Dict, Iterator, List

from pydantic import ValidationError

import graph_io
from graph_core import Graph, GraphError
from state import RunConfig
from .base_stage import BaseStage


def build_corpus(config: RunConfig) -> Iterator[Graph]:
    """Input files, then the named family, then enumerations, then random samples.

    Files are opened lazily; read errors surface while the corpus is consumed.
    """
    sources: List[Iterator[Graph]] = []
    for path in config.inputs:
        if not Path(path).is_file():
            raise FileNotFoundError(f"input file not found: {path}")
        sources.append(graph for _, graph in graph_io.read_graphs(path))
    if config.family:
        sources.append(iter([graph_io.generate_family(config.family, config.params)]))
    if config.enumerate_min_n is not None:
        sources.append(graph_io.enumerate_range(
            config.enumerate_min_n,
            config.enumerate_max_n,
            connected_only=config.connected_only,
            dedup=config.dedup,
        ))
    if config.random_n is not None and config.random_count:
        sources.append(graph_io.random_corpus(
            config.random_n, config.random_p, config.random_count, config.seed
        ))
    if not sources:
        raise GraphError("no corpus given: use --input, --family, --enumerate or --random")
    return itertools.chain.from_iterable(sources)


class CorpusStage(BaseStage):
    """Stage responsible for turning the run configuration into a graph stream."""

    def __init__(self):
        super().__init__("corpus")

    def execute(self, state: Dict[str, Any]) -> Dict[str, Any]:
        try:
            self.log_execution(state, "corpus assembly")
            state["corpus"] = build_corpus(state["config"])
            state["next_stage"] = "checks"
            self.mark_completed(state)
        except (GraphError, graph_io.GraphFormatError, graph_io.EnumerationCapError, ValidationError, OSError) as e:
            self.handle_error(state, str(e))
        return state
