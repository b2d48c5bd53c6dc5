"""
Check Stage - runs the bound checkers over the corpus.
"""

import logging
from typing import Any, Dict, Optional, Sequence

from bounds import BaseBound, verify_corpus
from graph_core import GraphError
from graph_io import EnumerationCapError, GraphFormatError
from settings import RuntimeSettings
from .base_stage import BaseStage

logger = logging.getLogger(__name__)


class CheckStage(BaseStage):
    """Stage responsible for the (bound, graph, alpha) sweep."""

    def __init__(self, settings: RuntimeSettings, checkers: Optional[Sequence[BaseBound]] = None):
        super().__init__("checks")
        self.settings = settings
        self.checkers = checkers

    def execute(self, state: Dict[str, Any]) -> Dict[str, Any]:
        config = state["config"]
        try:
            self.log_execution(state, f"bound sweep over alphas {list(config.alphas.values)}")
            collected = [] if config.detail else None
            state["reports"] = verify_corpus(
                state["corpus"],
                bound_ids=config.bounds,
                alphas=config.alphas.values,
                printed=config.printed,
                checkers=self.checkers,
                workers=self.settings.threads,
                chunk_size=self.settings.chunk_size,
                collected=collected,
            )
            state["checks"] = collected or []
            state["next_stage"] = "report"
            self.mark_completed(state)
            violations = sum(len(r.violations) for r in state["reports"])
            self.log_execution(state, f"sweep finished with {violations} violations")
        except (GraphError, GraphFormatError, EnumerationCapError, OSError, ValueError) as e:
            self.handle_error(state, str(e))
        return state
