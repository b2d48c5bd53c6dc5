"""
Base stage class for the verification workflow.
"""

import logging
from abc import ABC, abstractmethod
from typing import Any, Dict

logger = logging.getLogger(__name__)


class BaseStage(ABC):
    """Base class for every stage of a verification run."""

    def __init__(self, name: str):
        self.name = name

    @abstractmethod
    def execute(self, state: Dict[str, Any]) -> Dict[str, Any]:
        """Run the stage and return the updated state."""

    def log_execution(self, state: Dict[str, Any], action: str):
        logger.info(f"Stage {self.name} executing {action}")
        state["messages"].append(f"{self.name}: {action}")

    def handle_error(self, state: Dict[str, Any], error: str):
        logger.error(f"Stage {self.name} error: {error}")
        state["errors"].append(f"{self.name}: {error}")
        state["next_stage"] = "report"

    def mark_completed(self, state: Dict[str, Any]):
        if self.name not in state["completed_stages"]:
            state["completed_stages"].append(self.name)
