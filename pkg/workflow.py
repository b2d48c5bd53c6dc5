import logging
from typing import Any, Dict, Optional, Sequence

from langgraph.graph import END, StateGraph

from bounds import BaseBound
from settings import RuntimeSettings
from stages import CheckStage, CorpusStage, ReportStage
from state import VerificationState

logger = logging.getLogger(__name__)


class VerificationWorkflow:
    """LangGraph implementation of a verification run: corpus -> checks -> report."""

    def __init__(self, settings: RuntimeSettings, checkers: Optional[Sequence[BaseBound]] = None):
        self.settings = settings
        self.stages = self._initialize_stages(checkers)
        self.graph = self._build_graph()

    def _initialize_stages(self, checkers: Optional[Sequence[BaseBound]]) -> Dict[str, Any]:
        return {
            "corpus": CorpusStage(),
            "checks": CheckStage(self.settings, checkers),
            "report": ReportStage(),
        }

    def _build_graph(self):
        workflow = StateGraph(VerificationState)

        workflow.add_node("corpus", self._corpus_node)
        workflow.add_node("checks", self._checks_node)
        workflow.add_node("report", self._report_node)

        # A failed stage jumps straight to the report
        workflow.set_entry_point("corpus")
        workflow.add_conditional_edges("corpus", self._route, {"checks": "checks", "report": "report"})
        workflow.add_edge("checks", "report")
        workflow.add_edge("report", END)

        return workflow.compile(checkpointer=None)

    @staticmethod
    def _route(state: VerificationState) -> str:
        return "report" if state["errors"] else state["next_stage"]

    def _corpus_node(self, state: VerificationState) -> VerificationState:
        return self.stages["corpus"].execute(state)

    def _checks_node(self, state: VerificationState) -> VerificationState:
        return self.stages["checks"].execute(state)

    def _report_node(self, state: VerificationState) -> VerificationState:
        return self.stages["report"].execute(state)

    def run(self, initial_state: VerificationState) -> VerificationState:
        """Execute the whole run; an unexpected failure becomes exit status 2."""
        try:
            logger.info(f"Starting verification run: {initial_state['config'].command.value}")
            final_state = self.graph.invoke(initial_state, config={"recursion_limit": 10})
            if final_state["exit_status"] == 0:
                logger.info("✅ Verification finished without violations")
            elif final_state["exit_status"] == 1:
                logger.warning("⚠️ Verification found bound violations")
            return final_state
        except Exception as e:
            logger.error(f"Workflow execution failed: {e}")
            initial_state["errors"].append(f"Workflow execution error: {e}")
            initial_state["exit_status"] = 2
            initial_state["output"] = None
            return initial_state
