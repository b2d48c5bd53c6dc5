"""
Report Stage - renders the sweep and decides the exit status.
"""

from typing import Any, Dict

import reports
from state import summarize_state
from .base_stage import BaseStage


class ReportStage(BaseStage):
    """Stage responsible for the final report.

    Exit status: 2 when an earlier stage failed, 1 when any check was
    violated, 0 otherwise.
    """

    def __init__(self):
        super().__init__("report")

    def execute(self, state: Dict[str, Any]) -> Dict[str, Any]:
        config = state["config"]
        if state["errors"]:
            state["exit_status"] = 2
            state["output"] = None
            self.log_execution(state, f"aborted run ({summarize_state(state)})")
            return state

        try:
            self.log_execution(state, "report rendering")
            if config.detail:
                frame = reports.detail_frame(
                    state["checks"], with_form=config.output_format.value == "json"
                )
            else:
                frame = reports.summary_frame(state["reports"], witnesses=config.witnesses)
            state["output"] = reports.write_report(frame, config.output_format, config.output)
            violated = any(report.violations for report in state["reports"])
            state["exit_status"] = 1 if violated else 0
            state["next_stage"] = "complete"
            self.mark_completed(state)
            self.log_execution(state, summarize_state(state))
        except OSError as e:
            self.handle_error(state, str(e))
            state["exit_status"] = 2
            state["output"] = None
        return state
