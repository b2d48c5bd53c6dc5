"""
Tabular reports (CSV and JSON) built with pandas.
"""

import io
import logging
from pathlib import Path
from typing import Iterable, List, Optional, Sequence, Tuple, Union

import pandas as pd

from graph_core import Graph
from state import BoundCheck, BoundForm, Direction, EnumerationReport, FamilyRow, IndexValue, OutputFormat

logger = logging.getLogger(__name__)

DETAIL_COLUMNS = [
    "bound_id", "alpha", "n", "m", "graph6", "lhs", "rhs",
    "direction", "slack", "holds", "eq_pred", "eq_obs",
]
SUMMARY_COLUMNS = [
    "bound_id", "alpha", "form", "graphs_checked", "violations",
    "equality_witnesses", "equality_mismatches",
]
COMPUTE_COLUMNS = ["graph", "graph6", "n", "m", "index_id", "parameter", "value"]
FAMILY_COLUMNS = [
    "family", "params", "n", "alpha", "closed_form", "printed_variant", "direct", "diff", "flag",
]
SIGNIFICANT_DIGITS = 12


def _frame(records: List[dict], columns: Sequence[str]) -> pd.DataFrame:
    if not records:
        return pd.DataFrame(columns=list(columns))
    return pd.DataFrame.from_records(records, columns=list(columns))


def detail_frame(checks: Iterable[BoundCheck], with_form: bool = False) -> pd.DataFrame:
    """One row per individual check; ``form`` is appended for JSON output."""
    records = []
    for check in checks:
        record = {
            "bound_id": check.bound_id,
            "alpha": check.alpha,
            "n": check.n,
            "m": check.m,
            "graph6": check.graph6,
            "lhs": check.lhs,
            "rhs": check.rhs,
            "direction": check.direction.value,
            "slack": check.slack,
            "holds": check.holds,
            "eq_pred": check.equality_predicted,
            "eq_obs": check.equality_observed,
        }
        if with_form:
            record["form"] = check.form.value
        records.append(record)
    return _frame(records, DETAIL_COLUMNS + (["form"] if with_form else []))


def summary_frame(reports: Iterable[EnumerationReport], witnesses: bool = False) -> pd.DataFrame:
    records = []
    for report in reports:
        record = {
            "bound_id": report.bound_id,
            "alpha": report.alpha,
            "form": report.form.value if report.form else "",
            "graphs_checked": report.graphs_checked,
            "violations": len(report.violations),
            "equality_witnesses": len(report.equality_witnesses),
            "equality_mismatches": len(report.equality_mismatches),
        }
        if witnesses:
            record["witnesses"] = " ".join(report.equality_witnesses)
        records.append(record)
    return _frame(records, SUMMARY_COLUMNS + (["witnesses"] if witnesses else []))


def compute_frame(rows: Iterable[Tuple[str, str, Graph, List[IndexValue]]]) -> pd.DataFrame:
    """Rows from (label, graph6, graph, index values) tuples, input order kept."""
    records = []
    for label, graph6, graph, values in rows:
        for value in values:
            records.append({
                "graph": label,
                "graph6": graph6,
                "n": graph.n,
                "m": graph.m,
                "index_id": value.index_id.value,
                "parameter": value.parameter,
                "value": value.value,
            })
    return _frame(records, COMPUTE_COLUMNS)


def family_frame(rows: Iterable[FamilyRow]) -> pd.DataFrame:
    return _frame([row.model_dump() for row in rows], FAMILY_COLUMNS)


def _round_significant(frame: pd.DataFrame) -> pd.DataFrame:
    rounded = frame.copy()
    for column in rounded.columns:
        if pd.api.types.is_float_dtype(rounded[column]):
            rounded[column] = rounded[column].map(
                lambda x: x if pd.isna(x) else float(f"{x:.{SIGNIFICANT_DIGITS}g}")
            )
    return rounded


def render(frame: pd.DataFrame, output_format: OutputFormat) -> str:
    """Serialize a report; reals carry 12 significant digits in both formats."""
    if OutputFormat(output_format) is OutputFormat.JSON:
        text = _round_significant(frame).to_json(orient="records", double_precision=15, indent=2)
        return text + "\n"
    return frame.to_csv(index=False, float_format=f"%.{SIGNIFICANT_DIGITS}g", lineterminator="\n")


def write_report(frame: pd.DataFrame, output_format: OutputFormat, output: Optional[Union[str, Path]] = None) -> str:
    text = render(frame, output_format)
    if output is not None:
        Path(output).write_text(text, encoding="utf-8")
        logger.info(f"📄 Report written to {output} ({len(frame)} rows)")
    return text


def read_detail_csv(text: str) -> List[BoundCheck]:
    """Parse detail rows back into BoundCheck records."""
    frame = pd.read_csv(io.StringIO(text), keep_default_na=False, dtype={"graph6": str})
    checks = []
    for record in frame.to_dict(orient="records"):
        checks.append(BoundCheck(
            bound_id=str(record["bound_id"]),
            alpha=None if record["alpha"] == "" else float(record["alpha"]),
            n=int(record["n"]),
            m=int(record["m"]),
            graph6=record["graph6"],
            lhs=float(record["lhs"]),
            rhs=float(record["rhs"]),
            direction=Direction(record["direction"]),
            slack=float(record["slack"]),
            holds=str(record["holds"]) == "True",
            equality_predicted=str(record["eq_pred"]) == "True",
            equality_observed=str(record["eq_obs"]) == "True",
            form=BoundForm(record.get("form", BoundForm.PRINTED.value)),
        ))
    return checks
