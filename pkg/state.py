"""
Records and workflow state shared across the Sombor toolkit.
"""

import math
from enum import Enum
from typing import Any, Dict, Iterable, List, Optional, Tuple

from pydantic import BaseModel, ConfigDict, Field, field_validator
from typing_extensions import TypedDict

DEFAULT_ALPHAS: Tuple[float, ...] = (-2.0, -1.0, -0.5, 0.5, 1.0, 1.5, 2.0, 3.0)
DEFAULT_POWERS: Tuple[float, ...] = (1.0, 2.0, 3.0)
EQUALITY_TOLERANCE = 1e-9


class IndexId(str, Enum):
    M1 = "M1"
    M2 = "M2"
    M1P = "M1P"
    F = "F"
    R = "R"
    RALPHA = "RALPHA"
    CHI = "CHI"
    CHIALPHA = "CHIALPHA"
    SO = "SO"
    SOALPHA = "SOALPHA"


class IndexValue(BaseModel):
    """One index evaluated on one graph."""
    index_id: IndexId
    parameter: Optional[float] = None
    value: float


class AlphaGrid(BaseModel):
    """Ordered list of finite exponents."""
    values: Tuple[float, ...] = DEFAULT_ALPHAS

    @field_validator("values", mode="before")
    @classmethod
    def check_finite(cls, v):
        values = tuple(float(x) for x in v)
        if not values:
            raise ValueError("alpha grid must not be empty")
        if not all(math.isfinite(x) for x in values):
            raise ValueError("alpha grid must contain finite values only")
        return values


class Direction(str, Enum):
    LE = "<="
    GE = ">="
    LT = "<"


class BoundForm(str, Enum):
    PRINTED = "printed"
    CORRECTED = "corrected (erratum)"
    SWAPPED = "swapped (erratum)"
    EXTENDED = "extended"
    IDENTITY = "identity"


class BoundCheck(BaseModel):
    """One inequality ``lhs direction rhs`` evaluated on one graph.

    ``slack`` is oriented so that a non-negative value means the inequality
    holds.
    """

    model_config = ConfigDict(frozen=True)

    bound_id: str
    alpha: Optional[float] = None
    n: int
    m: int
    graph6: str
    lhs: float
    rhs: float
    direction: Direction
    slack: float
    holds: bool
    equality_predicted: bool
    equality_observed: bool
    form: BoundForm = BoundForm.PRINTED


class EnumerationReport(BaseModel):
    """Aggregate of one (bound, alpha) pair over a corpus."""
    bound_id: str
    alpha: Optional[float] = None
    form: Optional[BoundForm] = None
    graphs_checked: int = 0
    violations: List[BoundCheck] = Field(default_factory=list)
    equality_witnesses: List[str] = Field(default_factory=list)
    equality_mismatches: List[str] = Field(default_factory=list)
    runtime: float = 0.0


class OutputFormat(str, Enum):
    CSV = "csv"
    JSON = "json"


class Command(str, Enum):
    COMPUTE = "compute"
    VERIFY = "verify"
    ENUMERATE = "enumerate"
    FAMILIES = "families"


class RunConfig(BaseModel):
    """Parsed command line."""
    command: Command
    inputs: List[str] = Field(default_factory=list)
    alphas: AlphaGrid = Field(default_factory=AlphaGrid)
    powers: Tuple[float, ...] = DEFAULT_POWERS
    bounds: Optional[List[str]] = None
    output_format: OutputFormat = OutputFormat.CSV
    output: Optional[str] = None
    enumerate_min_n: Optional[int] = None
    enumerate_max_n: Optional[int] = None
    connected_only: bool = False
    dedup: bool = False
    family: Optional[str] = None
    params: List[int] = Field(default_factory=list)
    max_n: int = Field(default=12, ge=1)
    seed: int = Field(default=0, ge=0, lt=2 ** 64)
    random_n: Optional[int] = Field(default=None, ge=1)
    random_p: float = Field(default=0.5, ge=0.0, le=1.0)
    random_count: int = Field(default=0, ge=0)
    printed: bool = False
    detail: bool = False
    witnesses: bool = False

    @field_validator("alphas", mode="before")
    @classmethod
    def wrap_alphas(cls, v):
        if isinstance(v, AlphaGrid):
            return v
        return AlphaGrid(values=v)


class FamilyRow(BaseModel):
    """Closed form against direct evaluation for one family member."""
    family: str
    params: str
    n: int
    alpha: float
    closed_form: float
    printed_variant: Optional[float] = None
    direct: float
    diff: float
    flag: str = ""


class VerificationState(TypedDict):
    """State shared across the verification stages."""
    # Input
    config: RunConfig

    # Stage outputs
    corpus: Optional[Iterable[Any]]
    reports: List[EnumerationReport]
    checks: List[BoundCheck]
    output: Optional[str]
    exit_status: int

    # Control flow
    next_stage: str
    messages: List[str]
    errors: List[str]
    completed_stages: List[str]


def create_initial_state(config: RunConfig) -> VerificationState:
    """Create initial state from a parsed command line."""
    return VerificationState(
        config=config,
        corpus=None,
        reports=[],
        checks=[],
        output=None,
        exit_status=0,
        next_stage="corpus",
        messages=[],
        errors=[],
        completed_stages=[],
    )


def summarize_state(state: Dict[str, Any]) -> str:
    parts = [f"Command: {state['config'].command.value}"]
    if state.get("reports"):
        parts.append(f"Reports: {len(state['reports'])}")
        violations = sum(len(r.violations) for r in state["reports"])
        parts.append(f"Violations: {violations}")
    if state.get("errors"):
        parts.append(f"Errors: {len(state['errors'])}")
    return "; ".join(parts)
