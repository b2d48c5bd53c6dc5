"""
Verification stages package initialization.
"""

from .base_stage import BaseStage
from .check_stage import CheckStage
from .corpus_stage import CorpusStage, build_corpus
from .report_stage import ReportStage

__all__ = [
    "BaseStage",
    "CheckStage",
    "CorpusStage",
    "ReportStage",
    "build_corpus",
]
