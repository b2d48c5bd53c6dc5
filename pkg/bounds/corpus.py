"""
Run bound checkers over a graph corpus and aggregate per (bound, alpha).
"""

import itertools
import logging
import math
import time
from concurrent.futures import ProcessPoolExecutor
from typing import Dict, Iterable, Iterator, List, Optional, Sequence, Tuple

from graph_core import Graph
from state import DEFAULT_ALPHAS, BoundCheck, EnumerationReport
from .auxiliary import AuxForgottenBound, AuxZagrebBound
from .base_bound import BaseBound, BoundNotApplicable, GraphFacts
from .extremal import ExtremalBound
from .forgotten import SomborForgottenBound, SomborOrderSizeBound
from .nordhaus_gaddum import NordhausGaddumBound
from .randic import SomborRandicBound
from .sum_connectivity import SomborChiBound

logger = logging.getLogger(__name__)

ReportKey = Tuple[str, Optional[float]]


def default_checkers() -> List[BaseBound]:
    return [
        AuxForgottenBound(),
        AuxZagrebBound(),
        SomborForgottenBound(),
        SomborOrderSizeBound(),
        ExtremalBound(),
        NordhausGaddumBound(),
        SomborRandicBound(),
        SomborChiBound(),
    ]


ALL_BOUND_IDS: Tuple[str, ...] = tuple(
    bound_id for checker in default_checkers() for bound_id in checker.bound_ids
)


def _matches(bound_id: str, selectors: Optional[Sequence[str]]) -> bool:
    if selectors is None:
        return True
    return any(bound_id.lower().startswith(s.lower()) for s in selectors)


def resolve_bound_ids(selectors: Optional[Sequence[str]], known: Sequence[str] = ALL_BOUND_IDS) -> Optional[List[str]]:
    """Normalise a bound filter; None or 'all' selects everything.

    A selector matches every id it prefixes, so 'B4.2' selects B4.2a and B4.2b.
    """
    if selectors is None or any(s.lower() == "all" for s in selectors):
        return None
    for selector in selectors:
        if not any(_matches(bound_id, [selector]) for bound_id in known):
            raise ValueError(f"unknown bound id: {selector}")
    return list(selectors)


def _report_order(known: Sequence[str]):
    position = {bound_id: i for i, bound_id in enumerate(known)}

    def key(report: EnumerationReport):
        alpha = -math.inf if report.alpha is None else report.alpha
        return position.get(report.bound_id, len(position)), report.bound_id, alpha

    return key


def _merge(target: Dict[ReportKey, EnumerationReport], partial: Dict[ReportKey, EnumerationReport]):
    for key, report in partial.items():
        if key not in target:
            target[key] = report
            continue
        merged = target[key]
        merged.form = merged.form or report.form
        merged.graphs_checked += report.graphs_checked
        merged.violations.extend(report.violations)
        merged.equality_witnesses.extend(report.equality_witnesses)
        merged.equality_mismatches.extend(report.equality_mismatches)
        merged.runtime += report.runtime


def check_graph(
    graph: Graph,
    checkers: Sequence[BaseBound],
    alphas: Sequence[float],
    selectors: Optional[Sequence[str]] = None,
    printed: bool = False,
) -> Iterator[Tuple[BoundCheck, float]]:
    """Every applicable check on one graph, with the time spent producing it."""
    facts = GraphFacts(graph)
    for checker in checkers:
        if not any(_matches(bound_id, selectors) for bound_id in checker.bound_ids):
            continue
        for alpha in (alphas if checker.uses_alpha else (None,)):
            started = time.perf_counter()
            try:
                checks = checker.evaluate(facts, alpha, printed)
            except BoundNotApplicable:
                continue
            elapsed = (time.perf_counter() - started) / max(len(checks), 1)
            for check in checks:
                if _matches(check.bound_id, selectors):
                    yield check, elapsed


def _check_chunk(task) -> Tuple[Dict[ReportKey, EnumerationReport], List[BoundCheck]]:
    graphs, checkers, alphas, selectors, printed, collect = task
    partial: Dict[ReportKey, EnumerationReport] = {}
    collected: List[BoundCheck] = []
    for graph in graphs:
        for check, elapsed in check_graph(graph, checkers, alphas, selectors, printed):
            key = (check.bound_id, check.alpha)
            report = partial.get(key)
            if report is None:
                report = partial[key] = EnumerationReport(
                    bound_id=check.bound_id, alpha=check.alpha, form=check.form
                )
            report.graphs_checked += 1
            report.runtime += elapsed
            if not check.holds:
                report.violations.append(check)
            if check.equality_observed:
                report.equality_witnesses.append(check.graph6)
            if check.equality_observed != check.equality_predicted:
                report.equality_mismatches.append(check.graph6)
            if collect:
                collected.append(check)
    return partial, collected


def _chunks(corpus: Iterable[Graph], size: int) -> Iterator[List[Graph]]:
    iterator = iter(corpus)
    while True:
        chunk = list(itertools.islice(iterator, size))
        if not chunk:
            return
        yield chunk


def verify_corpus(
    corpus: Iterable[Graph],
    bound_ids: Optional[Sequence[str]] = None,
    alphas: Sequence[float] = DEFAULT_ALPHAS,
    printed: bool = False,
    checkers: Optional[Sequence[BaseBound]] = None,
    workers: int = 1,
    chunk_size: int = 512,
    collected: Optional[List[BoundCheck]] = None,
) -> List[EnumerationReport]:
    """Run every selected checker over every graph and exponent.

    Reports come back sorted by bound id (checker order), then alpha. When
    ``collected`` is given every individual check is appended to it in corpus
    order. Errors raised while reading the corpus propagate.
    """
    checkers = list(checkers) if checkers is not None else default_checkers()
    known = [bound_id for checker in checkers for bound_id in checker.bound_ids]
    selectors = resolve_bound_ids(bound_ids, known)
    alphas = sorted(set(float(a) for a in alphas))
    collect = collected is not None

    tasks = (
        (chunk, checkers, alphas, selectors, printed, collect)
        for chunk in _chunks(corpus, chunk_size)
    )
    merged: Dict[ReportKey, EnumerationReport] = {}
    if workers > 1:
        logger.info(f"Checking corpus with {workers} workers")
        with ProcessPoolExecutor(max_workers=workers) as pool:
            results = pool.map(_check_chunk, tasks)
            for partial, checks in results:
                _merge(merged, partial)
                if collect:
                    collected.extend(checks)
    else:
        for task in tasks:
            partial, checks = _check_chunk(task)
            _merge(merged, partial)
            if collect:
                collected.extend(checks)

    reports = sorted(merged.values(), key=_report_order(known))
    for report in reports:
        logger.info(
            f"{report.bound_id} alpha={report.alpha}: {report.graphs_checked} checked, "
            f"{len(report.violations)} violations, {len(report.equality_witnesses)} equality witnesses "
            f"({report.runtime:.3f}s)"
        )
        for violation in report.violations:
            logger.warning(
                f"❌ {violation.bound_id} violated on {violation.graph6} at alpha={violation.alpha}: "
                f"{violation.lhs} {violation.direction.value} {violation.rhs}"
            )
    return reports
