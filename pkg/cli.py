"""
Command-line front end: compute, verify, enumerate and families.

Exit status: 0 success, 1 bound violation or closed-form mismatch,
2 usage or input error.
"""

import argparse
import logging
import re
import sys
from typing import List, Optional, Sequence, TextIO, Tuple

from pydantic import ValidationError

import graph_io
import indices
import reports
from bounds import BaseBound, resolve_bound_ids
from graph_core import GraphError
from settings import RuntimeSettings
from stages import build_corpus
from state import DEFAULT_ALPHAS, DEFAULT_POWERS, Command, FamilyRow, RunConfig, create_initial_state
from workflow import VerificationWorkflow

logger = logging.getLogger(__name__)

EXIT_OK = 0
EXIT_VIOLATION = 1
EXIT_USAGE = 2
FAMILY_TOLERANCE = 1e-12
INPUT_ERRORS = (GraphError, graph_io.GraphFormatError, graph_io.EnumerationCapError, indices.IndexDomainError, OSError)


class UsageError(ValueError):
    """Command line that cannot be turned into a run configuration."""


def _floats(text: str, what: str) -> List[float]:
    if text.strip().lower() == "default":
        return list(DEFAULT_ALPHAS if what == "alphas" else DEFAULT_POWERS)
    try:
        return [float(token) for token in text.split(",") if token.strip()]
    except ValueError:
        raise UsageError(f"--{what} expects a comma-separated list of numbers, got {text!r}") from None


def _ints(tokens: Sequence[str], what: str) -> List[int]:
    try:
        return [int(t) for token in tokens for t in token.split(",") if t.strip()]
    except ValueError:
        raise UsageError(f"--{what} expects integers, got {' '.join(tokens)!r}") from None


def _enumeration_range(text: str) -> Tuple[int, int]:
    match = re.fullmatch(r"n=(\d+)(?:\.\.(\d+))?", text.strip())
    if not match:
        raise UsageError(f"--enumerate expects n=<k> or n=<a>..<b>, got {text!r}")
    low = int(match.group(1))
    high = int(match.group(2)) if match.group(2) else low
    if low < 1 or high < low:
        raise UsageError(f"--enumerate range must satisfy 1 <= a <= b, got {text!r}")
    return low, high


def _random_spec(text: str) -> Tuple[int, float, int]:
    try:
        n, p, count = text.split(",")
        return int(n), float(p), int(count)
    except ValueError:
        raise UsageError(f"--random expects N,P,COUNT, got {text!r}") from None


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="sombor",
        description="General Sombor index toolkit: index tables, bound verification and graph corpora.",
    )
    parser.add_argument("command", choices=[c.value for c in Command])
    parser.add_argument("--input", nargs="+", action="extend", default=[], metavar="PATH",
                        help="graph files: .g6/.graph6 (one graph per line) or an edge list")
    parser.add_argument("--format", choices=["csv", "json"], default="csv", dest="output_format")
    parser.add_argument("--alphas", default="default", help="comma-separated exponents or 'default'")
    parser.add_argument("--powers", default="default", help="exponents p for M1^p (compute)")
    parser.add_argument("--bounds", default="all", help="comma-separated bound ids or prefixes, or 'all'")
    parser.add_argument("--enumerate", dest="enumeration", metavar="n=K[..L]",
                        help="exhaustive corpus on K (to L) vertices")
    parser.add_argument("--connected", action="store_true", help="keep connected graphs only")
    parser.add_argument("--dedup", action="store_true", help="one graph per isomorphism class")
    parser.add_argument("--family", choices=graph_io.FAMILIES)
    parser.add_argument("--params", nargs="+", default=[], metavar="INT")
    parser.add_argument("--max-n", type=int, default=12, help="largest order for a families sweep")
    parser.add_argument("--random", metavar="N,P,COUNT", help="seeded G(N, P) samples")
    parser.add_argument("--seed", type=int, default=0, help="unsigned 64-bit seed for --random")
    parser.add_argument("--output", metavar="PATH", help="write the report here instead of stdout")
    parser.add_argument("--printed", action="store_true", help="check the statements exactly as printed")
    parser.add_argument("--detail", action="store_true", help="one row per individual check")
    parser.add_argument("--witnesses", action="store_true", help="list equality witnesses in the summary")
    return parser


def config_from_args(args: argparse.Namespace) -> RunConfig:
    low = high = None
    if args.enumeration:
        low, high = _enumeration_range(args.enumeration)
    random_n, random_p, random_count = (None, 0.5, 0)
    if args.random:
        random_n, random_p, random_count = _random_spec(args.random)
    bounds = [b.strip() for b in args.bounds.split(",") if b.strip()]
    try:
        bounds = resolve_bound_ids(bounds or None)
    except ValueError as e:
        raise UsageError(str(e)) from None

    try:
        return RunConfig(
            command=args.command,
            inputs=args.input,
            alphas=_floats(args.alphas, "alphas"),
            powers=tuple(_floats(args.powers, "powers")),
            bounds=bounds,
            output_format=args.output_format,
            output=args.output,
            enumerate_min_n=low,
            enumerate_max_n=high,
            connected_only=args.connected,
            dedup=args.dedup,
            family=args.family,
            params=_ints(args.params, "params"),
            max_n=args.max_n,
            seed=args.seed,
            random_n=random_n,
            random_p=random_p,
            random_count=random_count,
            printed=args.printed,
            detail=args.detail,
            witnesses=args.witnesses,
        )
    except ValidationError as e:
        raise UsageError(f"invalid options: {e.errors()[0]['msg']}") from None


def _emit(text: str, config: RunConfig, out: TextIO):
    if config.output is None:
        out.write(text)


def cmd_compute(config: RunConfig, out: TextIO = sys.stdout) -> int:
    """Index table for every input graph."""
    try:
        graphs = []
        for path in config.inputs:
            graphs.extend(graph_io.read_graphs(path))
        if config.family:
            label = f"{config.family}({','.join(str(p) for p in config.params)})"
            graphs.append((label, graph_io.generate_family(config.family, config.params)))
        if not graphs:
            raise GraphError("no input graphs")
        rows = [
            (label, graph_io.serialize_graph6(graph), graph,
             indices.compute_indices(graph, config.alphas.values, config.powers))
            for label, graph in graphs
        ]
        frame = reports.compute_frame(rows)
        _emit(reports.write_report(frame, config.output_format, config.output), config, out)
    except INPUT_ERRORS as e:
        logger.error(f"❌ compute failed: {e}")
        return EXIT_USAGE
    return EXIT_OK


def cmd_verify(
    config: RunConfig,
    out: TextIO = sys.stdout,
    checkers: Optional[Sequence[BaseBound]] = None,
    settings: Optional[RuntimeSettings] = None,
) -> int:
    """Bound sweep through the verification workflow."""
    try:
        settings = settings or RuntimeSettings.from_env()
    except ValueError as e:
        logger.error(f"❌ {e}")
        return EXIT_USAGE
    final_state = VerificationWorkflow(settings, checkers).run(create_initial_state(config))
    for error in final_state["errors"]:
        logger.error(f"❌ {error}")
    if final_state["output"] is not None:
        _emit(final_state["output"], config, out)
    return final_state["exit_status"]


def cmd_enumerate(config: RunConfig, out: TextIO = sys.stdout) -> int:
    """graph6 lines for the requested corpus, in generation order."""
    try:
        lines = [graph_io.serialize_graph6(graph) + "\n" for graph in build_corpus(config)]
    except INPUT_ERRORS as e:
        logger.error(f"❌ enumerate failed: {e}")
        return EXIT_USAGE
    text = "".join(lines)
    if config.output is not None:
        with open(config.output, "w", encoding="utf-8") as handle:
            handle.write(text)
        logger.info(f"📄 {len(lines)} graphs written to {config.output}")
    else:
        out.write(text)
    return EXIT_OK


def _family_members(config: RunConfig) -> List[List[int]]:
    if config.params:
        return [config.params]
    top = config.max_n
    if config.family == "complete_bipartite":
        return [[a, b] for a in range(1, top) for b in range(a, top - a + 1)]
    if config.family == "star":
        return [[k] for k in range(1, top)]
    start = 3 if config.family == "cycle" else 1
    return [[n] for n in range(start, top + 1)]


def _closed_forms(family: str, params: List[int], alpha: float) -> Tuple[float, Optional[float]]:
    """(closed form, printed path variant or None)."""
    if family == "complete":
        return indices.closed_form_complete(params[0], alpha), None
    if family == "empty":
        return 0.0, None
    if family == "cycle":
        return indices.closed_form_cycle(params[0], alpha), None
    if family == "path":
        if params[0] == 1:
            return 0.0, 0.0
        return (
            indices.closed_form_path(params[0], alpha, indices.PathVariant.CORRECTED),
            indices.closed_form_path(params[0], alpha, indices.PathVariant.PRINTED),
        )
    if family == "star":
        return indices.closed_form_complete_bipartite(1, params[-1], alpha), None
    return indices.closed_form_complete_bipartite(params[0], params[1], alpha), None


def _agrees(a: float, b: float) -> bool:
    return abs(a - b) <= FAMILY_TOLERANCE * max(1.0, abs(a), abs(b))


def family_rows(config: RunConfig) -> List[FamilyRow]:
    families = [config.family] if config.family else list(graph_io.FAMILIES)
    rows: List[FamilyRow] = []
    for family in families:
        scoped = config.model_copy(update={"family": family})
        for params in _family_members(scoped):
            graph = graph_io.generate_family(family, params)
            for alpha in sorted(set(config.alphas.values)):
                closed, printed = _closed_forms(family, params, alpha)
                direct = indices.general_sombor(graph, alpha)
                flag = ""
                if not _agrees(closed, direct):
                    flag = "mismatch"
                elif printed is not None and not _agrees(printed, direct):
                    flag = "erratum"
                rows.append(FamilyRow(
                    family=family,
                    params=",".join(str(p) for p in params),
                    n=graph.n,
                    alpha=alpha,
                    closed_form=closed,
                    printed_variant=printed,
                    direct=direct,
                    diff=direct - closed,
                    flag=flag,
                ))
    return rows


def cmd_families(config: RunConfig, out: TextIO = sys.stdout) -> int:
    """Closed forms against direct evaluation for the standard families."""
    try:
        rows = family_rows(config)
        frame = reports.family_frame(rows)
        _emit(reports.write_report(frame, config.output_format, config.output), config, out)
    except INPUT_ERRORS as e:
        logger.error(f"❌ families failed: {e}")
        return EXIT_USAGE
    mismatches = [row for row in rows if row.flag == "mismatch"]
    for row in mismatches:
        logger.warning(f"⚠️ {row.family}({row.params}) alpha={row.alpha}: closed form {row.closed_form} != {row.direct}")
    return EXIT_VIOLATION if mismatches else EXIT_OK


COMMANDS = {
    Command.COMPUTE: cmd_compute,
    Command.VERIFY: cmd_verify,
    Command.ENUMERATE: cmd_enumerate,
    Command.FAMILIES: cmd_families,
}


def main(argv: Optional[Sequence[str]] = None, out: Optional[TextIO] = None) -> int:
    out = out or sys.stdout
    try:
        args = build_parser().parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    try:
        config = config_from_args(args)
    except UsageError as e:
        logger.error(f"❌ {e}")
        return EXIT_USAGE
    if config.params and not config.family:
        logger.error("❌ --params needs --family")
        return EXIT_USAGE
    return COMMANDS[config.command](config, out)
