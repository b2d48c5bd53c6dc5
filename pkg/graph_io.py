"""
Graph ingestion and generation: graph6 and edge-list codecs, standard
families, seeded random graphs and exhaustive small-graph enumeration.
"""

import itertools
import logging
from pathlib import Path
from typing import Iterable, Iterator, List, Optional, Sequence, Tuple, Union

import networkx as nx
import numpy as np
from pydantic import BaseModel, Field

from graph_core import Graph, GraphError, from_networkx, is_connected, make_graph, to_networkx

logger = logging.getLogger(__name__)

GRAPH6_HEADER = ">>graph6<<"
GRAPH6_SUFFIXES = (".g6", ".graph6")
MAX_GRAPH6_N = 258047
MAX_DEDUP_N = 7
MAX_LABELED_N = 7
FAMILIES = ("complete", "empty", "cycle", "path", "star", "complete_bipartite")


class GraphFormatError(ValueError):
    """Malformed graph6 or edge-list input.

    ``line`` is set for line-oriented input, ``offset`` is the byte offset
    into a graph6 encoding (after any header).
    """

    def __init__(self, message: str, line: Optional[int] = None, offset: Optional[int] = None):
        self.line = line
        self.offset = offset
        location = []
        if line is not None:
            location.append(f"line {line}")
        if offset is not None:
            location.append(f"offset {offset}")
        super().__init__(f"{message} ({', '.join(location)})" if location else message)
        self.message = message


class EnumerationCapError(ValueError):
    """Requested enumeration is beyond the supported vertex count."""


class EnumerationSpec(BaseModel):
    n: int = Field(ge=1)
    connected_only: bool = False
    dedup_isomorphism: bool = False


def _pairs(n: int) -> List[Tuple[int, int]]:
    """Vertex pairs in graph6 bit order: (0,1), (0,2), (1,2), (0,3), ..."""
    return [(i, j) for j in range(1, n) for i in range(j)]


# graph6

def _decode_size(data: str) -> Tuple[int, int]:
    """(n, index of the first data byte)."""
    if data[0] != "~":
        return ord(data[0]) - 63, 1
    if len(data) > 1 and data[1] == "~":
        raise GraphFormatError(f"graph6 orders above {MAX_GRAPH6_N} are not supported", offset=1)
    if len(data) < 4:
        raise GraphFormatError("truncated graph6 size field", offset=len(data))
    n = 0
    for ch in data[1:4]:
        n = (n << 6) | (ord(ch) - 63)
    return n, 4


def serialize_graph6(graph: Graph) -> str:
    if graph.n > MAX_GRAPH6_N:
        raise GraphFormatError(f"graph6 cannot encode n={graph.n} (limit {MAX_GRAPH6_N})")
    encoded = nx.to_graph6_bytes(to_networkx(graph), header=False)
    return encoded.decode("ascii").strip()


def _validate_graph6(data: str) -> int:
    """Byte-level checks networkx does not locate; returns n."""
    for offset, ch in enumerate(data):
        if not 63 <= ord(ch) <= 126:
            raise GraphFormatError(f"character {ch!r} outside the graph6 range", offset=offset)

    n, start = _decode_size(data)
    if n == 0:
        raise GraphFormatError("graph6 string encodes a graph without vertices", offset=0)
    body = len(data) - start
    bits = n * (n - 1) // 2
    expected = (bits + 5) // 6
    if body != expected:
        raise GraphFormatError(
            f"expected {expected} data bytes for n={n}, found {body}",
            offset=start + min(body, expected),
        )
    padding = expected * 6 - bits
    if padding and (ord(data[-1]) - 63) & ((1 << padding) - 1):
        raise GraphFormatError("nonzero padding bits", offset=len(data) - 1)
    return n


def parse_graph6(text: str) -> Graph:
    data = text.strip()
    if data.startswith(GRAPH6_HEADER):
        data = data[len(GRAPH6_HEADER):]
    if not data:
        raise GraphFormatError("empty graph6 string", offset=0)
    n = _validate_graph6(data)
    decoded = nx.from_graph6_bytes(data.encode("ascii"))
    edges = frozenset((u, v) if u < v else (v, u) for u, v in decoded.edges())
    return Graph.model_construct(n=n, edges=edges)


def iter_graph6_lines(lines: Iterable[str]) -> Iterator[Graph]:
    """One graph per non-blank line; errors carry the 1-based line number."""
    for number, line in enumerate(lines, start=1):
        if not line.strip():
            continue
        try:
            yield parse_graph6(line)
        except GraphFormatError as exc:
            raise GraphFormatError(exc.message, line=number, offset=exc.offset) from exc


# Edge lists

def _int_tokens(content: str, number: int, expected: int, what: str) -> List[int]:
    tokens = content.split()
    if len(tokens) != expected:
        raise GraphFormatError(f"expected {what}, got {content!r}", line=number)
    try:
        return [int(token) for token in tokens]
    except ValueError:
        raise GraphFormatError(f"non-integer token in {content!r}", line=number) from None


def parse_edge_list(text: Union[str, Iterable[str]]) -> Graph:
    """Parse an "n m" header followed by m "u v" lines (0-based ids, '#' comments)."""
    lines = text.splitlines() if isinstance(text, str) else text
    header: Optional[Tuple[int, int]] = None
    edges: List[Tuple[int, int]] = []
    number = 0
    for number, raw in enumerate(lines, start=1):
        content = raw.split("#", 1)[0].strip()
        if not content:
            continue
        if header is None:
            n, m = _int_tokens(content, number, 2, "header 'n m'")
            if n < 1 or m < 0:
                raise GraphFormatError(f"invalid header n={n} m={m}", line=number)
            header = (n, m)
            continue
        if len(edges) == header[1]:
            raise GraphFormatError(f"more than the declared {header[1]} edges", line=number)
        u, v = _int_tokens(content, number, 2, "edge 'u v'")
        if u == v:
            raise GraphFormatError(f"self-loop at vertex {u}", line=number)
        if not (0 <= u < header[0] and 0 <= v < header[0]):
            raise GraphFormatError(f"vertex out of range for n={header[0]} in edge ({u}, {v})", line=number)
        edges.append((u, v))

    if header is None:
        raise GraphFormatError("missing 'n m' header", line=max(number, 1))
    if len(edges) != header[1]:
        raise GraphFormatError(f"declared {header[1]} edges, found {len(edges)}", line=number)
    return make_graph(header[0], edges)


def read_graphs(path: Union[str, Path]) -> Iterator[Tuple[str, Graph]]:
    """Labelled graphs from a file: graph6 by suffix, otherwise one edge list."""
    path = Path(path)
    with path.open(encoding="utf-8") as handle:
        if path.suffix.lower() in GRAPH6_SUFFIXES:
            for number, line in enumerate(handle, start=1):
                if not line.strip():
                    continue
                try:
                    graph = parse_graph6(line)
                except GraphFormatError as exc:
                    raise GraphFormatError(f"{path}: {exc.message}", line=number, offset=exc.offset) from exc
                yield f"{path.name}:{number}", graph
        else:
            try:
                graph = parse_edge_list(handle)
            except GraphFormatError as exc:
                raise GraphFormatError(f"{path}: {exc.message}", line=exc.line) from exc
            yield path.name, graph


# Families

def generate_family(family: str, params: Sequence[int]) -> Graph:
    """Named graph in canonical labeling.

    cycle: i ~ i+1 mod n; path: i ~ i+1; star(k): centre 0 with leaves 1..k
    (star also accepts (1, k)); complete_bipartite(a, b): 0..a-1 vs a..a+b-1.
    """
    params = [int(p) for p in params]

    def expect(count: int):
        if len(params) != count:
            raise GraphError(f"{family} takes {count} parameter(s), got {len(params)}")

    if family == "star" and len(params) == 2:
        if params[0] != 1:
            raise GraphError(f"star is K_(1,k); got ({params[0]}, {params[1]})")
        params = params[1:]

    if family in ("complete", "empty", "path"):
        expect(1)
        n = params[0]
        if n < 1:
            raise GraphError(f"{family} needs n >= 1, got {n}")
        builder = {"complete": nx.complete_graph, "empty": nx.empty_graph, "path": nx.path_graph}[family]
        return from_networkx(builder(n))
    if family == "cycle":
        expect(1)
        n = params[0]
        if n < 3:
            raise GraphError(f"cycle needs n >= 3, got {n}")
        return from_networkx(nx.cycle_graph(n))
    if family == "star":
        expect(1)
        k = params[0]
        if k < 1:
            raise GraphError(f"star needs k >= 1, got {k}")
        return from_networkx(nx.star_graph(k))
    if family == "complete_bipartite":
        expect(2)
        a, b = params
        if a < 1 or b < 1:
            raise GraphError(f"complete_bipartite needs a, b >= 1, got ({a}, {b})")
        return from_networkx(nx.complete_bipartite_graph(a, b))
    raise GraphError(f"unknown family {family!r}; choose from {', '.join(FAMILIES)}")


# Enumeration

def _decode_code(n: int, pairs: List[Tuple[int, int]], code: int) -> Graph:
    top = len(pairs) - 1
    edges = frozenset(pair for t, pair in enumerate(pairs) if code >> (top - t) & 1)
    return Graph.model_construct(n=n, edges=edges)


def _encode_code(graph: Graph) -> int:
    code = 0
    for pair in _pairs(graph.n):
        code = (code << 1) | (pair in graph.edges)
    return code


def _permutation_weights(n: int, pairs: List[Tuple[int, int]]) -> List[List[int]]:
    """For every vertex permutation, the code weight each pair maps to."""
    top = len(pairs) - 1
    position = {pair: t for t, pair in enumerate(pairs)}
    tables = []
    for perm in itertools.permutations(range(n)):
        weights = []
        for i, j in pairs:
            a, b = perm[i], perm[j]
            weights.append(1 << (top - position[(a, b) if a < b else (b, a)]))
        tables.append(weights)
    return tables


def canonical_code(graph: Graph) -> int:
    """Smallest adjacency code over all vertex relabelings.

    The code reads the graph6 bit string as a binary number, so the smallest
    code is the lexicographically smallest bit string.
    """
    if graph.n > MAX_DEDUP_N:
        raise EnumerationCapError(f"canonical forms are capped at n={MAX_DEDUP_N}, got {graph.n}")
    pairs = _pairs(graph.n)
    present = [t for t, pair in enumerate(pairs) if pair in graph.edges]
    return min(
        sum(weights[t] for t in present)
        for weights in _permutation_weights(graph.n, pairs)
    )


def canonical_form(graph: Graph) -> str:
    return serialize_graph6(_decode_code(graph.n, _pairs(graph.n), canonical_code(graph)))


def enumerate_graphs(spec: EnumerationSpec) -> Iterator[Graph]:
    """Every labeled graph on n vertices in increasing code order.

    With dedup only the minimal-code member of each isomorphism class is
    yielded: codes are visited in increasing order and each yielded code marks
    its whole orbit as seen. The cap is checked before the stream starts.
    """
    cap = MAX_DEDUP_N if spec.dedup_isomorphism else MAX_LABELED_N
    if spec.n > cap:
        raise EnumerationCapError(f"enumeration is capped at n={cap}, got n={spec.n}")
    return _enumerate(spec)


def _enumerate(spec: EnumerationSpec) -> Iterator[Graph]:
    n = spec.n
    pairs = _pairs(n)
    total = 1 << len(pairs)
    weights = _permutation_weights(n, pairs) if spec.dedup_isomorphism else None
    seen = bytearray(total) if spec.dedup_isomorphism else None
    top = len(pairs) - 1
    produced = 0

    for code in range(total):
        if seen is not None:
            if seen[code]:
                continue
            present = [t for t in range(len(pairs)) if code >> (top - t) & 1]
            for table in weights:
                seen[sum(table[t] for t in present)] = 1
        graph = _decode_code(n, pairs, code)
        if spec.connected_only and not is_connected(graph):
            continue
        produced += 1
        yield graph

    logger.info(
        f"Enumerated {produced} graphs on n={n} "
        f"(connected_only={spec.connected_only}, dedup={spec.dedup_isomorphism})"
    )


def enumerate_range(min_n: int, max_n: int, connected_only: bool = False, dedup: bool = False) -> Iterator[Graph]:
    """Concatenated enumerations for n = min_n..max_n; every cap is checked up front."""
    streams = [
        enumerate_graphs(EnumerationSpec(n=n, connected_only=connected_only, dedup_isomorphism=dedup))
        for n in range(min_n, max_n + 1)
    ]
    return itertools.chain.from_iterable(streams)


# Random graphs

def random_graph(n: int, p: float, seed: int) -> Graph:
    """Erdős–Rényi G(n, p) from numpy's PCG64 stream.

    One uniform draw per pair, in graph6 pair order; the pair is an edge when
    its draw is below p. The same (n, p, seed) always gives the same graph.
    """
    if n < 1:
        raise GraphError(f"random_graph needs n >= 1, got {n}")
    if not 0.0 <= p <= 1.0:
        raise GraphError(f"edge probability must lie in [0, 1], got {p}")
    if not 0 <= seed < 2 ** 64:
        raise GraphError(f"seed must be an unsigned 64-bit integer, got {seed}")
    pairs = _pairs(n)
    draws = np.random.default_rng(seed).random(len(pairs))
    edges = frozenset(pair for pair, draw in zip(pairs, draws) if draw < p)
    return Graph.model_construct(n=n, edges=edges)


def random_corpus(n: int, p: float, count: int, seed: int) -> Iterator[Graph]:
    """``count`` samples; sample i uses seed + i (mod 2^64)."""
    for i in range(count):
        yield random_graph(n, p, (seed + i) % 2 ** 64)
