"""Core graph, weighted graph, digraph and hypergraph types with text I/O.

All weights are exact ``fractions.Fraction`` values; solver code never
touches floating point.  The instance text format is line oriented:

    p <n> <m>             header: vertex count and edge count
    e <u> <v>             one line per edge, m lines total
    w <u> <num>[/<den>]   optional vertex weight, default 1

``#`` starts a comment and blank lines are ignored.  Vertex ids are the
dense range 0..n-1.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable

from .errors import ParseError

Edge = tuple[int, int]


def normalize_edge(u: int, v: int) -> Edge:
    return (u, v) if u < v else (v, u)


def as_fraction(value) -> Fraction:
    """Coerce ints/Fractions to Fraction; floats are rejected outright."""
    if isinstance(value, float):
        raise TypeError("weights must be exact rationals, not floats")
    return Fraction(value)


@dataclass(frozen=True)
class Graph:
    """Simple undirected graph on vertices 0..n-1."""

    n: int
    edges: frozenset[Edge] = frozenset()

    def __post_init__(self):
        if self.n < 0:
            raise ValueError("vertex count must be nonnegative")
        normal = set()
        for u, v in self.edges:
            if u == v:
                raise ValueError(f"self-loop at vertex {u}")
            if not (0 <= u < self.n and 0 <= v < self.n):
                raise ValueError(f"edge ({u}, {v}) out of range for n={self.n}")
            normal.add(normalize_edge(u, v))
        object.__setattr__(self, "edges", frozenset(normal))

    @property
    def m(self) -> int:
        return len(self.edges)

    def has_edge(self, u: int, v: int) -> bool:
        return normalize_edge(u, v) in self.edges

    def sorted_edges(self) -> list[Edge]:
        return sorted(self.edges)

    def adjacency(self) -> list[list[int]]:
        """Per-vertex sorted neighbour lists."""
        adj: list[list[int]] = [[] for _ in range(self.n)]
        for u, v in self.edges:
            adj[u].append(v)
            adj[v].append(u)
        for row in adj:
            row.sort()
        return adj

    def is_connected(self) -> bool:
        if self.n <= 1:
            return True
        adj = self.adjacency()
        seen = {0}
        stack = [0]
        while stack:
            u = stack.pop()
            for v in adj[u]:
                if v not in seen:
                    seen.add(v)
                    stack.append(v)
        return len(seen) == self.n


def induced_subgraph(g: Graph, vertices: Iterable[int]) -> tuple[Graph, tuple[int, ...]]:
    """Induced subgraph on ``vertices``, relabelled densely.

    Returns the subgraph and the sorted tuple of original ids; new id i
    corresponds to original id ``ids[i]``.
    """
    ids = tuple(sorted(set(vertices)))
    pos = {v: i for i, v in enumerate(ids)}
    edges = [(pos[u], pos[v]) for u, v in g.edges if u in pos and v in pos]
    return Graph(len(ids), frozenset(edges)), ids


@dataclass(frozen=True)
class WeightedGraph:
    """Graph plus one nonnegative exact rational weight per vertex."""

    graph: Graph
    weights: tuple[Fraction, ...]

    def __post_init__(self):
        ws = tuple(as_fraction(w) for w in self.weights)
        if len(ws) != self.graph.n:
            raise ValueError("need exactly one weight per vertex")
        if any(w < 0 for w in ws):
            raise ValueError("weights must be nonnegative")
        object.__setattr__(self, "weights", ws)

    @property
    def n(self) -> int:
        return self.graph.n

    def total(self, vertices: Iterable[int]) -> Fraction:
        return sum((self.weights[v] for v in vertices), Fraction(0))


def unit_weights(g: Graph) -> WeightedGraph:
    return WeightedGraph(g, (Fraction(1),) * g.n)


@dataclass(frozen=True)
class Digraph:
    """Directed graph on vertices 0..n-1; no self-loops."""

    n: int
    arcs: frozenset[tuple[int, int]] = frozenset()

    def __post_init__(self):
        for u, v in self.arcs:
            if u == v:
                raise ValueError(f"self-loop at vertex {u}")
            if not (0 <= u < self.n and 0 <= v < self.n):
                raise ValueError(f"arc ({u}, {v}) out of range for n={self.n}")
        object.__setattr__(self, "arcs", frozenset(self.arcs))

    def out_degrees(self) -> list[int]:
        degs = [0] * self.n
        for u, _ in self.arcs:
            degs[u] += 1
        return degs


@dataclass(frozen=True)
class CopyHypergraph:
    """Hyperedges are the distinct vertex sets of pattern copies.

    Hyperedges are deduplicated as sets and stored canonically: each as a
    sorted tuple, the whole list sorted lexicographically.  The order is
    therefore independent of insertion order.
    """

    n: int
    hyperedges: tuple[tuple[int, ...], ...] = ()

    def __post_init__(self):
        canon = set()
        for e in self.hyperedges:
            vs = tuple(sorted(set(e)))
            if not vs:
                raise ValueError("empty hyperedge")
            if vs[0] < 0 or vs[-1] >= self.n:
                raise ValueError(f"hyperedge {vs} out of range for n={self.n}")
            canon.add(vs)
        object.__setattr__(self, "hyperedges", tuple(sorted(canon)))

    def covered_vertices(self) -> tuple[int, ...]:
        return tuple(sorted({v for e in self.hyperedges for v in e}))


def _parse_int(text: str, lineno: int, what: str) -> int:
    try:
        return int(text)
    except ValueError:
        raise ParseError(lineno, "malformed", f"expected an integer {what}, got {text!r}") from None


def _parse_weight(text: str, lineno: int) -> Fraction:
    num_text, _, den_text = text.partition("/")
    num = _parse_int(num_text, lineno, "weight numerator")
    den = 1
    if den_text:
        den = _parse_int(den_text, lineno, "weight denominator")
        if den <= 0:
            raise ParseError(lineno, "malformed", f"weight denominator must be positive, got {den}")
    value = Fraction(num, den)
    if value < 0:
        raise ParseError(lineno, "negative-weight", f"negative weight {text}")
    return value


def parse_graph(text: str | bytes) -> WeightedGraph:
    """Parse instance text into a weighted graph; weights default to 1."""
    if isinstance(text, (bytes, bytearray)):
        text = text.decode("utf-8")
    n = m = None
    header_line = 0
    edges: dict[Edge, int] = {}
    weights: dict[int, Fraction] = {}
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        fields = line.split()
        tag = fields[0]
        if tag == "p":
            if n is not None:
                raise ParseError(lineno, "malformed", "duplicate header line")
            if len(fields) != 3:
                raise ParseError(lineno, "malformed", "header must be 'p <n> <m>'")
            n = _parse_int(fields[1], lineno, "vertex count")
            m = _parse_int(fields[2], lineno, "edge count")
            if n < 0 or m < 0:
                raise ParseError(lineno, "malformed", "counts must be nonnegative")
            header_line = lineno
        elif tag == "e":
            if n is None:
                raise ParseError(lineno, "malformed", "edge line before header")
            if len(fields) != 3:
                raise ParseError(lineno, "malformed", "edge line must be 'e <u> <v>'")
            u = _parse_int(fields[1], lineno, "vertex id")
            v = _parse_int(fields[2], lineno, "vertex id")
            for x in (u, v):
                if not 0 <= x < n:
                    raise ParseError(lineno, "vertex-range", f"vertex {x} out of range 0..{n - 1}")
            if u == v:
                raise ParseError(lineno, "malformed", f"self-loop at vertex {u}")
            key = normalize_edge(u, v)
            if key in edges:
                raise ParseError(lineno, "duplicate-edge", f"duplicate edge {key[0]} {key[1]}")
            edges[key] = lineno
        elif tag == "w":
            if n is None:
                raise ParseError(lineno, "malformed", "weight line before header")
            if len(fields) != 3:
                raise ParseError(lineno, "malformed", "weight line must be 'w <u> <value>'")
            u = _parse_int(fields[1], lineno, "vertex id")
            if not 0 <= u < n:
                raise ParseError(lineno, "vertex-range", f"vertex {u} out of range 0..{n - 1}")
            if u in weights:
                raise ParseError(lineno, "malformed", f"duplicate weight for vertex {u}")
            weights[u] = _parse_weight(fields[2], lineno)
        else:
            raise ParseError(lineno, "malformed", f"unknown directive {tag!r}")
    if n is None:
        raise ParseError(1, "malformed", "missing 'p <n> <m>' header")
    if len(edges) != m:
        raise ParseError(header_line, "malformed", f"header declares {m} edges, found {len(edges)}")
    graph = Graph(n, frozenset(edges))
    ws = tuple(weights.get(v, Fraction(1)) for v in range(n))
    return WeightedGraph(graph, ws)


def serialize_graph(wg: WeightedGraph) -> str:
    """Canonical text form: sorted edges, then non-unit weights."""
    g = wg.graph
    lines = [f"p {g.n} {g.m}"]
    for u, v in g.sorted_edges():
        lines.append(f"e {u} {v}")
    for v in range(g.n):
        if wg.weights[v] != 1:
            lines.append(f"w {v} {wg.weights[v]}")
    return "\n".join(lines) + "\n"
