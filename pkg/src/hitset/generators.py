"""Instance generators with known structure.

The two vertex-cover gadgets produce instances whose exact minimum
hitting weight equals the minimum vertex cover of the base graph: one
glues a pattern copy onto every base edge (patterns of minimum degree 2),
the other glues the pattern minus a degree-1 vertex onto every base
vertex.  The cloud construction replaces each base-hypergraph vertex by a
cloud of fresh vertices and plants tagged pattern copies on random cloud
positions; it stresses the enumerator and the solvers on instances with
many overlapping copies.

Randomness comes from PCG64 seeded through ``numpy``'s SeedSequence; the
cloud construction derives one independent stream per (hyperedge index,
copy index) via spawn keys, so output is bit-exact reproducible for a
fixed seed regardless of generation order.
"""

from __future__ import annotations

from collections import defaultdict
from dataclasses import dataclass

import numpy as np

from .errors import ParseError
from .graphs import Edge, Graph, normalize_edge, serialize_graph, unit_weights
from .patterns import Pattern, block_cut_tree


def _rng(seed: int, *spawn_key: int) -> np.random.Generator:
    return np.random.Generator(np.random.PCG64(np.random.SeedSequence(seed, spawn_key=spawn_key)))


def random_graph(n: int, p: float, seed: int) -> Graph:
    """Seeded uniform random graph: each pair becomes an edge with probability p."""
    if not 0 <= p <= 1:
        raise ValueError("edge probability must lie in [0, 1]")
    rng = _rng(seed)
    edges = [
        (u, v) for u in range(n) for v in range(u + 1, n) if rng.random() < p
    ]
    return Graph(n, frozenset(edges))


def _glue_edge(h: Pattern) -> Edge:
    """Edge of a leaf block with neither endpoint a cut vertex."""
    bct = block_cut_tree(h.graph)
    cuts = set(bct.cut_vertices)
    for block, block_cuts in zip(bct.blocks, bct.block_cuts):
        if len(block_cuts) > 1:
            continue
        members = set(block)
        for u, v in h.graph.sorted_edges():
            if u in members and v in members and u not in cuts and v not in cuts:
                return (u, v)
    raise ValueError("no usable edge; is the pattern minimum degree 2?")


def gadget_edge_glue(g: Graph, h: Pattern) -> tuple[Graph, dict[int, tuple[Edge, int]]]:
    """Glue a pattern copy onto every edge of the base graph.

    Requires the pattern to have minimum degree at least 2.  The minimum
    hitting weight of the output (unit weights) equals the minimum vertex
    cover of the base.  Provenance maps each new vertex to (base edge,
    pattern vertex).
    """
    adj = h.graph.adjacency()
    if any(len(row) < 2 for row in adj):
        raise ValueError("edge gadget needs a pattern of minimum degree 2")
    x0, y0 = _glue_edge(h)
    nxt = g.n
    edges = set(g.edges)
    provenance: dict[int, tuple[Edge, int]] = {}
    for a, b in g.sorted_edges():
        mapping = {x0: a, y0: b}
        for hv in range(h.k):
            if hv not in mapping:
                mapping[hv] = nxt
                provenance[nxt] = ((a, b), hv)
                nxt += 1
        for p, q in h.graph.sorted_edges():
            edges.add(normalize_edge(mapping[p], mapping[q]))
    return Graph(nxt, frozenset(edges)), provenance


def gadget_vertex_glue(g: Graph, h: Pattern) -> tuple[Graph, dict[int, tuple[int, int]]]:
    """Glue the pattern minus a degree-1 vertex onto every base vertex.

    Requires a degree-1 pattern vertex; the glued piece attaches at that
    vertex's unique neighbour.  The minimum hitting weight of the output
    equals the minimum vertex cover of the base.  Provenance maps each
    new vertex to (base vertex, pattern vertex).
    """
    adj = h.graph.adjacency()
    leaves = [v for v in range(h.k) if len(adj[v]) == 1]
    if not leaves:
        raise ValueError("vertex gadget needs a degree-1 pattern vertex")
    v0 = leaves[0]
    u0 = adj[v0][0]
    piece_edges = [e for e in h.graph.sorted_edges() if v0 not in e]
    nxt = g.n
    edges = set(g.edges)
    provenance: dict[int, tuple[int, int]] = {}
    for u in range(g.n):
        mapping = {u0: u}
        for hv in range(h.k):
            if hv != v0 and hv not in mapping:
                mapping[hv] = nxt
                provenance[nxt] = (u, hv)
                nxt += 1
        for p, q in piece_edges:
            edges.add(normalize_edge(mapping[p], mapping[q]))
    return Graph(nxt, frozenset(edges)), provenance


@dataclass(frozen=True)
class GLParams:
    """Parameters of the cloud construction.

    ``base_edges`` is a k-uniform hyperedge list (ordered tuples) on
    ``base_n`` vertices; every hyperedge spawns ``multiplier *
    cloud_size`` planted copies.
    """

    base_n: int
    base_edges: tuple[tuple[int, ...], ...]
    cloud_size: int
    multiplier: int
    seed: int

    def __post_init__(self):
        if self.cloud_size < 1:
            raise ValueError("cloud size must be at least 1")
        if self.multiplier < 1:
            raise ValueError("multiplier must be at least 1")
        if self.seed < 0:
            raise ValueError("seed must be nonnegative")
        for e in self.base_edges:
            if len(set(e)) != len(e):
                raise ValueError(f"hyperedge {e} has repeated vertices")
            if any(not 0 <= v < self.base_n for v in e):
                raise ValueError(f"hyperedge {e} out of range")


@dataclass
class TaggedGraph:
    """Cloud instance plus the provenance of every planted edge.

    ``tags`` records the first tag per edge; ``all_tags`` keeps every tag
    of collapsed parallel plantings, so intended copies stay checkable.
    ``planted`` lists (hyperedge index, copy index, vertex tuple) for
    every planted copy.
    """

    graph: Graph
    clouds: dict[int, tuple[int, ...]]
    tags: dict[Edge, tuple[int, int]]
    all_tags: dict[Edge, tuple[tuple[int, int], ...]]
    planted: tuple[tuple[int, int, tuple[int, ...]], ...]


def gl_random_instance(h: Pattern, params: GLParams) -> TaggedGraph:
    """Plant tagged pattern copies on random cloud positions.

    Vertex (v, l) of the output is id v * cloud_size + l.  Copy j of
    hyperedge ei maps pattern vertex i to cloud position (e[i], l_i) with
    the l_i drawn from the stream spawned at (ei, j).  Parallel planted
    edges collapse to one simple edge; all their tags are retained.
    """
    k = h.k
    for e in params.base_edges:
        if len(e) != k:
            raise ValueError(
                f"hyperedge {e} has size {len(e)}, pattern needs {k}"
            )
    B = params.cloud_size
    edges: set[Edge] = set()
    tags: dict[Edge, tuple[int, int]] = {}
    all_tags: dict[Edge, list[tuple[int, int]]] = defaultdict(list)
    planted: list[tuple[int, int, tuple[int, ...]]] = []
    pattern_edges = h.graph.sorted_edges()
    for ei, e in enumerate(params.base_edges):
        for j in range(1, params.multiplier * B + 1):
            rng = _rng(params.seed, ei, j)
            slots = rng.integers(0, B, size=k)
            verts = tuple(e[i] * B + int(slots[i]) for i in range(k))
            for p, q in pattern_edges:
                ge = normalize_edge(verts[p], verts[q])
                edges.add(ge)
                all_tags[ge].append((ei, j))
                tags.setdefault(ge, (ei, j))
            planted.append((ei, j, verts))
    graph = Graph(params.base_n * B, frozenset(edges))
    clouds = {v: tuple(range(v * B, (v + 1) * B)) for v in range(params.base_n)}
    return TaggedGraph(
        graph,
        clouds,
        tags,
        {e: tuple(ts) for e, ts in all_tags.items()},
        tuple(planted),
    )


def serialize_tagged_graph(tg: TaggedGraph) -> str:
    """Instance text plus a comment sidecar with tags, clouds and plantings.

    The sidecar lives in comment lines, so the output parses as a plain
    graph file too.
    """
    parts = [serialize_graph(unit_weights(tg.graph))]
    parts.append("# tags\n")
    for u, v in sorted(tg.all_tags):
        entries = " ".join(f"{ei} {j}" for ei, j in tg.all_tags[(u, v)])
        parts.append(f"# t {u} {v} {entries}\n")
    parts.append("# clouds\n")
    for base in sorted(tg.clouds):
        members = " ".join(map(str, tg.clouds[base]))
        parts.append(f"# c {base} {members}\n")
    parts.append("# planted\n")
    for ei, j, verts in tg.planted:
        parts.append(f"# g {ei} {j} {' '.join(map(str, verts))}\n")
    return "".join(parts)


def parse_hypergraph_text(text: str | bytes) -> tuple[int, tuple[tuple[int, ...], ...]]:
    """Read a base hypergraph: 'p <n> <m>' then m lines 'h <v1> ... <vk>'."""
    if isinstance(text, (bytes, bytearray)):
        text = text.decode("utf-8")
    n = m = None
    edges: list[tuple[int, ...]] = []
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        fields = line.split()
        if fields[0] == "p":
            if n is not None:
                raise ParseError(lineno, "malformed", "duplicate header line")
            if len(fields) != 3:
                raise ParseError(lineno, "malformed", "header must be 'p <n> <m>'")
            try:
                n, m = int(fields[1]), int(fields[2])
            except ValueError:
                raise ParseError(lineno, "malformed", "counts must be integers") from None
        elif fields[0] == "h":
            if n is None:
                raise ParseError(lineno, "malformed", "hyperedge line before header")
            try:
                vs = tuple(int(x) for x in fields[1:])
            except ValueError:
                raise ParseError(lineno, "malformed", "vertex ids must be integers") from None
            if not vs:
                raise ParseError(lineno, "malformed", "empty hyperedge")
            for v in vs:
                if not 0 <= v < n:
                    raise ParseError(lineno, "vertex-range", f"vertex {v} out of range 0..{n - 1}")
            edges.append(vs)
        else:
            raise ParseError(lineno, "malformed", f"unknown directive {fields[0]!r}")
    if n is None:
        raise ParseError(1, "malformed", "missing 'p <n> <m>' header")
    if len(edges) != m:
        raise ParseError(1, "malformed", f"header declares {m} hyperedges, found {len(edges)}")
    return n, tuple(edges)
