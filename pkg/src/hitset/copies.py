"""Enumeration of pattern copies: embeddings, vertex sets, rooted copies.

Copies are subgraph embeddings (not necessarily induced).  Backtracking
matches pattern vertices in a connectivity-respecting order with candidate
images tried in ascending id, so enumeration order is deterministic.
Distinct copies are deduplicated by vertex set: copies on the same
vertices are hit by the same vertices, so one hyperedge per set suffices.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Iterator

from .errors import BudgetExceededError
from .graphs import CopyHypergraph, Graph, WeightedGraph
from .patterns import Pattern

DEFAULT_MAX_COPIES = 10**6


@dataclass
class EnumerationBudget:
    """Caps the number of distinct copies an operation may enumerate."""

    max_copies: int = DEFAULT_MAX_COPIES
    exceeded: bool = False
    used: int = field(default=0, repr=False)

    def charge(self) -> bool:
        """Account for one more copy; False once the cap is hit."""
        if self.used >= self.max_copies:
            self.exceeded = True
            return False
        self.used += 1
        return True


@dataclass(frozen=True)
class Embedding:
    """Injective map from pattern vertices to host vertices.

    ``mapping[i]`` is the image of pattern vertex i; every pattern edge
    maps to a host edge.
    """

    mapping: tuple[int, ...]

    def __getitem__(self, pattern_vertex: int) -> int:
        return self.mapping[pattern_vertex]

    def image(self) -> frozenset[int]:
        return frozenset(self.mapping)

    def vertex_set(self) -> tuple[int, ...]:
        return tuple(sorted(self.mapping))


def is_embedding(g: Graph, h: Graph, mapping: tuple[int, ...]) -> bool:
    """Check injectivity and edge preservation of a candidate map."""
    if len(mapping) != h.n or len(set(mapping)) != h.n:
        return False
    if any(not 0 <= x < g.n for x in mapping):
        return False
    return all(g.has_edge(mapping[u], mapping[v]) for u, v in h.edges)


def _match_order(h: Graph, root: int | None) -> list[int]:
    """Root (or max-degree vertex) first, then most-anchored-first."""
    adj = h.adjacency()
    start = root if root is not None else max(range(h.n), key=lambda v: (len(adj[v]), -v))
    order = [start]
    placed = {start}
    while len(order) < h.n:
        best = None
        for u in range(h.n):
            if u in placed:
                continue
            anchors = sum(1 for x in adj[u] if x in placed)
            if anchors == 0:
                continue
            key = (anchors, len(adj[u]), -u)
            if best is None or key > best[0]:
                best = (key, u)
        if best is None:
            raise ValueError("pattern graph must be connected")
        order.append(best[1])
        placed.add(best[1])
    return order


def embeddings(
    g: Graph,
    h: Graph,
    *,
    root: int | None = None,
    root_image: int | None = None,
    allowed: frozenset[int] | None = None,
    forbidden: frozenset[int] | None = None,
) -> Iterator[Embedding]:
    """Yield embeddings of ``h`` into ``g`` in deterministic order.

    ``root``/``root_image`` pin one pattern vertex to one host vertex.
    ``allowed`` restricts all images; ``forbidden`` blocks images of the
    non-root pattern vertices only.
    """
    if h.n == 0 or h.n > g.n:
        return
    if (root is None) != (root_image is None):
        raise ValueError("root and root_image must be given together")
    g_adj = g.adjacency()
    g_sets = [set(row) for row in g_adj]
    h_adj = h.adjacency()
    h_deg = [len(row) for row in h_adj]
    order = _match_order(h, root)
    pos_of = {hv: i for i, hv in enumerate(order)}
    anchors: list[int] = []
    checks: list[tuple[int, ...]] = []
    for idx, hv in enumerate(order):
        prior = sorted(pos_of[x] for x in h_adj[hv] if pos_of[x] < idx)
        anchors.append(prior[0] if prior else -1)
        checks.append(tuple(prior))

    image = [-1] * h.n
    used: set[int] = set()

    def extend(idx: int) -> Iterator[Embedding]:
        if idx == h.n:
            mapping = [0] * h.n
            for pos, hv in enumerate(order):
                mapping[hv] = image[pos]
            yield Embedding(tuple(mapping))
            return
        hv = order[idx]
        if idx == 0:
            base = [root_image] if root_image is not None else (
                sorted(allowed) if allowed is not None else range(g.n)
            )
        else:
            base = g_adj[image[anchors[idx]]]
        skip_forbidden = forbidden if not (idx == 0 and root is not None) else None
        for c in base:
            if c in used:
                continue
            if allowed is not None and c not in allowed:
                continue
            if skip_forbidden is not None and c in skip_forbidden:
                continue
            if len(g_adj[c]) < h_deg[hv]:
                continue
            if any(image[p] not in g_sets[c] for p in checks[idx]):
                continue
            image[idx] = c
            used.add(c)
            yield from extend(idx + 1)
            used.discard(c)
        image[idx] = -1

    yield from extend(0)


def enumerate_copies(
    g: Graph,
    h: Pattern,
    budget: EnumerationBudget | None = None,
    *,
    allowed: frozenset[int] | None = None,
) -> list[tuple[tuple[int, ...], Embedding]]:
    """Distinct copy vertex sets with one witness embedding each.

    Result is sorted lexicographically by vertex set.  When the budget
    runs out its ``exceeded`` flag is set and the partial result returned.
    """
    if budget is None:
        budget = EnumerationBudget()
    seen: dict[tuple[int, ...], Embedding] = {}
    for emb in embeddings(g, h.graph, allowed=allowed):
        key = emb.vertex_set()
        if key in seen:
            continue
        if not budget.charge():
            break
        seen[key] = emb
    return sorted(seen.items())


def central_vertices(g: Graph, h: Pattern, root: int) -> tuple[int, ...]:
    """Host vertices at which some copy of the pattern can be centred."""
    return tuple(
        u for u in range(g.n) if find_rooted_copy(g, h.graph, root, u) is not None
    )


def find_rooted_copy(
    g: Graph,
    f: Graph,
    f_root: int,
    at: int,
    forbidden: frozenset[int] = frozenset(),
) -> Embedding | None:
    """First embedding of ``f`` mapping its root to ``at``.

    Non-root vertices avoid ``forbidden``; the root image is exempt.
    """
    if not 0 <= at < g.n:
        return None
    for emb in embeddings(g, f, root=f_root, root_image=at, forbidden=forbidden):
        return emb
    return None


def build_copy_hypergraph(
    g: WeightedGraph, h: Pattern, budget: EnumerationBudget | None = None
) -> CopyHypergraph:
    """Hypergraph whose hyperedges are the distinct copy vertex sets."""
    if budget is None:
        budget = EnumerationBudget()
    copies = enumerate_copies(g.graph, h, budget)
    if budget.exceeded:
        raise BudgetExceededError(
            f"copy enumeration exceeded the budget of {budget.max_copies}"
        )
    return CopyHypergraph(g.n, tuple(vs for vs, _ in copies))
