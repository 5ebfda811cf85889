"""Hypergraph colouring and the colour-guided cover selection.

A digraph with out-degree at most m always has a vertex of total degree
at most 2m, so peeling and greedy re-insertion gives a proper colouring
of its underlying graph with at most 2m+1 colours.

Given a colouring with no monochromatic hyperedge and a palette of t >= k
colours (k = largest hyperedge size), the selection routine returns a
cover of weight at most k(1 - 1/t) times the fractional cover value.  It
alternates two moves driven by an exact LP solve: when the optimal cover
is positive everywhere, drop the heaviest colour class and keep the rest;
otherwise a zero-mass vertex pinpoints a hyperedge whose largest-mass
vertex can be bought at a controlled price.  All bound inequalities are
re-checked exactly at runtime on every invocation.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Sequence

from .copies import EnumerationBudget, build_copy_hypergraph
from .errors import InvalidColoringError, VerificationError
from .graphs import CopyHypergraph, Digraph, WeightedGraph
from .lp import solve_cover_lp
from .patterns import Pattern

_ZERO = Fraction(0)


@dataclass(frozen=True)
class Coloring:
    """Colour per vertex, drawn from the palette 0..t-1."""

    colors: tuple[int, ...]
    t: int

    def __post_init__(self):
        if self.t < 1:
            raise ValueError("palette must have at least one colour")
        if any(not 0 <= c < self.t for c in self.colors):
            raise ValueError("colour out of palette range")


def color_digraph(d: Digraph, m: int) -> Coloring:
    """Proper colouring of the underlying graph with at most 2m+1 colours.

    Requires every out-degree at most m.  Peels the smallest-id vertex of
    total degree at most 2m, then colours greedily on re-insertion.
    """
    if any(deg > m for deg in d.out_degrees()):
        raise ValueError(f"out-degree bound {m} violated")
    n = d.n
    arcs_at: list[list[tuple[int, int]]] = [[] for _ in range(n)]
    neighbors: list[set[int]] = [set() for _ in range(n)]
    for u, v in d.arcs:
        arcs_at[u].append((u, v))
        arcs_at[v].append((u, v))
        neighbors[u].add(v)
        neighbors[v].add(u)

    degree = [len(arcs_at[v]) for v in range(n)]
    alive = [True] * n
    order: list[int] = []
    for _ in range(n):
        v = next((u for u in range(n) if alive[u] and degree[u] <= 2 * m), -1)
        if v == -1:
            raise VerificationError("no low-degree vertex; degree counting is broken")
        order.append(v)
        alive[v] = False
        for a, b in arcs_at[v]:
            other = b if a == v else a
            if alive[other]:
                degree[other] -= 1

    colors = [-1] * n
    for v in reversed(order):
        used = {colors[u] for u in neighbors[v] if colors[u] != -1}
        c = 0
        while c in used:
            c += 1
        colors[v] = c
    t = 2 * m + 1
    if any(c >= t for c in colors):
        raise VerificationError("greedy colouring exceeded its palette")
    return Coloring(tuple(colors), t)


@dataclass
class CoverRun:
    """Outcome of one colour-guided selection."""

    selected: tuple[int, ...]
    top_cover_value: Fraction
    steps: tuple[str, ...]


def cover_colored_hypergraph(
    n: int,
    hyperedges: Sequence[tuple[int, ...]],
    weights: Sequence[Fraction],
    coloring: Coloring,
    max_edge_size: int,
) -> CoverRun:
    """Select a cover of weight at most k(1 - 1/t) times the LP optimum.

    ``max_edge_size`` is k; every hyperedge must have size between 2 and
    k and be at least 2-coloured.  Weights must be positive on every
    covered vertex.  Raises InvalidColoringError on a monochromatic
    hyperedge and VerificationError if any of the exact bound checks
    fail (which would indicate a bug, not bad input).
    """
    t = coloring.t
    k = max_edge_size
    if k < 2:
        raise ValueError("hyperedges must have at least two vertices")
    if t < k:
        raise ValueError("palette must be at least the largest edge size")
    colors = coloring.colors
    edges = sorted({tuple(sorted(set(e))) for e in hyperedges})
    for e in edges:
        if len(e) > k:
            raise ValueError(f"hyperedge {e} larger than the declared bound {k}")
        if len(e) < 2:
            raise ValueError(f"hyperedge {e} has fewer than two vertices")
        if e[-1] >= len(colors):
            raise ValueError(f"vertex {e[-1]} has no colour")
        if len({colors[v] for v in e}) < 2:
            raise InvalidColoringError(f"monochromatic hyperedge {e}")

    original = list(edges)
    picked: list[int] = []
    steps: list[str] = []
    top_value: Fraction | None = None
    pending_bound: Fraction | None = None

    while edges:
        cover, matching = solve_cover_lp(CopyHypergraph(n, tuple(edges)), weights)
        if top_value is None:
            top_value = cover.value
        if pending_bound is not None and cover.value > pending_bound:
            raise VerificationError("cover value did not shrink after a removal")
        pending_bound = None
        active = sorted(cover.values)
        zeros = [v for v in active if cover.values[v] == 0]
        if not zeros:
            w_active = sum((weights[v] for v in active), _ZERO)
            paid = sum((matching.values[e] * len(e) for e in edges), _ZERO)
            if w_active != paid:
                raise VerificationError("tight-capacity identity failed")
            if w_active > k * cover.value:
                raise VerificationError("active weight exceeds k times the LP value")
            class_weight: dict[int, Fraction] = {}
            for v in active:
                class_weight[colors[v]] = class_weight.get(colors[v], _ZERO) + weights[v]
            keep_color = max(class_weight, key=lambda c: (class_weight[c], -c))
            kept = class_weight[keep_color]
            if (w_active - kept) * t > (t - 1) * w_active:
                raise VerificationError("heaviest colour class is too light")
            chosen = [v for v in active if colors[v] != keep_color]
            picked.extend(chosen)
            steps.append(f"full-support: keep colour {keep_color}, select {len(chosen)} vertices")
            break
        v = zeros[0]
        edge = next(e for e in edges if v in e)
        pick = max(edge, key=lambda u: (cover.values[u], -u))
        mass = cover.values[pick]
        if mass * (k - 1) < 1:
            raise VerificationError("largest cover mass on the edge is too small")
        if Fraction(1, k - 1) < Fraction(t, k * (t - 1)):
            raise VerificationError("palette too small for the pricing step")
        picked.append(pick)
        pending_bound = cover.value - weights[pick] * mass
        edges = [e for e in edges if pick not in e]
        steps.append(f"zero-support at {v}: select {pick} from edge {','.join(map(str, edge))}")

    if pending_bound is not None and pending_bound < 0:
        raise VerificationError("cover value dropped below zero")
    if top_value is None:
        top_value = _ZERO
    selected = tuple(sorted(set(picked)))
    if len(selected) != len(picked):
        raise VerificationError("a vertex was selected twice")
    total = sum((weights[v] for v in selected), _ZERO)
    if total * t > k * (t - 1) * top_value:
        raise VerificationError("selection exceeded the colour bound")
    for e in original:
        if not set(e) & set(selected):
            raise VerificationError("selection misses a hyperedge")
    return CoverRun(selected, top_value, tuple(steps))


def color_simp(
    g: WeightedGraph,
    h: Pattern,
    coloring: Coloring,
    budget: EnumerationBudget | None = None,
) -> tuple[int, ...]:
    """Cover every copy of the pattern, guided by the colouring.

    Weights must be strictly positive everywhere and the colouring must
    leave no copy monochromatic; the output weight is at most
    k(1 - 1/t) times the fractional cover value of the copy hypergraph.
    """
    if any(w <= 0 for w in g.weights):
        raise ValueError("all weights must be strictly positive")
    if len(coloring.colors) != g.n:
        raise ValueError("colouring must cover every vertex")
    hg = build_copy_hypergraph(g, h, budget)
    run = cover_colored_hypergraph(g.n, hg.hyperedges, g.weights, coloring, h.k)
    return run.selected
