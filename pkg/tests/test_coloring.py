import random
from fractions import Fraction

import pytest

from hitset import (
    Coloring,
    CopyHypergraph,
    Digraph,
    Graph,
    InvalidColoringError,
    Pattern,
    WeightedGraph,
    color_digraph,
    color_simp,
    cover_colored_hypergraph,
    solve_cover_lp,
    unit_weights,
)
from helpers import complete_graph, path_graph, random_hypergraph, random_weights

P3 = Pattern(path_graph(3))


def _proper(d: Digraph, coloring: Coloring) -> bool:
    return all(coloring.colors[u] != coloring.colors[v] for u, v in d.arcs)


def test_arcless():
    c = color_digraph(Digraph(4), 2)
    assert set(c.colors) == {0}


def test_directed_path():
    d = Digraph(3, [(0, 1), (1, 2)])
    c = color_digraph(d, 1)
    assert _proper(d, c)
    assert len(set(c.colors)) <= 3


def test_directed_five_cycle():
    d = Digraph(5, [(i, (i + 1) % 5) for i in range(5)])
    c = color_digraph(d, 1)
    assert _proper(d, c)
    assert len(set(c.colors)) == 3  # odd cycle needs three


def test_out_degree_violation():
    with pytest.raises(ValueError):
        color_digraph(Digraph(3, [(0, 1), (0, 2)]), 1)


@pytest.mark.parametrize("seed", range(10))
def test_random_digraph_property(seed):
    rng = random.Random(seed)
    n = rng.randint(1, 12)
    m = rng.randint(1, 6)
    arcs = set()
    for u in range(n):
        targets = rng.sample([v for v in range(n) if v != u], min(rng.randint(0, m), n - 1))
        arcs.update((u, v) for v in targets)
    d = Digraph(n, arcs)
    c = color_digraph(d, m)
    assert _proper(d, c)
    assert len(set(c.colors)) <= 2 * m + 1
    assert c.t == 2 * m + 1


def test_color_simp_triangle_host():
    g = unit_weights(complete_graph(3))
    coloring = Coloring((0, 1, 2), 6)
    selected = color_simp(g, P3, coloring)
    # covers the one copy within the guaranteed budget 3 * (5/6) * 1
    assert len(selected) >= 1
    assert sum(g.weights[v] for v in selected) <= Fraction(5, 2)


def test_color_simp_two_disjoint_copies():
    g = unit_weights(Graph(6, [(0, 1), (1, 2), (3, 4), (4, 5)]))
    coloring = Coloring((0, 1, 2, 0, 1, 2), 6)
    selected = color_simp(g, P3, coloring)
    assert sum(g.weights[v] for v in selected) <= Fraction(5)
    assert {1, 4} & set(selected) or len(selected) >= 2


def test_color_simp_pattern_free():
    g = unit_weights(Graph(3, [(0, 1)]))
    coloring = Coloring((0, 0, 0), 6)
    assert color_simp(g, P3, coloring) == ()


def test_color_simp_rejects_monochromatic():
    g = unit_weights(complete_graph(3))
    with pytest.raises(InvalidColoringError):
        color_simp(g, P3, Coloring((0, 0, 0), 6))


def test_color_simp_rejects_small_palette():
    g = unit_weights(complete_graph(3))
    with pytest.raises(ValueError):
        color_simp(g, P3, Coloring((0, 1, 0), 2))


def test_color_simp_rejects_zero_weights():
    g = WeightedGraph(Graph(3, [(0, 1), (1, 2)]), (Fraction(1), Fraction(0), Fraction(1)))
    with pytest.raises(ValueError):
        color_simp(g, P3, Coloring((0, 1, 2), 6))


def _valid_coloring(rng: random.Random, edges, n: int, t: int) -> Coloring:
    for _ in range(200):
        colors = tuple(rng.randrange(t) for _ in range(n))
        if all(len({colors[v] for v in e}) >= 2 for e in edges):
            return Coloring(colors, t)
    return Coloring(tuple(v % t for v in range(n)), t)  # rainbow fallback, t >= n


@pytest.mark.parametrize("seed", range(15))
def test_cover_bound_on_synthetic_hypergraphs(seed):
    rng = random.Random(900 + seed)
    n = rng.randint(3, 12)
    edges = random_hypergraph(rng, n, max_edges=12, min_size=2, max_size=4)
    weights = random_weights(rng, n)
    k = max(len(e) for e in edges)
    t = max(k, n)
    coloring = _valid_coloring(rng, edges, n, t)
    run = cover_colored_hypergraph(n, edges, weights, coloring, k)
    cover, _ = solve_cover_lp(CopyHypergraph(n, edges), weights)
    total = sum((weights[v] for v in run.selected), Fraction(0))
    assert run.top_cover_value == cover.value
    assert total * t <= k * (t - 1) * cover.value
    assert all(set(e) & set(run.selected) for e in edges)
