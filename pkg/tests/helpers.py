"""Shared test fixtures: small graphs, naive reference oracles, tree lists."""

from __future__ import annotations

import itertools
import random
from fractions import Fraction
from heapq import heapify, heappop, heappush

from hitset import Graph, Pattern, WeightedGraph, random_graph


def path_graph(n: int) -> Graph:
    return Graph(n, [(i, i + 1) for i in range(n - 1)])


def cycle_graph(n: int) -> Graph:
    return Graph(n, [(i, (i + 1) % n) for i in range(n)])


def complete_graph(n: int) -> Graph:
    return Graph(n, [(u, v) for u in range(n) for v in range(u + 1, n)])


def star_graph(leaves: int) -> Graph:
    return Graph(leaves + 1, [(0, i) for i in range(1, leaves + 1)])


def hub_branches_pattern() -> Pattern:
    """Nine vertices around hub 2: a triangle, a chorded triangle, a square.

    Branch {0,1,2} is a triangle; branch {2,3,4,5} is a triangle on 3,4,5
    with 2 adjacent to 3 and 5; branch {2,6,7,8} is a four-cycle.  The
    triangle branch embeds into the chorded branch with the hub fixed, so
    the hub is a usable cut vertex.
    """
    edges = [
        (0, 1), (0, 2), (1, 2),
        (3, 4), (4, 5), (3, 5), (2, 3), (2, 5),
        (2, 6), (2, 7), (6, 8), (7, 8),
    ]
    return Pattern(Graph(9, edges))


def triangle_square_share_vertex() -> Pattern:
    """A triangle and a four-cycle sharing one vertex; no branch embeds
    into another, so only the trivial factor applies."""
    edges = [(0, 1), (0, 2), (1, 2), (0, 3), (3, 4), (4, 5), (0, 5)]
    return Pattern(Graph(6, edges))


def _prufer_decode(seq: tuple[int, ...], n: int) -> list[tuple[int, int]]:
    degree = [1] * n
    for x in seq:
        degree[x] += 1
    leaves = [v for v in range(n) if degree[v] == 1]
    heapify(leaves)
    edges = []
    for x in seq:
        leaf = heappop(leaves)
        edges.append((leaf, x))
        degree[x] -= 1
        if degree[x] == 1:
            heappush(leaves, x)
    edges.append((heappop(leaves), heappop(leaves)))
    return edges


def canonical_form(g: Graph):
    """Isomorphism-invariant key: minimal edge list over relabelings that
    assign label blocks per degree class."""
    degs = [0] * g.n
    for u, v in g.edges:
        degs[u] += 1
        degs[v] += 1
    by_deg: dict[int, list[int]] = {}
    for v in range(g.n):
        by_deg.setdefault(degs[v], []).append(v)
    classes = [by_deg[d] for d in sorted(by_deg)]
    offsets = []
    off = 0
    for cls in classes:
        offsets.append(off)
        off += len(cls)
    best = None
    for assignment in itertools.product(*(itertools.permutations(c) for c in classes)):
        label = {}
        for cls_idx, ordering in enumerate(assignment):
            for i, v in enumerate(ordering):
                label[v] = offsets[cls_idx] + i
        mapped = tuple(sorted(tuple(sorted((label[u], label[v]))) for u, v in g.edges))
        if best is None or mapped < best:
            best = mapped
    return (g.n, best)


def all_trees(n: int) -> list[Graph]:
    """All trees on n vertices up to isomorphism (small n only)."""
    if n == 1:
        return [Graph(1)]
    if n == 2:
        return [Graph(2, [(0, 1)])]
    seen: dict[object, Graph] = {}
    for seq in itertools.product(range(n), repeat=n - 2):
        g = Graph(n, _prufer_decode(seq, n))
        key = canonical_form(g)
        if key not in seen:
            seen[key] = g
    return list(seen.values())


def naive_has_copy(g: Graph, h: Graph, allowed=None) -> bool:
    """Copy detection by trying every injective map; the slow reference."""
    verts = [v for v in range(g.n) if allowed is None or v in allowed]
    for combo in itertools.permutations(verts, h.n):
        if all(g.has_edge(combo[u], combo[v]) for u, v in h.edges):
            return True
    return False


def naive_copy_sets(g: Graph, h: Graph) -> set[tuple[int, ...]]:
    found = set()
    for combo in itertools.permutations(range(g.n), h.n):
        if all(g.has_edge(combo[u], combo[v]) for u, v in h.edges):
            found.add(tuple(sorted(combo)))
    return found


def naive_min_hitting(wg: WeightedGraph, h: Graph) -> Fraction:
    """Minimum hitting weight by full subset enumeration."""
    n = wg.n
    best = None
    for mask in range(1 << n):
        removed = {v for v in range(n) if mask >> v & 1}
        if naive_has_copy(wg.graph, h, allowed=set(range(n)) - removed):
            continue
        w = wg.total(removed)
        if best is None or w < best:
            best = w
    return best


def naive_min_vertex_cover(g: Graph) -> int:
    best = g.n
    for mask in range(1 << g.n):
        s = {v for v in range(g.n) if mask >> v & 1}
        if all(u in s or v in s for u, v in g.edges):
            best = min(best, len(s))
    return best


def random_hypergraph(rng: random.Random, n: int, max_edges: int,
                      min_size: int = 2, max_size: int = 4):
    m = rng.randint(1, max_edges)
    edges = []
    for _ in range(m):
        size = rng.randint(min_size, min(max_size, n))
        edges.append(tuple(sorted(rng.sample(range(n), size))))
    return tuple(edges)


def random_weights(rng: random.Random, n: int, max_den: int = 8):
    return tuple(Fraction(rng.randint(1, 8), rng.randint(1, max_den)) for _ in range(n))


def base_graph_corpus() -> list[tuple[str, Graph]]:
    """Fixed family of base graphs on at most 6 vertices for gadget tests."""
    return [
        ("empty3", Graph(3)),
        ("k2", complete_graph(2)),
        ("p3", path_graph(3)),
        ("k3", complete_graph(3)),
        ("p4", path_graph(4)),
        ("paw", Graph(4, [(0, 1), (1, 2), (0, 2), (2, 3)])),
        ("c4", cycle_graph(4)),
        ("k4", complete_graph(4)),
        ("star4", star_graph(4)),
        ("bull", Graph(5, [(0, 1), (1, 2), (0, 2), (1, 3), (2, 4)])),
        ("c5", cycle_graph(5)),
        ("k23", Graph(5, [(0, 2), (0, 3), (0, 4), (1, 2), (1, 3), (1, 4)])),
        ("c6", cycle_graph(6)),
        ("prism", Graph(6, [(0, 1), (1, 2), (0, 2), (3, 4), (4, 5), (3, 5),
                            (0, 3), (1, 4), (2, 5)])),
        ("rand6", random_graph(6, 0.5, 11)),
    ]
