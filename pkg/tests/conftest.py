from __future__ import annotations

import random

from starchrome.graph import Graph, from_edges


def path_graph(n: int) -> Graph:
    return from_edges(n, [(i, i + 1) for i in range(n - 1)])


def cycle_graph(n: int) -> Graph:
    return from_edges(n, [(i, (i + 1) % n) for i in range(n)])


def fan_graph(order: int) -> Graph:
    edges = [(0, i) for i in range(1, order)]
    edges += [(i, i + 1) for i in range(1, order - 1)]
    return from_edges(order, edges)


def k4() -> Graph:
    return from_edges(4, [(0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (2, 3)])


def k23() -> Graph:
    return from_edges(5, [(0, 2), (0, 3), (0, 4), (1, 2), (1, 3), (1, 4)])


def g61() -> Graph:
    return from_edges(6, [(0, 1), (0, 2), (0, 3), (0, 4), (1, 2), (2, 5), (3, 5), (3, 4), (2, 3)])


def g61_prime() -> Graph:
    return from_edges(6, [(0, 1), (0, 4), (1, 2), (2, 5), (3, 5), (3, 4), (2, 3)])


def g62() -> Graph:
    return from_edges(6, [(0, 1), (1, 2), (0, 2), (0, 3), (0, 4), (2, 3), (3, 4), (3, 5), (4, 5)])


def random_connected_graph(rng: random.Random, max_edges: int, max_n: int = 8) -> Graph:
    """Spanning tree plus extra edges, at most max_edges total."""
    n = rng.randint(2, max_n)
    edges: set[tuple[int, int]] = set()
    verts = list(range(n))
    rng.shuffle(verts)
    for i in range(1, n):
        u, v = verts[rng.randint(0, i - 1)], verts[i]
        edges.add((min(u, v), max(u, v)))
    extras = [
        (i, j)
        for i in range(n)
        for j in range(i + 1, n)
        if (i, j) not in edges
    ]
    rng.shuffle(extras)
    want = rng.randint(n - 1, max_edges)
    while len(edges) < want and extras:
        edges.add(extras.pop())
    return from_edges(n, sorted(edges))
