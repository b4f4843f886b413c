"""Exact star chromatic index by iterative-deepening depth-first search.

Palette size k ascends from the maximum degree, so the first feasible k is
exact by construction.  Within a palette, edges are assigned depth-first in
a BFS order rooted at a maximum-degree vertex, a fresh color id may only be
introduced as max-used+1, and every assignment is vetted incrementally: a
proper-conflict bitmask test, then a scan of the alternating walks of at
most four edges through the new edge.  Partial colorings stay proper, so a
vertex carries at most one edge of each color and walk extensions are O(1)
table lookups.
"""

from __future__ import annotations

import random
import time
from dataclasses import dataclass

from .coloring import EdgeColoring, star_violations
from .errors import BudgetExhausted, TooLarge
from .graph import Graph

DEFAULT_EDGE_LIMIT = 40


@dataclass(frozen=True)
class Budget:
    max_nodes: int = 100_000_000
    max_seconds: float = 300.0


@dataclass(frozen=True)
class SolveResult:
    chi: int
    witness: EdgeColoring
    nodes_expanded: int
    elapsed: float


class _BudgetHit(Exception):
    pass


def solver_edge_order(g: Graph) -> list[int]:
    """Edge ids ordered so every prefix is connected where possible.

    BFS from a maximum-degree vertex (smallest id on ties); an edge ranks by
    the BFS positions of its endpoints, later endpoint first.
    """
    n = g.n
    nbrs = g.neighbors()
    degs = g.degrees()
    pos = [-1] * n
    counter = 0
    while True:
        remaining = [v for v in range(n) if pos[v] < 0]
        if not remaining:
            break
        start = max(remaining, key=lambda v: (degs[v], -v))
        queue = [start]
        pos[start] = counter
        counter += 1
        head = 0
        while head < len(queue):
            v = queue[head]
            head += 1
            for w in nbrs[v]:
                if pos[w] < 0:
                    pos[w] = counter
                    counter += 1
                    queue.append(w)
    ranked = sorted(
        range(g.m),
        key=lambda i: (
            max(pos[g.edges[i][0]], pos[g.edges[i][1]]),
            min(pos[g.edges[i][0]], pos[g.edges[i][1]]),
        ),
    )
    return ranked


class _Search:
    """One palette-feasibility search over a fixed edge order."""

    def __init__(self, g: Graph, budget: Budget):
        self.g = g
        self.budget = budget
        self.nodes = 0
        self.started = time.monotonic()
        order = solver_edge_order(g)
        self.order = order
        self.edges = [g.edges[i] for i in order]
        adj: list[list[tuple[int, int]]] = [[] for _ in range(g.n)]
        for slot, (u, v) in enumerate(self.edges):
            adj[u].append((v, slot))
            adj[v].append((u, slot))
        self.adj = [tuple(entries) for entries in adj]

    def elapsed(self) -> float:
        return time.monotonic() - self.started

    def feasible(self, k: int) -> list[int] | None:
        """A coloring (by edge slot) using at most k colors, or None."""
        g = self.g
        m = g.m
        if m == 0:
            return []
        edges = self.edges
        adj = self.adj
        colors = [0] * m
        vmask = [0] * g.n
        # cnbr[v][a]: neighbor joined to v by color a, or -1
        cnbr = [[-1] * (k + 1) for _ in range(g.n)]
        budget_nodes = self.budget.max_nodes
        budget_secs = self.budget.max_seconds

        def star_ok(u: int, v: int, a: int) -> bool:
            # Alternating walks a,b,a,b through the new edge.  With e at the
            # end: p-q-w-x-y; with e second: t-p-q-w-x.  Both need the a-edge
            # at w, so they share the x lookup; the orientation swap covers
            # the mirrored positions.
            for p, q in ((u, v), (v, u)):
                cn_p = cnbr[p]
                for w, slot in adj[q]:
                    b = colors[slot]
                    if b == 0 or b == a or w == p:
                        continue
                    x = cnbr[w][a]
                    if x >= 0 and x != q and x != p:
                        if cnbr[x][b] >= 0:
                            return False
                        t = cn_p[b]
                        if t >= 0 and t != q and t != w:
                            return False
            return True

        def dfs(i: int, maxused: int) -> bool:
            if i == m:
                return True
            u, v = edges[i]
            forbid = vmask[u] | vmask[v]
            cap = maxused + 1 if maxused < k else k
            for a in range(1, cap + 1):
                bit = 1 << a
                if forbid & bit:
                    continue
                self.nodes += 1
                if self.nodes >= budget_nodes:
                    raise _BudgetHit
                if not self.nodes % 4096 and self.elapsed() > budget_secs:
                    raise _BudgetHit
                if star_ok(u, v, a):
                    colors[i] = a
                    vmask[u] |= bit
                    vmask[v] |= bit
                    cnbr[u][a] = v
                    cnbr[v][a] = u
                    if dfs(i + 1, a if a > maxused else maxused):
                        return True
                    colors[i] = 0
                    vmask[u] ^= bit
                    vmask[v] ^= bit
                    cnbr[u][a] = -1
                    cnbr[v][a] = -1
            return False

        if dfs(0, 0):
            return list(colors)
        return None

    def coloring_from_slots(self, slot_colors: list[int]) -> EdgeColoring:
        mapping = {self.edges[i]: c for i, c in enumerate(slot_colors)}
        return EdgeColoring.from_mapping(self.g, mapping)


def greedy_star_upper(g: Graph, order_seed: int = 0) -> EdgeColoring:
    """Greedy coloring along a randomized BFS edge order; always validates.

    The palette it ends up using is an upper bound for the exact solver and
    the fallback bound reported when a budget runs out.
    """
    rng = random.Random(order_seed)
    n = g.n
    nbrs = [list(ns) for ns in g.neighbors()]
    for ns in nbrs:
        rng.shuffle(ns)
    pos = [-1] * n
    counter = 0
    vertices = list(range(n))
    rng.shuffle(vertices)
    for start in vertices:
        if pos[start] >= 0:
            continue
        queue = [start]
        pos[start] = counter
        counter += 1
        head = 0
        while head < len(queue):
            v = queue[head]
            head += 1
            for w in nbrs[v]:
                if pos[w] < 0:
                    pos[w] = counter
                    counter += 1
                    queue.append(w)
    order = sorted(
        range(g.m),
        key=lambda i: (
            max(pos[g.edges[i][0]], pos[g.edges[i][1]]),
            min(pos[g.edges[i][0]], pos[g.edges[i][1]]),
        ),
    )
    edges = [g.edges[i] for i in order]
    adj: list[list[tuple[int, int]]] = [[] for _ in range(n)]
    for slot, (u, v) in enumerate(edges):
        adj[u].append((v, slot))
        adj[v].append((u, slot))
    colors = [0] * g.m
    cnbr: list[dict[int, int]] = [dict() for _ in range(n)]

    def ok(u: int, v: int, a: int) -> bool:
        if a in cnbr[u] or a in cnbr[v]:
            return False
        for p, q in ((u, v), (v, u)):
            for w, slot in adj[q]:
                b = colors[slot]
                if b == 0 or b == a or w == p:
                    continue
                x = cnbr[w].get(a, -1)
                if x >= 0 and x != q and x != p:
                    if cnbr[x].get(b, -1) >= 0:
                        return False
                    t = cnbr[p].get(b, -1)
                    if t >= 0 and t != q and t != w:
                        return False
        return True

    for slot, (u, v) in enumerate(edges):
        a = 1
        while not ok(u, v, a):
            a += 1
        colors[slot] = a
        cnbr[u][a] = v
        cnbr[v][a] = u
    return EdgeColoring.from_mapping(g, {edges[i]: c for i, c in enumerate(colors)})


def star_palette_feasible(
    g: Graph, k: int, budget: Budget | None = None, edge_limit: int = DEFAULT_EDGE_LIMIT
) -> EdgeColoring | None:
    """A star edge coloring of g with at most k colors, or None if impossible.

    Raises BudgetExhausted if the search cannot be completed in budget.
    """
    if g.m > edge_limit:
        raise TooLarge(f"solver supports |E| <= {edge_limit}, got {g.m}")
    budget = budget or Budget()
    search = _Search(g, budget)
    try:
        slots = search.feasible(k)
    except _BudgetHit:
        upper = greedy_star_upper(g).palette_size()
        lower = max(g.max_degree(), 1)
        raise BudgetExhausted(lower, upper, search.nodes, search.elapsed()) from None
    if slots is None:
        return None
    return search.coloring_from_slots(slots)


def exact_chi_star(
    g: Graph, budget: Budget | None = None, edge_limit: int = DEFAULT_EDGE_LIMIT
) -> SolveResult:
    """Least k admitting a star edge coloring, with a validating witness."""
    if g.m > edge_limit:
        raise TooLarge(f"solver supports |E| <= {edge_limit}, got {g.m}")
    budget = budget or Budget()
    started = time.monotonic()
    if g.m == 0:
        return SolveResult(0, EdgeColoring(g, ()), 0, time.monotonic() - started)
    total_nodes = 0
    upper: int | None = None  # computed lazily on budget exhaustion
    k = max(g.max_degree(), 1)
    while k <= g.m:
        remaining = Budget(
            max_nodes=budget.max_nodes - total_nodes,
            max_seconds=budget.max_seconds - (time.monotonic() - started),
        )
        search = _Search(g, remaining)
        try:
            slots = search.feasible(k)
        except _BudgetHit:
            total_nodes += search.nodes
            if upper is None:
                upper = greedy_star_upper(g).palette_size()
            raise BudgetExhausted(
                k, upper, total_nodes, time.monotonic() - started
            ) from None
        total_nodes += search.nodes
        if slots is not None:
            witness = search.coloring_from_slots(slots)
            return SolveResult(k, witness, total_nodes, time.monotonic() - started)
        k += 1
    raise AssertionError("all-distinct coloring is always feasible")  # pragma: no cover


def brute_force_chi_star(g: Graph) -> int:
    """Oracle: exhaust canonical palette assignments, validate with the checker.

    Independent of the incremental solver: edges go in natural id order, a
    cheap properness test prunes, and full star validation runs at every
    leaf via star_violations.  Only meant for graphs with at most 9 edges.
    """
    if g.m > 9:
        raise TooLarge(f"brute force oracle supports |E| <= 9, got {g.m}")
    if g.m == 0:
        return 0
    m = g.m
    best = m  # all-distinct always works
    colors: dict[tuple[int, int], int] = {}
    at_vertex: list[list[tuple[int, int]]] = [[] for _ in range(g.n)]
    for e in g.edges:
        at_vertex[e[0]].append(e)
        at_vertex[e[1]].append(e)

    def proper_here(e: tuple[int, int], c: int) -> bool:
        u, v = e
        for f in at_vertex[u]:
            if f != e and colors.get(f) == c:
                return False
        for f in at_vertex[v]:
            if f != e and colors.get(f) == c:
                return False
        return True

    def assign(i: int, used: int) -> None:
        nonlocal best
        if used >= best:
            return
        if i == m:
            coloring = EdgeColoring.from_mapping(g, colors)
            if not star_violations(coloring):
                best = used
            return
        e = g.edges[i]
        for c in range(1, min(used + 1, best - 1) + 1):
            if proper_here(e, c):
                colors[e] = c
                assign(i + 1, max(used, c))
                del colors[e]

    assign(0, 0)
    return best
