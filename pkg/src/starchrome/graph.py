"""Immutable simple undirected graphs and the structural queries built on them.

Vertices are dense integer ids ``0..n-1``; an edge is an unordered pair stored
canonically as ``(u, v)`` with ``u < v``.  Graph values are frozen after
construction, so they can be shared freely between concurrent workers.
"""

from __future__ import annotations

import math
from collections import deque
from dataclasses import dataclass, field
from typing import Iterable, Sequence

from .errors import DuplicateEdge, OutOfRange, SelfLoop, TooLarge

#: Default ceiling for the permutation-based canonical form.
CANONICAL_LIMIT = 16

#: Returned by :func:`diameter` for disconnected graphs.
INFINITE = math.inf


@dataclass(frozen=True)
class Graph:
    n: int
    edges: tuple[tuple[int, int], ...]

    @property
    def m(self) -> int:
        return len(self.edges)

    def neighbors(self) -> tuple[tuple[int, ...], ...]:
        """Adjacency lists, each sorted ascending (cached)."""
        cached = self.__dict__.get("_neighbors")
        if cached is None:
            lists: list[list[int]] = [[] for _ in range(self.n)]
            for u, v in self.edges:
                lists[u].append(v)
                lists[v].append(u)
            cached = tuple(tuple(sorted(l)) for l in lists)
            self.__dict__["_neighbors"] = cached
        return cached

    def adjacency_masks(self) -> tuple[int, ...]:
        """Neighborhoods as bitmasks (cached)."""
        cached = self.__dict__.get("_masks")
        if cached is None:
            masks = [0] * self.n
            for u, v in self.edges:
                masks[u] |= 1 << v
                masks[v] |= 1 << u
            cached = tuple(masks)
            self.__dict__["_masks"] = cached
        return cached

    def degrees(self) -> tuple[int, ...]:
        return tuple(len(nbrs) for nbrs in self.neighbors())

    def max_degree(self) -> int:
        return max(self.degrees(), default=0)

    def has_edge(self, u: int, v: int) -> bool:
        if u > v:
            u, v = v, u
        return (u, v) in self.edge_set()

    def edge_set(self) -> frozenset[tuple[int, int]]:
        cached = self.__dict__.get("_edge_set")
        if cached is None:
            cached = frozenset(self.edges)
            self.__dict__["_edge_set"] = cached
        return cached


@dataclass(frozen=True)
class DegreeProfile:
    degrees: tuple[int, ...]
    max_degree: int


def degree_profile(g: Graph) -> DegreeProfile:
    degs = g.degrees()
    return DegreeProfile(degrees=degs, max_degree=max(degs, default=0))


def from_edges(n: int, pairs: Iterable[Sequence[int]]) -> Graph:
    """Build a canonical Graph, rejecting loops, duplicates and bad ids."""
    if n < 0:
        raise OutOfRange(f"vertex count must be nonnegative, got {n}")
    seen: set[tuple[int, int]] = set()
    for pair in pairs:
        u, v = pair
        if u == v:
            raise SelfLoop(f"edge ({u},{v}) is a self-loop")
        if not (0 <= u < n and 0 <= v < n):
            raise OutOfRange(f"edge ({u},{v}) has an endpoint outside 0..{n - 1}")
        key = (u, v) if u < v else (v, u)
        if key in seen:
            raise DuplicateEdge(f"edge {key} appears more than once")
        seen.add(key)
    return Graph(n=n, edges=tuple(sorted(seen)))


def _normalized(n: int, pairs: Iterable[tuple[int, int]]) -> Graph:
    """Internal constructor that silently drops loops and duplicates.

    Used by minor contraction, where merges legitimately create both.
    """
    seen = {(u, v) if u < v else (v, u) for u, v in pairs if u != v}
    return Graph(n=n, edges=tuple(sorted(seen)))


def relabel(g: Graph, perm: Sequence[int]) -> Graph:
    """Apply a vertex permutation: vertex v becomes perm[v]."""
    return _normalized(g.n, ((perm[u], perm[v]) for u, v in g.edges))


def diameter(g: Graph) -> int | float:
    """Max over vertex pairs of BFS distance; INFINITE if disconnected."""
    if g.n < 1:
        raise OutOfRange("diameter needs at least one vertex")
    if g.n == 1:
        return 0
    nbrs = g.neighbors()
    best = 0
    for s in range(g.n):
        dist = [-1] * g.n
        dist[s] = 0
        queue = deque([s])
        reached = 1
        while queue:
            v = queue.popleft()
            for w in nbrs[v]:
                if dist[w] < 0:
                    dist[w] = dist[v] + 1
                    best = max(best, dist[w])
                    reached += 1
                    queue.append(w)
        if reached < g.n:
            return INFINITE
    return best


def is_connected(g: Graph) -> bool:
    if g.n <= 1:
        return True
    nbrs = g.neighbors()
    seen = [False] * g.n
    seen[0] = True
    queue = deque([0])
    count = 1
    while queue:
        v = queue.popleft()
        for w in nbrs[v]:
            if not seen[w]:
                seen[w] = True
                count += 1
                queue.append(w)
    return count == g.n


def is_two_connected(g: Graph) -> bool:
    """True iff n >= 3, connected, and removing any single vertex keeps it connected."""
    if g.n < 3 or not is_connected(g):
        return False
    nbrs = g.neighbors()
    for cut in range(g.n):
        start = 0 if cut != 0 else 1
        seen = [False] * g.n
        seen[cut] = True
        seen[start] = True
        queue = deque([start])
        count = 1
        while queue:
            v = queue.popleft()
            for w in nbrs[v]:
                if not seen[w]:
                    seen[w] = True
                    count += 1
                    queue.append(w)
        if count != g.n - 1:
            return False
    return True


def _refined_classes(g: Graph) -> list[int]:
    """Iterated degree refinement; class ids are label-independent."""
    nbrs = g.neighbors()
    colors = list(g.degrees())
    for _ in range(g.n):
        sigs = [
            (colors[v], tuple(sorted(colors[w] for w in nbrs[v]))) for v in range(g.n)
        ]
        ranks = {sig: i for i, sig in enumerate(sorted(set(sigs)))}
        new = [ranks[sigs[v]] for v in range(g.n)]
        if new == colors:
            break
        colors = new
    return colors


def _canonical_search(g: Graph) -> tuple[tuple[tuple[int, int], ...], list[int]]:
    """Minimize the placement word sequence over vertex orderings.

    Placing a vertex at position k emits the word (class id, adjacency bits
    to the k already-placed vertices, earlier placements in higher bits).
    The lexicographically least word sequence is the canonical form; ties
    branch, everything else prunes.
    """
    n = g.n
    masks = g.adjacency_masks()
    classes = _refined_classes(g)
    best: list[tuple[int, int]] | None = None
    best_perm: list[int] | None = None

    def rec(placed: list[int], placed_mask: int, words: list[tuple[int, int]]) -> None:
        nonlocal best, best_perm
        k = len(placed)
        if best is not None and words > best[:k]:
            return
        if k == n:
            if best is None or words < best:
                best = list(words)
                best_perm = list(placed)
            return
        cands: list[tuple[tuple[int, int], int]] = []
        for v in range(n):
            if placed_mask >> v & 1:
                continue
            bits = 0
            mv = masks[v]
            for i in range(k):
                if mv >> placed[i] & 1:
                    bits |= 1 << (k - 1 - i)
            cands.append(((classes[v], bits), v))
        minw = min(w for w, _ in cands)
        words.append(minw)
        for w, v in cands:
            if w == minw:
                placed.append(v)
                rec(placed, placed_mask | (1 << v), words)
                placed.pop()
        words.pop()

    if n == 0:
        return (), []
    rec([], 0, [])
    assert best is not None and best_perm is not None
    return tuple(best), best_perm


def canonical_key(g: Graph, limit: int = CANONICAL_LIMIT) -> bytes:
    """Byte string equal for two graphs iff they are isomorphic."""
    if g.n > limit:
        raise TooLarge(f"canonical_key supports n <= {limit}, got {g.n}")
    words, _ = _canonical_search(g)
    out = bytearray([g.n])
    for cls, bits in words:
        out.append(cls)
        out.extend(bits.to_bytes(2, "big"))
    return bytes(out)


def canonical_form(g: Graph, limit: int = CANONICAL_LIMIT) -> Graph:
    """The canonical representative (relabeling of g realizing its key)."""
    if g.n > limit:
        raise TooLarge(f"canonical_form supports n <= {limit}, got {g.n}")
    _, placement = _canonical_search(g)
    perm = [0] * g.n
    for pos, v in enumerate(placement):
        perm[v] = pos
    return relabel(g, perm)
