"""Outerplanar recognition and maximal-outerplanar (MOP) enumeration.

Recognition runs the forbidden-minor characterization directly: a graph is
outerplanar iff it has neither a K4 nor a K2,3 minor.  Both minors are
2-connected, so the graph is first split into biconnected blocks; within a
block the search branches over contractions with a subgraph test at every
node (edge deletion is subsumed by the subgraph test), memoized on
canonical keys, and is offered up to a configured order (default 16).
MOPs additionally admit a scalable structural test (triangulated polygon),
used where graphs outgrow the minor search.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass

from .errors import NotMop, TooLarge
from .graph import (
    Graph,
    _normalized,
    canonical_key,
    diameter,
    is_connected,
    is_two_connected,
)

RECOGNITION_LIMIT = 16
ENUMERATION_LIMIT = 12

_K4 = "k4"
_K23 = "k23"

_minor_memo: dict[tuple[str, bytes], bool] = {}


def _contains_k4(g: Graph) -> bool:
    masks = g.adjacency_masks()
    for u, v in g.edges:
        common = masks[u] & masks[v]
        while common:
            w = (common & -common).bit_length() - 1
            common &= common - 1
            rest = masks[u] & masks[v] & masks[w]
            rest &= ~((1 << (w + 1)) - 1)  # enumerate fourth vertex above w once
            if rest:
                return True
    return False


def _contains_k23(g: Graph) -> bool:
    masks = g.adjacency_masks()
    for u in range(g.n):
        for v in range(u + 1, g.n):
            common = masks[u] & masks[v]
            if bin(common).count("1") >= 3:
                return True
    return False


def _contract(g: Graph, u: int, v: int) -> Graph:
    """Contract edge (u,v): v merges into u, then compact the ids."""
    keep = [x for x in range(g.n) if x != v]
    remap = {x: i for i, x in enumerate(keep)}
    pairs = []
    for a, b in g.edges:
        if a == v:
            a = u
        if b == v:
            b = u
        if a != b:
            pairs.append((remap[a], remap[b]))
    return _normalized(g.n - 1, pairs)


def _has_minor(g: Graph, target: str) -> bool:
    """Branching model search: H is a minor iff it is a subgraph of some
    contraction (edge deletions are absorbed by the subgraph test)."""
    need_n = 4 if target == _K4 else 5
    need_m = 6
    contains = _contains_k4 if target == _K4 else _contains_k23

    def rec(h: Graph) -> bool:
        if h.n < need_n or h.m < need_m:
            return False
        if contains(h):
            return True
        key = (target, canonical_key(h, limit=RECOGNITION_LIMIT))
        cached = _minor_memo.get(key)
        if cached is not None:
            return cached
        result = False
        seen_children: set[bytes] = set()
        for u, v in h.edges:
            child = _contract(h, u, v)
            child_key = canonical_key(child, limit=RECOGNITION_LIMIT)
            if child_key in seen_children:
                continue
            seen_children.add(child_key)
            if rec(child):
                result = True
                break
        _minor_memo[key] = result
        return result

    return rec(g)


def _biconnected_blocks(g: Graph) -> list[Graph]:
    """Edge-partition into biconnected blocks, each with compacted ids."""
    nbrs = g.neighbors()
    visited = [False] * g.n
    depth = [0] * g.n
    low = [0] * g.n
    stack: list[tuple[int, int]] = []
    blocks: list[list[tuple[int, int]]] = []

    def dfs(v: int, parent: int, d: int) -> None:
        visited[v] = True
        depth[v] = low[v] = d
        for w in nbrs[v]:
            if w == parent:
                continue
            if not visited[w]:
                stack.append((v, w))
                dfs(w, v, d + 1)
                low[v] = min(low[v], low[w])
                if low[w] >= depth[v]:
                    block = []
                    while True:
                        e = stack.pop()
                        block.append(e)
                        if e == (v, w):
                            break
                    blocks.append(block)
            elif depth[w] < depth[v]:
                stack.append((v, w))
                low[v] = min(low[v], depth[w])

    for root in range(g.n):
        if not visited[root]:
            dfs(root, -1, 0)
    out = []
    for block in blocks:
        ids = sorted({x for e in block for x in e})
        remap = {x: i for i, x in enumerate(ids)}
        out.append(_normalized(len(ids), [(remap[a], remap[b]) for a, b in block]))
    return out


def is_outerplanar(g: Graph, limit: int = RECOGNITION_LIMIT) -> bool:
    """True iff g has neither a K4 minor nor a K2,3 minor.

    Both forbidden minors are 2-connected, so the search runs per
    biconnected block.
    """
    if g.n > limit:
        raise TooLarge(f"is_outerplanar supports n <= {limit}, got {g.n}")
    if g.n >= 2 and g.m > 2 * g.n - 3:
        return False  # over the outerplanar edge bound; some minor must exist
    for block in _biconnected_blocks(g):
        if block.m > 2 * block.n - 3:
            return False
        if _has_minor(block, _K4) or _has_minor(block, _K23):
            return False
    return True


def is_maximal_outerplanar(g: Graph, limit: int = RECOGNITION_LIMIT) -> bool:
    """Outerplanar with a full complement of edges.

    Equivalent to the definitional reading (adding any edge between
    non-adjacent vertices destroys outerplanarity): an outerplanar graph
    has at most 2n-3 edges, with equality exactly at maximality.
    """
    if g.n < 3:
        return False
    return g.m == 2 * g.n - 3 and is_outerplanar(g, limit=limit)


@dataclass(frozen=True)
class PolygonStructure:
    boundary: tuple[int, ...]  # Hamiltonian cycle in order
    chords: tuple[tuple[int, int], ...]


def polygon_structure(g: Graph) -> PolygonStructure | None:
    """Decompose a triangulated polygon into boundary cycle plus chords.

    Returns None when g is not a triangulated polygon.  Works at any order:
    in an outerplanar graph every triangle bounds a face, so boundary edges
    lie on exactly one triangle and chords on exactly two, the boundary
    must close into a Hamiltonian cycle, and chords must not interleave.
    """
    n = g.n
    if n < 3 or g.m != 2 * n - 3 or not is_connected(g):
        return None
    masks = g.adjacency_masks()
    boundary_edges = []
    chords = []
    for u, v in g.edges:
        tri = bin(masks[u] & masks[v]).count("1")
        if tri == 1:
            boundary_edges.append((u, v))
        elif tri == 2:
            chords.append((u, v))
        else:
            return None
    if len(boundary_edges) != n:
        return None
    ring: list[list[int]] = [[] for _ in range(n)]
    for u, v in boundary_edges:
        ring[u].append(v)
        ring[v].append(u)
    if any(len(r) != 2 for r in ring):
        return None
    cycle = [0, ring[0][0]]
    while len(cycle) < n:
        prev, cur = cycle[-2], cycle[-1]
        nxt = ring[cur][0] if ring[cur][0] != prev else ring[cur][1]
        if nxt == 0:
            break
        cycle.append(nxt)
    if len(cycle) != n or cycle[0] not in ring[cycle[-1]]:
        return None
    pos = {v: i for i, v in enumerate(cycle)}
    spans = []
    for u, v in chords:
        a, b = sorted((pos[u], pos[v]))
        if b - a in (1, n - 1):
            return None  # chord duplicating a boundary edge
        spans.append((a, b))
    for (a1, b1), (a2, b2) in itertools.combinations(spans, 2):
        if a1 < a2 < b1 < b2 or a2 < a1 < b2 < b1:
            return None  # crossing chords cannot be drawn inside the polygon
    return PolygonStructure(boundary=tuple(cycle), chords=tuple(chords))


def is_polygon_triangulation(g: Graph) -> bool:
    """Structural MOP test with no order limit (see is_maximal_outerplanar)."""
    return polygon_structure(g) is not None


@dataclass(frozen=True)
class MopCatalog:
    n: int
    members: dict[bytes, Graph]
    rooted_count: int

    def member_count(self) -> int:
        return len(self.members)


def fixed_polygon_triangulations(n: int):
    """Yield the chord sets of all triangulations of the convex n-gon.

    The polygon has vertices 0..n-1 in cyclic order; each triangulation is
    produced exactly once (the apex of the triangle on a base edge is
    unique), so the number of results is the (n-2)nd Catalan number.
    """

    def tri(lo: int, hi: int):
        if hi - lo < 2:
            yield frozenset()
            return
        for k in range(lo + 1, hi):
            for left in tri(lo, k):
                for right in tri(k, hi):
                    chords = set(left | right)
                    if k - lo > 1:
                        chords.add((lo, k))
                    if hi - k > 1:
                        chords.add((k, hi))
                    yield frozenset(chords)

    yield from tri(0, n - 1)


def polygon_triangulation_graph(n: int, chords: frozenset[tuple[int, int]]) -> Graph:
    cycle = [(i, (i + 1) % n) for i in range(n)]
    return _normalized(n, cycle + list(chords))


def enumerate_mops(n: int, limit: int = ENUMERATION_LIMIT) -> MopCatalog:
    """All MOPs of order n up to isomorphism, by vertex addition.

    Starts from the triangle and repeatedly attaches a new vertex to both
    endpoints of an exterior-face edge, deduplicating each level by
    canonical key.  Each member keeps its outer cycle, which the
    construction maintains for free.
    """
    if not 3 <= n <= limit:
        raise TooLarge(f"enumerate_mops supports 3 <= n <= {limit}, got {n}")
    k3 = Graph(3, ((0, 1), (0, 2), (1, 2)))
    frontier: dict[bytes, tuple[Graph, tuple[int, ...]]] = {
        canonical_key(k3): (k3, (0, 1, 2))
    }
    size = 3
    while size < n:
        nxt: dict[bytes, tuple[Graph, tuple[int, ...]]] = {}
        for g, boundary in frontier.values():
            new_vertex = g.n
            for i in range(len(boundary)):
                u, v = boundary[i], boundary[(i + 1) % len(boundary)]
                grown = Graph(
                    g.n + 1, tuple(sorted(g.edges + ((u, new_vertex), (v, new_vertex))))
                )
                key = canonical_key(grown)
                if key not in nxt:
                    new_boundary = (
                        boundary[: i + 1] + (new_vertex,) + boundary[i + 1 :]
                    )
                    nxt[key] = (grown, new_boundary)
        frontier = nxt
        size += 1
    rooted = sum(1 for _ in fixed_polygon_triangulations(n)) if n >= 3 else 0
    return MopCatalog(
        n=n,
        members={key: g for key, (g, _) in frontier.items()},
        rooted_count=rooted,
    )


def two_connected_spanning_subgraphs(
    h: Graph, dedupe: bool = False, limit: int = ENUMERATION_LIMIT
) -> list[Graph]:
    """Chord-deletion closure of a MOP, filtered to 2-connected results.

    Includes h itself (the empty deletion).  The boundary cycle survives
    every deletion, so the filter is a safety net rather than a sieve.
    """
    if h.n > limit:
        raise TooLarge(f"two_connected_spanning_subgraphs supports n <= {limit}")
    structure = polygon_structure(h)
    if structure is None:
        raise NotMop("chord-deletion closure needs a maximal outerplanar graph")
    out: list[Graph] = []
    seen: set[bytes] = set()
    chords = structure.chords
    for r in range(len(chords) + 1):
        for removed in itertools.combinations(chords, r):
            removed_set = set(removed)
            sub = Graph(h.n, tuple(e for e in h.edges if e not in removed_set))
            if not is_two_connected(sub):
                continue
            if dedupe:
                key = canonical_key(sub)
                if key in seen:
                    continue
                seen.add(key)
            out.append(sub)
    return out


@dataclass(frozen=True)
class Classification:
    diameter: int | float
    two_connected: bool
    outerplanar: bool
    maximal: bool
    subcubic: bool


def classify(
    g: Graph,
    limit: int = RECOGNITION_LIMIT,
    outerplanar_hint: bool | None = None,
) -> Classification:
    """Bundle of the predicates behind the graph classes the sweep tracks.

    outerplanar_hint lets callers pass a fact they already hold (for
    example, chord-deleted subgraphs of a MOP are outerplanar because
    outerplanarity is hereditary); it is trusted, not re-derived.
    """
    if is_polygon_triangulation(g):
        outer, maximal = True, True
    elif outerplanar_hint is not None:
        outer, maximal = outerplanar_hint, False
    else:
        outer = is_outerplanar(g, limit=limit)
        maximal = outer and g.m == 2 * g.n - 3
    return Classification(
        diameter=diameter(g),
        two_connected=is_two_connected(g),
        outerplanar=outer,
        maximal=maximal,
        subcubic=g.max_degree() <= 3,
    )
