"""Immutable simple graphs on integer vertices 0..n-1, plus set-level predicates."""

from __future__ import annotations

from dataclasses import dataclass
from functools import cached_property
from typing import Iterable, Iterator, Literal

Edge = tuple[int, int]
SetRelation = Literal["adjacent", "nonadjacent", "mixed"]


def iter_bits(mask: int) -> Iterator[int]:
    """Yield the set bit positions of ``mask`` in increasing order."""
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


@dataclass(frozen=True)
class Graph:
    """A finite simple undirected graph.

    Vertices are the integers 0..n-1 and ``edges`` holds unordered pairs in
    (min, max) form. Instances are immutable and hashable, so searches can
    share and memoize them freely.
    """

    n: int
    edges: frozenset[Edge]

    @cached_property
    def adj(self) -> tuple[int, ...]:
        """Per-vertex neighbor bitmasks: bit u of ``adj[v]`` is set iff uv is an edge."""
        masks = [0] * self.n
        for u, v in self.edges:
            masks[u] |= 1 << v
            masks[v] |= 1 << u
        return tuple(masks)

    @property
    def m(self) -> int:
        return len(self.edges)

    def has_edge(self, u: int, v: int) -> bool:
        return bool(self.adj[u] >> v & 1)

    def __repr__(self) -> str:
        return f"Graph(n={self.n}, edges={sorted(self.edges)})"


def make_graph(n: int, edges: Iterable[Edge] = ()) -> Graph:
    """Build a canonical graph, deduplicating edges.

    Raises ValueError for loops or out-of-range endpoints.
    """
    if n < 0:
        raise ValueError(f"vertex count must be nonnegative, got {n}")
    canon = set()
    for u, v in edges:
        if not (0 <= u < n and 0 <= v < n):
            raise ValueError(f"edge ({u}, {v}) has an endpoint outside 0..{n - 1}")
        if u == v:
            raise ValueError(f"loop at vertex {u} is not allowed")
        canon.add((u, v) if u < v else (v, u))
    return Graph(n, frozenset(canon))


def vertices(g: Graph) -> range:
    return range(g.n)


def neighborhood(g: Graph, v: int) -> frozenset[int]:
    """The set of vertices adjacent to v (v itself is never included)."""
    if not 0 <= v < g.n:
        raise ValueError(f"vertex {v} not in 0..{g.n - 1}")
    return frozenset(iter_bits(g.adj[v]))


def induced_subgraph(g: Graph, subset: Iterable[int]) -> tuple[Graph, dict[int, int]]:
    """The subgraph induced by ``subset``, relabeled to 0..|S|-1 in sorted order.

    Returns the new graph together with the old-label -> new-label map.
    """
    vs = sorted(set(subset))
    for v in vs:
        if not 0 <= v < g.n:
            raise ValueError(f"vertex {v} not in 0..{g.n - 1}")
    relabel = {old: new for new, old in enumerate(vs)}
    edges = [
        (relabel[u], relabel[v])
        for u, v in g.edges
        if u in relabel and v in relabel
    ]
    return make_graph(len(vs), edges), relabel


def is_connected(g: Graph) -> bool:
    """True iff the graph has a single connected component (vacuously for n <= 1)."""
    if g.n <= 1:
        return True
    seen = 1
    frontier = 1
    full = (1 << g.n) - 1
    while frontier:
        nxt = 0
        for v in iter_bits(frontier):
            nxt |= g.adj[v]
        frontier = nxt & ~seen
        seen |= nxt
    return seen == full


def set_adjacency(g: Graph, a: Iterable[int], b: Iterable[int]) -> SetRelation:
    """Classify cross adjacency between two disjoint nonempty vertex sets.

    "adjacent" if every cross pair is an edge, "nonadjacent" if none is,
    "mixed" otherwise.
    """
    sa, sb = set(a), set(b)
    if not sa or not sb:
        raise ValueError("set_adjacency requires nonempty sets")
    if sa & sb:
        raise ValueError(f"sets overlap at {sorted(sa & sb)}")
    for v in sa | sb:
        if not 0 <= v < g.n:
            raise ValueError(f"vertex {v} not in 0..{g.n - 1}")
    mask_b = 0
    for v in sb:
        mask_b |= 1 << v
    want = None
    for u in sa:
        hits = g.adj[u] & mask_b
        if hits not in (0, mask_b):
            return "mixed"
        kind = "adjacent" if hits == mask_b else "nonadjacent"
        if want is None:
            want = kind
        elif want != kind:
            return "mixed"
    assert want is not None
    return want


def complement(g: Graph) -> Graph:
    """The complement graph on the same vertex set."""
    edges = [
        (u, v)
        for u in range(g.n)
        for v in range(u + 1, g.n)
        if not g.adj[u] >> v & 1
    ]
    return make_graph(g.n, edges)


def connected_components(g: Graph) -> list[frozenset[int]]:
    """Connected components as vertex sets, ordered by smallest member."""
    unseen = (1 << g.n) - 1
    comps = []
    while unseen:
        start = (unseen & -unseen).bit_length() - 1
        seen = 1 << start
        frontier = seen
        while frontier:
            nxt = 0
            for v in iter_bits(frontier):
                nxt |= g.adj[v]
            frontier = nxt & ~seen
            seen |= frontier
        comps.append(frozenset(iter_bits(seen)))
        unseen &= ~seen
    return comps
