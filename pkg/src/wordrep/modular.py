"""Modules, maximal modular partitions, quotients, substitution, and the lex product."""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Sequence

from .errors import CapExceeded
from .graphs import (
    Graph,
    complement,
    connected_components,
    induced_subgraph,
    is_connected,
    iter_bits,
    make_graph,
)

ALL_MODULES_MAX_N = 15


def is_module(g: Graph, members: Iterable[int]) -> bool:
    """True iff every vertex outside the set sees all of it or none of it."""
    mset = set(members)
    if not mset:
        raise ValueError("a module must be nonempty")
    mask = 0
    for v in mset:
        if not 0 <= v < g.n:
            raise ValueError(f"vertex {v} not in 0..{g.n - 1}")
        mask |= 1 << v
    for v in range(g.n):
        if mask >> v & 1:
            continue
        hits = g.adj[v] & mask
        if hits != 0 and hits != mask:
            return False
    return True


def all_modules(g: Graph) -> list[frozenset[int]]:
    """Every module of the graph, by direct subset enumeration (n <= 15)."""
    if g.n > ALL_MODULES_MAX_N:
        raise CapExceeded(f"all_modules enumerates subsets; n={g.n} exceeds {ALL_MODULES_MAX_N}")
    out = []
    for mask in range(1, 1 << g.n):
        ok = True
        for v in range(g.n):
            if mask >> v & 1:
                continue
            hits = g.adj[v] & mask
            if hits != 0 and hits != mask:
                ok = False
                break
        if ok:
            out.append(frozenset(iter_bits(mask)))
    return out


def _modular_closure_mask(g: Graph, mask: int) -> int:
    """The smallest module containing the vertices of ``mask``.

    Any outside vertex adjacent to part but not all of the current set must
    belong to every module containing it; absorb such splitters to fixpoint.
    """
    changed = True
    while changed:
        changed = False
        for v in range(g.n):
            if mask >> v & 1:
                continue
            hits = g.adj[v] & mask
            if hits != 0 and hits != mask:
                mask |= 1 << v
                changed = True
    return mask


@dataclass(frozen=True)
class ModularPartition:
    """A modular partition with its quotient graph and vertex -> block map."""

    base: Graph
    blocks: tuple[frozenset[int], ...]
    quotient: Graph
    block_map: tuple[int, ...]


def quotient(g: Graph, blocks: Sequence[Iterable[int]]) -> tuple[Graph, tuple[int, ...]]:
    """The quotient graph of a modular partition, plus the vertex -> block map.

    Each block must be a module and the blocks must partition the vertex
    set; two blocks are adjacent in the quotient iff they are fully joined.
    """
    bsets = [frozenset(b) for b in blocks]
    block_map = [-1] * g.n
    for i, b in enumerate(bsets):
        if not is_module(g, b):
            raise ValueError(f"block {sorted(b)} is not a module")
        for v in b:
            if block_map[v] != -1:
                raise ValueError(f"vertex {v} appears in two blocks")
            block_map[v] = i
    if -1 in block_map:
        raise ValueError(f"vertex {block_map.index(-1)} not covered by any block")
    reps = [min(b) for b in bsets]
    edges = [
        (i, j)
        for i in range(len(bsets))
        for j in range(i + 1, len(bsets))
        if g.has_edge(reps[i], reps[j])
    ]
    return make_graph(len(bsets), edges), tuple(block_map)


def maximal_modular_partition(g: Graph) -> ModularPartition:
    """The unique partition of a connected graph into maximal strong modules.

    Case split on Gallai's structure: if the complement is disconnected, the
    blocks are the co-components; otherwise two vertices share a block iff
    the smallest module containing both is proper. Prime graphs and complete
    graphs come out as all-singleton partitions whose quotient is the graph
    itself.
    """
    if g.n < 2:
        raise ValueError("maximal modular partition needs at least two vertices")
    if not is_connected(g):
        raise ValueError("maximal modular partition is defined for connected graphs")
    co_components = connected_components(complement(g))
    if len(co_components) >= 2:
        blocks = co_components
    else:
        # complement connected: maximal proper strong modules are the classes
        # of "the smallest module containing {x, y} is not the whole set"
        full = (1 << g.n) - 1
        parent = list(range(g.n))

        def find(x: int) -> int:
            while parent[x] != x:
                parent[x] = parent[parent[x]]
                x = parent[x]
            return x

        for x in range(g.n):
            for y in range(x + 1, g.n):
                if find(x) == find(y):
                    continue
                if _modular_closure_mask(g, (1 << x) | (1 << y)) != full:
                    parent[find(x)] = find(y)
        groups: dict[int, set[int]] = {}
        for v in range(g.n):
            groups.setdefault(find(v), set()).add(v)
        blocks = [frozenset(b) for b in groups.values()]
    blocks = sorted(blocks, key=min)
    q, block_map = quotient(g, blocks)
    return ModularPartition(g, tuple(blocks), q, block_map)


def substitute(
    g: Graph, pivot: int, inner: Graph
) -> tuple[Graph, dict[int, int], dict[int, int]]:
    """Replace vertex ``pivot`` of g by the graph ``inner``.

    The remaining vertices of g keep their relative order and come first;
    inner's vertices are appended after them. Every vertex of the inserted
    copy is joined to the old neighbors of the pivot, which makes the copy a
    module of the result. Returns the result plus both label maps.
    """
    if not 0 <= pivot < g.n:
        raise ValueError(f"pivot {pivot} not in 0..{g.n - 1}")
    if inner.n < 1:
        raise ValueError("inner graph must be nonempty")
    g_map = {v: (v if v < pivot else v - 1) for v in range(g.n) if v != pivot}
    base = g.n - 1
    m_map = {v: base + v for v in range(inner.n)}
    edges = [
        (g_map[u], g_map[v]) for u, v in g.edges if u != pivot and v != pivot
    ]
    edges += [(m_map[u], m_map[v]) for u, v in inner.edges]
    for w in iter_bits(g.adj[pivot]):
        edges += [(g_map[w], m_map[x]) for x in range(inner.n)]
    return make_graph(base + inner.n, edges), g_map, m_map


def lex_product(g: Graph, h: Graph) -> tuple[Graph, dict[tuple[int, int], int]]:
    """The lexicographical product: copies of h substituted for every vertex of g.

    Vertex (a, b) gets label a * |V(h)| + b. Pairs are adjacent iff their
    first coordinates are adjacent in g, or the first coordinates agree and
    the second are adjacent in h.
    """
    if g.n < 1 or h.n < 1:
        raise ValueError("lex product needs nonempty factors")
    label = {(a, b): a * h.n + b for a in range(g.n) for b in range(h.n)}
    edges = []
    for a, c in g.edges:
        edges += [
            (label[(a, b)], label[(c, d)]) for b in range(h.n) for d in range(h.n)
        ]
    for a in range(g.n):
        edges += [(label[(a, b)], label[(a, d)]) for b, d in h.edges]
    return make_graph(g.n * h.n, edges), label


def reconstruct(partition: ModularPartition, block_graphs: Sequence[Graph]) -> Graph:
    """Blow each quotient vertex back up into its block graph.

    ``block_graphs[i]`` is placed on the sorted vertices of block i; with the
    induced block subgraphs this returns the original base graph exactly.
    """
    blocks = partition.blocks
    if len(block_graphs) != len(blocks):
        raise ValueError(
            f"expected {len(blocks)} block graphs, got {len(block_graphs)}"
        )
    edges = []
    for i, bg in enumerate(block_graphs):
        members = sorted(blocks[i])
        if bg.n != len(members):
            raise ValueError(
                f"block {i} has {len(members)} vertices but its graph has {bg.n}"
            )
        edges += [(members[u], members[v]) for u, v in bg.edges]
    for i, j in partition.quotient.edges:
        edges += [(u, v) for u in blocks[i] for v in blocks[j]]
    return make_graph(partition.base.n, edges)


def induced_block_graphs(partition: ModularPartition) -> list[Graph]:
    """The subgraphs induced by each block, in block order."""
    return [
        induced_subgraph(partition.base, block)[0] for block in partition.blocks
    ]
