"""Immutable simple graphs on the vertex set {1, ..., n}.

Vertices are contiguous integer labels starting at 1, which keeps subset
enumeration elsewhere in the package a matter of plain bitmask arithmetic.
All values are frozen after construction and every operation is a pure
function, so graphs can be shared freely across worker processes.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass
from functools import cached_property
from typing import Iterable, Optional

from .errors import GraphInputError

# A vertex set is always carried around as a sorted tuple of labels.
VertexSet = tuple[int, ...]


@dataclass(frozen=True)
class Graph:
    """Simple undirected graph with canonical edge storage.

    ``edges`` holds unordered pairs normalized to ``(min, max)`` and sorted
    lexicographically.  Build instances through :func:`build_graph`, which
    validates and canonicalizes raw input.
    """

    n: int
    edges: tuple[tuple[int, int], ...]

    @cached_property
    def adjacency(self) -> tuple[frozenset[int], ...]:
        """Neighbor sets indexed by vertex label (index 0 is unused)."""
        nbrs: list[set[int]] = [set() for _ in range(self.n + 1)]
        for u, v in self.edges:
            nbrs[u].add(v)
            nbrs[v].add(u)
        return tuple(frozenset(s) for s in nbrs)

    @cached_property
    def neighbor_masks(self) -> tuple[int, ...]:
        """Neighbor bitmasks (bit v-1 stands for vertex v; index 0 unused)."""
        masks = [0] * (self.n + 1)
        for u, v in self.edges:
            masks[u] |= 1 << (v - 1)
            masks[v] |= 1 << (u - 1)
        return tuple(masks)

    @property
    def vertices(self) -> range:
        return range(1, self.n + 1)

    def degree(self, v: int) -> int:
        return len(self.adjacency[v])


@dataclass(frozen=True)
class ComponentPartition:
    """Connected components of an induced subgraph, as sorted vertex tuples."""

    blocks: tuple[VertexSet, ...]

    @property
    def count(self) -> int:
        return len(self.blocks)


def build_graph(n: int, edge_list: Iterable[tuple[int, int]]) -> Graph:
    """Validate and canonicalize a raw edge list into a :class:`Graph`.

    Pairs are normalized to ``(min, max)`` and duplicates are collapsed.
    Self-loops and labels outside ``1..n`` are rejected.
    """
    if not isinstance(n, int) or n < 0:
        raise GraphInputError(f"vertex count must be a non-negative integer, got {n!r}")
    canonical: set[tuple[int, int]] = set()
    for pair in edge_list:
        try:
            u, v = pair
        except (TypeError, ValueError):
            raise GraphInputError(f"edge {pair!r} is not a pair of vertices") from None
        if not (isinstance(u, int) and isinstance(v, int)):
            raise GraphInputError(f"edge {pair!r} has non-integer endpoints")
        if u == v:
            raise GraphInputError(f"self-loop at vertex {u} is not allowed")
        if not (1 <= u <= n and 1 <= v <= n):
            raise GraphInputError(f"edge ({u}, {v}) has an endpoint outside 1..{n}")
        canonical.add((u, v) if u < v else (v, u))
    return Graph(n, tuple(sorted(canonical)))


def _check_subset(graph: Graph, vs: Iterable[int]) -> frozenset[int]:
    subset = frozenset(vs)
    for v in subset:
        if not (isinstance(v, int) and 1 <= v <= graph.n):
            raise GraphInputError(f"vertex {v!r} is not in 1..{graph.n}")
    return subset


def components_after_deletion(graph: Graph, deleted: Iterable[int] = ()) -> ComponentPartition:
    """Connected components of the subgraph induced on V minus ``deleted``.

    Breadth-first search, O(|V| + |E|) per call.  Blocks come out sorted by
    their smallest member, each block internally sorted, so the partition is
    canonical.
    """
    dead = _check_subset(graph, deleted)
    adjacency = graph.adjacency
    seen: set[int] = set(dead)
    blocks: list[VertexSet] = []
    for start in graph.vertices:
        if start in seen:
            continue
        seen.add(start)
        queue = deque((start,))
        block = [start]
        while queue:
            u = queue.popleft()
            for w in adjacency[u]:
                if w not in seen:
                    seen.add(w)
                    block.append(w)
                    queue.append(w)
        blocks.append(tuple(sorted(block)))
    return ComponentPartition(tuple(blocks))


def is_connected(graph: Graph) -> bool:
    """True when the graph has exactly one connected component."""
    return components_after_deletion(graph).count == 1


def is_cutvertex(graph: Graph, v: int) -> bool:
    """True when deleting ``v`` strictly increases the component count."""
    (checked,) = _check_subset(graph, (v,))
    base = components_after_deletion(graph).count
    return components_after_deletion(graph, (checked,)).count > base


def cycle_rank(graph: Graph) -> int:
    """Number of independent cycles: |E| - |V| + (number of components)."""
    return len(graph.edges) - graph.n + components_after_deletion(graph).count


def is_path_graph(graph: Graph) -> bool:
    """True when the graph is a single simple path (one vertex counts)."""
    if graph.n == 0:
        return False
    if graph.n == 1:
        return True
    degrees = sorted(graph.degree(v) for v in graph.vertices)
    if degrees[:2] != [1, 1] or any(d != 2 for d in degrees[2:]):
        return False
    return is_connected(graph)


@dataclass(frozen=True)
class UnicyclicShape:
    """A cycle plus vertex-disjoint pendant paths, one per cycle vertex.

    ``cycle`` lists the cycle in traversal order starting from its smallest
    vertex toward its smaller cycle neighbor.  ``attachments`` maps each cycle
    vertex to the number of vertices on its pendant path (0 when bare).
    """

    cycle: tuple[int, ...]
    attachments: dict[int, int]


def unicyclic_structure(graph: Graph) -> Optional[UnicyclicShape]:
    """Decompose a connected graph into one cycle with pendant paths.

    Returns ``None`` unless the graph has cycle rank exactly 1 and every
    off-cycle vertex has degree at most 2 while every cycle vertex has degree
    at most 3.  Those bounds are what force each hanging tree to be a single
    path meeting the cycle in exactly one vertex; cycle rank 1 alone is not
    enough because a hanging tree may branch.
    """
    if graph.n == 0 or not is_connected(graph):
        return None
    if cycle_rank(graph) != 1:
        return None

    # Strip leaves repeatedly; what survives is the unique cycle (the 2-core).
    degrees = {v: graph.degree(v) for v in graph.vertices}
    stack = [v for v in graph.vertices if degrees[v] == 1]
    on_cycle = set(graph.vertices)
    while stack:
        v = stack.pop()
        on_cycle.discard(v)
        for w in graph.adjacency[v]:
            if w in on_cycle:
                degrees[w] -= 1
                if degrees[w] == 1:
                    stack.append(w)

    for v in graph.vertices:
        limit = 3 if v in on_cycle else 2
        if graph.degree(v) > limit:
            return None

    start = min(on_cycle)
    second = min(w for w in graph.adjacency[start] if w in on_cycle)
    order = [start, second]
    while len(order) < len(on_cycle):
        tail, prev = order[-1], order[-2]
        order.append(next(w for w in graph.adjacency[tail] if w in on_cycle and w != prev))

    attachments: dict[int, int] = {}
    for v in order:
        hanging = [w for w in graph.adjacency[v] if w not in on_cycle]
        length = 0
        prev, cur = v, (hanging[0] if hanging else None)
        while cur is not None:
            length += 1
            nxt = [w for w in graph.adjacency[cur] if w != prev]
            prev, cur = cur, (nxt[0] if nxt else None)
        attachments[v] = length
    assert len(on_cycle) + sum(attachments.values()) == graph.n
    return UnicyclicShape(tuple(order), attachments)


def induced_subgraph(graph: Graph, vs: Iterable[int]) -> Graph:
    """Induced subgraph on ``vs`` with vertices relabeled 1..k by rank."""
    keep = sorted(_check_subset(graph, vs))
    rank = {v: i + 1 for i, v in enumerate(keep)}
    kept = frozenset(keep)
    edges = [(rank[u], rank[v]) for u, v in graph.edges if u in kept and v in kept]
    return build_graph(len(keep), edges)


def cone(v_label: int, graph: Graph) -> Graph:
    """Insert a new vertex labeled ``v_label`` adjacent to every old vertex.

    Old labels at or above ``v_label`` shift up by one, so the result again
    lives on a contiguous 1..n+1 label range.
    """
    if not (isinstance(v_label, int) and 1 <= v_label <= graph.n + 1):
        raise GraphInputError(f"cone apex label {v_label!r} is not in 1..{graph.n + 1}")

    def shift(u: int) -> int:
        return u + 1 if u >= v_label else u

    edges = [(shift(u), shift(v)) for u, v in graph.edges]
    edges.extend((v_label, shift(u)) for u in graph.vertices)
    return build_graph(graph.n + 1, edges)


def disjoint_union(first: Graph, second: Graph) -> Graph:
    """Disjoint union; labels of the second graph shift up by |V(first)|."""
    offset = first.n
    edges = list(first.edges)
    edges.extend((u + offset, v + offset) for u, v in second.edges)
    return build_graph(first.n + second.n, edges)
