"""Clique complex facets and free vertices.

The facets of the clique complex of a graph are its maximal cliques.  A
vertex is free when it lies in exactly one facet, equivalently when its
neighborhood is a clique.  Free vertices never occur in any cut set, which is
what makes them worth identifying before subset enumeration.
"""

from __future__ import annotations

from dataclasses import dataclass

from .errors import CapacityError
from .graphs import Graph, VertexSet

DEFAULT_FACET_CEILING = 10**6


@dataclass(frozen=True)
class CliqueComplexFacets:
    """Maximal cliques, sorted canonically by size then lexicographically."""

    facets: tuple[VertexSet, ...]

    def __iter__(self):
        return iter(self.facets)

    def __len__(self) -> int:
        return len(self.facets)


def maximal_cliques(graph: Graph, max_facets: int = DEFAULT_FACET_CEILING) -> CliqueComplexFacets:
    """Enumerate all maximal cliques via pivoting recursion.

    Aborts with :class:`CapacityError` once more than ``max_facets`` facets
    have been produced; the count can be exponential on dense inputs.
    """
    if graph.n == 0:
        return CliqueComplexFacets(())
    adjacency = graph.adjacency
    facets: list[VertexSet] = []

    def expand(clique: list[int], candidates: frozenset[int], excluded: frozenset[int]) -> None:
        if not candidates and not excluded:
            facets.append(tuple(sorted(clique)))
            if len(facets) > max_facets:
                raise CapacityError(
                    f"more than {max_facets} maximal cliques; raise the facet ceiling to proceed"
                )
            return
        pool = candidates | excluded
        pivot = max(sorted(pool), key=lambda u: len(adjacency[u] & candidates))
        for v in sorted(candidates - adjacency[pivot]):
            clique.append(v)
            expand(clique, candidates & adjacency[v], excluded & adjacency[v])
            clique.pop()
            candidates = candidates - {v}
            excluded = excluded | {v}

    expand([], frozenset(graph.vertices), frozenset())
    facets.sort(key=lambda f: (len(f), f))
    return CliqueComplexFacets(tuple(facets))


def free_vertices(graph: Graph) -> VertexSet:
    """Vertices whose neighborhood is a clique.

    This is the cheap O(sum of degree^2) characterization; counting facet
    memberships gives the same answer and serves as the test oracle.
    """
    adjacency = graph.adjacency
    free: list[int] = []
    for v in graph.vertices:
        neighbors = sorted(adjacency[v])
        if all(
            w in adjacency[u]
            for i, u in enumerate(neighbors)
            for w in neighbors[i + 1 :]
        ):
            free.append(v)
    return tuple(free)
