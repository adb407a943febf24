"""The cut-set family C(G) indexing the minimal primes of a binomial edge ideal.

A subset T of vertices has the cut-point property when every member of T is a
cut vertex of the subgraph induced on (V minus T) plus that member.  Deleting
any single element of such a T must strictly lower the component count of the
induced subgraph on the complement.

Two computations of the family live here on purpose:

* :func:`compute_cutsets` enumerates subsets of the non-free vertices only,
  skips candidates whose complement stays connected, and bails out of the
  per-element check on the first failure.  Component counts run on bitmasks.
* :func:`compute_cutsets_naive` walks every subset of every vertex and applies
  the definition through breadth-first-search component partitions.  It shares
  no counting code with the fast path, which is the point: it is the oracle
  the fast path is tested against.
"""

from __future__ import annotations

import itertools
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass

from .cliques import free_vertices
from .errors import CapacityError
from .graphs import Graph, VertexSet, _check_subset, components_after_deletion

DEFAULT_ENUMERATION_BOUND = 30
NAIVE_VERTEX_CAP = 20


@dataclass(frozen=True)
class CutSetFamily:
    """All cut sets of a graph, sorted by size then lexicographically."""

    graph: Graph
    sets: tuple[VertexSet, ...]

    def __iter__(self):
        return iter(self.sets)

    def __len__(self) -> int:
        return len(self.sets)

    def __contains__(self, subset) -> bool:
        return tuple(sorted(subset)) in self.sets


def _canonical(members) -> tuple[VertexSet, ...]:
    return tuple(sorted(set(members), key=lambda s: (len(s), s)))


def has_cutpoint_property(graph: Graph, subset) -> bool:
    """Definitional check: components with and without each member of T.

    The subgraph induced on (V minus T) plus i loses a component exactly when
    counting components after deleting T versus after deleting T minus {i}
    shows a strict drop.  The empty set qualifies vacuously.
    """
    chosen = _check_subset(graph, subset)
    if not chosen:
        return True
    count_without = components_after_deletion(graph, chosen).count
    for i in sorted(chosen):
        if components_after_deletion(graph, chosen - {i}).count >= count_without:
            return False
    return True


def compute_cutsets_naive(graph: Graph) -> CutSetFamily:
    """Filter every vertex subset by the definition.  Test-only path.

    No free-vertex pruning, no cardinality cap, no skipping: each of the 2^n
    subsets goes through :func:`has_cutpoint_property`.  Deliberately
    single-threaded and simple; simplicity is its correctness argument.
    """
    if graph.n > NAIVE_VERTEX_CAP:
        raise CapacityError(
            f"naive enumeration is capped at {NAIVE_VERTEX_CAP} vertices, got {graph.n}"
        )
    members = [
        subset
        for size in range(graph.n + 1)
        for subset in itertools.combinations(graph.vertices, size)
        if has_cutpoint_property(graph, subset)
    ]
    return CutSetFamily(graph, _canonical(members))


# Bitmask machinery for the pruned enumeration.


def _mask_component_count(masks: tuple[int, ...], alive: int) -> int:
    """Number of connected components among the vertices set in ``alive``."""
    count = 0
    remaining = alive
    while remaining:
        count += 1
        component = remaining & -remaining
        frontier = component
        while frontier:
            grow = 0
            bits = frontier
            while bits:
                low = bits & -bits
                bits ^= low
                grow |= masks[low.bit_length()]
            frontier = grow & alive & ~component
            component |= frontier
        remaining &= ~component
    return count


def _accepts(masks: tuple[int, ...], alive: int, member_bits: tuple[int, ...]) -> bool:
    """Algorithm acceptance test for one candidate subset, with early exit."""
    t_mask = 0
    for bit in member_bits:
        t_mask |= bit
    survivors = alive & ~t_mask
    count = _mask_component_count(masks, survivors)
    if count < 2:
        return False
    for bit in member_bits:
        if _mask_component_count(masks, survivors | bit) >= count:
            return False
    return True


def _scan_sizes(graph: Graph, alive: int, candidates: list[int], size_cap: int) -> list[VertexSet]:
    """Enumerate candidate subsets by increasing size, lexicographic within size."""
    masks = graph.neighbor_masks
    bits = {v: 1 << (v - 1) for v in candidates}
    found: list[VertexSet] = []
    for size in range(1, min(size_cap, len(candidates)) + 1):
        for subset in itertools.combinations(candidates, size):
            if _accepts(masks, alive, tuple(bits[v] for v in subset)):
                found.append(subset)
    return found


def _scan_prefix_block(args) -> list[VertexSet]:
    """Worker: all candidate subsets whose smallest element is ``first``."""
    graph, alive, first, rest, size_cap = args
    masks = graph.neighbor_masks
    first_bit = 1 << (first - 1)
    found: list[VertexSet] = []
    for size in range(0, min(size_cap - 1, len(rest)) + 1):
        for tail in itertools.combinations(rest, size):
            member_bits = (first_bit,) + tuple(1 << (v - 1) for v in tail)
            if _accepts(masks, alive, member_bits):
                found.append((first,) + tail)
    return found


def _component_family(
    graph: Graph,
    block: VertexSet,
    candidates: list[int],
    jobs: int,
) -> list[VertexSet]:
    """Cut sets living inside one connected component, empty set included."""
    alive = 0
    for v in block:
        alive |= 1 << (v - 1)
    size_cap = len(block) - 2
    family: list[VertexSet] = [()]
    if size_cap < 1 or not candidates:
        return family
    if jobs <= 1:
        family.extend(_scan_sizes(graph, alive, candidates, size_cap))
        return family
    tasks = [
        (graph, alive, first, candidates[i + 1 :], size_cap)
        for i, first in enumerate(candidates)
    ]
    with ProcessPoolExecutor(max_workers=jobs) as pool:
        for chunk in pool.map(_scan_prefix_block, tasks):
            family.extend(chunk)
    return family


def compute_cutsets(
    graph: Graph,
    *,
    max_enum: int = DEFAULT_ENUMERATION_BOUND,
    jobs: int = 1,
) -> CutSetFamily:
    """Compute C(G) with free-vertex pruning and early-exit checks.

    Candidates are the non-free vertices; nonempty subsets range over sizes 1
    through n - 2; subsets whose complement stays connected are discarded
    immediately, and the per-element drop test stops at the first failure.

    The cut-point property is local to connected components, so a
    disconnected graph is handled per component and the family is the set of
    all unions picking one member per component.

    ``jobs`` > 1 partitions the subset space by fixed prefix blocks across
    worker processes; results are merged and canonically sorted, so output
    does not depend on the worker count.  More candidate vertices than
    ``max_enum`` raises :class:`CapacityError` instead of hanging.
    """
    free = set(free_vertices(graph))
    per_component: list[list[VertexSet]] = []
    for block in components_after_deletion(graph).blocks:
        candidates = sorted(set(block) - free)
        if len(candidates) > max_enum:
            raise CapacityError(
                f"{len(candidates)} candidate vertices exceed the enumeration "
                f"bound {max_enum}; override the bound to proceed"
            )
        per_component.append(_component_family(graph, block, candidates, jobs))
    members = [
        tuple(sorted(itertools.chain.from_iterable(combo)))
        for combo in itertools.product(*per_component)
    ]
    return CutSetFamily(graph, _canonical(members))
