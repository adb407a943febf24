"""Complete-intersection and almost-complete-intersection classification.

Deviation 0 is decided by the path criterion and deviation 1 by recognizing
the two unicyclic families that carry unmixed (equivalently Cohen-Macaulay)
ideals: a triangle with pendant paths, and two bridged paths forming a
4-cycle with tails at adjacent cycle vertices.  For deviation 2 and beyond
unmixedness is still necessary for the quotient to be Cohen-Macaulay, but no
combinatorial criterion decides the question, so the verdict is three-valued.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass
from typing import Optional

from .graphs import (
    Graph,
    VertexSet,
    components_after_deletion,
    cycle_rank,
    induced_subgraph,
    unicyclic_structure,
)
from .ideals import Decomposition, minimal_primes


class CMVerdict(enum.Enum):
    YES = "yes"
    NO = "no"
    UNKNOWN = "unknown"


@dataclass(frozen=True)
class Family:
    """Recognized unicyclic family with its sorted parameters."""

    kind: str  # "G3" (triangle with pendant paths) or "G4" (bridged paths)
    params: tuple[int, ...]

    def __str__(self) -> str:
        return f"{self.kind}({', '.join(map(str, self.params))})"


@dataclass(frozen=True)
class ClassificationReport:
    deviation: int
    complete_intersection: bool
    family: Optional[Family]
    unmixed: bool
    cohen_macaulay: CMVerdict
    cm_reason: Optional[str]
    reasons: tuple[str, ...]


def _block_is_path(graph: Graph, block: VertexSet) -> bool:
    # A connected block is a path iff its degree multiset is two 1s plus 2s.
    if len(block) == 1:
        return True
    degrees = sorted(graph.degree(v) for v in block)
    return degrees[:2] == [1, 1] and all(d == 2 for d in degrees[2:])


def is_complete_intersection(graph: Graph) -> bool:
    """True iff every connected component is a path graph."""
    return all(
        _block_is_path(graph, block)
        for block in components_after_deletion(graph).blocks
    )


def recognize_g3(graph: Graph) -> Optional[tuple[int, int, int]]:
    """Match a triangle with one pendant path (possibly empty) per corner.

    Returns the path lengths counted in vertices including the corner, sorted
    ascending, or ``None``.  The bare triangle yields (1, 1, 1).
    """
    shape = unicyclic_structure(graph)
    if shape is None or len(shape.cycle) != 3:
        return None
    r, s, t = sorted(shape.attachments[v] + 1 for v in shape.cycle)
    return (r, s, t)


def recognize_g4(graph: Graph) -> Optional[tuple[int, int]]:
    """Match two paths on >= 3 vertices bridged at their first two vertices.

    Structurally: a 4-cycle with nonempty tails at exactly two adjacent cycle
    vertices and the other two cycle vertices bare.  Returns the two path
    orders sorted ascending, or ``None``.  The plain 4-cycle does not belong
    to the family (its ideal is not unmixed once any tail pattern breaks the
    adjacency requirement, and the family definition demands the tails).
    """
    shape = unicyclic_structure(graph)
    if shape is None or len(shape.cycle) != 4:
        return None
    tails = [shape.attachments[v] for v in shape.cycle]
    occupied = [i for i, length in enumerate(tails) if length > 0]
    if len(occupied) != 2:
        return None
    a, b = occupied
    if (b - a) % 4 not in (1, 3):
        return None
    r, s = sorted(tails[i] + 2 for i in occupied)
    return (r, s)


def classify(graph: Graph, *, max_enum: int = 30, jobs: int = 1) -> ClassificationReport:
    """Produce the full classification report for a graph."""
    return classify_decomposition(minimal_primes(graph, max_enum=max_enum, jobs=jobs))


def classify_decomposition(decomposition: Decomposition) -> ClassificationReport:
    """Classification from an already-computed decomposition."""
    graph = decomposition.graph
    dev = decomposition.deviation
    unmixed = decomposition.unmixed
    ci = is_complete_intersection(graph)
    assert ci == (dev == 0 and unmixed), "path criterion out of sync with deviation"

    notes: list[str] = []
    family: Optional[Family] = None
    if decomposition.mu == 0:
        notes.append("the graph has no edges, so the edge ideal is the zero ideal")

    if ci:
        verdict = CMVerdict.YES
        why = "complete intersection: every component of the graph is a path"
    elif dev == 1:
        blocks = components_after_deletion(graph).blocks
        nonpath = [b for b in blocks if not _block_is_path(graph, b)]
        if len(nonpath) == 1:
            candidate = induced_subgraph(graph, nonpath[0])
            if cycle_rank(candidate) == 1:
                params3 = recognize_g3(candidate)
                params4 = recognize_g4(candidate)
                if params3 is not None:
                    family = Family("G3", params3)
                elif params4 is not None:
                    family = Family("G4", params4)
        # At deviation 1, membership in one of the two families, unmixedness
        # and Cohen-Macaulayness are equivalent; recognition and unmixedness
        # are computed independently, so compare them.
        assert (family is not None) == unmixed, (
            "deviation-1 recognition disagrees with unmixedness"
        )
        if family is not None:
            verdict = CMVerdict.YES
            shape_name = (
                "a triangle with pendant paths"
                if family.kind == "G3"
                else "two paths bridged at their first and second vertices"
            )
            why = (
                f"almost complete intersection, unmixed: the one-cycle component "
                f"is {shape_name}, {family}"
            )
            if len(blocks) > 1:
                notes.append(
                    "the remaining components are paths, hence complete-intersection factors"
                )
        else:
            verdict = CMVerdict.NO
            why = "almost complete intersection but not unmixed"
    elif not unmixed:
        verdict = CMVerdict.NO
        why = "not unmixed: minimal primes of different heights occur"
    else:
        verdict = CMVerdict.UNKNOWN
        why = None
        notes.append(
            f"unmixed with deviation {dev}: unmixedness is necessary but not "
            "sufficient here, and no combinatorial criterion applies; compute "
            "depth with a computer algebra system (see the export command)"
        )

    reasons = ([why] if why is not None else []) + notes
    return ClassificationReport(
        deviation=dev,
        complete_intersection=ci,
        family=family,
        unmixed=unmixed,
        cohen_macaulay=verdict,
        cm_reason=why,
        reasons=tuple(reasons),
    )
