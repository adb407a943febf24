"""Named example graphs and constructors for the two one-cycle families.

The golden tests and the ``fixtures`` CLI subcommand both pull from here, so
edge lists are written down exactly once.
"""

from __future__ import annotations

from .errors import GraphInputError
from .graphs import Graph, build_graph


def claw() -> Graph:
    """Star with three leaves: a tree that is not a path."""
    return build_graph(4, [(1, 2), (1, 3), (1, 4)])


def fan() -> Graph:
    """Six-vertex fan: two triangles sharing a vertex plus two pendant edges.

    Its edge ideal is unmixed of deviation 2, so the classifier reports the
    Cohen-Macaulay question as undecided even though a direct homological
    computation settles it.  Kept as the known-limitation example.
    """
    return build_graph(6, [(1, 2), (2, 3), (2, 4), (2, 5), (3, 4), (4, 5), (5, 6)])


def dev2() -> Graph:
    """Seven-vertex bipartite graph, unmixed of deviation 2."""
    return build_graph(
        7, [(1, 2), (2, 3), (2, 5), (3, 4), (4, 5), (3, 6), (5, 6), (6, 7)]
    )


def dev2bis() -> Graph:
    """Nine-vertex graph with induced 5-cycles, unmixed of deviation 2."""
    return build_graph(
        9,
        [(1, 2), (2, 3), (2, 5), (3, 4), (4, 5), (3, 6), (5, 7), (6, 7), (6, 8), (7, 9)],
    )


def build_g3(r: int, s: int, t: int) -> Graph:
    """Triangle with pendant paths of r-1, s-1 and t-1 extra vertices.

    Vertices are labeled u1..ur = 1..r, v1..vs = r+1..r+s, w1..wt beyond
    that; the triangle sits on u1, v1, w1.  Requires r, s, t >= 1.
    """
    if min(r, s, t) < 1:
        raise GraphInputError(f"triangle family needs r, s, t >= 1, got ({r}, {s}, {t})")
    u = list(range(1, r + 1))
    v = list(range(r + 1, r + s + 1))
    w = list(range(r + s + 1, r + s + t + 1))
    edges = [(path[i], path[i + 1]) for path in (u, v, w) for i in range(len(path) - 1)]
    edges += [(u[0], v[0]), (u[0], w[0]), (v[0], w[0])]
    return build_graph(r + s + t, edges)


def build_g4(r: int, s: int) -> Graph:
    """Two paths on r and s vertices bridged at their first and second vertices.

    Vertices are labeled u1..ur = 1..r and v1..vs = r+1..r+s; the bridges are
    u1-v1 and u2-v2, forming one 4-cycle with a tail at each of the two
    adjacent cycle vertices u2 and v2.  Requires r, s >= 3.
    """
    if min(r, s) < 3:
        raise GraphInputError(f"bridged-paths family needs r, s >= 3, got ({r}, {s})")
    u = list(range(1, r + 1))
    v = list(range(r + 1, r + s + 1))
    edges = [(path[i], path[i + 1]) for path in (u, v) for i in range(len(path) - 1)]
    edges += [(u[0], v[0]), (u[1], v[1])]
    return build_graph(r + s, edges)


# CLI fixture registry: name -> (parameter count, constructor).
NAMED_FIXTURES = {
    "claw": (0, claw),
    "fan": (0, fan),
    "dev2": (0, dev2),
    "dev2bis": (0, dev2bis),
    "g3": (3, build_g3),
    "g4": (2, build_g4),
}
